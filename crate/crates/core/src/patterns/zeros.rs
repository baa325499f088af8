use alloc::string::String;
use alloc::string::ToString;

use once_cell::race::OnceBox;

use super::pattern::Pattern;
use super::tables::{padp_table, xr_table};
use crate::error::Result;
use crate::word::{OctalWord, Word};
use crate::xr::XrInstance;

/// Outcome of a zero test. `matched` names the table entry that fired.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroReport {
    pub is_zero: bool,
    pub matched: Option<String>,
}

impl ZeroReport {
    fn from_match(p: Option<&Pattern>) -> ZeroReport {
        match p {
            Some(p) => ZeroReport {
                is_zero: true,
                matched: Some(p.id().map_or_else(|| p.to_string(), String::from)),
            },
            None => ZeroReport {
                is_zero: false,
                matched: None,
            },
        }
    }
}

/// `[.* d 0*]`: the lowest nonzero symbol has odd weight.
pub fn xor_zero_pattern() -> &'static Pattern {
    static CELL: OnceBox<Pattern> = OnceBox::new();
    CELL.get_or_init(|| alloc::boxed::Box::new(Pattern::parse("[.* d 0*]").expect("valid").with_id("XOR")))
}

/// Whether `adp⊕ = 0` for the triple packed in `ω`, decided by pattern.
pub fn adp_xor_zero(omega: &OctalWord) -> ZeroReport {
    let p = xor_zero_pattern();
    ZeroReport::from_match(p.matches(omega.symbols()).then_some(p))
}

/// Whether `cadp_c(α, β → γ) = 0`: for `c = 0` exactly when `adp⊕ = 0`, for
/// `c = 1` also when `γ = 0`.
pub fn cadp_zero(c: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<bool> {
    let om = OctalWord::from_words(alpha, beta, gamma)?;
    Ok(adp_xor_zero(&om).is_zero || (c && gamma.is_zero()))
}

/// Whether `padp_{a,b}(α, β → γ) = 0`, by the `padp` zero table.
pub fn padp_zero(a: bool, b: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<ZeroReport> {
    let om = OctalWord::from_words(alpha, beta, gamma)?;
    Ok(padp_zero_octal(a, b, &om))
}

pub fn padp_zero_octal(a: bool, b: bool, omega: &OctalWord) -> ZeroReport {
    let column = &padp_table()[2 * a as usize + b as usize];
    ZeroReport::from_match(column.rows.iter().find(|p| p.matches(omega.symbols())))
}

/// Whether `adp^XR = 0`, by the `adp^XR` zero table: some column mark
/// matches the high part `ω′` and one of that column's rows matches the
/// low part `ω`.
pub fn adp_xr_zero(inst: &XrInstance) -> ZeroReport {
    adp_xr_zero_octal(&inst.omega_low(), &inst.omega_high())
}

/// As [`adp_xr_zero`], given `ω` (length `n − r`) and `ω′` (length `r`).
pub fn adp_xr_zero_octal(omega: &OctalWord, omega_high: &OctalWord) -> ZeroReport {
    let hit = xr_table()
        .iter()
        .filter(|col| col.mark.matches(omega_high.symbols()))
        .find_map(|col| col.rows.iter().find(|p| p.matches(omega.symbols())));
    ZeroReport::from_match(hit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::RotAmount;

    #[test]
    fn xor_examples() {
        assert!(!adp_xor_zero(&OctalWord::parse("5630").unwrap()).is_zero);
        assert!(!adp_xor_zero(&OctalWord::parse("000").unwrap()).is_zero);
        let z = adp_xor_zero(&OctalWord::parse("5640").unwrap());
        assert_eq!(z.matched.as_deref(), Some("XOR"));
    }

    #[test]
    fn cadp_examples() {
        let z = Word::zero(3).unwrap();
        assert!(cadp_zero(true, &z, &z, &z).unwrap());
        assert!(!cadp_zero(false, &z, &z, &z).unwrap());
    }

    #[test]
    fn padp_examples() {
        let z = Word::zero(1).unwrap();
        let r = padp_zero(true, true, &z, &z, &z).unwrap();
        assert_eq!(r.matched.as_deref(), Some("T3:padp11:row2"));
        let om = OctalWord::parse("6376").unwrap();
        assert_eq!(
            padp_zero_octal(false, false, &om).matched.as_deref(),
            Some("T3:padp00:row2")
        );
    }

    #[test]
    fn xr_examples() {
        let n = 4;
        let z = Word::zero(n).unwrap();
        for r in 1..n {
            let inst = XrInstance::new(z.clone(), z.clone(), z.clone(), RotAmount::new(r, n).unwrap()).unwrap();
            assert_eq!(
                adp_xr_zero(&inst),
                ZeroReport {
                    is_zero: false,
                    matched: None
                }
            );
        }
        // the low part ends in an odd symbol
        let om = OctalWord::parse("31").unwrap();
        let hi = OctalWord::parse("00").unwrap();
        let rep = adp_xr_zero_octal(&om, &hi);
        assert_eq!(rep.matched.as_deref(), Some("T4:6.2"));
    }
}
