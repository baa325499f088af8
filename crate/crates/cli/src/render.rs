//! Text forms of probabilities and words.

use adp_core::{Dyadic, Word};

use crate::args::Format;

/// `k/4^n = p/q`, or the single form when both agree; `0` and `1` plainly.
pub fn exact(v: &Dyadic, n: usize) -> String {
    if v.is_zero() || v.is_one() {
        return v.to_fraction_string();
    }
    let reduced = v.to_fraction_string();
    let scale = 2 * n as u64;
    match (v.numer_over(scale), Dyadic::one().numer_over(scale)) {
        (Some(k), Some(den)) => {
            let scaled = format!("{k}/{den}");
            if scaled == reduced {
                reduced
            } else {
                format!("{scaled} = {reduced}")
            }
        }
        _ => reduced,
    }
}

/// Decimal approximation, always marked with `~`.
pub fn decimal(v: &Dyadic) -> String {
    format!("~{}", v.to_f64())
}

pub fn probability(v: &Dyadic, n: usize, format: Format) -> String {
    match format {
        Format::Exact => exact(v, n),
        Format::Decimal => decimal(v),
        Format::Both => format!("{} {}", exact(v, n), decimal(v)),
    }
}

pub fn word(w: &Word) -> String {
    w.to_bin_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(exact(&Dyadic::from_parts(1, 2), 4), "64/256 = 1/4");
        assert_eq!(exact(&Dyadic::one(), 4), "1");
        assert_eq!(exact(&Dyadic::zero(), 4), "0");
        assert_eq!(exact(&Dyadic::from_parts(3, 4), 2), "3/16");
        assert_eq!(probability(&Dyadic::from_parts(1, 2), 4, Format::Decimal), "~0.25");
        assert_eq!(
            probability(&Dyadic::from_parts(1, 1), 1, Format::Both),
            "2/4 = 1/2 ~0.5"
        );
    }
}
