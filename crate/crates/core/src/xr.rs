//! `adp^XR` for `(x ⊕ y) ⋘ r` and `adp^RX` for `(x ⋘ r) ⊕ y`.
//!
//! Inputs are split as `α_full = α′|α` with `α′` the top `r` bits, the
//! output as `γ_full = γ|γ′` with `γ` the top `n − r` bits. Then
//!
//! ```text
//! adp^XR = Σ_{a,b,c} padp_{a,b}(α, β → inv(γ,c)) · cadp_c(inv(α′,a), inv(β′,b) → γ′)
//! ```
//!
//! and only two of the eight terms can be nonzero, selected by the parities
//! of the last columns of the two halves.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::matrix::{cadp, padp, state_vector};
use crate::word::{OctalWord, RotAmount, Word};

/// A difference triple for `(x ⊕ y) ⋘ r` together with its split.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XrInstance {
    alpha_full: Word,
    beta_full: Word,
    gamma_full: Word,
    r: RotAmount,
}

/// The six halves of an [`XrInstance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XrSplit {
    /// Low `n − r` bits of the inputs and top `n − r` bits of the output.
    pub alpha: Word,
    pub beta: Word,
    pub gamma: Word,
    /// Top `r` bits of the inputs and low `r` bits of the output.
    pub alpha_hi: Word,
    pub beta_hi: Word,
    pub gamma_lo: Word,
}

impl XrInstance {
    pub fn new(alpha: Word, beta: Word, gamma: Word, r: RotAmount) -> Result<Self> {
        let n = alpha.len();
        for w in [&beta, &gamma] {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
        }
        if r.n() != n {
            return Err(Error::RotationOutOfRange { r: r.get(), n });
        }
        Ok(XrInstance {
            alpha_full: alpha,
            beta_full: beta,
            gamma_full: gamma,
            r,
        })
    }

    /// Builds the instance from the six halves.
    pub fn from_split(s: &XrSplit) -> Result<Self> {
        let r = s.alpha_hi.len();
        let n = r + s.alpha.len();
        Self::new(
            Word::concat(&s.alpha_hi, &s.alpha),
            Word::concat(&s.beta_hi, &s.beta),
            Word::concat(&s.gamma, &s.gamma_lo),
            RotAmount::new(r, n)?,
        )
    }

    pub fn alpha(&self) -> &Word {
        &self.alpha_full
    }

    pub fn beta(&self) -> &Word {
        &self.beta_full
    }

    pub fn gamma(&self) -> &Word {
        &self.gamma_full
    }

    pub fn r(&self) -> RotAmount {
        self.r
    }

    pub fn n(&self) -> usize {
        self.alpha_full.len()
    }

    pub fn split(&self) -> XrSplit {
        let r = self.r.get();
        let n = self.n();
        let (alpha_hi, alpha) = self.alpha_full.split_at(r).expect("1 <= r < n");
        let (beta_hi, beta) = self.beta_full.split_at(r).expect("1 <= r < n");
        let (gamma, gamma_lo) = self.gamma_full.split_at(n - r).expect("1 <= r < n");
        XrSplit {
            alpha,
            beta,
            gamma,
            alpha_hi,
            beta_hi,
            gamma_lo,
        }
    }

    /// `ω(α, β, γ)` over the low part, length `n − r`.
    pub fn omega_low(&self) -> OctalWord {
        let s = self.split();
        OctalWord::from_words(&s.alpha, &s.beta, &s.gamma).expect("equal halves")
    }

    /// `ω(α′, β′, γ′)` over the high part, length `r`.
    pub fn omega_high(&self) -> OctalWord {
        let s = self.split();
        OctalWord::from_words(&s.alpha_hi, &s.beta_hi, &s.gamma_lo).expect("equal halves")
    }
}

fn last_parity(x: &Word, y: &Word, z: &Word) -> bool {
    let i = x.len() - 1;
    x.bit(i) ^ y.bit(i) ^ z.bit(i)
}

/// `adp^XR(α, β → γ, r)` through the two-term form.
pub fn adp_xr(inst: &XrInstance) -> Dyadic {
    let s = inst.split();
    let a = last_parity(&s.alpha, &s.beta, &s.gamma);
    let a1 = last_parity(&s.alpha_hi, &s.beta_hi, &s.gamma_lo);

    let low_omega = OctalWord::from_words(&s.alpha, &s.beta, &s.gamma.complement_if(a)).expect("equal halves");
    let low = state_vector(&low_omega);

    let first = low.pair_select(a1, false);
    let second = low.pair_select(!a1, true);
    let mut value = Dyadic::zero();
    if !first.is_zero() {
        let om = OctalWord::from_words(&s.alpha_hi.complement_if(a1), &s.beta_hi, &s.gamma_lo).expect("equal halves");
        value = value + first * state_vector(&om).carry_select(a);
    }
    if !second.is_zero() {
        let om =
            OctalWord::from_words(&s.alpha_hi.complement_if(!a1), &s.beta_hi.not(), &s.gamma_lo).expect("equal halves");
        value = value + second * state_vector(&om).carry_select(a);
    }
    debug_assert_eq!(value, adp_xr_full_sum(inst));
    value.reduced()
}

/// `adp^XR(α, β → γ, r)` as the full eight-term sum.
pub fn adp_xr_full_sum(inst: &XrInstance) -> Dyadic {
    let s = inst.split();
    let mut total = Dyadic::zero();
    for a in [false, true] {
        for b in [false, true] {
            for c in [false, true] {
                let p = padp(a, b, &s.alpha, &s.beta, &s.gamma.complement_if(c)).expect("equal halves");
                if p.is_zero() {
                    continue;
                }
                let q = cadp(
                    c,
                    &s.alpha_hi.complement_if(a),
                    &s.beta_hi.complement_if(b),
                    &s.gamma_lo,
                )
                .expect("equal halves");
                total = total + p * q;
            }
        }
    }
    total.reduced()
}

/// `adp^RX(α, β → γ, r)`, using `adp^RX(α, β → γ, r) = adp^XR(γ, β → α, n − r)`.
pub fn adp_rx(alpha: &Word, beta: &Word, gamma: &Word, r: RotAmount) -> Result<Dyadic> {
    let inst = XrInstance::new(gamma.clone(), beta.clone(), alpha.clone(), r.inverse())?;
    Ok(adp_xr(&inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::adp_xor;

    fn w(s: &str) -> Word {
        Word::parse(&alloc::format!("0b{s}"), s.len()).unwrap()
    }

    #[test]
    fn split_layout() {
        let r = RotAmount::new(1, 3).unwrap();
        let inst = XrInstance::new(w("101"), w("011"), w("110"), r).unwrap();
        let s = inst.split();
        assert_eq!((s.alpha_hi.clone(), s.alpha.clone()), (w("1"), w("01")));
        assert_eq!((s.beta_hi.clone(), s.beta.clone()), (w("0"), w("11")));
        assert_eq!((s.gamma.clone(), s.gamma_lo.clone()), (w("11"), w("0")));
        assert_eq!(XrInstance::from_split(&s).unwrap(), inst);
    }

    #[test]
    fn zero_output_reduces_to_xor() {
        let n = 5;
        let z = Word::zero(n).unwrap();
        for x in 0..32u64 {
            for y in [0u64, 3, 17, 31] {
                let (a, b) = (Word::from_u64(x, n).unwrap(), Word::from_u64(y, n).unwrap());
                for r in 1..n {
                    let inst = XrInstance::new(a.clone(), b.clone(), z.clone(), RotAmount::new(r, n).unwrap()).unwrap();
                    assert_eq!(adp_xr(&inst), adp_xor(&a, &b, &z).unwrap());
                }
            }
        }
    }

    #[test]
    fn mismatched_rotation_is_rejected() {
        let r = RotAmount::new(1, 3).unwrap();
        assert!(XrInstance::new(w("1010"), w("0110"), w("0000"), r).is_err());
        assert!(XrInstance::new(w("101"), w("0110"), w("000"), r).is_err());
    }
}
