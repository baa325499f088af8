//! Brute-force differential probabilities by enumerating every input pair.

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::word::{RotAmount, Word};

/// Largest word size the oracle will enumerate (`4^n` pairs).
pub const ORACLE_MAX_N: usize = 12;

/// The function whose differential is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdpFunction {
    /// `x ⊕ y`
    Xor,
    /// `(x ⊕ y) ⋘ r`
    Xr(RotAmount),
    /// `(x ⋘ r) ⊕ y`
    Rx(RotAmount),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Number of pairs `(x, y)` with `f(x + α, y + β) = f(x, y) + γ`.
    pub hits: u64,
    /// `4^n`.
    pub total: u64,
    pub prob: Dyadic,
}

fn rotl(x: u64, r: usize, n: usize, mask: u64) -> u64 {
    ((x << r) | (x >> (n - r))) & mask
}

/// Counts the pairs `(x, y) ∈ (Z_2^n)^2` with `f(x + α, y + β) = f(x, y) + γ`.
pub fn oracle_adp(f: AdpFunction, alpha: &Word, beta: &Word, gamma: &Word) -> Result<OracleResult> {
    let n = alpha.len();
    for w in [beta, gamma] {
        if w.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
    }
    if n > ORACLE_MAX_N {
        return Err(Error::GuardExceeded { n, limit: ORACLE_MAX_N });
    }
    if let AdpFunction::Xr(r) | AdpFunction::Rx(r) = f {
        if r.n() != n {
            return Err(Error::RotationOutOfRange { r: r.get(), n });
        }
    }
    let mask = (1u64 << n) - 1;
    let (a, b, g) = (
        alpha.to_u64().expect("n <= 12"),
        beta.to_u64().expect("n <= 12"),
        gamma.to_u64().expect("n <= 12"),
    );
    let eval = |x: u64, y: u64| -> u64 {
        match f {
            AdpFunction::Xor => x ^ y,
            AdpFunction::Xr(r) => rotl(x ^ y, r.get(), n, mask),
            AdpFunction::Rx(r) => rotl(x, r.get(), n, mask) ^ y,
        }
    };
    let mut hits = 0u64;
    for x in 0..=mask {
        let xa = (x + a) & mask;
        for y in 0..=mask {
            let lhs = eval(xa, (y + b) & mask);
            if lhs == (eval(x, y) + g) & mask {
                hits += 1;
            }
        }
    }
    Ok(OracleResult {
        hits,
        total: 1u64 << (2 * n),
        prob: Dyadic::from_parts(hits, 2 * n as u64),
    })
}
