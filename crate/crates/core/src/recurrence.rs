//! `cadp_c` and `padp_{a,b}` by recursion on the last bit position.
//!
//! Appending a column `p` to a triple of even weight gives
//! `f(αp₀, βp₁, γp₂) = 2^{−wt(p)} Σ_{q ⪯ p} f'(inv(α,q₀), inv(β,q₁), inv(γ,q₂))`
//! where `f'` is the same function with its selector flags shifted by `q`;
//! columns of odd weight give zero. The single-bit table is the base case.
//!
//! The evaluation is bottom-up over prefixes: for each prefix length we keep
//! the value for every complement mask (which of α, β, γ are inverted) and
//! every flag setting. It does not use the matrix code.

use alloc::vec::Vec;

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::word::{OctalWord, Word};

/// Single-bit values in quarters, indexed by symbol then flag.
/// `padp` flags are `2a + b`, `cadp` flags are `c`.
const PADP_BASE: [[u64; 4]; 8] = [
    [4, 0, 0, 0], // 000
    [0, 0, 0, 0], // 001
    [0, 0, 0, 0], // 010
    [2, 2, 0, 0], // 011
    [0, 0, 0, 0], // 100
    [2, 0, 2, 0], // 101
    [1, 1, 1, 1], // 110
    [0, 0, 0, 0], // 111
];

const CADP_BASE: [[u64; 2]; 8] = [[4, 0], [0, 0], [0, 0], [2, 2], [0, 0], [2, 2], [4, 0], [0, 0]];

/// Runs the recursion for a family with `F` flag values. `shift(q)` is the
/// XOR applied to the flag index when the prefix is complemented by `q`.
fn evaluate<const F: usize>(symbols: &[u8], base: &[[u64; F]; 8], shift: impl Fn(u8) -> usize, flag: usize) -> Dyadic {
    // table[mask][flag] for the current prefix
    let mut table: Vec<[Dyadic; F]> = (0..8u8)
        .map(|mask| {
            let s = symbols[0] ^ mask;
            core::array::from_fn(|f| Dyadic::from_parts(base[s as usize][f], 2))
        })
        .collect();
    for &sym in &symbols[1..] {
        table = (0..8u8)
            .map(|mask| {
                let p = sym ^ mask;
                core::array::from_fn(|f| {
                    if p.count_ones() % 2 == 1 {
                        return Dyadic::zero();
                    }
                    let sum: Dyadic = (0..8u8)
                        .filter(|&q| q & !p == 0)
                        .map(|q| table[(mask ^ q) as usize][f ^ shift(q)].clone())
                        .sum();
                    sum.shr(p.count_ones() as u64)
                })
            })
            .collect();
    }
    table[0][flag].reduced()
}

/// `cadp_c(α, β → γ)` by recursion.
pub fn cadp_rec(c: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<Dyadic> {
    let om = OctalWord::from_words(alpha, beta, gamma)?;
    Ok(evaluate(om.symbols(), &CADP_BASE, |q| (q & 1) as usize, c as usize))
}

/// `padp_{a,b}(α, β → γ)` by recursion.
pub fn padp_rec(a: bool, b: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<Dyadic> {
    let om = OctalWord::from_words(alpha, beta, gamma)?;
    Ok(evaluate(
        om.symbols(),
        &PADP_BASE,
        |q| (q >> 1) as usize,
        2 * a as usize + b as usize,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{cadp, padp};

    #[test]
    fn agrees_with_matrix_form_exhaustively() {
        for n in 1..=4usize {
            for packed in 0..(1u64 << (3 * n)) {
                let syms = (0..n).map(|i| ((packed >> (3 * i)) & 7) as u8).collect();
                let (a, b, g) = OctalWord::new(syms).unwrap().split().unwrap();
                for c in [false, true] {
                    assert_eq!(cadp_rec(c, &a, &b, &g).unwrap(), cadp(c, &a, &b, &g).unwrap());
                }
                for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
                    assert_eq!(padp_rec(x, y, &a, &b, &g).unwrap(), padp(x, y, &a, &b, &g).unwrap());
                }
            }
        }
    }
}
