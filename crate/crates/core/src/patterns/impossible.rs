//! `N(n, r)`: how many of the `8^n` difference triples have `adp^XR = 0`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::count::{acceptance_profile, count_intersection, count_pattern};
use super::pattern::Pattern;
use super::tables::xr_table;
use super::zeros::{adp_xr_zero, xor_zero_pattern};
use crate::error::{Error, Result};
use crate::word::{RotAmount, Word};
use crate::xr::{adp_xr, XrInstance};

/// Largest `n` for the enumerating counters (`8^n` triples).
pub const BRUTE_MAX_N: usize = 7;

fn check(n: usize, r: usize) -> Result<RotAmount> {
    RotAmount::new(r, n)
}

/// Counts of length-`k` words by the set of columns that fire, where
/// `fires(col)` lists the patterns of a column.
fn column_profile(
    k: usize,
    columns: &[usize],
    fires: impl Fn(usize) -> Vec<&'static Pattern>,
) -> BTreeMap<u8, BigUint> {
    let mut owner = Vec::new();
    let mut pats: Vec<&Pattern> = Vec::new();
    for &c in columns {
        for p in fires(c) {
            owner.push(c);
            pats.push(p);
        }
    }
    let mut out: BTreeMap<u8, BigUint> = BTreeMap::new();
    for (mask, count) in acceptance_profile(&pats, k) {
        let sig = (0..pats.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(0u8, |s, i| s | 1 << owner[i]);
        *out.entry(sig).or_insert_with(BigUint::zero) += count;
    }
    out
}

fn mark_patterns(c: usize) -> Vec<&'static Pattern> {
    alloc::vec![&xr_table()[c].mark]
}

fn row_patterns(c: usize) -> Vec<&'static Pattern> {
    xr_table()[c].rows.iter().collect()
}

/// Exact `N(n, r)` from the zero table. The high part `ω′` and the low
/// part `ω` are independent, so each is reduced to the set of columns it
/// satisfies and the two distributions are combined.
pub fn count_impossible(n: usize, r: usize) -> Result<BigUint> {
    check(n, r)?;
    let all: Vec<usize> = (0..7).collect();
    let high = column_profile(r, &all, mark_patterns);
    let low = column_profile(n - r, &all, row_patterns);
    let mut total = BigUint::zero();
    for (sh, ch) in &high {
        for (sl, cl) in &low {
            if sh & sl != 0 {
                total += ch * cl;
            }
        }
    }
    Ok(total)
}

/// `N(n, r)` by inclusion–exclusion over the seven columns. Subsets whose
/// marks have no common word are skipped.
pub fn count_impossible_inclusion_exclusion(n: usize, r: usize) -> Result<BigUint> {
    check(n, r)?;
    let mut total = BigInt::zero();
    for subset in 1u8..128 {
        let cols: Vec<usize> = (0..7).filter(|c| subset >> c & 1 == 1).collect();
        let marks: Vec<&Pattern> = cols.iter().map(|&c| &xr_table()[c].mark).collect();
        let high = count_intersection(&marks, r);
        if high.is_zero() {
            continue;
        }
        let low: BigUint = column_profile(n - r, &cols, row_patterns)
            .into_iter()
            .filter(|(sig, _)| sig == &subset)
            .map(|(_, c)| c)
            .sum();
        let term = BigInt::from(high * low);
        if cols.len() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.try_into().expect("a count is nonnegative"))
}

fn triples(n: usize) -> impl Iterator<Item = (Word, Word, Word)> {
    let mask = (1u64 << n) - 1;
    (0..1u64 << (3 * n)).map(move |t| {
        (
            Word::from_u64(t >> (2 * n), n).expect("n <= 7"),
            Word::from_u64(t >> n & mask, n).expect("n <= 7"),
            Word::from_u64(t & mask, n).expect("n <= 7"),
        )
    })
}

fn brute(n: usize, r: usize, zero: impl Fn(&XrInstance) -> bool) -> Result<BigUint> {
    let rot = check(n, r)?;
    if n > BRUTE_MAX_N {
        return Err(Error::GuardExceeded { n, limit: BRUTE_MAX_N });
    }
    let hits = triples(n)
        .filter(|(a, b, g)| zero(&XrInstance::new(a.clone(), b.clone(), g.clone(), rot).expect("same length")))
        .count();
    Ok(BigUint::from(hits))
}

/// `N(n, r)` by evaluating `adp^XR` on every triple.
pub fn count_impossible_brute(n: usize, r: usize) -> Result<BigUint> {
    brute(n, r, |inst| adp_xr(inst).is_zero())
}

/// `N(n, r)` by running the pattern decision on every triple.
pub fn count_impossible_pattern_brute(n: usize, r: usize) -> Result<BigUint> {
    brute(n, r, |inst| adp_xr_zero(inst).is_zero)
}

/// Number of triples with `adp⊕ = 0`, counted by pattern.
pub fn count_xor_impossible(n: usize) -> BigUint {
    count_pattern(xor_zero_pattern(), n)
}

/// `(4/7)(8^n − 1)`, which is `⌊(4/7)·8^n⌋`.
pub fn xor_impossible_closed_form(n: usize) -> BigUint {
    ((BigUint::one() << (3 * n)) - 1u32) * 4u32 / 7u32
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pow(base: u32, exp: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(exp as u32))
}

/// `(5/14)·8^n − 6/7`, the exact count for `r = 1`.
pub fn n1_closed_form(n: usize) -> BigRational {
    rat(5, 14) * pow(8, n) - rat(6, 7)
}

/// Closed-form `(lower, upper)` with `lower ≤ N(n, r) ≤ upper`.
///
/// The lower bound is `(1/7)·8^n − (1/7)·8^r`. The upper bound is the exact
/// value for `r = 1`, `(9/28 + 2^{−n})·8^n − 88/7` for `r = n − 1`, and
/// `(1/7 + 2^{−r−1})·8^n − (1/7)·8^r + (4/7)(8^{r−1} − 1)·((1/5)·8^{n−r} + 7·4^{n−r} − (124/5)·3^{n−r−2})`
/// otherwise.
pub fn impossible_bounds(n: usize, r: usize) -> Result<(BigRational, BigRational)> {
    check(n, r)?;
    let lower = rat(1, 7) * pow(8, n) - rat(1, 7) * pow(8, r);
    let upper = if r == 1 {
        n1_closed_form(n)
    } else if r == n - 1 {
        (rat(9, 28) + rat(1, 1) / pow(2, n)) * pow(8, n) - rat(88, 7)
    } else {
        let k = n - r;
        (rat(1, 7) + rat(1, 1) / pow(2, r + 1)) * pow(8, n) - rat(1, 7) * pow(8, r)
            + rat(4, 7)
                * (pow(8, r - 1) - rat(1, 1))
                * (rat(1, 5) * pow(8, k) + rat(7, 1) * pow(4, k) - rat(124, 5) * pow(3, k - 2))
    };
    Ok((lower, upper))
}
