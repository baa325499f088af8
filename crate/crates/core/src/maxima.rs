//! Maxima of `adp^XR` over `(β, γ)` for a fixed input difference.
//!
//! Closed forms exist for one-bit rotations: `r = 1` and `r = n − 1`. Other
//! rotations are only served by exhaustive search.

use alloc::vec::Vec;
use core::fmt;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::word::{RotAmount, Word};
use crate::xr::{adp_xr, XrInstance};

/// Largest `n` accepted by the exhaustive search (`4^n` evaluations).
pub const EXHAUSTIVE_MAX_N: usize = 12;

/// Which closed form produced a [`MaxReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `r = 1`: witness `(α, 0)`.
    R1,
    /// `r = n − 1`, `α_full = α0`: witness `(α0, 0)`.
    RRightCase1,
    /// `r = n − 1`, `α_full = α01`: witness `(α00, 2^{n−1})`.
    RRightCase2,
    /// `r = n − 1`, `α_full = α11`: witness `(ᾱ00, 2^{n−1})`.
    RRightCase3,
    Exhaustive,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::R1 => "r1",
            CaseTag::RRightCase1 => "r_n-1_case1",
            CaseTag::RRightCase2 => "r_n-1_case2",
            CaseTag::RRightCase3 => "r_n-1_case3",
            CaseTag::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The input difference held fixed during the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedArg {
    Alpha,
    Beta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxReport {
    /// The fixed input difference.
    pub fixed: Word,
    pub fixed_arg: FixedArg,
    pub r: RotAmount,
    pub value: Dyadic,
    /// The free input difference of the witness (β when α is fixed).
    pub witness_beta: Word,
    pub witness_gamma: Word,
    /// A second optimal `(input, γ)` pair obtained by symmetry, when distinct.
    pub second_witness: Option<(Word, Word)>,
    pub case_tag: CaseTag,
}

impl MaxReport {
    /// `adp^XR` at the given free input and output, honoring `fixed_arg`.
    pub fn evaluate(&self, free: &Word, gamma: &Word) -> Dyadic {
        eval(self.fixed_arg, &self.fixed, free, gamma, self.r)
    }
}

fn eval(fix: FixedArg, fixed: &Word, free: &Word, gamma: &Word, r: RotAmount) -> Dyadic {
    let (a, b) = match fix {
        FixedArg::Alpha => (fixed.clone(), free.clone()),
        FixedArg::Beta => (free.clone(), fixed.clone()),
    };
    adp_xr(&XrInstance::new(a, b, gamma.clone(), r).expect("lengths checked"))
}

fn require_n(alpha: &Word) -> Result<usize> {
    let n = alpha.len();
    if n < 2 {
        return Err(Error::RotationOutOfRange { r: 1, n });
    }
    Ok(n)
}

/// `max_{β,γ} adp^XR(α, β → γ, 1) = adp^XR(α, α → 0, 1)`.
pub fn max_r1(alpha: &Word) -> Result<MaxReport> {
    let n = require_n(alpha)?;
    let r = RotAmount::new(1, n)?;
    let zero = Word::zero(n)?;
    let value = eval(FixedArg::Alpha, alpha, alpha, &zero, r);
    let neg = alpha.neg();
    let second_witness = (neg != *alpha).then(|| (neg, zero.clone()));
    Ok(MaxReport {
        fixed: alpha.clone(),
        fixed_arg: FixedArg::Alpha,
        r,
        value,
        witness_beta: alpha.clone(),
        witness_gamma: zero,
        second_witness,
        case_tag: CaseTag::R1,
    })
}

/// `max_{β,γ} adp^XR(α_full, β → γ, n − 1)` by the case split on the two
/// least significant bits of `α_full`. At `n = 2` the two-bit cases have no
/// prefix and the exhaustive search is used instead.
pub fn max_r_right(alpha_full: &Word) -> Result<MaxReport> {
    let n = require_n(alpha_full)?;
    let r = RotAmount::new(n - 1, n)?;
    let last = alpha_full.bit(n - 1);
    if last && n == 2 {
        return max_exhaustive(alpha_full, r, FixedArg::Alpha);
    }
    let (beta, gamma, case_tag) = if !last {
        (alpha_full.clone(), Word::zero(n)?, CaseTag::RRightCase1)
    } else {
        let (prefix, _) = alpha_full.split_at(n - 2)?;
        let tail = Word::zero(2)?;
        if !alpha_full.bit(n - 2) {
            (Word::concat(&prefix, &tail), Word::msb(n)?, CaseTag::RRightCase2)
        } else {
            (Word::concat(&prefix.not(), &tail), Word::msb(n)?, CaseTag::RRightCase3)
        }
    };
    let value = eval(FixedArg::Alpha, alpha_full, &beta, &gamma, r);
    let neg = beta.neg();
    let second_witness = (neg != beta).then(|| (neg, gamma.clone()));
    Ok(MaxReport {
        fixed: alpha_full.clone(),
        fixed_arg: FixedArg::Alpha,
        r,
        value,
        witness_beta: beta,
        witness_gamma: gamma,
        second_witness,
        case_tag,
    })
}

fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..1u64 << n).map(move |v| Word::from_u64(v, n).expect("n <= 12"))
}

fn check_exhaustive(fixed: &Word, r: RotAmount) -> Result<usize> {
    let n = fixed.len();
    if r.n() != n {
        return Err(Error::RotationOutOfRange { r: r.get(), n });
    }
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::GuardExceeded {
            n,
            limit: EXHAUSTIVE_MAX_N,
        });
    }
    Ok(n)
}

/// True maximum by enumerating every free input and output. Ties go to the
/// smallest free input, then the smallest `γ`.
pub fn max_exhaustive(fixed: &Word, r: RotAmount, fix: FixedArg) -> Result<MaxReport> {
    let n = check_exhaustive(fixed, r)?;
    let mut best: Option<(Dyadic, Word, Word)> = None;
    for free in all_words(n) {
        for gamma in all_words(n) {
            let v = eval(fix, fixed, &free, &gamma, r);
            if best.as_ref().is_none_or(|(b, _, _)| v > *b) {
                best = Some((v, free.clone(), gamma));
            }
        }
    }
    let (value, witness_beta, witness_gamma) = best.expect("at least one pair");
    Ok(MaxReport {
        fixed: fixed.clone(),
        fixed_arg: fix,
        r,
        value,
        witness_beta,
        witness_gamma,
        second_witness: None,
        case_tag: CaseTag::Exhaustive,
    })
}

/// Every `(free input, γ)` pair attaining the maximum, in increasing order.
pub fn all_maximizers(fixed: &Word, r: RotAmount, fix: FixedArg) -> Result<(Dyadic, Vec<(Word, Word)>)> {
    let n = check_exhaustive(fixed, r)?;
    let mut best = Dyadic::zero();
    let mut found = Vec::new();
    for free in all_words(n) {
        for gamma in all_words(n) {
            let v = eval(fix, fixed, &free, &gamma, r);
            if v > best {
                best = v.clone();
                found.clear();
            }
            if v == best && !v.is_zero() {
                found.push((free.clone(), gamma));
            }
        }
    }
    Ok((best, found))
}
