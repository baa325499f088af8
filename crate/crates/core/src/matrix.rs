//! Rational-series evaluation of `adp⊕`, `cadp_c` and `padp_{a,b}`.
//!
//! `adp⊕(α, β → γ) = L · A_{ω_0} ⋯ A_{ω_{n−1}} · e_0ᵀ` with `ω = ω(α, β, γ)`,
//! where `A_0` is fixed and `(A_k)_{i,j} = (A_0)_{i⊕k, j⊕k}`. Every entry of
//! `A_k` is `0`, `1/4` or `1`, so the product is carried as integer
//! numerators over `4^n` and folded right to left, one 8-vector update per
//! symbol.
//!
//! State-vector coordinates are indexed by `k = 4a + 2b + c`. The row
//! selectors are `L = Σ e_k`, `L_c = Σ_{a,b} e_{(a,b,c)}` and
//! `L_{a,b} = Σ_c e_{(a,b,c)}`.

use core::ops::{Add, Shl};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::word::{OctalWord, Word};

/// `4·A_0`, row-major.
const A0_X4: [[u8; 8]; 8] = [
    [4, 0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
];

const fn build_family() -> [[[u8; 8]; 8]; 8] {
    let mut out = [[[0u8; 8]; 8]; 8];
    let mut k = 0;
    while k < 8 {
        let mut i = 0;
        while i < 8 {
            let mut j = 0;
            while j < 8 {
                out[k][i][j] = A0_X4[i ^ k][j ^ k];
                j += 1;
            }
            i += 1;
        }
        k += 1;
    }
    out
}

/// `4·A_k` for `k = 0..7`.
const FAMILY_X4: [[[u8; 8]; 8]; 8] = build_family();

/// An 8×8 matrix with entries in quarters: `entry(i, j) = quarters[i][j] / 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TransMatrix {
    quarters: [[u8; 8]; 8],
}

impl TransMatrix {
    /// The transition matrix `A_k`.
    pub fn transition(k: u8) -> TransMatrix {
        TransMatrix {
            quarters: FAMILY_X4[(k & 7) as usize],
        }
    }

    /// The involution `T_k` that swaps coordinates `i` and `i ⊕ k`.
    pub fn involution(k: u8) -> TransMatrix {
        let mut quarters = [[0u8; 8]; 8];
        for (i, row) in quarters.iter_mut().enumerate() {
            row[i ^ (k & 7) as usize] = 4;
        }
        TransMatrix { quarters }
    }

    pub fn identity() -> TransMatrix {
        Self::involution(0)
    }

    /// `4·entry(i, j)` as an integer.
    pub fn quarter(&self, i: usize, j: usize) -> u8 {
        self.quarters[i][j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Dyadic {
        Dyadic::from_parts(self.quarters[i][j] as u64, 2)
    }

    pub fn quarters(&self) -> &[[u8; 8]; 8] {
        &self.quarters
    }

    /// Matrix product. Only defined when the result still has entries that
    /// are whole quarters, which holds for products with permutation
    /// matrices; returns `None` otherwise.
    pub fn mul(&self, rhs: &TransMatrix) -> Option<TransMatrix> {
        let mut quarters = [[0u8; 8]; 8];
        for (i, row) in quarters.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let s: u32 = (0..8)
                    .map(|t| self.quarters[i][t] as u32 * rhs.quarters[t][j] as u32)
                    .sum();
                if !s.is_multiple_of(4) || s / 4 > u8::MAX as u32 {
                    return None;
                }
                *out = (s / 4) as u8;
            }
        }
        Some(TransMatrix { quarters })
    }

    /// `self · v`.
    pub fn apply(&self, v: &StateVec) -> StateVec {
        let num = core::array::from_fn(|i| {
            let mut acc = BigUint::zero();
            for j in 0..8 {
                let q = self.quarters[i][j];
                if q != 0 {
                    acc += &v.num[j] * q as u32;
                }
            }
            acc
        });
        StateVec {
            num,
            log2_den: v.log2_den + 2,
        }
    }
}

/// A column vector of eight exact coordinates over the shared denominator
/// `2^log2_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVec {
    num: [BigUint; 8],
    log2_den: u64,
}

impl StateVec {
    /// The standard basis vector `e_k`.
    pub fn basis(k: usize) -> StateVec {
        let mut num: [BigUint; 8] = Default::default();
        num[k] = BigUint::one();
        StateVec { num, log2_den: 0 }
    }

    pub fn from_numerators(num: [BigUint; 8], log2_den: u64) -> StateVec {
        StateVec { num, log2_den }
    }

    pub fn coord(&self, k: usize) -> Dyadic {
        Dyadic::new(self.num[k].clone(), self.log2_den)
    }

    pub fn numerators(&self) -> &[BigUint; 8] {
        &self.num
    }

    pub fn log2_den(&self) -> u64 {
        self.log2_den
    }

    /// Sum of the coordinates whose index satisfies `select`.
    pub fn select_sum(&self, select: impl Fn(usize) -> bool) -> Dyadic {
        let mut acc = BigUint::zero();
        for (k, x) in self.num.iter().enumerate() {
            if select(k) {
                acc += x;
            }
        }
        Dyadic::new(acc, self.log2_den)
    }

    /// `L · v`.
    pub fn total(&self) -> Dyadic {
        self.select_sum(|_| true)
    }

    /// `L_c · v`.
    pub fn carry_select(&self, c: bool) -> Dyadic {
        self.select_sum(|k| (k & 1 == 1) == c)
    }

    /// `L_{a,b} · v`.
    pub fn pair_select(&self, a: bool, b: bool) -> Dyadic {
        self.select_sum(|k| k >> 2 == a as usize && (k >> 1) & 1 == b as usize)
    }
}

/// Index relabelling used by the conjugation helpers: coordinate `i` moves
/// to `map(i)`.
pub trait Conjugate: Sized {
    fn relabel(&self, map: impl Fn(usize) -> usize) -> Self;
}

impl Conjugate for StateVec {
    fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut num: [BigUint; 8] = Default::default();
        for i in 0..8 {
            num[map(i)] = self.num[i].clone();
        }
        StateVec {
            num,
            log2_den: self.log2_den,
        }
    }
}

impl Conjugate for TransMatrix {
    fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut quarters = [[0u8; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                quarters[map(i)][map(j)] = self.quarters[i][j];
            }
        }
        TransMatrix { quarters }
    }
}

/// `T_k M T_k` for matrices, `T_k v` for vectors.
pub fn conjugate_involution<T: Conjugate>(k: u8, m: &T) -> T {
    let k = (k & 7) as usize;
    m.relabel(|i| i ^ k)
}

/// `S_π M S_π⁻¹` for matrices, `S_π v` for vectors.
pub fn conjugate_permutation<T: Conjugate>(pi: RolePerm, m: &T) -> T {
    m.relabel(|i| pi.apply(i as u8) as usize)
}

/// A permutation of the three roles (α, β, γ), acting on 3-bit indices as
/// `π(x_0, x_1, x_2) = (x_{p0}, x_{p1}, x_{p2})` where `x_0` is the α bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RolePerm([u8; 3]);

impl RolePerm {
    pub const IDENTITY: RolePerm = RolePerm([0, 1, 2]);
    /// Exchanges α and β.
    pub const SWAP_AB: RolePerm = RolePerm([1, 0, 2]);
    /// Exchanges α and γ.
    pub const SWAP_AG: RolePerm = RolePerm([2, 1, 0]);
    /// Exchanges β and γ.
    pub const SWAP_BG: RolePerm = RolePerm([0, 2, 1]);

    pub fn new(p: [u8; 3]) -> Option<RolePerm> {
        let mut seen = [false; 3];
        for &i in &p {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(RolePerm(p))
    }

    pub fn all() -> [RolePerm; 6] {
        [
            RolePerm([0, 1, 2]),
            RolePerm([0, 2, 1]),
            RolePerm([1, 0, 2]),
            RolePerm([1, 2, 0]),
            RolePerm([2, 0, 1]),
            RolePerm([2, 1, 0]),
        ]
    }

    pub fn apply(self, k: u8) -> u8 {
        let x = [(k >> 2) & 1, (k >> 1) & 1, k & 1];
        4 * x[self.0[0] as usize] + 2 * x[self.0[1] as usize] + x[self.0[2] as usize]
    }

    pub fn inverse(self) -> RolePerm {
        let mut inv = [0u8; 3];
        for (pos, &src) in self.0.iter().enumerate() {
            inv[src as usize] = pos as u8;
        }
        RolePerm(inv)
    }
}

trait Numerator: Clone + Zero + One + Add<Output = Self> + Shl<usize, Output = Self> {}
impl Numerator for u128 {}
impl Numerator for BigUint {}

fn fold<T: Numerator>(symbols: &[u8]) -> [T; 8] {
    let mut v: [T; 8] = core::array::from_fn(|_| T::zero());
    v[0] = T::one();
    for &s in symbols.iter().rev() {
        let m = &FAMILY_X4[s as usize];
        v = core::array::from_fn(|i| {
            let mut acc = T::zero();
            for (j, x) in v.iter().enumerate() {
                match m[i][j] {
                    0 => {}
                    1 => acc = acc + x.clone(),
                    _ => acc = acc + (x.clone() << 2usize),
                }
            }
            acc
        });
    }
    v
}

/// `A_{ω_0} ⋯ A_{ω_{n−1}} · e_0ᵀ`, exactly, over the denominator `4^n`.
pub fn state_vector(omega: &OctalWord) -> StateVec {
    let n = omega.len();
    // coordinates are at most 4^n, sums of eight of them stay below 2^(2n+3)
    let num = if 2 * n + 3 <= 127 {
        fold::<u128>(omega.symbols()).map(BigUint::from)
    } else {
        fold::<BigUint>(omega.symbols())
    };
    StateVec {
        num,
        log2_den: 2 * n as u64,
    }
}

fn vector_for(alpha: &Word, beta: &Word, gamma: &Word) -> Result<StateVec> {
    Ok(state_vector(&OctalWord::from_words(alpha, beta, gamma)?))
}

/// `adp⊕(α, β → γ)`.
pub fn adp_xor(alpha: &Word, beta: &Word, gamma: &Word) -> Result<Dyadic> {
    Ok(vector_for(alpha, beta, gamma)?.total())
}

/// `adp⊕` of a packed octal word.
pub fn adp_xor_octal(omega: &OctalWord) -> Dyadic {
    state_vector(omega).total()
}

/// `cadp_c(α, β → γ) = L_c · A_{ω_0} ⋯ A_{ω_{n−1}} · e_0ᵀ`.
pub fn cadp(c: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<Dyadic> {
    Ok(vector_for(alpha, beta, gamma)?.carry_select(c))
}

/// `padp_{a,b}(α, β → γ) = L_{a,b} · A_{ω_0} ⋯ A_{ω_{n−1}} · e_0ᵀ`.
pub fn padp(a: bool, b: bool, alpha: &Word, beta: &Word, gamma: &Word) -> Result<Dyadic> {
    Ok(vector_for(alpha, beta, gamma)?.pair_select(a, b))
}

/// Zero test for `adp⊕` without evaluating the product: the probability
/// is zero exactly when the least significant nonzero symbol has odd
/// weight. The all-zero word has probability one.
pub fn adp_xor_is_zero_fast(omega: &OctalWord) -> bool {
    omega
        .symbols()
        .iter()
        .rev()
        .find(|&&s| s != 0)
        .is_some_and(|&s| s.count_ones() % 2 == 1)
}
