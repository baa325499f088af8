//! Exact additive differential probabilities for ARX building blocks.
//!
//! The crate computes, with exact dyadic arithmetic,
//!
//! * `adp⊕(α, β → γ)` for `x ⊕ y` through the 8×8 rational-series matrices,
//! * the carry-selected partial sums `cadp_c` and `padp_{a,b}`,
//! * `adp^XR(α, β → γ, r)` for `(x ⊕ y) ⋘ r` and `adp^RX` for `(x ⋘ r) ⊕ y`,
//! * closed-form maxima of `adp^XR` for one-bit rotations,
//! * a pattern-based decision procedure for impossible differentials and
//!   exact counts of them.
//!
//! Every probability is also available from a brute-force [`oracle`] that
//! enumerates input pairs, which is what the test suites check against.
//!
//! Bit vectors use MSB-first indexing: bit `0` of a [`Word`] is its most
//! significant bit.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dyadic;
pub mod error;
pub mod matrix;
pub mod maxima;
pub mod oracle;
pub mod patterns;
pub mod recurrence;
pub mod word;
pub mod xr;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use matrix::{adp_xor, adp_xor_is_zero_fast, cadp, padp, RolePerm, StateVec, TransMatrix};
pub use maxima::{max_exhaustive, max_r1, max_r_right, CaseTag, FixedArg, MaxReport};
pub use oracle::{oracle_adp, AdpFunction, OracleResult};
pub use patterns::{Atom, Pattern, ZeroReport};
pub use recurrence::{cadp_rec, padp_rec};
pub use word::{OctalWord, RotAmount, Word};
pub use xr::{adp_rx, adp_xr, adp_xr_full_sum, XrInstance};
