//! Regular patterns over octal words and the zero characterizations built
//! from them.
//!
//! A pattern such as `[0 ^0* 7 g1* 17]` describes a set of octal words,
//! most significant symbol first. Two embedded tables list, per quantity,
//! the patterns whose words give probability zero: one for `padp_{a,b}` and
//! one for `adp^XR`, whose cells pair a mark on the high part `ω′` with a
//! row on the low part `ω`.

pub mod atom;
pub mod count;
pub mod impossible;
pub mod pattern;
pub mod tables;
pub mod zeros;

pub use atom::Atom;
pub use count::{count_intersection, count_pattern, count_union};
pub use impossible::{
    count_impossible, count_impossible_brute, count_impossible_inclusion_exclusion, count_impossible_pattern_brute,
    count_xor_impossible, impossible_bounds, n1_closed_form, xor_impossible_closed_form,
};
pub use pattern::{Item, Pattern};
pub use zeros::{adp_xor_zero, adp_xr_zero, adp_xr_zero_octal, cadp_zero, padp_zero, padp_zero_octal, ZeroReport};
