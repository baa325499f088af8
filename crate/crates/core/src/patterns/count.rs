//! Exact counts of pattern languages over words of a fixed length.
//!
//! Counting runs the position-set automata of several patterns in lockstep
//! and carries, for every reachable tuple of sets, the number of words that
//! lead to it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::pattern::Pattern;

/// Distribution of length-`k` words over the joint automaton states of
/// `patterns`: each entry is (acceptance bitmask, number of words). Bit `i`
/// of the mask is set when pattern `i` accepts. At most 64 patterns.
pub fn acceptance_profile(patterns: &[&Pattern], k: usize) -> BTreeMap<u64, BigUint> {
    assert!(patterns.len() <= 64, "at most 64 patterns per profile");
    let mut states: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
    states.insert(patterns.iter().map(|p| p.nfa().start()).collect(), BigUint::one());
    for _ in 0..k {
        let mut next: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
        for (state, count) in &states {
            for s in 0..8u8 {
                let key: Vec<u64> = patterns
                    .iter()
                    .zip(state)
                    .map(|(p, &set)| p.nfa().step(set, s))
                    .collect();
                *next.entry(key).or_insert_with(BigUint::zero) += count;
            }
        }
        states = next;
    }
    let mut profile: BTreeMap<u64, BigUint> = BTreeMap::new();
    for (state, count) in states {
        let mask = patterns
            .iter()
            .zip(&state)
            .enumerate()
            .filter(|(_, (p, &set))| p.nfa().accepts(set))
            .fold(0u64, |m, (i, _)| m | 1 << i);
        *profile.entry(mask).or_insert_with(BigUint::zero) += count;
    }
    profile
}

/// Number of length-`k` words matching `p`.
pub fn count_pattern(p: &Pattern, k: usize) -> BigUint {
    let mut states: BTreeMap<u64, BigUint> = BTreeMap::new();
    states.insert(p.nfa().start(), BigUint::one());
    for _ in 0..k {
        let mut next: BTreeMap<u64, BigUint> = BTreeMap::new();
        for (&set, count) in &states {
            for s in 0..8u8 {
                let t = p.nfa().step(set, s);
                if t != 0 {
                    *next.entry(t).or_insert_with(BigUint::zero) += count;
                }
            }
        }
        states = next;
    }
    states
        .into_iter()
        .filter(|(set, _)| p.nfa().accepts(*set))
        .map(|(_, c)| c)
        .sum()
}

/// Number of length-`k` words matching at least one of `patterns`.
pub fn count_union(patterns: &[&Pattern], k: usize) -> BigUint {
    acceptance_profile(patterns, k)
        .into_iter()
        .filter(|(m, _)| *m != 0)
        .map(|(_, c)| c)
        .sum()
}

/// Number of length-`k` words matching every one of `patterns`.
pub fn count_intersection(patterns: &[&Pattern], k: usize) -> BigUint {
    let all = if patterns.len() == 64 {
        u64::MAX
    } else {
        (1u64 << patterns.len()) - 1
    };
    acceptance_profile(patterns, k)
        .into_iter()
        .filter(|(m, _)| *m == all)
        .map(|(_, c)| c)
        .sum()
}
