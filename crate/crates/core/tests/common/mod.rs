#![allow(dead_code)]

use adp_core::{Dyadic, RotAmount, Word, XrInstance};

pub fn w(value: u64, n: usize) -> Word {
    Word::from_u64(value, n).unwrap()
}

pub fn words(n: usize) -> impl Iterator<Item = Word> + Clone {
    (0..1u64 << n).map(move |v| w(v, n))
}

/// Every `(α, β, γ)` of length `n`, as plain integers.
pub fn int_triples(n: usize) -> impl Iterator<Item = (u64, u64, u64)> {
    let mask = (1u64 << n) - 1;
    (0..1u64 << (3 * n)).map(move |t| (t >> (2 * n), (t >> n) & mask, t & mask))
}

pub fn triples(n: usize) -> impl Iterator<Item = (Word, Word, Word)> {
    int_triples(n).map(move |(a, b, g)| (w(a, n), w(b, n), w(g, n)))
}

pub fn xr(a: &Word, b: &Word, g: &Word, r: usize) -> XrInstance {
    let rot = RotAmount::new(r, a.len()).unwrap();
    XrInstance::new(a.clone(), b.clone(), g.clone(), rot).unwrap()
}

fn rotl(x: u64, r: usize, n: usize) -> u64 {
    let mask = (1u64 << n) - 1;
    if r == 0 {
        x & mask
    } else {
        ((x << r) | (x >> (n - r))) & mask
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Op {
    Xor,
    Xr(usize),
    Rx(usize),
}

/// Counts the pairs `(x, y)` with `f(x + α, y + β) = f(x, y) + γ`, straight
/// from the definition.
pub fn brute_hits(op: Op, a: u64, b: u64, g: u64, n: usize) -> u64 {
    let mask = (1u64 << n) - 1;
    let f = |x: u64, y: u64| match op {
        Op::Xor => x ^ y,
        Op::Xr(r) => rotl(x ^ y, r, n),
        Op::Rx(r) => rotl(x, r, n) ^ y,
    };
    let mut hits = 0;
    for x in 0..=mask {
        for y in 0..=mask {
            let lhs = f((x + a) & mask, (y + b) & mask);
            if lhs == (f(x, y) + g) & mask {
                hits += 1;
            }
        }
    }
    hits
}

pub fn brute(op: Op, a: u64, b: u64, g: u64, n: usize) -> Dyadic {
    Dyadic::from_parts(brute_hits(op, a, b, g, n), 2 * n as u64)
}

pub fn q(num: u64, log2_den: u64) -> Dyadic {
    Dyadic::from_parts(num, log2_den)
}
