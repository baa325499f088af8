//! Bit-vector words with MSB-first indexing and modular-`2^n` semantics.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An `n`-bit difference. Bit `0` is the most significant bit, so the
/// integer value is `x_0·2^{n−1} + … + x_{n−1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<bool>,
}

impl Word {
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Word { bits: vec![false; n] })
    }

    /// The all-ones word `2^n − 1`.
    pub fn ones(n: usize) -> Result<Self> {
        Ok(Self::zero(n)?.not())
    }

    /// `2^{n−1}`: only the most significant bit set.
    pub fn msb(n: usize) -> Result<Self> {
        let mut w = Self::zero(n)?;
        w.bits[0] = true;
        Ok(w)
    }

    /// Builds a word from bits given MSB first.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let bits: Vec<bool> = bits.into_iter().collect();
        if bits.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word { bits })
    }

    /// `value mod 2^n`.
    pub fn from_u64(value: u64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Word {
            bits: (0..n)
                .map(|i| {
                    u32::try_from(n - 1 - i)
                        .ok()
                        .and_then(|k| value.checked_shr(k))
                        .unwrap_or(0)
                        & 1
                        == 1
                })
                .collect(),
        })
    }

    /// `value mod 2^n`.
    pub fn from_biguint(value: &BigUint, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Word {
            bits: (0..n).map(|i| value.bit((n - 1 - i) as u64)).collect(),
        })
    }

    /// Parses `0b…` (binary) or `0x…` (hexadecimal) text into an `n`-bit
    /// word. The leftmost digit is the most significant; underscores are
    /// ignored. Values that need more than `n` bits are rejected.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let bad = |reason| Error::ParseWord {
            input: text.to_string(),
            reason,
        };
        let t = text.trim();
        let (digits, bits_per_digit) = if let Some(rest) = t.strip_prefix("0b").or_else(|| t.strip_prefix("0B")) {
            (rest, 1)
        } else if let Some(rest) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            (rest, 4)
        } else {
            return Err(bad("expected a 0b or 0x prefix"));
        };
        let mut raw = Vec::new();
        for ch in digits.chars().filter(|&c| c != '_') {
            let d = ch.to_digit(1 << bits_per_digit).ok_or_else(|| bad("invalid digit"))?;
            for k in (0..bits_per_digit).rev() {
                raw.push((d >> k) & 1 == 1);
            }
        }
        if raw.is_empty() {
            return Err(bad("no digits"));
        }
        let first_one = raw.iter().position(|&b| b).unwrap_or(raw.len());
        if raw.len() - first_one > n {
            return Err(bad("value does not fit in n bits"));
        }
        let mut bits = vec![false; n];
        let significant = &raw[first_one..];
        bits[n - significant.len()..].copy_from_slice(significant);
        Ok(Word { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; words have at least one bit.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Integer value, or `None` if `n > 64` and the value does not fit.
    pub fn to_u64(&self) -> Option<u64> {
        let mut v: u64 = 0;
        for &b in &self.bits {
            if v >> 63 != 0 {
                return None;
            }
            v = (v << 1) | b as u64;
        }
        Some(v)
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut v = BigUint::zero();
        for (i, &b) in self.bits.iter().enumerate() {
            if b {
                v.set_bit((self.len() - 1 - i) as u64, true);
            }
        }
        v
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// `self + other mod 2^n`.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        let mut bits = vec![false; self.len()];
        let mut carry = false;
        for i in (0..self.len()).rev() {
            let (a, b) = (self.bits[i], other.bits[i]);
            bits[i] = a ^ b ^ carry;
            carry = (a & b) | (carry & (a ^ b));
        }
        Ok(Word { bits })
    }

    /// `−self mod 2^n`.
    pub fn neg(&self) -> Word {
        let mut out = self.not();
        // two's complement: flip, then add one
        for i in (0..out.len()).rev() {
            out.bits[i] = !out.bits[i];
            if out.bits[i] {
                break;
            }
        }
        out
    }

    /// `self − other mod 2^n`.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.add(&other.neg())
    }

    pub fn xor(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(Word {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// Bitwise complement, `2^n − 1 − self`.
    pub fn not(&self) -> Word {
        Word {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// `self` if `flag` is false, its complement otherwise.
    pub fn complement_if(&self, flag: bool) -> Word {
        if flag {
            self.not()
        } else {
            self.clone()
        }
    }

    /// Cyclic left rotation: `result_i = self_{(i + r) mod n}`.
    pub fn rotl(&self, r: RotAmount) -> Result<Word> {
        if r.n() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: r.n(),
            });
        }
        let n = self.len();
        Ok(Word {
            bits: (0..n).map(|i| self.bits[(i + r.get()) % n]).collect(),
        })
    }

    /// `high | low`: the high word occupies the most significant positions.
    pub fn concat(high: &Word, low: &Word) -> Word {
        let mut bits = high.bits.clone();
        bits.extend_from_slice(&low.bits);
        Word { bits }
    }

    /// Splits into the top `k` bits and the remaining `n − k` bits.
    /// Requires `1 ≤ k ≤ n − 1`.
    pub fn split_at(&self, k: usize) -> Result<(Word, Word)> {
        if k == 0 || k >= self.len() {
            return Err(Error::Unsupported("split point must leave both halves nonempty"));
        }
        Ok((
            Word {
                bits: self.bits[..k].to_vec(),
            },
            Word {
                bits: self.bits[k..].to_vec(),
            },
        ))
    }

    /// `0b` followed by exactly `n` binary digits.
    pub fn to_bin_string(&self) -> String {
        let mut s = String::with_capacity(self.len() + 2);
        s.push_str("0b");
        for &b in &self.bits {
            s.push(if b { '1' } else { '0' });
        }
        s
    }

    /// `0x` followed by `⌈n/4⌉` hexadecimal digits.
    pub fn to_hex_string(&self) -> String {
        let n = self.len();
        let digits = n.div_ceil(4);
        let pad = digits * 4 - n;
        let padded: Vec<bool> = core::iter::repeat_n(false, pad)
            .chain(self.bits.iter().copied())
            .collect();
        let mut s = String::with_capacity(digits + 2);
        s.push_str("0x");
        for chunk in padded.chunks(4) {
            let d = chunk.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
            s.push(core::char::from_digit(d, 16).unwrap());
        }
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bin_string())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_bin_string())
    }
}

/// A rotation amount `r` for `n`-bit words, `1 ≤ r ≤ n − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotAmount {
    r: usize,
    n: usize,
}

impl RotAmount {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::RotationOutOfRange { r, n });
        }
        Ok(RotAmount { r, n })
    }

    pub fn get(self) -> usize {
        self.r
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `n − r`, the amount that undoes this rotation.
    pub fn inverse(self) -> RotAmount {
        RotAmount {
            r: self.n - self.r,
            n: self.n,
        }
    }
}

/// A word over the octal alphabet `{0..7}`; symbol `i` packs column `i` of a
/// difference triple as `4α_i + 2β_i + γ_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OctalWord {
    symbols: Vec<u8>,
}

impl OctalWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(&s) = symbols.iter().find(|&&s| s > 7) {
            return Err(Error::BadSymbol(s));
        }
        Ok(OctalWord { symbols })
    }

    /// Columnwise packing `ω(α, β, γ)`.
    pub fn from_words(alpha: &Word, beta: &Word, gamma: &Word) -> Result<Self> {
        alpha.check_len(beta)?;
        alpha.check_len(gamma)?;
        Ok(OctalWord {
            symbols: (0..alpha.len())
                .map(|i| 4 * alpha.bit(i) as u8 + 2 * beta.bit(i) as u8 + gamma.bit(i) as u8)
                .collect(),
        })
    }

    /// Inverse of [`OctalWord::from_words`].
    pub fn split(&self) -> Result<(Word, Word, Word)> {
        let pick = |shift: u8| Word::from_bits(self.symbols.iter().map(move |&s| (s >> shift) & 1 == 1));
        Ok((pick(2)?, pick(1)?, pick(0)?))
    }

    /// Parses a string of octal digits, most significant symbol first.
    pub fn parse(text: &str) -> Result<Self> {
        let symbols = text
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(8).map(|d| d as u8).ok_or_else(|| Error::ParseWord {
                    input: text.to_string(),
                    reason: "expected octal digits 0-7",
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(OctalWord { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&s| s == 0)
    }
}

impl fmt::Display for OctalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OctalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OctalWord({self})")
    }
}
