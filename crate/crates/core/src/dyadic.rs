//! Exact nonnegative rationals with power-of-two denominators.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `num / 2^log2_den`.
///
/// Values are kept unreduced while they are being built (all entries of a
/// matrix product share the `4^n` scale); equality, ordering, hashing and
/// rendering all work on the value.
#[derive(Clone)]
pub struct Dyadic {
    num: BigUint,
    log2_den: u64,
}

impl Dyadic {
    pub fn new(num: BigUint, log2_den: u64) -> Self {
        Dyadic { num, log2_den }
    }

    pub fn zero() -> Self {
        Dyadic::new(BigUint::zero(), 0)
    }

    pub fn one() -> Self {
        Dyadic::new(BigUint::one(), 0)
    }

    pub fn from_parts(num: u64, log2_den: u64) -> Self {
        Dyadic::new(BigUint::from(num), log2_den)
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn log2_den(&self) -> u64 {
        self.log2_den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.bits() == self.log2_den + 1 && self.num.trailing_zeros() == Some(self.log2_den)
    }

    /// Canonical form: odd numerator, or `0/1`.
    pub fn reduced(&self) -> Dyadic {
        match self.num.trailing_zeros() {
            None => Dyadic::zero(),
            Some(tz) => {
                let shift = tz.min(self.log2_den);
                Dyadic::new(&self.num >> shift, self.log2_den - shift)
            }
        }
    }

    /// Divides by `2^k`.
    pub fn shr(&self, k: u64) -> Dyadic {
        Dyadic::new(self.num.clone(), self.log2_den + k)
    }

    /// Numerator over the denominator `2^log2_den`, if that is exact.
    pub fn numer_over(&self, log2_den: u64) -> Option<BigUint> {
        if log2_den >= self.log2_den {
            Some(&self.num << (log2_den - self.log2_den))
        } else {
            let r = self.reduced();
            (r.log2_den <= log2_den).then(|| &r.num << (log2_den - r.log2_den))
        }
    }

    /// Nearest `f64`; approximate for large denominators.
    pub fn to_f64(&self) -> f64 {
        let r = self.reduced();
        let bits = r.num.bits();
        // keep 64 significant bits before converting
        let drop = bits.saturating_sub(64);
        let mant = (&r.num >> drop).to_f64().unwrap_or(f64::INFINITY);
        let exp = drop as i64 - r.log2_den as i64;
        mant * pow2(exp)
    }

    fn aligned(&self, other: &Dyadic) -> (BigUint, BigUint, u64) {
        let d = self.log2_den.max(other.log2_den);
        (&self.num << (d - self.log2_den), &other.num << (d - other.log2_den), d)
    }

    /// Reduced `p/q` text, with `q` written out in decimal.
    pub fn to_fraction_string(&self) -> String {
        let r = self.reduced();
        if r.log2_den == 0 {
            r.num.to_string()
        } else {
            let den = BigUint::one() << r.log2_den;
            alloc::format!("{}/{}", r.num, den)
        }
    }
}

fn pow2(exp: i64) -> f64 {
    // split so that each factor stays a normal f64
    let mut x = 1.0f64;
    let mut e = exp;
    while e != 0 {
        let step = e.clamp(-1000, 1000);
        x *= f64::from_bits(((step + 1023) as u64) << 52);
        e -= step;
    }
    x
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a == b
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Hash for Dyadic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.num.hash(state);
        r.log2_den.hash(state);
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, d) = self.aligned(rhs);
        Dyadic::new(a + b, d)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.log2_den + rhs.log2_den)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl core::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fraction_string())
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({})", self.to_fraction_string())
    }
}
