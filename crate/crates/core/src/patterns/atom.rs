use core::fmt;

/// One pattern symbol; each denotes a subset of the octal alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// A single symbol `s`.
    Literal(u8),
    /// `.`: any symbol.
    Any,
    /// `e`: even weight, `{0, 3, 5, 6}`.
    Even,
    /// `d`: odd weight, `{1, 2, 4, 7}`.
    Odd,
    /// `^t`: `{t, t⊕3, t⊕5}`.
    Hat(u8),
    /// `a0` / `a1`: symbols with the given α bit.
    AlphaBit(bool),
    /// `b0` / `b1`: symbols with the given β bit.
    BetaBit(bool),
    /// `g0` / `g1`: symbols with the given γ bit.
    GammaBit(bool),
    /// `06`: `{0, 6}`.
    Pair06,
    /// `17`: `{1, 7}`.
    Pair17,
}

fn bit_class(shift: u8, value: bool) -> u8 {
    (0..8u8)
        .filter(|s| ((s >> shift) & 1 == 1) == value)
        .fold(0, |m, s| m | 1 << s)
}

impl Atom {
    /// The symbol set as a bitmask: bit `s` is set when `s` is accepted.
    pub fn mask(self) -> u8 {
        match self {
            Atom::Literal(s) => 1 << (s & 7),
            Atom::Any => 0xff,
            Atom::Even => 0b0110_1001,
            Atom::Odd => 0b1001_0110,
            Atom::Hat(t) => {
                let t = t & 7;
                1 << t | 1 << (t ^ 3) | 1 << (t ^ 5)
            }
            Atom::AlphaBit(v) => bit_class(2, v),
            Atom::BetaBit(v) => bit_class(1, v),
            Atom::GammaBit(v) => bit_class(0, v),
            Atom::Pair06 => 1 | 1 << 6,
            Atom::Pair17 => 1 << 1 | 1 << 7,
        }
    }

    pub fn accepts(self, symbol: u8) -> bool {
        symbol < 8 && self.mask() >> symbol & 1 == 1
    }

    /// The atom with every symbol's γ bit flipped.
    pub fn flip_gamma(self) -> Atom {
        match self {
            Atom::Literal(s) => Atom::Literal(s ^ 1),
            Atom::Any => Atom::Any,
            Atom::Even => Atom::Odd,
            Atom::Odd => Atom::Even,
            Atom::Hat(t) => Atom::Hat(t ^ 1),
            Atom::AlphaBit(v) => Atom::AlphaBit(v),
            Atom::BetaBit(v) => Atom::BetaBit(v),
            Atom::GammaBit(v) => Atom::GammaBit(!v),
            Atom::Pair06 => Atom::Pair17,
            Atom::Pair17 => Atom::Pair06,
        }
    }

    /// The atom with the α and β bits of every symbol exchanged.
    pub fn swap_alpha_beta(self) -> Atom {
        let swap = |s: u8| (s & 1) | (s >> 1 & 2) | (s << 1 & 4);
        match self {
            Atom::Literal(s) => Atom::Literal(swap(s)),
            Atom::Hat(t) => Atom::Hat(swap(t)),
            Atom::AlphaBit(v) => Atom::BetaBit(v),
            Atom::BetaBit(v) => Atom::AlphaBit(v),
            other => other,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |v: bool| if v { '1' } else { '0' };
        match *self {
            Atom::Literal(s) => write!(f, "{s}"),
            Atom::Any => f.write_str("."),
            Atom::Even => f.write_str("e"),
            Atom::Odd => f.write_str("d"),
            Atom::Hat(t) => write!(f, "^{t}"),
            Atom::AlphaBit(v) => write!(f, "a{}", bit(v)),
            Atom::BetaBit(v) => write!(f, "b{}", bit(v)),
            Atom::GammaBit(v) => write!(f, "g{}", bit(v)),
            Atom::Pair06 => f.write_str("06"),
            Atom::Pair17 => f.write_str("17"),
        }
    }
}
