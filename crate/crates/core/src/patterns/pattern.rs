use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::atom::Atom;
use crate::error::{Error, Result};

/// Most items a pattern may hold; positions must fit in a `u64`.
pub const MAX_ITEMS: usize = 63;
/// Most starred items a pattern may hold.
pub const MAX_STARS: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    pub atom: Atom,
    pub starred: bool,
}

/// A fixed-alphabet regular pattern over octal symbols, most significant
/// symbol first.
///
/// Text form: `[` items `]`, where an item is `.`, `e`, `d`, a digit `0`-`7`,
/// `^t`, `a0`, `a1`, `b0`, `b1`, `g0`, `g1`, or one of the pairs `06`, `17`,
/// optionally followed by `*`. Items may be run together except that a pair
/// must stand alone between spaces (otherwise `06` reads as `0` then `6`);
/// `0_6` and `1_7` are accepted anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    items: Vec<Item>,
    id: Option<String>,
    nfa: Nfa,
}

impl Pattern {
    pub fn new(items: Vec<Item>) -> Result<Pattern> {
        if items.len() > MAX_ITEMS {
            return Err(Error::ParsePattern {
                input: String::new(),
                offset: 0,
                reason: "too many items",
            });
        }
        if items.iter().filter(|i| i.starred).count() > MAX_STARS {
            return Err(Error::ParsePattern {
                input: String::new(),
                offset: 0,
                reason: "at most two starred items",
            });
        }
        let nfa = Nfa::build(&items);
        Ok(Pattern { items, id: None, nfa })
    }

    pub fn parse(text: &str) -> Result<Pattern> {
        let items = parse_items(text)?;
        Pattern::new(items).map_err(|e| match e {
            Error::ParsePattern { offset, reason, .. } => Error::ParsePattern {
                input: text.to_string(),
                offset,
                reason,
            },
            other => other,
        })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Pattern {
        self.id = Some(id.into());
        self
    }

    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn nfa(&self) -> &Nfa {
        &self.nfa
    }

    /// Number of unstarred items, the shortest matching length.
    pub fn min_len(&self) -> usize {
        self.items.iter().filter(|i| !i.starred).count()
    }

    /// Whether the whole symbol sequence matches.
    pub fn matches(&self, symbols: &[u8]) -> bool {
        let mut set = self.nfa.start();
        for &s in symbols {
            if s > 7 {
                return false;
            }
            set = self.nfa.step(set, s);
            if set == 0 {
                return false;
            }
        }
        self.nfa.accepts(set)
    }

    fn map_atoms(&self, f: impl Fn(Atom) -> Atom) -> Pattern {
        let items = self
            .items
            .iter()
            .map(|i| Item {
                atom: f(i.atom),
                starred: i.starred,
            })
            .collect();
        Pattern::new(items).expect("same shape")
    }

    /// The pattern matched by `ω(α, β, γ̄)` whenever `ω(α, β, γ)` matches `self`.
    pub fn flip_gamma(&self) -> Pattern {
        self.map_atoms(Atom::flip_gamma)
    }

    /// The pattern matched by `ω(β, α, γ)` whenever `ω(α, β, γ)` matches `self`.
    pub fn swap_alpha_beta(&self) -> Pattern {
        self.map_atoms(Atom::swap_alpha_beta)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, item) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", item.atom)?;
            if item.starred {
                f.write_str("*")?;
            }
        }
        f.write_str("]")
    }
}

fn parse_items(text: &str) -> Result<Vec<Item>> {
    let bad = |offset: usize, reason: &'static str| Error::ParsePattern {
        input: text.to_string(),
        offset,
        reason,
    };
    let trimmed = text.trim_end();
    let start = text.len() - text.trim_start().len();
    let body = trimmed[start..]
        .strip_prefix('[')
        .ok_or_else(|| bad(start, "expected '['"))?;
    let body = body
        .strip_suffix(']')
        .ok_or_else(|| bad(trimmed.len(), "expected ']'"))?;
    let base = start + 1;
    let bytes = body.as_bytes();

    let mut items = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        // a standalone pair chunk
        let chunk_end = bytes[i..]
            .iter()
            .position(|b| b.is_ascii_whitespace())
            .map_or(bytes.len(), |p| i + p);
        let chunk = &bytes[i..chunk_end];
        let chunk_start = i == 0 || bytes[i - 1].is_ascii_whitespace();
        let pair = match chunk {
            b"06" | b"06*" if chunk_start => Some(Atom::Pair06),
            b"17" | b"17*" if chunk_start => Some(Atom::Pair17),
            _ => None,
        };
        if let Some(atom) = pair {
            items.push(Item {
                atom,
                starred: chunk.len() == 3,
            });
            i = chunk_end;
            continue;
        }
        let at = base + i;
        let (atom, used) = match c {
            b'.' => (Atom::Any, 1),
            b'e' => (Atom::Even, 1),
            b'd' => (Atom::Odd, 1),
            b'0'..=b'7' if bytes.get(i + 1) == Some(&b'_') => match (c, bytes.get(i + 2)) {
                (b'0', Some(b'6')) => (Atom::Pair06, 3),
                (b'1', Some(b'7')) => (Atom::Pair17, 3),
                _ => return Err(bad(at, "only 0_6 and 1_7 pairs exist")),
            },
            b'0'..=b'7' => (Atom::Literal(c - b'0'), 1),
            b'^' => match bytes.get(i + 1) {
                Some(&t @ b'0'..=b'7') => (Atom::Hat(t - b'0'), 2),
                _ => return Err(bad(at, "expected a digit 0-7 after '^'")),
            },
            b'a' | b'b' | b'g' => {
                let v = match bytes.get(i + 1) {
                    Some(b'0') => false,
                    Some(b'1') => true,
                    _ => return Err(bad(at, "expected 0 or 1 after a class letter")),
                };
                let atom = match c {
                    b'a' => Atom::AlphaBit(v),
                    b'b' => Atom::BetaBit(v),
                    _ => Atom::GammaBit(v),
                };
                (atom, 2)
            }
            b'*' => return Err(bad(at, "'*' must follow an item")),
            _ => return Err(bad(at, "unknown pattern symbol")),
        };
        i += used;
        let starred = bytes.get(i) == Some(&b'*');
        if starred {
            i += 1;
        }
        items.push(Item { atom, starred });
        if items.len() > MAX_ITEMS {
            return Err(bad(at, "too many items"));
        }
        if items.iter().filter(|it| it.starred).count() > MAX_STARS {
            return Err(bad(at, "at most two starred items"));
        }
    }
    Ok(items)
}

/// Position-set automaton for a pattern. State bit `i` means "the next item
/// to match is item `i`"; bit `len` is the accepting position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nfa {
    len: u32,
    /// `accept[s]`: items whose atom contains `s`.
    accept: [u64; 8],
    /// Starred items.
    star: u64,
}

impl Nfa {
    fn build(items: &[Item]) -> Nfa {
        let mut accept = [0u64; 8];
        let mut star = 0u64;
        for (k, item) in items.iter().enumerate() {
            for (s, a) in accept.iter_mut().enumerate() {
                if item.atom.accepts(s as u8) {
                    *a |= 1 << k;
                }
            }
            if item.starred {
                star |= 1 << k;
            }
        }
        Nfa {
            len: items.len() as u32,
            accept,
            star,
        }
    }

    /// Adds every position reachable by skipping starred items.
    fn closure(&self, mut set: u64) -> u64 {
        loop {
            let next = set | (set & self.star) << 1;
            if next == set {
                return set;
            }
            set = next;
        }
    }

    pub fn start(&self) -> u64 {
        self.closure(1)
    }

    pub fn step(&self, set: u64, symbol: u8) -> u64 {
        let live = set & self.accept[symbol as usize];
        self.closure((live & self.star) | (live & !self.star) << 1)
    }

    pub fn accepts(&self, set: u64) -> bool {
        set >> self.len & 1 == 1
    }
}
