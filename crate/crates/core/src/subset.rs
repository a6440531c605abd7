//! Subsets of a ground set `{1..n}` backed by a bitmask.

use std::fmt;

use crate::{Error, Result};

/// Largest ground-set size we support. Everything in this crate runs at desk
/// scale, and 16 leaves plenty of headroom over the CLI caps.
pub const MAX_GROUND: u32 = 16;

/// A subset of `{1..n}`. Element `i` is stored in bit `i - 1`.
///
/// Equality and ordering are by member set; the ordering is lexicographic on
/// the sorted member list, so `{1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u32,
}

impl Subset {
    pub const EMPTY: Subset = Subset { bits: 0 };

    pub fn from_members(n: u32, members: &[u32]) -> Result<Subset> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::invalid(format!(
                "ground-set size must be in 1..={MAX_GROUND}, got {n}"
            )));
        }
        let mut bits = 0u32;
        for &m in members {
            if m < 1 || m > n {
                return Err(Error::invalid(format!(
                    "element {m} outside ground set {{1..{n}}}"
                )));
            }
            bits |= 1 << (m - 1);
        }
        Ok(Subset { bits })
    }

    pub fn from_bits(bits: u32) -> Subset {
        Subset { bits }
    }

    /// The full set `{1..n}`.
    pub fn full(n: u32) -> Subset {
        Subset {
            bits: if n == 0 { 0 } else { (1u32 << n) - 1 },
        }
    }

    pub fn singleton(i: u32) -> Subset {
        debug_assert!(i >= 1);
        Subset { bits: 1 << (i - 1) }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i >= 1 && self.bits & (1 << (i - 1)) != 0
    }

    pub fn insert(self, i: u32) -> Subset {
        Subset {
            bits: self.bits | (1 << (i - 1)),
        }
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & other.bits,
        }
    }

    /// Set difference `self \ other`.
    pub fn difference(self, other: Subset) -> Subset {
        Subset {
            bits: self.bits & !other.bits,
        }
    }

    /// Complement within `{1..n}`.
    pub fn complement(self, n: u32) -> Subset {
        Subset {
            bits: Subset::full(n).bits & !self.bits,
        }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn members(self) -> Vec<u32> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    /// All subsets of `{1..n}`, in canonical (lex-on-members) order.
    pub fn all(n: u32) -> Vec<Subset> {
        let mut v: Vec<Subset> = (0..1u32 << n).map(Subset::from_bits).collect();
        v.sort();
        v
    }

    /// All subsets of `self`, in canonical order.
    pub fn subsets(self) -> Vec<Subset> {
        let mut v = Vec::with_capacity(1 << self.len());
        // standard subset-of-mask walk
        let mask = self.bits;
        let mut sub = mask;
        loop {
            v.push(Subset::from_bits(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        v.sort();
        v
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members().cmp(&other.members())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lex_on_members() {
        let a = Subset::from_members(3, &[1, 2]).unwrap();
        let b = Subset::from_members(3, &[1, 3]).unwrap();
        let c = Subset::from_members(3, &[2]).unwrap();
        assert!(a < b);
        assert!(b < c);
        assert!(Subset::EMPTY < a);
    }

    #[test]
    fn rejects_out_of_range_elements() {
        assert!(Subset::from_members(3, &[4]).is_err());
        assert!(Subset::from_members(0, &[]).is_err());
    }

    #[test]
    fn subset_walk_covers_everything() {
        let s = Subset::from_members(4, &[1, 3, 4]).unwrap();
        let subs = s.subsets();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }
}
