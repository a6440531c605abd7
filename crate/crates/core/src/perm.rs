//! Permutations of `{1..n}` and their action on subsets.

use crate::subset::Subset;
use crate::{Error, Result};

/// A permutation of `{1..n}`; `image[i-1]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<u32>,
}

impl Perm {
    pub fn identity(n: u32) -> Perm {
        Perm {
            image: (1..=n).collect(),
        }
    }

    pub fn from_image(image: Vec<u32>) -> Result<Perm> {
        let n = image.len() as u32;
        let mut seen = vec![false; n as usize];
        for &v in &image {
            if v < 1 || v > n || seen[(v - 1) as usize] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Perm { image })
    }

    /// Transposition `(a b)`.
    pub fn transposition(n: u32, a: u32, b: u32) -> Perm {
        let mut image: Vec<u32> = (1..=n).collect();
        image.swap((a - 1) as usize, (b - 1) as usize);
        Perm { image }
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.image[(i - 1) as usize]
    }

    pub fn apply_subset(&self, s: Subset) -> Subset {
        s.members()
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.insert(self.apply(i)))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            image: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0u32; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[(v - 1) as usize] = i as u32 + 1;
        }
        Perm { image }
    }

    /// Number of descents of the one-line notation.
    pub fn descents(&self) -> u32 {
        self.image.windows(2).filter(|w| w[0] > w[1]).count() as u32
    }
}

/// All permutations of `{1..n}` in lexicographic order of one-line notation.
pub fn all_perms(n: u32) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    let mut used = vec![false; n as usize];
    fn rec(n: u32, cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() as u32 == n {
            out.push(Perm { image: cur.clone() });
            return;
        }
        for v in 1..=n {
            if !used[(v - 1) as usize] {
                used[(v - 1) as usize] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[(v - 1) as usize] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// A deterministic pseudo-random sample of permutations (splitmix64 driven
/// Fisher–Yates), so randomized checks are reproducible.
pub fn sample_perms(n: u32, count: usize, seed: u64) -> Vec<Perm> {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    (0..count)
        .map(|_| {
            let mut image: Vec<u32> = (1..=n).collect();
            for i in (1..image.len()).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                image.swap(i, j);
            }
            Perm { image }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        for s in all_perms(4) {
            assert_eq!(s.compose(&s.inverse()), Perm::identity(4));
            for t in all_perms(4) {
                let st = s.compose(&t);
                for i in 1..=4 {
                    assert_eq!(st.apply(i), s.apply(t.apply(i)));
                }
            }
        }
    }

    #[test]
    fn subset_action() {
        let s = Perm::transposition(4, 2, 3);
        let sub = Subset::from_members(4, &[1, 2]).unwrap();
        assert_eq!(s.apply_subset(sub), Subset::from_members(4, &[1, 3]).unwrap());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_perms(6, 5, 42), sample_perms(6, 5, 42));
        assert_eq!(all_perms(4).len(), 24);
    }
}
