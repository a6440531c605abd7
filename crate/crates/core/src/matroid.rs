//! Matroids presented by their bases, with rank/closure oracles, flats,
//! and the independence complex.

use std::fmt;

use crate::subset::Subset;
use crate::{Error, Result};

/// A loopless matroid on ground set `{1..n}`, presented by its bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: u32,
    bases: Vec<Subset>,
    rank: u32,
}

/// The lattice of flats of a matroid: flats in canonical order together with
/// ranks and cover relations.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub flats: Vec<Subset>,
    pub ranks: Vec<u32>,
    /// Pairs `(i, j)` with `flats[i] ⋖ flats[j]`.
    pub covers: Vec<(usize, usize)>,
}

impl Matroid {
    /// The Boolean matroid `B_n`: every subset is independent.
    pub fn boolean(n: u32) -> Result<Matroid> {
        if n < 1 {
            return Err(Error::invalid("ground-set size must be at least 1"));
        }
        Subset::from_members(n, &[])?;
        Ok(Matroid {
            n,
            bases: vec![Subset::full(n)],
            rank: n,
        })
    }

    /// The uniform matroid `U_{n,r}`: bases are all `r`-subsets of `{1..n}`.
    pub fn uniform(n: u32, r: u32) -> Result<Matroid> {
        if n < 1 {
            return Err(Error::invalid("ground-set size must be at least 1"));
        }
        Subset::from_members(n, &[])?;
        if r < 1 || r > n {
            return Err(Error::invalid(format!(
                "uniform rank must satisfy 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        let bases: Vec<Subset> = Subset::all(n)
            .into_iter()
            .filter(|s| s.len() == r)
            .collect();
        Ok(Matroid { n, bases, rank: r })
    }

    /// Validate a bases list: equal cardinality, looplessness, basis exchange.
    pub fn from_bases(n: u32, bases: Vec<Subset>) -> Result<Matroid> {
        if n < 1 {
            return Err(Error::invalid("ground-set size must be at least 1"));
        }
        Subset::from_members(n, &[])?;
        if bases.is_empty() {
            return Err(Error::NotAMatroid("empty bases list".into()));
        }
        let full = Subset::full(n);
        for b in &bases {
            if !b.is_subset_of(full) {
                return Err(Error::invalid(format!(
                    "basis {b} not contained in ground set {{1..{n}}}"
                )));
            }
        }
        let r = bases[0].len();
        if bases.iter().any(|b| b.len() != r) {
            return Err(Error::NotAMatroid("bases of unequal cardinality".into()));
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        // basis exchange
        for b1 in &bases {
            for b2 in &bases {
                if b1 == b2 {
                    continue;
                }
                for x in b1.difference(*b2).members() {
                    let found = b2.difference(*b1).members().iter().any(|&y| {
                        let cand = b1.difference(Subset::singleton(x)).insert(y);
                        bases.binary_search(&cand).is_ok()
                    });
                    if !found {
                        return Err(Error::NotAMatroid(format!(
                            "exchange axiom fails for bases {b1}, {b2} at element {x}"
                        )));
                    }
                }
            }
        }
        // looplessness
        for e in 1..=n {
            if !bases.iter().any(|b| b.contains(e)) {
                return Err(Error::NotAMatroid(format!("loop detected: element {e}")));
            }
        }
        Ok(Matroid { n, bases, rank: r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn full_rank(&self) -> u32 {
        self.rank
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Rank of a subset: the maximum intersection with a basis.
    pub fn rank(&self, s: Subset) -> u32 {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        let mut out = s;
        for e in 1..=self.n {
            if self.rank(s.insert(e)) == r {
                out = out.insert(e);
            }
        }
        out
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// All flats with ranks and cover relations, in canonical order
    /// (rank, then lex).
    pub fn flats(&self) -> FlatLattice {
        let mut flats: Vec<Subset> = Subset::all(self.n)
            .into_iter()
            .filter(|&s| self.is_flat(s))
            .collect();
        flats.sort_by_key(|&f| (self.rank(f), f));
        let ranks: Vec<u32> = flats.iter().map(|&f| self.rank(f)).collect();
        let mut covers = Vec::new();
        for (i, &a) in flats.iter().enumerate() {
            for (j, &b) in flats.iter().enumerate() {
                if a.is_proper_subset_of(b)
                    && !flats
                        .iter()
                        .any(|&c| a.is_proper_subset_of(c) && c.is_proper_subset_of(b))
                {
                    covers.push((i, j));
                }
            }
        }
        FlatLattice {
            flats,
            ranks,
            covers,
        }
    }

    /// All independent sets, in canonical order. Downward closed.
    pub fn independent_sets(&self) -> Vec<Subset> {
        Subset::all(self.n)
            .into_iter()
            .filter(|&s| self.is_independent(s))
            .collect()
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matroid(n={}, {} bases)", self.n, self.bases.len())
    }
}
