//! Exact rank computation over the rationals, using sparse row elimination.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{BigInt, Zero};

/// Incremental row space over Q. Rows are sparse `(column, coefficient)`
/// lists; inserting a row reduces it against the pivots already stored.
#[derive(Default)]
pub struct RowSpace {
    // pivot column -> reduced row with leading coefficient 1
    pivots: BTreeMap<usize, Vec<(usize, BigRational)>>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row; returns true if it was independent of the span so far.
    pub fn insert(&mut self, row: Vec<(usize, i64)>) -> bool {
        let mut work: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (c, v) in row {
            if v != 0 {
                let e = work.entry(c).or_insert_with(BigRational::zero);
                *e += BigRational::from(BigInt::from(v));
                if e.is_zero() {
                    work.remove(&c);
                }
            }
        }
        loop {
            let Some((&lead, _)) = work.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    // normalize to leading coefficient 1 and store
                    let inv = work[&lead].recip();
                    let normalized: Vec<(usize, BigRational)> =
                        work.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    self.pivots.insert(lead, normalized);
                    return true;
                }
                Some(pivot) => {
                    let factor = work[&lead].clone();
                    for (c, v) in pivot {
                        let e = work.entry(*c).or_insert_with(BigRational::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            work.remove(c);
                        }
                    }
                }
            }
        }
    }
}

/// Rank of a sparse integer matrix over Q.
pub fn rational_rank<I>(rows: I) -> usize
where
    I: IntoIterator<Item = Vec<(usize, i64)>>,
{
    let mut space = RowSpace::new();
    for row in rows {
        space.insert(row);
    }
    space.rank()
}
