//! Bergman and augmented Bergman fans: cones, ray vectors, compatible pairs,
//! and the nested-set correspondences.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::lattice::{is_nested, BuildingSet, ElementLabel, FiniteLattice};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::{Error, Result};

/// A flag of flats `F_1 ⊊ … ⊊ F_k` (possibly empty).
pub type Flag = Vec<Subset>;

/// A compatible pair `I ≤ F`: an independent set contained in the smallest
/// flag entry (any `I` is compatible with the empty flag).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompatiblePair {
    pub indep: Subset,
    pub flag: Flag,
}

impl CompatiblePair {
    pub fn validate(&self, m: &Matroid) -> Result<()> {
        if !m.is_independent(self.indep) {
            return Err(Error::invalid(format!("{} is not independent", self.indep)));
        }
        for w in self.flag.windows(2) {
            if !w[0].is_proper_subset_of(w[1]) {
                return Err(Error::invalid("flag is not strictly increasing"));
            }
        }
        for f in &self.flag {
            if !m.is_flat(*f) || *f == m.ground() {
                return Err(Error::invalid(format!("{f} is not a proper flat")));
            }
        }
        if let Some(first) = self.flag.first() {
            if !self.indep.is_subset_of(*first) {
                return Err(Error::invalid(format!(
                    "{} is not contained in the smallest flag entry {first}",
                    self.indep
                )));
            }
        }
        Ok(())
    }

    /// Dimension of the cone: `|I| + |flag|`.
    pub fn dim(&self) -> usize {
        self.indep.len() as usize + self.flag.len()
    }
}

impl fmt::Display for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= [", self.indep)?;
        for (k, fl) in self.flag.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{fl}")?;
        }
        write!(f, "]")
    }
}

/// Label of a ray of the augmented Bergman fan: `e_i` or `-e_([n]\F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayLabel {
    Elem(u32),
    Flat(Subset),
}

impl fmt::Display for RayLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RayLabel::Elem(i) => write!(f, "e{i}"),
            RayLabel::Flat(s) => write!(f, "x{s}"),
        }
    }
}

/// All flags in `L(M) − {∅, [n]}`, including the empty flag (the zero cone),
/// in deterministic order.
pub fn bergman_cones(m: &Matroid) -> Vec<Flag> {
    let proper: Vec<Subset> = m
        .flats()
        .flats
        .into_iter()
        .filter(|&f| !f.is_empty() && f != m.ground())
        .collect();
    let mut out: Vec<Flag> = Vec::new();
    let mut cur: Flag = Vec::new();
    fn extend(proper: &[Subset], from: usize, cur: &mut Flag, out: &mut Vec<Flag>) {
        out.push(cur.clone());
        for k in from..proper.len() {
            if cur.last().is_none_or(|&l| l.is_proper_subset_of(proper[k])) {
                cur.push(proper[k]);
                extend(proper, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    extend(&proper, 0, &mut cur, &mut out);
    out.sort();
    out
}

/// The Bergman complex as a simplicial complex on proper nonempty flats.
pub fn bergman_complex(m: &Matroid) -> SimplicialComplex<Subset> {
    SimplicialComplex::from_faces(bergman_cones(m))
}

/// Ray generators of a Bergman cone: `e_F` in `R^n / <e_[n]>`, normalized so
/// the last coordinate is zero.
pub fn bergman_rays(flag: &Flag, n: u32) -> Vec<Vec<i64>> {
    flag.iter()
        .map(|f| {
            let last = if f.contains(n) { 1 } else { 0 };
            (1..=n)
                .map(|i| (if f.contains(i) { 1 } else { 0 }) - last)
                .collect()
        })
        .collect()
}

/// All compatible pairs of `M` (cones of the augmented Bergman fan),
/// including the zero cone, in deterministic order.
pub fn aug_bergman_cones(m: &Matroid) -> Vec<CompatiblePair> {
    let proper: Vec<Subset> = m
        .flats()
        .flats
        .into_iter()
        .filter(|&f| f != m.ground())
        .collect();
    let mut flags: Vec<Flag> = Vec::new();
    let mut cur: Flag = Vec::new();
    fn extend(proper: &[Subset], from: usize, cur: &mut Flag, out: &mut Vec<Flag>) {
        out.push(cur.clone());
        for k in from..proper.len() {
            if cur.last().is_none_or(|&l| l.is_proper_subset_of(proper[k])) {
                cur.push(proper[k]);
                extend(proper, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    extend(&proper, 0, &mut cur, &mut flags);

    let mut out = Vec::new();
    for flag in flags {
        let bound = flag.first().copied().unwrap_or_else(|| m.ground());
        for i in bound.subsets() {
            if m.is_independent(i) {
                out.push(CompatiblePair {
                    indep: i,
                    flag: flag.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Ray generators of a cone `σ_{I ≤ F}`: `{e_i} ∪ {-e_([n]\F)}`.
pub fn aug_rays(pair: &CompatiblePair, n: u32) -> Vec<Vec<i64>> {
    let mut rays: Vec<Vec<i64>> = pair
        .indep
        .members()
        .iter()
        .map(|&i| (1..=n).map(|j| if j == i { 1 } else { 0 }).collect())
        .collect();
    for f in &pair.flag {
        let c = f.complement(n);
        rays.push((1..=n).map(|j| if c.contains(j) { -1 } else { 0 }).collect());
    }
    rays
}

/// Vertex labels of the cone `σ_{I ≤ F}` in the augmented Bergman complex.
pub fn pair_vertices(pair: &CompatiblePair) -> Vec<RayLabel> {
    let mut v: Vec<RayLabel> = pair.indep.members().into_iter().map(RayLabel::Elem).collect();
    v.extend(pair.flag.iter().copied().map(RayLabel::Flat));
    v
}

/// The augmented Bergman complex on ray labels.
pub fn aug_bergman_complex(m: &Matroid) -> SimplicialComplex<RayLabel> {
    SimplicialComplex::from_faces(aug_bergman_cones(m).iter().map(pair_vertices))
}

/// Translate a nested set of the augmented building set into its compatible
/// pair: singleton members become `I`, starred members become the flag.
pub fn nested_to_pair(
    m: &Matroid,
    l: &FiniteLattice,
    g: &BuildingSet,
    nested: &[usize],
) -> Result<CompatiblePair> {
    if !is_nested(l, g, nested) {
        return Err(Error::NotNested(format!(
            "{:?} is not a nested set",
            nested.iter().map(|&i| l.label(i).to_string()).collect::<Vec<_>>()
        )));
    }
    let mut indep = Subset::EMPTY;
    let mut flag: Flag = Vec::new();
    for &i in nested {
        match l.label(i) {
            ElementLabel::Indep(s) if s.len() == 1 => indep = indep.union(s),
            ElementLabel::Starred(f) => {
                if f == m.ground() {
                    return Err(Error::NotNested(
                        "nested set contains the top starred flat".into(),
                    ));
                }
                flag.push(f);
            }
            other => {
                return Err(Error::invalid(format!(
                    "{other} is not a member of the augmented building set"
                )))
            }
        }
    }
    flag.sort_by_key(|f| f.len());
    let pair = CompatiblePair { indep, flag };
    pair.validate(m)?;
    Ok(pair)
}

/// Inverse of [`nested_to_pair`].
pub fn pair_to_nested(
    m: &Matroid,
    l: &FiniteLattice,
    pair: &CompatiblePair,
) -> Result<Vec<usize>> {
    pair.validate(m)?;
    let mut out = Vec::new();
    for i in pair.indep.members() {
        let lbl = ElementLabel::Indep(Subset::singleton(i));
        out.push(l.index_of(&lbl).ok_or_else(|| {
            Error::invalid(format!("{lbl} missing from the augmented lattice"))
        })?);
    }
    for &f in &pair.flag {
        let lbl = ElementLabel::Starred(f);
        out.push(l.index_of(&lbl).ok_or_else(|| {
            Error::invalid(format!("{lbl} missing from the augmented lattice"))
        })?);
    }
    out.sort_unstable();
    Ok(out)
}

/// Translate a nested set of `B(K_{1,n})` (inside the Boolean lattice over
/// `[n] ∪ {*}`) into a compatible pair for `B_n`: singleton tubes `{i}`
/// contribute to `I`, and a tube `S ∪ {*}` becomes the flat `S`.
pub fn star_nested_to_pair(
    n: u32,
    l: &FiniteLattice,
    g: &BuildingSet,
    nested: &[usize],
) -> Result<CompatiblePair> {
    if !is_nested(l, g, nested) {
        return Err(Error::NotNested("not a nested set of B(K_{1,n})".into()));
    }
    let hub = n + 1;
    let mut indep = Subset::EMPTY;
    let mut flag: Flag = Vec::new();
    for &i in nested {
        let ElementLabel::Set(tube) = l.label(i) else {
            return Err(Error::invalid("unexpected label kind in star lattice"));
        };
        if tube.contains(hub) {
            let s = tube.difference(Subset::singleton(hub));
            if s == Subset::full(n) {
                return Err(Error::NotNested(
                    "nested set contains the top tube".into(),
                ));
            }
            flag.push(s);
        } else if tube.len() == 1 {
            indep = indep.union(tube);
        } else {
            return Err(Error::invalid(format!(
                "{tube} is not a member of B(K_{{1,n}})"
            )));
        }
    }
    flag.sort_by_key(|f| f.len());
    let pair = CompatiblePair { indep, flag };
    pair.validate(&Matroid::boolean(n)?)?;
    Ok(pair)
}
