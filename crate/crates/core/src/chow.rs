//! Chow-ring and augmented-Chow-ring presentations, Feichtner–Yuzvinsky
//! bases, and the exact Hilbert-function oracle.
//!
//! The oracle works degree by degree: it enumerates the monomial basis of the
//! Stanley–Reisner ring and subtracts the rank of the degree-`d` slice of the
//! ideal generated by the linear forms, using exact rational elimination.

use std::fmt;

use crate::lattice::{atom_distance, nested_sets, BuildingSet, ElementLabel, FiniteLattice};
use crate::linalg::rational_rank;
use crate::matroid::Matroid;
use crate::par::maybe_par_flat_map;
use crate::perm::Perm;
use crate::subset::Subset;
use crate::{Error, Result};

/// A presentation variable: `x_F` for a flat, or `y_i` for a ground element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    Y(u32),
    X(Subset),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Y(i) => write!(f, "y{i}"),
            Var::X(s) => write!(f, "x{}", compact_set(*s)),
        }
    }
}

/// Render a set compactly: digits concatenated when
/// they all fit, comma-separated otherwise.
pub fn compact_set(s: Subset) -> String {
    let ms = s.members();
    if ms.is_empty() {
        return "{}".into();
    }
    if ms.iter().all(|&m| m <= 9) {
        ms.iter().map(|m| m.to_string()).collect()
    } else {
        format!(
            "{{{}}}",
            ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// A graded-ring presentation: variables, quadratic nonface generators, and
/// linear forms with integer coefficients.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub vars: Vec<Var>,
    /// Index pairs `(i, j)`, `i < j`, whose product lies in the
    /// Stanley–Reisner ideal.
    pub nonface_pairs: Vec<(usize, usize)>,
    /// Each linear form as dense coefficients over `vars`.
    pub linear_forms: Vec<Vec<i64>>,
}

/// The presentation of the Chow ring `A(M)`: variables `x_F` for nonempty
/// flats, nonfaces from incomparable pairs, linear forms `sum_{F ∋ i} x_F`.
pub fn chow_presentation(m: &Matroid) -> Presentation {
    let flats: Vec<Subset> = m
        .flats()
        .flats
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    let vars: Vec<Var> = flats.iter().copied().map(Var::X).collect();
    let mut nonface_pairs = Vec::new();
    for i in 0..flats.len() {
        for j in i + 1..flats.len() {
            if !flats[i].is_subset_of(flats[j]) && !flats[j].is_subset_of(flats[i]) {
                nonface_pairs.push((i, j));
            }
        }
    }
    let linear_forms: Vec<Vec<i64>> = (1..=m.n())
        .map(|e| {
            flats
                .iter()
                .map(|f| if f.contains(e) { 1 } else { 0 })
                .collect()
        })
        .collect();
    Presentation {
        vars,
        nonface_pairs,
        linear_forms,
    }
}

/// The presentation of the augmented Chow ring: variables `y_i` and `x_F`
/// for proper flats, nonfaces from incomparable `x`-pairs and `y_i x_F` with
/// `i ∉ F`, linear forms `y_i − sum_{F: i ∉ F} x_F`.
pub fn aug_chow_presentation(m: &Matroid) -> Presentation {
    let flats: Vec<Subset> = m
        .flats()
        .flats
        .into_iter()
        .filter(|&f| f != m.ground())
        .collect();
    let mut vars: Vec<Var> = (1..=m.n()).map(Var::Y).collect();
    vars.extend(flats.iter().copied().map(Var::X));
    let ny = m.n() as usize;
    let mut nonface_pairs = Vec::new();
    for i in 0..flats.len() {
        for j in i + 1..flats.len() {
            if !flats[i].is_subset_of(flats[j]) && !flats[j].is_subset_of(flats[i]) {
                nonface_pairs.push((ny + i, ny + j));
            }
        }
    }
    for e in 1..=m.n() {
        for (j, f) in flats.iter().enumerate() {
            if !f.contains(e) {
                nonface_pairs.push(((e - 1) as usize, ny + j));
            }
        }
    }
    nonface_pairs.sort_unstable();
    let linear_forms: Vec<Vec<i64>> = (1..=m.n())
        .map(|e| {
            let mut row = vec![0i64; vars.len()];
            row[(e - 1) as usize] = 1;
            for (j, f) in flats.iter().enumerate() {
                if !f.contains(e) {
                    row[ny + j] = -1;
                }
            }
            row
        })
        .collect();
    Presentation {
        vars,
        nonface_pairs,
        linear_forms,
    }
}

/// A monomial as dense exponents over the presentation variables.
pub type SrMonomial = Vec<u32>;

impl Presentation {
    fn compatible(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.nonface_pairs.binary_search(&(a, b)).is_err()
    }
}

/// All degree-`d` monomials of the Stanley–Reisner ring: monomials whose
/// support is a face, in deterministic order.
pub fn sr_monomials(p: &Presentation, d: u32) -> Vec<SrMonomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; p.vars.len()];
    fn rec(
        p: &Presentation,
        from: usize,
        left: u32,
        support: &mut Vec<usize>,
        exps: &mut Vec<u32>,
        out: &mut Vec<SrMonomial>,
    ) {
        if left == 0 {
            out.push(exps.clone());
            return;
        }
        for v in from..p.vars.len() {
            if support.iter().all(|&s| p.compatible(s, v)) {
                support.push(v);
                for e in 1..=left {
                    exps[v] = e;
                    rec(p, v + 1, left - e, support, exps, out);
                }
                exps[v] = 0;
                support.pop();
            }
        }
    }
    let mut support = Vec::new();
    rec(p, 0, d, &mut support, &mut exps, &mut out);
    out
}

/// Dimension over Q of the degree-`d` part of the quotient of the
/// Stanley–Reisner ring by the linear forms.
pub fn hilbert_quotient(p: &Presentation, d: u32) -> usize {
    if d == 0 {
        return 1;
    }
    let basis = sr_monomials(p, d);
    let mut index = std::collections::BTreeMap::new();
    for (k, m) in basis.iter().enumerate() {
        index.insert(m.clone(), k);
    }
    let lower = sr_monomials(p, d - 1);
    let rows: Vec<Vec<(usize, i64)>> = maybe_par_flat_map(&lower, |m| {
        let support: Vec<usize> = (0..p.vars.len()).filter(|&v| m[v] > 0).collect();
        p.linear_forms
            .iter()
            .map(|form| {
                let mut row = Vec::new();
                for (v, &c) in form.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    if !support.iter().all(|&s| p.compatible(s, v)) {
                        continue; // product reduces to zero in SR
                    }
                    let mut prod = m.clone();
                    prod[v] += 1;
                    row.push((index[&prod], c));
                }
                row
            })
            .collect::<Vec<_>>()
    });
    basis.len() - rational_rank(rows)
}

/// An element of a Feichtner–Yuzvinsky basis over flats: a strictly
/// increasing chain with positive exponents. The empty chain encodes `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FYMonomial {
    pub chain: Vec<Subset>,
    pub exps: Vec<u32>,
}

impl FYMonomial {
    pub fn one() -> FYMonomial {
        FYMonomial {
            chain: Vec::new(),
            exps: Vec::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

impl fmt::Display for FYMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return write!(f, "1");
        }
        for (s, &a) in self.chain.iter().zip(&self.exps) {
            write!(f, "x{}", compact_set(*s))?;
            if a >= 2 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// A basis grouped and sorted by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub by_degree: Vec<Vec<FYMonomial>>,
}

impl GradedBasis {
    fn collect(mut monomials: Vec<FYMonomial>) -> GradedBasis {
        let maxdeg = monomials.iter().map(|m| m.degree()).max().unwrap_or(0);
        monomials.sort();
        let mut by_degree = vec![Vec::new(); (maxdeg + 1) as usize];
        for m in monomials {
            by_degree[m.degree() as usize].push(m);
        }
        GradedBasis { by_degree }
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(|v| v.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Graded dimension counts `(|B_0|, |B_1|, ...)`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        self.by_degree.iter().map(|v| v.len()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FYMonomial> {
        self.by_degree.iter().flatten()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let degrees: Vec<serde_json::Value> = self
            .by_degree
            .iter()
            .enumerate()
            .map(|(d, ms)| {
                serde_json::json!({
                    "degree": d,
                    "monomials": ms
                        .iter()
                        .map(|m| {
                            serde_json::json!({
                                "chain": m.chain.iter().map(|s| s.members()).collect::<Vec<_>>(),
                                "exps": m.exps,
                            })
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::Value::Array(degrees)
    }
}

fn chains_of_flats(m: &Matroid, allow_top: bool) -> Vec<Vec<Subset>> {
    let flats: Vec<Subset> = m
        .flats()
        .flats
        .into_iter()
        .filter(|&f| !f.is_empty() && (allow_top || f != m.ground()))
        .collect();
    let mut out: Vec<Vec<Subset>> = Vec::new();
    let mut cur: Vec<Subset> = Vec::new();
    fn rec(flats: &[Subset], from: usize, cur: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        out.push(cur.clone());
        for k in from..flats.len() {
            if cur.last().is_none_or(|&l| l.is_proper_subset_of(flats[k])) {
                cur.push(flats[k]);
                rec(flats, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&flats, 0, &mut cur, &mut out);
    out
}

fn expand_exponents(
    chain: Vec<Subset>,
    ranges: Vec<std::ops::RangeInclusive<u32>>,
) -> Vec<FYMonomial> {
    let mut out = vec![Vec::new()];
    for r in &ranges {
        let mut next = Vec::new();
        for prefix in &out {
            for a in r.clone() {
                let mut p: Vec<u32> = prefix.clone();
                p.push(a);
                next.push(p);
            }
        }
        out = next;
        if out.is_empty() {
            return Vec::new();
        }
    }
    out.into_iter()
        .map(|exps| FYMonomial {
            chain: chain.clone(),
            exps,
        })
        .collect()
}

/// The Feichtner–Yuzvinsky basis of the Chow ring `A(M)`: chains of nonempty
/// flats with `1 ≤ a_i ≤ rk(F_i) − rk(F_{i−1}) − 1`.
pub fn fy_basis_matroid(m: &Matroid) -> GradedBasis {
    let mut monomials = Vec::new();
    for chain in chains_of_flats(m, true) {
        let mut ranges = Vec::with_capacity(chain.len());
        let mut prev_rank = 0;
        for f in &chain {
            let r = m.rank(*f);
            if r < prev_rank + 2 {
                ranges.clear();
                break;
            }
            ranges.push(1..=(r - prev_rank - 1));
            prev_rank = r;
        }
        if chain.is_empty() {
            monomials.push(FYMonomial::one());
        } else if !ranges.is_empty() {
            monomials.extend(expand_exponents(chain, ranges));
        }
    }
    GradedBasis::collect(monomials)
}

/// The augmented Feichtner–Yuzvinsky basis of `A~(M)`: same chains, but
/// `1 ≤ a_1 ≤ rk(F_1)` and `1 ≤ a_i ≤ rk(F_i) − rk(F_{i−1}) − 1` for `i ≥ 2`.
pub fn aug_fy_basis(m: &Matroid) -> GradedBasis {
    let mut monomials = Vec::new();
    for chain in chains_of_flats(m, true) {
        if chain.is_empty() {
            monomials.push(FYMonomial::one());
            continue;
        }
        let mut ranges = Vec::with_capacity(chain.len());
        let mut ok = true;
        let mut prev_rank = 0;
        for (k, f) in chain.iter().enumerate() {
            let r = m.rank(*f);
            if k == 0 {
                if r < 1 {
                    ok = false;
                    break;
                }
                ranges.push(1..=r);
            } else {
                if r < prev_rank + 2 {
                    ok = false;
                    break;
                }
                ranges.push(1..=(r - prev_rank - 1));
            }
            prev_rank = r;
        }
        if ok {
            monomials.extend(expand_exponents(chain, ranges));
        }
    }
    GradedBasis::collect(monomials)
}

/// Membership in the FY basis of `A(M)`.
pub fn in_fy_basis(m: &Matroid, u: &FYMonomial) -> bool {
    check_chain(m, u, false)
}

/// Membership in the augmented FY basis of `A~(M)`.
pub fn in_aug_fy_basis(m: &Matroid, u: &FYMonomial) -> bool {
    check_chain(m, u, true)
}

fn check_chain(m: &Matroid, u: &FYMonomial, augmented: bool) -> bool {
    if u.chain.len() != u.exps.len() {
        return false;
    }
    let mut prev = Subset::EMPTY;
    let mut prev_rank = 0;
    for (k, (f, &a)) in u.chain.iter().zip(&u.exps).enumerate() {
        if !prev.is_proper_subset_of(*f) || !m.is_flat(*f) || f.is_empty() {
            return false;
        }
        let r = m.rank(*f);
        let hi = if augmented && k == 0 {
            r
        } else if r >= prev_rank + 2 {
            r - prev_rank - 1
        } else {
            return false;
        };
        if a < 1 || a > hi {
            return false;
        }
        prev = *f;
        prev_rank = r;
    }
    true
}

/// A Feichtner–Yuzvinsky monomial over generic lattice elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticeMonomial {
    pub chain: Vec<ElementLabel>,
    pub exps: Vec<u32>,
}

impl LatticeMonomial {
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Forget provenance: `F_*` and plain sets both become the underlying
    /// set, independent-set labels are rejected.
    pub fn to_flat_monomial(&self) -> Result<FYMonomial> {
        let mut chain = Vec::with_capacity(self.chain.len());
        for lbl in &self.chain {
            match lbl {
                ElementLabel::Set(s) | ElementLabel::Starred(s) => chain.push(*s),
                ElementLabel::Indep(_) => {
                    return Err(Error::invalid(
                        "independent-set label in a flat monomial",
                    ))
                }
            }
        }
        Ok(FYMonomial {
            chain,
            exps: self.exps.clone(),
        })
    }
}

/// The generic FY basis of `D(L, G)`: monomials supported on nested sets
/// with exponents bounded by atom distances.
pub fn fy_basis_lattice(l: &FiniteLattice, g: &BuildingSet) -> Vec<LatticeMonomial> {
    let mut out = Vec::new();
    for ns in nested_sets(l, g) {
        // canonical index order is a linear extension of the lattice order
        let mut ranges = Vec::with_capacity(ns.len());
        let mut empty = false;
        for &gi in &ns {
            let below: Vec<usize> = ns.iter().copied().filter(|&h| l.lt(h, gi)).collect();
            let gp = below.iter().fold(l.bottom(), |acc, &h| l.join_of(acc, h));
            let d = atom_distance(l, gp, gi).expect("nested-set members are comparable");
            if d < 2 {
                empty = true;
                break;
            }
            ranges.push(1..=(d - 1));
        }
        if empty {
            continue;
        }
        let chain: Vec<ElementLabel> = ns.iter().map(|&i| l.label(i)).collect();
        // expand exponent choices
        let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
        for r in &ranges {
            let mut next = Vec::new();
            for prefix in &stack {
                for a in r.clone() {
                    let mut p = prefix.clone();
                    p.push(a);
                    next.push(p);
                }
            }
            stack = next;
        }
        for exps in stack {
            out.push(LatticeMonomial {
                chain: chain.clone(),
                exps,
            });
        }
    }
    out.sort();
    out
}

/// Relabel the flats of a monomial by a permutation; the chain is re-sorted
/// (inclusion order is preserved by relabeling) and exponents follow.
pub fn act_fy(sigma: &Perm, u: &FYMonomial) -> FYMonomial {
    let mut pairs: Vec<(Subset, u32)> = u
        .chain
        .iter()
        .zip(&u.exps)
        .map(|(s, &a)| (sigma.apply_subset(*s), a))
        .collect();
    pairs.sort_by_key(|&(s, _)| (s.len(), s));
    FYMonomial {
        chain: pairs.iter().map(|&(s, _)| s).collect(),
        exps: pairs.iter().map(|&(_, a)| a).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{
        aug_building_set, augmented_lattice, boolean_lattice, lattice_of_flats,
        maximal_building_set,
    };

    fn sub(n: u32, m: &[u32]) -> Subset {
        Subset::from_members(n, m).unwrap()
    }

    #[test]
    fn chow_presentation_counts() {
        let p = chow_presentation(&Matroid::boolean(2).unwrap());
        assert_eq!(p.vars.len(), 3);
        assert_eq!(p.nonface_pairs.len(), 1);
        assert_eq!(p.linear_forms.len(), 2);
        let p = chow_presentation(&Matroid::boolean(3).unwrap());
        assert_eq!(p.vars.len(), 7);
        assert_eq!(p.nonface_pairs.len(), 9);
        let p = chow_presentation(&Matroid::uniform(3, 2).unwrap());
        assert_eq!(p.vars.len(), 4);
        assert_eq!(p.nonface_pairs.len(), 3);
        assert_eq!(p.linear_forms.len(), 3);
    }

    #[test]
    fn aug_presentation_counts() {
        let p = aug_chow_presentation(&Matroid::boolean(1).unwrap());
        assert_eq!(p.vars.len(), 2);
        assert_eq!(p.nonface_pairs.len(), 1);
        assert_eq!(p.linear_forms, vec![vec![1, -1]]);
        let p = aug_chow_presentation(&Matroid::boolean(2).unwrap());
        assert_eq!(p.vars.len(), 5);
        assert_eq!(p.nonface_pairs.len(), 5);
        let p = aug_chow_presentation(&Matroid::uniform(3, 2).unwrap());
        assert_eq!(p.vars.len(), 7); // 3 y's + 4 x's
    }

    #[test]
    fn sr_monomial_slices() {
        let p = chow_presentation(&Matroid::boolean(2).unwrap());
        assert_eq!(sr_monomials(&p, 1).len(), 3);
        assert_eq!(sr_monomials(&p, 2).len(), 5); // x1x2 excluded
        let p = aug_chow_presentation(&Matroid::boolean(1).unwrap());
        assert_eq!(sr_monomials(&p, 1).len(), 2);
    }

    #[test]
    fn hilbert_oracle_small() {
        let p = chow_presentation(&Matroid::boolean(3).unwrap());
        assert_eq!(
            (0..=2).map(|d| hilbert_quotient(&p, d)).collect::<Vec<_>>(),
            vec![1, 4, 1]
        );
        let p = aug_chow_presentation(&Matroid::boolean(2).unwrap());
        assert_eq!(
            (0..=2).map(|d| hilbert_quotient(&p, d)).collect::<Vec<_>>(),
            vec![1, 3, 1]
        );
    }

    #[test]
    fn fy_basis_counts() {
        assert_eq!(
            fy_basis_matroid(&Matroid::boolean(3).unwrap()).hilbert_series(),
            vec![1, 4, 1]
        );
        assert_eq!(
            fy_basis_matroid(&Matroid::boolean(4).unwrap()).hilbert_series(),
            vec![1, 11, 11, 1]
        );
        assert_eq!(
            aug_fy_basis(&Matroid::boolean(3).unwrap()).hilbert_series(),
            vec![1, 7, 7, 1]
        );
        assert_eq!(
            aug_fy_basis(&Matroid::boolean(1).unwrap()).hilbert_series(),
            vec![1, 1]
        );
        assert_eq!(
            aug_fy_basis(&Matroid::uniform(3, 2).unwrap()).hilbert_series(),
            vec![1, 4, 1]
        );
    }

    #[test]
    fn fy_degree_two_of_b4_matches_the_table() {
        let b4 = Matroid::boolean(4).unwrap();
        let basis = fy_basis_matroid(&b4);
        let deg2: Vec<String> = basis.by_degree[2].iter().map(|m| m.to_string()).collect();
        let expected = [
            "x12x1234", "x13x1234", "x14x1234", "x23x1234", "x24x1234", "x34x1234",
            "x123^2", "x124^2", "x134^2", "x234^2", "x1234^2",
        ];
        let mut expected: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
        expected.sort();
        let mut got = deg2.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn aug_fy_of_b3_matches_the_known_listing() {
        let basis = aug_fy_basis(&Matroid::boolean(3).unwrap());
        let deg1: Vec<String> = basis.by_degree[1].iter().map(|m| m.to_string()).collect();
        assert_eq!(deg1, vec!["x1", "x12", "x123", "x13", "x2", "x23", "x3"]);
        let mut deg2: Vec<String> = basis.by_degree[2].iter().map(|m| m.to_string()).collect();
        deg2.sort();
        let mut expected = vec![
            "x1x123", "x2x123", "x3x123", "x12^2", "x13^2", "x23^2", "x123^2",
        ];
        expected.sort();
        assert_eq!(deg2, expected);
        assert_eq!(basis.by_degree[3][0].to_string(), "x123^3");
    }

    #[test]
    fn generic_lattice_basis_agrees_with_matroid_basis() {
        for m in [
            Matroid::boolean(3).unwrap(),
            Matroid::boolean(4).unwrap(),
            Matroid::uniform(3, 2).unwrap(),
            Matroid::uniform(4, 2).unwrap(),
        ] {
            let l = lattice_of_flats(&m).unwrap();
            let g = maximal_building_set(&l);
            let mut generic: Vec<FYMonomial> = fy_basis_lattice(&l, &g)
                .iter()
                .map(|u| u.to_flat_monomial().unwrap())
                .collect();
            generic.sort();
            let mut specific: Vec<FYMonomial> = fy_basis_matroid(&m).iter().cloned().collect();
            specific.sort();
            assert_eq!(generic, specific);
        }
    }

    #[test]
    fn generic_lattice_basis_on_augmented_lattice() {
        for m in [
            Matroid::boolean(1).unwrap(),
            Matroid::boolean(2).unwrap(),
            Matroid::boolean(3).unwrap(),
            Matroid::uniform(3, 2).unwrap(),
        ] {
            let l = augmented_lattice(&m).unwrap();
            let g = aug_building_set(&l).unwrap();
            let mut generic: Vec<FYMonomial> = fy_basis_lattice(&l, &g)
                .iter()
                .map(|u| u.to_flat_monomial().unwrap())
                .collect();
            generic.sort();
            let mut specific: Vec<FYMonomial> = aug_fy_basis(&m).iter().cloned().collect();
            specific.sort();
            assert_eq!(generic, specific, "mismatch for {m}");
        }
    }

    #[test]
    fn two_chain_has_trivial_basis() {
        let l = boolean_lattice(Subset::full(1)).unwrap();
        let g = maximal_building_set(&l);
        let basis = fy_basis_lattice(&l, &g);
        assert_eq!(basis.len(), 1);
        assert!(basis[0].chain.is_empty());
    }

    #[test]
    fn fy_action_examples() {
        let b4 = Matroid::boolean(4).unwrap();
        let u = FYMonomial {
            chain: vec![sub(4, &[1, 2]), Subset::full(4)],
            exps: vec![1, 1],
        };
        assert!(in_fy_basis(&b4, &u));
        assert_eq!(act_fy(&Perm::transposition(4, 1, 2), &u), u);
        let v = act_fy(&Perm::transposition(4, 2, 3), &u);
        assert_eq!(v.chain, vec![sub(4, &[1, 3]), Subset::full(4)]);
        assert_eq!(act_fy(&Perm::identity(4), &u), u);
    }

    #[test]
    fn palindromic_graded_counts() {
        for n in 1..=6u32 {
            let hs = fy_basis_matroid(&Matroid::boolean(n).unwrap()).hilbert_series();
            let mut rev = hs.clone();
            rev.reverse();
            assert_eq!(hs, rev, "FY(B_{n}) not palindromic");
            let hs = aug_fy_basis(&Matroid::boolean(n).unwrap()).hilbert_series();
            let mut rev = hs.clone();
            rev.reverse();
            assert_eq!(hs, rev, "FY~(B_{n}) not palindromic");
        }
    }
}
