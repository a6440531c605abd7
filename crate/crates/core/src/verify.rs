//! Bundled consistency suites shared by the command-line `verify` command
//! and the integration tests. Each suite returns a [`RunReport`] with one
//! entry per check.

use std::fmt::Write as _;

use crate::bijections::{
    check_phi_equivariance, check_phi_tilde_equivariance, phi, phi_inv, phi_tilde,
    phi_tilde_inv, EquivarianceReport,
};
use crate::chow::{
    aug_chow_presentation, aug_fy_basis, chow_presentation, fy_basis_lattice, fy_basis_matroid,
    hilbert_quotient, FYMonomial,
};
use crate::codes::{enumerate_codes, enumerate_extended_codes};
use crate::complex::complexes_isomorphic;
use crate::fans::{
    aug_bergman_cones, aug_bergman_complex, nested_to_pair, pair_to_nested,
    star_nested_to_pair, CompatiblePair, RayLabel,
};
use crate::lattice::{
    aug_building_set, augmented_lattice, lattice_of_flats, maximal_building_set, nested_sets,
    star_building_set, ElementLabel,
};
use crate::matroid::Matroid;
use crate::perm::{all_perms, sample_perms, Perm};
use crate::subset::Subset;
use crate::symfunc::{
    binomial_eulerian, eulerian, q_polynomial, q_tilde_polynomial, verify_gf_identity,
    verify_recurrence,
};

/// One named check with its expected and observed values.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

/// The outcome of a verification suite.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    fn new(suite: &str) -> RunReport {
        RunReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push<E: std::fmt::Debug, A: std::fmt::Debug + PartialEq<E>>(
        &mut self,
        name: &str,
        expected: E,
        actual: A,
    ) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: actual == expected,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn push_bool(&mut self, name: &str, ok: bool, detail: &str) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: ok,
            expected: "ok".into(),
            actual: if ok { "ok".into() } else { detail.to_string() },
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Render as a TSV table with a trailing summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\texpected={}\tactual={}",
                self.suite,
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.expected,
                c.actual
            );
        }
        let _ = writeln!(
            out,
            "{}\tsummary\t{}\t{}/{} checks passed",
            self.suite,
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        );
        out
    }

    pub fn merge(mut self, other: RunReport) -> RunReport {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
        self
    }
}

/// Graded code counts against the Eulerian polynomials, plus the pinned
/// three-letter tables.
pub fn suite_codes(n_max: u32) -> RunReport {
    let mut r = RunReport::new("codes");
    for n in 1..=n_max {
        let counts: Vec<u64> = enumerate_codes(n).iter().map(|g| g.len() as u64).collect();
        r.push(&format!("code counts n={n} = eulerian"), eulerian(n), counts);
        let counts: Vec<u64> = enumerate_extended_codes(n)
            .iter()
            .map(|g| g.len() as u64)
            .collect();
        r.push(
            &format!("extended counts n={n} = binomial eulerian"),
            binomial_eulerian(n),
            counts,
        );
    }
    if n_max >= 3 {
        let listed: Vec<String> = enumerate_codes(3)
            .iter()
            .flatten()
            .map(|c| c.to_string())
            .collect();
        r.push(
            "the six three-letter codes",
            vec!["000", "011*", "101*", "11*0", "11*1", "111*"]
                .into_iter()
                .map(String::from)
                .collect::<Vec<_>>(),
            {
                let mut l = listed;
                l.sort();
                l
            },
        );
    }
    r
}

/// Round trips and equivariance of both bijections at one `n`; exhaustive
/// over permutations for `n ≤ 5`, sampled above.
pub fn suite_bijection(n: u32) -> RunReport {
    let mut r = RunReport::new("bijection");
    let perms: Vec<Perm> = if n <= 5 {
        all_perms(n)
    } else {
        sample_perms(n, 100, 0x5eed)
    };

    let basis: Vec<FYMonomial> = fy_basis_matroid(&Matroid::boolean(n).unwrap())
        .iter()
        .cloned()
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut roundtrip = true;
    let mut graded = true;
    for u in &basis {
        match phi(n, u) {
            Ok(c) => {
                graded &= c.index() == u.degree() as i64;
                roundtrip &= phi_inv(&c).ok().as_ref() == Some(u);
                seen.insert(c);
            }
            Err(_) => roundtrip = false,
        }
    }
    let total: usize = enumerate_codes(n).iter().map(|g| g.len()).sum();
    r.push_bool("phi round-trips on the monomial basis", roundtrip, "round-trip failed");
    r.push_bool("phi is degree-to-index", graded, "degree mismatch");
    r.push(&format!("phi is onto the {total} codes"), total, seen.len());
    match check_phi_equivariance(n, &basis, &perms) {
        Ok(EquivarianceReport::Ok { checked }) => {
            r.push_bool(&format!("phi equivariance ({checked} pairs)"), true, "")
        }
        Ok(EquivarianceReport::Counterexample { perm, monomial }) => r.push_bool(
            "phi equivariance",
            false,
            &format!("fails at sigma={perm:?}, u={monomial}"),
        ),
        Err(e) => r.push_bool("phi equivariance", false, &e.to_string()),
    }

    let basis: Vec<FYMonomial> = aug_fy_basis(&Matroid::boolean(n).unwrap())
        .iter()
        .cloned()
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut roundtrip = true;
    let mut graded = true;
    for u in &basis {
        match phi_tilde(n, u) {
            Ok(c) => {
                graded &= c.index() == u.degree() as i64 - 1;
                roundtrip &= phi_tilde_inv(&c).ok().as_ref() == Some(u);
                seen.insert(c);
            }
            Err(_) => roundtrip = false,
        }
    }
    let total: usize = enumerate_extended_codes(n).iter().map(|g| g.len()).sum();
    r.push_bool(
        "phi~ round-trips on the augmented basis",
        roundtrip,
        "round-trip failed",
    );
    r.push_bool("phi~ shifts degree to index by one", graded, "degree mismatch");
    r.push(
        &format!("phi~ is onto the {total} extended codes"),
        total,
        seen.len(),
    );
    match check_phi_tilde_equivariance(n, &basis, &perms) {
        Ok(EquivarianceReport::Ok { checked }) => {
            r.push_bool(&format!("phi~ equivariance ({checked} pairs)"), true, "")
        }
        Ok(EquivarianceReport::Counterexample { perm, monomial }) => r.push_bool(
            "phi~ equivariance",
            false,
            &format!("fails at sigma={perm:?}, u={monomial}"),
        ),
        Err(e) => r.push_bool("phi~ equivariance", false, &e.to_string()),
    }
    r
}

/// Monomial-basis counts against the exact Stanley–Reisner quotient, for
/// both the plain and augmented rings of one matroid.
pub fn suite_oracle(m: &Matroid) -> RunReport {
    let mut r = RunReport::new("oracle");
    let basis = fy_basis_matroid(m);
    let p = chow_presentation(m);
    let counts = basis.hilbert_series();
    let oracle: Vec<usize> = (0..counts.len())
        .map(|d| hilbert_quotient(&p, d as u32))
        .collect();
    r.push(&format!("{m}: basis counts = quotient dimensions"), oracle, counts);

    let basis = aug_fy_basis(m);
    let p = aug_chow_presentation(m);
    let counts = basis.hilbert_series();
    let oracle: Vec<usize> = (0..counts.len())
        .map(|d| hilbert_quotient(&p, d as u32))
        .collect();
    r.push(
        &format!("{m}: augmented basis counts = quotient dimensions"),
        oracle,
        counts,
    );
    r
}

/// The generic nested-set basis against the closed-form bases of one matroid.
pub fn suite_fy(m: &Matroid) -> RunReport {
    let mut r = RunReport::new("fy");
    let l = lattice_of_flats(m).unwrap();
    let g = maximal_building_set(&l);
    let mut generic: Vec<FYMonomial> = fy_basis_lattice(&l, &g)
        .iter()
        .filter_map(|u| u.to_flat_monomial().ok())
        .collect();
    generic.sort();
    let mut closed: Vec<FYMonomial> = fy_basis_matroid(m).iter().cloned().collect();
    closed.sort();
    r.push(
        &format!("{m}: nested-set basis of L(M) = flat-chain basis"),
        closed,
        generic,
    );

    match augmented_lattice(m).and_then(|l| {
        let g = aug_building_set(&l)?;
        Ok(fy_basis_lattice(&l, &g))
    }) {
        Ok(basis) => {
            let mut generic: Vec<FYMonomial> = basis
                .iter()
                .filter_map(|u| u.to_flat_monomial().ok())
                .collect();
            generic.sort();
            let mut closed: Vec<FYMonomial> = aug_fy_basis(m).iter().cloned().collect();
            closed.sort();
            r.push(
                &format!("{m}: nested-set basis of the augmented lattice = augmented basis"),
                closed,
                generic,
            );
        }
        Err(e) => r.push_bool("augmented lattice construction", false, &e.to_string()),
    }
    r
}

/// Fan face structure for one matroid: the nested-set ↔ compatible-pair
/// translation round-trips and is onto, and for Boolean matroids the
/// stellohedron complex is isomorphic to the augmented Bergman complex.
pub fn suite_fans(m: &Matroid) -> RunReport {
    let mut r = RunReport::new("fans");
    let l = augmented_lattice(m).unwrap();
    let g = aug_building_set(&l).unwrap();
    let cones = aug_bergman_cones(m);

    let mut mapped: Vec<CompatiblePair> = Vec::new();
    let mut round = true;
    for ns in nested_sets(&l, &g)
        .into_iter()
        .filter(|ns| !ns.contains(&l.top()))
    {
        match nested_to_pair(m, &l, &g, &ns) {
            Ok(pair) => {
                round &= pair_to_nested(m, &l, &pair).ok() == Some(ns.clone());
                mapped.push(pair);
            }
            Err(_) => round = false,
        }
    }
    mapped.sort();
    mapped.dedup();
    r.push_bool(
        &format!("{m}: nested-set/pair translation round-trips"),
        round,
        "round-trip failed",
    );
    r.push(
        &format!("{m}: translation is onto the {} cones", cones.len()),
        cones.clone(),
        mapped,
    );

    if *m == Matroid::boolean(m.n()).unwrap() {
        // Boolean case: compare with the stellohedron face complex
        let n = m.n();
        let (sl, sg) = star_building_set(n).unwrap();
        let hub = n + 1;
        let star_faces: Vec<Vec<ElementLabel>> = nested_sets(&sl, &sg)
            .into_iter()
            .filter(|ns| {
                !ns.contains(&sl.index_of(&ElementLabel::Set(Subset::full(n + 1))).unwrap())
            })
            .map(|ns| ns.into_iter().map(|i| sl.label(i)).collect())
            .collect();
        let star_complex = crate::complex::SimplicialComplex::from_faces(star_faces);
        let aug_complex = aug_bergman_complex(m);
        let iso = complexes_isomorphic(&star_complex, &aug_complex, |lbl| match lbl {
            ElementLabel::Set(tube) if tube.contains(hub) => {
                Some(RayLabel::Flat(tube.difference(Subset::singleton(hub))))
            }
            ElementLabel::Set(tube) if tube.len() == 1 => {
                Some(RayLabel::Elem(tube.members()[0]))
            }
            _ => None,
        });
        r.push_bool(
            &format!("B_{n}: stellohedron complex = augmented Bergman complex"),
            iso,
            "not isomorphic under the tube map",
        );
        // the tube translation agrees with the nested-set enumeration
        let mut star_pairs: Vec<CompatiblePair> = nested_sets(&sl, &sg)
            .into_iter()
            .filter_map(|ns| star_nested_to_pair(n, &sl, &sg, &ns).ok())
            .collect();
        star_pairs.sort();
        star_pairs.dedup();
        r.push(
            &format!("B_{n}: tube translation is onto the cones"),
            cones,
            star_pairs,
        );
    }
    r
}

/// The symmetric-function identities through `n_max`.
pub fn suite_frobenius(n_max: u32) -> RunReport {
    let mut r = RunReport::new("frobenius");
    r.push_bool(
        &format!("generating-function identity through z^{n_max}"),
        verify_gf_identity(n_max).is_ok(),
        "identity fails",
    );
    for n in 1..=n_max {
        r.push_bool(
            &format!("augmented recurrence at n={n}"),
            verify_recurrence(n).is_ok(),
            "recurrence fails",
        );
        let dims: Vec<i64> = q_polynomial(n).iter().map(|p| p.dimension(n)).collect();
        r.push(
            &format!("dimensions of the code character n={n}"),
            eulerian(n).iter().map(|&c| c as i64).collect::<Vec<_>>(),
            dims,
        );
        let dims: Vec<i64> = q_tilde_polynomial(n)
            .iter()
            .map(|p| p.dimension(n))
            .collect();
        r.push(
            &format!("dimensions of the extended character n={n}"),
            binomial_eulerian(n).iter().map(|&c| c as i64).collect::<Vec<_>>(),
            dims,
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_small_suites_pass() {
        assert!(suite_codes(4).all_passed());
        assert!(suite_bijection(3).all_passed());
        assert!(suite_oracle(&Matroid::uniform(3, 2).unwrap()).all_passed());
        assert!(suite_fy(&Matroid::boolean(3).unwrap()).all_passed());
        assert!(suite_fans(&Matroid::boolean(2).unwrap()).all_passed());
        assert!(suite_fans(&Matroid::uniform(3, 2).unwrap()).all_passed());
        assert!(suite_frobenius(4).all_passed());
    }

    #[test]
    fn reports_render_one_line_per_check() {
        let r = suite_codes(3);
        let text = r.render();
        assert_eq!(text.lines().count(), r.checks.len() + 1);
        assert!(text.contains("PASS"));
    }
}
