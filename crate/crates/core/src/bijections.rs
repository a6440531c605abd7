//! The two degree-preserving bijections between Feichtner–Yuzvinsky bases of
//! Boolean matroids and (extended) Stembridge codes, together with
//! equivariance checking for the symmetric-group actions.

use crate::chow::FYMonomial;
use crate::codes::{act_code, act_extended_code, Code, ExtendedCode, Letter};
use crate::par::maybe_par_flat_map;
use crate::perm::Perm;
use crate::subset::Subset;
use crate::{Error, Result};

/// `φ`: a basis monomial `x_{F_1}^{a_1} ... x_{F_k}^{a_k}` of the Chow ring
/// of the Boolean matroid on `[n]` (so `F_k` may be any flat, including
/// `[n]`) maps to the code with `α_i = j` for `i ∈ F_j ∖ F_{j−1}`, `α_i = 0`
/// outside `F_k`, and `f(j) = a_j`.
pub fn phi(n: u32, u: &FYMonomial) -> Result<Code> {
    let mut alpha = vec![0u32; n as usize];
    let mut prev = Subset::EMPTY;
    for (j, f) in (1u32..).zip(&u.chain) {
        if !prev.is_proper_subset_of(*f) {
            return Err(Error::invalid("chain is not strictly increasing"));
        }
        for i in f.difference(prev).members() {
            alpha[(i - 1) as usize] = j;
        }
        prev = *f;
    }
    Code::new(alpha, u.exps.clone())
}

/// Inverse of [`phi`]: `F_j` is the set of positions with letters `1..j`,
/// and `a_j = f(j)`.
pub fn phi_inv(c: &Code) -> Result<FYMonomial> {
    let k = c.max_letter();
    let mut chain = Vec::with_capacity(k as usize);
    for j in 1..=k {
        let f = c
            .alpha
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a >= 1 && a <= j)
            .fold(Subset::EMPTY, |acc, (i, _)| acc.insert(i as u32 + 1));
        chain.push(f);
    }
    let u = FYMonomial {
        chain,
        exps: c.marks.clone(),
    };
    // round-trip to validate the result is really a basis element image
    let back = phi(c.n(), &u)?;
    if back != *c {
        return Err(Error::invalid("code is not in the image of phi"));
    }
    Ok(u)
}

/// `φ~`: a monomial `x_{F_1}^{a_1} ... x_{F_k}^{a_k}` of the augmented basis
/// of the Boolean matroid maps to an extended code. When `a_1 = 1` the
/// positions of `F_j ∖ F_{j−1}` get the letter `j − 1`, positions outside
/// `F_k` get `∞`, and `f(j) = a_{j+1}` for `j ∈ [k−1]`; when `a_1 ≥ 2` the
/// positions get letter `j`, `f(1) = a_1 − 1`, and `f(j) = a_j` for `j ≥ 2`.
/// The empty monomial maps to the all-`∞` word.
pub fn phi_tilde(n: u32, u: &FYMonomial) -> Result<ExtendedCode> {
    if u.chain.is_empty() {
        return ExtendedCode::new(vec![Letter::Inf; n as usize], vec![]);
    }
    let a1 = u.exps[0];
    let mut alpha = vec![Letter::Inf; n as usize];
    let mut prev = Subset::EMPTY;
    for (j, f) in (1u32..).zip(&u.chain) {
        if !prev.is_proper_subset_of(*f) {
            return Err(Error::invalid("chain is not strictly increasing"));
        }
        let letter = if a1 == 1 { j - 1 } else { j };
        for i in f.difference(prev).members() {
            alpha[(i - 1) as usize] = Letter::Num(letter);
        }
        prev = *f;
    }
    let marks: Vec<u32> = if a1 == 1 {
        u.exps[1..].to_vec()
    } else {
        let mut m = u.exps.clone();
        m[0] = a1 - 1;
        m
    };
    ExtendedCode::new(alpha, marks)
}

/// Inverse of [`phi_tilde`], branching on whether the letter `0` occurs.
pub fn phi_tilde_inv(c: &ExtendedCode) -> Result<FYMonomial> {
    if c.alpha.iter().all(|&a| a == Letter::Inf) {
        if !c.marks.is_empty() {
            return Err(Error::invalid("the all-inf word carries no marks"));
        }
        return Ok(FYMonomial::one());
    }
    let has_zero = c.alpha.contains(&Letter::Num(0));
    let k = c.max_letter() + if has_zero { 1 } else { 0 };
    let mut chain = Vec::with_capacity(k as usize);
    for j in 0..k {
        // F_{j+1} collects the letters up to j (zero-based case) or j+1
        let cutoff = if has_zero { j } else { j + 1 };
        let f = c
            .alpha
            .iter()
            .enumerate()
            .filter(|&(_, &a)| matches!(a, Letter::Num(v) if v <= cutoff))
            .fold(Subset::EMPTY, |acc, (i, _)| acc.insert(i as u32 + 1));
        chain.push(f);
    }
    let exps: Vec<u32> = if has_zero {
        let mut e = vec![1];
        e.extend_from_slice(&c.marks);
        e
    } else {
        let mut e = c.marks.clone();
        e[0] += 1;
        e
    };
    let u = FYMonomial { chain, exps };
    let back = phi_tilde(c.n(), &u)?;
    if back != *c {
        return Err(Error::invalid("code is not in the image of phi_tilde"));
    }
    Ok(u)
}

/// Outcome of an equivariance sweep: either everything commuted, or the
/// first counterexample found.
#[derive(Clone, Debug)]
pub enum EquivarianceReport {
    Ok { checked: usize },
    Counterexample { perm: Perm, monomial: FYMonomial },
}

impl EquivarianceReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, EquivarianceReport::Ok { .. })
    }
}

/// Check `φ(σ·u) = σ·φ(u)` for all given monomials and permutations.
pub fn check_phi_equivariance(
    n: u32,
    monomials: &[FYMonomial],
    perms: &[Perm],
) -> Result<EquivarianceReport> {
    let failures: Vec<(Perm, FYMonomial)> = maybe_par_flat_map(perms, |sigma| {
        let mut bad = Vec::new();
        for u in monomials {
            let lhs = phi(n, &crate::chow::act_fy(sigma, u));
            let rhs = phi(n, u).map(|c| act_code(sigma, &c));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => bad.push((sigma.clone(), u.clone())),
            }
        }
        bad
    });
    Ok(report(failures, monomials.len() * perms.len()))
}

/// Check `φ~(σ·u) = σ·φ~(u)` for all given monomials and permutations.
pub fn check_phi_tilde_equivariance(
    n: u32,
    monomials: &[FYMonomial],
    perms: &[Perm],
) -> Result<EquivarianceReport> {
    let failures: Vec<(Perm, FYMonomial)> = maybe_par_flat_map(perms, |sigma| {
        let mut bad = Vec::new();
        for u in monomials {
            let lhs = phi_tilde(n, &crate::chow::act_fy(sigma, u));
            let rhs = phi_tilde(n, u).map(|c| act_extended_code(sigma, &c));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => bad.push((sigma.clone(), u.clone())),
            }
        }
        bad
    });
    Ok(report(failures, monomials.len() * perms.len()))
}

fn report(mut failures: Vec<(Perm, FYMonomial)>, checked: usize) -> EquivarianceReport {
    if let Some((perm, monomial)) = failures.drain(..).next() {
        EquivarianceReport::Counterexample { perm, monomial }
    } else {
        EquivarianceReport::Ok { checked }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{aug_fy_basis, fy_basis_matroid};
    use crate::matroid::Matroid;
    use crate::perm::all_perms;

    fn sub(n: u32, m: &[u32]) -> Subset {
        Subset::from_members(n, m).unwrap()
    }

    #[test]
    fn phi_on_the_degree_two_table() {
        let u = FYMonomial {
            chain: vec![sub(4, &[1, 2]), Subset::full(4)],
            exps: vec![1, 1],
        };
        assert_eq!(phi(4, &u).unwrap().to_string(), "11*22*");
        let u = FYMonomial {
            chain: vec![sub(4, &[1, 3]), Subset::full(4)],
            exps: vec![1, 1],
        };
        assert_eq!(phi(4, &u).unwrap().to_string(), "121*2*");
        let u = FYMonomial {
            chain: vec![sub(4, &[1, 2, 4])],
            exps: vec![2],
        };
        assert_eq!(phi(4, &u).unwrap().to_string(), "1101*");
        let u = FYMonomial {
            chain: vec![Subset::full(4)],
            exps: vec![2],
        };
        assert_eq!(phi(4, &u).unwrap().to_string(), "111*1");
    }

    #[test]
    fn phi_is_a_graded_bijection_on_boolean_matroids() {
        for n in 1..=6u32 {
            let basis = fy_basis_matroid(&Matroid::boolean(n).unwrap());
            let mut codes = std::collections::BTreeSet::new();
            for u in basis.iter() {
                let c = phi(n, u).unwrap();
                assert_eq!(c.index(), u.degree() as i64);
                assert_eq!(&phi_inv(&c).unwrap(), u);
                assert!(codes.insert(c));
            }
            let enumerated: usize = crate::codes::enumerate_codes(n)
                .iter()
                .map(|g| g.len())
                .sum();
            assert_eq!(codes.len(), enumerated);
        }
    }

    #[test]
    fn phi_tilde_worked_examples() {
        // u1 = x_{14} x_{1247} x_{1245679}^2 with n = 9
        let u1 = FYMonomial {
            chain: vec![
                sub(9, &[1, 4]),
                sub(9, &[1, 2, 4, 7]),
                sub(9, &[1, 2, 4, 5, 6, 7, 9]),
            ],
            exps: vec![1, 1, 2],
        };
        let c1 = phi_tilde(9, &u1).unwrap();
        assert_eq!(c1.to_string(), "01z0221*z2*");
        assert_eq!(c1.index(), 3);
        assert_eq!(phi_tilde_inv(&c1).unwrap(), u1);

        // u2: same chain, leading exponent 2
        let u2 = FYMonomial {
            chain: vec![
                sub(9, &[1, 4]),
                sub(9, &[1, 2, 4, 7]),
                sub(9, &[1, 2, 4, 5, 6, 7, 9]),
            ],
            exps: vec![2, 1, 2],
        };
        let c2 = phi_tilde(9, &u2).unwrap();
        assert_eq!(c2.to_string(), "12z1*332*z3*");
        assert_eq!(c2.index(), 4);
        assert_eq!(phi_tilde_inv(&c2).unwrap(), u2);
    }

    #[test]
    fn phi_tilde_is_a_graded_bijection() {
        for n in 1..=5u32 {
            let basis = aug_fy_basis(&Matroid::boolean(n).unwrap());
            let mut codes = std::collections::BTreeSet::new();
            for u in basis.iter() {
                let c = phi_tilde(n, u).unwrap();
                assert_eq!(c.index(), u.degree() as i64 - 1);
                assert_eq!(&phi_tilde_inv(&c).unwrap(), u);
                assert!(codes.insert(c));
            }
            let enumerated: usize = crate::codes::enumerate_extended_codes(n)
                .iter()
                .map(|g| g.len())
                .sum();
            assert_eq!(codes.len(), enumerated);
        }
    }

    #[test]
    fn both_maps_are_equivariant() {
        for n in 2..=5u32 {
            let perms = all_perms(n);
            let basis: Vec<FYMonomial> = fy_basis_matroid(&Matroid::boolean(n).unwrap())
                .iter()
                .cloned()
                .collect();
            assert!(check_phi_equivariance(n, &basis, &perms).unwrap().is_ok());
            let basis: Vec<FYMonomial> = aug_fy_basis(&Matroid::boolean(n).unwrap())
                .iter()
                .cloned()
                .collect();
            assert!(check_phi_tilde_equivariance(n, &basis, &perms)
                .unwrap()
                .is_ok());
        }
    }

    #[test]
    fn inverse_rejects_garbage() {
        // alpha in which letter 2 appears inside F_1's positions scrambled
        let c = Code::new(vec![2, 1, 1, 2], vec![1, 1]).unwrap();
        assert!(phi_inv(&c).is_ok()); // positions are fine: F_1 = {2,3}
        let basis_free = Code::new(vec![0, 0, 0], vec![]).unwrap();
        assert_eq!(phi_inv(&basis_free).unwrap(), FYMonomial::one());
    }
}
