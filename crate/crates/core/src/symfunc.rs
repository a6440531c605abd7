//! Symmetric functions in the complete homogeneous basis, Frobenius
//! characteristics of code orbits, and the Eulerian generating-function
//! identities.

use std::collections::BTreeMap;
use std::fmt;

use crate::codes::{code_orbits, enumerate_codes, enumerate_extended_codes, extended_code_orbits, Orbit};
use crate::{Error, Result};

/// An integer partition, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// An integer combination of complete homogeneous symmetric functions
/// `h_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HPolynomial {
    terms: BTreeMap<Partition, i64>,
}

impl HPolynomial {
    pub fn zero() -> HPolynomial {
        HPolynomial::default()
    }

    /// `h_lambda` itself.
    pub fn h(lambda: Partition) -> HPolynomial {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, 1);
        HPolynomial { terms }
    }

    /// The unit `h_∅ = 1`.
    pub fn one() -> HPolynomial {
        HPolynomial::h(Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(lambda).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &HPolynomial) -> HPolynomial {
        let mut out = self.clone();
        for (l, &c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HPolynomial) -> HPolynomial {
        let mut out = self.clone();
        for (l, &c) in &other.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> HPolynomial {
        let mut out = HPolynomial::zero();
        for (l, &c) in &self.terms {
            out.add_term(l.clone(), c * k);
        }
        out
    }

    /// Product: `h_lambda · h_mu = h_{lambda ∪ mu}`, extended bilinearly.
    pub fn multiply(&self, other: &HPolynomial) -> HPolynomial {
        let mut out = HPolynomial::zero();
        for (l, &cl) in &self.terms {
            for (m, &cm) in &other.terms {
                let mut parts = l.0.clone();
                parts.extend_from_slice(&m.0);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition(parts), cl * cm);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    /// Specialize to dimensions: `h_lambda` has dimension `n! / prod l_i!`
    /// as the character of the permutation module `M^lambda` of `S_n`.
    pub fn dimension(&self, n: u32) -> i64 {
        let mut out = 0i64;
        for (l, c) in self.terms() {
            assert_eq!(l.weight(), n, "term {l} is not homogeneous of weight {n}");
            let mut dim: i64 = 1;
            let mut seen = 0u32;
            for &p in &l.0 {
                for k in 1..=p {
                    seen += 1;
                    dim = dim * seen as i64 / k as i64;
                }
            }
            out += c * dim;
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(l, c)| serde_json::json!({ "lambda": l.0, "coeff": c }))
                .collect(),
        )
    }
}

impl fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            if l.0.is_empty() {
                write!(f, "1")?;
            } else {
                write!(
                    f,
                    "h[{}]",
                    l.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                )?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `t` with [`HPolynomial`] coefficients; index `j` is the
/// coefficient of `t^j`.
pub type TGradedSym = Vec<HPolynomial>;

/// The Frobenius characteristic of a union of orbits: each orbit with
/// content `lambda` contributes `h_lambda`.
pub fn frobenius_of_orbits(orbits: &[Orbit]) -> HPolynomial {
    let mut out = HPolynomial::zero();
    for o in orbits {
        out.add_term(Partition(o.content.clone()), 1);
    }
    out
}

/// The Eulerian polynomial `A_n(t)` as coefficients `[c_0, ..., c_{n-1}]`,
/// counting permutations by descents; `A_0 = 1`.
pub fn eulerian(n: u32) -> Vec<u64> {
    // standard recurrence A(n, j) = (j+1) A(n-1, j) + (n-j) A(n-1, j-1)
    let mut row = vec![1u64];
    for m in 2..=n as usize {
        let mut next = vec![0u64; m];
        for (j, item) in next.iter_mut().enumerate() {
            let a = if j < row.len() { (j as u64 + 1) * row[j] } else { 0 };
            let b = if j >= 1 && j - 1 < row.len() {
                (m as u64 - j as u64) * row[j - 1]
            } else {
                0
            };
            *item = a + b;
        }
        row = next;
    }
    if n == 0 {
        vec![1]
    } else {
        row
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut r = 1u64;
    for i in 1..=k as u64 {
        r = r * (n as u64 - k as u64 + i) / i;
    }
    r
}

/// The binomial Eulerian polynomial `A~_n(t) = 1 + t Σ_{k≥1} C(n,k) A_k(t)`.
pub fn binomial_eulerian(n: u32) -> Vec<u64> {
    let mut out = vec![0u64; (n + 1) as usize];
    out[0] = 1;
    for k in 1..=n {
        let c = binomial(n, k);
        for (j, &a) in eulerian(k).iter().enumerate() {
            out[j + 1] += c * a;
        }
    }
    out
}

/// The graded Frobenius characteristic `Q_n(t)` of the code representation:
/// the `t^j` coefficient is the sum of `h_lambda` over orbits of index-`j`
/// codes. `Q_0 = 1`.
pub fn q_polynomial(n: u32) -> TGradedSym {
    if n == 0 {
        return vec![HPolynomial::one()];
    }
    enumerate_codes(n)
        .iter()
        .map(|group| frobenius_of_orbits(&code_orbits(n, group)))
        .collect()
}

/// The graded Frobenius characteristic `Q~_n(t)` of the extended-code
/// representation: the `t^j` coefficient collects orbits of index `j − 1`.
/// `Q~_0 = 1`.
pub fn q_tilde_polynomial(n: u32) -> TGradedSym {
    if n == 0 {
        return vec![HPolynomial::one()];
    }
    enumerate_extended_codes(n)
        .iter()
        .map(|group| frobenius_of_orbits(&extended_code_orbits(n, group)))
        .collect()
}

fn t_multiply(a: &TGradedSym, b: &TGradedSym) -> TGradedSym {
    let mut out = vec![HPolynomial::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&p.multiply(q));
        }
    }
    out
}

fn t_add(a: &TGradedSym, b: &TGradedSym) -> TGradedSym {
    let len = a.len().max(b.len());
    (0..len)
        .map(|j| {
            let x = a.get(j).cloned().unwrap_or_default();
            let y = b.get(j).cloned().unwrap_or_default();
            x.add(&y)
        })
        .collect()
}

fn t_sub(a: &TGradedSym, b: &TGradedSym) -> TGradedSym {
    let len = a.len().max(b.len());
    (0..len)
        .map(|j| {
            let x = a.get(j).cloned().unwrap_or_default();
            let y = b.get(j).cloned().unwrap_or_default();
            x.sub(&y)
        })
        .collect()
}

fn is_t_zero(a: &TGradedSym) -> bool {
    a.iter().all(|p| p.is_zero())
}

fn h_single(k: u32) -> HPolynomial {
    if k == 0 {
        HPolynomial::one()
    } else {
        HPolynomial::h(Partition(vec![k]))
    }
}

/// Verify the generating-function identity
/// `(Σ_n Q_n z^n)(H(tz) − tH(z)) = (1 − t) H(z)` through degree `N` in `z`,
/// where `H(z) = Σ_k h_k z^k`; everything stays polynomial, no division.
pub fn verify_gf_identity(upto: u32) -> Result<()> {
    let q: Vec<TGradedSym> = (0..=upto).map(q_polynomial).collect();
    for n in 0..=upto {
        // z^n coefficient of the left side:
        //   Σ_{a+k=n} Q_a · (h_k t^k − t h_k)
        let mut lhs: TGradedSym = vec![HPolynomial::zero()];
        for a in 0..=n {
            let k = n - a;
            let hk = h_single(k);
            let mut factor: TGradedSym = vec![HPolynomial::zero(); (k + 1).max(2) as usize];
            factor[k as usize] = factor[k as usize].add(&hk);
            factor[1] = factor[1].sub(&hk);
            lhs = t_add(&lhs, &t_multiply(&q[a as usize], &factor));
        }
        // z^n coefficient of the right side: (1 − t) h_n
        let hn = h_single(n);
        let rhs: TGradedSym = vec![hn.clone(), hn.scale(-1)];
        if !is_t_zero(&t_sub(&lhs, &rhs)) {
            return Err(Error::invalid(format!(
                "generating-function identity fails at z^{n}"
            )));
        }
    }
    Ok(())
}

/// Verify the recurrence `Q~_n = h_n + t Σ_{k=1..n} h_{n−k} Q_k(t)`
/// for one `n`.
pub fn verify_recurrence(n: u32) -> Result<()> {
    let mut rhs: TGradedSym = vec![h_single(n)];
    for k in 1..=n {
        let prod = t_multiply(&vec![h_single(n - k)], &q_polynomial(k));
        // shift by t
        let mut shifted = vec![HPolynomial::zero()];
        shifted.extend(prod);
        rhs = t_add(&rhs, &shifted);
    }
    let lhs = q_tilde_polynomial(n);
    if !is_t_zero(&t_sub(&lhs, &rhs)) {
        return Err(Error::invalid(format!(
            "extended-code recurrence fails at n = {n}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(parts: &[u32]) -> HPolynomial {
        HPolynomial::h(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn h_algebra_basics() {
        let p = h(&[2]).multiply(&h(&[1]));
        assert_eq!(p, h(&[2, 1]));
        assert_eq!(h(&[2, 1]).dimension(3), 3);
        assert_eq!(h(&[1, 1, 1]).dimension(3), 6);
        assert_eq!(h(&[3]).dimension(3), 1);
        assert!(h(&[2]).sub(&h(&[2])).is_zero());
        assert_eq!(h(&[2, 1]).to_string(), "h[2,1]");
        assert_eq!(HPolynomial::one().multiply(&h(&[2])), h(&[2]));
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian(1), vec![1]);
        assert_eq!(eulerian(3), vec![1, 4, 1]);
        assert_eq!(eulerian(4), vec![1, 11, 11, 1]);
        assert_eq!(eulerian(5), vec![1, 26, 66, 26, 1]);
        // cross-check by descent counting
        for n in 1..=6u32 {
            let mut counts = vec![0u64; n as usize];
            for p in crate::perm::all_perms(n) {
                counts[p.descents() as usize] += 1;
            }
            counts.truncate(eulerian(n).len());
            assert_eq!(counts, eulerian(n));
        }
    }

    #[test]
    fn binomial_eulerian_rows() {
        assert_eq!(binomial_eulerian(2), vec![1, 3, 1]);
        assert_eq!(binomial_eulerian(3), vec![1, 7, 7, 1]);
        assert_eq!(binomial_eulerian(4), vec![1, 15, 33, 15, 1]);
    }

    #[test]
    fn q3_matches_the_known_expansion() {
        let q = q_polynomial(3);
        assert_eq!(q.len(), 3);
        assert_eq!(q[0], h(&[3]));
        assert_eq!(q[1], h(&[2, 1]).add(&h(&[3])));
        assert_eq!(q[2], h(&[3]));
    }

    #[test]
    fn q_tilde_3_slices() {
        let q = q_tilde_polynomial(3);
        assert_eq!(q.len(), 4);
        assert_eq!(q[0], h(&[3]));
        assert_eq!(q[1], h(&[2, 1]).scale(2).add(&h(&[3])));
        assert_eq!(q[2], h(&[2, 1]).scale(2).add(&h(&[3])));
        assert_eq!(q[3], h(&[3]));
    }

    #[test]
    fn dimensions_specialize_to_eulerian_numbers() {
        for n in 1..=6u32 {
            let dims: Vec<i64> = q_polynomial(n).iter().map(|p| p.dimension(n)).collect();
            assert_eq!(
                dims,
                eulerian(n).iter().map(|&c| c as i64).collect::<Vec<_>>()
            );
            let dims: Vec<i64> = q_tilde_polynomial(n)
                .iter()
                .map(|p| p.dimension(n))
                .collect();
            assert_eq!(
                dims,
                binomial_eulerian(n).iter().map(|&c| c as i64).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn generating_function_identity_holds() {
        verify_gf_identity(6).unwrap();
    }

    #[test]
    fn extended_recurrence_holds() {
        for n in 0..=6 {
            verify_recurrence(n).unwrap();
        }
    }
}
