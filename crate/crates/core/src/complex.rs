//! Abstract simplicial complexes with f/h-vectors and a combinatorial
//! isomorphism checker.

use std::collections::BTreeSet;

/// A finite abstract simplicial complex on vertices of type `V`.
///
/// Faces are stored as sorted vertex lists; the empty face is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex<V: Ord + Clone> {
    faces: BTreeSet<Vec<V>>,
}

impl<V: Ord + Clone> SimplicialComplex<V> {
    /// Build from an arbitrary face list, closing downward.
    pub fn from_faces<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Vec<V>>,
    {
        let mut out: BTreeSet<Vec<V>> = BTreeSet::new();
        out.insert(Vec::new());
        for f in faces {
            let mut f: Vec<V> = f;
            f.sort();
            f.dedup();
            // all subsets of f
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<V> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i].clone())
                    .collect();
                out.insert(sub);
            }
        }
        SimplicialComplex { faces: out }
    }

    pub fn faces(&self) -> &BTreeSet<Vec<V>> {
        &self.faces
    }

    pub fn contains_face(&self, face: &[V]) -> bool {
        let mut f = face.to_vec();
        f.sort();
        self.faces.contains(&f)
    }

    pub fn vertices(&self) -> Vec<V> {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f[0].clone())
            .collect()
    }

    /// Number of nonempty faces.
    pub fn num_faces(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len()).max().and_then(|m| m.checked_sub(1))
    }

    /// `(f_0, f_1, ...)`: face counts by dimension, excluding the empty face.
    pub fn f_vector(&self) -> Vec<usize> {
        let maxdim = self.faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut fv = vec![0usize; maxdim];
        for f in &self.faces {
            if !f.is_empty() {
                fv[f.len() - 1] += 1;
            }
        }
        fv
    }

    /// h-vector via the standard transformation
    /// `sum h_i x^(d-i) = sum f_(i-1) (x-1)^(d-i)`.
    pub fn h_vector(&self) -> Vec<i64> {
        let fv = self.f_vector();
        let d = fv.len();
        // coefficients of sum_{i=0..d} f_{i-1} (x-1)^{d-i}, f_{-1} = 1
        let mut poly = vec![0i64; d + 1]; // poly[k] = coeff of x^k
        for i in 0..=d {
            let fi = if i == 0 { 1 } else { fv[i - 1] as i64 };
            // (x-1)^(d-i)
            let e = d - i;
            for (k, coeff) in poly.iter_mut().enumerate().take(e + 1) {
                let sign = if (e - k).is_multiple_of(2) { 1 } else { -1 };
                *coeff += fi * sign * binom(e as i64, k as i64);
            }
        }
        // h_i is the coefficient of x^{d-i}
        (0..=d).map(|i| poly[d - i]).collect()
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut out = 1i64;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// True iff `vmap` is a bijection on vertices carrying faces to faces in both
/// directions.
pub fn complexes_isomorphic<V, W, F>(
    c1: &SimplicialComplex<V>,
    c2: &SimplicialComplex<W>,
    vmap: F,
) -> bool
where
    V: Ord + Clone,
    W: Ord + Clone,
    F: Fn(&V) -> Option<W>,
{
    let v1 = c1.vertices();
    let v2 = c2.vertices();
    let mut images: Vec<W> = Vec::with_capacity(v1.len());
    for v in &v1 {
        match vmap(v) {
            Some(w) => images.push(w),
            None => return false,
        }
    }
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != v1.len() || sorted != v2 {
        return false;
    }
    if c1.faces().len() != c2.faces().len() {
        return false;
    }
    for f in c1.faces() {
        let g: Vec<W> = f.iter().map(|v| vmap(v).unwrap()).collect();
        if !c2.contains_face(&g) {
            return false;
        }
    }
    // bijection on vertices + equal face counts + faces map to faces
    // already forces the inverse direction
    true
}
