//! Chain complexes of augmental simplicial complexes.  Chains start in
//! degree −1 (the empty simplex generates `C_{-1}`), the boundary of a
//! vertex is the empty simplex, and the boundary of the empty simplex is 0.

use crate::complex::{Complex, Simplex};
use crate::snf::IntMat;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Sparse integer matrix in triplet form (boundary entries are ±1, but the
/// type allows general entries for composed maps).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, entries: Vec::new() }
    }

    pub fn to_int_mat(&self) -> IntMat {
        let mut m = IntMat::zero(self.rows, self.cols);
        for &(i, j, v) in &self.entries {
            m.a[i][j] += BigInt::from(v);
        }
        m
    }

    /// Dense i64 form for small verification work.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for &(i, j, v) in &self.entries {
            m[i][j] += v;
        }
        m
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows);
        let a = self.to_dense();
        let b = other.to_dense();
        let mut entries = Vec::new();
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = 0i64;
                for k in 0..self.cols {
                    s += a[i][k] * b[k][j];
                }
                if s != 0 {
                    entries.push((i, j, s));
                }
            }
        }
        SparseMat { rows: self.rows, cols: other.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.to_dense().iter().all(|r| r.iter().all(|&v| v == 0))
    }
}

/// A bounded chain complex with a simplex basis per degree.
///
/// `basis[d]` lists the degree-`d` basis simplices in lexicographic order;
/// `boundary(d)` is the matrix of ∂_d : C_d → C_{d-1} in those bases.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    bases: BTreeMap<i32, Vec<Simplex>>,
    boundaries: BTreeMap<i32, SparseMat>,
}

impl ChainComplex {
    /// The augmental chain complex of a complex.  Void yields the zero chain
    /// complex; anything else starts at degree −1.
    pub fn augmental(c: &Complex) -> Self {
        Self::relative(c, &Complex::void())
    }

    /// Chains of `c` modulo chains of the subcomplex `sub` (Void for the
    /// absolute complex).  Basis: faces of `c` not in `sub`.
    pub fn relative(c: &Complex, sub: &Complex) -> Self {
        assert!(sub.is_subcomplex_of(c), "relative chain requires a subcomplex");
        let mut bases: BTreeMap<i32, Vec<Simplex>> = BTreeMap::new();
        for s in c.faces() {
            if !sub.contains(s) {
                bases.entry(s.dim()).or_default().push(s.clone());
            }
        }
        // BTreeSet iteration is lex within each cardinality already, but make
        // the ordering contract explicit.
        for b in bases.values_mut() {
            b.sort();
        }
        let index: BTreeMap<i32, BTreeMap<&Simplex, usize>> = bases
            .iter()
            .map(|(d, b)| (*d, b.iter().enumerate().map(|(i, s)| (s, i)).collect()))
            .collect();
        let mut boundaries = BTreeMap::new();
        for (&d, basis) in &bases {
            let rows = bases.get(&(d - 1)).map_or(0, |b| b.len());
            let mut m = SparseMat::zero(rows, basis.len());
            if let Some(lower) = index.get(&(d - 1)) {
                for (j, s) in basis.iter().enumerate() {
                    for (i, face) in s.boundary_faces().into_iter().enumerate() {
                        if let Some(&row) = lower.get(&face) {
                            let sign = if i % 2 == 0 { 1 } else { -1 };
                            m.entries.push((row, j, sign));
                        }
                    }
                }
            }
            boundaries.insert(d, m);
        }
        ChainComplex { bases, boundaries }
    }

    pub fn is_zero(&self) -> bool {
        self.bases.is_empty()
    }

    /// Degrees with a nonempty basis, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        self.bases.keys().copied().collect()
    }

    pub fn basis(&self, d: i32) -> &[Simplex] {
        self.bases.get(&d).map_or(&[], |b| b.as_slice())
    }

    pub fn dim_at(&self, d: i32) -> usize {
        self.bases.get(&d).map_or(0, |b| b.len())
    }

    /// Index of a basis simplex within its degree.
    pub fn index_of(&self, d: i32, s: &Simplex) -> Option<usize> {
        self.bases.get(&d)?.binary_search(s).ok()
    }

    /// The boundary matrix ∂_d (zero-sized if the degree is empty).
    pub fn boundary(&self, d: i32) -> SparseMat {
        self.boundaries
            .get(&d)
            .cloned()
            .unwrap_or_else(|| SparseMat::zero(self.dim_at(d - 1), self.dim_at(d)))
    }

    /// ∂∘∂ = 0 in every degree.
    pub fn check_boundary_squared(&self) -> bool {
        self.degrees()
            .iter()
            .all(|&d| self.boundary(d - 1).mul(&self.boundary(d)).is_zero())
    }

    /// Alternating sum of basis sizes (the reduced Euler characteristic for
    /// the absolute augmental complex).
    pub fn euler(&self) -> i64 {
        self.bases
            .iter()
            .map(|(d, b)| if d.rem_euclid(2) == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[u32]]) -> Complex {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn void_and_empty_chain() {
        assert!(ChainComplex::augmental(&Complex::void()).is_zero());
        let ch = ChainComplex::augmental(&Complex::empty());
        assert_eq!(ch.degrees(), vec![-1]);
        assert_eq!(ch.dim_at(-1), 1);
        assert!(ch.boundary(-1).is_zero());
    }

    #[test]
    fn vertex_boundary_hits_empty_simplex() {
        let ch = ChainComplex::augmental(&Complex::point(3));
        assert_eq!(ch.degrees(), vec![-1, 0]);
        let d0 = ch.boundary(0);
        assert_eq!((d0.rows, d0.cols), (1, 1));
        assert_eq!(d0.to_dense(), vec![vec![1]]);
    }

    #[test]
    fn triangle_chain_is_exactish() {
        let ch = ChainComplex::augmental(&c(&[&[1, 2, 3]]));
        assert_eq!(ch.degrees(), vec![-1, 0, 1, 2]);
        assert_eq!(ch.dim_at(1), 3);
        assert!(ch.check_boundary_squared());
        assert_eq!(ch.euler(), 0); // a cone is reduced-acyclic
        let d2 = ch.boundary(2).to_dense();
        // ∂{1,2,3} = {2,3} − {1,3} + {1,2} in lex basis [{1,2},{1,3},{2,3}].
        assert_eq!(d2, vec![vec![1], vec![-1], vec![1]]);
    }

    #[test]
    fn relative_drops_subcomplex_faces() {
        let t = c(&[&[1, 2, 3]]);
        let rim = t.skeleton(1);
        let ch = ChainComplex::relative(&t, &rim);
        assert_eq!(ch.degrees(), vec![2]);
        assert_eq!(ch.dim_at(2), 1);
        assert!(ch.boundary(2).is_zero());
        assert!(ch.check_boundary_squared());
    }
}
