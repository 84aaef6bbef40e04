//! Face-ring (Stanley–Reisner) invariants of a complex, computed without
//! materializing the ring: ideals are minimal non-face generator sets with a
//! membership oracle, and the ring-theoretic predicates (Cohen–Macaulay,
//! Buchsbaum, Gorenstein, k-CM) are the equivalent link-homology criteria.

use crate::complex::{Complex, ExtendedDim, Simplex, Vertex};
use crate::homology::{homology_complex, Coeff};
use crate::manifold::is_ring_cyclic;
use itertools::Itertools;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    VoidInput,
    UniverseTooSmall,
    SubsetTooLarge { k: usize, vertices: usize },
}

impl std::fmt::Display for RingError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingError::VoidInput => write!(f, "predicate not defined for the Void complex"),
            RingError::UniverseTooSmall => {
                write!(f, "universe must contain every vertex of the complex")
            }
            RingError::SubsetTooLarge { k, vertices } => {
                write!(f, "k-CM needs k-1 < #vertices (k={k}, #vertices={vertices})")
            }
        }
    }
}

impl std::error::Error for RingError {}

/// A squarefree monomial ideal, generated by the supports of its minimal
/// generators.  The unit ideal (for the Void complex) is generated by the
/// empty support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub generators: Vec<Simplex>,
    pub universe: BTreeSet<Vertex>,
}

impl MonomialIdeal {
    /// The face ideal of a complex over a universe of variables.
    pub fn of(c: &Complex, universe: &BTreeSet<Vertex>) -> Result<Self, RingError> {
        Ok(MonomialIdeal {
            generators: non_simplices(c, universe)?,
            universe: universe.clone(),
        })
    }
}

/// Minimal non-faces of `c` with respect to a universe of vertices:
/// sets outside the complex all of whose proper subsets are faces.
/// Void has the single non-face ∅ (the unit ideal); `{∅}` has every
/// singleton of the universe.
pub fn non_simplices(c: &Complex, universe: &BTreeSet<Vertex>) -> Result<Vec<Simplex>, RingError> {
    if !c.vertices().is_subset(universe) {
        return Err(RingError::UniverseTooSmall);
    }
    if c.is_void() {
        return Ok(vec![Simplex::empty()]);
    }
    // Every nonempty minimal non-face is (face ∪ {v}) for some face and some
    // universe vertex outside it.
    let mut out: BTreeSet<Simplex> = BTreeSet::new();
    for s in c.faces() {
        for v in universe {
            if s.contains(*v) {
                continue;
            }
            let cand = s.union(&Simplex::new([*v]));
            if !c.contains(&cand)
                && cand.boundary_faces().iter().all(|f| c.contains(f))
            {
                out.insert(cand);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A squarefree monomial (given by its support) lies in the face ideal iff
/// its support is a non-face.  The empty support is the unit 1, never in a
/// proper ideal, but in the unit ideal of the Void complex.
pub fn ideal_membership(support: &Simplex, c: &Complex) -> bool {
    !c.contains(support)
}

/// Hilbert function of the face ring, truncated, together with the exact
/// closed form `numerator(t) / (1-t)^krull_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub coefficients: Vec<u64>,
    pub truncation: usize,
    /// Krull dimension = dim c + 1 (0 for `{∅}` and for the trivial ring).
    pub krull_dim: i32,
    /// Coefficients of the numerator polynomial, constant term first.
    pub numerator: Vec<i64>,
}

impl HilbertFunction {
    pub fn value(&self, m: usize) -> u64 {
        self.coefficients[m]
    }
}

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut out = 1u128;
    for i in 0..k as u128 {
        out = out * (n as u128 - i) / (i + 1);
    }
    out as u64
}

/// Hilbert function of the face ring: H(0)=1 and
/// H(m) = Σ_j f_{j-1} · C(m-1, j-1) for m ≥ 1 (j = face cardinality).
/// The Void complex has the trivial ring: identically zero.
pub fn hilbert_function(c: &Complex, n: usize) -> HilbertFunction {
    if c.is_void() {
        return HilbertFunction {
            coefficients: vec![0; n + 1],
            truncation: n,
            krull_dim: 0,
            numerator: vec![0],
        };
    }
    let f = c.f_vector(); // f[j] = number of faces of cardinality j
    let d = c.dim().finite().unwrap() + 1; // Krull dimension
    let mut coefficients = vec![0u64; n + 1];
    coefficients[0] = 1;
    for (m, coeff) in coefficients.iter_mut().enumerate().skip(1) {
        *coeff = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, fj)| fj * binomial(m as i64 - 1, j as i64 - 1))
            .sum();
    }
    // Hilb(t) = Σ_j f_{j-1} t^j / (1-t)^j = numerator / (1-t)^d with
    // numerator = Σ_j f_{j-1} t^j (1-t)^{d-j}.
    let mut numerator = vec![0i64; d as usize + 1];
    for (j, fj) in f.iter().enumerate() {
        // t^j (1-t)^{d-j}
        for k in 0..=(d as usize - j) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            numerator[j + k] += *fj as i64 * sign * binomial((d as usize - j) as i64, k as i64) as i64;
        }
    }
    while numerator.len() > 1 && *numerator.last().unwrap() == 0 {
        numerator.pop();
    }
    HilbertFunction { coefficients, truncation: n, krull_dim: d, numerator }
}

fn reisner_vanishing(lk: &Complex, ring: Coeff) -> bool {
    let top = match lk.dim() {
        ExtendedDim::MinusInfinity => return true,
        ExtendedDim::Finite(d) => d,
    };
    homology_complex(lk, ring).degrees().iter().all(|&d| d >= top)
}

/// Reisner's criterion: for every face σ (including ∅) the link has no
/// homology below its dimension.
pub fn is_cohen_macaulay(c: &Complex, ring: Coeff) -> Result<bool, RingError> {
    if c.is_void() {
        return Err(RingError::VoidInput);
    }
    Ok(c.faces().all(|s| reisner_vanishing(&c.link(s), ring)))
}

/// Schenzel's criterion: pure, with the Reisner vanishing for every face
/// except ∅ (so global reduced homology below the top is allowed).
pub fn is_buchsbaum(c: &Complex, ring: Coeff) -> Result<bool, RingError> {
    if c.is_void() {
        return Err(RingError::VoidInput);
    }
    Ok(c.is_pure()
        && c.faces()
            .filter(|s| !s.is_empty())
            .all(|s| reisner_vanishing(&c.link(s), ring)))
}

/// Gorenstein: the core must look like a homology sphere — every link of the
/// core has the cyclic module exactly at its dimension and nothing below.
/// The small cores {∅}, • and •• qualify outright.
pub fn is_gorenstein(c: &Complex, ring: Coeff) -> Result<bool, RingError> {
    if c.is_void() {
        return Err(RingError::VoidInput);
    }
    let core = c.core();
    let nv = core.vertices().len();
    if core.is_empty_complex() || nv == 1 || (nv == 2 && core.dim() == ExtendedDim::Finite(0)) {
        return Ok(true);
    }
    let sphere_like = core.faces().all(|s| {
        let lk = core.link(s);
        let top = match lk.dim() {
            ExtendedDim::MinusInfinity => return true,
            ExtendedDim::Finite(d) => d,
        };
        let h = homology_complex(&lk, ring);
        is_ring_cyclic(&h.piece(top)) && h.degrees().iter().all(|&d| d == top)
    });
    Ok(sphere_like)
}

/// Baclawski's k-CM: deleting any k−1 vertices leaves a Cohen–Macaulay
/// complex of the same dimension.  k = 1 is plain CM.
pub fn is_k_cm(c: &Complex, k: usize, ring: Coeff) -> Result<bool, RingError> {
    if c.is_void() {
        return Err(RingError::VoidInput);
    }
    assert!(k >= 1);
    let verts: Vec<Vertex> = c.vertices().into_iter().collect();
    if k - 1 >= verts.len() && k > 1 {
        return Err(RingError::SubsetTooLarge { k, vertices: verts.len() });
    }
    let dim = c.dim();
    for t in verts.iter().combinations(k - 1) {
        let t: BTreeSet<Vertex> = t.into_iter().copied().collect();
        let del = c.delete_vertices(&t);
        if del.dim() != dim || !is_cohen_macaulay(&del, ring)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The costar formulation of 2-CM: Cohen–Macaulay and the codimension-one
/// homology of every costar vanishes.  Used to cross-check `is_k_cm(c, 2)`.
pub fn is_2cm_costar(c: &Complex, ring: Coeff) -> Result<bool, RingError> {
    if c.is_void() {
        return Err(RingError::VoidInput);
    }
    if !is_cohen_macaulay(c, ring)? {
        return Ok(false);
    }
    let n = c.dim().finite().unwrap();
    Ok(c.faces().all(|s| {
        homology_complex(&c.costar(s), ring).piece(n - 1).is_zero()
    }))
}
