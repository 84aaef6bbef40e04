//! Manifold-flavoured classification of augmental complexes.
//!
//! The homological boundary of a pure n-complex collects the faces whose
//! local homology vanishes in degree n.  On quasi-manifolds it is
//! automatically a subcomplex; elsewhere we close it downward and warn.

use crate::complex::{Complex, ExtendedDim, Simplex};
use crate::graded::Piece;
use crate::homology::{homology_complex, homology_pair, local_homology, Coeff};
use serde::{Deserialize, Serialize};

/// Orientability is a tristate: it is undefined for the Void complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientable {
    True,
    False,
    Undefined,
}

/// Everything `classify` knows about a complex over one coefficient ring.
#[derive(Clone, Debug)]
pub struct ManifoldReport {
    pub ring: Coeff,
    pub dim: ExtendedDim,
    pub is_pseudo: bool,
    pub is_quasi: bool,
    pub is_homology_manifold: bool,
    pub is_homology_sphere: bool,
    pub boundary: Complex,
    /// Set when the raw boundary face set was not downward closed (only
    /// possible on non-quasi input) and had to be closed.
    pub boundary_closure_warning: bool,
    pub orientable: Orientable,
    pub components: Vec<Complex>,
}

/// The cyclic module of the ring: R itself (rank 1 free, no torsion).
pub fn is_ring_cyclic(p: &Piece) -> bool {
    p.rank == 1 && p.torsion.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    VoidInput,
    NotPure,
}

impl std::fmt::Display for ManifoldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ManifoldError::VoidInput => write!(f, "boundary of the Void complex is not defined"),
            ManifoldError::NotPure => write!(f, "boundary requires a pure complex"),
        }
    }
}

impl std::error::Error for ManifoldError {}

/// Homological boundary: faces whose local homology in the top degree
/// vanishes, closed downward.  Returns the boundary complex and whether a
/// closure fix-up was needed.
pub fn boundary(c: &Complex, ring: Coeff) -> Result<(Complex, bool), ManifoldError> {
    let n = match c.dim() {
        ExtendedDim::MinusInfinity => return Err(ManifoldError::VoidInput),
        ExtendedDim::Finite(n) => n,
    };
    if !c.is_pure() {
        return Err(ManifoldError::NotPure);
    }
    let raw: Vec<Simplex> = c
        .faces()
        .filter(|s| local_homology(c, s, ring).piece(n).is_zero())
        .cloned()
        .collect();
    if raw.is_empty() {
        return Ok((Complex::void(), false));
    }
    let bd = Complex::from_facets(&raw);
    // from_facets closes downward; the warning fires when that added faces.
    let warning = bd.n_faces() != raw.len();
    Ok((bd, warning))
}

/// Each submaximal candidate dimension-(n−1) face lies in at most two
/// n-faces (condition β of the pseudomanifold definition).
fn beta_condition(c: &Complex, n: i32) -> bool {
    if n < 1 {
        return true;
    }
    let top = c.faces_of_dim(n);
    c.faces_of_dim(n - 1)
        .iter()
        .all(|f| top.iter().filter(|t| f.is_subset_of(t)).count() <= 2)
}

fn zero_over(c: &Complex, degree: i32, ring: Coeff) -> bool {
    homology_complex(c, ring).piece(degree).is_zero()
}

/// Classify a complex over a ring.  Dimensions ≤ 0 are special-cased: the
/// only manifolds there are Void, `{∅}`, `•` and `••`.
pub fn classify(c: &Complex, ring: Coeff) -> ManifoldReport {
    let dim = c.dim();
    let (bd, warn) = match boundary(c, ring) {
        Ok(b) => b,
        Err(_) => (Complex::void(), false),
    };
    let orientable = orientable_with_boundary(c, &bd, ring);
    let components = bd.strong_components();
    let mut report = ManifoldReport {
        ring,
        dim,
        is_pseudo: false,
        is_quasi: false,
        is_homology_manifold: false,
        is_homology_sphere: false,
        boundary: bd,
        boundary_closure_warning: warn,
        orientable,
        components,
    };
    let n = match dim {
        ExtendedDim::MinusInfinity => {
            // Void: vacuously a manifold of every kind, but not a sphere.
            report.is_pseudo = true;
            report.is_quasi = true;
            report.is_homology_manifold = true;
            report.components = Vec::new();
            return report;
        }
        ExtendedDim::Finite(n) => n,
    };
    if n <= 0 {
        let n_verts = c.vertices().len();
        let small_manifold = c.is_empty_complex() || n_verts == 1 || (n_verts == 2 && n == 0);
        report.is_pseudo = small_manifold;
        report.is_quasi = small_manifold;
        report.is_homology_manifold = small_manifold;
        // S^{-1} = {∅} and S^0 = •• are the spheres here.
        report.is_homology_sphere = c.is_empty_complex() || n_verts == 2;
        return report;
    }

    report.is_pseudo =
        c.is_pure() && beta_condition(c, n) && c.is_strongly_connected();

    report.is_quasi = beta_condition(c, n)
        && c.faces().all(|s| {
            let lk = c.link(s);
            match lk.dim() {
                ExtendedDim::Finite(d) if d >= 1 => zero_over(&lk, 0, ring),
                _ => true,
            }
        });

    let link_conditions = |need_cyclic_everywhere: bool| -> bool {
        c.faces().all(|s| {
            if s.is_empty() && !need_cyclic_everywhere {
                return true;
            }
            let lk = c.link(s);
            let h = homology_complex(&lk, ring);
            let top = n - s.card() as i32;
            let top_piece = h.piece(top);
            let top_ok = if need_cyclic_everywhere {
                is_ring_cyclic(&top_piece)
            } else {
                top_piece.is_zero() || is_ring_cyclic(&top_piece)
            };
            top_ok && h.degrees().iter().all(|&d| d == top)
        })
    };

    report.is_homology_manifold = zero_over(c, 0, ring) && link_conditions(false);
    report.is_homology_sphere = link_conditions(true);
    report
}

fn orientable_with_boundary(c: &Complex, bd: &Complex, ring: Coeff) -> Orientable {
    let n = match c.dim() {
        ExtendedDim::MinusInfinity => return Orientable::Undefined,
        ExtendedDim::Finite(n) => n,
    };
    let top = homology_pair(c, bd, ring).piece(n);
    if is_ring_cyclic(&top) {
        Orientable::True
    } else {
        Orientable::False
    }
}

/// Orientability over a ring: the top relative homology against the
/// homological boundary is the cyclic module.  Undefined for Void.
pub fn orientable(c: &Complex, ring: Coeff) -> Orientable {
    match boundary(c, ring) {
        Ok((bd, _)) => orientable_with_boundary(c, &bd, ring),
        Err(_) => Orientable::Undefined,
    }
}

/// Maximal strongly connected components of the boundary, each closed
/// downward.  Empty when the boundary is Void.
pub fn boundary_components(c: &Complex, ring: Coeff) -> Result<Vec<Complex>, ManifoldError> {
    Ok(boundary(c, ring)?.0.strong_components())
}

/// Which product the boundary formula is checked for.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingOp {
    Join,
    Product,
}

/// Outcome of checking `Bd(a ∇ b) = (Bd a ∇ b) ∪ (a ∇ Bd b)` (with the
/// point-product special case `Bd(• × Σ) = • × Bd Σ`).
#[derive(Clone, Debug)]
pub struct BoundaryFormulaReport {
    pub op: PairingOp,
    pub pass: bool,
    /// First simplex in the symmetric difference, if the sides disagree.
    pub witness: Option<Simplex>,
    pub lhs: Complex,
    pub rhs: Complex,
    /// Both factors satisfied the theorem's quasi-manifold hypothesis.
    pub hypotheses_ok: bool,
    pub note: String,
}

/// Check the boundary formula for a join or ordered product of two complexes.
pub fn verify_boundary_formula(
    a: &Complex,
    b: &Complex,
    ring: Coeff,
    op: PairingOp,
) -> Result<BoundaryFormulaReport, ManifoldError> {
    let quasi = |x: &Complex| classify(x, ring).is_quasi;
    // The product statement needs factors with at least one vertex: a {∅}
    // factor collapses the product to {∅} while the right-hand side keeps
    // the other factor's boundary.
    let dims_ok = op == PairingOp::Join
        || (a.dim() >= ExtendedDim::Finite(0) && b.dim() >= ExtendedDim::Finite(0));
    let hypotheses_ok = quasi(a) && quasi(b) && dims_ok;
    let bd_of = |x: &Complex| -> Result<Complex, ManifoldError> {
        if x.is_void() {
            Ok(Complex::void())
        } else {
            Ok(boundary(x, ring)?.0)
        }
    };
    let (combined, rhs) = match op {
        PairingOp::Join => {
            let (j, off) = a.join_with_offset(b);
            let rhs = bd_of(a)?
                .join_using_offset(b, off)
                .union(&a.join_using_offset(&bd_of(b)?, off));
            (j, rhs)
        }
        PairingOp::Product => {
            let p = a.product_ordered(b);
            let a_is_point = a.vertices().len() == 1 && a.dim() == ExtendedDim::Finite(0);
            let b_is_point = b.vertices().len() == 1 && b.dim() == ExtendedDim::Finite(0);
            let rhs = if a_is_point {
                a.product_ordered(&bd_of(b)?)
            } else if b_is_point {
                bd_of(a)?.product_ordered(b)
            } else {
                bd_of(a)?
                    .product_ordered(b)
                    .union(&a.product_ordered(&bd_of(b)?))
            };
            (p, rhs)
        }
    };
    let lhs = bd_of(&combined)?;
    let witness = lhs
        .faces()
        .find(|s| !rhs.contains(s))
        .or_else(|| rhs.faces().find(|s| !lhs.contains(s)))
        .cloned();
    let pass = lhs == rhs;
    let note = if hypotheses_ok {
        String::new()
    } else if !dims_ok {
        "product factors must have at least one vertex; the formula is not guaranteed".to_string()
    } else {
        "factors are not both quasi-manifolds; the formula is not guaranteed".to_string()
    };
    Ok(BoundaryFormulaReport { op, pass, witness, lhs, rhs, hypotheses_ok, note })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[u32]]) -> Complex {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn boundary_of_tiny_complexes() {
        // Bd(•) = {∅}.
        let (bd, warn) = boundary(&Complex::point(1), Coeff::Int).unwrap();
        assert_eq!(bd, Complex::empty());
        assert!(!warn);
        // Bd(••) = Void.
        let (bd, _) = boundary(&c(&[&[1], &[2]]), Coeff::Int).unwrap();
        assert!(bd.is_void());
        // Bd(1-ball) = 0-sphere, including ∅.
        let (bd, _) = boundary(&c(&[&[1, 2]]), Coeff::Int).unwrap();
        assert_eq!(bd, c(&[&[1], &[2]]));
        // Bd({∅}) = Void.
        let (bd, _) = boundary(&Complex::empty(), Coeff::Int).unwrap();
        assert!(bd.is_void());
        assert!(boundary(&Complex::void(), Coeff::Int).is_err());
    }

    #[test]
    fn circle_is_closed_manifold() {
        let r = classify(&c(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]), Coeff::Int);
        assert!(r.is_pseudo && r.is_quasi && r.is_homology_manifold && r.is_homology_sphere);
        assert!(r.boundary.is_void());
        assert_eq!(r.orientable, Orientable::True);
        assert!(r.components.is_empty());
    }

    #[test]
    fn wedge_of_triangles_is_not_pseudo() {
        let r = classify(&c(&[&[1, 2, 3], &[3, 4, 5]]), Coeff::Int);
        assert!(!r.is_pseudo);
        assert!(!r.is_quasi);
    }

    #[test]
    fn degenerate_classifications() {
        let void = classify(&Complex::void(), Coeff::Int);
        assert!(void.is_pseudo && void.is_quasi && void.is_homology_manifold);
        assert!(!void.is_homology_sphere);
        assert_eq!(void.orientable, Orientable::Undefined);
        let e = classify(&Complex::empty(), Coeff::Int);
        assert!(e.is_homology_manifold && e.is_homology_sphere);
        assert_eq!(e.orientable, Orientable::True);
        let p = classify(&Complex::point(1), Coeff::Int);
        assert!(p.is_homology_manifold && !p.is_homology_sphere);
        let s0 = classify(&c(&[&[1], &[2]]), Coeff::Int);
        assert!(s0.is_homology_sphere);
        let three = classify(&c(&[&[1], &[2], &[3]]), Coeff::Int);
        assert!(!three.is_pseudo && !three.is_homology_manifold);
    }

    #[test]
    fn orientability_of_the_projective_plane() {
        let rp2 = crate::corpus::get("rp2_6").unwrap();
        assert_eq!(orientable(&rp2, Coeff::Int), Orientable::False);
        assert_eq!(orientable(&rp2, Coeff::PrimeField(2)), Orientable::True);
        assert_eq!(orientable(&crate::corpus::get("s1_3").unwrap(), Coeff::Int), Orientable::True);
    }

    #[test]
    fn moebius_boundary_is_a_circle() {
        let m = crate::corpus::get("moebius5").unwrap();
        let (bd, warn) = boundary(&m, Coeff::Int).unwrap();
        assert!(!warn);
        // The boundary of the 5-vertex Moebius band is a 5-cycle.
        assert_eq!(bd.f_vector(), vec![1, 5, 5]);
        let comps = boundary_components(&m, Coeff::Int).unwrap();
        assert_eq!(comps.len(), 1);
    }

    #[test]
    fn cylinder_boundary_is_two_circles() {
        let cyl = crate::corpus::get("cylinder").unwrap();
        let comps = boundary_components(&cyl, Coeff::Int).unwrap();
        assert_eq!(comps.len(), 2);
        for comp in comps {
            assert_eq!(comp.f_vector(), vec![1, 3, 3]);
        }
        assert_eq!(orientable(&cyl, Coeff::Int), Orientable::True);
    }

    #[test]
    fn boundary_formula_tiny_cases() {
        let s0 = c(&[&[1], &[2]]);
        let r = verify_boundary_formula(&s0, &s0, Coeff::Int, PairingOp::Join).unwrap();
        assert!(r.pass, "witness: {:?}", r.witness);
        assert!(r.lhs.is_void());
        let ball = c(&[&[1, 2]]);
        let r = verify_boundary_formula(&ball, &ball, Coeff::Int, PairingOp::Product).unwrap();
        assert!(r.pass, "witness: {:?}", r.witness);
        // Bd(square) is a circle.
        assert_eq!(r.lhs.f_vector(), vec![1, 4, 4]);
        let pt = Complex::point(1);
        let r = verify_boundary_formula(&pt, &ball, Coeff::Int, PairingOp::Product).unwrap();
        assert!(r.pass);
    }
}
