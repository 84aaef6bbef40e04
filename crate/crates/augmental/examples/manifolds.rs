//! Manifold-like structure detected homologically: the pseudo / quasi /
//! homology-manifold hierarchy, boundaries, orientability and the boundary
//! product formula.
//!
//! Run with: cargo run --example manifolds

use augmental::manifold::{classify, verify_boundary_formula, PairingOp};
use augmental::{corpus, Coeff, Complex};

fn main() {
    for name in ["ball1", "s1_4", "moebius5", "cylinder", "rp2_6"] {
        let c = corpus::get(name).unwrap();
        let r = classify(&c, Coeff::Int);
        println!(
            "{name:<9} dim {} | pseudo {} quasi {} hm {} | orientable {:?} | boundary components {}",
            r.dim,
            r.is_pseudo,
            r.is_quasi,
            r.is_homology_manifold,
            r.orientable,
            r.components.len()
        );
    }
    println!();

    // The Möbius strip's boundary is a single 5-cycle.
    let moebius = corpus::get("moebius5").unwrap();
    let r = classify(&moebius, Coeff::Int);
    println!("Bd(Möbius₅) facets: {:?}", r.boundary.facets().iter().map(|s| s.to_string()).collect::<Vec<_>>());

    // Orientability can depend on the ring: RP² is orientable only in
    // characteristic 2.
    let rp2 = corpus::get("rp2_6").unwrap();
    println!(
        "RP² orientable over Z: {:?}, over Z₂: {:?}",
        classify(&rp2, Coeff::Int).orientable,
        classify(&rp2, Coeff::PrimeField(2)).orientable
    );
    println!();

    // Boundaries of joins factor: Bd(a ∗ b) = (Bd a ∗ b) ∪ (a ∗ Bd b).
    // Coning the Möbius strip kills its boundary circle and produces RP².
    let point = Complex::point(1);
    let rep = verify_boundary_formula(&moebius, &point, Coeff::Int, PairingOp::Join).unwrap();
    println!("boundary formula for Möbius₅ ∗ •: pass = {}", rep.pass);
    // Bd(M ∗ •) = (Bd M ∗ •) ∪ (M ∗ {∅}): the band plus a cone over its
    // boundary circle — a projective plane.
    let cone = moebius.join(&point);
    let cone_bd = classify(&cone, Coeff::Int).boundary;
    let m = augmental::homology::homology_complex(&cone_bd, Coeff::Int);
    println!(
        "Bd(Möbius₅ ∗ •): closed surface with H_1 = {} — a projective plane",
        m.piece(1)
    );

    // The product formula, with the point as the unit: Bd(• × Σ) = • × Bd Σ.
    let rep = verify_boundary_formula(&point, &corpus::get("ball1").unwrap(), Coeff::Int, PairingOp::Product).unwrap();
    println!("boundary formula for • × B¹: pass = {}", rep.pass);
}
