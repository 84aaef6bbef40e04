//! Homology of joins and products from the homology of the factors: the
//! chain-level join isomorphism, graded predictions with Tor terms, and the
//! local link formula relating joins and products.
//!
//! Run with: cargo run --example kunneth

use augmental::complex::Simplex;
use augmental::homology::homology_complex;
use augmental::kunneth::{
    ez_join_verify, kunneth_join_predict, kunneth_join_verify, kunneth_product_verify,
    link_formula_verify, product_case,
};
use augmental::{corpus, Coeff, Complex};

fn main() {
    // The chain map C(a∗b) → C(a)⊗C(b) is a degree −1 isomorphism; the
    // verifier checks the matrix identities exactly.
    let s0 = corpus::get("s0").unwrap();
    let r = ez_join_verify(&s0, &s0);
    println!("join chain isomorphism on S⁰ ∗ S⁰: commutes {} bijective {}", r.commutes, r.bijective);

    // Prediction: the join of two 0-spheres is a circle.
    let h = homology_complex(&s0, Coeff::Int);
    let predicted = kunneth_join_predict(&h, &h);
    println!("predicted H(S⁰ ∗ S⁰): H_1 = {}", predicted.piece(1));
    let direct = homology_complex(&s0.join(&s0), Coeff::Int);
    println!("direct    H(S⁰ ∗ S⁰): H_1 = {}\n", direct.piece(1));

    // Torsion breeds Tor: RP² ∗ RP² picks up an extra Z₂ in degree 4 that a
    // torsion-blind prediction would miss.
    let rp2 = corpus::get("rp2_6").unwrap();
    let hr = homology_complex(&rp2, Coeff::Int);
    let pred = kunneth_join_predict(&hr, &hr);
    println!("predicted H_4(RP² ∗ RP²) = {} (the Tor term)", pred.piece(4));

    // Full verification of the join formula on a relative pair.
    let ball = corpus::get("ball1").unwrap();
    let r = kunneth_join_verify(&ball, &s0, &s0, &Complex::void(), Coeff::Int);
    println!("join formula on (B¹,S⁰) ∗ (S⁰,∅): pass = {}\n", r.pass);

    // Products split into four cases by the shape of the pairs.
    let void = Complex::void();
    println!(
        "case for (S⁰,Void) × (S⁰,Void): {:?}",
        product_case(&s0, &void, &s0, &void)
    );
    let r = kunneth_product_verify(&s0, &void, &s0, &void);
    println!("product formula: pass = {}", r.pass);
    for c in &r.comparisons {
        println!("  degree {}: expected {} got {}", c.degree, c.expected, c.actual);
    }
    println!();

    // The link of a suitable product face matches the link in the join and
    // the convolution of the factor links — all three computed independently.
    let circle = corpus::get("s1_4").unwrap();
    let edge = Simplex::new([1, 2]);
    let r = link_formula_verify(&circle, &circle, &edge, &edge, Coeff::Int);
    println!("link formula on S¹ × S¹ at an edge pair: pass = {}", r.pass);
}
