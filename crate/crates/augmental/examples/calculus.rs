//! Tour of the combinatorial calculus: building complexes, links, costars,
//! closed stars, joins, products, skeleta and the structural identities that
//! tie them together.
//!
//! Run with: cargo run --example calculus

use augmental::calculus::check_identities;
use augmental::complex::Simplex;
use augmental::{corpus, Complex};

fn main() {
    // Every non-void complex contains the empty simplex ∅ (dimension −1);
    // the Void complex (dimension −∞) has no faces at all.
    let void = Complex::void();
    let empty = Complex::empty();
    println!("dim Void  = {}", void.dim());
    println!("dim {{∅}}   = {}", empty.dim());
    println!("Void == {{∅}} ? {}\n", void == empty);

    // A Möbius strip on five vertices, straight from its facet list.
    let moebius = corpus::get("moebius5").unwrap();
    println!("Möbius f-vector (starting at ∅): {:?}", moebius.f_vector());
    println!("reduced Euler characteristic:    {}", moebius.reduced_euler());

    // Links and costars at a vertex.
    let v = Simplex::new([1]);
    println!("Lk {v}   = facets {:?}", facet_strings(&moebius.link(&v)));
    println!("cost {v} has {} faces", moebius.costar(&v).n_faces());
    println!(
        "st̄ {v} ∩ cost {v} = {:?} (the boundary of the vertex star)\n",
        facet_strings(&moebius.star_closed(&v).intersection(&moebius.costar(&v)))
    );

    // Joins: {∅} is the unit, Void the zero; a cone is a join with a point.
    let circle = corpus::get("s1_3").unwrap();
    println!("S¹ ∗ {{∅}} == S¹ (after relabeling)? {}", circle.join(&empty).is_isomorphic_to(&circle));
    println!("S¹ ∗ Void is Void? {}", circle.join(&void).is_void());
    let cone = circle.join(&Complex::point(1));
    println!("dim(S¹ ∗ •) = {} (dims add plus one)", cone.dim());

    // The ordered cartesian product of two edges triangulates the square.
    let edge = corpus::get("ball1").unwrap();
    let square = edge.product_ordered(&edge);
    println!("edge × edge f-vector: {:?}\n", square.f_vector());

    // The five structural identities, checked exhaustively over all faces.
    let theta = corpus::get("theta").unwrap();
    let report = check_identities(&moebius, &theta);
    for r in &report.results {
        println!("identity {:<18} {}", r.name, if r.pass { "holds" } else { "FAILS" });
    }
    assert!(report.pass());
}

fn facet_strings(c: &Complex) -> Vec<String> {
    c.facets().iter().map(|s| s.to_string()).collect()
}
