//! Homology with the empty simplex included: absolute, relative, and local,
//! over the integers, the rationals and prime fields.
//!
//! Run with: cargo run --example homology

use augmental::complex::Simplex;
use augmental::homology::{homology_complex, homology_pair, local_homology};
use augmental::{corpus, Coeff, Complex};

fn show(label: &str, m: &augmental::GradedModule) {
    if m.is_zero() {
        println!("{label}: 0");
        return;
    }
    let parts: Vec<String> =
        m.iter().map(|(d, p)| format!("H_{d} = {p}")).collect();
    println!("{label}: {}", parts.join(", "));
}

fn main() {
    // The low-dimensional table: {∅} carries a unit in degree −1, a point is
    // acyclic, the 0-sphere has one unit in degree 0, Void has nothing.
    show("{∅}  ", &homology_complex(&Complex::empty(), Coeff::Int));
    show("point", &homology_complex(&Complex::point(1), Coeff::Int));
    show("S⁰   ", &homology_complex(&corpus::get("s0").unwrap(), Coeff::Int));
    show("Void ", &homology_complex(&Complex::void(), Coeff::Int));
    println!();

    // Torsion is exact: the six-vertex projective plane over three rings.
    let rp2 = corpus::get("rp2_6").unwrap();
    show("RP² over Z ", &homology_complex(&rp2, Coeff::Int));
    show("RP² over Q ", &homology_complex(&rp2, Coeff::Rational));
    show("RP² over Z₂", &homology_complex(&rp2, Coeff::PrimeField(2)));
    println!();

    // Relative pairs: (1-ball, its boundary 0-sphere) looks like a 1-cell.
    let ball = corpus::get("ball1").unwrap();
    let sphere = corpus::get("s0").unwrap();
    show("(B¹, S⁰)", &homology_pair(&ball, &sphere, Coeff::Int));

    // Local homology at a face equals the link's homology shifted by the
    // face's cardinality — here at an edge of the circle.
    let circle = corpus::get("s1_4").unwrap();
    let edge = Simplex::new([1, 2]);
    show("local at edge of S¹", &local_homology(&circle, &edge, Coeff::Int));
    show("Lk(edge) of S¹     ", &homology_complex(&circle.link(&edge), Coeff::Int));
}
