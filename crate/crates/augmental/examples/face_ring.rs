//! Face-ring (Stanley–Reisner) invariants: the defining monomial ideal, the
//! Hilbert function and its closed form, and the Cohen–Macaulay /
//! Buchsbaum / Gorenstein hierarchy with its characteristic dependence.
//!
//! Run with: cargo run --example face_ring

use augmental::complex::Simplex;
use augmental::stanley_reisner::{
    hilbert_function, ideal_membership, is_buchsbaum, is_cohen_macaulay, is_gorenstein, is_k_cm,
    non_simplices,
};
use augmental::{corpus, Coeff};

fn main() {
    // The ideal of the hollow triangle is generated by the missing face.
    let circle = corpus::get("s1_3").unwrap();
    let universe = circle.vertices();
    let gens = non_simplices(&circle, &universe).unwrap();
    println!(
        "minimal non-faces of S¹₃: {:?}",
        gens.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    );
    println!(
        "x₁x₂x₃ in the ideal? {}   x₁x₂? {}",
        ideal_membership(&Simplex::new([1, 2, 3]), &circle),
        ideal_membership(&Simplex::new([1, 2]), &circle)
    );

    // Hilbert function and its rational closed form.
    let h = hilbert_function(&circle, 8);
    println!("Hilbert function to degree 8: {:?}", h.coefficients);
    println!(
        "closed form: ({:?}) / (1-t)^{}\n",
        h.numerator, h.krull_dim
    );

    // Hilbert laws: joins convolve coefficients, ordered products take the
    // Hadamard (entrywise) product.
    let edge = corpus::get("ball1").unwrap();
    let join = circle.join(&edge);
    let hj = hilbert_function(&join, 8);
    let he = hilbert_function(&edge, 8);
    let convolution: Vec<u64> = (0..=8)
        .map(|m| (0..=m).map(|i| h.coefficients[i] * he.coefficients[m - i]).sum())
        .collect();
    println!("H(S¹₃ ∗ B¹) = {:?}", hj.coefficients);
    println!("convolution = {:?}", convolution);
    let product = circle.product_ordered(&edge);
    let hp = hilbert_function(&product, 8);
    let hadamard: Vec<u64> =
        (0..=8).map(|m| h.coefficients[m] * he.coefficients[m]).collect();
    println!("H(S¹₃ × B¹) = {:?}", hp.coefficients);
    println!("hadamard    = {:?}\n", hadamard);

    // Ring properties; RP² is the classical witness that Cohen–Macaulayness
    // depends on the characteristic.
    let rp2 = corpus::get("rp2_6").unwrap();
    for (name, c) in [("S¹₃", &circle), ("B¹", &edge), ("RP²₆", &rp2)] {
        println!(
            "{name:<5} CM/Q {:<5} CM/Z₂ {:<5} Buchsbaum/Q {:<5} Gorenstein/Q {:<5} 2-CM/Q {}",
            is_cohen_macaulay(c, Coeff::Rational).unwrap(),
            is_cohen_macaulay(c, Coeff::PrimeField(2)).unwrap(),
            is_buchsbaum(c, Coeff::Rational).unwrap(),
            is_gorenstein(c, Coeff::Rational).unwrap(),
            is_k_cm(c, 2, Coeff::Rational).unwrap(),
        );
    }
}
