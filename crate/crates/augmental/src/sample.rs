//! Seeded random complexes and pairs for the randomized verification suites.
//! Everything is driven by a ChaCha RNG so runs are reproducible from a seed.

use crate::complex::{Complex, Simplex, Vertex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex on at most `max_vertices` vertices.  Degenerate cases
/// (Void, `{∅}`) come up with small probability so they stay exercised.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize) -> Complex {
    match rng.gen_range(0..20) {
        0 => return Complex::void(),
        1 => return Complex::empty(),
        _ => {}
    }
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let n_facets = rng.gen_range(1..=(nv + 2));
    let max_card = nv.min(4);
    let mut gens = Vec::new();
    for _ in 0..n_facets {
        let card = rng.gen_range(1..=max_card);
        let mut verts = BTreeSet::new();
        while verts.len() < card {
            verts.insert(rng.gen_range(1..=nv as Vertex));
        }
        gens.push(Simplex::new(verts));
    }
    Complex::from_facets(&gens)
}

/// A random subcomplex of `c` (possibly Void, possibly all of `c`).
pub fn random_subcomplex<R: Rng>(rng: &mut R, c: &Complex) -> Complex {
    if c.is_void() || rng.gen_range(0..4) == 0 {
        return Complex::void();
    }
    let facets: Vec<Simplex> = c
        .faces()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();
    if facets.is_empty() {
        return Complex::empty();
    }
    Complex::from_facets(&facets)
}

/// A random non-void complex (for operations that reject Void).
pub fn random_non_void<R: Rng>(rng: &mut R, max_vertices: usize) -> Complex {
    loop {
        let c = random_complex(rng, max_vertices);
        if !c.is_void() {
            return c;
        }
    }
}

/// A random face of a non-void complex (the empty simplex included).
pub fn random_face<R: Rng>(rng: &mut R, c: &Complex) -> Simplex {
    let faces: Vec<&Simplex> = c.faces().collect();
    faces[rng.gen_range(0..faces.len())].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_from_seed() {
        let a = random_complex(&mut rng_from_seed(7), 6);
        let b = random_complex(&mut rng_from_seed(7), 6);
        assert_eq!(a, b);
    }

    #[test]
    fn subcomplex_relation_holds() {
        let mut rng = rng_from_seed(11);
        for _ in 0..50 {
            let c = random_complex(&mut rng, 6);
            let sub = random_subcomplex(&mut rng, &c);
            assert!(sub.is_subcomplex_of(&c));
        }
    }
}
