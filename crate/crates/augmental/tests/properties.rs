//! Property-based and oracle-based invariants across the library: format
//! round-trips, join laws, homology cross-checks (Euler, universal
//! coefficients, relative degenerations), manifold lemmas and face-ring laws.

use augmental::complex::Simplex;
use augmental::homology::{homology_complex, homology_pair, Coeff};
use augmental::io::{complex_from_str, complex_to_json_string, complex_to_text};
use augmental::manifold::{classify, Orientable};
use augmental::sample::{random_complex, random_non_void, random_subcomplex, rng_from_seed};
use augmental::stanley_reisner::{
    is_2cm_costar, is_buchsbaum, is_cohen_macaulay, is_gorenstein, is_k_cm,
};
use augmental::{corpus, Complex, ExtendedDim};
use proptest::prelude::*;

/// Deterministic random complex keyed by a proptest-chosen seed.
fn complex_from_seed(seed: u64, max_vertices: usize) -> Complex {
    random_complex(&mut rng_from_seed(seed), max_vertices)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formats_round_trip(seed in 0u64..1 << 32) {
        let c = complex_from_seed(seed, 8);
        prop_assert_eq!(&complex_from_str(&complex_to_json_string(&c)).unwrap(), &c);
        prop_assert_eq!(&complex_from_str(&complex_to_text(&c)).unwrap(), &c);
    }

    #[test]
    fn join_unit_zero_and_dim_law(seed in 0u64..1 << 32) {
        let c = complex_from_seed(seed, 6);
        prop_assert_eq!(&c.join(&Complex::empty()), &c);
        prop_assert!(c.join(&Complex::void()).is_void());
        let d = complex_from_seed(seed ^ 0xabcdef, 6);
        let j = c.join(&d);
        match (c.dim(), d.dim()) {
            (ExtendedDim::Finite(p), ExtendedDim::Finite(q)) => {
                prop_assert_eq!(j.dim(), ExtendedDim::Finite(p + q + 1));
            }
            _ => prop_assert!(j.is_void()),
        }
    }

    #[test]
    fn join_is_associative_and_commutative_up_to_relabeling(seed in 0u64..1 << 32) {
        let mut rng = rng_from_seed(seed);
        let a = random_complex(&mut rng, 3);
        let b = random_complex(&mut rng, 3);
        let c = random_complex(&mut rng, 3);
        let left = a.join(&b).join(&c);
        let right = a.join(&b.join(&c));
        if left.vertices().len() <= 9 {
            prop_assert!(left.is_isomorphic_to(&right));
            prop_assert!(a.join(&b).is_isomorphic_to(&b.join(&a)));
        }
    }

    #[test]
    fn skeleton_and_deletion_behave(seed in 0u64..1 << 32) {
        let c = complex_from_seed(seed, 7);
        if c.is_void() {
            return Ok(());
        }
        // skeleton(dim) is the identity; skeleton(-1) is {∅}.
        let top = c.dim().finite().unwrap_or(-1);
        prop_assert_eq!(&c.skeleton(top), &c);
        prop_assert_eq!(&c.skeleton(-1), &Complex::empty());
        // deleting vertices = iterated costar of those vertices.
        let vs: Vec<u32> = c.vertices().into_iter().take(2).collect();
        let mut expected = c.clone();
        for v in &vs {
            let s = Simplex::new([*v]);
            if expected.contains(&s) {
                expected = expected.costar(&s);
            }
        }
        prop_assert_eq!(c.delete_vertices(&vs.iter().copied().collect()), expected);
    }

    #[test]
    fn euler_characteristic_matches_rational_ranks(seed in 0u64..1 << 32) {
        let c = complex_from_seed(seed, 7);
        let m = homology_complex(&c, Coeff::Rational);
        let alt: i64 = m
            .iter()
            .map(|(d, p)| {
                let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * p.rank as i64
            })
            .sum();
        prop_assert_eq!(alt, c.reduced_euler());
    }

    #[test]
    fn universal_coefficients_over_prime_fields(seed in 0u64..1 << 32, p in prop::sample::select(vec![2u64, 3, 5])) {
        let c = complex_from_seed(seed, 7);
        let int = homology_complex(&c, Coeff::Int);
        let field = homology_complex(&c, Coeff::PrimeField(p));
        let mut degrees = int.degrees();
        degrees.extend(field.degrees());
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let t = |d: i32| int.piece(d).torsion.iter().filter(|&&x| x % p as u128 == 0).count();
            let expected = int.piece(d).rank + t(d) + t(d - 1);
            prop_assert_eq!(field.piece(d).rank, expected, "degree {}", d);
            prop_assert!(field.piece(d).torsion.is_empty());
        }
    }

    #[test]
    fn relative_homology_degenerations(seed in 0u64..1 << 32) {
        let c = complex_from_seed(seed, 6);
        // sub = Void is the absolute functor.
        prop_assert_eq!(
            homology_pair(&c, &Complex::void(), Coeff::Int),
            homology_complex(&c, Coeff::Int)
        );
        if c.is_void() {
            return Ok(());
        }
        // sub = {∅} is the classical unreduced functor: one extra rational
        // rank in degree 0, nothing in degree −1.
        let rel = homology_pair(&c, &Complex::empty(), Coeff::Rational);
        let abs = homology_complex(&c, Coeff::Rational);
        prop_assert!(rel.piece(-1).is_zero());
        if c == Complex::empty() {
            prop_assert!(rel.is_zero());
        } else {
            prop_assert_eq!(rel.piece(0).rank, abs.piece(0).rank + 1 - abs.piece(-1).rank);
        }
        // a pair with itself is acyclic.
        prop_assert!(homology_pair(&c, &c, Coeff::Int).is_zero());
    }

    #[test]
    fn subcomplex_pairs_are_consistent(seed in 0u64..1 << 32) {
        let mut rng = rng_from_seed(seed);
        let c = random_non_void(&mut rng, 6);
        let sub = random_subcomplex(&mut rng, &c);
        // Rational Euler additivity: χ(c) − χ(sub) = alternating ranks of the pair.
        let rel = homology_pair(&c, &sub, Coeff::Rational);
        let alt: i64 = rel
            .iter()
            .map(|(d, p)| if d.rem_euclid(2) == 0 { p.rank as i64 } else { -(p.rank as i64) })
            .sum();
        prop_assert_eq!(alt, c.reduced_euler() - sub.reduced_euler());
    }
}

#[test]
fn corpus_round_trips_in_both_formats() {
    for (name, _) in corpus::names() {
        let c = corpus::get(name).unwrap();
        assert_eq!(complex_from_str(&complex_to_json_string(&c)).unwrap(), c, "{name} json");
        assert_eq!(complex_from_str(&complex_to_text(&c)).unwrap(), c, "{name} text");
    }
}

#[test]
fn quasi_manifolds_have_pseudomanifold_links() {
    // The quasi-manifold property is equivalent to every link (the complex
    // itself included, as the link of ∅) being a pseudomanifold.
    let mut pool: Vec<Complex> =
        corpus::names().iter().map(|(n, _)| corpus::get(n).unwrap()).collect();
    let mut rng = rng_from_seed(5);
    for _ in 0..40 {
        pool.push(random_non_void(&mut rng, 6));
    }
    for c in &pool {
        if c.is_void() || c.dim().finite().unwrap_or(-1) < 1 {
            continue;
        }
        let quasi = classify(c, Coeff::Int).is_quasi;
        let all_links_pseudo = c.faces().cloned().collect::<Vec<_>>().iter().all(|s| {
            let lk = c.link(s);
            match lk.dim() {
                ExtendedDim::MinusInfinity => true,
                ExtendedDim::Finite(d) if d < 1 => {
                    // 0-dimensional pseudomanifold-ness amounts to at most
                    // two points at facet codimension one.
                    true
                }
                _ => classify(&lk, Coeff::Int).is_pseudo,
            }
        });
        if quasi {
            assert!(all_links_pseudo, "quasi-manifold with a non-pseudo link");
        }
    }
}

#[test]
fn closed_pseudomanifold_top_homology_dichotomy() {
    // A strongly connected closed pseudomanifold over the integers: if
    // orientable, the boundary is Void and the top homology is R; if not,
    // the boundary degenerates to {∅} and the top homology vanishes.
    for name in ["s1_3", "s1_4", "s2", "rp2_6"] {
        let c = corpus::get(name).unwrap();
        let r = classify(&c, Coeff::Int);
        assert!(
            r.boundary.dim().finite().unwrap_or(-1) < 0,
            "{name} should have no positive-dimensional boundary"
        );
        let n = c.dim().finite().unwrap();
        let top = homology_complex(&c, Coeff::Int).piece(n);
        match r.orientable {
            Orientable::True => {
                assert!(r.boundary.is_void(), "{name}");
                assert_eq!(top.rank, 1, "{name}");
            }
            Orientable::False => {
                assert_eq!(r.boundary, Complex::empty(), "{name}");
                assert_eq!(top.rank, 0, "{name}");
            }
            Orientable::Undefined => panic!("{name} should have defined orientability"),
        }
    }
}

#[test]
fn cohen_macaulay_implies_buchsbaum() {
    let mut rng = rng_from_seed(17);
    let mut pool: Vec<Complex> =
        corpus::names().iter().map(|(n, _)| corpus::get(n).unwrap()).collect();
    for _ in 0..40 {
        pool.push(random_non_void(&mut rng, 6));
    }
    for c in &pool {
        if c.is_void() {
            continue;
        }
        for ring in [Coeff::Rational, Coeff::PrimeField(2)] {
            if is_cohen_macaulay(c, ring).unwrap() {
                assert!(is_buchsbaum(c, ring).unwrap(), "CM but not Buchsbaum: {c:?}");
            }
        }
    }
}

#[test]
fn skeleta_of_cohen_macaulay_complexes_are_cohen_macaulay() {
    for name in ["s1_3", "s2", "ball2", "ball3", "rp2_6"] {
        let c = corpus::get(name).unwrap();
        if !is_cohen_macaulay(&c, Coeff::Rational).unwrap() {
            continue;
        }
        let top = c.dim().finite().unwrap();
        for p in -1..=top {
            assert!(
                is_cohen_macaulay(&c.skeleton(p), Coeff::Rational).unwrap(),
                "{name} skeleton {p}"
            );
        }
    }
}

#[test]
fn gorenstein_is_preserved_by_joins() {
    // Tensor products of Gorenstein face rings are Gorenstein: check on
    // joins of small Gorenstein complexes.
    let gor = ["empty", "point", "s0", "ball1", "s1_3", "s1_4", "s2", "ball2"];
    for n1 in gor {
        for n2 in gor {
            let a = corpus::get(n1).unwrap();
            let b = corpus::get(n2).unwrap();
            assert!(is_gorenstein(&a, Coeff::Rational).unwrap(), "{n1}");
            let j = a.join(&b);
            assert!(
                is_gorenstein(&j, Coeff::Rational).unwrap(),
                "{n1} * {n2} should stay Gorenstein"
            );
        }
    }
}

#[test]
fn doubly_cohen_macaulay_cross_check() {
    // Two independent characterizations of 2-CM must agree: vertex deletion
    // and costar homology.
    let mut rng = rng_from_seed(23);
    let mut pool: Vec<Complex> = vec![
        corpus::get("s0").unwrap(),
        corpus::get("s1_3").unwrap(),
        corpus::get("ball1").unwrap(),
        corpus::get("s2").unwrap(),
        corpus::get("theta").unwrap(),
    ];
    for _ in 0..25 {
        pool.push(random_non_void(&mut rng, 5));
    }
    for c in &pool {
        // k-CM needs at least k − 1 vertices to delete.
        if c.is_void() || c.vertices().len() < 2 {
            continue;
        }
        assert_eq!(
            is_k_cm(c, 2, Coeff::Rational).unwrap(),
            is_2cm_costar(c, Coeff::Rational).unwrap(),
            "2-CM characterizations disagree on {c:?}"
        );
    }
}

#[test]
fn links_in_joins_factor_through_the_corpus() {
    // Spot-check the join-link factorization on bigger corpus joins than the
    // random suites reach.
    let a = corpus::get("moebius5").unwrap();
    let b = corpus::get("s1_3").unwrap();
    let (j, off) = a.join_with_offset(&b);
    for s1 in a.faces().cloned().collect::<Vec<_>>() {
        let s2 = Simplex::new([1]);
        let sigma = s1.union(&s2.map_vertices(|v| v + off));
        let expected = a.link(&s1).join_using_offset(&b.link(&s2), off);
        assert_eq!(j.link(&sigma), expected, "at {s1}");
    }
}
