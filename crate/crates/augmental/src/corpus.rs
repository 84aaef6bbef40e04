//! Built-in example complexes, addressable from the CLI as `corpus:<name>`.

use crate::complex::Complex;

/// Names and one-line descriptions of every built-in complex.
pub fn names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("void", "the Void complex (no faces, dim -inf)"),
        ("empty", "the complex {∅} with only the empty simplex (dim -1)"),
        ("point", "a single vertex"),
        ("s0", "two vertices: the 0-sphere"),
        ("ball1", "an edge: the 1-ball"),
        ("s1_3", "triangle boundary: minimal circle"),
        ("s1_4", "4-cycle circle"),
        ("theta", "two vertices joined by three edge-paths (H_1 rank 2)"),
        ("square_product", "ordered product of two edges (two triangles)"),
        ("moebius5", "5-vertex Moebius band"),
        ("cylinder", "6-vertex triangulated cylinder"),
        ("rp2_6", "6-vertex projective plane"),
        ("s2", "suspension of s1_3: a 2-sphere"),
        ("ball2", "cone over s1_3: a 2-ball"),
        ("ball3", "double cone over s1_3: a 3-ball"),
        ("moebius5_cone", "cone over the Moebius band"),
        ("rp2_cone", "cone over the projective plane"),
        ("rp2_join_rp2", "join of two projective planes (5-dimensional)"),
    ]
}

/// Look up a built-in complex by name.
pub fn get(name: &str) -> Option<Complex> {
    let c = |facets: &[&[u32]]| {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    };
    let s1_3 = || c(&[&[1, 2], &[2, 3], &[1, 3]]);
    let moebius5 = || c(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 4, 5], &[1, 2, 5]]);
    let rp2_6 = || {
        c(&[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ])
    };
    Some(match name {
        // "rp2" is accepted as a shorthand for the six-vertex triangulation.
        "rp2" => rp2_6(),
        "void" => Complex::void(),
        "empty" => Complex::empty(),
        "point" => Complex::point(1),
        "s0" => c(&[&[1], &[2]]),
        "ball1" => c(&[&[1, 2]]),
        "s1_3" => s1_3(),
        "s1_4" => c(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
        "theta" => c(&[&[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4]]),
        "square_product" => c(&[&[1, 2]]).product_ordered(&c(&[&[3, 4]])),
        "moebius5" => moebius5(),
        "cylinder" => c(&[
            &[1, 2, 4], &[2, 4, 5], &[2, 3, 5], &[3, 5, 6], &[1, 3, 6], &[1, 4, 6],
        ]),
        "rp2_6" => rp2_6(),
        "s2" => s1_3().join(&c(&[&[1], &[2]])),
        "ball2" => s1_3().join(&Complex::point(1)),
        "ball3" => s1_3().join(&Complex::point(1)).join(&Complex::point(1)),
        "moebius5_cone" => moebius5().join(&Complex::point(1)),
        "rp2_cone" => rp2_6().join(&Complex::point(1)),
        "rp2_join_rp2" => rp2_6().join(&rp2_6()),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ExtendedDim;

    #[test]
    fn every_listed_name_resolves() {
        for (name, _) in names() {
            assert!(get(name).is_some(), "missing corpus entry {name}");
        }
        assert!(get("nope").is_none());
    }

    #[test]
    fn sanity_dimensions() {
        let dims = [
            ("void", None),
            ("empty", Some(-1)),
            ("point", Some(0)),
            ("theta", Some(1)),
            ("square_product", Some(2)),
            ("moebius5", Some(2)),
            ("cylinder", Some(2)),
            ("rp2_6", Some(2)),
            ("s2", Some(2)),
            ("ball3", Some(3)),
            ("rp2_join_rp2", Some(5)),
        ];
        for (name, d) in dims {
            let got = get(name).unwrap().dim();
            match d {
                None => assert_eq!(got, ExtendedDim::MinusInfinity, "{name}"),
                Some(d) => assert_eq!(got, ExtendedDim::Finite(d), "{name}"),
            }
        }
    }

    #[test]
    fn surfaces_have_expected_f_vectors() {
        assert_eq!(get("rp2_6").unwrap().f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(get("moebius5").unwrap().f_vector(), vec![1, 5, 10, 5]);
        assert_eq!(get("cylinder").unwrap().f_vector(), vec![1, 6, 12, 6]);
        assert_eq!(get("square_product").unwrap().f_vector(), vec![1, 4, 5, 2]);
    }
}
