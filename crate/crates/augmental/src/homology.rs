//! Homology of augmental chain complexes over Z, Q and prime fields.
//!
//! Because chains include degree −1, the absolute homology of a non-void
//! complex is its reduced homology, `{∅}` contributes a unit in degree −1,
//! and the Void complex has zero homology everywhere.  Relative homology
//! against a non-void subcomplex agrees with the classical relative groups.

use crate::chain::ChainComplex;
use crate::complex::{Complex, Simplex};
use crate::graded::{GradedModule, Piece};
use crate::snf::{smith_normal_form, Snf};
use std::fmt;

/// Coefficient ring: the integers, the rationals, or Z/p for a prime p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coeff {
    Int,
    Rational,
    PrimeField(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffError {
    NotPrime(u64),
    Unparseable(String),
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::NotPrime(p) => write!(f, "{p} is not prime"),
            CoeffError::Unparseable(s) => {
                write!(f, "cannot parse coefficient ring {s:?} (expected Z, Q or Zp:<prime>)")
            }
        }
    }
}

impl std::error::Error for CoeffError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Coeff {
    pub fn prime_field(p: u64) -> Result<Self, CoeffError> {
        if is_prime(p) {
            Ok(Coeff::PrimeField(p))
        } else {
            Err(CoeffError::NotPrime(p))
        }
    }

    /// Parse "Z", "Q", "Zp:<prime>" or the shorthand "Z<prime>" (e.g. "Z3").
    pub fn parse(s: &str) -> Result<Self, CoeffError> {
        match s {
            "Z" => Ok(Coeff::Int),
            "Q" => Ok(Coeff::Rational),
            _ => {
                let digits = s
                    .strip_prefix("Zp:")
                    .or_else(|| s.strip_prefix('Z'))
                    .ok_or_else(|| CoeffError::Unparseable(s.to_string()))?;
                let p: u64 =
                    digits.parse().map_err(|_| CoeffError::Unparseable(s.to_string()))?;
                Coeff::prime_field(p)
            }
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Coeff::Int)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int => write!(f, "Z"),
            Coeff::Rational => write!(f, "Q"),
            Coeff::PrimeField(p) => write!(f, "Zp:{p}"),
        }
    }
}

/// Homology of a chain complex: one Smith normal form per boundary matrix
/// serves every coefficient ring (rational rank = integer rank; rank mod p =
/// number of invariant factors prime to p).
pub fn homology(chain: &ChainComplex, coeff: Coeff) -> GradedModule {
    let mut out = GradedModule::zero();
    if chain.is_zero() {
        return out;
    }
    let degrees = chain.degrees();
    let lo = *degrees.first().unwrap();
    let hi = *degrees.last().unwrap();
    let mut snfs: std::collections::BTreeMap<i32, Snf> = std::collections::BTreeMap::new();
    for d in lo..=hi + 1 {
        let b = chain.boundary(d);
        if b.rows == 0 || b.cols == 0 {
            continue;
        }
        snfs.insert(d, smith_normal_form(&b.to_int_mat()));
    }
    let rank_of = |d: i32| -> usize {
        snfs.get(&d).map_or(0, |s| match coeff {
            Coeff::Int | Coeff::Rational => s.rank,
            Coeff::PrimeField(p) => s.rank_mod_p(p),
        })
    };
    for d in lo..=hi {
        let n = chain.dim_at(d);
        let rank = n - rank_of(d) - rank_of(d + 1);
        let torsion = match coeff {
            Coeff::Int => snfs
                .get(&(d + 1))
                .map(|s| {
                    s.torsion()
                        .iter()
                        .map(|t| {
                            use num_traits::ToPrimitive;
                            t.to_u128().expect("torsion coefficient exceeds u128")
                        })
                        .collect()
                })
                .unwrap_or_default(),
            _ => Vec::new(),
        };
        out.set(d, Piece { rank, torsion });
    }
    out
}

/// Homology of a complex (reduced homology for non-void complexes, a unit in
/// degree −1 for `{∅}`, zero for Void).
pub fn homology_complex(c: &Complex, coeff: Coeff) -> GradedModule {
    homology(&ChainComplex::augmental(c), coeff)
}

/// Homology of a pair (c, sub); `sub` must be a subcomplex (Void allowed and
/// gives the absolute groups).
pub fn homology_pair(c: &Complex, sub: &Complex, coeff: Coeff) -> GradedModule {
    homology(&ChainComplex::relative(c, sub), coeff)
}

/// Local homology at a face: the pair against the costar of the face.
/// It agrees with the homology of the link shifted up by #σ:
/// `H_i(c, cost σ) ≅ H_{i−#σ}(Lk σ)`.
pub fn local_homology(c: &Complex, s: &Simplex, coeff: Coeff) -> GradedModule {
    assert!(c.contains(s), "local homology requires a face of the complex");
    homology_pair(c, &c.costar(s), coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[u32]]) -> Complex {
        Complex::from_facet_ids(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
    }

    fn h(x: &Complex) -> GradedModule {
        homology_complex(x, Coeff::Int)
    }

    #[test]
    fn degenerate_complexes() {
        assert!(h(&Complex::void()).is_zero());
        let e = h(&Complex::empty());
        assert_eq!(e.piece(-1), Piece::free(1));
        assert_eq!(e.degrees(), vec![-1]);
        assert!(h(&Complex::point(0)).is_zero());
    }

    #[test]
    fn spheres() {
        let s0 = h(&c(&[&[1], &[2]]));
        assert_eq!(s0.piece(0), Piece::free(1));
        assert_eq!(s0.degrees(), vec![0]);
        let s1 = h(&c(&[&[1, 2], &[2, 3], &[1, 3]]));
        assert_eq!(s1.piece(1), Piece::free(1));
        assert_eq!(s1.degrees(), vec![1]);
        // Octahedron boundary = S^2.
        let s2 = h(&c(&[
            &[1, 3, 5], &[1, 3, 6], &[1, 4, 5], &[1, 4, 6],
            &[2, 3, 5], &[2, 3, 6], &[2, 4, 5], &[2, 4, 6],
        ]));
        assert_eq!(s2.degrees(), vec![2]);
        assert_eq!(s2.piece(2), Piece::free(1));
    }

    #[test]
    fn torsion_in_projective_plane() {
        // 6-vertex projective plane.
        let rp2 = c(&[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
        ]);
        let hz = h(&rp2);
        assert_eq!(hz.piece(1), Piece { rank: 0, torsion: vec![2] });
        assert!(hz.piece(2).is_zero());
        assert_eq!(hz.degrees(), vec![1]);
        // Over Q it is acyclic; over Z/2 both H_1 and H_2 are one-dimensional.
        assert!(homology_complex(&rp2, Coeff::Rational).is_zero());
        let h2 = homology_complex(&rp2, Coeff::PrimeField(2));
        assert_eq!(h2.piece(1), Piece::free(1));
        assert_eq!(h2.piece(2), Piece::free(1));
    }

    #[test]
    fn relative_pair_matches_classical() {
        // (B^1, S^0): H_1 = Z, all else 0.
        let b1 = c(&[&[1, 2]]);
        let s0 = c(&[&[1], &[2]]);
        let rel = homology_pair(&b1, &s0, Coeff::Int);
        assert_eq!(rel.degrees(), vec![1]);
        assert_eq!(rel.piece(1), Piece::free(1));
        // Relative against Void is the absolute (reduced) homology.
        assert_eq!(homology_pair(&s0, &Complex::void(), Coeff::Int), h(&s0));
    }

    #[test]
    fn local_homology_matches_shifted_link() {
        let circle = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let v = Simplex::new([2]);
        let local = local_homology(&circle, &v, Coeff::Int);
        let link = homology_complex(&circle.link(&v), Coeff::Int);
        for d in -1..=2 {
            assert_eq!(local.piece(d), link.piece(d - 1));
        }
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!(Coeff::parse("Z").unwrap(), Coeff::Int);
        assert_eq!(Coeff::parse("Q").unwrap(), Coeff::Rational);
        assert_eq!(Coeff::parse("Zp:7").unwrap(), Coeff::PrimeField(7));
        assert!(Coeff::parse("Zp:6").is_err());
        assert!(Coeff::parse("GF4").is_err());
    }
}
