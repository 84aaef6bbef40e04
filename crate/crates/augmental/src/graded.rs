//! Finitely generated graded modules over the coefficient ring, presented by
//! a free rank and a chain of invariant factors per degree.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// One graded piece: `R^rank ⊕ R/d1 ⊕ R/d2 ⊕ ...` with `d1 | d2 | ...`,
/// all `di ≥ 2`.  Over a field the torsion list is always empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Piece {
    pub rank: usize,
    pub torsion: Vec<u128>,
}

impl Piece {
    pub fn free(rank: usize) -> Self {
        Piece { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum.
    pub fn sum(&self, other: &Piece) -> Piece {
        let mut torsion: Vec<u128> = self.torsion.iter().chain(&other.torsion).copied().collect();
        torsion = invariant_factors(&torsion);
        Piece { rank: self.rank + other.rank, torsion }
    }

    /// Tensor product over the integers:
    /// `(Z^a ⊕ ⊕Z/d) ⊗ (Z^b ⊕ ⊕Z/e)` has rank `ab`, plus `b` copies of each
    /// `Z/d`, `a` copies of each `Z/e`, and one `Z/gcd(d,e)` per pair.
    pub fn tensor(&self, other: &Piece) -> Piece {
        let mut torsion = Vec::new();
        for d in &self.torsion {
            for _ in 0..other.rank {
                torsion.push(*d);
            }
        }
        for e in &other.torsion {
            for _ in 0..self.rank {
                torsion.push(*e);
            }
        }
        for d in &self.torsion {
            for e in &other.torsion {
                let g = gcd(*d, *e);
                if g > 1 {
                    torsion.push(g);
                }
            }
        }
        Piece { rank: self.rank * other.rank, torsion: invariant_factors(&torsion) }
    }

    /// `Tor_1` over the integers: one `Z/gcd(d,e)` per torsion pair.
    pub fn tor1(&self, other: &Piece) -> Piece {
        let mut torsion = Vec::new();
        for d in &self.torsion {
            for e in &other.torsion {
                let g = gcd(*d, *e);
                if g > 1 {
                    torsion.push(g);
                }
            }
        }
        Piece { rank: 0, torsion: invariant_factors(&torsion) }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.rank == 1 {
            parts.push("R".to_string());
        } else if self.rank > 1 {
            parts.push(format!("R^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(format!("R/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Normalize a multiset of cyclic orders into the invariant-factor chain:
/// collect prime powers per prime, then multiply the k-th largest powers
/// together, largest factor last.
pub fn invariant_factors(orders: &[u128]) -> Vec<u128> {
    let mut powers: BTreeMap<u128, Vec<u128>> = BTreeMap::new();
    let mut depth = 0usize;
    for &n in orders {
        assert!(n >= 2, "cyclic order must be at least 2");
        for (p, k) in factorize(n) {
            powers.entry(p).or_default().push(p.pow(k));
        }
    }
    for ps in powers.values_mut() {
        ps.sort_unstable_by(|a, b| b.cmp(a));
        depth = depth.max(ps.len());
    }
    let mut out = vec![1u128; depth];
    for ps in powers.values() {
        for (k, &q) in ps.iter().enumerate() {
            out[k] *= q;
        }
    }
    out.reverse(); // smallest (dividing) factor first
    out
}

fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A graded module: degree → piece, with zero pieces omitted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedModule {
    pieces: BTreeMap<i32, Piece>,
}

/// Serialized form of one nonzero graded piece.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PieceJson {
    pub degree: i32,
    pub rank: usize,
    pub torsion: Vec<u128>,
}

impl GradedModule {
    pub fn zero() -> Self {
        GradedModule::default()
    }

    pub fn set(&mut self, degree: i32, piece: Piece) {
        if piece.is_zero() {
            self.pieces.remove(&degree);
        } else {
            self.pieces.insert(degree, piece);
        }
    }

    pub fn add(&mut self, degree: i32, piece: &Piece) {
        let cur = self.piece(degree).sum(piece);
        self.set(degree, cur);
    }

    /// The piece in a given degree (zero if absent).
    pub fn piece(&self, degree: i32) -> Piece {
        self.pieces.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Degrees carrying a nonzero piece, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        self.pieces.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Piece)> {
        self.pieces.iter().map(|(d, p)| (*d, p))
    }

    /// Total rank over all degrees.
    pub fn total_rank(&self) -> usize {
        self.pieces.values().map(|p| p.rank).sum()
    }

    pub fn to_json(&self) -> Vec<PieceJson> {
        self.pieces
            .iter()
            .map(|(d, p)| PieceJson { degree: *d, rank: p.rank, torsion: p.torsion.clone() })
            .collect()
    }

    pub fn from_json(pieces: &[PieceJson]) -> Self {
        let mut m = GradedModule::zero();
        for p in pieces {
            m.add(p.degree, &Piece { rank: p.rank, torsion: invariant_factors(&p.torsion) });
        }
        m
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, p)) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "H_{d} = {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_normalization() {
        // Z/2 ⊕ Z/4 ⊕ Z/3 = Z/2 ⊕ Z/12
        assert_eq!(invariant_factors(&[2, 4, 3]), vec![2, 12]);
        // Z/6 ⊕ Z/4 = Z/2 ⊕ Z/12
        assert_eq!(invariant_factors(&[6, 4]), vec![2, 12]);
        assert_eq!(invariant_factors(&[]), Vec::<u128>::new());
        assert_eq!(invariant_factors(&[5]), vec![5]);
    }

    #[test]
    fn tensor_and_tor_rules() {
        let a = Piece { rank: 1, torsion: vec![2] }; // Z ⊕ Z/2
        let b = Piece { rank: 0, torsion: vec![4] }; // Z/4
        // (Z ⊕ Z/2) ⊗ Z/4 = Z/4 ⊕ Z/2
        assert_eq!(a.tensor(&b), Piece { rank: 0, torsion: vec![2, 4] });
        // Tor(Z ⊕ Z/2, Z/4) = Z/2
        assert_eq!(a.tor1(&b), Piece { rank: 0, torsion: vec![2] });
        // Tor(Z/2, Z/3) = 0
        let c = Piece { rank: 0, torsion: vec![2] };
        let d = Piece { rank: 0, torsion: vec![3] };
        assert!(c.tor1(&d).is_zero());
        assert!(c.tensor(&d).is_zero());
        // Free parts multiply.
        let f2 = Piece::free(2);
        let f3 = Piece::free(3);
        assert_eq!(f2.tensor(&f3), Piece::free(6));
        assert!(f2.tor1(&f3).is_zero());
    }

    #[test]
    fn graded_basics() {
        let mut m = GradedModule::zero();
        m.set(1, Piece { rank: 2, torsion: vec![2] });
        m.set(0, Piece::free(0)); // zero piece is dropped
        assert_eq!(m.degrees(), vec![1]);
        assert_eq!(m.piece(0), Piece::default());
        let js = m.to_json();
        assert_eq!(js.len(), 1);
        assert_eq!(GradedModule::from_json(&js), m);
    }
}
