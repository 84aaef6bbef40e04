//! Smith normal form over arbitrary-precision integers, with the unimodular
//! transforms tracked so that `u * m * v = d` can be re-checked.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.  Boundary matrices at this crate's scale are small
/// enough that dense arithmetic is simpler and fast enough.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<BigInt>>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, a: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.a[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |r| r.len());
        IntMat {
            rows: r,
            cols: c,
            a: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.a[k][j].is_zero() {
                        let prod = &self.a[i][k] * &other.a[k][j];
                        out.a[i][j] += prod;
                    }
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.a.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

/// `u * m * v = d`, with `d` diagonal, `diag[i] | diag[i+1]`, and `u`, `v`
/// products of elementary (determinant ±1) operations.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

impl Snf {
    /// Rank after reduction mod p: the transforms are invertible mod any
    /// prime, so it is the number of invariant factors p does not divide.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.diag.iter().filter(|d| !(*d % &p).is_zero()).count()
    }

    /// Invariant factors greater than one (the torsion coefficients).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }
}

/// Compute the Smith normal form of `m`.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.a.clone();
    let mut u = IntMat::identity(r);
    let mut v = IntMat::identity(c);

    let min = r.min(c);
    for k in 0..min {
        'reduce: loop {
            // Pick the submatrix entry of smallest nonzero magnitude as pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    if !a[i][j].is_zero()
                        && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match pivot {
                None => break 'reduce, // submatrix is zero; done
                Some(p) => p,
            };
            if pi != k {
                a.swap(k, pi);
                u.a.swap(k, pi);
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(k, pj);
                }
                for row in v.a.iter_mut() {
                    row.swap(k, pj);
                }
            }

            // Clear column k with row operations (truncated quotients leave
            // strictly smaller remainders, so the loop terminates).
            let mut clean = true;
            for i in k + 1..r {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                if !q.is_zero() {
                    for j in 0..c {
                        let t = &q * &a[k][j];
                        a[i][j] -= t;
                    }
                    for j in 0..r {
                        let t = &q * &u.a[k][j];
                        u.a[i][j] -= t;
                    }
                }
                if !a[i][k].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'reduce;
            }

            // Clear row k with column operations (these do not touch column k).
            for j in k + 1..c {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                if !q.is_zero() {
                    for i in 0..r {
                        let t = &q * &a[i][k];
                        a[i][j] -= t;
                    }
                    for i in 0..c {
                        let t = &q * &v.a[i][k];
                        v.a[i][j] -= t;
                    }
                }
                if !a[k][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'reduce;
            }

            // Divisibility: the pivot must divide every remaining entry.
            let mut fixed = true;
            'scan: for i in k + 1..r {
                for j in k + 1..c {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        // Fold row i into row k and restart the reduction.
                        for t in 0..c {
                            let add = a[i][t].clone();
                            a[k][t] += add;
                        }
                        for t in 0..r {
                            let add = u.a[i][t].clone();
                            u.a[k][t] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'reduce;
            }
        }

        if a[k][k].is_negative() {
            for j in 0..c {
                a[k][j] = -a[k][j].clone();
            }
            for j in 0..r {
                u.a[k][j] = -u.a[k][j].clone();
            }
        }
    }

    let diag: Vec<BigInt> = (0..min).map(|k| a[k][k].clone()).take_while(|d| !d.is_zero()).collect();
    let rank = diag.len();
    Snf { d: IntMat { rows: r, cols: c, a }, u, v, diag, rank }
}

/// Rank over the rationals (equal to the integer rank).
pub fn rank_rational(m: &IntMat) -> usize {
    smith_normal_form(m).rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) -> Snf {
        let s = smith_normal_form(m);
        // u m v = d
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        // transforms are unimodular
        assert_eq!(s.u.det().abs(), BigInt::one());
        assert_eq!(s.v.det().abs(), BigInt::one());
        // divisibility chain, positive entries
        for w in s.diag.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        for d in &s.diag {
            assert!(*d > BigInt::zero());
        }
        // off-diagonal zero
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    assert!(s.d.a[i][j].is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn pinned_example() {
        // Invariant factors of [[2,4],[-2,6]] are (2,10).
        let s = check(&IntMat::from_i64(&[vec![2, 4], vec![-2, 6]]));
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(10)]);
    }

    #[test]
    fn klein_bottle_style_torsion() {
        // diag(2) with a unit row mixed in.
        let s = check(&IntMat::from_i64(&[vec![1, 1], vec![1, -1]]));
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(s.rank_mod_p(2), 1);
        assert_eq!(s.rank_mod_p(3), 2);
    }

    #[test]
    fn rectangular_and_zero() {
        let s = check(&IntMat::from_i64(&[vec![0, 0, 0], vec![0, 0, 0]]));
        assert_eq!(s.rank, 0);
        let s = check(&IntMat::from_i64(&[vec![1, 2, 3]]));
        assert_eq!(s.diag, vec![BigInt::from(1)]);
        let s = check(&IntMat::from_i64(&[
            vec![6, 4, 2],
            vec![4, 8, 6],
        ]));
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn known_4x4() {
        let s = check(&IntMat::from_i64(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]));
        assert_eq!(
            s.diag,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
    }

    #[test]
    fn randomized_roundtrip() {
        // Deterministic pseudo-random small matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let r = (next() % 5 + 1) as usize;
            let c = (next() % 5 + 1) as usize;
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| (next() % 21) as i64 - 10).collect())
                .collect();
            check(&IntMat::from_i64(&rows));
        }
    }
}
