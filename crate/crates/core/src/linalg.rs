//! Exact rank computations over ℚ for integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over ℚ of the integer matrix whose rows are given, by fraction-free
/// (Bareiss) elimination.
pub fn rank<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(&mut m)
}

pub(crate) fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Incrementally maintained set of linearly independent integer vectors,
/// kept in echelon form with primitive rows.
#[derive(Clone, Debug, Default)]
pub struct IndependentSet {
    dim: usize,
    // (pivot column, row)
    basis: Vec<(usize, Vec<BigInt>)>,
}

impl IndependentSet {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (pivot, row) in &self.basis {
            if w[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = w[*pivot].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj = &a * &*wj - &b * rj;
            }
            make_primitive(&mut w);
        }
        w
    }

    /// True when `v` lies in the span of the set.
    pub fn spans(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current set; returns whether it
    /// was added.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let w = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // eliminate the new pivot from older rows so every pivot column has a
        // single nonzero entry
        for (_, row) in self.basis.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let a = w[pivot].clone();
            let b = row[pivot].clone();
            for (rj, wj) in row.iter_mut().zip(&w) {
                *rj = &a * &*rj - &b * wj;
            }
            make_primitive(row);
        }
        self.basis.push((pivot, w));
        true
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    let g = g.abs();
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}
