//! Dense exact linear algebra over the rationals.
//!
//! The batch eliminator clears denominators row-wise and runs fraction-free
//! (Bareiss) forward elimination over big integers with deterministic
//! first-nonzero pivoting, then back-substitutes over rationals for reduced
//! forms. The incremental [`Subspace`] keeps a reduced row basis for span
//! bookkeeping (membership tests, saturation loops).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![rat_int(0); rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        ExactMatrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Stack another matrix below this one (same column count).
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = rat_int(0);
                for c in 0..self.cols {
                    let entry = self.get(r, c);
                    if !entry.is_zero() && !v[c].is_zero() {
                        acc += entry.clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Clear denominators row by row, producing an integer matrix.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    lcm = lcm.lcm(self.get(r, c).denom());
                }
                (0..self.cols)
                    .map(|c| {
                        let q = self.get(r, c);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect()
    }

    /// Fraction-free forward elimination. Returns the echelon rows (integer)
    /// and the pivot column of each eliminated row.
    fn bareiss(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut m = self.to_integer_rows();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(pivots.len());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Reduced row-echelon form: unit pivots, pivot columns cleared above and
    /// below. Returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let (echelon, pivots) = self.bareiss();
        let mut rows: Vec<Vec<Rational>> = echelon
            .iter()
            .zip(&pivots)
            .map(|(row, &p)| {
                let lead = Rational::from(row[p].clone());
                row.iter().map(|x| Rational::from(x.clone()) / lead.clone()).collect()
            })
            .collect();
        for k in (0..rows.len()).rev() {
            let p = pivots[k];
            for i in 0..k {
                let factor = rows[i][p].clone();
                if factor.is_zero() {
                    continue;
                }
                let lower = rows[k].clone();
                for (a, b) in rows[i].iter_mut().zip(&lower) {
                    *a -= factor.clone() * b.clone();
                }
            }
        }
        (rows, pivots)
    }

    /// Basis of the right nullspace, one vector per free column (ascending),
    /// each normalized so its first nonzero coordinate is 1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (rows, pivots) = self.rref();
        let mut out = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![rat_int(0); self.cols];
            v[f] = rat_int(1);
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -rows[k][f].clone();
            }
            out.push(normalize_first_nonzero(v));
        }
        out
    }
}

/// Scale a vector so its first nonzero coordinate is 1.
pub fn normalize_first_nonzero(mut v: Vec<Rational>) -> Vec<Rational> {
    if let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in &mut v {
            *x = x.clone() / first.clone();
        }
    }
    v
}

/// Incrementally maintained reduced row basis of a subspace of Q^dim.
#[derive(Debug, Clone)]
pub struct Subspace {
    dim: usize,
    /// Reduced rows sorted by pivot column; each has unit pivot and zeros in
    /// every other row's pivot column.
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduce `v` against the current rows; the residual is zero iff `v` is
    /// in the span.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let factor = v[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(row) {
                *a -= factor.clone() * b.clone();
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Rational::is_zero)
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut res = self.reduce(v);
        let Some(p) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = res[p].clone();
        for x in &mut res {
            *x = x.clone() / lead.clone();
        }
        // clear the new pivot column from existing rows to stay fully reduced
        for row in &mut self.rows {
            let factor = row[p].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in row.iter_mut().zip(&res) {
                *a -= factor.clone() * b.clone();
            }
        }
        let at = self.pivots.binary_search(&p).unwrap_err();
        self.pivots.insert(at, p);
        self.rows.insert(at, res);
        true
    }

    pub fn insert_all(&mut self, vecs: impl IntoIterator<Item = Vec<Rational>>) {
        for v in vecs {
            self.insert(v);
        }
    }

    /// Does this span equal the span of `other`?
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && other.basis().iter().all(|v| self.contains(v))
    }
}

/// `(dim(U+V), dim(U∩V))` for two row sets in the same ambient space.
pub fn sum_and_intersection(dim: usize, u: &[Vec<Rational>], v: &[Vec<Rational>]) -> (usize, usize) {
    let mut all = Subspace::new(dim);
    let mut du = Subspace::new(dim);
    let mut dv = Subspace::new(dim);
    for r in u {
        du.insert(r.clone());
        all.insert(r.clone());
    }
    for r in v {
        dv.insert(r.clone());
        all.insert(r.clone());
    }
    let sum = all.dim();
    (sum, du.dim() + dv.dim() - sum)
}

/// Rank of a list of vectors.
pub fn rank_of(dim: usize, vecs: &[Vec<Rational>]) -> usize {
    let mut s = Subspace::new(dim);
    for v in vecs {
        s.insert(v.clone());
    }
    s.dim()
}

/// True when a BigInt is exactly divisible (helper for Bareiss assertions).
#[allow(dead_code)]
fn divides(a: &BigInt, b: &BigInt) -> bool {
    !a.is_zero() && (b % a).abs().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix {
        let cols = rows[0].len();
        ExactMatrix::from_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(vec![vec![1, 0], vec![0, 1]]).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]).rank(), 2);
    }

    #[test]
    fn nullspace_examples() {
        // x + y = 0 -> line through (1, -1)
        let ns = m(vec![vec![1, 1]]).nullspace();
        assert_eq!(ns, vec![vec![rat_int(1), rat_int(-1)]]);
        // full-rank square matrix -> trivial nullspace
        assert!(m(vec![vec![1, 0], vec![0, 3]]).nullspace().is_empty());
        // rank-1 2x2
        let ns = m(vec![vec![1, 2], vec![2, 4]]).nullspace();
        assert_eq!(ns, vec![vec![rat_int(1), rat(-1, 2)]]);
    }

    #[test]
    fn rank_plus_nullity_is_width() {
        let a = m(vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        assert_eq!(a.rank() + a.nullspace().len(), a.cols());
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let a = m(vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]]);
        for v in a.nullspace() {
            assert!(a.mul_vec(&v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn elimination_is_deterministic() {
        let a = m(vec![vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 5]]);
        let (r1, p1) = a.rref();
        let (r2, p2) = a.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        // first-nonzero pivoting: row order of input decides ties
        assert_eq!(p1, vec![0, 1]);
    }

    #[test]
    fn subspace_membership_and_growth() {
        let mut s = Subspace::new(3);
        assert!(s.insert(vec![rat_int(1), rat_int(1), rat_int(0)]));
        assert!(s.insert(vec![rat_int(0), rat_int(1), rat_int(1)]));
        assert!(!s.insert(vec![rat_int(1), rat_int(2), rat_int(1)])); // dependent
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat_int(2), rat_int(3), rat_int(1)]));
        assert!(!s.contains(&[rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn sums_and_intersections() {
        let u = vec![vec![rat_int(1), rat_int(0), rat_int(0)], vec![rat_int(0), rat_int(1), rat_int(0)]];
        let v = vec![vec![rat_int(0), rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(0), rat_int(1)]];
        assert_eq!(sum_and_intersection(3, &u, &v), (3, 1));
        let w: Vec<Vec<Rational>> = vec![];
        assert_eq!(sum_and_intersection(3, &u, &w), (2, 0));
    }
}
