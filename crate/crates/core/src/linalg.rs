//! Dense matrices over a [`Ring`], with elimination routines when the
//! entries form a [`Field`].

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::scalar::{ExactSign, Field, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, ctx: &R::Ctx) -> Self {
        Matrix { rows, cols, ctx: ctx.clone(), data: vec![R::zero(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &R::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m[(i, i)] = R::one(ctx);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: &R::Ctx, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, ctx: ctx.clone(), data }
    }

    /// Builds a matrix from row vectors. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<R>>, ctx: &R::Ctx) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, ctx: ctx.clone(), data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.ctx, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(&self.ctx, |x| x.clone() * k.clone())
    }

    /// Top-left `k × k` block.
    pub fn leading(&self, k: usize) -> Self {
        Self::from_fn(k, k, &self.ctx, |i, j| self[(i, j)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cur = out[(i, j)].clone();
                        out[(i, j)] = cur + a.clone() * b.clone();
                    }
                }
            }
        }
        Some(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data }
    }

    /// Division-free determinant: Laplace expansion by rows, memoised over
    /// the set of columns already used. `O(2^n · n)` ring operations, so
    /// only sensible up to order ~20, but valid over any commutative ring.
    pub fn det_expansion(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n <= 20, "expansion determinant limited to order 20");
        let mut dp: Vec<Option<R>> = vec![None; 1 << n];
        dp[0] = Some(R::one(&self.ctx));
        for mask in 0usize..(1 << n) {
            let Some(acc) = dp[mask].take() else { continue };
            let row = mask.count_ones() as usize;
            if row == n {
                dp[mask] = Some(acc);
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = &self[(row, col)];
                if entry.is_zero() {
                    continue;
                }
                // parity of used columns to the right of `col`
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = acc.clone() * entry.clone();
                if inversions % 2 == 1 {
                    term = -term;
                }
                let next = mask | (1 << col);
                dp[next] = Some(match dp[next].take() {
                    Some(prev) => prev + term,
                    None => term,
                });
            }
        }
        dp[(1 << n) - 1].take().unwrap_or_else(|| R::zero(&self.ctx))
    }
}

impl<R: Field> Matrix<R> {
    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = R::one(&self.ctx);
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return R::zero(&self.ctx);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            let inv = pivot.inv().expect("nonzero pivot");
            det = det * pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - factor.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Self::from_fn(n, 2 * n, &self.ctx, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                R::one(&self.ctx)
            } else {
                R::zero(&self.ctx)
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, &self.ctx, |i, j| red[(i, j + n)].clone()))
    }

    /// Basis of the right null space `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<R>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![R::zero(&self.ctx); self.cols];
                v[f] = R::one(&self.ctx);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -red[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solves `M x = b` when the system is consistent.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, &self.ctx, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![R::zero(&self.ctx); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<R: Field + ExactSign> Matrix<R> {
    /// All leading principal minors, smallest first.
    pub fn leading_minors(&self) -> Vec<R> {
        (1..=self.rows).map(|k| self.leading(k).det()).collect()
    }
}

impl<R: Ring> Index<(usize, usize)> for Matrix<R> {
    type Output = R;

    fn index(&self, (i, j): (usize, usize)) -> &R {
        assert!(i < self.rows && j < self.cols, "matrix index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl<R: Ring> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        assert!(i < self.rows && j < self.cols, "matrix index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;

    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{rat, ratio, QuadScalar, Rational};

    fn rm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), &())
    }

    #[test]
    fn determinants_agree() {
        let m = rm(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        assert_eq!(m.det(), m.det_expansion());
        // hand-expanded 3x3
        let a = rm(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(a.det(), rat(-3));
        assert_eq!(a.det_expansion(), rat(-3));
        let singular = rm(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), rat(0));
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn integer_ring_expansion() {
        let m: Matrix<i64> = Matrix::from_rows(vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]], &());
        assert_eq!(m.det_expansion(), -3);
    }

    #[test]
    fn inverse_and_solve() {
        let a = rm(&[&[2, 1], &[5, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2, &()));
        assert_eq!(a.solve(&[rat(1), rat(2)]).unwrap(), vec![rat(1), rat(-1)]);
        assert!(rm(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert!(rm(&[&[1, 1], &[1, 1]]).solve(&[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = rm(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_fn(3, 1, &(), |i, _| v[i].clone());
            assert!((&a * &col).is_zero());
        }
    }

    #[test]
    fn quadratic_entries() {
        let s = QuadScalar::sqrt_p(3);
        let one = QuadScalar::one_in(3);
        let m = Matrix::from_rows(vec![vec![s.clone(), -one.clone()], vec![-one.clone(), s.clone()]], &3);
        assert_eq!(m.det(), QuadScalar::from_int(2, 3));
        assert_eq!(m.det_expansion(), QuadScalar::from_int(2, 3));
        assert_eq!(m.leading_minors(), vec![s, QuadScalar::from_int(2, 3)]);
        let half = Matrix::from_rows(vec![vec![ratio(1, 2)]], &());
        assert_eq!(half.inverse().unwrap()[(0, 0)], rat(2));
    }

    #[test]
    fn floats_work_too() {
        let m: Matrix<f64> = Matrix::from_rows(vec![vec![4.0, 2.0], vec![2.0, 3.0]], &());
        assert!((m.det() - 8.0).abs() < 1e-12);
        assert_eq!(m.leading_minors().len(), 2);
    }
}
