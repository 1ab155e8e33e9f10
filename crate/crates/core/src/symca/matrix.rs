use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::Field;

use super::ratfunc::RatFunc;

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RFMatrix = Matrix<RatFunc>;

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, x)| ((k / c, k % c), x))
    }

    pub fn map<U: Field>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Field>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        Self::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), o.get(k, j));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(b));
            }
            acc
        })
    }

    /// Entry-wise mathematical equality.
    pub fn equals(&self, o: &Self) -> bool {
        (self.rows, self.cols) == (o.rows, o.cols) && self.data.iter().zip(&o.data).all(|(a, b)| a.equals(b))
    }

    /// Determinant by cofactor expansion with memoized minors.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let full = (1u32 << n) - 1;
        let mut memo = HashMap::new();
        self.minor(full, full, &mut memo)
    }

    /// Determinant of the submatrix on the given row and column bitmasks.
    fn minor(&self, rows: u32, cols: u32, memo: &mut HashMap<(u32, u32), T>) -> T {
        if rows == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&(rows, cols)) {
            return v.clone();
        }
        let i = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << i);
        let mut acc = T::zero();
        let mut sign_pos = true;
        for j in 0..self.cols {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = self.get(i, j);
            if !a.is_zero() {
                let m = self.minor(rest, cols & !(1 << j), memo);
                if !m.is_zero() {
                    let t = a.times(&m);
                    acc = if sign_pos { acc.plus(&t) } else { acc.minus(&t) };
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert((rows, cols), acc.clone());
        acc
    }

    /// Inverse via the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let full = (1u32 << n) - 1;
        let mut memo = HashMap::new();
        let det = self.minor(full, full, &mut memo);
        if det.is_zero() {
            return Err(Error::Singular { det: det.to_string() });
        }
        let dinv = det.recip()?;
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // inverse[j][i] = (−1)^{i+j} M_{ij} / det
                let m = self.minor(full & !(1 << i), full & !(1 << j), &mut memo);
                if m.is_zero() {
                    continue;
                }
                let c = m.times(&dinv);
                inv[(j, i)] = if (i + j) % 2 == 0 { c } else { c.negated() };
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = b` by Gaussian elimination, choosing the lightest
    /// available pivot in each column. Returns the unique solution; an
    /// inconsistent system or a free unknown is reported as an error.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        assert_eq!(self.rows, b.len(), "right side length mismatch");
        let (n, m) = (self.rows, self.cols);
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let mut pivot_rows = Vec::with_capacity(m);
        let mut r = 0;
        for c in 0..m {
            let best = (r..n).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].weight());
            let Some(p) = best else {
                return Err(Error::NonUnique(format!("unknown {c} is not determined")));
            };
            a.swap(r, p);
            let inv = a[r][c].recip()?;
            for k in c..=m {
                a[r][k] = a[r][k].times(&inv);
            }
            for i in 0..n {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for k in c..=m {
                    if a[r][k].is_zero() {
                        continue;
                    }
                    a[i][k] = a[i][k].minus(&f.times(&a[r][k]));
                }
            }
            pivot_rows.push(r);
            r += 1;
        }
        for (i, row) in a.iter().enumerate().skip(r) {
            if !row[m].is_zero() {
                return Err(Error::Verification(format!("equation {i} is inconsistent: residual {}", row[m])));
            }
        }
        Ok(pivot_rows.into_iter().map(|i| a[i][m].clone()).collect())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::QuadRat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(i: usize) -> RatFunc {
        RatFunc::s(i)
    }

    #[test]
    fn symbolic_inverses() {
        let m = RFMatrix::from_rows(vec![vec![RatFunc::one(), RatFunc::zero()], vec![s(0), RatFunc::one()]]);
        let inv = m.inverse().unwrap();
        assert!(inv.equals(&RFMatrix::from_rows(vec![
            vec![RatFunc::one(), RatFunc::zero()],
            vec![-s(0), RatFunc::one()]
        ])));
        let k = s(1);
        let kd = RFMatrix::diag((0..5).map(|e| k.pow(e)).collect());
        let kinv = kd.inverse().unwrap();
        assert!(kinv.equals(&RFMatrix::diag((0..5).map(|e| k.pow(-e)).collect())));
        assert!(kd.mul(&kinv).equals(&RFMatrix::identity(5)));
    }

    #[test]
    fn singular_matrix_names_determinant() {
        let m = Matrix::from_rows(vec![vec![QuadRat::one(), QuadRat::from_int(2)], vec![QuadRat::from_int(2), QuadRat::from_int(4)]]);
        assert!(matches!(m.inverse(), Err(Error::Singular { det }) if det == "0"));
    }

    #[test]
    fn random_dense_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = Matrix::from_fn(3, 3, |_, _| QuadRat::from_parts((rng.gen_range(-9..=9), 1), (rng.gen_range(-9..=9), rng.gen_range(1..=4))));
            if m.det().is_zero() {
                continue;
            }
            let inv = m.inverse().unwrap();
            assert_eq!(m.mul(&inv), Matrix::identity(3));
            assert_eq!(inv.mul(&m), Matrix::identity(3));
        }
    }

    #[test]
    fn elimination() {
        // overdetermined, consistent
        let a = Matrix::from_rows(vec![
            vec![QuadRat::from_int(1), QuadRat::from_int(1)],
            vec![QuadRat::from_int(1), QuadRat::from_int(-1)],
            vec![QuadRat::from_int(2), QuadRat::from_int(0)],
        ]);
        let x = a.solve(&[QuadRat::from_int(3), QuadRat::from_int(1), QuadRat::from_int(4)]).unwrap();
        assert_eq!(x, vec![QuadRat::from_int(2), QuadRat::from_int(1)]);
        assert!(matches!(
            a.solve(&[QuadRat::from_int(3), QuadRat::from_int(1), QuadRat::from_int(5)]),
            Err(Error::Verification(_))
        ));
        let b = Matrix::from_rows(vec![vec![QuadRat::from_int(1), QuadRat::from_int(1)]]);
        assert!(matches!(b.solve(&[QuadRat::one()]), Err(Error::NonUnique(_))));
    }
}
