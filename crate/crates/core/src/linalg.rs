//! Dense matrices over [`QScalar`] with exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::qscalar::QScalar;

pub type Vector = Vec<QScalar>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<QScalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![QScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &QScalar::one())
    }

    pub fn scalar(n: usize, s: &QScalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<QScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| QScalar::from_int(x)).collect()).collect(),
        )
    }

    /// Matrix whose columns are the given vectors (all of length `n`).
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        Self::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn diag(entries: &[QScalar]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { QScalar::zero() })
    }

    /// `(n+1)×(n+1)` matrix with the given entries on the superdiagonal.
    pub fn superdiag(entries: &[QScalar]) -> Self {
        let n = entries.len() + 1;
        Self::from_fn(n, n, |i, j| if j == i + 1 { entries[i].clone() } else { QScalar::zero() })
    }

    /// `(n+1)×(n+1)` matrix with the given entries on the subdiagonal.
    pub fn subdiag(entries: &[QScalar]) -> Self {
        let n = entries.len() + 1;
        Self::from_fn(n, n, |i, j| if i == j + 1 { entries[j].clone() } else { QScalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[QScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QScalar::is_zero)
    }

    fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.shape(), found: rhs.shape() });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out[(i, j)] += &t;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }

    pub fn mul_vec(&self, v: &[QScalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = QScalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&QScalar, &QScalar) -> QScalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &QScalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Kronecker product; the row index of the result is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let a = &self[(i / rhs.rows, j / rhs.cols)];
            if a.is_zero() {
                return QScalar::zero();
            }
            a * &rhs[(i % rhs.rows, j % rhs.cols)]
        })
    }

    pub fn trace(&self) -> QScalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// `Some(s)` when the matrix equals `s * id`.
    pub fn scalar_value(&self) -> Option<QScalar> {
        if !self.is_square() {
            return None;
        }
        let s = if self.rows == 0 { QScalar::zero() } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect_zero = i != j;
                let e = &self[(i, j)];
                if (expect_zero && !e.is_zero()) || (!expect_zero && *e != s) {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack column mismatch");
        Matrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|b| b.data.iter().cloned()).collect(),
        }
    }

    /// Horizontal concatenation.
    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let refs: Vec<Matrix> = blocks.iter().map(|b| b.transpose()).collect();
        let refs: Vec<&Matrix> = refs.iter().collect();
        Matrix::vstack(&refs).transpose()
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen by
    /// smallest representation size to limit intermediate growth.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let best = (r..a.rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by_key(|&i| a[(i, c)].weight());
            let Some(p) = best else { continue };
            a.swap_rows(r, p);
            let inv = a[(r, c)].inv().expect("nonzero pivot");
            for j in c..a.cols {
                if !a[(r, j)].is_zero() {
                    a[(r, j)] = &a[(r, j)] * &inv;
                }
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    let t = &f * &a[(r, j)];
                    a[(i, j)] -= &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![QScalar::zero(); self.cols];
                v[f] = QScalar::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, as a subset of the original columns.
    pub fn column_basis(&self) -> Vec<Vector> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: "square".into(), found: self.shape() });
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, &Matrix::identity(n)]);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Unique solution `X` of `A X = B`.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.shape(), found: b.shape() });
        }
        let n = self.cols;
        let aug = Matrix::hstack(&[self, b]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::Singular);
        }
        if pivots.len() < n {
            return Err(Error::RankDeficient);
        }
        Ok(Matrix::from_fn(n, b.cols, |i, j| r[(i, n + j)].clone()))
    }

    /// Replace `q` by a rational value in every entry.
    pub fn substitute(&self, q0: &BigRational) -> Result<Matrix> {
        let data = self.data.iter().map(|x| x.substitute(q0)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Distinct nontrivial denominators appearing among the entries; their
    /// roots are the values of `q` at which the matrix is undefined.
    pub fn denominators(&self) -> Vec<QScalar> {
        let mut out: Vec<QScalar> = Vec::new();
        for x in &self.data {
            if x.denominator().is_constant() {
                continue;
            }
            let d = QScalar::from_parts(x.denominator().clone(), 0, crate::qscalar::IntPoly::one())
                .expect("nonzero denominator");
            if !out.contains(&d) {
                out.push(d);
            }
        }
        out
    }

    /// Entries rendered as strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Matrix> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<QScalar>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if parsed.iter().any(|r| r.len() != parsed[0].len()) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        Ok(Matrix::from_rows(parsed))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = QScalar;
    fn index(&self, (i, j): (usize, usize)) -> &QScalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_string_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// `a + s·b` for vectors.
pub fn axpy(a: &[QScalar], s: &QScalar, b: &[QScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + &(s * y)).collect()
}

pub fn is_zero_vec(v: &[QScalar]) -> bool {
    v.iter().all(QScalar::is_zero)
}
