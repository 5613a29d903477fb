use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::scalars::Field;
use crate::{Error, Result};

/// Dense row-major matrix. Matrices act on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(
    serialize = "T: Serialize + Clone",
    deserialize = "T: Deserialize<'de> + Clone"
))]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> TryFrom<Vec<Vec<T>>> for Matrix<T> {
    type Error = Error;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows_checked(rows, cols)
    }
}

impl<T: Clone> From<Matrix<T>> for Vec<Vec<T>> {
    fn from(m: Matrix<T>) -> Self {
        m.to_rows()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Matrix<T> {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; `cols` fixes the width when there are no rows.
    pub fn from_rows_checked(rows: Vec<Vec<T>>, cols: usize) -> Result<Matrix<T>> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Matrix<T> {
        Matrix::from_rows_checked(rows, cols).expect("ragged rows")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [T] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows_iter().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: other.rows });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        }))
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<F> {
        Matrix::filled(rows, cols, F::zero())
    }

    pub fn identity(n: usize) -> Matrix<F> {
        Matrix::from_fn(n, n, |r, c| if r == c { F::one() } else { F::zero() })
    }

    pub fn diagonal(d: &[F]) -> Matrix<F> {
        let n = d.len();
        Matrix::from_fn(n, n, |r, c| if r == c { d[r].clone() } else { F::zero() })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let cur = std::mem::replace(&mut out[(r, c)], F::zero());
                        out[(r, c)] = cur + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        self.map(|a| a.clone() * s)
    }

    /// [A, B] = AB − BA.
    pub fn commutator(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let ab = self.mul(rhs).expect("square matrices");
        let ba = rhs.mul(self).expect("square matrices");
        ab.sub(&ba)
    }

    /// Bilinear form value xᵀ·self·y.
    pub fn bilinear(&self, x: &[F], y: &[F]) -> F {
        dot(x, &self.mul_vec(y))
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for k in c..self.cols {
                    let v = std::mem::replace(&mut self[(r, k)], F::zero());
                    self[(r, k)] = v * &inv;
                }
            }
            let pivot_row: Vec<F> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let v = std::mem::replace(&mut self[(i, c + k)], F::zero());
                        self[(i, c + k)] = v - &(f.clone() * pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Null space {v : self·v = 0}.
    pub fn kernel(&self) -> super::Subspace<F> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -m[(k, f)].clone();
            }
            basis.push(v);
        }
        super::Subspace::from_vectors(self.cols, basis)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n)).ok()?;
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| aug[(r, n + c)].clone()))
    }
}

pub fn dot<F: Field>(x: &[F], y: &[F]) -> F {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = F::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + &(a.clone() * b);
        }
    }
    acc
}

pub fn axpy<F: Field>(acc: &mut [F], a: &F, x: &[F]) {
    if a.is_zero() {
        return;
    }
    for (s, v) in acc.iter_mut().zip(x) {
        if !v.is_zero() {
            let cur = std::mem::replace(s, F::zero());
            *s = cur + &(a.clone() * v);
        }
    }
}

pub fn scaled<F: Field>(a: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|v| a.clone() * v).collect()
}

pub fn vec_add<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b).collect()
}

pub fn vec_sub<F: Field>(x: &[F], y: &[F]) -> Vec<F> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b).collect()
}

pub fn unit_vector<F: Field>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(F::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
    }

    #[test]
    fn kernel_small_cases() {
        assert_eq!(Matrix::<Rational>::identity(3).kernel().dim(), 0);
        assert_eq!(Matrix::<Rational>::zeros(3, 3).kernel().dim(), 3);
        let k = mat(&[&[1, 1]]).kernel();
        assert_eq!(k.basis().to_rows(), vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis().rows_iter() {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1], &[5, 3]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn json_is_nested_rows() {
        let m = mat(&[&[1, 0], &[0, -1]]);
        let s = serde_json::to_string(&m).unwrap();
        let back: Matrix<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Matrix<Rational>>("[[[1,1]],[]]").is_err());
    }
}
