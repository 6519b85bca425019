//! Dense integer matrices with exact arithmetic.
//!
//! Incidence matrices follow the column-vector convention: a `t_n x t_{n-1}`
//! matrix maps the stage `n-1` lattice into the stage `n` lattice, and entry
//! `(i, j)` counts edges from vertex `j` of the upper level to vertex `i` of
//! the lower level.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
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
            m.data[i * n + i] = T::one();
        }
        m
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

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from small integer literals; handy for fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_i64(x).expect("literal fits")).collect())
            .collect();
        Self::from_rows(rows).expect("rectangular literal")
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_bigint(&self) -> Matrix<BigInt> {
        self.map(Scalar::to_big)
    }

    /// `self * other`.
    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = cell.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.data.iter().all(Signed::is_positive)
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(T::zero(), |acc, x| acc + x.clone()))
            .collect()
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_big).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            for r in rank + 1..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let (p, q) = (m[rank][col].clone(), m[r][col].clone());
                let (upper, lower) = m.split_at_mut(r);
                for (x, y) in lower[0][col..].iter_mut().zip(&upper[rank][col..]) {
                    *x = &*x * &p - y * &q;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Outcome of the primitivity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitivity {
    /// `C^k` is strictly positive and `k` is minimal.
    Yes(usize),
    No,
}

impl Primitivity {
    pub fn is_yes(&self) -> bool {
        matches!(self, Primitivity::Yes(_))
    }
}

/// Wielandt's bound `n^2 - 2n + 2` on the exponent of a primitive `n x n` matrix.
pub fn wielandt_bound(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (n - 1) * (n - 1) + 1
    }
}

/// Decides primitivity of a square nonnegative matrix.
///
/// Works on the zero pattern only. A primitive matrix reaches a strictly
/// positive power no later than the Wielandt bound, so the search is exact.
pub fn is_primitive<T: Scalar>(c: &Matrix<T>) -> Result<Primitivity> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        });
    }
    if !c.is_nonnegative() {
        return Err(Error::Precondition("matrix has negative entries".into()));
    }
    let n = c.rows();
    if n == 0 {
        return Ok(Primitivity::No);
    }
    let pattern: Vec<Vec<bool>> = (0..n)
        .map(|i| c.row(i).iter().map(|x| !x.is_zero()).collect())
        .collect();
    let mut power = pattern.clone();
    for k in 1..=wielandt_bound(n) {
        if power.iter().all(|r| r.iter().all(|&b| b)) {
            return Ok(Primitivity::Yes(k));
        }
        power = bool_mul(&power, &pattern);
    }
    Ok(Primitivity::No)
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![false; m]; n];
    for i in 0..n {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik {
                for j in 0..m {
                    out[i][j] |= b[k][j];
                }
            }
        }
    }
    out
}

/// Sum of the entries of a vector.
pub fn vec_sum<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, x| acc + x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Matrix<i64>;

    #[test]
    fn product_and_power() {
        let c = M::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(c.pow(2).unwrap(), M::from_i64_rows(&[&[2, 1], &[1, 1]]));
        assert_eq!(c.pow(0).unwrap(), M::identity(2));
        let c1 = M::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let c2 = M::from_i64_rows(&[&[2, 1], &[0, 1]]);
        assert_eq!(c2.mul(&c1).unwrap(), M::from_i64_rows(&[&[3, 3], &[1, 1]]));
    }

    #[test]
    fn dimension_errors() {
        let a = M::zeros(2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.pow(2).is_err());
        assert!(a.mul_vec(&[1, 2]).is_err());
    }

    #[test]
    fn primitivity_examples() {
        assert_eq!(is_primitive(&M::from_i64_rows(&[&[2]])).unwrap(), Primitivity::Yes(1));
        assert_eq!(
            is_primitive(&M::from_i64_rows(&[&[1, 1], &[1, 0]])).unwrap(),
            Primitivity::Yes(2)
        );
        assert_eq!(
            is_primitive(&M::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap(),
            Primitivity::No
        );
        assert_eq!(
            is_primitive(&M::from_i64_rows(&[&[2, 0], &[0, 2]])).unwrap(),
            Primitivity::No
        );
        assert!(is_primitive(&M::zeros(1, 2)).is_err());
    }

    #[test]
    fn wielandt_matrix_attains_bound() {
        // Wielandt's extremal matrix for n = 3.
        let w = M::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
        assert_eq!(is_primitive(&w).unwrap(), Primitivity::Yes(wielandt_bound(3)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(M::from_i64_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(M::from_i64_rows(&[&[1, 1], &[1, 0]]).rank(), 2);
        assert_eq!(M::zeros(3, 2).rank(), 0);
        assert_eq!(M::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).rank(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(M::from_i64_rows(&[&[1, 1], &[1, 0]]).to_string(), "[[1,1],[1,0]]");
    }
}
