use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::MatrixError;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from machine-integer rows. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&x| x.into()).collect();
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
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

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Result<BigInt, MatrixError> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Submatrix on the given (ordered) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &IntMatrix,
        op: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Result<IntMatrix, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| op(a, b)).collect(),
        })
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // exact by Sylvester's identity
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Rank over the rationals, via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..m {
                for j in col + 1..n {
                    let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Largest absolute value among the entries (zero for an empty matrix).
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    // Elementary operations used by the Smith normal form.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_add(rhs).expect("matrix sum dimension mismatch")
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_sub(rhs).expect("matrix difference dimension mismatch")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_cases() {
        assert_eq!(IntMatrix::identity(4).det().unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-8));
        // companion matrix of T^2 - 3T + 1
        let c = IntMatrix::from_rows(&[vec![0, -1], vec![1, 3]]);
        assert_eq!(c.det().unwrap(), BigInt::one());
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        // 0*(0+9) - 1*(8-12) + 2*(-3-0) = 4 - 6
        assert_eq!(m.det().unwrap(), BigInt::from(-2));
        let singular = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(singular.det().unwrap().is_zero());
    }

    #[test]
    fn det_rejects_rectangular() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(m.det(), Err(MatrixError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn new_checks_entry_count() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::one(); 3]).is_err());
    }

    #[test]
    fn rank_and_product() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let b = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let p = &a * &b;
        assert_eq!(p, IntMatrix::from_rows(&[vec![4, 5], vec![8, 10], vec![1, 2]]));
        assert!(a.checked_mul(&a.transpose().submatrix(&[0, 1], &[0])).is_err());
    }
}
