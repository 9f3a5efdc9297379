//! Dense matrices over a [`Ring`].
//!
//! Rows are generators of left modules (`x ↦ x·A`), columns generators of
//! right modules (`x ↦ A·x`). Matrices with zero rows or zero columns are
//! ordinary values and compose like any other.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Build from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let nrows = rows.len();
        Self::new(ring, nrows, cols, rows.into_iter().flatten().collect())
    }

    /// Integer entries mapped into the ring; handy for literals.
    pub fn from_ints(ring: &Ring, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: entries.iter().map(|&e| ring.from_i64(e)).collect(),
        }
    }

    /// Parse a rectangular array of element strings.
    pub fn parse(ring: &Ring, rows: &[Vec<String>], cols: usize) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_elem(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, parsed, cols)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let r = &self.ring;
        let mut out = Matrix::zero(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.map(|e| self.ring.neg(e))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        self.map(|e| self.ring.mul(c, e))
    }

    fn map(&self, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Entrywise image under a ring map.
    pub fn map_into(&self, target: &Ring, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack_all(ring: &Ring, rows: usize, parts: &[&Matrix]) -> Matrix {
        parts
            .iter()
            .fold(Matrix::zero(ring, rows, 0), |acc, m| acc.hstack(m))
    }

    pub fn vstack_all(ring: &Ring, cols: usize, parts: &[&Matrix]) -> Matrix {
        parts
            .iter()
            .fold(Matrix::zero(ring, 0, cols), |acc, m| acc.vstack(m))
    }

    /// `diag(self, other)`
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let top = self.hstack(&Matrix::zero(&self.ring, self.rows, other.cols));
        let bottom = Matrix::zero(&self.ring, other.rows, self.cols).hstack(other);
        top.vstack(&bottom)
    }

    /// Kronecker product, row-major block layout.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let r = &self.ring;
        let mut out = Matrix::zero(r, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if r.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, r.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    pub fn select_rows(&self, range: Range<usize>) -> Matrix {
        let rows = range.len();
        Matrix {
            ring: self.ring.clone(),
            rows,
            cols: self.cols,
            data: self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    pub fn pick_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            ring: self.ring.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, range: Range<usize>) -> Matrix {
        let cols = range.len();
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.row(i)[range.clone()]);
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Row-major flattening into a single row.
    pub fn flatten_row(&self) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            rows: 1,
            cols: self.data.len(),
            data: self.data.clone(),
        }
    }

    /// Inverse of [`Matrix::flatten_row`].
    pub fn unflatten(ring: &Ring, row: &[Elem], rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: row.to_vec(),
        }
    }

    /// Rows with at least one nonzero entry.
    pub fn nonzero_rows(&self) -> Matrix {
        let keep: Vec<usize> = (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|e| !self.ring.is_zero(e)))
            .collect();
        self.pick_rows(&keep)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| self.ring.format(e)).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[{}x{} empty]", self.rows, self.cols);
        }
        let rows: Vec<String> = self
            .to_strings()
            .into_iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_matrices_compose() {
        let z = Ring::Integers;
        let a = Matrix::zero(&z, 2, 0);
        let b = Matrix::from_ints(&z, 2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(a.hstack(&b), b);
        let p = Matrix::zero(&z, 3, 0).mul(&Matrix::zero(&z, 0, 4));
        assert_eq!(p, Matrix::zero(&z, 3, 4));
        assert_eq!(Matrix::identity(&z, 0).shape(), (0, 0));
    }

    #[test]
    fn kron_matches_definition() {
        let z = Ring::Integers;
        let a = Matrix::from_ints(&z, 1, 2, &[1, 2]);
        let b = Matrix::from_ints(&z, 2, 1, &[3, 4]);
        assert_eq!(a.kron(&b), Matrix::from_ints(&z, 2, 2, &[3, 6, 4, 8]));
    }
}
