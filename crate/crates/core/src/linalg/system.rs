//! Linear systems in matrix unknowns.
//!
//! A system has unknown blocks `X_1, ..., X_r` and equations
//! `Σ P·X_k·Q = C`. It is vectorized row-major and handed to
//! [`solve_left`](super::solve_left): `vec(P·X·Q) = vec(X)·(Pᵀ ⊗ Q)`.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Handle of an unknown block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unknown(usize);

#[derive(Clone, Debug)]
struct Term {
    unknown: usize,
    p: Matrix,
    q: Matrix,
}

#[derive(Clone, Debug)]
struct Equation {
    rhs: Matrix,
    terms: Vec<Term>,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    ring: Ring,
    shapes: Vec<(usize, usize)>,
    equations: Vec<Equation>,
}

impl LinearSystem {
    pub fn new(ring: &Ring) -> Self {
        LinearSystem {
            ring: ring.clone(),
            shapes: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> Unknown {
        self.shapes.push((rows, cols));
        Unknown(self.shapes.len() - 1)
    }

    /// Start an equation with right-hand side `rhs`; returns its index.
    pub fn equation(&mut self, rhs: Matrix) -> usize {
        self.equations.push(Equation {
            rhs,
            terms: Vec::new(),
        });
        self.equations.len() - 1
    }

    /// Add `P·X·Q` to the left-hand side of equation `eq`.
    pub fn term(&mut self, eq: usize, p: &Matrix, x: Unknown, q: &Matrix) -> Result<()> {
        let (r, c) = self.shapes[x.0];
        let rhs = &self.equations[eq].rhs;
        if p.cols() != r || q.rows() != c || p.rows() != rhs.rows() || q.cols() != rhs.cols() {
            return Err(Error::Dimension(format!(
                "term {}x{} · X({r}x{c}) · {}x{} in an equation of shape {}x{}",
                p.rows(),
                p.cols(),
                q.rows(),
                q.cols(),
                rhs.rows(),
                rhs.cols()
            )));
        }
        self.equations[eq].terms.push(Term {
            unknown: x.0,
            p: p.clone(),
            q: q.clone(),
        });
        Ok(())
    }

    /// Add `P·X`.
    pub fn left(&mut self, eq: usize, p: &Matrix, x: Unknown) -> Result<()> {
        let q = Matrix::identity(&self.ring, self.shapes[x.0].1);
        self.term(eq, p, x, &q)
    }

    /// Add `X·Q`.
    pub fn right(&mut self, eq: usize, x: Unknown, q: &Matrix) -> Result<()> {
        let p = Matrix::identity(&self.ring, self.shapes[x.0].0);
        self.term(eq, &p, x, q)
    }

    fn offsets(&self) -> (Vec<usize>, usize) {
        let mut offs = Vec::with_capacity(self.shapes.len());
        let mut total = 0;
        for &(r, c) in &self.shapes {
            offs.push(total);
            total += r * c;
        }
        (offs, total)
    }

    /// The coefficient matrix `T` and the right-hand side row `c` of the
    /// vectorized system `x·T = c`.
    fn vectorize(&self) -> (Matrix, Matrix) {
        let (offs, nvars) = self.offsets();
        let ncols: usize = self.equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).sum();
        let mut t = Matrix::zero(&self.ring, nvars, ncols);
        let mut rhs = Vec::with_capacity(ncols);
        let mut col = 0;
        for e in &self.equations {
            for term in &e.terms {
                let block = term.p.transpose().kron(&term.q);
                let off = offs[term.unknown];
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        let v = self.ring.add(t.get(off + i, col + j), block.get(i, j));
                        t.set(off + i, col + j, v);
                    }
                }
            }
            rhs.extend_from_slice(e.rhs.entries());
            col += e.rhs.rows() * e.rhs.cols();
        }
        let c = Matrix::new(&self.ring, 1, ncols, rhs).expect("rhs length");
        (t, c)
    }

    fn split(&self, x: &[crate::ring::Elem]) -> Vec<Matrix> {
        let (offs, _) = self.offsets();
        self.shapes
            .iter()
            .zip(offs)
            .map(|(&(r, c), off)| Matrix::unflatten(&self.ring, &x[off..off + r * c], r, c))
            .collect()
    }

    /// One solution, block by block, or `None`.
    pub fn solve(&self) -> Result<Option<Vec<Matrix>>> {
        let (t, c) = self.vectorize();
        Ok(super::solve_left(&t, &c)?.map(|x| self.split(x.row(0))))
    }

    /// Generators of the solutions of the homogeneous system.
    pub fn homogeneous_generators(&self) -> Vec<Vec<Matrix>> {
        let (t, _) = self.vectorize();
        let k = super::left_kernel(&t);
        (0..k.rows()).map(|i| self.split(k.row(i))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_two_sided_equation() {
        let z = Ring::Integers;
        // [[1,1]] · X · [[2],[0]] = [[6]]  (X 2x2)
        let mut s = LinearSystem::new(&z);
        let x = s.unknown(2, 2);
        let eq = s.equation(Matrix::from_ints(&z, 1, 1, &[6]));
        let p = Matrix::from_ints(&z, 1, 2, &[1, 1]);
        let q = Matrix::from_ints(&z, 2, 1, &[2, 0]);
        s.term(eq, &p, x, &q).unwrap();
        let sol = s.solve().unwrap().unwrap();
        assert_eq!(p.mul(&sol[0]).mul(&q), Matrix::from_ints(&z, 1, 1, &[6]));
    }

    #[test]
    fn detects_unsolvable() {
        let z = Ring::Integers;
        let mut s = LinearSystem::new(&z);
        let x = s.unknown(1, 1);
        let eq = s.equation(Matrix::from_ints(&z, 1, 1, &[3]));
        s.left(eq, &Matrix::from_ints(&z, 1, 1, &[2]), x).unwrap();
        assert!(s.solve().unwrap().is_none());
    }
}
