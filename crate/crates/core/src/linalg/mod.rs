//! Exact linear algebra over the shipped rings.
//!
//! Everything is driven by one echelon computation on the augmented
//! matrix `[A | I]`: leading rows with a pivot inside `A` give the
//! canonical row form `H` together with the transforms `U` (`H = U·A`),
//! and rows whose `A` part vanished give generators of the left kernel.

#[cfg(feature = "multivariate")]
pub(crate) mod groebner;
pub(crate) mod hermite;
pub mod howell;
mod smith;
pub mod system;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Engine, Ring};

pub use smith::Smith;
pub use system::LinearSystem;

/// The echelon data of `[A | I]`.
#[derive(Clone, Debug)]
struct Echelon {
    /// Rows of the canonical form of `A`, each with its pivot column.
    h: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    /// `u[i] · A = h[i]`.
    u: Vec<Vec<Elem>>,
    /// Generators of the left kernel of `A`.
    kernel: Vec<Vec<Elem>>,
    /// Rows of `A` that reduce to zero when `U` is square.
    zero_rows: usize,
}

fn augmented_rows(a: &Matrix) -> Vec<Vec<Elem>> {
    let ring = a.ring();
    let m = a.rows();
    (0..m)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend((0..m).map(|j| if i == j { ring.one() } else { ring.zero() }));
            row
        })
        .collect()
}

fn echelon(a: &Matrix) -> Echelon {
    let ring = a.ring();
    let (m, n) = a.shape();
    match ring.engine() {
        Engine::Euclidean => {
            let mut rows = augmented_rows(a);
            let pivots = hermite::hermite_in_place(ring, &mut rows, n + m);
            let mut e = Echelon {
                h: Vec::new(),
                pivots: Vec::new(),
                u: Vec::new(),
                kernel: Vec::new(),
                zero_rows: 0,
            };
            for (i, mut row) in rows.into_iter().enumerate() {
                let u = row.split_off(n);
                match pivots.get(i) {
                    Some(&p) if p < n => {
                        e.h.push(row);
                        e.pivots.push(p);
                        e.u.push(u);
                    }
                    _ => {
                        e.kernel.push(u);
                        e.zero_rows += 1;
                    }
                }
            }
            e
        }
        Engine::Howell(modulus) => {
            let rows: Vec<Vec<u64>> = augmented_rows(a)
                .iter()
                .map(|r| r.iter().map(to_u64).collect())
                .collect();
            let (rows, pivots) = howell::howell(rows, n + m, modulus);
            let mut e = Echelon {
                h: Vec::new(),
                pivots: Vec::new(),
                u: Vec::new(),
                kernel: Vec::new(),
                zero_rows: 0,
            };
            for (row, &p) in rows.into_iter().zip(&pivots) {
                let mut row: Vec<Elem> = row.into_iter().map(|x| Elem::Int(BigInt::from(x))).collect();
                let u = row.split_off(n);
                if p < n {
                    e.h.push(row);
                    e.pivots.push(p);
                    e.u.push(u);
                } else {
                    e.kernel.push(u);
                }
            }
            e
        }
        Engine::Groebner => groebner_echelon(a),
    }
}

#[cfg(feature = "multivariate")]
fn groebner_echelon(a: &Matrix) -> Echelon {
    use crate::poly::MPoly;
    let ring = a.ring();
    let (m, n) = a.shape();
    let nvars = ring.variables().len();
    let as_poly = |e: &Elem| match e {
        Elem::MPoly(p) => p.clone(),
        _ => unreachable!(),
    };
    let rows: Vec<Vec<MPoly>> = augmented_rows(a)
        .iter()
        .map(|r| r.iter().map(as_poly).collect())
        .collect();
    let basis = if n + m == 0 { Vec::new() } else { groebner::groebner(rows, nvars) };
    let mut e = Echelon {
        h: Vec::new(),
        pivots: Vec::new(),
        u: Vec::new(),
        kernel: Vec::new(),
        zero_rows: 0,
    };
    for mut v in basis {
        let u: Vec<Elem> = v.split_off(n).into_iter().map(Elem::MPoly).collect();
        if groebner::leads_in_block(&v, n) {
            let p = v.iter().position(|x| !x.is_zero()).unwrap();
            e.h.push(v.into_iter().map(Elem::MPoly).collect());
            e.pivots.push(p);
            e.u.push(u);
        } else {
            e.kernel.push(u);
        }
    }
    e
}

#[cfg(not(feature = "multivariate"))]
fn groebner_echelon(_: &Matrix) -> Echelon {
    unreachable!("multivariate rings cannot be constructed without the feature")
}

fn to_u64(e: &Elem) -> u64 {
    match e {
        Elem::Int(x) => x.to_u64().expect("canonical residue"),
        _ => unreachable!(),
    }
}

fn check_ring(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch(a.ring().to_string(), b.ring().to_string()));
    }
    Ok(())
}

fn matrix(ring: &Ring, rows: Vec<Vec<Elem>>, cols: usize) -> Matrix {
    Matrix::from_rows(ring, rows, cols).expect("rectangular")
}

/// `(H, U)` with `H = U·A`, `H` the canonical row form of `A`.
///
/// Over `ZZ`, fields and `K[x]` the form is the Hermite normal form with
/// all `m` rows kept (zero rows last) and `U` is invertible. Over `ZZ/n`
/// (Howell form) and `QQ[x, ...]` (reduced Groebner basis) only the
/// nonzero rows are returned; `U` then certifies one containment and
/// [`solve_left`] the other.
pub fn row_reduce(a: &Matrix) -> (Matrix, Matrix) {
    let ring = a.ring();
    let (m, n) = a.shape();
    let e = echelon(a);
    let mut h = e.h;
    let mut u = e.u;
    if ring.engine() == Engine::Euclidean {
        h.extend((0..e.zero_rows).map(|_| vec![ring.zero(); n]));
        u.extend(e.kernel);
    }
    (matrix(ring, h, n), matrix(ring, u, m))
}

/// Nonzero rows of the canonical row form; equal row modules give equal
/// matrices.
pub fn row_basis(a: &Matrix) -> Matrix {
    let e = echelon(a);
    matrix(a.ring(), e.h, a.cols())
}

/// Whether the rows of `a` and `b` generate the same module.
pub fn same_row_module(a: &Matrix, b: &Matrix) -> bool {
    a.cols() == b.cols() && row_basis(a) == row_basis(b)
}

/// `X` with `X·A = B`, or `None` when no such `X` exists.
pub fn solve_left(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    check_ring(a, b)?;
    if a.cols() != b.cols() {
        return Err(Error::Dimension(format!(
            "solve_left: A is {}x{}, B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ring = a.ring();
    let m = a.rows();
    if b.rows() == 0 {
        return Ok(Some(Matrix::zero(ring, 0, m)));
    }
    let e = echelon(a);
    let mut out = Vec::with_capacity(b.rows());
    for i in 0..b.rows() {
        match reduce_row(ring, &e, b.row(i), m) {
            Some(x) => out.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(matrix(ring, out, m)))
}

fn reduce_row(ring: &Ring, e: &Echelon, b: &[Elem], m: usize) -> Option<Vec<Elem>> {
    if ring.engine() == Engine::Groebner {
        return reduce_row_groebner(ring, e, b, m);
    }
    let mut rem = b.to_vec();
    let mut x = vec![ring.zero(); m];
    for ((h, u), &p) in e.h.iter().zip(&e.u).zip(&e.pivots) {
        if ring.is_zero(&rem[p]) {
            continue;
        }
        let q = ring.divide(&rem[p], &h[p])?;
        let nq = ring.neg(&q);
        hermite::axpy(ring, &mut rem, &nq, h);
        hermite::axpy(ring, &mut x, &q, u);
    }
    rem.iter().all(|r| ring.is_zero(r)).then_some(x)
}

#[cfg(feature = "multivariate")]
fn reduce_row_groebner(ring: &Ring, e: &Echelon, b: &[Elem], m: usize) -> Option<Vec<Elem>> {
    use crate::poly::MPoly;
    let as_poly = |v: &[Elem]| -> Vec<MPoly> {
        v.iter()
            .map(|x| match x {
                Elem::MPoly(p) => p.clone(),
                _ => unreachable!(),
            })
            .collect()
    };
    let nvars = ring.variables().len();
    let basis: Vec<Vec<MPoly>> = e.h.iter().map(|h| as_poly(h)).collect();
    let target = as_poly(b);
    let (rem, quot) = groebner::reduce(&target, &basis, b.len(), nvars);
    if rem.iter().any(|p| !p.is_zero()) {
        return None;
    }
    let mut x = vec![ring.zero(); m];
    for (q, u) in quot.into_iter().zip(&e.u) {
        hermite::axpy(ring, &mut x, &Elem::MPoly(q), u);
    }
    Some(x)
}

#[cfg(not(feature = "multivariate"))]
fn reduce_row_groebner(_: &Ring, _: &Echelon, _: &[Elem], _: usize) -> Option<Vec<Elem>> {
    unreachable!()
}

/// Rows generating `{ y | y·A = 0 }`.
pub fn left_kernel(a: &Matrix) -> Matrix {
    let e = echelon(a);
    matrix(a.ring(), e.kernel, a.rows())
}

/// Columns generating `{ x | A·x = 0 }`.
pub fn right_kernel(a: &Matrix) -> Matrix {
    left_kernel(&a.transpose()).transpose()
}

/// `X` with `A·X = B`, or `None`.
pub fn solve_right(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    Ok(solve_left(&a.transpose(), &b.transpose())?.map(|x| x.transpose()))
}

/// Smith normal form `S = U·A·V` over the principal ideal domains.
pub fn smith_form(a: &Matrix) -> Result<Smith> {
    let ring = a.ring();
    match ring {
        Ring::IntegersMod(p) if ring.is_field() => {
            let field = Ring::PrimeField(*p);
            let s = smith::smith(&a.map_into(&field, Elem::clone));
            let back = |m: &Matrix| m.map_into(ring, Elem::clone);
            Ok(Smith {
                s: back(&s.s),
                u: back(&s.u),
                v: back(&s.v),
            })
        }
        _ if ring.is_pid() => Ok(smith::smith(a)),
        _ => Err(Error::Unsupported {
            op: "smith_form",
            ring: ring.to_string(),
        }),
    }
}

/// Invariant factors of the module presented by `a` (`n` generators): the
/// Smith diagonal padded with zeros to length `n`, with units dropped.
/// Zeros stand for free summands.
pub fn invariant_factors(a: &Matrix) -> Result<Vec<Elem>> {
    let ring = a.ring();
    let s = smith_form(a)?;
    let d = s.diagonal();
    Ok((0..a.cols())
        .map(|i| d.get(i).cloned().unwrap_or_else(|| ring.zero()))
        .filter(|x| !ring.is_unit(x))
        .collect())
}

#[cfg(test)]
mod tests;
