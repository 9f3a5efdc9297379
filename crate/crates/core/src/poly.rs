//! Dense univariate and sparse multivariate polynomials.
//!
//! Univariate coefficients are elements of a base field (`QQ` or `GF(p)`)
//! and all arithmetic is routed through that field. Multivariate
//! polynomials are over `QQ` and ordered by degree reverse lexicographic
//! order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{Elem, Ring};

/// Polynomial in one variable, coefficients in ascending degree order.
/// Trailing zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Elem>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(base: &Ring, coeffs: Vec<Elem>) -> Self {
        let mut p = UPoly { coeffs };
        p.trim(base);
        p
    }

    pub fn constant(base: &Ring, c: Elem) -> Self {
        Self::from_coeffs(base, vec![c])
    }

    /// `c * x^d`
    pub fn monomial(base: &Ring, c: Elem, d: usize) -> Self {
        let mut coeffs = vec![base.zero(); d];
        coeffs.push(c);
        Self::from_coeffs(base, coeffs)
    }

    fn trim(&mut self, base: &Ring) {
        while self.coeffs.last().map_or(false, |c| base.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UPoly, base: &Ring) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = base.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                base.add(a, b)
            })
            .collect();
        UPoly::from_coeffs(base, coeffs)
    }

    pub fn neg(&self, base: &Ring) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| base.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &UPoly, base: &Ring) -> UPoly {
        self.add(&other.neg(base), base)
    }

    pub fn scale(&self, c: &Elem, base: &Ring) -> UPoly {
        UPoly::from_coeffs(base, self.coeffs.iter().map(|a| base.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &UPoly, base: &Ring) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![base.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if base.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = base.add(&coeffs[i + j], &base.mul(a, b));
            }
        }
        UPoly::from_coeffs(base, coeffs)
    }

    /// Long division by a nonzero divisor over the base field.
    pub fn div_rem(&self, divisor: &UPoly, base: &Ring) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lead = base
            .inverse(divisor.lead().unwrap())
            .expect("leading coefficient over a field is a unit");
        let mut rem = self.clone();
        let mut quot = vec![base.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = base.mul(rem.lead().unwrap(), &inv_lead);
            let shift = rd - dd;
            quot[shift] = c.clone();
            let t = UPoly::monomial(base, c, shift).mul(divisor, base);
            rem = rem.sub(&t, base);
        }
        (UPoly::from_coeffs(base, quot), rem)
    }

    pub fn eval(&self, at: &Elem, base: &Ring) -> Elem {
        let mut acc = base.zero();
        for c in self.coeffs.iter().rev() {
            acc = base.add(&base.mul(&acc, at), c);
        }
        acc
    }
}

/// Exponent vector ordered by degree reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `QQ`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn lead(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The constant value if the polynomial has no variables in it.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        MPoly { terms }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational, m: &Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut acc = MPoly::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.scale(c, m));
        }
        acc
    }

    pub fn pow(&self, e: u32, nvars: usize) -> MPoly {
        let mut acc = MPoly::constant(nvars, BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> MPoly {
        match self.lead() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                MPoly {
                    terms: self.terms.iter().map(|(m, a)| (m.clone(), a * &inv)).collect(),
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Elem {
        Elem::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    #[test]
    fn upoly_division_identity() {
        let base = Ring::Rationals;
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let a = UPoly::from_coeffs(&base, vec![q(-1), q(0), q(0), q(1)]);
        let b = UPoly::from_coeffs(&base, vec![q(-1), q(1)]);
        let (quot, rem) = a.div_rem(&b, &base);
        assert!(rem.is_zero());
        assert_eq!(quot, UPoly::from_coeffs(&base, vec![q(1), q(1), q(1)]));
    }

    #[test]
    fn degrevlex_order() {
        // x*y > z^2?  degree equal; last var z: 0 < 2, so x*y is larger
        let xy = Monomial(vec![1, 1, 0]);
        let zz = Monomial(vec![0, 0, 2]);
        assert!(xy > zz);
        let x2 = Monomial(vec![2, 0, 0]);
        assert!(x2 > xy);
        assert!(Monomial(vec![0, 0, 3]) > x2);
    }
}
