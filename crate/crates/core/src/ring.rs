//! Ring descriptors and exact element arithmetic.
//!
//! A [`Ring`] is a small value describing one of the shipped commutative
//! backends; elements are [`Elem`] values that are always kept in the
//! canonical form of their ring (residues in `[0, n)`, reduced fractions,
//! trimmed polynomials). All arithmetic is exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, UPoly};

/// Coefficient field of a univariate polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

impl BaseField {
    pub fn ring(&self) -> Ring {
        match self {
            BaseField::Rationals => Ring::Rationals,
            BaseField::Prime(p) => Ring::PrimeField(*p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// `ZZ/n`, `n >= 2`.
    IntegersMod(u64),
    /// `GF(p)`, `p` prime.
    PrimeField(u64),
    /// `K[x]` for `K = QQ` or `GF(p)`.
    Univariate { base: BaseField, var: String },
    /// `QQ[x, y, ...]` with degree reverse lexicographic order.
    Multivariate { vars: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Poly(UPoly),
    MPoly(MPoly),
}

/// Which normal-form engine answers linear algebra questions for a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Hermite normal form over a Euclidean domain (`ZZ`, fields, `K[x]`).
    Euclidean,
    /// Howell form over `ZZ/n`.
    Howell(u64),
    /// Groebner bases of submodules of `QQ[x, ...]^n`.
    Groebner,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn modulo(a: &BigInt, n: u64) -> BigInt {
    a.mod_floor(&BigInt::from(n))
}

impl Ring {
    pub fn parse(text: &str) -> Result<Ring> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::UnknownRing(text.to_string());
        let parse_vars = |inner: &str| -> Result<Vec<String>> {
            let vars: Vec<String> = inner.split(',').map(str::to_string).collect();
            for v in &vars {
                let mut chars = v.chars();
                let ok = chars.next().map_or(false, |c| c.is_ascii_alphabetic())
                    && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok {
                    return Err(bad());
                }
            }
            for (i, v) in vars.iter().enumerate() {
                if vars[..i].contains(v) {
                    return Err(Error::InvalidRing(format!("repeated variable `{v}`")));
                }
            }
            Ok(vars)
        };
        match t.as_str() {
            "ZZ" => return Ok(Ring::Integers),
            "QQ" => return Ok(Ring::Rationals),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("ZZ/") {
            let n: u64 = rest.parse().map_err(|_| bad())?;
            if n < 2 {
                return Err(Error::InvalidRing(format!("modulus {n} must be at least 2")));
            }
            if n > (1u64 << 62) {
                return Err(Error::InvalidRing(format!("modulus {n} is too large")));
            }
            return Ok(Ring::IntegersMod(n));
        }
        if let Some(rest) = t.strip_prefix("GF(") {
            let close = rest.find(')').ok_or_else(bad)?;
            let p: u64 = rest[..close].parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::InvalidRing(format!("GF({p}): {p} is not prime")));
            }
            if p > (1u64 << 62) {
                return Err(Error::InvalidRing(format!("characteristic {p} is too large")));
            }
            let tail = &rest[close + 1..];
            if tail.is_empty() {
                return Ok(Ring::PrimeField(p));
            }
            let inner = tail
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(bad)?;
            let vars = parse_vars(inner)?;
            if vars.len() != 1 {
                return Err(Error::InvalidRing(
                    "polynomial rings over GF(p) are univariate".into(),
                ));
            }
            return Ok(Ring::Univariate {
                base: BaseField::Prime(p),
                var: vars[0].clone(),
            });
        }
        if let Some(rest) = t.strip_prefix("QQ[") {
            let inner = rest.strip_suffix(']').ok_or_else(bad)?;
            let vars = parse_vars(inner)?;
            if vars.len() == 1 {
                return Ok(Ring::Univariate {
                    base: BaseField::Rationals,
                    var: vars[0].clone(),
                });
            }
            if cfg!(feature = "multivariate") {
                return Ok(Ring::Multivariate { vars });
            }
            return Err(Error::Unsupported {
                op: "multivariate polynomial rings (enable feature `multivariate`)",
                ring: t,
            });
        }
        Err(bad())
    }

    pub fn engine(&self) -> Engine {
        match self {
            Ring::IntegersMod(n) => Engine::Howell(*n),
            Ring::Multivariate { .. } => Engine::Groebner,
            _ => Engine::Euclidean,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ring::IntegersMod(_) | Ring::PrimeField(_))
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Rationals | Ring::PrimeField(_) => true,
            Ring::IntegersMod(n) => is_prime(*n),
            _ => false,
        }
    }

    pub fn is_pid(&self) -> bool {
        match self {
            Ring::Integers | Ring::Rationals | Ring::PrimeField(_) | Ring::Univariate { .. } => true,
            Ring::IntegersMod(n) => is_prime(*n),
            Ring::Multivariate { .. } => false,
        }
    }

    /// Every shipped backend is coherent.
    pub fn is_coherent(&self) -> bool {
        true
    }

    /// Number of elements for finite rings.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Ring::IntegersMod(n) | Ring::PrimeField(n) => Some(*n),
            _ => None,
        }
    }

    /// The modulus of a finite ring.
    pub fn modulus(&self) -> Option<u64> {
        self.cardinality()
    }

    /// All elements of a finite ring, in canonical order.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        self.cardinality()
            .map(|n| (0..n).map(|i| Elem::Int(BigInt::from(i))).collect())
    }

    pub fn variables(&self) -> Vec<String> {
        match self {
            Ring::Univariate { var, .. } => vec![var.clone()],
            Ring::Multivariate { vars } => vars.clone(),
            _ => Vec::new(),
        }
    }

    // ---------------------------------------------------------------------
    // constructors

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => Elem::Int(BigInt::zero()),
            Ring::Rationals => Elem::Rat(BigRational::zero()),
            Ring::Univariate { .. } => Elem::Poly(UPoly::zero()),
            Ring::Multivariate { .. } => Elem::MPoly(MPoly::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_int(&big(n))
    }

    /// Image of an integer under the unique ring map from `ZZ`.
    pub fn from_int(&self, n: &BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(n.clone()),
            Ring::IntegersMod(m) | Ring::PrimeField(m) => Elem::Int(modulo(n, *m)),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Ring::Univariate { base, .. } => {
                let b = base.ring();
                Elem::Poly(UPoly::constant(&b, b.from_int(n)))
            }
            Ring::Multivariate { vars } => Elem::MPoly(MPoly::constant(
                vars.len(),
                BigRational::from_integer(n.clone()),
            )),
        }
    }

    /// Image of a rational number, if its denominator is invertible here.
    pub fn from_rational(&self, q: &BigRational) -> Option<Elem> {
        if q.denom().is_one() {
            return Some(self.from_int(q.numer()));
        }
        match self {
            Ring::Integers => None,
            Ring::Rationals => Some(Elem::Rat(q.clone())),
            Ring::IntegersMod(_) | Ring::PrimeField(_) => {
                let d = self.from_int(q.denom());
                let inv = self.inverse(&d)?;
                Some(self.mul(&self.from_int(q.numer()), &inv))
            }
            Ring::Univariate { base, .. } => {
                let b = base.ring();
                Some(Elem::Poly(UPoly::constant(&b, b.from_rational(q)?)))
            }
            Ring::Multivariate { vars } => Some(Elem::MPoly(MPoly::constant(vars.len(), q.clone()))),
        }
    }

    /// The `i`-th polynomial variable.
    pub fn var(&self, i: usize) -> Option<Elem> {
        match self {
            Ring::Univariate { base, .. } if i == 0 => {
                let b = base.ring();
                Some(Elem::Poly(UPoly::monomial(&b, b.one(), 1)))
            }
            Ring::Multivariate { vars } if i < vars.len() => Some(Elem::MPoly(MPoly::term(
                BigRational::one(),
                Monomial::var(vars.len(), i),
            ))),
            _ => None,
        }
    }

    // ---------------------------------------------------------------------
    // arithmetic

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Rat(x) => x.is_zero(),
            Elem::Poly(p) => p.is_zero(),
            Elem::MPoly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Ring::IntegersMod(n) | Ring::PrimeField(n), Elem::Int(x), Elem::Int(y)) => {
                let s = x + y;
                let nn = BigInt::from(*n);
                Elem::Int(if s >= nn { s - nn } else { s })
            }
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Ring::Univariate { base, .. }, Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.add(y, &base.ring()))
            }
            (Ring::Multivariate { .. }, Elem::MPoly(x), Elem::MPoly(y)) => Elem::MPoly(x.add(y)),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => Elem::Int(-x),
            (Ring::IntegersMod(n) | Ring::PrimeField(n), Elem::Int(x)) => {
                if x.is_zero() {
                    Elem::Int(x.clone())
                } else {
                    Elem::Int(BigInt::from(*n) - x)
                }
            }
            (Ring::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Ring::Univariate { base, .. }, Elem::Poly(x)) => Elem::Poly(x.neg(&base.ring())),
            (Ring::Multivariate { .. }, Elem::MPoly(x)) => Elem::MPoly(x.neg()),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Ring::IntegersMod(n) | Ring::PrimeField(n), Elem::Int(x), Elem::Int(y)) => {
                Elem::Int((x * y) % BigInt::from(*n))
            }
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Ring::Univariate { base, .. }, Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.mul(y, &base.ring()))
            }
            (Ring::Multivariate { .. }, Elem::MPoly(x), Elem::MPoly(y)) => Elem::MPoly(x.mul(y)),
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn pow(&self, a: &Elem, e: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => {
                (x.abs().is_one()).then(|| Elem::Int(x.clone()))
            }
            (Ring::IntegersMod(n) | Ring::PrimeField(n), Elem::Int(x)) => {
                let nn = BigInt::from(*n);
                let e = x.extended_gcd(&nn);
                e.gcd.is_one().then(|| Elem::Int(e.x.mod_floor(&nn)))
            }
            (Ring::Rationals, Elem::Rat(x)) => (!x.is_zero()).then(|| Elem::Rat(x.recip())),
            (Ring::Univariate { base, .. }, Elem::Poly(p)) => {
                if p.degree() == Some(0) {
                    let b = base.ring();
                    let inv = b.inverse(p.lead().unwrap())?;
                    Some(Elem::Poly(UPoly::constant(&b, inv)))
                } else {
                    None
                }
            }
            (Ring::Multivariate { vars }, Elem::MPoly(p)) => {
                let c = p.as_constant()?;
                (!c.is_zero()).then(|| Elem::MPoly(MPoly::constant(vars.len(), c.recip())))
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// `b / a` when `a` divides `b` (the quotient need not be unique over
    /// `ZZ/n`; the smallest nonnegative one is returned there).
    pub fn divide(&self, b: &Elem, a: &Elem) -> Option<Elem> {
        match self {
            Ring::IntegersMod(n) => {
                let (Elem::Int(x), Elem::Int(y)) = (b, a) else { unreachable!() };
                let nn = BigInt::from(*n);
                let g = y.gcd(&nn);
                if !(x % &g).is_zero() {
                    return None;
                }
                let n2 = &nn / &g;
                let y2 = y / &g;
                let x2 = x / &g;
                if n2.is_one() {
                    return Some(self.zero());
                }
                let inv = y2.extended_gcd(&n2).x.mod_floor(&n2);
                Some(Elem::Int((x2 * inv).mod_floor(&n2)))
            }
            Ring::Multivariate { .. } => {
                if self.is_zero(b) {
                    return Some(self.zero());
                }
                let inv = self.inverse(a)?;
                Some(self.mul(b, &inv))
            }
            _ => {
                if self.is_zero(a) {
                    return self.is_zero(b).then(|| self.zero());
                }
                let (q, r) = self.div_rem(b, a);
                self.is_zero(&r).then_some(q)
            }
        }
    }

    // ---------------------------------------------------------------------
    // Euclidean structure (ZZ, fields, K[x])

    /// Division with remainder; the remainder is canonical modulo `b`
    /// (nonnegative over `ZZ`, of smaller degree over `K[x]`, zero over a
    /// field).
    pub fn div_rem(&self, a: &Elem, b: &Elem) -> (Elem, Elem) {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => {
                let r = x.mod_floor(&y.abs());
                let q = (x - &r) / y;
                (Elem::Int(q), Elem::Int(r))
            }
            (Ring::Rationals | Ring::PrimeField(_), _, _) => {
                let inv = self.inverse(b).expect("division by zero");
                (self.mul(a, &inv), self.zero())
            }
            (Ring::Univariate { base, .. }, Elem::Poly(x), Elem::Poly(y)) => {
                let (q, r) = x.div_rem(y, &base.ring());
                (Elem::Poly(q), Elem::Poly(r))
            }
            _ => panic!("div_rem is not available over {self}"),
        }
    }

    /// Euclidean size; smaller is closer to a unit.
    pub fn euclid_size(&self, a: &Elem) -> BigInt {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => x.abs(),
            (Ring::Univariate { .. }, Elem::Poly(p)) => {
                BigInt::from(p.degree().map_or(-1, |d| d as i64))
            }
            _ => {
                if self.is_zero(a) {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// The unit `u` such that `u * a` is the canonical associate of `a`.
    pub fn unit_normal(&self, a: &Elem) -> Elem {
        if self.is_zero(a) {
            return self.one();
        }
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => self.from_i64(if x.is_negative() { -1 } else { 1 }),
            (Ring::Rationals | Ring::PrimeField(_), _) => self.inverse(a).unwrap(),
            (Ring::Univariate { base, .. }, Elem::Poly(p)) => {
                let b = base.ring();
                Elem::Poly(UPoly::constant(&b, b.inverse(p.lead().unwrap()).unwrap()))
            }
            (Ring::Multivariate { vars }, Elem::MPoly(p)) => {
                let c = p.lead().unwrap().1.recip();
                Elem::MPoly(MPoly::constant(vars.len(), c))
            }
            (Ring::IntegersMod(n), Elem::Int(x)) => {
                let x = x.to_u64().unwrap();
                Elem::Int(BigInt::from(crate::linalg::howell::normalizing_unit(x, *n)))
            }
            _ => unreachable!(),
        }
    }

    pub fn normalize(&self, a: &Elem) -> Elem {
        self.mul(&self.unit_normal(a), a)
    }

    /// Extended gcd `(g, s, t)` with `g = s*a + t*b` and `g` canonical.
    pub fn xgcd(&self, a: &Elem, b: &Elem) -> (Elem, Elem, Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = self.unit_normal(&r0);
        (self.mul(&u, &r0), self.mul(&u, &s0), self.mul(&u, &t0))
    }

    // ---------------------------------------------------------------------
    // parsing and printing

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let vars = self.variables();
        let poly = crate::expr::parse_polynomial(text, &vars)?;
        self.from_qpoly(&poly).ok_or_else(|| Error::ElementSyntax {
            text: text.to_string(),
            reason: format!("not an element of {self}"),
        })
    }

    /// Convert a polynomial with rational coefficients in this ring's
    /// variables.
    pub(crate) fn from_qpoly(&self, p: &MPoly) -> Option<Elem> {
        match self {
            Ring::Multivariate { .. } => Some(Elem::MPoly(p.clone())),
            Ring::Univariate { base, .. } => {
                let b = base.ring();
                let deg = p.total_degree().unwrap_or(0) as usize;
                let mut coeffs = vec![b.zero(); deg + 1];
                for (m, c) in p.terms() {
                    coeffs[m.0[0] as usize] = b.from_rational(c)?;
                }
                Some(Elem::Poly(UPoly::from_coeffs(&b, coeffs)))
            }
            _ => self.from_rational(&p.as_constant()?),
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match (self, a) {
            (_, Elem::Int(x)) => x.to_string(),
            (_, Elem::Rat(x)) => x.to_string(),
            (Ring::Univariate { base, var }, Elem::Poly(p)) => {
                let b = base.ring();
                let terms: Vec<(String, String)> = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !b.is_zero(c))
                    .map(|(d, c)| {
                        let mono = match d {
                            0 => String::new(),
                            1 => var.clone(),
                            _ => format!("{var}^{d}"),
                        };
                        (b.format(c), mono)
                    })
                    .collect();
                join_terms(terms)
            }
            (Ring::Multivariate { vars }, Elem::MPoly(p)) => {
                let terms: Vec<(String, String)> = p
                    .terms()
                    .rev()
                    .map(|(m, c)| {
                        let mono: Vec<String> = m
                            .0
                            .iter()
                            .enumerate()
                            .filter(|(_, e)| **e > 0)
                            .map(|(i, e)| {
                                if *e == 1 {
                                    vars[i].clone()
                                } else {
                                    format!("{}^{}", vars[i], e)
                                }
                            })
                            .collect();
                        (c.to_string(), mono.join("*"))
                    })
                    .collect();
                join_terms(terms)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }
}

/// Join `(coefficient, monomial)` pairs into `a*m - b*n + c` form.
fn join_terms(terms: Vec<(String, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (coeff, mono)) in terms.into_iter().enumerate() {
        let (negative, mag) = match coeff.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, coeff),
        };
        let body = if mono.is_empty() {
            mag
        } else if mag == "1" {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "ZZ"),
            Ring::Rationals => write!(f, "QQ"),
            Ring::IntegersMod(n) => write!(f, "ZZ/{n}"),
            Ring::PrimeField(p) => write!(f, "GF({p})"),
            Ring::Univariate {
                base: BaseField::Rationals,
                var,
            } => write!(f, "QQ[{var}]"),
            Ring::Univariate {
                base: BaseField::Prime(p),
                var,
            } => write!(f, "GF({p})[{var}]"),
            Ring::Multivariate { vars } => write!(f, "QQ[{}]", vars.join(",")),
        }
    }
}

impl Elem {
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Elem::Int(x) => Some(x),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_strings_round_trip() {
        for s in ["ZZ", "QQ", "ZZ/12", "GF(7)", "GF(7)[x]", "QQ[x]", "QQ[x,y]"] {
            assert_eq!(Ring::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn ring_string_errors() {
        assert!(Ring::parse("ZZ/1").is_err());
        assert!(Ring::parse("GF(8)").is_err());
        assert!(Ring::parse("RR").is_err());
        assert!(Ring::parse("QQ[x,x]").is_err());
    }

    #[test]
    fn capability_flags() {
        let z12 = Ring::parse("ZZ/12").unwrap();
        assert!(z12.is_finite() && !z12.is_field() && !z12.is_pid() && z12.is_coherent());
        let gf = Ring::parse("GF(7)").unwrap();
        assert!(gf.is_field() && gf.is_pid() && gf.is_finite());
        let qx = Ring::parse("QQ[x]").unwrap();
        assert!(qx.is_pid() && !qx.is_field() && !qx.is_finite());
    }

    #[test]
    fn modular_inverse() {
        let r = Ring::PrimeField(7);
        assert_eq!(r.inverse(&r.from_i64(3)), Some(r.from_i64(5)));
        let z = Ring::IntegersMod(4);
        assert_eq!(z.inverse(&z.from_i64(2)), None);
        assert_eq!(z.divide(&z.from_i64(2), &z.from_i64(2)), Some(z.from_i64(1)));
    }

    #[test]
    fn polynomial_printing() {
        let r = Ring::parse("QQ[x]").unwrap();
        let p = r.parse_elem("x^2 - 2*x + 1").unwrap();
        assert_eq!(r.format(&p), "x^2 - 2*x + 1");
        let q = r.parse_elem("-1/2*x^3 + 3").unwrap();
        assert_eq!(r.format(&q), "-1/2*x^3 + 3");
        let g = Ring::parse("GF(5)[t]").unwrap();
        let e = g.parse_elem("-t + 7").unwrap();
        assert_eq!(g.format(&e), "4*t + 2");
    }

    #[test]
    fn xgcd_over_integers() {
        let r = Ring::Integers;
        let (g, s, t) = r.xgcd(&r.from_i64(4), &r.from_i64(6));
        assert_eq!(g, r.from_i64(2));
        let back = r.add(&r.mul(&s, &r.from_i64(4)), &r.mul(&t, &r.from_i64(6)));
        assert_eq!(back, g);
    }
}
