//! Groebner bases of submodules of `QQ[x_1, ..., x_r]^n`.
//!
//! Module terms are ordered position over term: a vector leads with its
//! first nonzero component, and within a component monomials compare by
//! degree reverse lexicographic order. With an augmented generator matrix
//! `[A | I]` this order eliminates the `A` block, so the basis elements
//! whose `A` part vanishes generate the syzygies of the rows of `A`.

use num_rational::BigRational;
use num_traits::One;

use crate::poly::{MPoly, Monomial};

pub(crate) type Vector = Vec<MPoly>;

#[derive(Clone, Debug)]
struct Lead {
    pos: usize,
    mono: Monomial,
    coeff: BigRational,
}

fn lead(v: &[MPoly]) -> Option<Lead> {
    v.iter().enumerate().find_map(|(pos, p)| {
        p.lead().map(|(m, c)| Lead {
            pos,
            mono: m.clone(),
            coeff: c.clone(),
        })
    })
}

fn lead_in(v: &[MPoly], limit: usize) -> Option<Lead> {
    lead(&v[..limit])
}

/// `target -= c * m * src`
fn sub_scaled(target: &mut Vector, c: &BigRational, m: &Monomial, src: &[MPoly]) {
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t = t.sub(&s.scale(c, m));
        }
    }
}

fn is_zero_vec(v: &[MPoly]) -> bool {
    v.iter().all(MPoly::is_zero)
}

/// Fully reduce `f` by `basis`, looking at positions `< limit` only.
/// Returns the remainder and the quotient coefficients.
pub(crate) fn reduce(f: &[MPoly], basis: &[Vector], limit: usize, nvars: usize) -> (Vector, Vec<MPoly>) {
    let mut rem: Vector = f.to_vec();
    let mut quot = vec![MPoly::zero(); basis.len()];
    let leads: Vec<Option<Lead>> = basis.iter().map(|g| lead_in(g, limit)).collect();
    // walk the terms of the first `limit` positions from the top down
    for pos in 0..limit {
        let mut floor: Option<Monomial> = None;
        loop {
            let next = rem[pos]
                .terms()
                .rev()
                .find(|(m, _)| floor.as_ref().map_or(true, |f| *m < f))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = next else { break };
            let divisor = leads.iter().enumerate().find_map(|(i, l)| {
                l.as_ref()
                    .filter(|l| l.pos == pos && l.mono.divides(&m))
                    .map(|l| (i, l))
            });
            match divisor {
                Some((i, l)) => {
                    let q = l.mono.quotient(&m);
                    let qc = &c / &l.coeff;
                    sub_scaled(&mut rem, &qc, &q, &basis[i]);
                    quot[i] = quot[i].add(&MPoly::term(qc, q));
                }
                None => floor = Some(m),
            }
        }
    }
    let _ = nvars;
    (rem, quot)
}

fn spoly(f: &[MPoly], g: &[MPoly], lf: &Lead, lg: &Lead) -> Vector {
    let l = lf.mono.lcm(&lg.mono);
    let mf = lf.mono.quotient(&l);
    let mg = lg.mono.quotient(&l);
    let cf = BigRational::one() / &lf.coeff;
    let cg = BigRational::one() / &lg.coeff;
    f.iter()
        .zip(g)
        .map(|(a, b)| a.scale(&cf, &mf).sub(&b.scale(&cg, &mg)))
        .collect()
}

/// Reduced Groebner basis of the rows, for positions `< limit` treated as
/// the ordered part and trailing positions carried along. Elements whose
/// leading position is `>= limit` are returned as well (they lead in the
/// carried block).
pub(crate) fn groebner(rows: Vec<Vector>, nvars: usize) -> Vec<Vector> {
    let width = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vector> = Vec::new();
    for r in rows {
        let (rem, _) = reduce(&r, &basis, width, nvars);
        if !is_zero_vec(&rem) {
            basis.push(rem);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (Some(li), Some(lj)) = (lead(&basis[i]), lead(&basis[j])) else {
            continue;
        };
        if li.pos != lj.pos {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], &li, &lj);
        let (rem, _) = reduce(&s, &basis, width, nvars);
        if !is_zero_vec(&rem) {
            let k = basis.len();
            basis.push(rem);
            for i in 0..k {
                pairs.push((i, k));
            }
        }
    }
    interreduce(basis, width, nvars)
}

/// Minimalize, make monic and tail-reduce.
fn interreduce(mut basis: Vec<Vector>, width: usize, nvars: usize) -> Vec<Vector> {
    // drop elements whose lead is divisible by another lead
    let mut keep: Vec<Vector> = Vec::new();
    basis.retain(|v| !is_zero_vec(v));
    for (i, v) in basis.iter().enumerate() {
        let lv = lead(v).unwrap();
        let redundant = basis.iter().enumerate().any(|(j, w)| {
            if i == j {
                return false;
            }
            let lw = lead(w).unwrap();
            lw.pos == lv.pos && lw.mono.divides(&lv.mono) && (lw.mono != lv.mono || j < i)
        });
        if !redundant {
            keep.push(v.clone());
        }
    }
    let mut out: Vec<Vector> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Vector> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let l = lead(&keep[i]).unwrap();
        // reduce everything but the leading term
        let mut tail = keep[i].clone();
        tail[l.pos] = tail[l.pos].sub(&MPoly::term(l.coeff.clone(), l.mono.clone()));
        let (rem, _) = reduce(&tail, &others, width, nvars);
        let mut v = rem;
        v[l.pos] = v[l.pos].add(&MPoly::term(l.coeff.clone(), l.mono.clone()));
        let inv = BigRational::one() / &l.coeff;
        let one = Monomial::one(nvars);
        let v: Vector = v.iter().map(|p| p.scale(&inv, &one)).collect();
        out.push(v);
    }
    out.sort_by(|a, b| {
        let la = lead(a).unwrap();
        let lb = lead(b).unwrap();
        la.pos.cmp(&lb.pos).then(lb.mono.cmp(&la.mono))
    });
    out
}

pub(crate) fn leads_in_block(v: &[MPoly], limit: usize) -> bool {
    lead_in(v, limit).is_some()
}
