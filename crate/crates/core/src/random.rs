//! Random instances for property checks.

use rand::Rng;

use crate::fpfun::{agj_dual, FpFunctor, FunctorMorphism};
use crate::fpmod::{FpModule, ModuleMorphism};
use crate::matrix::Matrix;
use crate::ppform::PpFormula;
use crate::ring::{Elem, Ring};

/// A small element, zero with probability about 0.4.
pub fn elem<R: Rng>(ring: &Ring, rng: &mut R) -> Elem {
    if rng.gen_bool(0.4) {
        return ring.zero();
    }
    small(ring, rng)
}

fn small<R: Rng>(ring: &Ring, rng: &mut R) -> Elem {
    match ring {
        Ring::IntegersMod(n) | Ring::PrimeField(n) => ring.from_i64(rng.gen_range(0..*n as i64)),
        Ring::Integers | Ring::Rationals => ring.from_i64(rng.gen_range(-3..=3)),
        Ring::Univariate { .. } | Ring::Multivariate { .. } => {
            let base = match ring {
                Ring::Univariate { base, .. } => base.ring(),
                _ => Ring::Rationals,
            };
            let mut e = ring.zero();
            let nvars = ring.variables().len();
            for i in 0..=nvars {
                if i > 0 && rng.gen_bool(0.5) {
                    continue;
                }
                let c = match &base {
                    Ring::PrimeField(p) => rng.gen_range(0..*p as i64),
                    _ => rng.gen_range(-2..=2),
                };
                let t = ring.from_i64(c);
                let t = if i == 0 { t } else { ring.mul(&t, &ring.var(i - 1).expect("variable")) };
                e = ring.add(&e, &t);
            }
            e
        }
    }
}

pub fn matrix<R: Rng>(ring: &Ring, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data = (0..rows * cols).map(|_| elem(ring, rng)).collect();
    Matrix::new(ring, rows, cols, data).expect("sizes agree")
}

/// `coker(A)` with up to `max_gens` generators and `max_rels` relations.
pub fn module<R: Rng>(ring: &Ring, max_gens: usize, max_rels: usize, rng: &mut R) -> FpModule {
    let g = rng.gen_range(1..=max_gens.max(1));
    let r = rng.gen_range(0..=max_rels);
    FpModule::left(matrix(ring, r, g, rng))
}

/// A formula with `k` free and `l` bound variables in `m` equations.
pub fn formula<R: Rng>(ring: &Ring, m: usize, k: usize, l: usize, rng: &mut R) -> PpFormula {
    PpFormula::new(matrix(ring, m, k, rng), matrix(ring, m, l, rng)).expect("shapes agree")
}

/// A random morphism out of `src`; the target gets the images of the
/// source relations plus up to `extra` random relations.
pub fn morphism_from<R: Rng>(src: &FpModule, max_gens: usize, extra: usize, rng: &mut R) -> ModuleMorphism {
    let ring = src.ring();
    let g = rng.gen_range(1..=max_gens.max(1));
    let v = matrix(ring, src.generators(), g, rng);
    let e = rng.gen_range(0..=extra);
    let rel = src.relations().mul(&v).vstack(&matrix(ring, e, g, rng));
    let tgt = FpModule::from_relations(src.side(), rel);
    ModuleMorphism::new(src, &tgt, v).expect("relations are mapped into relations")
}

/// `coker Hom(α, −)` for a random `α`.
pub fn functor<R: Rng>(ring: &Ring, max_gens: usize, rng: &mut R) -> FpFunctor {
    let n = module(ring, max_gens, max_gens, rng);
    FpFunctor::new(morphism_from(&n, max_gens, max_gens.min(2), rng))
}

/// A functor presented by a monomorphism.
pub fn mono_functor<R: Rng>(ring: &Ring, max_gens: usize, rng: &mut R) -> FpFunctor {
    let n = module(ring, max_gens, max_gens, rng);
    let (_, _, mono) = morphism_from(&n, max_gens, max_gens.min(2), rng).image();
    FpFunctor::new(mono)
}

/// `kernel(α ⊗ −)` for a random mono `α`.
pub fn comono_functor<R: Rng>(ring: &Ring, max_gens: usize, rng: &mut R) -> FpFunctor {
    agj_dual(&mono_functor(ring, max_gens, rng))
}

/// A random morphism `G → h`, with `G` built so that the data is natural.
pub fn morphism_into<R: Rng>(h: &FpFunctor, max_gens: usize, rng: &mut R) -> FunctorMorphism {
    let ring = h.ring();
    let (k, kp) = (h.a().cols(), h.ap().cols());
    let n = rng.gen_range(1..=max_gens.max(1));
    let np = rng.gen_range(1..=max_gens.max(1));
    let u = matrix(ring, k, n, rng);
    let va = matrix(ring, n, np, rng);
    let w = matrix(ring, kp, np, rng);
    let e1 = rng.gen_range(0..=2);
    let an = h.a().mul(&u).vstack(&matrix(ring, e1, n, rng));
    let e2 = rng.gen_range(0..=2);
    let anp = Matrix::vstack_all(
        ring,
        np,
        &[
            &u.mul(&va).sub(&h.v().mul(&w)),
            &h.ap().mul(&w),
            &an.mul(&va),
            &matrix(ring, e2, np, rng),
        ],
    );
    let g = FpFunctor::from_matrices(an, anp, va).expect("relations are mapped into relations");
    FunctorMorphism::new(&g, h, u, w).expect("data is natural by construction")
}
