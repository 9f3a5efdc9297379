mod common;

use std::collections::BTreeSet;

use common::{residues, rng};
use fpbeh::linalg::{left_kernel, row_basis, row_reduce, smith_form, solve_left};
use fpbeh::{random, Matrix, Ring};
use proptest::prelude::*;
use rand::Rng;

fn rings() -> Vec<Ring> {
    vec![
        Ring::Integers,
        Ring::Rationals,
        Ring::IntegersMod(12),
        Ring::PrimeField(7),
        Ring::parse("GF(7)[x]").unwrap(),
        Ring::parse("QQ[x]").unwrap(),
    ]
}

/// All `y ∈ (ZZ/n)^m` with `y·A = 0`, by brute force.
fn kernel_by_search(a: &[Vec<u64>], m: usize, k: usize, n: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    let total = (n as usize).pow(m as u32);
    for idx in 0..total {
        let mut y = Vec::with_capacity(m);
        let mut t = idx;
        for _ in 0..m {
            y.push((t % n as usize) as u64);
            t /= n as usize;
        }
        if (0..k).all(|j| (0..m).map(|i| y[i] * a[i][j]).sum::<u64>() % n == 0) {
            out.insert(y);
        }
    }
    out
}

/// The additive span of the rows of `g` in `(ZZ/n)^m`.
fn span(g: &[Vec<u64>], m: usize, n: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::from([vec![0; m]]);
    loop {
        let mut grew = false;
        for x in out.clone() {
            for r in g {
                let y: Vec<u64> = x.iter().zip(r).map(|(a, b)| (a + b) % n).collect();
                grew |= out.insert(y);
            }
        }
        if !grew {
            return out;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_rows_annihilate(seed in any::<u64>()) {
        let mut g = rng(seed);
        for r in rings() {
            let a = random::matrix(&r, g.gen_range(0..=3), g.gen_range(0..=3), &mut g);
            prop_assert!(left_kernel(&a).mul(&a).is_zero(), "{}: {}", r, a);
        }
    }

    #[test]
    fn row_form_is_idempotent_and_certified(seed in any::<u64>()) {
        let mut g = rng(seed);
        for r in rings() {
            let a = random::matrix(&r, g.gen_range(1..=3), g.gen_range(1..=3), &mut g);
            let (h, u) = row_reduce(&a);
            prop_assert_eq!(&u.mul(&a), &h);
            prop_assert_eq!(&row_reduce(&h).0, &h);
            prop_assert_eq!(row_basis(&row_basis(&a)), row_basis(&a));
        }
    }

    #[test]
    fn scaled_kernel_rows_are_solved(seed in any::<u64>()) {
        let mut g = rng(seed);
        for r in [Ring::Integers, Ring::parse("QQ[x]").unwrap()] {
            let a = random::matrix(&r, 3, g.gen_range(1..=2), &mut g);
            let k = left_kernel(&a);
            let c = random::matrix(&r, 1, k.rows(), &mut g);
            let y = c.mul(&k);
            prop_assert!(solve_left(&k, &y).unwrap().is_some());
        }
    }

    #[test]
    fn smith_chain_over_integers(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::Integers;
        let a = random::matrix(&r, g.gen_range(1..=3), g.gen_range(1..=3), &mut g);
        let s = smith_form(&a).unwrap();
        prop_assert_eq!(&s.u.mul(&a).mul(&s.v), &s.s);
        let d: Vec<i64> = s.diagonal().iter().map(|e| r.format(e).parse().unwrap()).collect();
        for w in d.windows(2) {
            let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            prop_assert!(divides, "{}", a);
        }
    }
}

#[test]
fn determinant_is_invariant_up_to_sign() {
    let mut g = rng(7);
    let r = Ring::Integers;
    for _ in 0..100 {
        let e: Vec<i64> = (0..4).map(|_| g.gen_range(-5..=5)).collect();
        let det = e[0] * e[3] - e[1] * e[2];
        let s = smith_form(&Matrix::from_ints(&r, 2, 2, &e)).unwrap();
        let d = s.s.to_strings();
        let prod = d[0][0].parse::<i64>().unwrap() * d[1][1].parse::<i64>().unwrap();
        assert_eq!(prod.abs(), det.abs(), "{e:?}");
    }
}

#[test]
fn kernels_over_small_rings_are_complete() {
    let mut g = rng(11);
    for n in 2..=8u64 {
        let r = Ring::IntegersMod(n);
        for _ in 0..40 {
            let (m, k) = (g.gen_range(1..=3), g.gen_range(1..=3));
            let a = random::matrix(&r, m, k, &mut g);
            let expect = kernel_by_search(&residues(&a, n), m, k, n);
            let gens = left_kernel(&a);
            assert_eq!(span(&residues(&gens, n), m, n), expect, "ZZ/{n}: {a}");
            for y in &expect {
                let row: Vec<i64> = y.iter().map(|&v| v as i64).collect();
                let y = Matrix::from_ints(&r, 1, m, &row);
                assert!(solve_left(&gens, &y).unwrap().is_some());
            }
        }
    }
}

#[test]
fn exhaustive_one_by_two_over_z4() {
    let r = Ring::IntegersMod(4);
    for a in 0..4 {
        for b in 0..4 {
            let m = Matrix::from_ints(&r, 2, 1, &[a, b]);
            let expect = kernel_by_search(&residues(&m, 4), 2, 1, 4);
            assert_eq!(span(&residues(&left_kernel(&m), 4), 2, 4), expect);
        }
    }
}

#[test]
fn empty_matrices_compose() {
    let r = Ring::Integers;
    let a = Matrix::zero(&r, 0, 3);
    assert_eq!(left_kernel(&a).shape(), (0, 0));
    let b = Matrix::zero(&r, 2, 0);
    assert_eq!(left_kernel(&b), Matrix::identity(&r, 2));
}
