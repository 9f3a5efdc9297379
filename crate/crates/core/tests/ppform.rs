mod common;

use std::collections::HashSet;

use common::{rng, BUDGET};
use fpbeh::fpfun::FpFunctor;
use fpbeh::fpmod::FpModule;
use fpbeh::oracle::{enumerate_behavior, enumerate_homs, FiniteModule};
use fpbeh::ppform::{
    behavior_included, eliminate_latents, evaluate_behavior, malgrange_representative, parse_formula,
    print_formula, restrict_formula, PpFormula, RingMap,
};
use fpbeh::{random, Error, Matrix, Ring};
use proptest::prelude::*;
use rand::Rng;

fn sols(phi: &PpFormula, t: &FiniteModule) -> HashSet<Vec<usize>> {
    enumerate_behavior(phi.b(), phi.bp(), t, BUDGET).unwrap().into_iter().collect()
}

fn ring_table(r: &Ring) -> FiniteModule {
    FiniteModule::enumerate(&FpModule::free(r, 1), BUDGET).unwrap()
}

const SMALL: [u64; 7] = [2, 3, 4, 6, 8, 9, 12];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_and_json_round_trip(seed in any::<u64>()) {
        let mut g = rng(seed);
        for r in [Ring::Integers, Ring::IntegersMod(6), Ring::parse("GF(7)[x]").unwrap(), Ring::parse("QQ[x,y]").unwrap()] {
            let phi = random::formula(&r, g.gen_range(1..=3), g.gen_range(1..=3), g.gen_range(0..=2), &mut g);
            let back = parse_formula(&print_formula(&phi)).unwrap();
            prop_assert_eq!(back.b(), phi.b());
            prop_assert_eq!(back.bp(), phi.bp());
            let back = PpFormula::from_json(&phi.to_json()).unwrap();
            prop_assert_eq!(back.b(), phi.b());
            prop_assert_eq!(back.bp(), phi.bp());
        }
    }

    #[test]
    fn generator_images_are_the_solutions(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(SMALL[g.gen_range(0..SMALL.len())]);
        let t = ring_table(&r);
        let phi = random::formula(&r, g.gen_range(1..=3), g.gen_range(1..=3), 0, &mut g);
        let n = malgrange_representative(&phi).unwrap();
        let homs: HashSet<_> = enumerate_homs(&n, &t, BUDGET).unwrap().into_iter().collect();
        prop_assert_eq!(homs, sols(&phi, &t));
    }

    #[test]
    fn presentation_is_sound(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(SMALL[g.gen_range(0..SMALL.len())]);
        let t = ring_table(&r);
        let phi = random::formula(&r, g.gen_range(1..=2), g.gen_range(1..=2), g.gen_range(1..=2), &mut g);
        let value = FpFunctor::behavior_functor(&phi).evaluate_finite(&t, BUDGET).unwrap();
        prop_assert_eq!(value.order(), sols(&phi, &t).len());
    }

    #[test]
    fn elimination_is_exact(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(SMALL[g.gen_range(0..SMALL.len())]);
        let t = ring_table(&r);
        let phi = random::formula(&r, g.gen_range(1..=3), g.gen_range(1..=2), g.gen_range(1..=2), &mut g);
        prop_assert_eq!(sols(&eliminate_latents(&phi, false), &t), sols(&phi, &t));
        prop_assert_eq!(sols(&eliminate_latents(&phi, true), &t), sols(&phi, &t));
    }

    #[test]
    fn inclusion_matches_enumeration(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(SMALL[g.gen_range(0..SMALL.len())]);
        let t = ring_table(&r);
        let k = g.gen_range(1..=2);
        let p1 = random::formula(&r, g.gen_range(1..=2), k, 0, &mut g);
        let p2 = random::formula(&r, g.gen_range(1..=2), k, 0, &mut g);
        let x = behavior_included(&p1, &p2).unwrap();
        prop_assert_eq!(x.is_some(), sols(&p1, &t).is_subset(&sols(&p2, &t)));
        if let Some(x) = x {
            prop_assert_eq!(&x.mul(p1.b()), p2.b());
        }
    }

    #[test]
    fn restriction_identity(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = SMALL[g.gen_range(0..SMALL.len())];
        let (z, r) = (Ring::Integers, Ring::IntegersMod(n));
        let phi = random::formula(&z, g.gen_range(1..=2), g.gen_range(1..=2), g.gen_range(0..=1), &mut g);
        let psi = restrict_formula(&RingMap::canonical(&z, &r).unwrap(), &phi).unwrap();
        let as_z = FiniteModule::enumerate_with_exponent(&FpModule::left(Matrix::from_ints(&z, 1, 1, &[n as i64])), n, BUDGET).unwrap();
        let vals = |t: &FiniteModule, p: &PpFormula| -> HashSet<Vec<Vec<u64>>> {
            enumerate_behavior(p.b(), p.bp(), t, BUDGET).unwrap()
                .iter()
                .map(|x| x.iter().map(|&e| t.elements()[e].clone()).collect())
                .collect()
        };
        prop_assert_eq!(vals(&as_z, &phi), vals(&ring_table(&r), &psi));
    }
}

#[test]
fn exhaustive_elimination_over_z2() {
    let r = Ring::IntegersMod(2);
    let t = ring_table(&r);
    for bits in 0..16u32 {
        let e: Vec<i64> = (0..4).map(|i| ((bits >> i) & 1) as i64).collect();
        let phi = PpFormula::new(Matrix::from_ints(&r, 2, 1, &e[..2]), Matrix::from_ints(&r, 2, 1, &e[2..])).unwrap();
        assert_eq!(sols(&eliminate_latents(&phi, false), &t), sols(&phi, &t), "{phi}");
    }
}

#[test]
fn examples() {
    let phi = parse_formula("ring ZZ/4; free x; bound y; x + 2*y = 0").unwrap();
    let psi = eliminate_latents(&phi, false);
    assert_eq!(psi.b(), &Matrix::from_ints(&Ring::IntegersMod(4), 1, 1, &[2]));
    let set = evaluate_behavior(&phi, &FpModule::free(phi.ring(), 1), BUDGET).unwrap();
    assert_eq!(set.vectors(), vec![vec![vec![0]], vec![vec![2]]]);

    let z4 = Ring::IntegersMod(4);
    let a1 = PpFormula::quantifier_free(Matrix::from_ints(&z4, 1, 1, &[1]));
    let a2 = PpFormula::quantifier_free(Matrix::from_ints(&z4, 1, 1, &[2]));
    assert_eq!(behavior_included(&a1, &a2).unwrap(), Some(Matrix::from_ints(&z4, 1, 1, &[2])));
    assert_eq!(behavior_included(&a2, &a1).unwrap(), None);
}

#[test]
fn refusals_and_errors() {
    let phi = parse_formula("ring ZZ; free x; 2*x = 0").unwrap();
    assert!(evaluate_behavior(&phi, &FpModule::free(phi.ring(), 1), BUDGET).is_err());
    match parse_formula("ring ZZ; free x;\n x + y = 0") {
        Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    assert!(parse_formula("ring ZZ/0; free x; x = 0").is_err());
    let latent = parse_formula("ring ZZ; free x; bound y; x + y = 0").unwrap();
    assert!(behavior_included(&latent, &phi).is_err());
    let big = parse_formula("ring ZZ/12; free a, b, c, d, e, f; a = 0").unwrap();
    assert!(matches!(
        evaluate_behavior(&big, &FpModule::free(big.ring(), 1), 1000),
        Err(Error::BudgetExceeded { .. })
    ));
}
