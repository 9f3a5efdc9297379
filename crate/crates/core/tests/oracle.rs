mod common;

use common::{cyclic, rng, BUDGET};
use fpbeh::fpfun::FpFunctor;
use fpbeh::fpmod::{hom_module, FpModule};
use fpbeh::oracle::{enumerate_behavior, enumerate_homs, module_order, FiniteModule};
use fpbeh::{random, Error, Ring};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_counts_agree(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(g.gen_range(2..=6));
        let n = random::module(&r, 2, 2, &mut g);
        let m = random::module(&r, 2, 2, &mut g);
        let t = FiniteModule::enumerate(&m, BUDGET).unwrap();
        let count = enumerate_homs(&n, &t, BUDGET).unwrap().len();
        let h = hom_module(&n, &m).unwrap().module.simplify().0;
        match module_order(&h, BUDGET) {
            Ok(order) => prop_assert_eq!(order, count),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => panic!("{e:?}"),
        }
    }

    #[test]
    fn representable_values_are_hom_sets(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(g.gen_range(2..=8));
        let n = random::module(&r, 3, 3, &mut g);
        let m = random::module(&r, 2, 1, &mut g);
        let t = FiniteModule::enumerate(&m, BUDGET).unwrap();
        let value = FpFunctor::representable(&n).evaluate_finite(&t, BUDGET).unwrap();
        prop_assert_eq!(value.order(), enumerate_homs(&n, &t, BUDGET).unwrap().len());
    }

    #[test]
    fn output_does_not_depend_on_threads(seed in any::<u64>()) {
        let mut g = rng(seed);
        let r = Ring::IntegersMod(6);
        let phi = random::formula(&r, 2, 3, 1, &mut g);
        let t = FiniteModule::enumerate(&FpModule::free(&r, 1), BUDGET).unwrap();
        let run = |k: usize| {
            rayon::ThreadPoolBuilder::new().num_threads(k).build().unwrap()
                .install(|| enumerate_behavior(phi.b(), phi.bp(), &t, BUDGET).unwrap())
        };
        let one = run(1);
        prop_assert!(one.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(one, run(4));
    }
}

#[test]
fn tables() {
    let z = Ring::Integers;
    let t = FiniteModule::enumerate_with_exponent(&cyclic(&z, 6), 6, BUDGET).unwrap();
    assert_eq!(t.order(), 6);
    let z4 = Ring::IntegersMod(4);
    let t = FiniteModule::enumerate(&FpModule::left(common::ints(&z4, 1, 2, &[0, 2])), BUDGET).unwrap();
    assert_eq!(t.order(), 8);
    assert_eq!(t.exponent(), 4);
    assert!(FiniteModule::enumerate(&FpModule::free(&z, 1), BUDGET).is_err());
}

#[test]
fn budget_is_a_hard_limit() {
    let r = Ring::IntegersMod(12);
    let t = FiniteModule::enumerate(&FpModule::free(&r, 2), BUDGET).unwrap();
    let n = FpModule::free(&r, 4);
    match enumerate_homs(&n, &t, 1000) {
        Err(Error::BudgetExceeded { budget, .. }) => assert_eq!(budget, 1000),
        other => panic!("expected a budget error, got {other:?}"),
    }
}
