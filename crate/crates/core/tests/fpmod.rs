mod common;

use common::{cyclic, ints, rng, zz_type, BUDGET};
use fpbeh::fpmod::{
    auslander_transpose, controllable_part_module, double_dual_map, ext_against_ring, hom_module,
    is_controllable_module, tensor_module, FpModule, ModuleMorphism,
};
use fpbeh::oracle::{enumerate_homs, module_order, FiniteModule};
use fpbeh::{random, Error, Matrix, Ring};
use proptest::prelude::*;
use rand::Rng;

fn torsion_free(n: &FpModule) -> bool {
    zz_type(n).1.is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_universal_property(seed in any::<u64>()) {
        let mut g = rng(seed);
        for r in [Ring::Integers, Ring::IntegersMod(6), Ring::parse("QQ[x]").unwrap()] {
            let n = random::module(&r, 3, 3, &mut g);
            let f = random::morphism_from(&n, 3, 2, &mut g);
            let (k, iota) = f.kernel();
            prop_assert!(iota.then(&f).unwrap().is_zero());
            let x = random::module(&r, 2, 2, &mut g);
            let to_k = ModuleMorphism::new(&x, &k, random::matrix(&r, x.generators(), k.generators(), &mut g));
            if let Ok(to_k) = to_k {
                let test = to_k.then(&iota).unwrap();
                prop_assert!(test.then(&f).unwrap().is_zero());
                let lift = ModuleMorphism::kernel_lift(&iota, &test).unwrap().expect("factors");
                prop_assert!(lift.then(&iota).unwrap().equals(&test).unwrap());
            }
            let (_, pi) = f.cokernel();
            prop_assert!(f.then(&pi).unwrap().is_zero());
            prop_assert!(pi.is_epi());
        }
    }

    #[test]
    fn hom_module_matches_enumeration(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = g.gen_range(2..=6u64);
        let r = Ring::IntegersMod(n);
        let a = random::module(&r, 3, 3, &mut g);
        let m = random::module(&r, 2, 2, &mut g);
        let table = FiniteModule::enumerate(&m, BUDGET).unwrap();
        let homs = enumerate_homs(&a, &table, BUDGET).unwrap();
        let h = hom_module(&a, &m).unwrap();
        match module_order(&h.module, BUDGET) {
            Ok(order) => prop_assert_eq!(order, homs.len()),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn controllable_iff_torsion_free(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = random::module(&Ring::Integers, 3, 3, &mut g);
        prop_assert_eq!(is_controllable_module(&n), torsion_free(&n));
        let (part, pi) = controllable_part_module(&n);
        prop_assert!(pi.is_epi());
        prop_assert!(torsion_free(&part));
        prop_assert_eq!(zz_type(&part).0, zz_type(&n).0);
    }

    #[test]
    fn four_term_sequence(seed in any::<u64>()) {
        let mut g = rng(seed);
        let n = random::module(&Ring::Integers, 3, 3, &mut g);
        let (k, _) = double_dual_map(&n).kernel();
        let t = auslander_transpose(&n);
        prop_assert_eq!(zz_type(&k), zz_type(&ext_against_ring(&t, 1).unwrap()));
        prop_assert!(ext_against_ring(&t, 2).unwrap().is_zero());
    }

    #[test]
    fn hom_and_tensor_with_the_ring(seed in any::<u64>()) {
        let mut g = rng(seed);
        let z = Ring::Integers;
        let n = random::module(&z, 3, 3, &mut g);
        let r1 = FpModule::free(&z, 1);
        prop_assert_eq!(zz_type(&hom_module(&r1, &n).unwrap().module), zz_type(&n));
        prop_assert_eq!(zz_type(&tensor_module(&r1, &n).unwrap()), zz_type(&n));
    }
}

#[test]
fn examples() {
    let z = Ring::Integers;
    let two = ModuleMorphism::new(&FpModule::free(&z, 1), &FpModule::free(&z, 1), ints(&z, 1, 1, &[2])).unwrap();
    assert!(two.kernel().0.is_zero());
    assert_eq!(zz_type(&two.cokernel().0), (0, vec!["2".to_string()]));
    assert!(two.is_mono() && !two.is_epi());

    let z4 = Ring::IntegersMod(4);
    let f = ModuleMorphism::new(&FpModule::free(&z4, 1), &FpModule::free(&z4, 1), ints(&z4, 1, 1, &[2])).unwrap();
    let (k, _) = f.kernel();
    assert_eq!(module_order(&k, BUDGET).unwrap(), 2);

    let n = FpModule::left(ints(&z, 1, 2, &[0, 2]));
    assert!(!is_controllable_module(&n));
    assert_eq!(zz_type(&ext_against_ring(&auslander_transpose(&n), 1).unwrap()), (0, vec!["2".to_string()]));
}

#[test]
fn degenerate_presentations() {
    let z = Ring::Integers;
    let zero = FpModule::zero(&z);
    let free = FpModule::free(&z, 2);
    assert!(zero.is_zero());
    let f = ModuleMorphism::zero(&zero, &free);
    assert!(f.is_mono());
    assert_eq!(zz_type(&f.cokernel().0), (2, vec![]));
    let h = hom_module(&cyclic(&z, 3), &free).unwrap();
    assert!(h.module.is_zero());
    let m = FpModule::left(Matrix::zero(&z, 3, 0));
    assert!(m.is_zero());
}
