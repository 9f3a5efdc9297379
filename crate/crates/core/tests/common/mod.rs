#![allow(dead_code)]

use std::collections::HashSet;

use fpbeh::fpmod::FpModule;
use fpbeh::oracle::{FiniteGroup, FiniteModule, DEFAULT_BUDGET};
use fpbeh::{Matrix, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const BUDGET: u128 = DEFAULT_BUDGET;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(r: &Ring, rows: usize, cols: usize, e: &[i64]) -> Matrix {
    Matrix::from_ints(r, rows, cols, e)
}

pub fn cyclic(r: &Ring, d: i64) -> FpModule {
    FpModule::left(ints(r, 1, 1, &[d]))
}

/// Sorted element orders; determines a finite abelian group.
pub fn profile(g: &FiniteGroup, m: &FiniteModule) -> Vec<usize> {
    let mut out = Vec::with_capacity(g.order());
    for r in g.representatives() {
        let mut y = r.clone();
        let mut k = 1;
        while g.class_of(&y) != Some(0) {
            y = y.iter().zip(r).map(|(&a, &b)| m.add(a, b)).collect();
            k += 1;
        }
        out.push(k);
    }
    out.sort_unstable();
    out
}

/// Test modules over `ZZ/n` (as tables) for functor evaluation.
pub fn panel_mod(n: u64) -> Vec<FiniteModule> {
    let r = Ring::IntegersMod(n);
    let mut mods = vec![FpModule::free(&r, 1)];
    for d in 2..n {
        if n % d == 0 && mods.len() < 3 {
            mods.push(cyclic(&r, d as i64));
        }
    }
    if n == 6 {
        mods.push(FpModule::left(ints(&r, 2, 2, &[2, 1, 0, 3])));
    } else {
        mods.push(FpModule::left(ints(&r, 1, 2, &[0, 2])));
    }
    mods.iter().map(|m| FiniteModule::enumerate(m, BUDGET).unwrap()).collect()
}

/// Finite abelian groups as tables over `ZZ`.
pub fn panel_int() -> Vec<FiniteModule> {
    let z = Ring::Integers;
    [(cyclic(&z, 2), 2), (cyclic(&z, 4), 4), (cyclic(&z, 6), 6), (FpModule::left(ints(&z, 2, 2, &[2, 0, 0, 2])), 2)]
        .iter()
        .map(|(m, e)| FiniteModule::enumerate_with_exponent(m, *e, BUDGET).unwrap())
        .collect()
}

pub fn panel(r: &Ring) -> Vec<FiniteModule> {
    match r {
        Ring::Integers => panel_int(),
        Ring::IntegersMod(n) | Ring::PrimeField(n) => panel_mod(*n),
        _ => panic!("no panel for {r}"),
    }
}

pub fn image_set(map: &[usize]) -> HashSet<usize> {
    map.iter().copied().collect()
}

pub fn kernel_set(map: &[usize]) -> HashSet<usize> {
    (0..map.len()).filter(|&i| map[i] == 0).collect()
}

/// Free rank and non-unit torsion invariants of a module over `ZZ`.
pub fn zz_type(m: &FpModule) -> (usize, Vec<String>) {
    let r = m.ring();
    let inv = m.invariant_factors().unwrap();
    let free = inv.iter().filter(|e| r.is_zero(e)).count();
    let mut torsion: Vec<String> = inv
        .iter()
        .filter(|e| !r.is_zero(e))
        .map(|e| r.format(e).trim_start_matches('-').to_string())
        .collect();
    torsion.sort_by_key(|s| (s.len(), s.clone()));
    (free, torsion)
}

/// Entries of a matrix over `ZZ/n` as residues.
pub fn residues(a: &Matrix, n: u64) -> Vec<Vec<u64>> {
    a.to_strings()
        .iter()
        .map(|row| row.iter().map(|s| s.parse::<i64>().unwrap().rem_euclid(n as i64) as u64).collect())
        .collect()
}
