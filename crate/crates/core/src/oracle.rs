//! Brute-force ground truth over finite rings.
//!
//! Nothing here uses the normal-form machinery of [`crate::linalg`]: a
//! finite module is enumerated as cosets of the additive closure of its
//! relation rows inside `(ZZ/e)^g`, behaviors are filtered tuple by tuple,
//! and functor values are quotients of explicitly enumerated hom sets.
//! Every enumeration is bounded by a tuple-count budget; exceeding it is an
//! error, never a sample.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fpmod::FpModule;
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Element ids of a finite module; `0` is always the zero element.
pub type Tuple = Vec<usize>;

fn residue(e: &Elem, modulus: u64) -> u64 {
    match e {
        Elem::Int(x) => x.mod_floor(&BigInt::from(modulus)).to_u64().unwrap(),
        _ => panic!("oracle works over ZZ, ZZ/n and GF(p) only"),
    }
}

fn residues(m: &Matrix, modulus: u64) -> Vec<Vec<u64>> {
    m.row_vectors()
        .iter()
        .map(|r| r.iter().map(|e| residue(e, modulus)).collect())
        .collect()
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

fn power(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Mixed-radix digits of `code` in base `base`, most significant first.
fn digits(mut code: u128, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % base as u128) as usize;
        code /= base as u128;
    }
    out
}

/// An enumerated finite module over `ZZ/e`.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    exponent: u64,
    gens: usize,
    /// The lexicographically first vector of each coset, in that order.
    reps: Vec<Vec<u64>>,
    /// Coset id of every vector of `(ZZ/e)^g`, indexed by its code.
    class: Vec<u32>,
}

impl FiniteModule {
    /// Enumerate a module over `ZZ/n` or `GF(p)`.
    pub fn enumerate(m: &FpModule, budget: u128) -> Result<Self> {
        let e = m.ring().cardinality().ok_or_else(|| Error::Unsupported {
            op: "enumeration (finite rings only; use an exponent over ZZ)",
            ring: m.ring().to_string(),
        })?;
        Self::build(e, m.generators(), residues(m.relations(), e), budget)
    }

    /// Enumerate a module over `ZZ` killed by `exponent`; the relations
    /// `exponent·e_i` are added.
    pub fn enumerate_with_exponent(m: &FpModule, exponent: u64, budget: u128) -> Result<Self> {
        if m.ring() != &Ring::Integers {
            return Err(Error::Input("an exponent is only meaningful over ZZ".into()));
        }
        Self::build(exponent, m.generators(), residues(m.relations(), exponent), budget)
    }

    fn build(e: u64, gens: usize, relations: Vec<Vec<u64>>, budget: u128) -> Result<Self> {
        let total = power(e as usize, gens);
        check_budget(total, budget)?;
        let total = total as usize;
        let encode = |v: &[u64]| v.iter().fold(0usize, |acc, &x| acc * e as usize + x as usize);
        // additive closure of the relation rows
        let mut in_sub = vec![false; total];
        let zero = vec![0u64; gens];
        in_sub[encode(&zero)] = true;
        let mut sub = vec![zero];
        let mut frontier = sub.clone();
        while let Some(v) = frontier.pop() {
            for r in &relations {
                let w: Vec<u64> = v.iter().zip(r).map(|(a, b)| (a + b) % e).collect();
                let c = encode(&w);
                if !in_sub[c] {
                    in_sub[c] = true;
                    sub.push(w.clone());
                    frontier.push(w);
                }
            }
        }
        let mut class = vec![u32::MAX; total];
        let mut reps = Vec::with_capacity(total / sub.len());
        for code in 0..total {
            if class[code] != u32::MAX {
                continue;
            }
            let v: Vec<u64> = digits(code as u128, e as usize, gens).into_iter().map(|d| d as u64).collect();
            let id = reps.len() as u32;
            for s in &sub {
                let w: Vec<u64> = v.iter().zip(s).map(|(a, b)| (a + b) % e).collect();
                class[encode(&w)] = id;
            }
            reps.push(v);
        }
        Ok(FiniteModule {
            exponent: e,
            gens,
            reps,
            class,
        })
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> usize {
        self.gens
    }

    /// Canonical representatives, indexed by element id.
    pub fn elements(&self) -> &[Vec<u64>] {
        &self.reps
    }

    pub fn class_of(&self, v: &[u64]) -> usize {
        let e = self.exponent as usize;
        let code = v.iter().fold(0usize, |acc, &x| acc * e + (x % self.exponent) as usize);
        self.class[code] as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let v: Vec<u64> = self.reps[a]
            .iter()
            .zip(&self.reps[b])
            .map(|(x, y)| (x + y) % self.exponent)
            .collect();
        self.class_of(&v)
    }

    pub fn neg(&self, a: usize) -> usize {
        let v: Vec<u64> = self.reps[a].iter().map(|x| (self.exponent - x) % self.exponent).collect();
        self.class_of(&v)
    }

    /// `Σ c_j · x_j` for residues `c_j`.
    pub fn combine(&self, coeffs: &[u64], xs: &[usize]) -> usize {
        let e = self.exponent as u128;
        let mut acc = vec![0u128; self.gens];
        for (&c, &x) in coeffs.iter().zip(xs) {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(&self.reps[x]) {
                *a = (*a + c as u128 * r as u128) % e;
            }
        }
        let v: Vec<u64> = acc.into_iter().map(|a| a as u64).collect();
        self.class_of(&v)
    }

    /// `M·x` for a residue matrix `M` acting on a tuple.
    fn apply(&self, m: &[Vec<u64>], x: &[usize]) -> Tuple {
        m.iter().map(|row| self.combine(row, x)).collect()
    }

    /// The residue of a ring element in this module's coordinate ring.
    pub fn residue(&self, e: &Elem) -> u64 {
        residue(e, self.exponent)
    }

    /// Apply a ring matrix to a tuple of elements.
    pub fn apply_matrix(&self, m: &Matrix, x: &[usize]) -> Tuple {
        self.apply(&residues(m, self.exponent), x)
    }
}

fn all_tuples(order: usize, len: usize) -> impl ParallelIterator<Item = Tuple> {
    let count = power(order, len);
    (0..count as u64).into_par_iter().map(move |c| digits(c as u128, order, len))
}

/// `{ x ∈ M^k | ∃ x′ ∈ M^{n−k}: B·x + B′·x′ = 0 }`, sorted.
pub fn enumerate_behavior(b: &Matrix, bp: &Matrix, m: &FiniteModule, budget: u128) -> Result<Vec<Tuple>> {
    if b.rows() != bp.rows() {
        return Err(Error::Arity("B and B′ have different row counts".into()));
    }
    let k = b.cols();
    let n = k + bp.cols();
    check_budget(power(m.order(), n), budget)?;
    let e = m.exponent();
    let br = residues(b, e);
    let bpr = residues(bp, e);
    // the set of B′·x′ with the sign flipped
    let reachable: HashSet<Tuple> = all_tuples(m.order(), bp.cols())
        .map(|xp| m.apply(&bpr, &xp).into_iter().map(|y| m.neg(y)).collect())
        .collect();
    let mut out: Vec<Tuple> = all_tuples(m.order(), k)
        .filter(|x| reachable.contains(&m.apply(&br, x)))
        .collect();
    out.sort();
    Ok(out)
}

/// Generator images of all homomorphisms `coker(A) → M`.
pub fn enumerate_homs(n: &FpModule, m: &FiniteModule, budget: u128) -> Result<Vec<Tuple>> {
    let empty = Matrix::zero(n.ring(), n.relations().rows(), 0);
    enumerate_behavior(n.relations(), &empty, m, budget)
}

/// Cardinality of an enumerated module, by name.
pub fn module_order(m: &FpModule, budget: u128) -> Result<usize> {
    Ok(FiniteModule::enumerate(m, budget)?.order())
}

/// A subquotient `S / T` of `M^n`, with `S ⊇ T` explicitly enumerated.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    members: Vec<Tuple>,
    class: HashMap<Tuple, usize>,
    reps: Vec<Tuple>,
}

impl FiniteGroup {
    fn quotient(members: Vec<Tuple>, sub: &[Tuple], m: &FiniteModule) -> Self {
        let mut class = HashMap::with_capacity(members.len());
        let mut reps = Vec::new();
        for x in &members {
            if class.contains_key(x) {
                continue;
            }
            let id = reps.len();
            for s in sub {
                let y: Tuple = x.iter().zip(s).map(|(&a, &b)| m.add(a, b)).collect();
                class.insert(y, id);
            }
            reps.push(x.clone());
        }
        FiniteGroup { members, class, reps }
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Sorted tuples of the ambient subgroup `S`.
    pub fn members(&self) -> &[Tuple] {
        &self.members
    }

    /// Canonical representatives (first member of each coset).
    pub fn representatives(&self) -> &[Tuple] {
        &self.reps
    }

    pub fn class_of(&self, x: &Tuple) -> Option<usize> {
        self.class.get(x).copied()
    }
}

fn add_tuples(m: &FiniteModule, x: &[usize], y: &[usize]) -> Tuple {
    x.iter().zip(y).map(|(&a, &b)| m.add(a, b)).collect()
}

fn sub_tuples(m: &FiniteModule, x: &[usize], y: &[usize]) -> Tuple {
    x.iter().zip(y).map(|(&a, &b)| m.add(a, m.neg(b))).collect()
}

/// Additive generators of `M^n`: a module generator in one coordinate.
fn unit_tuples(m: &FiniteModule, n: usize) -> Vec<Tuple> {
    let ids: Vec<usize> = (0..m.gens)
        .map(|g| {
            let mut v = vec![0u64; m.gens];
            v[g] = 1;
            m.class_of(&v)
        })
        .filter(|&id| id != 0)
        .collect();
    let mut out = Vec::new();
    for i in 0..n {
        for &id in &ids {
            let mut t = vec![0; n];
            t[i] = id;
            out.push(t);
        }
    }
    out
}

/// The subgroup of `M^n` generated by `gens`, sorted.
fn closure(gens: &[Tuple], n: usize, m: &FiniteModule, budget: u128) -> Result<Vec<Tuple>> {
    let zero = vec![0; n];
    let mut seen: HashSet<Tuple> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = add_tuples(m, &x, g);
            if seen.insert(y.clone()) {
                check_budget(seen.len() as u128, budget)?;
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<Tuple> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Generators of `{ x ∈ M^n | A·x = 0 }`: Schreier generators from a
/// transversal of the image of `x ↦ A·x`.
fn solution_generators(a: &Matrix, m: &FiniteModule, budget: u128) -> Result<Vec<Tuple>> {
    let n = a.cols();
    let ar = residues(a, m.exponent());
    let gens = unit_tuples(m, n);
    let images: Vec<Tuple> = gens.iter().map(|g| m.apply(&ar, g)).collect();
    let zero_img = vec![0; a.rows()];
    let mut preimage: HashMap<Tuple, Tuple> = HashMap::from([(zero_img.clone(), vec![0; n])]);
    let mut frontier = vec![zero_img];
    let mut kernel_gens: BTreeSet<Tuple> = BTreeSet::new();
    while let Some(y) = frontier.pop() {
        let p = preimage[&y].clone();
        for (g, gy) in gens.iter().zip(&images) {
            let y2 = add_tuples(m, &y, gy);
            let p2 = add_tuples(m, &p, g);
            match preimage.get(&y2) {
                Some(q) => {
                    let k = sub_tuples(m, &p2, q);
                    if k.iter().any(|&c| c != 0) {
                        kernel_gens.insert(k);
                    }
                }
                None => {
                    check_budget(preimage.len() as u128 + 1, budget)?;
                    preimage.insert(y2.clone(), p2);
                    frontier.push(y2);
                }
            }
        }
    }
    Ok(kernel_gens.into_iter().collect())
}

/// `G(M) = { x ∈ M^n | A·x = 0 } / { V·y | A′·y = 0 }`.
///
/// The budget bounds the number of group elements visited.
pub fn evaluate_functor(a: &Matrix, ap: &Matrix, v: &Matrix, m: &FiniteModule, budget: u128) -> Result<FiniteGroup> {
    let homs = closure(&solution_generators(a, m, budget)?, a.cols(), m, budget)?;
    let gens_p = solution_generators(ap, m, budget)?;
    let vr = residues(v, m.exponent());
    let image_gens: Vec<Tuple> = gens_p.iter().map(|y| m.apply(&vr, y)).collect();
    let image = closure(&image_gens, a.cols(), m, budget)?;
    Ok(FiniteGroup::quotient(homs, &image, m))
}

/// The class map `G(M) → H(M)` induced by `x ↦ U·x`; `None` if it is not
/// well defined on classes.
pub fn induced_map(u: &Matrix, g: &FiniteGroup, h: &FiniteGroup, m: &FiniteModule) -> Option<Vec<usize>> {
    let ur = residues(u, m.exponent());
    let mut out = vec![usize::MAX; g.order()];
    for x in g.members() {
        let cx = g.class_of(x)?;
        let cy = h.class_of(&m.apply(&ur, x))?;
        if out[cx] == usize::MAX {
            out[cx] = cy;
        } else if out[cx] != cy {
            return None;
        }
    }
    Some(out)
}

/// Set-theoretic facts about a class map between finite groups.
pub fn is_injective(map: &[usize]) -> bool {
    let set: HashSet<_> = map.iter().collect();
    set.len() == map.len()
}

pub fn is_surjective(map: &[usize], target_order: usize) -> bool {
    let set: HashSet<_> = map.iter().collect();
    set.len() == target_order
}

pub fn image_size(map: &[usize]) -> usize {
    map.iter().collect::<HashSet<_>>().len()
}

/// Number of classes mapping to the zero class.
pub fn kernel_size(map: &[usize]) -> usize {
    map.iter().filter(|&&c| c == 0).count()
}
