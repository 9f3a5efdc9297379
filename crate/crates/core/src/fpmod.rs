//! Finitely presented modules and their morphisms.
//!
//! Internally every module is stored in row convention: a relation matrix
//! `A ∈ R^{r×g}` presents `R^{1×g} / R^{1×r}·A`. A right module given by a
//! column presentation `A` (relations are the columns) is stored with the
//! relation matrix `Aᵀ`; over the shipped commutative rings the two are the
//! same module and the side flag only keeps the conventions honest.
//!
//! Morphisms are generator matrices `V ∈ R^{g_src×g_tgt}` (row `i` is the
//! image of generator `i`) together with a certificate `W` satisfying
//! `A_src·V = W·A_tgt`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, LinearSystem};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    side: Side,
    relations: Matrix,
}

impl FpModule {
    /// `coker(R^{1×m} --A--> R^{1×n})`.
    pub fn left(a: Matrix) -> Self {
        FpModule {
            side: Side::Left,
            relations: a,
        }
    }

    /// `coker(R^{n×1} --A--> R^{m×1})`, i.e. `m` generators and the
    /// columns of `A` as relations.
    pub fn right(a: Matrix) -> Self {
        FpModule {
            side: Side::Right,
            relations: a.transpose(),
        }
    }

    /// A module on the given side from a row-convention relation matrix.
    pub fn from_relations(side: Side, relations: Matrix) -> Self {
        FpModule { side, relations }
    }

    pub fn free(ring: &Ring, rank: usize) -> Self {
        Self::left(Matrix::zero(ring, 0, rank))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::free(ring, 0)
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Relations in row convention (`r × g`).
    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// The presentation matrix in the module's own convention.
    pub fn presentation(&self) -> Matrix {
        match self.side {
            Side::Left => self.relations.clone(),
            Side::Right => self.relations.transpose(),
        }
    }

    pub fn generators(&self) -> usize {
        self.relations.cols()
    }

    pub fn with_side(&self, side: Side) -> Self {
        FpModule {
            side,
            relations: self.relations.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        let g = self.generators();
        linalg::solve_left(&self.relations, &Matrix::identity(self.ring(), g))
            .expect("shapes agree")
            .is_some()
    }

    /// Whether the row `x` (as a `1 × g` matrix) is zero in the module.
    pub fn is_zero_element(&self, x: &Matrix) -> bool {
        linalg::solve_left(&self.relations, x).expect("shapes agree").is_some()
    }

    pub fn direct_sum(&self, other: &FpModule) -> Result<FpModule> {
        self.check_compatible(other)?;
        Ok(FpModule {
            side: self.side,
            relations: self.relations.block_diag(&other.relations),
        })
    }

    pub fn direct_sum_all(ring: &Ring, side: Side, parts: &[&FpModule]) -> FpModule {
        parts.iter().fold(FpModule::zero(ring).with_side(side), |acc, m| FpModule {
            side,
            relations: acc.relations.block_diag(&m.relations),
        })
    }

    /// Invariant factors (zeros for free summands, units dropped); PID
    /// backends only.
    pub fn invariant_factors(&self) -> Result<Vec<Elem>> {
        linalg::invariant_factors(&self.relations)
    }

    pub(crate) fn check_compatible(&self, other: &FpModule) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(self.ring().to_string(), other.ring().to_string()));
        }
        if self.side != other.side {
            return Err(Error::Input("modules live on different sides".into()));
        }
        Ok(())
    }

    pub fn identity(&self) -> ModuleMorphism {
        let g = self.generators();
        ModuleMorphism {
            source: self.clone(),
            target: self.clone(),
            matrix: Matrix::identity(self.ring(), g),
            certificate: Matrix::identity(self.ring(), self.relations.rows()),
        }
    }

    /// An isomorphic presentation with every generator that some relation
    /// expresses through the others (unit coefficient) removed, and zero
    /// relations dropped; returns `(S, self → S, S → self)`.
    pub fn simplify(&self) -> (FpModule, ModuleMorphism, ModuleMorphism) {
        let ring = self.ring().clone();
        let n = self.generators();
        let mut a = self.relations.nonzero_rows();
        // to: self → current, from: current → self
        let mut to = Matrix::identity(&ring, n);
        let mut from = Matrix::identity(&ring, n);
        'outer: loop {
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    let Some(inv) = ring.inverse(a.get(i, j)) else { continue };
                    let c = a.cols();
                    let keep: Vec<usize> = (0..c).filter(|&l| l != j).collect();
                    let mut psi = Matrix::zero(&ring, c, c - 1);
                    let mut phi = Matrix::zero(&ring, c - 1, c);
                    let minus = ring.neg(&inv);
                    for (pos, &l) in keep.iter().enumerate() {
                        psi.set(l, pos, ring.one());
                        phi.set(pos, l, ring.one());
                        psi.set(j, pos, ring.mul(&minus, a.get(i, l)));
                    }
                    let rows: Vec<usize> = (0..a.rows()).filter(|&r| r != i).collect();
                    a = a.pick_rows(&rows).mul(&psi).nonzero_rows();
                    to = to.mul(&psi);
                    from = phi.mul(&from);
                    continue 'outer;
                }
            }
            break;
        }
        let s = FpModule::from_relations(self.side, a);
        let fwd = ModuleMorphism::new(self, &s, to).expect("generator elimination is well defined");
        let back = ModuleMorphism::new(&s, self, from).expect("generator elimination is well defined");
        (s, fwd, back)
    }

    /// Canonical projections of `self ⊕ other` and injections into it.
    pub fn sum_injections(&self, other: &FpModule) -> Result<(FpModule, ModuleMorphism, ModuleMorphism)> {
        let s = self.direct_sum(other)?;
        let ring = self.ring();
        let (a, b) = (self.generators(), other.generators());
        let i1 = Matrix::identity(ring, a).hstack(&Matrix::zero(ring, a, b));
        let i2 = Matrix::zero(ring, b, a).hstack(&Matrix::identity(ring, b));
        let f1 = ModuleMorphism::new(self, &s, i1)?;
        let f2 = ModuleMorphism::new(other, &s, i2)?;
        Ok((s, f1, f2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: FpModule,
    target: FpModule,
    matrix: Matrix,
    certificate: Matrix,
}

impl ModuleMorphism {
    /// The morphism sending generator `i` of `source` to row `i` of `v`;
    /// fails unless it respects the relations.
    pub fn new(source: &FpModule, target: &FpModule, v: Matrix) -> Result<Self> {
        source.check_compatible(target)?;
        if v.shape() != (source.generators(), target.generators()) {
            return Err(Error::Dimension(format!(
                "generator matrix is {}x{}, expected {}x{}",
                v.rows(),
                v.cols(),
                source.generators(),
                target.generators()
            )));
        }
        let image = source.relations.mul(&v);
        let w = linalg::solve_left(&target.relations, &image)?
            .ok_or_else(|| Error::NotWellDefined("relations of the source are not mapped to zero".into()))?;
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: v,
            certificate: w,
        })
    }

    /// Rebuild from stored data, checking the certificate.
    pub fn with_certificate(source: &FpModule, target: &FpModule, v: Matrix, w: Matrix) -> Result<Self> {
        source.check_compatible(target)?;
        if w.shape() != (source.relations.rows(), target.relations.rows())
            || v.shape() != (source.generators(), target.generators())
            || source.relations.mul(&v) != w.mul(&target.relations)
        {
            return Err(Error::NotWellDefined("certificate does not satisfy A_src·V = W·A_tgt".into()));
        }
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: v,
            certificate: w,
        })
    }

    pub fn zero(source: &FpModule, target: &FpModule) -> Self {
        let ring = source.ring();
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zero(ring, source.generators(), target.generators()),
            certificate: Matrix::zero(ring, source.relations.rows(), target.relations.rows()),
        }
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn certificate(&self) -> &Matrix {
        &self.certificate
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ModuleMorphism) -> Result<ModuleMorphism> {
        if self.target.generators() != g.source.generators() || self.target.relations != g.source.relations {
            return Err(Error::Input("morphisms are not composable".into()));
        }
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            matrix: self.matrix.mul(&g.matrix),
            certificate: self.certificate.mul(&g.certificate),
        })
    }

    pub fn add(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.check_parallel(other)?;
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.add(&other.matrix),
            certificate: self.certificate.add(&other.certificate),
        })
    }

    pub fn neg(&self) -> ModuleMorphism {
        ModuleMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.neg(),
            certificate: self.certificate.neg(),
        }
    }

    pub fn sub(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.add(&other.neg())
    }

    fn check_parallel(&self, other: &ModuleMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Input("morphisms are not parallel".into()));
        }
        Ok(())
    }

    /// Whether the morphism is zero: every generator image is a relation
    /// combination.
    pub fn is_zero(&self) -> bool {
        linalg::solve_left(&self.target.relations, &self.matrix)
            .expect("shapes agree")
            .is_some()
    }

    pub fn equals(&self, other: &ModuleMorphism) -> Result<bool> {
        self.check_parallel(other)?;
        Ok(self.sub(other)?.is_zero())
    }

    /// Rows `Y` generating `{ x | x·V ∈ rowspace(A_tgt) }`.
    fn preimage_of_relations(&self) -> Matrix {
        let n = self.source.generators();
        let stacked = self.matrix.vstack(&self.target.relations);
        linalg::left_kernel(&stacked).select_cols(0..n)
    }

    /// Kernel object and its inclusion into the source.
    pub fn kernel(&self) -> (FpModule, ModuleMorphism) {
        let y = self.preimage_of_relations();
        let s = y.rows();
        let rel = linalg::left_kernel(&y.vstack(&self.source.relations)).select_cols(0..s);
        let k = FpModule::from_relations(self.source.side, rel);
        let iota = ModuleMorphism::new(&k, &self.source, y).expect("kernel inclusion is well defined");
        (k, iota)
    }

    /// Factor `g` (with `self ∘ g = 0`) through the kernel inclusion `iota`.
    pub fn kernel_lift(iota: &ModuleMorphism, g: &ModuleMorphism) -> Result<Option<ModuleMorphism>> {
        iota.factor_through_mono(g)
    }

    pub fn cokernel(&self) -> (FpModule, ModuleMorphism) {
        let rel = self.target.relations.vstack(&self.matrix);
        let c = FpModule::from_relations(self.target.side, rel);
        let g = self.target.generators();
        let pi = ModuleMorphism::new(&self.target, &c, Matrix::identity(self.ring(), g))
            .expect("cokernel projection is well defined");
        (c, pi)
    }

    /// Image with the factorization `source ↠ image ↪ target`.
    pub fn image(&self) -> (FpModule, ModuleMorphism, ModuleMorphism) {
        let y = self.preimage_of_relations();
        let im = FpModule::from_relations(self.source.side, y);
        let n = self.source.generators();
        let epi = ModuleMorphism::new(&self.source, &im, Matrix::identity(self.ring(), n))
            .expect("projection onto the image");
        let mono = ModuleMorphism::new(&im, &self.target, self.matrix.clone()).expect("image inclusion");
        (im, epi, mono)
    }

    /// `source / kernel` with the projection.
    pub fn coimage(&self) -> (FpModule, ModuleMorphism) {
        let (_, iota) = self.kernel();
        iota.cokernel()
    }

    pub fn is_mono(&self) -> bool {
        self.kernel().0.is_zero()
    }

    pub fn is_epi(&self) -> bool {
        self.cokernel().0.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleMorphism> {
        if !self.is_mono() {
            return None;
        }
        let n = self.source.generators();
        let stacked = self.matrix.vstack(&self.target.relations);
        let id = Matrix::identity(self.ring(), self.target.generators());
        let x = linalg::solve_left(&stacked, &id).expect("shapes agree")?;
        ModuleMorphism::new(&self.target, &self.source, x.select_cols(0..n)).ok()
    }

    /// For a mono `self: Z → Y` and `g: L → Y`, the unique `h: L → Z` with
    /// `self ∘ h = g`, if it exists.
    pub fn factor_through_mono(&self, g: &ModuleMorphism) -> Result<Option<ModuleMorphism>> {
        if g.target.relations != self.target.relations {
            return Err(Error::Input("morphisms do not share a target".into()));
        }
        let s = self.source.generators();
        let stacked = self.matrix.vstack(&self.target.relations);
        match linalg::solve_left(&stacked, &g.matrix)? {
            None => Ok(None),
            Some(x) => Ok(ModuleMorphism::new(&g.source, &self.source, x.select_cols(0..s)).ok()),
        }
    }

    /// For an epi `self: X → C` and `g: X → Y` vanishing on its kernel, the
    /// unique `h: C → Y` with `h ∘ self = g`, if it exists.
    pub fn factor_through_epi(&self, g: &ModuleMorphism) -> Result<Option<ModuleMorphism>> {
        if g.source.relations != self.source.relations {
            return Err(Error::Input("morphisms do not share a source".into()));
        }
        // h is given on generators of C: pick preimages of C's generators
        // in X, then check well-definedness against C's relations.
        let n = self.target.generators();
        let stacked = self.matrix.vstack(&self.target.relations);
        let Some(pre) = linalg::solve_left(&stacked, &Matrix::identity(self.ring(), n))? else {
            return Ok(None);
        };
        let pre = pre.select_cols(0..self.source.generators());
        let h = pre.mul(&g.matrix);
        let Ok(h) = ModuleMorphism::new(&self.target, &g.target, h) else {
            return Ok(None);
        };
        Ok(self.then(&h)?.equals(g)?.then_some(h))
    }
}

/// `Hom(N, M)` as a module together with its generator morphisms.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: FpModule,
    source: FpModule,
    target: FpModule,
    /// Generators, each a flattened `g_N × g_M` generator matrix.
    gens: Matrix,
}

impl HomModule {
    /// The morphism represented by a coordinate row (`1 × generators`).
    pub fn morphism(&self, h: &Matrix) -> ModuleMorphism {
        let flat = h.mul(&self.gens);
        let v = Matrix::unflatten(
            self.source.ring(),
            flat.row(0),
            self.source.generators(),
            self.target.generators(),
        );
        ModuleMorphism::new(&self.source, &self.target, v).expect("generators are homomorphisms")
    }

    /// Coordinates of a morphism `N → M`.
    pub fn coordinates(&self, f: &ModuleMorphism) -> Matrix {
        let g = self.gens.rows();
        let ring = self.source.ring();
        let n = self.source.generators();
        let zero_maps = Matrix::identity(ring, n).kron(self.target.relations());
        let stacked = self.gens.vstack(&zero_maps);
        linalg::solve_left(&stacked, &f.matrix().flatten_row())
            .expect("shapes agree")
            .expect("every homomorphism is a combination of the generators")
            .select_cols(0..g)
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.gens
    }
}

/// `Hom(N, M)` for modules on the same side.
pub fn hom_module(n: &FpModule, m: &FpModule) -> Result<HomModule> {
    n.check_compatible(m)?;
    let ring = n.ring();
    let a = n.relations();
    let b = m.relations();
    let (gn, gm) = (n.generators(), m.generators());
    // A·X = Z·B
    let mut sys = LinearSystem::new(ring);
    let x = sys.unknown(gn, gm);
    let z = sys.unknown(a.rows(), b.rows());
    let eq = sys.equation(Matrix::zero(ring, a.rows(), gm));
    sys.left(eq, a, x)?;
    sys.right(eq, z, &b.neg())?;
    let rows: Vec<Vec<Elem>> = sys
        .homogeneous_generators()
        .into_iter()
        .map(|blocks| blocks[0].entries().to_vec())
        .collect();
    let gens = Matrix::from_rows(ring, rows, gn * gm)?;
    let zero_maps = Matrix::identity(ring, gn).kron(b);
    let rel = linalg::left_kernel(&gens.vstack(&zero_maps)).select_cols(0..gens.rows());
    Ok(HomModule {
        module: FpModule::from_relations(n.side(), rel),
        source: n.clone(),
        target: m.clone(),
        gens,
    })
}

/// `N ⊗ M`, generators indexed by pairs `(i, j)` row-major.
pub fn tensor_module(n: &FpModule, m: &FpModule) -> Result<FpModule> {
    if n.ring() != m.ring() {
        return Err(Error::RingMismatch(n.ring().to_string(), m.ring().to_string()));
    }
    let ring = n.ring();
    let left = n.relations().kron(&Matrix::identity(ring, m.generators()));
    let right = Matrix::identity(ring, n.generators()).kron(m.relations());
    Ok(FpModule::from_relations(Side::Left, left.vstack(&right)))
}

/// `[A, d_1, d_2, ...]` with `d_{i+1}` generating the left kernel of `d_i`;
/// stops early once a map is injective.
pub fn free_resolution(n: &FpModule, length: usize) -> Vec<Matrix> {
    let mut out = vec![n.relations().clone()];
    while out.len() < length {
        let last = out.last().unwrap();
        if last.rows() == 0 {
            break;
        }
        let k = linalg::left_kernel(last);
        if k.rows() == 0 {
            out.push(k);
            break;
        }
        out.push(k);
    }
    out
}

/// `ker(· Q) / im(· P)` on row vectors, where `P·Q = 0`.
fn homology(p: &Matrix, q: &Matrix, side: Side) -> FpModule {
    let k = linalg::left_kernel(q);
    let rel = linalg::left_kernel(&k.vstack(p)).select_cols(0..k.rows());
    FpModule::from_relations(side, rel)
}

/// `Ext^i(N, R)` for `i ∈ {0, 1, 2}`, a module on the opposite side.
pub fn ext_against_ring(n: &FpModule, i: usize) -> Result<FpModule> {
    if i > 2 {
        return Err(Error::Input("Ext against the ring is provided for i <= 2".into()));
    }
    let ring = n.ring();
    let d0 = n.relations().clone();
    let d1 = linalg::left_kernel(&d0);
    let side = n.side().opposite();
    // dualized complex on row vectors: R^{g} --d0ᵀ--> R^{r} --d1ᵀ--> ...
    let out = match i {
        0 => homology(&Matrix::zero(ring, 0, d0.cols()), &d0.transpose(), side),
        1 => homology(&d0.transpose(), &d1.transpose(), side),
        _ => {
            let d2 = linalg::left_kernel(&d1);
            homology(&d1.transpose(), &d2.transpose(), side)
        }
    };
    Ok(out)
}

/// The Auslander transpose of a left module `coker(A)`: the right module
/// presented by the columns of `A`, i.e. with row relations `Aᵀ`.
pub fn auslander_transpose(n: &FpModule) -> FpModule {
    FpModule::from_relations(n.side().opposite(), n.relations().transpose())
}

/// `R`-dual `Hom(N, R)` as a submodule of `R^{g}`: the columns of the
/// returned matrix generate it.
pub fn dual_generators(n: &FpModule) -> Matrix {
    linalg::right_kernel(n.relations())
}

/// The evaluation map `N → Hom(Hom(N, R), R)`.
pub fn double_dual_map(n: &FpModule) -> ModuleMorphism {
    let b = dual_generators(n);
    let c = linalg::right_kernel(&b);
    let d = linalg::left_kernel(&c);
    let dd = FpModule::from_relations(n.side(), linalg::left_kernel(&d));
    let x = linalg::solve_left(&d, &b)
        .expect("shapes agree")
        .expect("evaluation lands in the double dual");
    ModuleMorphism::new(n, &dd, x).expect("evaluation map is well defined")
}

/// The coimage of the double-dual map with its projection.
pub fn controllable_part_module(n: &FpModule) -> (FpModule, ModuleMorphism) {
    let b = dual_generators(n);
    let c = FpModule::from_relations(n.side(), linalg::left_kernel(&b));
    let pi = ModuleMorphism::new(n, &c, Matrix::identity(n.ring(), n.generators()))
        .expect("projection onto the controllable part");
    (c, pi)
}

pub fn is_controllable_module(n: &FpModule) -> bool {
    ext_against_ring(&auslander_transpose(n), 1)
        .expect("i = 1 is supported")
        .is_zero()
}
