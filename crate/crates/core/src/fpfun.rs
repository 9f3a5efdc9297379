//! Finitely presented functors on finitely presented modules.
//!
//! A functor is stored through a morphism `α: N → N′` and means
//! `G = coker Hom(α, −)`, so that
//! `G(M) = { x ∈ M^n | A·x = 0 } / { V·y | A′·y = 0 }`.
//! A morphism `G → H` (with `H` given by `β: K → K′`) is stored as data
//! `u: K → N` and a witness `w: K′ → N′` with `u·V_α ≡ V_β·w`; it acts on
//! values by `x ↦ U·x`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fpmod::{hom_module, FpModule, ModuleMorphism, Side};
use crate::json::{matrix_from_json, matrix_to_json, ring_from_json};
use crate::linalg::{self, LinearSystem};
use crate::matrix::Matrix;
use crate::oracle::{self, FiniteGroup, FiniteModule};
use crate::ppform::{malgrange_presentation, PpFormula, RingMap};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFunctor {
    alpha: ModuleMorphism,
}

/// `G(R)` with the data used to build it: columns `Z` spanning
/// `Hom(N, R)`, columns `S` spanning `Hom(N′, R)` and the relation columns
/// `C` with `Z·C = V·S·D`.
#[derive(Clone, Debug)]
pub struct RingValue {
    pub module: FpModule,
    pub z: Matrix,
    pub s: Matrix,
    pub c: Matrix,
    pub d: Matrix,
}

impl FpFunctor {
    pub fn new(alpha: ModuleMorphism) -> Self {
        FpFunctor { alpha }
    }

    /// `(A, A′, V)` with `A`, `A′` in row convention.
    pub fn from_matrices(a: Matrix, ap: Matrix, v: Matrix) -> Result<Self> {
        let alpha = ModuleMorphism::new(&FpModule::left(a), &FpModule::left(ap), v)?;
        Ok(FpFunctor { alpha })
    }

    /// `Hom(N, −)`.
    pub fn representable(n: &FpModule) -> Self {
        let zero = FpModule::zero(n.ring()).with_side(n.side());
        FpFunctor {
            alpha: ModuleMorphism::zero(n, &zero),
        }
    }

    pub fn forgetful(ring: &Ring) -> Self {
        Self::representable(&FpModule::free(ring, 1))
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::representable(&FpModule::zero(ring))
    }

    /// `N ⊗ −`: with `N` generated by `g` elements under `r` relations,
    /// `(N ⊗ M) = M^g / { Relᵀ·y }`.
    pub fn tensor_functor(n: &FpModule) -> Self {
        let ring = n.ring();
        let rel = n.relations();
        let src = FpModule::free(ring, rel.cols());
        let tgt = FpModule::free(ring, rel.rows());
        FpFunctor {
            alpha: ModuleMorphism::new(&src, &tgt, rel.transpose()).expect("free source"),
        }
    }

    /// `B(φ, −)`.
    pub fn behavior_functor(phi: &PpFormula) -> Self {
        FpFunctor {
            alpha: malgrange_presentation(phi),
        }
    }

    pub fn presentation(&self) -> &ModuleMorphism {
        &self.alpha
    }

    pub fn ring(&self) -> &Ring {
        self.alpha.ring()
    }

    pub fn side(&self) -> Side {
        self.alpha.source().side()
    }

    pub fn source_module(&self) -> &FpModule {
        self.alpha.source()
    }

    pub fn target_module(&self) -> &FpModule {
        self.alpha.target()
    }

    pub fn a(&self) -> &Matrix {
        self.alpha.source().relations()
    }

    pub fn ap(&self) -> &Matrix {
        self.alpha.target().relations()
    }

    pub fn v(&self) -> &Matrix {
        self.alpha.matrix()
    }

    /// Number of coordinates of a value, i.e. generators of `N`.
    pub fn width(&self) -> usize {
        self.a().cols()
    }

    /// `G(M)` as a module, from `Hom(N′, M) → Hom(N, M)`.
    pub fn evaluate(&self, m: &FpModule) -> Result<FpModule> {
        let m = m.with_side(self.side());
        let h1 = hom_module(self.source_module(), &m)?;
        let h2 = hom_module(self.target_module(), &m)?;
        let ring = self.ring();
        let k = h2.module.generators();
        let mut image = Matrix::zero(ring, 0, h1.module.generators());
        let id = Matrix::identity(ring, k);
        for i in 0..k {
            let y = h2.morphism(&id.select_rows(i..i + 1));
            let x = self.alpha.then(&y)?;
            image = image.vstack(&h1.coordinates(&x));
        }
        Ok(FpModule::from_relations(self.side(), h1.module.relations().vstack(&image)))
    }

    /// `G(M)` as an explicit group over a finite ring.
    pub fn evaluate_finite(&self, m: &FiniteModule, budget: u128) -> Result<FiniteGroup> {
        oracle::evaluate_functor(self.a(), self.ap(), self.v(), m, budget)
    }

    pub fn ring_value(&self) -> RingValue {
        let z = linalg::right_kernel(self.a());
        let s = linalg::right_kernel(self.ap());
        let vs = self.v().mul(&s);
        let k = linalg::right_kernel(&z.hstack(&vs.neg()));
        let c = k.select_rows(0..z.cols());
        let d = k.select_rows(z.cols()..k.rows());
        let module = FpModule::from_relations(Side::Right, c.transpose());
        RingValue { module, z, s, c, d }
    }

    /// `G(R)` as a right module.
    pub fn evaluate_at_ring(&self) -> FpModule {
        self.ring_value().module
    }

    /// `kernel(α)`.
    pub fn contravariant_defect(&self) -> FpModule {
        self.alpha.kernel().0
    }

    pub fn covariant_defect(&self) -> FpModule {
        self.evaluate_at_ring()
    }

    /// An isomorphic functor with simplified `N` and `N′`, with the
    /// isomorphisms `self → S` and `S → self`.
    pub fn simplify(&self) -> (FpFunctor, FunctorMorphism, FunctorMorphism) {
        let (n, n_to, n_from) = self.source_module().simplify();
        let (np, np_to, np_from) = self.target_module().simplify();
        let alpha = n_from
            .then(&self.alpha)
            .and_then(|a| a.then(&np_to))
            .expect("composable");
        debug_assert_eq!(alpha.source(), &n);
        debug_assert_eq!(alpha.target(), &np);
        let s = FpFunctor { alpha };
        let fwd = FunctorMorphism::new(self, &s, n_from.matrix().clone(), np_from.matrix().clone())
            .expect("simplification is natural");
        let back = FunctorMorphism::new(&s, self, n_to.matrix().clone(), np_to.matrix().clone())
            .expect("simplification is natural");
        (s, fwd, back)
    }

    /// Entrywise image along a ring map.
    pub fn change_ring(&self, sigma: &RingMap) -> Result<FpFunctor> {
        if self.ring() != sigma.source() {
            return Err(Error::RingMismatch(self.ring().to_string(), sigma.source().to_string()));
        }
        let alpha = ModuleMorphism::with_certificate(
            &FpModule::from_relations(self.side(), sigma.apply_matrix(self.a())),
            &FpModule::from_relations(self.side(), sigma.apply_matrix(self.ap())),
            sigma.apply_matrix(self.v()),
            sigma.apply_matrix(self.alpha.certificate()),
        )?;
        Ok(FpFunctor { alpha })
    }

    pub fn identity(&self) -> FunctorMorphism {
        let ring = self.ring();
        FunctorMorphism {
            source: self.clone(),
            target: self.clone(),
            u: Matrix::identity(ring, self.a().cols()),
            w: Matrix::identity(ring, self.ap().cols()),
        }
    }

    /// Zero exactly when `α` is a split mono.
    pub fn is_zero(&self) -> bool {
        self.identity().is_zero()
    }

    pub fn direct_sum(&self, other: &FpFunctor) -> Result<FpFunctor> {
        let n = self.source_module().direct_sum(other.source_module())?;
        let np = self.target_module().direct_sum(other.target_module())?;
        let alpha = ModuleMorphism::with_certificate(
            &n,
            &np,
            self.v().block_diag(other.v()),
            self.alpha.certificate().block_diag(other.alpha.certificate()),
        )?;
        Ok(FpFunctor { alpha })
    }

    /// Injections and projections of `self ⊕ other`.
    pub fn biproduct(&self, other: &FpFunctor) -> Result<Biproduct> {
        let sum = self.direct_sum(other)?;
        let ring = self.ring();
        let (n1, n2) = (self.a().cols(), other.a().cols());
        let (p1, p2) = (self.ap().cols(), other.ap().cols());
        let first = |a: usize, b: usize| Matrix::identity(ring, a).vstack(&Matrix::zero(ring, b, a));
        let second = |a: usize, b: usize| Matrix::zero(ring, a, b).vstack(&Matrix::identity(ring, b));
        let in1 = FunctorMorphism::new(self, &sum, first(n1, n2), first(p1, p2))?;
        let in2 = FunctorMorphism::new(other, &sum, second(n1, n2), second(p1, p2))?;
        let pr1 = FunctorMorphism::new(&sum, self, first(n1, n2).transpose(), first(p1, p2).transpose())?;
        let pr2 = FunctorMorphism::new(&sum, other, second(n1, n2).transpose(), second(p1, p2).transpose())?;
        Ok(Biproduct { sum, in1, in2, pr1, pr2 })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring().to_string(),
            "A": matrix_to_json(self.a()),
            "Aprime": matrix_to_json(self.ap()),
            "V": matrix_to_json(self.v()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = ring_from_json(v)?;
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Input(format!("functor needs `{k}`")))
                .and_then(|m| matrix_from_json(&ring, m))
        };
        let (a, ap, vm) = (get("A")?, get("Aprime")?, get("V")?);
        let vm = if vm.is_empty() {
            Matrix::zero(&ring, a.cols(), ap.cols())
        } else {
            vm
        };
        Self::from_matrices(a, ap, vm)
    }
}

#[derive(Clone, Debug)]
pub struct Biproduct {
    pub sum: FpFunctor,
    pub in1: FunctorMorphism,
    pub in2: FunctorMorphism,
    pub pr1: FunctorMorphism,
    pub pr2: FunctorMorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorMorphism {
    source: FpFunctor,
    target: FpFunctor,
    u: Matrix,
    w: Matrix,
}

/// The kernel of a functor morphism with its intermediate modules: the
/// pushout `Q` of `N ← K → K′` and `T = N′ ⊕ coker(β)`; the kernel is
/// `coker Hom(Q → T, −)`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub pushout: FpModule,
    pub codomain: FpModule,
    pub functor: FpFunctor,
    pub inclusion: FunctorMorphism,
}

fn neg(m: &Matrix) -> Matrix {
    m.neg()
}

impl FunctorMorphism {
    /// Checks that `u: K → N` and `w: K′ → N′` are module morphisms and
    /// that `u·V_α ≡ V_β·w`.
    pub fn new(source: &FpFunctor, target: &FpFunctor, u: Matrix, w: Matrix) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch(source.ring().to_string(), target.ring().to_string()));
        }
        ModuleMorphism::new(target.source_module(), source.source_module(), u.clone())?;
        ModuleMorphism::new(target.target_module(), source.target_module(), w.clone())?;
        let diff = u.mul(source.v()).sub(&target.v().mul(&w));
        let d = ModuleMorphism::new(target.source_module(), source.target_module(), diff)?;
        if !d.is_zero() {
            return Err(Error::NotWellDefined("witness equation fails".into()));
        }
        Ok(FunctorMorphism {
            source: source.clone(),
            target: target.clone(),
            u,
            w,
        })
    }

    /// The morphism with data `u`, computing a witness.
    pub fn from_data(source: &FpFunctor, target: &FpFunctor, u: Matrix) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch(source.ring().to_string(), target.ring().to_string()));
        }
        ModuleMorphism::new(target.source_module(), source.source_module(), u.clone())?;
        let (anp, akp, vb) = (source.ap(), target.ap(), target.v());
        let mut sys = LinearSystem::new(source.ring());
        let w = sys.unknown(akp.cols(), anp.cols());
        let z1 = sys.unknown(akp.rows(), anp.rows());
        let z2 = sys.unknown(vb.rows(), anp.rows());
        let ring = source.ring();
        let e1 = sys.equation(Matrix::zero(ring, akp.rows(), anp.cols()));
        sys.left(e1, akp, w)?;
        sys.right(e1, z1, &neg(anp))?;
        let e2 = sys.equation(u.mul(source.v()));
        sys.left(e2, vb, w)?;
        sys.right(e2, z2, anp)?;
        let sol = sys
            .solve()?
            .ok_or_else(|| Error::NotWellDefined("data is not natural".into()))?;
        Self::new(source, target, u, sol[0].clone())
    }

    pub fn zero(source: &FpFunctor, target: &FpFunctor) -> Self {
        let ring = source.ring();
        FunctorMorphism {
            source: source.clone(),
            target: target.clone(),
            u: Matrix::zero(ring, target.a().cols(), source.a().cols()),
            w: Matrix::zero(ring, target.ap().cols(), source.ap().cols()),
        }
    }

    pub fn source(&self) -> &FpFunctor {
        &self.source
    }

    pub fn target(&self) -> &FpFunctor {
        &self.target
    }

    pub fn u(&self) -> &Matrix {
        &self.u
    }

    pub fn w(&self) -> &Matrix {
        &self.w
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FunctorMorphism) -> Result<FunctorMorphism> {
        if self.target != g.source {
            return Err(Error::Input("functor morphisms are not composable".into()));
        }
        Ok(FunctorMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            u: g.u.mul(&self.u),
            w: g.w.mul(&self.w),
        })
    }

    fn check_parallel(&self, other: &FunctorMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Input("functor morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FunctorMorphism) -> Result<FunctorMorphism> {
        self.check_parallel(other)?;
        Ok(FunctorMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            u: self.u.add(&other.u),
            w: self.w.add(&other.w),
        })
    }

    pub fn neg(&self) -> FunctorMorphism {
        FunctorMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            u: self.u.neg(),
            w: self.w.neg(),
        }
    }

    pub fn sub(&self, other: &FunctorMorphism) -> Result<FunctorMorphism> {
        self.add(&other.neg())
    }

    /// Zero iff `u` factors through `β`: `U ≡ V_β·H` with `H: K′ → N`.
    pub fn is_zero(&self) -> bool {
        let (an, akp, vb) = (self.source.a(), self.target.ap(), self.target.v());
        let ring = self.ring();
        let mut sys = LinearSystem::new(ring);
        let h = sys.unknown(akp.cols(), an.cols());
        let z1 = sys.unknown(vb.rows(), an.rows());
        let z2 = sys.unknown(akp.rows(), an.rows());
        let e1 = sys.equation(self.u.clone());
        sys.left(e1, vb, h).expect("shapes");
        sys.right(e1, z1, an).expect("shapes");
        let e2 = sys.equation(Matrix::zero(ring, akp.rows(), an.cols()));
        sys.left(e2, akp, h).expect("shapes");
        sys.right(e2, z2, &neg(an)).expect("shapes");
        sys.solve().expect("shapes").is_some()
    }

    pub fn equals(&self, other: &FunctorMorphism) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    pub fn kernel_parts(&self) -> Kernel {
        let (g, h) = (&self.source, &self.target);
        let ring = self.ring();
        let side = g.side();
        let (n, np, kp) = (g.a().cols(), g.ap().cols(), h.ap().cols());
        let q_rel = g.a().block_diag(h.ap()).vstack(&self.u.hstack(&h.v().neg()));
        let pushout = FpModule::from_relations(side, q_rel);
        let coker_beta = FpModule::from_relations(side, h.ap().vstack(h.v()));
        let codomain = g.target_module().direct_sum(&coker_beta).expect("same ring");
        let gamma = g
            .v()
            .hstack(&Matrix::zero(ring, n, kp))
            .vstack(&self.w.hstack(&Matrix::identity(ring, kp)));
        let gamma = ModuleMorphism::new(&pushout, &codomain, gamma).expect("kernel presentation is well defined");
        let functor = FpFunctor::new(gamma);
        let u = Matrix::identity(ring, n).hstack(&Matrix::zero(ring, n, kp));
        let w = Matrix::identity(ring, np).hstack(&Matrix::zero(ring, np, kp));
        let inclusion = FunctorMorphism::new(&functor, g, u, w).expect("kernel inclusion is natural");
        Kernel {
            pushout,
            codomain,
            functor,
            inclusion,
        }
    }

    /// Kernel in simplified form with its inclusion.
    pub fn kernel(&self) -> (FpFunctor, FunctorMorphism) {
        let k = self.kernel_parts();
        let (s, _, back) = k.functor.simplify();
        let inclusion = back.then(&k.inclusion).expect("composable");
        (s, inclusion)
    }

    /// Presented by `(β, u): K → K′ ⊕ N`.
    pub fn cokernel(&self) -> (FpFunctor, FunctorMorphism) {
        let (g, h) = (&self.source, &self.target);
        let ring = self.ring();
        let (n, k, kp) = (g.a().cols(), h.a().cols(), h.ap().cols());
        let tgt = h.target_module().direct_sum(g.source_module()).expect("same ring");
        let delta = ModuleMorphism::new(h.source_module(), &tgt, h.v().hstack(&self.u))
            .expect("cokernel presentation is well defined");
        let c = FpFunctor::new(delta);
        let w = Matrix::identity(ring, kp).vstack(&Matrix::zero(ring, n, kp));
        let pi = FunctorMorphism::new(h, &c, Matrix::identity(ring, k), w).expect("cokernel projection is natural");
        let (s, fwd, _) = c.simplify();
        (s, pi.then(&fwd).expect("composable"))
    }

    /// Image as a subfunctor of the target.
    pub fn image(&self) -> (FpFunctor, FunctorMorphism) {
        self.cokernel().1.kernel()
    }

    /// Coimage as a quotient of the source.
    pub fn coimage(&self) -> (FpFunctor, FunctorMorphism) {
        self.kernel().1.cokernel()
    }

    /// The comparison `coimage → image` through which `self` factors.
    pub fn coimage_to_image(&self) -> Result<FunctorMorphism> {
        let (_, pi) = self.coimage();
        let (_, iota) = self.image();
        factor(self, Some(&pi), Some(&iota))?
            .ok_or_else(|| Error::NotWellDefined("morphism does not factor through its image".into()))
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

    pub fn inverse(&self) -> Result<Option<FunctorMorphism>> {
        if !self.is_iso() {
            return Ok(None);
        }
        factor(&self.source.identity(), Some(self), None)
    }

    pub fn change_ring(&self, sigma: &RingMap) -> Result<FunctorMorphism> {
        Self::new(
            &self.source.change_ring(sigma)?,
            &self.target.change_ring(sigma)?,
            sigma.apply_matrix(&self.u),
            sigma.apply_matrix(&self.w),
        )
    }

    /// Class map `G(M) → H(M)` on explicit groups.
    pub fn group_map(&self, g: &FiniteGroup, h: &FiniteGroup, m: &FiniteModule) -> Result<Vec<usize>> {
        oracle::induced_map(&self.u, g, h, m)
            .ok_or_else(|| Error::NotWellDefined("induced map is not constant on classes".into()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "U": matrix_to_json(&self.u),
            "W": matrix_to_json(&self.w),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Input(format!("functor morphism needs `{k}`")));
        let source = FpFunctor::from_json(field("source")?)?;
        let target = FpFunctor::from_json(field("target")?)?;
        let ring = source.ring().clone();
        let mut u = matrix_from_json(&ring, field("U")?)?;
        if u.is_empty() {
            u = Matrix::zero(&ring, target.a().cols(), source.a().cols());
        }
        match v.get("W") {
            Some(w) => {
                let mut w = matrix_from_json(&ring, w)?;
                if w.is_empty() {
                    w = Matrix::zero(&ring, target.ap().cols(), source.ap().cols());
                }
                Self::new(&source, &target, u, w)
            }
            None => Self::from_data(&source, &target, u),
        }
    }
}

/// Find `h: S → T` with `post ∘ h ∘ pre = g`, where `pre: X → S` and
/// `post: T → Y` default to identities.
pub fn factor(
    g: &FunctorMorphism,
    pre: Option<&FunctorMorphism>,
    post: Option<&FunctorMorphism>,
) -> Result<Option<FunctorMorphism>> {
    let (x, y) = (&g.source, &g.target);
    let ring = g.ring();
    let s = match pre {
        Some(p) if &p.source != x => return Err(Error::Input("pre-composite does not start at the source".into())),
        Some(p) => &p.target,
        None => x,
    };
    let t = match post {
        Some(p) if &p.target != y => return Err(Error::Input("post-composite does not end at the target".into())),
        Some(p) => &p.source,
        None => y,
    };
    let u_pre = pre.map_or_else(|| Matrix::identity(ring, x.width()), |p| p.u.clone());
    let u_post = post.map_or_else(|| Matrix::identity(ring, y.width()), |p| p.u.clone());
    let (a_s, ap_s, v_s) = (s.a(), s.ap(), s.v());
    let (a_t, ap_t, v_t) = (t.a(), t.ap(), t.v());
    let (a_x, ap_y, v_y) = (x.a(), y.ap(), y.v());

    let mut sys = LinearSystem::new(ring);
    let uh = sys.unknown(a_t.cols(), a_s.cols());
    let wh = sys.unknown(ap_t.cols(), ap_s.cols());
    let kk = sys.unknown(ap_y.cols(), a_x.cols());
    let z1 = sys.unknown(a_t.rows(), a_s.rows());
    let z2 = sys.unknown(ap_t.rows(), ap_s.rows());
    let z3 = sys.unknown(a_t.cols(), ap_s.rows());
    let z4 = sys.unknown(ap_y.rows(), a_x.rows());
    let z5 = sys.unknown(y.width(), a_x.rows());

    let e1 = sys.equation(Matrix::zero(ring, a_t.rows(), a_s.cols()));
    sys.left(e1, a_t, uh)?;
    sys.right(e1, z1, &neg(a_s))?;
    let e2 = sys.equation(Matrix::zero(ring, ap_t.rows(), ap_s.cols()));
    sys.left(e2, ap_t, wh)?;
    sys.right(e2, z2, &neg(ap_s))?;
    let e3 = sys.equation(Matrix::zero(ring, a_t.cols(), ap_s.cols()));
    sys.right(e3, uh, v_s)?;
    sys.left(e3, &neg(v_t), wh)?;
    sys.right(e3, z3, &neg(ap_s))?;
    let e4 = sys.equation(Matrix::zero(ring, ap_y.rows(), a_x.cols()));
    sys.left(e4, ap_y, kk)?;
    sys.right(e4, z4, &neg(a_x))?;
    let e5 = sys.equation(g.u.clone());
    sys.term(e5, &u_post, uh, &u_pre)?;
    sys.left(e5, &neg(v_y), kk)?;
    sys.right(e5, z5, &neg(a_x))?;

    match sys.solve()? {
        None => Ok(None),
        Some(sol) => Ok(Some(FunctorMorphism::new(s, t, sol[0].clone(), sol[1].clone())?)),
    }
}

/// `N ⊗ − → N′ ⊗ −` induced by a module morphism.
pub fn tensor_morphism(alpha: &ModuleMorphism) -> FunctorMorphism {
    let src = FpFunctor::tensor_functor(alpha.source());
    let tgt = FpFunctor::tensor_functor(alpha.target());
    FunctorMorphism::new(&src, &tgt, alpha.matrix().transpose(), alpha.certificate().transpose())
        .expect("tensor morphism is natural")
}

/// The dual functor `X ↦ Hom(G, X ⊗ −) = kernel(X ⊗ α)`.
pub fn agj_dual(g: &FpFunctor) -> FpFunctor {
    tensor_morphism(g.presentation()).kernel().0
}

/// `G(R) ⊗ − → G`.
pub fn counit_tensor(g: &FpFunctor) -> FunctorMorphism {
    let rv = g.ring_value();
    let src = FpFunctor::tensor_functor(&rv.module);
    FunctorMorphism::new(&src, g, rv.z.clone(), rv.s.mul(&rv.d)).expect("counit is natural")
}

/// `G → Hom(kernel(α), −)`.
pub fn unit_hom(g: &FpFunctor) -> FunctorMorphism {
    let (k, iota) = g.presentation().kernel();
    let tgt = FpFunctor::representable(&k);
    let w = Matrix::zero(g.ring(), 0, g.ap().cols());
    FunctorMorphism::new(g, &tgt, iota.matrix().clone(), w).expect("unit is natural")
}

/// Image of the counit, with its inclusion into `G`.
pub fn controllable_part_functor(g: &FpFunctor) -> (FpFunctor, FunctorMorphism) {
    counit_tensor(g).image()
}

/// Coimage of the unit, with the projection from `G`.
pub fn observable_quotient_functor(g: &FpFunctor) -> (FpFunctor, FunctorMorphism) {
    unit_hom(g).coimage()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_BUDGET;
    use crate::ppform::parse_formula;

    fn z4() -> Ring {
        Ring::IntegersMod(4)
    }

    fn order(g: &FpFunctor, m: &FpModule) -> usize {
        let fm = FiniteModule::enumerate(m, DEFAULT_BUDGET).unwrap();
        g.evaluate_finite(&fm, DEFAULT_BUDGET).unwrap().order()
    }

    fn times(g: &FpFunctor, c: i64) -> FunctorMorphism {
        let r = g.ring().clone();
        let id = g.identity();
        FunctorMorphism::new(g, g, id.u().scale(&r.from_i64(c)), id.w().scale(&r.from_i64(c))).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let r = z4();
        let m = FpModule::free(&r, 1);
        let rep = FpFunctor::representable(&FpModule::left(Matrix::from_ints(&r, 1, 1, &[2])));
        assert_eq!(order(&rep, &m), 2);
        let phi = parse_formula("ring ZZ/4; free x; bound y; x + 2*y = 0;").unwrap();
        let b = FpFunctor::behavior_functor(&phi);
        assert_eq!(order(&b, &m), 2);
        assert_eq!(order(&b, &FpModule::zero(&r)), 1);
        // module-level evaluation agrees with enumeration
        let ev = b.evaluate(&m).unwrap();
        assert_eq!(oracle::module_order(&ev, DEFAULT_BUDGET).unwrap(), 2);
        let f = FpFunctor::forgetful(&Ring::Integers);
        let z = Ring::Integers;
        let m = FpModule::left(Matrix::from_ints(&z, 1, 1, &[4]));
        let fm = FiniteModule::enumerate_with_exponent(&m, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(f.evaluate_finite(&fm, DEFAULT_BUDGET).unwrap().order(), 4);
        assert!(FpFunctor::zero(&z).is_zero());
    }

    #[test]
    fn evaluation_at_ring() {
        let z = Ring::Integers;
        let n = FpModule::left(Matrix::from_ints(&z, 1, 2, &[2, 4]));
        let t = FpFunctor::tensor_functor(&n).evaluate_at_ring();
        assert_eq!(t.invariant_factors().unwrap(), n.invariant_factors().unwrap());
        let rep = FpFunctor::representable(&FpModule::left(Matrix::from_ints(&z, 1, 1, &[2])));
        assert!(rep.evaluate_at_ring().is_zero());
        let f = FpFunctor::forgetful(&z).evaluate_at_ring();
        assert_eq!(f.generators() - f.relations().nonzero_rows().rows(), 1);
        assert!(FpFunctor::tensor_functor(&FpModule::left(Matrix::from_ints(&z, 1, 1, &[2])))
            .contravariant_defect()
            .is_zero());
    }

    #[test]
    fn morphism_algebra() {
        let r = z4();
        let f = FpFunctor::forgetful(&r);
        let two = times(&f, 2);
        assert!(f.identity().then(&two).unwrap().equals(&two).unwrap());
        assert!(two.add(&two.neg()).unwrap().is_zero());
        assert!(two.then(&two).unwrap().is_zero());
        assert!(!two.is_zero());
        assert!(times(&f, 6).equals(&two).unwrap());
    }

    #[test]
    fn kernels_and_cokernels() {
        let r = z4();
        let m = FpModule::free(&r, 1);
        let f = FpFunctor::forgetful(&r);
        let (k, _) = f.identity().kernel();
        assert!(k.is_zero());
        assert!(f.identity().cokernel().0.is_zero());
        let two = times(&f, 2);
        let (k, _) = two.kernel();
        let (c, _) = two.cokernel();
        assert_eq!(order(&k, &m), 2);
        assert_eq!(order(&c, &m), 2);
        assert!(!two.is_mono() && !two.is_epi());
        let phi = parse_formula("ring ZZ/4; free x; 2*x = 0;").unwrap();
        let b = FpFunctor::behavior_functor(&phi);
        let incl = FunctorMorphism::from_data(&b, &f, Matrix::identity(&r, 1)).unwrap();
        assert!(incl.is_mono());
        assert_eq!(order(&incl.cokernel().0, &m), 2);
        let cmp = two.coimage_to_image().unwrap();
        assert!(cmp.is_iso());
    }

    #[test]
    fn defects_and_duality() {
        let z = Ring::Integers;
        let n = FpModule::left(Matrix::from_ints(&z, 1, 2, &[0, 2]));
        let rep = FpFunctor::representable(&n);
        assert_eq!(rep.contravariant_defect().invariant_factors().unwrap(), n.invariant_factors().unwrap());
        let d = agj_dual(&rep);
        assert_eq!(d.evaluate_at_ring().invariant_factors().unwrap(), n.invariant_factors().unwrap());
        let f = agj_dual(&FpFunctor::forgetful(&z));
        let e = counit_tensor(&f);
        assert!(e.is_iso());
        let m = FpModule::left(Matrix::from_ints(&z, 1, 1, &[6]));
        let fm = FiniteModule::enumerate_with_exponent(&m, 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(f.evaluate_finite(&fm, DEFAULT_BUDGET).unwrap().order(), 6);
    }

    #[test]
    fn units_and_counits() {
        let z = Ring::Integers;
        let n = FpModule::left(Matrix::from_ints(&z, 1, 2, &[0, 2]));
        assert!(counit_tensor(&FpFunctor::tensor_functor(&n)).is_iso());
        assert!(unit_hom(&FpFunctor::representable(&n)).is_iso());
        let two = FpModule::left(Matrix::from_ints(&z, 1, 1, &[2]));
        let rep = FpFunctor::representable(&two);
        assert!(counit_tensor(&rep).source().is_zero());
        assert!(controllable_part_functor(&rep).0.is_zero());
        assert!(observable_quotient_functor(&FpFunctor::tensor_functor(&two)).0.is_zero());
        let f = FpFunctor::forgetful(&z);
        assert!(controllable_part_functor(&f).1.is_iso());
        assert!(observable_quotient_functor(&f).1.is_iso());
    }

    #[test]
    fn json_round_trip() {
        let r = z4();
        let f = FpFunctor::forgetful(&r);
        assert_eq!(FpFunctor::from_json(&f.to_json()).unwrap(), f);
        let two = times(&f, 2);
        assert_eq!(FunctorMorphism::from_json(&two.to_json()).unwrap(), two);
    }
}
