//! Abstract behaviors: finitely presented functors seen through a signal
//! space `M`, where morphisms inverted by evaluation at `M` become
//! isomorphisms.
//!
//! Three backends decide questions about a behavior:
//! enumeration of `G(M)` over a finite ring, the contravariant defect
//! (directions reversed) when `M` is declared an fp-injective
//! fp-cogenerator, and evaluation at `R` when `M` is declared
//! fp-faithfully flat.

use std::collections::HashSet;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fpfun::{controllable_part_functor, observable_quotient_functor, unit_hom, FpFunctor, FunctorMorphism};
use crate::fpmod::{double_dual_map, FpModule, ModuleMorphism};
use crate::json::{module_from_json, module_to_json, ring_from_json};
use crate::linalg;
use crate::matrix::Matrix;
use crate::oracle::{self, FiniteGroup, FiniteModule, DEFAULT_BUDGET};
use crate::ppform::{eliminate_latents, PpFormula};
use crate::random;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Finite,
    InjectiveCogenerator,
    Flat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Undetermined,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

#[derive(Clone, Debug)]
pub struct SignalSpace {
    ring: Ring,
    backend: Backend,
    module: Option<FpModule>,
    table: Option<FiniteModule>,
    budget: u128,
    injective_cogenerator: bool,
    flat: bool,
}

impl SignalSpace {
    /// An explicitly enumerated module over a finite ring.
    pub fn finite(m: &FpModule, budget: u128) -> Result<Self> {
        if !m.ring().is_finite() {
            return Err(Error::SignalSpace(format!("enumeration needs a finite ring, got {}", m.ring())));
        }
        let table = FiniteModule::enumerate(m, budget)?;
        Ok(SignalSpace {
            ring: m.ring().clone(),
            backend: Backend::Finite,
            module: Some(m.clone()),
            table: Some(table),
            budget,
            injective_cogenerator: false,
            flat: false,
        })
    }

    /// A finite abelian group as a module over `ZZ`, given with an
    /// exponent killing it.
    pub fn finite_over_integers(m: &FpModule, exponent: u64, budget: u128) -> Result<Self> {
        let table = FiniteModule::enumerate_with_exponent(m, exponent, budget)?;
        Ok(SignalSpace {
            ring: m.ring().clone(),
            backend: Backend::Finite,
            module: Some(m.clone()),
            table: Some(table),
            budget,
            injective_cogenerator: false,
            flat: false,
        })
    }

    /// `ZZ/n` over itself: enumerable, injective cogenerator and flat.
    pub fn self_injective(ring: &Ring, budget: u128) -> Result<Self> {
        let mut s = Self::finite(&FpModule::free(ring, 1), budget)?;
        s.injective_cogenerator = true;
        s.flat = true;
        Ok(s)
    }

    pub fn injective_cogenerator(ring: &Ring, module: Option<FpModule>) -> Self {
        SignalSpace {
            ring: ring.clone(),
            backend: Backend::InjectiveCogenerator,
            module,
            table: None,
            budget: DEFAULT_BUDGET,
            injective_cogenerator: true,
            flat: false,
        }
    }

    /// `M = R`.
    pub fn flat(ring: &Ring) -> Self {
        SignalSpace {
            ring: ring.clone(),
            backend: Backend::Flat,
            module: Some(FpModule::free(ring, 1)),
            table: None,
            budget: DEFAULT_BUDGET,
            injective_cogenerator: false,
            flat: true,
        }
    }

    /// Declare the finite module an fp-injective fp-cogenerator.
    pub fn declare_injective_cogenerator(mut self) -> Self {
        self.injective_cogenerator = true;
        self
    }

    pub fn declare_flat(mut self) -> Self {
        self.flat = true;
        self
    }

    /// Same module, decided by another backend.
    pub fn with_backend(&self, backend: Backend) -> Result<Self> {
        let mut s = self.clone();
        match backend {
            Backend::Finite if s.table.is_none() => {
                return Err(Error::SignalSpace("no enumerable module attached".into()))
            }
            Backend::InjectiveCogenerator if !s.injective_cogenerator => {
                return Err(Error::SignalSpace("module is not declared injective-cogenerator".into()))
            }
            Backend::Flat if !s.flat => return Err(Error::SignalSpace("module is not declared flat".into())),
            _ => {}
        }
        s.backend = backend;
        Ok(s)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn module(&self) -> Option<&FpModule> {
        self.module.as_ref()
    }

    pub fn table(&self) -> Option<&FiniteModule> {
        self.table.as_ref()
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn is_injective_cogenerator(&self) -> bool {
        self.injective_cogenerator
    }

    pub fn is_flat(&self) -> bool {
        self.flat
    }

    /// Whether verdicts beyond enumeration are exact.
    fn exact(&self) -> bool {
        self.backend != Backend::Finite || self.injective_cogenerator || self.flat
    }

    fn table_or_err(&self) -> Result<&FiniteModule> {
        self.table
            .as_ref()
            .ok_or_else(|| Error::SignalSpace("this backend has no enumerated module".into()))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "ring": self.ring.to_string(),
            "backend": self.backend,
            "budget": u64::try_from(self.budget).unwrap_or(u64::MAX),
        });
        if let Some(m) = &self.module {
            v["module"] = module_to_json(m);
        }
        if let (Some(t), Ring::Integers) = (&self.table, &self.ring) {
            v["exponent"] = json!(t.exponent());
        }
        let mut declared = Vec::new();
        if self.injective_cogenerator {
            declared.push("injective-cogenerator");
        }
        if self.flat {
            declared.push("flat");
        }
        v["declared"] = json!(declared);
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = ring_from_json(v)?;
        let backend: Backend = match v.get("backend") {
            Some(b) => serde_json::from_value(b.clone())
                .map_err(|_| Error::Input(format!("unknown backend {b}")))?,
            None => return Err(Error::Input("signal space needs `backend`".into())),
        };
        let budget = match v.get("budget") {
            None => DEFAULT_BUDGET,
            Some(Value::Number(n)) => n
                .as_u64()
                .map(u128::from)
                .ok_or_else(|| Error::Input("budget must be a non-negative integer".into()))?,
            Some(Value::String(s)) => s
                .parse()
                .map_err(|_| Error::Input("budget must be a non-negative integer".into()))?,
            Some(_) => return Err(Error::Input("budget must be a non-negative integer".into())),
        };
        let module = v.get("module").map(module_from_json).transpose()?;
        if let Some(m) = &module {
            if m.ring() != &ring {
                return Err(Error::RingMismatch(ring.to_string(), m.ring().to_string()));
            }
        }
        let declared: Vec<String> = v
            .get("declared")
            .and_then(Value::as_array)
            .map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect())
            .unwrap_or_default();
        let mut s = match backend {
            Backend::Finite => {
                let m = module.ok_or_else(|| Error::Input("finite backend needs `module`".into()))?;
                match v.get("exponent").and_then(Value::as_u64) {
                    Some(e) if ring == Ring::Integers => SignalSpace::finite_over_integers(&m, e, budget)?,
                    _ => SignalSpace::finite(&m, budget)?,
                }
            }
            Backend::InjectiveCogenerator => SignalSpace::injective_cogenerator(&ring, module),
            Backend::Flat => {
                if module.as_ref().is_some_and(|m| m.relations().cols() != 1 || !m.relations().is_zero()) {
                    return Err(Error::SignalSpace("the flat backend ships M = R only".into()));
                }
                SignalSpace::flat(&ring)
            }
        };
        s.budget = budget;
        s.injective_cogenerator |= declared.iter().any(|d| d == "injective-cogenerator");
        s.flat |= declared.iter().any(|d| d == "flat");
        Ok(s)
    }

    /// Test `trials` random monos `X ↪ Y` for surjectivity of
    /// `Hom(Y, M) → Hom(X, M)`; finite backend only.
    pub fn spot_check_injective<R: Rng>(&self, trials: usize, rng: &mut R) -> Result<bool> {
        let table = self.table_or_err()?;
        for _ in 0..trials {
            let x = random::module(&self.ring, 2, 2, rng);
            let f = random::morphism_from(&x, 2, 2, rng);
            let (im, _, mono) = f.image();
            let homs_y = oracle::enumerate_homs(mono.target(), table, self.budget)?;
            let homs_x = oracle::enumerate_homs(&im, table, self.budget)?;
            let restricted: HashSet<_> = homs_y
                .iter()
                .map(|h| table.apply_matrix(mono.matrix(), h))
                .collect();
            if restricted.len() != homs_x.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Zero test for a functor.
    pub fn kills(&self, g: &FpFunctor) -> Result<bool> {
        Ok(match self.backend {
            Backend::Finite => g.evaluate_finite(self.table_or_err()?, self.budget)?.order() == 1,
            Backend::InjectiveCogenerator => g.contravariant_defect().is_zero(),
            Backend::Flat => g.covariant_defect().is_zero(),
        })
    }

    /// Zero / mono / epi of a functor morphism after passing to `M`.
    pub fn status(&self, f: &FunctorMorphism) -> Result<Status> {
        Ok(match self.backend {
            Backend::Finite => {
                let table = self.table_or_err()?;
                let g = f.source().evaluate_finite(table, self.budget)?;
                let h = f.target().evaluate_finite(table, self.budget)?;
                Status::of_map(&f.group_map(&g, &h, table)?, h.order())
            }
            Backend::InjectiveCogenerator => Status::of_defect(&defect_map(f)?),
            Backend::Flat => Status::of_covdefect(&covdefect_map(f)?),
        })
    }

    fn inverts(&self, f: &FunctorMorphism) -> Result<bool> {
        let s = self.status(f)?;
        Ok(s.mono && s.epi)
    }
}

/// Zero, mono and epi verdicts of a morphism of behaviors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Status {
    pub zero: bool,
    pub mono: bool,
    pub epi: bool,
}

impl Status {
    fn of_map(map: &[usize], target_order: usize) -> Self {
        Status {
            zero: map.iter().all(|&c| c == 0),
            mono: oracle::is_injective(map),
            epi: oracle::is_surjective(map, target_order),
        }
    }

    /// The defect reverses arrows.
    fn of_defect(m: &ModuleMorphism) -> Self {
        Status {
            zero: m.is_zero(),
            mono: m.is_epi(),
            epi: m.is_mono(),
        }
    }

    fn of_covdefect(m: &ModuleMorphism) -> Self {
        Status {
            zero: m.is_zero(),
            mono: m.is_mono(),
            epi: m.is_epi(),
        }
    }

    pub fn iso(&self) -> bool {
        self.mono && self.epi
    }
}

/// `kernel(β) → kernel(α)` induced by `f: G → H`.
pub fn defect_map(f: &FunctorMorphism) -> Result<ModuleMorphism> {
    let (_, ih) = f.target().presentation().kernel();
    let (_, ig) = f.source().presentation().kernel();
    let g = ModuleMorphism::new(ih.source(), f.source().source_module(), ih.matrix().mul(f.u()))?;
    ig.factor_through_mono(&g)?
        .ok_or_else(|| Error::NotWellDefined("data does not map defects".into()))
}

/// `G(R) → H(R)` induced by `f: G → H`.
pub fn covdefect_map(f: &FunctorMorphism) -> Result<ModuleMorphism> {
    let g = f.source().ring_value();
    let h = f.target().ring_value();
    let x = linalg::solve_right(&h.z, &f.u().mul(&g.z))?
        .ok_or_else(|| Error::NotWellDefined("data does not map values at the ring".into()))?;
    ModuleMorphism::new(&g.module, &h.module, x.transpose())
}

#[derive(Clone, Debug)]
pub struct AbstractBehavior {
    functor: FpFunctor,
    space: SignalSpace,
}

pub fn to_behavior(g: &FpFunctor, space: &SignalSpace) -> Result<AbstractBehavior> {
    if g.ring() != space.ring() {
        return Err(Error::RingMismatch(g.ring().to_string(), space.ring().to_string()));
    }
    Ok(AbstractBehavior {
        functor: g.clone(),
        space: space.clone(),
    })
}

impl AbstractBehavior {
    pub fn functor(&self) -> &FpFunctor {
        &self.functor
    }

    pub fn space(&self) -> &SignalSpace {
        &self.space
    }

    /// `G(M)`, finite backend only.
    pub fn underlying_group(&self) -> Result<FiniteGroup> {
        self.functor.evaluate_finite(self.space.table_or_err()?, self.space.budget)
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.space.kills(&self.functor)
    }

    pub fn identity(&self) -> RoofMorphism {
        let id = self.functor.identity();
        RoofMorphism {
            source: self.clone(),
            target: self.clone(),
            s: id.clone(),
            f: id,
        }
    }

    fn with_functor(&self, g: &FpFunctor) -> AbstractBehavior {
        AbstractBehavior {
            functor: g.clone(),
            space: self.space.clone(),
        }
    }
}

/// `f ∘ s⁻¹` for `s: E → G` invertible at `M` and `f: E → H`.
#[derive(Clone, Debug)]
pub struct RoofMorphism {
    source: AbstractBehavior,
    target: AbstractBehavior,
    s: FunctorMorphism,
    f: FunctorMorphism,
}

/// A roof morphism read off through the backend.
#[derive(Clone, Debug)]
pub enum Transported {
    Group {
        map: Vec<usize>,
        target_order: usize,
    },
    /// `Defect(H) → Defect(G)`.
    Defect(ModuleMorphism),
    /// `G(R) → H(R)`.
    Covdefect(ModuleMorphism),
}

fn pullback(a: &FunctorMorphism, b: &FunctorMorphism) -> Result<(FunctorMorphism, FunctorMorphism)> {
    let bp = a.source().biproduct(b.source())?;
    let d = bp.pr1.then(a)?.sub(&bp.pr2.then(b)?)?;
    let (_, i) = d.kernel();
    Ok((i.then(&bp.pr1)?, i.then(&bp.pr2)?))
}

fn pushout(a: &FunctorMorphism, b: &FunctorMorphism) -> Result<(FunctorMorphism, FunctorMorphism)> {
    let bp = a.target().biproduct(b.target())?;
    let d = a.then(&bp.in1)?.sub(&b.then(&bp.in2)?)?;
    let (_, p) = d.cokernel();
    Ok((bp.in1.then(&p)?, bp.in2.then(&p)?))
}

impl RoofMorphism {
    pub fn new(s: FunctorMorphism, f: FunctorMorphism, space: &SignalSpace) -> Result<Self> {
        if s.source() != f.source() {
            return Err(Error::Input("roof legs must share their source".into()));
        }
        if !space.inverts(&s)? {
            return Err(Error::NotWellDefined("left leg is not invertible at the signal space".into()));
        }
        Ok(RoofMorphism {
            source: to_behavior(s.target(), space)?,
            target: to_behavior(f.target(), space)?,
            s,
            f,
        })
    }

    pub fn from_morphism(f: FunctorMorphism, space: &SignalSpace) -> Result<Self> {
        Self::new(f.source().identity(), f, space)
    }

    pub fn source(&self) -> &AbstractBehavior {
        &self.source
    }

    pub fn target(&self) -> &AbstractBehavior {
        &self.target
    }

    pub fn left_leg(&self) -> &FunctorMorphism {
        &self.s
    }

    pub fn right_leg(&self) -> &FunctorMorphism {
        &self.f
    }

    fn space(&self) -> &SignalSpace {
        &self.source.space
    }

    pub fn transport(&self) -> Result<Transported> {
        let space = self.space();
        match space.backend {
            Backend::Finite => {
                let table = space.table_or_err()?;
                let e = self.s.source().evaluate_finite(table, space.budget)?;
                let g = self.s.target().evaluate_finite(table, space.budget)?;
                let h = self.f.target().evaluate_finite(table, space.budget)?;
                let s = self.s.group_map(&e, &g, table)?;
                let f = self.f.group_map(&e, &h, table)?;
                let mut map = vec![0; g.order()];
                for (x, &y) in s.iter().enumerate() {
                    map[y] = f[x];
                }
                Ok(Transported::Group {
                    map,
                    target_order: h.order(),
                })
            }
            Backend::InjectiveCogenerator => {
                let inv = defect_map(&self.s)?
                    .inverse()
                    .ok_or_else(|| Error::NotWellDefined("left leg is not invertible".into()))?;
                Ok(Transported::Defect(defect_map(&self.f)?.then(&inv)?))
            }
            Backend::Flat => {
                let inv = covdefect_map(&self.s)?
                    .inverse()
                    .ok_or_else(|| Error::NotWellDefined("left leg is not invertible".into()))?;
                Ok(Transported::Covdefect(inv.then(&covdefect_map(&self.f)?)?))
            }
        }
    }

    pub fn status(&self) -> Result<Status> {
        self.space().status(&self.f)
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.status()?.zero)
    }

    pub fn is_mono(&self) -> Result<bool> {
        Ok(self.status()?.mono)
    }

    pub fn is_epi(&self) -> Result<bool> {
        Ok(self.status()?.epi)
    }

    pub fn is_iso(&self) -> Result<bool> {
        Ok(self.status()?.iso())
    }

    fn check_parallel(&self, other: &RoofMorphism) -> Result<()> {
        if self.source.functor != other.source.functor || self.target.functor != other.target.functor {
            return Err(Error::Input("roofs are not parallel".into()));
        }
        Ok(())
    }

    pub fn equal(&self, other: &RoofMorphism) -> Result<bool> {
        self.check_parallel(other)?;
        Ok(match (self.transport()?, other.transport()?) {
            (Transported::Group { map: a, .. }, Transported::Group { map: b, .. }) => a == b,
            (Transported::Defect(a), Transported::Defect(b)) | (Transported::Covdefect(a), Transported::Covdefect(b)) => {
                a.equals(&b)?
            }
            _ => unreachable!("same signal space"),
        })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RoofMorphism) -> Result<RoofMorphism> {
        if self.target.functor != next.source.functor {
            return Err(Error::Input("roofs are not composable".into()));
        }
        let (p1, p2) = pullback(&self.f, &next.s)?;
        Ok(RoofMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            s: p1.then(&self.s)?,
            f: p2.then(&next.f)?,
        })
    }

    /// For a mono `self: X → Y` and `beta: Z → Y`, the `γ: Z → X` with
    /// `self ∘ γ = beta`, if it exists.
    pub fn lift_through_mono(&self, beta: &RoofMorphism) -> Result<Option<RoofMorphism>> {
        if self.target.functor != beta.target.functor {
            return Err(Error::Input("morphisms do not share a target".into()));
        }
        if !self.is_mono()? {
            return Err(Error::Input("lifting needs a monomorphism".into()));
        }
        let (pa, pb) = pullback(&self.f, &beta.f)?;
        let s = pb.then(&beta.s)?;
        if !self.space().inverts(&s)? {
            return Ok(None);
        }
        let f = pa.then(&self.s)?;
        Ok(Some(RoofMorphism {
            source: beta.source.clone(),
            target: self.source.clone(),
            s,
            f,
        }))
    }

    /// For an epi `self: X → C` and `alpha: X → Y`, the `γ: C → Y` with
    /// `γ ∘ self = alpha`, if it exists.
    pub fn descend_through_epi(&self, alpha: &RoofMorphism) -> Result<Option<RoofMorphism>> {
        if self.source.functor != alpha.source.functor {
            return Err(Error::Input("morphisms do not share a source".into()));
        }
        if !self.is_epi()? {
            return Err(Error::Input("descending needs an epimorphism".into()));
        }
        let (pb, pa) = pullback(&self.s, &alpha.s)?;
        let fb = pb.then(&self.f)?;
        let fa = pa.then(&alpha.f)?;
        let (qc, qy) = pushout(&fb, &fa)?;
        if !self.space().inverts(&qy)? {
            return Ok(None);
        }
        let (rc, ry) = pullback(&qc, &qy)?;
        Ok(Some(RoofMorphism {
            source: self.target.clone(),
            target: alpha.target.clone(),
            s: rc,
            f: ry,
        }))
    }
}

/// `Hom(R^k, −)` in its standard form.
fn free_power_rank(g: &FpFunctor) -> Option<usize> {
    (g.a().rows() == 0 && g.ap().cols() == 0).then(|| g.width())
}

/// A formula whose behavior is the image of a mono into `F^k`; when `M`
/// is an fp-injective cogenerator the latent variables are eliminated.
pub fn realize_subobject(r: &RoofMorphism) -> Result<PpFormula> {
    let k = free_power_rank(r.target.functor())
        .ok_or_else(|| Error::Input("target must be a power of the forgetful functor".into()))?;
    if !r.is_mono()? {
        return Err(Error::Input("subobjects are given by monomorphisms".into()));
    }
    let e = r.f.source();
    let ring = e.ring();
    let b = Matrix::identity(ring, k).vstack(&Matrix::zero(ring, e.a().rows(), k));
    let bp = r.f.u().neg().vstack(e.a());
    let phi = PpFormula::new(b, bp)?;
    Ok(if r.space().injective_cogenerator {
        eliminate_latents(&phi, true)
    } else {
        phi
    })
}

/// `Defect(G)`; the behavior category is dual to modules here.
pub fn duality_transport(b: &AbstractBehavior) -> Result<FpModule> {
    if !b.space.injective_cogenerator {
        return Err(Error::SignalSpace("duality needs an injective-cogenerator signal space".into()));
    }
    Ok(b.functor.contravariant_defect())
}

/// `G(R)` as a right module.
pub fn flat_transport(b: &AbstractBehavior) -> Result<FpModule> {
    if !b.space.flat {
        return Err(Error::SignalSpace("transport needs a flat signal space".into()));
    }
    Ok(b.functor.covariant_defect())
}

/// Behavior with the inclusion of its controllable part.
pub fn controllable_part(b: &AbstractBehavior) -> Result<(AbstractBehavior, RoofMorphism)> {
    let (c, incl) = controllable_part_functor(&b.functor);
    Ok((b.with_functor(&c), RoofMorphism::from_morphism(incl, &b.space)?))
}

pub fn observable_quotient(b: &AbstractBehavior) -> Result<(AbstractBehavior, RoofMorphism)> {
    let (q, proj) = observable_quotient_functor(&b.functor);
    Ok((b.with_functor(&q), RoofMorphism::from_morphism(proj, &b.space)?))
}

/// The verdict under the decisive backend: exact when the space carries
/// a duality, otherwise a positive answer or `Undetermined`.
fn decide(space: &SignalSpace, f: &FunctorMorphism, want_mono: bool) -> Result<Verdict> {
    let decisive = match space.backend {
        Backend::Finite if space.injective_cogenerator => space.with_backend(Backend::InjectiveCogenerator)?,
        Backend::Finite if space.flat => space.with_backend(Backend::Flat)?,
        _ => space.clone(),
    };
    let st = decisive.status(f)?;
    let ok = if want_mono { st.mono } else { st.epi };
    Ok(if ok || space.exact() {
        ok.into()
    } else {
        Verdict::Undetermined
    })
}

pub fn is_controllable(b: &AbstractBehavior) -> Result<Verdict> {
    let (_, incl) = controllable_part_functor(&b.functor);
    decide(&b.space, &incl, false)
}

pub fn is_observable(b: &AbstractBehavior) -> Result<Verdict> {
    decide(&b.space, &unit_hom(&b.functor), true)
}

/// An epimorphism from some `F^k` exists.
pub fn is_finitely_controllable(b: &AbstractBehavior) -> Result<Verdict> {
    if b.space.injective_cogenerator {
        return Ok(double_dual_map(&b.functor.contravariant_defect()).is_mono().into());
    }
    if b.space.flat {
        return Ok(Verdict::Holds);
    }
    is_controllable(b)
}

/// A monomorphism into some `F^k` exists.
pub fn is_finitely_observable(b: &AbstractBehavior) -> Result<Verdict> {
    if b.space.injective_cogenerator {
        return Ok(Verdict::Holds);
    }
    if b.space.flat {
        return Ok(double_dual_map(&b.functor.covariant_defect()).is_mono().into());
    }
    is_observable(b)
}
