//! Strict coalgebras and pseudocoalgebras of a 2-comonad, their morphisms
//! and 2-cells, and the canonical constructions around them.
//!
//! Only strict comonads are executable here, so the "hatted" corrections of
//! the general definitions collapse: `T` applied to a composite equals the
//! composite of images on the nose, which the builders assert as they go.
//!
//! Direction conventions, fixed once:
//! * `sigma : Id_Z ⇒ ε_Z∘rho` (invertible),
//! * `omega : ϖ_Z∘rho ⇒ T(rho)∘rho` (invertible),
//! * `rho_f : T(f)∘rho_x ⇒ rho_z∘f` (invertible) — the inverse of this cell
//!   is what descent data store.

mod hom;

pub use hom::{
    hom_categories_isomorphic, hom_category_direct, hom_via_descent, strict_hom_category,
    t_diagram, HomCategory,
};

use crate::cap::Cap;
use crate::comonad::TwoComonad;
use crate::fincat::{
    all_nat_transfs, validate_functor, validate_nattransf, CatRef, Functor, NatTransf,
};
use crate::report::Report;
use crate::{Error, Result};
use std::sync::Arc;

pub type ComonadRef = Arc<dyn TwoComonad>;

/// A pseudocoalgebra `(Z, rho, sigma, omega)` over a comonad.
#[derive(Clone)]
pub struct PseudoCoalgebra {
    pub comonad: ComonadRef,
    pub carrier: CatRef,
    pub rho: Functor,
    pub sigma: NatTransf,
    pub omega: NatTransf,
}

impl std::fmt::Debug for PseudoCoalgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PseudoCoalgebra")
            .field("comonad", &self.comonad.name())
            .field("carrier_objects", &self.carrier.object_count())
            .field("rho", &self.rho.obj_map())
            .finish()
    }
}

impl PseudoCoalgebra {
    /// Structural comparison of the coalgebra data (assumes a shared
    /// comonad, compared by name).
    pub fn same_data(&self, other: &PseudoCoalgebra) -> bool {
        self.comonad.name() == other.comonad.name()
            && self.carrier == other.carrier
            && self.rho == other.rho
            && self.sigma == other.sigma
            && self.omega == other.omega
    }
}

/// A strict coalgebra: the two laws hold on the nose.
#[derive(Clone)]
pub struct StrictCoalgebra {
    pub comonad: ComonadRef,
    pub carrier: CatRef,
    pub rho: Functor,
}

impl std::fmt::Debug for StrictCoalgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StrictCoalgebra")
            .field("comonad", &self.comonad.name())
            .field("carrier_objects", &self.carrier.object_count())
            .field("rho", &self.rho.obj_map())
            .finish()
    }
}

/// A pseudomorphism of pseudocoalgebras.
#[derive(Debug, Clone)]
pub struct PseudoMorphism {
    pub src: PseudoCoalgebra,
    pub dst: PseudoCoalgebra,
    pub f: Functor,
    /// `T(f)∘rho_src ⇒ rho_dst∘f`, invertible.
    pub rho_f: NatTransf,
}

impl PseudoMorphism {
    pub fn identity(z: &PseudoCoalgebra) -> Result<Self> {
        let f = Functor::identity(&z.carrier);
        let tf = z.comonad.on_functor(&f)?;
        let src = z.rho.then(&tf);
        let dst = f.then(&z.rho);
        if src != dst {
            return Err(Error::Precondition("identity pseudomorphism ill-typed".into()));
        }
        Ok(PseudoMorphism {
            src: z.clone(),
            dst: z.clone(),
            f,
            rho_f: NatTransf::identity(&src).retyped(src.clone(), dst),
        })
    }

    pub fn same_data(&self, other: &PseudoMorphism) -> bool {
        self.f == other.f && self.rho_f == other.rho_f
    }
}

/// A 2-cell between parallel pseudomorphisms: an underlying natural
/// transformation satisfying the compatibility equation.
#[derive(Debug, Clone)]
pub struct TTransformation {
    pub src: PseudoMorphism,
    pub dst: PseudoMorphism,
    pub m: NatTransf,
}

/// Audit the two pseudocoalgebra pasting equations (with the comonad's Λ
/// and δ cells, identities for strict instances).
pub fn validate_pseudocoalgebra(z: &PseudoCoalgebra) -> Report {
    let mut report = Report::new("pseudocoalgebra");
    let t = z.comonad.as_ref();
    report.merge(validate_functor(&z.rho));
    report.merge(validate_nattransf(&z.sigma));
    report.merge(validate_nattransf(&z.omega));
    if !report.is_clean() {
        return report;
    }
    let tz = match t.on_cat(&z.carrier) {
        Ok(c) => c,
        Err(e) => {
            report.push("carrier", format!("{e}"));
            return report;
        }
    };
    if z.rho.dom() != &z.carrier || z.rho.cod() != &tz {
        report.push("rho-typing", "rho must map Z into T Z");
        return report;
    }
    let pieces = (t.counit(&z.carrier), t.comult(&z.carrier), t.on_functor(&z.rho));
    let (eps, w, t_rho) = match pieces {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => {
            report.push("provider", "comonad provider failed");
            return report;
        }
    };
    // sigma : Id ⇒ ε∘rho
    if z.sigma.src() != &Functor::identity(&z.carrier) || z.sigma.dst() != &z.rho.then(&eps) {
        report.push("sigma-typing", "sigma must be Id ⇒ ε∘rho");
    }
    if !z.sigma.is_invertible() {
        report.push("sigma-invertible", "sigma must be invertible");
    }
    // omega : ϖ∘rho ⇒ T(rho)∘rho
    if z.omega.src() != &z.rho.then(&w) || z.omega.dst() != &z.rho.then(&t_rho) {
        report.push("omega-typing", "omega must be ϖ∘rho ⇒ T(rho)∘rho");
    }
    if !z.omega.is_invertible() {
        report.push("omega-invertible", "omega must be invertible");
    }
    if !report.is_clean() {
        return report;
    }

    let (lam, del) = match (t.lambda(&z.carrier), t.delta(&z.carrier)) {
        (Ok(l), Ok(d)) => (l, d),
        _ => {
            report.push("provider", "comonad modifications unavailable");
            return report;
        }
    };
    let t_omega = match t.on_nat(&z.omega) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let t_w_z = match t.on_functor(&w) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let t2_rho = match t.on_functor(&t_rho) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let w_tz = match t.comult(&tz) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };

    // Associativity pasting:
    //  (TΩ ∗ ρ) · (TϖZ ∗ Ω) · (Λ_Z ∗ ρ)  =  (T²ρ ∗ Ω) · [ϖ nat at ρ] · (ϖ_{TZ} ∗ Ω)
    let strict_nat = z.rho.then(&w).then(&t2_rho) == z.rho.then(&t_rho).then(&w_tz);
    if !strict_nat {
        report.push("comult-naturality", "ϖ not strictly natural at rho");
        return report;
    }
    let lhs = lam
        .whisker_right(&z.rho)
        .then(&z.omega.whisker_left(&t_w_z))
        .then(&t_omega.whisker_right(&z.rho));
    let rhs = z
        .omega
        .whisker_left(&w_tz)
        .then(&z.omega.whisker_left(&t2_rho));
    if lhs.components() != rhs.components() {
        report.push("associativity-equation", "Ω fails the Λ-compatibility pasting");
    }

    // Identity pasting: (Tε_Z ∗ Ω) · (δ_Z ∗ ρ) = T(ς) ∗ ρ.
    let t_eps = match t.on_functor(&eps) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let t_sigma = match t.on_nat(&z.sigma) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let lhs = del
        .whisker_right(&z.rho)
        .then(&z.omega.whisker_left(&t_eps));
    let rhs = t_sigma.whisker_right(&z.rho);
    if lhs.components() != rhs.components() {
        report.push("identity-equation", "Ω/ς fail the δ-compatibility pasting");
    }
    report
}

/// Audit the strict coalgebra laws on the nose.
pub fn validate_strict_coalgebra(a: &StrictCoalgebra) -> Report {
    let mut report = Report::new("strict-coalgebra");
    let t = a.comonad.as_ref();
    report.merge(validate_functor(&a.rho));
    if !report.is_clean() {
        return report;
    }
    let pieces = (
        t.on_cat(&a.carrier),
        t.counit(&a.carrier),
        t.comult(&a.carrier),
        t.on_functor(&a.rho),
    );
    let (tz, eps, w, t_rho) = match pieces {
        (Ok(a), Ok(b), Ok(c), Ok(d)) => (a, b, c, d),
        _ => {
            report.push("provider", "comonad provider failed");
            return report;
        }
    };
    if a.rho.dom() != &a.carrier || a.rho.cod() != &tz {
        report.push("rho-typing", "rho must map Z into T Z");
        return report;
    }
    if a.rho.then(&eps) != Functor::identity(&a.carrier) {
        report.push("counit-law", "ε∘rho ≠ Id");
    }
    if a.rho.then(&w) != a.rho.then(&t_rho) {
        report.push("comult-law", "ϖ∘rho ≠ T(rho)∘rho");
    }
    report
}

/// Audit a pseudomorphism: typing, invertibility, the Ω-compatibility
/// pasting, and the counit condition.
pub fn validate_pseudomorphism(pm: &PseudoMorphism) -> Report {
    let mut report = Report::new("pseudomorphism");
    let t = pm.src.comonad.as_ref();
    report.merge(validate_functor(&pm.f));
    report.merge(validate_nattransf(&pm.rho_f));
    if !report.is_clean() {
        return report;
    }
    if pm.f.dom() != &pm.src.carrier || pm.f.cod() != &pm.dst.carrier {
        report.push("typing", "underlying functor endpoints");
        return report;
    }
    let (tf, eps_x, eps_z, w_x, w_z) = match (
        t.on_functor(&pm.f),
        t.counit(&pm.src.carrier),
        t.counit(&pm.dst.carrier),
        t.comult(&pm.src.carrier),
        t.comult(&pm.dst.carrier),
    ) {
        (Ok(a), Ok(b), Ok(c), Ok(d), Ok(e)) => (a, b, c, d, e),
        _ => {
            report.push("provider", "comonad provider failed");
            return report;
        }
    };
    let src = pm.src.rho.then(&tf);
    let dst = pm.f.then(&pm.dst.rho);
    if pm.rho_f.src() != &src || pm.rho_f.dst() != &dst {
        report.push("cell-typing", "rho_f must be T(f)∘rho_x ⇒ rho_z∘f");
        return report;
    }
    if !pm.rho_f.is_invertible() {
        report.push("cell-invertible", "rho_f must be invertible");
        return report;
    }
    let rho_f_inv = pm.rho_f.inverse().expect("checked invertible");

    // Ω-compatibility:
    // (T(ρ_f⁻¹) ∗ ρ_x) · (T(ρ_z) ∗ ρ_f⁻¹) · (Ω_z ∗ f)
    //   = (T²f ∗ Ω_x) · [ϖ nat at f] · (ϖ_Z ∗ ρ_f⁻¹)
    let (t_rho_z, t2f, t_cell_inv) = match (
        t.on_functor(&pm.dst.rho),
        t.on_functor(&tf),
        t.on_nat(&rho_f_inv),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => {
            report.push("provider", "comonad provider failed on cells");
            return report;
        }
    };
    let strict_nat = tf.then(&w_z) == w_x.then(&t2f);
    if !strict_nat {
        report.push("comult-naturality", "ϖ not strictly natural at f");
        return report;
    }
    let lhs = pm
        .dst
        .omega
        .whisker_right(&pm.f)
        .then(&rho_f_inv.whisker_left(&t_rho_z))
        .then(&t_cell_inv.whisker_right(&pm.src.rho));
    let rhs = rho_f_inv
        .whisker_left(&w_z)
        .then(&pm.src.omega.whisker_left(&t2f));
    if lhs.components() != rhs.components() {
        report.push("omega-compat", "rho_f fails the Ω-compatibility pasting");
    }

    // Counit condition: (ς_z⁻¹ ∗ f) · (ε_Z ∗ ρ_f) · (f ∗ ς_x) = id_f,
    // using strict ε-naturality f∘ε_X = ε_Z∘T(f).
    let strict_eps = eps_x.then(&pm.f) == tf.then(&eps_z);
    if !strict_eps {
        report.push("counit-naturality", "ε not strictly natural at f");
        return report;
    }
    let sigma_z_inv = match pm.dst.sigma.inverse() {
        Some(s) => s,
        None => {
            report.push("sigma-invertible", "target sigma not invertible");
            return report;
        }
    };
    let composite = pm
        .src
        .sigma
        .whisker_left(&pm.f)
        .then(&pm.rho_f.whisker_left(&eps_z))
        .then(&sigma_z_inv.whisker_right(&pm.f));
    if !composite.is_identity_transf() {
        report.push("counit-condition", "the counit pasting is not the identity");
    }
    report
}

/// Audit a T-transformation: naturality of the underlying cell plus the
/// compatibility equation `(ρ_z ∗ m) · ρ_f = ρ_h · (T(m) ∗ ρ_x)`.
pub fn validate_ttransformation(c: &TTransformation) -> Report {
    let mut report = Report::new("t-transformation");
    report.merge(validate_nattransf(&c.m));
    if !report.is_clean() {
        return report;
    }
    if c.m.src() != &c.src.f || c.m.dst() != &c.dst.f {
        report.push("typing", "underlying cell must run between the underlying functors");
        return report;
    }
    let t = c.src.src.comonad.as_ref();
    let tm = match t.on_nat(&c.m) {
        Ok(x) => x,
        Err(e) => {
            report.push("provider", format!("{e}"));
            return report;
        }
    };
    let lhs = c.src.rho_f.then(&c.m.whisker_left(&c.src.dst.rho));
    let rhs = tm.whisker_right(&c.src.src.rho).then(&c.dst.rho_f);
    if lhs.components() != rhs.components() {
        report.push("compatibility", "cell fails the T-transformation equation");
    }
    report
}

/// The cofree coalgebra on a category: carrier `T Z`, coaction `ϖ_Z`.
/// Strict whenever the comonad is.
pub fn cofree(t: &ComonadRef, z: &CatRef) -> Result<StrictCoalgebra> {
    Ok(StrictCoalgebra { comonad: t.clone(), carrier: t.on_cat(z)?, rho: t.comult(z)? })
}

/// The inclusion of strict coalgebras into pseudocoalgebras: identity
/// `sigma` and `omega`.
pub fn inclusion_j(a: &StrictCoalgebra) -> Result<PseudoCoalgebra> {
    let t = a.comonad.as_ref();
    let eps = t.counit(&a.carrier)?;
    let w = t.comult(&a.carrier)?;
    let t_rho = t.on_functor(&a.rho)?;
    let id = Functor::identity(&a.carrier);
    let eps_rho = a.rho.then(&eps);
    let w_rho = a.rho.then(&w);
    let trho_rho = a.rho.then(&t_rho);
    if eps_rho != id || w_rho != trho_rho {
        return Err(Error::Precondition("not a strict coalgebra".into()));
    }
    Ok(PseudoCoalgebra {
        comonad: a.comonad.clone(),
        carrier: a.carrier.clone(),
        rho: a.rho.clone(),
        sigma: NatTransf::identity(&id).retyped(id, eps_rho),
        omega: NatTransf::identity(&w_rho).retyped(w_rho, trho_rho),
    })
}

/// The forgetful functor on objects: the underlying category.
pub fn forgetful_l(z: &PseudoCoalgebra) -> CatRef {
    z.carrier.clone()
}

/// The unit pseudomorphism `z → J(cofree(T, Z))`: carried by `rho_z` with
/// cell `Ω_z⁻¹`.
pub fn unit_eta(z: &PseudoCoalgebra) -> Result<PseudoMorphism> {
    let cof = inclusion_j(&cofree(&z.comonad, &z.carrier)?)?;
    let omega_inv = z
        .omega
        .inverse()
        .ok_or_else(|| Error::Precondition("omega not invertible".into()))?;
    let pm = PseudoMorphism { src: z.clone(), dst: cof, f: z.rho.clone(), rho_f: omega_inv };
    let report = validate_pseudomorphism(&pm);
    if !report.is_clean() {
        return Err(Error::invalid(&report));
    }
    Ok(pm)
}

/// Composition of pseudomorphisms over a strict comonad: underlying
/// composition with the pasted cell.
pub fn compose_pseudomorphisms(f: &PseudoMorphism, g: &PseudoMorphism) -> Result<PseudoMorphism> {
    if !f.dst.same_data(&g.src) {
        return Err(Error::Precondition("pseudomorphisms not composable".into()));
    }
    let t = f.src.comonad.as_ref();
    let tg = t.on_functor(&g.f)?;
    let cell = f
        .rho_f
        .whisker_left(&tg)
        .then(&g.rho_f.whisker_right(&f.f));
    Ok(PseudoMorphism {
        src: f.src.clone(),
        dst: g.dst.clone(),
        f: f.f.then(&g.f),
        rho_f: cell,
    })
}

/// Exhaustive internal-equivalence search: a quasi-inverse pseudomorphism
/// with invertible T-transformations to the identities on both sides.
pub fn is_internal_equivalence(f: &PseudoMorphism, cap: Cap) -> Result<bool> {
    let back = hom_category_direct(&f.dst, &f.src, cap)?;
    for g in &back.objects {
        let gf = compose_pseudomorphisms(f, g)?;
        let fg = compose_pseudomorphisms(g, f)?;
        let id_src = PseudoMorphism::identity(&f.src)?;
        let id_dst = PseudoMorphism::identity(&f.dst)?;
        if invertible_cell_exists(&gf, &id_src, cap)? && invertible_cell_exists(&fg, &id_dst, cap)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn invertible_cell_exists(a: &PseudoMorphism, b: &PseudoMorphism, cap: Cap) -> Result<bool> {
    for m in all_nat_transfs(&a.f, &b.f, cap)? {
        if !m.is_invertible() {
            continue;
        }
        let cell = TTransformation { src: a.clone(), dst: b.clone(), m };
        if validate_ttransformation(&cell).is_clean() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The two canonical comparison targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmInstance {
    /// `E ⊣ R` between strict coalgebras and the base.
    StrictEm,
    /// `L ⊣ U` between pseudocoalgebras and the base.
    PseudoEm,
}

/// The comparison on objects for the two canonical biadjunction instances.
///
/// For the strict instance this is `J` of the strict coalgebra (identity
/// cells); for the pseudo instance the comparison rebuilds the coalgebra
/// from its own unit data, which returns it unchanged.
pub fn comparison_k_strict(y: &StrictCoalgebra) -> Result<PseudoCoalgebra> {
    inclusion_j(y)
}

pub fn comparison_k_pseudo(z: &PseudoCoalgebra) -> Result<PseudoCoalgebra> {
    // K(z) = (LZ, L(η_z), s_z, Ω-cell of η_z): carried by (Z, ρ_z, ς_z, Ω_z).
    let eta = unit_eta(z)?;
    let omega = eta
        .rho_f
        .inverse()
        .ok_or_else(|| Error::Precondition("unit cell not invertible".into()))?;
    Ok(PseudoCoalgebra {
        comonad: z.comonad.clone(),
        carrier: z.carrier.clone(),
        rho: eta.f,
        sigma: z.sigma.clone(),
        omega,
    })
}

/// `K∘R = U` on objects: the comparison applied to the cofree strict
/// coalgebra must equal the cofree pseudocoalgebra.
pub fn k_after_r_equals_u(t: &ComonadRef, z: &CatRef) -> Result<bool> {
    let r = cofree(t, z)?;
    let kr = comparison_k_strict(&r)?;
    let u = inclusion_j(&cofree(t, z)?)?;
    Ok(kr.same_data(&u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comonad::{IdentityComonad, ProductComonad};
    use crate::corpus;
    use crate::fincat::ObjId;
    use crate::fincat::{pair_into_product, Functor};

    pub(crate) fn identity_comonad() -> ComonadRef {
        Arc::new(IdentityComonad)
    }

    pub(crate) fn product_comonad(d: CatRef) -> ComonadRef {
        Arc::new(ProductComonad::new(d))
    }

    /// Strict coalgebra for a product comonad: rho = ⟨Id, g⟩ for any
    /// functor g: Z → D.
    pub(crate) fn product_strict(t: &ComonadRef, z: &CatRef, g: &Functor) -> StrictCoalgebra {
        let tz = t.on_cat(z).unwrap();
        let rho = pair_into_product(&Functor::identity(z), g, &tz);
        StrictCoalgebra { comonad: t.clone(), carrier: z.clone(), rho }
    }

    #[test]
    fn cofree_is_strict_and_validates() {
        let two = corpus::walking_arrow().shared();
        for t in [identity_comonad(), product_comonad(corpus::walking_arrow().shared())] {
            let c = cofree(&t, &two).unwrap();
            assert!(validate_strict_coalgebra(&c).is_clean());
            let j = inclusion_j(&c).unwrap();
            assert!(validate_pseudocoalgebra(&j).is_clean(), "{}", validate_pseudocoalgebra(&j));
        }
    }

    #[test]
    fn product_strict_coalgebras_validate() {
        let two = corpus::walking_arrow().shared();
        let t = product_comonad(two.clone());
        // Any functor g: Z→2 packaged as ⟨Id, g⟩ passes both strict laws.
        for g in crate::fincat::all_functors(&two, &two, Cap::default()).unwrap() {
            let a = product_strict(&t, &two, &g);
            assert!(validate_strict_coalgebra(&a).is_clean());
        }
    }

    #[test]
    fn mutated_omega_is_named() {
        // Over the identity comonad on B(Z/2) the nontrivial natural
        // automorphism of Id typechecks as omega but breaks the
        // δ-compatibility pasting, which the validator names.
        let g = corpus::group_z2().shared();
        let t = identity_comonad();
        let z = inclusion_j(&cofree(&t, &g).unwrap()).unwrap();
        assert!(validate_pseudocoalgebra(&z).is_clean());
        let id = Functor::identity(&g);
        let twist = NatTransf::new(id.clone(), id, vec![crate::fincat::MorId(1)]);
        let bad = PseudoCoalgebra { omega: twist, ..z };
        let report = validate_pseudocoalgebra(&bad);
        assert!(
            report.violations.iter().any(|v| v.rule == "identity-equation"),
            "{report}"
        );
    }

    #[test]
    fn unit_eta_validates_for_cofree() {
        let two = corpus::walking_arrow().shared();
        for t in [identity_comonad(), product_comonad(corpus::walking_iso().shared())] {
            let z = inclusion_j(&cofree(&t, &two).unwrap()).unwrap();
            let eta = unit_eta(&z).unwrap();
            assert!(validate_pseudomorphism(&eta).is_clean());
        }
    }

    #[test]
    fn forgetful_after_j_is_identity_on_carriers() {
        let two = corpus::walking_arrow().shared();
        let t = identity_comonad();
        let a = cofree(&t, &two).unwrap();
        let j = inclusion_j(&a).unwrap();
        assert_eq!(forgetful_l(&j), a.carrier);
    }

    #[test]
    fn k_after_r_is_u() {
        let two = corpus::walking_arrow().shared();
        for t in [identity_comonad(), product_comonad(corpus::walking_arrow().shared())] {
            assert!(k_after_r_equals_u(&t, &two).unwrap());
        }
    }

    #[test]
    fn identity_pseudomorphism_is_internal_equivalence() {
        let two = corpus::walking_arrow().shared();
        let t = identity_comonad();
        let z = inclusion_j(&cofree(&t, &two).unwrap()).unwrap();
        let id = PseudoMorphism::identity(&z).unwrap();
        assert!(is_internal_equivalence(&id, Cap::default()).unwrap());
    }

    #[test]
    fn unit_of_cofree_over_identity_comonad_is_equivalence() {
        let two = corpus::walking_arrow().shared();
        let t = identity_comonad();
        let z = inclusion_j(&cofree(&t, &two).unwrap()).unwrap();
        let eta = unit_eta(&z).unwrap();
        assert!(is_internal_equivalence(&eta, Cap::default()).unwrap());
    }

    #[test]
    fn collapse_pseudomorphism_is_not_internal_equivalence() {
        // Underlying functor 2 → 1 is not an equivalence; the pseudomorphism
        // over the identity comonad can't be one either.
        let two = corpus::walking_arrow().shared();
        let one = corpus::terminal().shared();
        let t = identity_comonad();
        let zx = inclusion_j(&cofree(&t, &two).unwrap()).unwrap();
        let zz = inclusion_j(&cofree(&t, &one).unwrap()).unwrap();
        let f = Functor::constant(&two, &one, ObjId(0));
        let cell_src = zx.rho.then(&t.on_functor(&f).unwrap());
        let cell_dst = f.then(&zz.rho);
        assert_eq!(cell_src, cell_dst);
        let pm = PseudoMorphism {
            src: zx,
            dst: zz,
            f,
            rho_f: NatTransf::identity(&cell_src).retyped(cell_src.clone(), cell_dst),
        };
        assert!(validate_pseudomorphism(&pm).is_clean());
        assert!(!is_internal_equivalence(&pm, Cap::default()).unwrap());
    }
}
