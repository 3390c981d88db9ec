//! Descent diagrams of the fixed truncated shape, their cones, explicit
//! strict descent objects in Cat, comparison functors, and the
//! strict/effective-descent predicates.
//!
//! The indexing 2-category is never materialized (its free presentation has
//! infinitely many 1-cells); only diagrams of the fixed shape are: three
//! categories `A1 ⇉ A2 ⇶ A3` with the section `s0`, and five invertible
//! cells
//!
//! ```text
//! sigma01 : p1∘d0 ⇒ p0∘d0      n0 : s0∘d0 ⇒ Id
//! sigma02 : p2∘d0 ⇒ p0∘d1      n1 : Id ⇒ s0∘d1
//! sigma12 : p2∘d1 ⇒ p1∘d1
//! ```
//!
//! A descent datum over a diagram is a pair `(f, ρ)` with `f` an object of
//! `A1` and `ρ : d1(f) → d0(f)` an isomorphism of `A2` satisfying the
//! associativity and identity equations; the strict descent object is the
//! category of all such data.

mod object;
mod transport;

pub use object::{
    comparison, is_effective_descent, is_strict_descent, strict_descent_object, DescentObject,
};
pub use transport::{
    map_cone, map_diagram, ComponentsCollapse, HomFrom, IdentityTransport, ProductWith, TwoFunctor,
};

use crate::cap::Cap;
use crate::fincat::{
    validate_functor, validate_nattransf, CatRef, Functor, MorId, NatTransf, ObjId,
};
use crate::report::Report;
use crate::Result;

/// The data of a 2-functor from the truncated descent shape into Cat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentDiagram {
    pub a1: CatRef,
    pub a2: CatRef,
    pub a3: CatRef,
    pub d0: Functor,
    pub d1: Functor,
    pub s0: Functor,
    pub p0: Functor,
    pub p1: Functor,
    pub p2: Functor,
    pub sigma01: NatTransf,
    pub sigma02: NatTransf,
    pub sigma12: NatTransf,
    pub n0: NatTransf,
    pub n1: NatTransf,
}

impl DescentDiagram {
    /// The constant-identity diagram at a category: all functors identity,
    /// all cells identity.
    pub fn constant_identity(c: &CatRef) -> Self {
        let id = Functor::identity(c);
        let idc = NatTransf::identity(&id);
        DescentDiagram {
            a1: c.clone(),
            a2: c.clone(),
            a3: c.clone(),
            d0: id.clone(),
            d1: id.clone(),
            s0: id.clone(),
            p0: id.clone(),
            p1: id.clone(),
            p2: id,
            sigma01: idc.clone(),
            sigma02: idc.clone(),
            sigma12: idc.clone(),
            n0: idc.clone(),
            n1: idc,
        }
    }
}

/// A cone over a descent diagram: an apex, a leg into `A1`, and the
/// invertible gluing cell `theta : d1∘d ⇒ d0∘d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentCone {
    pub base: DescentDiagram,
    pub apex: CatRef,
    pub d: Functor,
    pub theta: NatTransf,
}

/// One descent datum: an object of `A1` with its gluing isomorphism
/// `rho : d1(f) → d0(f)` in `A2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DescentDatum {
    pub f: ObjId,
    pub rho: MorId,
}

/// Check the two datum equations for `(f, rho)` over a diagram.
///
/// Associativity: `p0(ρ) ∘ σ02_f ∘ p2(ρ) ∘ σ12⁻¹_f = σ01_f ∘ p1(ρ)`;
/// Identity: `n0_f ∘ s0(ρ) ∘ n1_f = id_f`.
pub fn datum_equations_hold(a: &DescentDiagram, f: ObjId, rho: MorId) -> bool {
    let a2 = &a.a2;
    let a3 = &a.a3;
    // Typing: rho : d1(f) → d0(f), invertible.
    if a2.src(rho) != a.d1.on_obj(f) || a2.dst(rho) != a.d0.on_obj(f) || !a2.is_iso(rho) {
        return false;
    }
    let s12_inv = match a3.inverse(a.sigma12.component(f)) {
        Some(m) => m,
        None => return false,
    };
    let lhs = a3
        .then(s12_inv, a.p2.on_mor(rho))
        .and_then(|m| a3.then(m, a.sigma02.component(f)))
        .and_then(|m| a3.then(m, a.p0.on_mor(rho)));
    let rhs = a3.then(a.p1.on_mor(rho), a.sigma01.component(f));
    if lhs.is_none() || lhs != rhs {
        return false;
    }
    let a1 = &a.a1;
    let ident = a1
        .then(a.n1.component(f), a.s0.on_mor(rho))
        .and_then(|m| a1.then(m, a.n0.component(f)));
    ident == Some(a1.identity(f))
}

/// Validate a descent diagram: constituents, typing of the six functors,
/// typing and invertibility of the five cells.
pub fn validate_descent_diagram(a: &DescentDiagram) -> Report {
    let mut report = Report::new("descent-diagram");
    for (name, f) in [
        ("d0", &a.d0),
        ("d1", &a.d1),
        ("s0", &a.s0),
        ("p0", &a.p0),
        ("p1", &a.p1),
        ("p2", &a.p2),
    ] {
        let r = validate_functor(f);
        if !r.is_clean() {
            report.push("functor", format!("{name}: {}", r.summary()));
        }
    }
    if !report.is_clean() {
        return report;
    }
    let typing = [
        ("d0", &a.d0, &a.a1, &a.a2),
        ("d1", &a.d1, &a.a1, &a.a2),
        ("s0", &a.s0, &a.a2, &a.a1),
        ("p0", &a.p0, &a.a2, &a.a3),
        ("p1", &a.p1, &a.a2, &a.a3),
        ("p2", &a.p2, &a.a2, &a.a3),
    ];
    for (name, f, dom, cod) in typing {
        if f.dom() != dom || f.cod() != cod {
            report.push("functor-typing", name);
        }
    }
    if !report.is_clean() {
        return report;
    }
    let id1 = Functor::identity(&a.a1);
    let cells = [
        ("sigma01", &a.sigma01, a.d0.then(&a.p1), a.d0.then(&a.p0)),
        ("sigma02", &a.sigma02, a.d0.then(&a.p2), a.d1.then(&a.p0)),
        ("sigma12", &a.sigma12, a.d1.then(&a.p2), a.d1.then(&a.p1)),
        ("n0", &a.n0, a.d0.then(&a.s0), id1.clone()),
        ("n1", &a.n1, id1, a.d1.then(&a.s0)),
    ];
    for (name, cell, src, dst) in cells {
        let r = validate_nattransf(cell);
        if !r.is_clean() {
            report.push("cell", format!("{name}: {}", r.summary()));
            continue;
        }
        if cell.src() != &src || cell.dst() != &dst {
            report.push("cell-typing", name);
        }
        if !cell.is_invertible() {
            report.push("cell-invertible", name);
        }
    }
    report
}

/// Validate a descent cone: typing, invertibility, and the two pasting
/// equations of the cone cell against the diagram cells.
pub fn validate_descent_cone(k: &DescentCone) -> Report {
    let mut report = Report::new("descent-cone");
    report.merge(validate_descent_diagram(&k.base));
    if !report.is_clean() {
        return report;
    }
    let r = validate_functor(&k.d);
    if !r.is_clean() {
        report.push("leg", r.summary());
        return report;
    }
    if k.d.dom() != &k.apex || k.d.cod() != &k.base.a1 {
        report.push("leg-typing", "d must map apex into A1");
        return report;
    }
    let rt = validate_nattransf(&k.theta);
    if !rt.is_clean() {
        report.push("theta", rt.summary());
        return report;
    }
    if k.theta.src() != &k.d.then(&k.base.d1) || k.theta.dst() != &k.d.then(&k.base.d0) {
        report.push("theta-typing", "theta must be d1∘d ⇒ d0∘d");
        return report;
    }
    if !k.theta.is_invertible() {
        report.push("theta-invertible", "theta must be componentwise invertible");
        return report;
    }

    let a = &k.base;
    // Associativity pasting, as an equation of transformations apex → A3:
    //   (p0 ∗ θ) · (σ02 ∗ d) · (p2 ∗ θ) · (σ12⁻¹ ∗ d)  =  (σ01 ∗ d) · (p1 ∗ θ)
    let s12_inv = a.sigma12.inverse().expect("validated invertible");
    let lhs = s12_inv
        .whisker_right(&k.d)
        .then(&k.theta.whisker_left(&a.p2))
        .then(&a.sigma02.whisker_right(&k.d))
        .then(&k.theta.whisker_left(&a.p0));
    let rhs = k
        .theta
        .whisker_left(&a.p1)
        .then(&a.sigma01.whisker_right(&k.d));
    if lhs.components() != rhs.components() {
        report.push("associativity-pasting", "cone fails the associativity equation");
    }
    // Identity pasting: (n0 ∗ d) · (s0 ∗ θ) · (n1 ∗ d) = id_d.
    let composite = a
        .n1
        .whisker_right(&k.d)
        .then(&k.theta.whisker_left(&a.s0))
        .then(&a.n0.whisker_right(&k.d));
    if !composite.is_identity_transf() {
        report.push("identity-pasting", "cone fails the identity equation");
    }
    report
}

/// The pointwise reading of the cone equations: every object of the apex
/// carries a valid descent datum. Equivalent to the pasting equations; both
/// are computed so the equivalence stays checkable on any corpus.
pub fn cone_data_pointwise_ok(k: &DescentCone) -> bool {
    k.apex
        .objects()
        .all(|x| datum_equations_hold(&k.base, k.d.on_obj(x), k.theta.component(x)))
}

/// Run `is_effective_descent` over the images of a cone under each probe
/// transport; returns per-probe verdicts in input order.
pub fn absolute_probe(
    k: &DescentCone,
    probes: &[(String, Box<dyn TwoFunctor>)],
    cap: Cap,
) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::with_capacity(probes.len());
    for (name, t) in probes {
        let moved = map_cone(t.as_ref(), k)?;
        let verdict = is_effective_descent(&moved, cap)?;
        out.push((name.clone(), verdict));
    }
    Ok(out)
}

/// The fixed default probe family standing in for "any pseudofunctor".
pub fn default_probe_family() -> Vec<(String, Box<dyn TwoFunctor>)> {
    probe_family_by_names(&[
        "id".to_string(),
        "hom1".to_string(),
        "hom2".to_string(),
        "prod2".to_string(),
        "prodI".to_string(),
    ])
    .expect("default names are known")
}

/// Probe family selected by names (the CLI flag `--probes`).
pub fn probe_family_by_names(names: &[String]) -> Result<Vec<(String, Box<dyn TwoFunctor>)>> {
    let mut out = Vec::new();
    for n in names {
        let t: Box<dyn TwoFunctor> = match n.as_str() {
            "id" => Box::new(IdentityTransport),
            "hom1" => Box::new(HomFrom::new(crate::corpus::terminal().shared())),
            "hom2" => Box::new(HomFrom::new(crate::corpus::walking_arrow().shared())),
            "prod2" => Box::new(ProductWith::new(crate::corpus::walking_arrow().shared())),
            "prodI" => Box::new(ProductWith::new(crate::corpus::walking_iso().shared())),
            other => return Err(crate::Error::Precondition(format!("unknown probe '{other}'"))),
        };
        out.push((n.clone(), t));
    }
    Ok(out)
}

/// Check a candidate cone through hom-transports: for each test category
/// `X`, the `Cat(X, −)`-image of the cone must be of effective descent.
pub fn universal_property_probe(
    candidate: &DescentCone,
    tests: &[CatRef],
    cap: Cap,
) -> Result<bool> {
    for x in tests {
        let t = HomFrom::new(x.clone());
        let moved = map_cone(&t, candidate)?;
        if !is_effective_descent(&moved, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fincat::{MorId, ObjId};

    #[test]
    fn constant_identity_diagram_validates() {
        let c = corpus::walking_arrow().shared();
        let a = DescentDiagram::constant_identity(&c);
        assert!(validate_descent_diagram(&a).is_clean());
    }

    #[test]
    fn datum_typing_and_identity_equation() {
        let c = corpus::walking_iso().shared();
        let a = DescentDiagram::constant_identity(&c);
        // rho = u: 0→1 is mistyped for the constant-identity diagram.
        assert!(!datum_equations_hold(&a, ObjId(0), MorId(2)));
        // The identity datum passes.
        assert!(datum_equations_hold(&a, ObjId(0), MorId(0)));
    }
}
