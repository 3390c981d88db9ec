//! Strict 2-endofunctors of finite Cat as pluggable providers, and their
//! action on descent diagrams and cones.
//!
//! A provider must be functorial on categories, functors, and natural
//! transformations and strictly 2-natural in the evident sense; the comonad
//! auditor checks those laws on supplied test sets. `ComponentsCollapse`
//! (π₀) is deliberately limit-hostile: it is the stock counterexample
//! carrier for preservation tests.

use super::{DescentCone, DescentDiagram};
use crate::cap::Cap;
use crate::fincat::{
    functor_category, product_category, CatRef, FiniteCategory, Functor, MorId, NatTransf,
    ObjId,
};
use crate::{Error, Result};

/// A strict 2-endofunctor of finite Cat, given by its action on the three
/// levels of data. Implementations must be pure: equal inputs, equal
/// outputs.
pub trait TwoFunctor {
    fn on_cat(&self, c: &CatRef) -> Result<CatRef>;
    fn on_functor(&self, f: &Functor) -> Result<Functor>;
    fn on_nat(&self, a: &NatTransf) -> Result<NatTransf>;
}

/// The identity transport.
#[derive(Debug, Clone, Copy)]
pub struct IdentityTransport;

impl TwoFunctor for IdentityTransport {
    fn on_cat(&self, c: &CatRef) -> Result<CatRef> {
        Ok(c.clone())
    }
    fn on_functor(&self, f: &Functor) -> Result<Functor> {
        Ok(f.clone())
    }
    fn on_nat(&self, a: &NatTransf) -> Result<NatTransf> {
        Ok(a.clone())
    }
}

/// `(−) × D` for a fixed finite category `D`.
#[derive(Debug, Clone)]
pub struct ProductWith {
    pub factor: CatRef,
}

impl ProductWith {
    pub fn new(factor: CatRef) -> Self {
        ProductWith { factor }
    }
}

impl TwoFunctor for ProductWith {
    fn on_cat(&self, c: &CatRef) -> Result<CatRef> {
        Ok(product_category(c, &self.factor).shared())
    }

    fn on_functor(&self, f: &Functor) -> Result<Functor> {
        let dom = self.on_cat(f.dom())?;
        let cod = self.on_cat(f.cod())?;
        let dn = self.factor.object_count();
        let dm = self.factor.morphism_count();
        let obj_map = dom
            .objects()
            .map(|o| ObjId(f.on_obj(ObjId(o.0 / dn)).0 * dn + o.0 % dn))
            .collect();
        let mor_map = dom
            .morphisms()
            .map(|m| MorId(f.on_mor(MorId(m.0 / dm)).0 * dm + m.0 % dm))
            .collect();
        Ok(Functor::new(dom, cod, obj_map, mor_map))
    }

    fn on_nat(&self, a: &NatTransf) -> Result<NatTransf> {
        let src = self.on_functor(a.src())?;
        let dst = self.on_functor(a.dst())?;
        let dn = self.factor.object_count();
        let dm = self.factor.morphism_count();
        let components = src
            .dom()
            .objects()
            .map(|o| {
                let c = a.component(ObjId(o.0 / dn));
                let d_id = self.factor.identity(ObjId(o.0 % dn));
                MorId(c.0 * dm + d_id.0)
            })
            .collect();
        Ok(NatTransf::new(src, dst, components))
    }
}

/// The hom 2-functor `Cat(X, −)` for a fixed finite category `X`.
///
/// Functor categories are rebuilt (deterministically) on every call; the
/// index lookup goes through the enumeration tables.
pub struct HomFrom {
    pub source: CatRef,
    pub cap: Cap,
}

impl HomFrom {
    pub fn new(source: CatRef) -> Self {
        HomFrom { source, cap: Cap::default() }
    }

    fn fun_cat(&self, c: &CatRef) -> Result<crate::fincat::FunctorCategory> {
        functor_category(&self.source, c, self.cap)
    }
}

impl TwoFunctor for HomFrom {
    fn on_cat(&self, c: &CatRef) -> Result<CatRef> {
        Ok(self.fun_cat(c)?.cat)
    }

    fn on_functor(&self, f: &Functor) -> Result<Functor> {
        let dom_fc = self.fun_cat(f.dom())?;
        let cod_fc = self.fun_cat(f.cod())?;
        let mut obj_map = Vec::with_capacity(dom_fc.objects.len());
        for h in &dom_fc.objects {
            let image = h.then(f);
            let o = cod_fc.object_of(&image).ok_or_else(|| {
                Error::Precondition("hom transport: postcomposite functor not enumerated".into())
            })?;
            obj_map.push(o);
        }
        let mut mor_map = Vec::with_capacity(dom_fc.morphisms.len());
        for a in &dom_fc.morphisms {
            let image = a.whisker_left(f);
            let m = cod_fc.morphism_of(&image).ok_or_else(|| {
                Error::Precondition("hom transport: whiskered transformation not enumerated".into())
            })?;
            mor_map.push(m);
        }
        Ok(Functor::new(dom_fc.cat, cod_fc.cat, obj_map, mor_map))
    }

    fn on_nat(&self, a: &NatTransf) -> Result<NatTransf> {
        let src = self.on_functor(a.src())?;
        let dst = self.on_functor(a.dst())?;
        let dom_fc = self.fun_cat(a.src().dom())?;
        let cod_fc = self.fun_cat(a.src().cod())?;
        // Component at H : X → C is the whiskering a ∗ H, a morphism of
        // Cat(X, C').
        let mut components = Vec::with_capacity(dom_fc.objects.len());
        for h in &dom_fc.objects {
            let cell = a.whisker_right(h);
            let m = cod_fc.morphism_of(&cell).ok_or_else(|| {
                Error::Precondition("hom transport: component not enumerated".into())
            })?;
            components.push(m);
        }
        Ok(NatTransf::new(src, dst, components))
    }
}

/// Connected-components collapse π₀: a lawful strict 2-functor on finite
/// Cat (2-cells collapse to identities because a transformation connects
/// `F(x)` to `G(x)`), but one that destroys limits. Not a comonad carrier —
/// there is no counit — so it only serves as a preservation counterexample.
pub struct ComponentsCollapse;

impl ComponentsCollapse {
    /// Component index of each object (union-find over morphisms, then
    /// renumbered in first-seen object order).
    fn components_of(c: &FiniteCategory) -> Vec<usize> {
        let n = c.object_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for m in c.morphisms() {
            let a = find(&mut parent, c.src(m).0);
            let b = find(&mut parent, c.dst(m).0);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[i] = label[r];
        }
        out
    }

    fn component_count(c: &FiniteCategory) -> usize {
        Self::components_of(c).iter().copied().max().map_or(0, |m| m + 1)
    }
}

impl TwoFunctor for ComponentsCollapse {
    fn on_cat(&self, c: &CatRef) -> Result<CatRef> {
        Ok(crate::corpus::discrete(Self::component_count(c)).shared())
    }

    fn on_functor(&self, f: &Functor) -> Result<Functor> {
        let dom = self.on_cat(f.dom())?;
        let cod = self.on_cat(f.cod())?;
        let dom_comp = Self::components_of(f.dom());
        let cod_comp = Self::components_of(f.cod());
        // Map component i to the component of any representative's image.
        let mut obj_map = vec![ObjId(0); dom.object_count()];
        for x in f.dom().objects() {
            obj_map[dom_comp[x.0]] = ObjId(cod_comp[f.on_obj(x).0]);
        }
        let mor_map = (0..dom.morphism_count())
            .map(|i| cod.identity(obj_map[i]))
            .collect();
        Ok(Functor::new(dom, cod, obj_map, mor_map))
    }

    fn on_nat(&self, a: &NatTransf) -> Result<NatTransf> {
        // F(x) and G(x) are connected by the component at x, so the images
        // agree and the collapsed transformation is the identity.
        let src = self.on_functor(a.src())?;
        Ok(NatTransf::identity(&src))
    }
}

/// Apply a transport to every constituent of a diagram.
pub fn map_diagram(t: &dyn TwoFunctor, a: &DescentDiagram) -> Result<DescentDiagram> {
    Ok(DescentDiagram {
        a1: t.on_cat(&a.a1)?,
        a2: t.on_cat(&a.a2)?,
        a3: t.on_cat(&a.a3)?,
        d0: t.on_functor(&a.d0)?,
        d1: t.on_functor(&a.d1)?,
        s0: t.on_functor(&a.s0)?,
        p0: t.on_functor(&a.p0)?,
        p1: t.on_functor(&a.p1)?,
        p2: t.on_functor(&a.p2)?,
        sigma01: t.on_nat(&a.sigma01)?,
        sigma02: t.on_nat(&a.sigma02)?,
        sigma12: t.on_nat(&a.sigma12)?,
        n0: t.on_nat(&a.n0)?,
        n1: t.on_nat(&a.n1)?,
    })
}

/// Apply a transport to every constituent of a cone; the output is
/// revalidated by the caller where it matters.
pub fn map_cone(t: &dyn TwoFunctor, k: &DescentCone) -> Result<DescentCone> {
    Ok(DescentCone {
        base: map_diagram(t, &k.base)?,
        apex: t.on_cat(&k.apex)?,
        d: t.on_functor(&k.d)?,
        theta: t.on_nat(&k.theta)?,
    })
}

/// A strict map of descent diagrams: one functor per level commuting with
/// all six structure functors and compatible with the five cells. Induces a
/// functor on descent objects.
#[derive(Debug, Clone)]
pub struct DiagramMap {
    pub phi1: Functor,
    pub phi2: Functor,
    pub phi3: Functor,
}

impl DiagramMap {
    /// Check strict commutation with the structure and cells of `a → b`.
    pub fn validates(&self, a: &DescentDiagram, b: &DescentDiagram) -> bool {
        let level_ok = self.phi1.dom() == &a.a1
            && self.phi1.cod() == &b.a1
            && self.phi2.dom() == &a.a2
            && self.phi2.cod() == &b.a2
            && self.phi3.dom() == &a.a3
            && self.phi3.cod() == &b.a3;
        if !level_ok {
            return false;
        }
        let functors_ok = a.d0.then(&self.phi2) == self.phi1.then(&b.d0)
            && a.d1.then(&self.phi2) == self.phi1.then(&b.d1)
            && a.s0.then(&self.phi1) == self.phi2.then(&b.s0)
            && a.p0.then(&self.phi3) == self.phi2.then(&b.p0)
            && a.p1.then(&self.phi3) == self.phi2.then(&b.p1)
            && a.p2.then(&self.phi3) == self.phi2.then(&b.p2);
        if !functors_ok {
            return false;
        }
        // Cells: φ3(σ_f) = σ'_{φ1 f} and φ1(n_f) = n'_{φ1 f}.
        let cells3 = [(&a.sigma01, &b.sigma01), (&a.sigma02, &b.sigma02), (&a.sigma12, &b.sigma12)];
        for (ca, cb) in cells3 {
            for f in a.a1.objects() {
                if self.phi3.on_mor(ca.component(f)) != cb.component(self.phi1.on_obj(f)) {
                    return false;
                }
            }
        }
        for (ca, cb) in [(&a.n0, &b.n0), (&a.n1, &b.n1)] {
            for f in a.a1.objects() {
                if self.phi1.on_mor(ca.component(f)) != cb.component(self.phi1.on_obj(f)) {
                    return false;
                }
            }
        }
        true
    }

    /// The induced functor `Desc(a) → Desc(b)`:
    /// `(f, ρ) ↦ (φ1 f, φ2 ρ)`, `m ↦ φ1 m`.
    pub fn induce_on_descent(
        &self,
        a: &DescentDiagram,
        b: &DescentDiagram,
        desc_a: &super::DescentObject,
        desc_b: &super::DescentObject,
    ) -> Result<Functor> {
        let _ = a;
        let mut obj_map = Vec::with_capacity(desc_a.data.len());
        for dt in &desc_a.data {
            let image = super::DescentDatum {
                f: self.phi1.on_obj(dt.f),
                rho: self.phi2.on_mor(dt.rho),
            };
            let o = desc_b.object_of(&image).ok_or_else(|| {
                Error::Precondition("diagram map does not preserve descent data".into())
            })?;
            obj_map.push(o);
        }
        let mut mor_map = Vec::with_capacity(desc_a.underlying.len());
        for (k, &m) in desc_a.underlying.iter().enumerate() {
            let s = obj_map[desc_a.cat.src(MorId(k)).0];
            let d = obj_map[desc_a.cat.dst(MorId(k)).0];
            let mm = desc_b.morphism_of(s, d, self.phi1.on_mor(m)).ok_or_else(|| {
                Error::Precondition("diagram map does not preserve datum morphisms".into())
            })?;
            mor_map.push(mm);
        }
        let _ = b;
        Ok(Functor::new(desc_a.cat.clone(), desc_b.cat.clone(), obj_map, mor_map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{
        is_effective_descent, strict_descent_object, validate_descent_cone,
        validate_descent_diagram, DescentDiagram,
    };
    use crate::{cap::Cap, corpus};

    #[test]
    fn identity_transport_is_identity_on_cones() {
        let c = corpus::walking_arrow().shared();
        let a = DescentDiagram::constant_identity(&c);
        let desc = strict_descent_object(&a, Cap::default()).unwrap();
        let cone = desc.canonical_cone(&a);
        let moved = map_cone(&IdentityTransport, &cone).unwrap();
        assert_eq!(cone, moved);
    }

    #[test]
    fn product_transport_preserves_validity() {
        let c = corpus::walking_iso().shared();
        let a = DescentDiagram::constant_identity(&c);
        let desc = strict_descent_object(&a, Cap::default()).unwrap();
        let cone = desc.canonical_cone(&a);
        let t = ProductWith::new(corpus::walking_arrow().shared());
        let moved = map_cone(&t, &cone).unwrap();
        assert!(validate_descent_cone(&moved).is_clean(), "{}", validate_descent_cone(&moved));
        assert!(is_effective_descent(&moved, Cap::default()).unwrap());
    }

    #[test]
    fn hom_transport_from_point_is_equivalent_to_original() {
        let c = corpus::walking_arrow().shared();
        let a = DescentDiagram::constant_identity(&c);
        let desc = strict_descent_object(&a, Cap::default()).unwrap();
        let cone = desc.canonical_cone(&a);
        let t = HomFrom::new(corpus::terminal().shared());
        let moved = map_cone(&t, &cone).unwrap();
        assert!(validate_descent_cone(&moved).is_clean());
        assert!(is_effective_descent(&moved, Cap::default()).unwrap());
    }

    #[test]
    fn components_collapse_is_a_lawful_two_functor_on_samples() {
        let t = ComponentsCollapse;
        let i = corpus::walking_iso().shared();
        let p0 = t.on_cat(&i).unwrap();
        assert_eq!(p0.object_count(), 1);
        let f = Functor::identity(&i);
        let tf = t.on_functor(&f).unwrap();
        assert!(tf.is_identity_functor());
        let two = corpus::walking_arrow().shared();
        assert_eq!(t.on_cat(&two).unwrap().object_count(), 1);
        assert_eq!(t.on_cat(&corpus::discrete(3).shared()).unwrap().object_count(), 3);
    }

    #[test]
    fn validate_descent_diagram_smoke() {
        let c = corpus::chain(3).shared();
        let a = DescentDiagram::constant_identity(&c);
        assert!(validate_descent_diagram(&a).is_clean());
    }
}
