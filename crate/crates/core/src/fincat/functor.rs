//! Functors and natural transformations as index maps, with the composition
//! and whiskering calculus used throughout the 2-categorical layers.

use super::{CatRef, MorId, ObjId};
use crate::report::Report;

/// A functor between finite categories: an object map and a morphism map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functor {
    dom: CatRef,
    cod: CatRef,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl Functor {
    pub fn new(dom: CatRef, cod: CatRef, obj_map: Vec<ObjId>, mor_map: Vec<MorId>) -> Self {
        Functor { dom, cod, obj_map, mor_map }
    }

    pub fn identity(c: &CatRef) -> Self {
        Functor {
            dom: c.clone(),
            cod: c.clone(),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The unique functor into the terminal category.
    pub fn constant(dom: &CatRef, cod: &CatRef, target: ObjId) -> Self {
        Functor {
            dom: dom.clone(),
            cod: cod.clone(),
            obj_map: dom.objects().map(|_| target).collect(),
            mor_map: dom.morphisms().map(|_| cod.identity(target)).collect(),
        }
    }

    pub fn dom(&self) -> &CatRef {
        &self.dom
    }

    pub fn cod(&self) -> &CatRef {
        &self.cod
    }

    pub fn on_obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn on_mor(&self, m: MorId) -> MorId {
        self.mor_map[m.0]
    }

    pub fn obj_map(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Functor) -> Functor {
        assert_eq!(self.cod, other.dom, "functor composition mismatch");
        Functor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            obj_map: self.obj_map.iter().map(|&x| other.on_obj(x)).collect(),
            mor_map: self.mor_map.iter().map(|&m| other.on_mor(m)).collect(),
        }
    }

    pub fn is_identity_functor(&self) -> bool {
        self.dom == self.cod
            && self.obj_map.iter().enumerate().all(|(i, o)| o.0 == i)
            && self.mor_map.iter().enumerate().all(|(i, m)| m.0 == i)
    }
}

/// Audit functor laws: endpoint preservation, identities, all composites.
pub fn validate_functor(f: &Functor) -> Report {
    let mut report = Report::new("functor");
    let (dom, cod) = (f.dom(), f.cod());
    if f.obj_map.len() != dom.object_count() || f.mor_map.len() != dom.morphism_count() {
        report.push("map-lengths", "object or morphism map has wrong length");
        return report;
    }
    if f.obj_map.iter().any(|o| o.0 >= cod.object_count())
        || f.mor_map.iter().any(|m| m.0 >= cod.morphism_count())
    {
        report.push("map-range", "image index out of range");
        return report;
    }
    for m in dom.morphisms() {
        let fm = f.on_mor(m);
        if cod.src(fm) != f.on_obj(dom.src(m)) || cod.dst(fm) != f.on_obj(dom.dst(m)) {
            report.push("endpoints", format!("morphism {} maps to {} with wrong endpoints", m.0, fm.0));
        }
    }
    for x in dom.objects() {
        if f.on_mor(dom.identity(x)) != cod.identity(f.on_obj(x)) {
            report.push("identities", format!("identity of object {} not preserved", x.0));
        }
    }
    for (a, b, c) in dom.composites() {
        let lhs = cod.then(f.on_mor(a), f.on_mor(b));
        if lhs != Some(f.on_mor(c)) {
            report.push("composition", format!("composite of f={} g={} not preserved", a.0, b.0));
        }
    }
    report
}

/// A natural transformation between parallel functors: one component
/// morphism of the codomain per object of the domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatTransf {
    src: Functor,
    dst: Functor,
    components: Vec<MorId>,
}

impl NatTransf {
    pub fn new(src: Functor, dst: Functor, components: Vec<MorId>) -> Self {
        NatTransf { src, dst, components }
    }

    pub fn identity(f: &Functor) -> Self {
        let components = f
            .dom()
            .objects()
            .map(|x| f.cod().identity(f.on_obj(x)))
            .collect();
        NatTransf { src: f.clone(), dst: f.clone(), components }
    }

    pub fn src(&self) -> &Functor {
        &self.src
    }

    pub fn dst(&self) -> &Functor {
        &self.dst
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn is_identity_transf(&self) -> bool {
        self.src == self.dst
            && self
                .src
                .dom()
                .objects()
                .all(|x| self.component(x) == self.src.cod().identity(self.src.on_obj(x)))
    }

    /// Vertical composite `other · self` (first `self`, then `other`).
    pub fn then(&self, other: &NatTransf) -> NatTransf {
        assert_eq!(self.dst, other.src, "vertical composition mismatch");
        let cod = self.src.cod();
        let components = self
            .src
            .dom()
            .objects()
            .map(|x| cod.then_unchecked(self.component(x), other.component(x)))
            .collect();
        NatTransf { src: self.src.clone(), dst: other.dst.clone(), components }
    }

    /// Componentwise inverse, when every component is invertible.
    pub fn inverse(&self) -> Option<NatTransf> {
        let cod = self.src.cod();
        let mut components = Vec::with_capacity(self.components.len());
        for &c in &self.components {
            components.push(cod.inverse(c)?);
        }
        Some(NatTransf { src: self.dst.clone(), dst: self.src.clone(), components })
    }

    pub fn is_invertible(&self) -> bool {
        let cod = self.src.cod();
        self.components.iter().all(|&c| cod.is_iso(c))
    }

    /// Left whiskering `h ∗ self` by a functor out of the common codomain:
    /// components `h(self_x)`.
    pub fn whisker_left(&self, h: &Functor) -> NatTransf {
        assert_eq!(self.src.cod(), h.dom(), "whisker mismatch");
        NatTransf {
            src: self.src.then(h),
            dst: self.dst.then(h),
            components: self.components.iter().map(|&c| h.on_mor(c)).collect(),
        }
    }

    /// Right whiskering `self ∗ k` by a functor into the common domain:
    /// components `self_{k(x)}`.
    pub fn whisker_right(&self, k: &Functor) -> NatTransf {
        assert_eq!(k.cod(), self.src.dom(), "whisker mismatch");
        let components = k.dom().objects().map(|x| self.component(k.on_obj(x))).collect();
        NatTransf { src: k.then(&self.src), dst: k.then(&self.dst), components }
    }

    /// Replace the recorded endpoints by equal functors. The endpoints must
    /// be equal as data; this only retags composites that were built along a
    /// different bracketing.
    pub fn retyped(&self, src: Functor, dst: Functor) -> NatTransf {
        assert_eq!(self.src, src, "retype must preserve the source functor");
        assert_eq!(self.dst, dst, "retype must preserve the target functor");
        NatTransf { src, dst, components: self.components.clone() }
    }
}

/// Audit naturality: for every `g: a→b`, `dst(g) ∘ α_a = α_b ∘ src(g)`.
pub fn validate_nattransf(a: &NatTransf) -> Report {
    let mut report = Report::new("natural-transformation");
    let (f, g) = (a.src(), a.dst());
    if f.dom() != g.dom() || f.cod() != g.cod() {
        report.push("parallel", "source and target functors are not parallel");
        return report;
    }
    let dom = f.dom();
    let cod = f.cod();
    if a.components.len() != dom.object_count() {
        report.push("component-count", "one component per object required");
        return report;
    }
    for x in dom.objects() {
        let c = a.component(x);
        if c.0 >= cod.morphism_count() {
            report.push("component-range", format!("component at object {} out of range", x.0));
            return report;
        }
        if cod.src(c) != f.on_obj(x) || cod.dst(c) != g.on_obj(x) {
            report.push("component-endpoints", format!("component at object {} has wrong endpoints", x.0));
        }
    }
    if !report.is_clean() {
        return report;
    }
    for m in dom.morphisms() {
        let (x, y) = (dom.src(m), dom.dst(m));
        let left = cod.then(a.component(x), g.on_mor(m));
        let right = cod.then(f.on_mor(m), a.component(y));
        if left != right {
            report.push("naturality", format!("square at morphism {}", m.0));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fincat::ObjId;

    #[test]
    fn identity_and_constant_functors_validate() {
        let two = corpus::walking_arrow().shared();
        let one = corpus::terminal().shared();
        assert!(validate_functor(&Functor::identity(&two)).is_clean());
        assert!(validate_functor(&Functor::constant(&two, &one, ObjId(0))).is_clean());
    }

    #[test]
    fn endpoint_violation_is_reported() {
        // Swap the endpoints of a: 0→1 in the object map without fixing the
        // morphism map.
        let two = corpus::walking_arrow().shared();
        let f = Functor::new(
            two.clone(),
            two.clone(),
            vec![ObjId(1), ObjId(0)],
            two.morphisms().collect(),
        );
        let report = validate_functor(&f);
        assert!(report.violations.iter().any(|v| v.rule == "endpoints" || v.rule == "identities"));
    }

    #[test]
    fn naturality_audits() {
        let two = corpus::walking_arrow().shared();
        let id = Functor::identity(&two);
        assert!(validate_nattransf(&NatTransf::identity(&id)).is_clean());

        // Non-natural candidate: constant to 1 vs identity with a bad component.
        let arrow = two.hom(ObjId(0), ObjId(1))[0];
        let c1 = Functor::constant(&two, &two, ObjId(1));
        let alpha = NatTransf::new(id.clone(), c1.clone(), vec![arrow, two.identity(ObjId(1))]);
        assert!(validate_nattransf(&alpha).is_clean());
        let beta = NatTransf::new(c1, id, vec![two.identity(ObjId(1)), two.identity(ObjId(1))]);
        assert!(!validate_nattransf(&beta).is_clean());
    }
}
