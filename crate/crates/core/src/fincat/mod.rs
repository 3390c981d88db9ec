//! Exact kernel for finite categories.
//!
//! A [`FiniteCategory`] is a total composition table: objects are `0..n`,
//! morphisms are indexed records `(src, dst)`, identities are listed
//! explicitly, and `compose` is defined on exactly the composable pairs.
//! Morphism equality is equality of indices within one category — nothing is
//! ever quotiented. All higher structure (functor categories, descent
//! objects, coalgebra homs) bottoms out in these tables.

mod enumerate;
mod equivalence;
mod functor;

pub use enumerate::{all_functors, all_nat_transfs, functor_category, FunctorCategory};
pub use equivalence::{invert_isomorphism, is_equivalence, is_isomorphism_functor, EquivalenceWitness};
pub use functor::{validate_functor, validate_nattransf, Functor, NatTransf};

use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Object index within one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjId(pub usize);

/// Morphism index within one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorId(pub usize);

/// Source and destination of one morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hom {
    pub src: ObjId,
    pub dst: ObjId,
}

/// A finite category as explicit data. Immutable after construction; shared
/// via [`CatRef`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteCategory {
    objects: usize,
    morphisms: Vec<Hom>,
    identities: Vec<MorId>,
    /// Flat table, `table[f * n_mor + g] = Some(g∘f)` iff `dst f = src g`.
    table: Vec<Option<MorId>>,
}

pub type CatRef = Arc<FiniteCategory>;

impl FiniteCategory {
    /// Assemble a category from raw parts. No validation is performed here;
    /// run [`validate_category`] to audit the axioms.
    pub fn from_parts(
        objects: usize,
        morphisms: Vec<Hom>,
        identities: Vec<MorId>,
        composites: &[(MorId, MorId, MorId)],
    ) -> Self {
        let n = morphisms.len();
        let mut table = vec![None; n * n];
        for &(f, g, h) in composites {
            table[f.0 * n + g.0] = Some(h);
        }
        FiniteCategory { objects, morphisms, identities, table }
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].src
    }

    pub fn dst(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dst
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities.get(self.src(m).0) == Some(&m) && self.src(m) == self.dst(m)
    }

    /// `g∘f`: first `f`, then `g`. Defined iff `dst f = src g`.
    pub fn then(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.table[f.0 * self.morphisms.len() + g.0]
    }

    /// `g∘f` where composability is a caller invariant.
    pub fn then_unchecked(&self, f: MorId, g: MorId) -> MorId {
        self.then(f, g).expect("composable pair")
    }

    /// Morphisms `x → y`, in index order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&m| self.src(m) == x && self.dst(m) == y)
            .collect()
    }

    /// A two-sided inverse of `m`, if one exists.
    pub fn inverse(&self, m: MorId) -> Option<MorId> {
        let (x, y) = (self.src(m), self.dst(m));
        self.hom(y, x).into_iter().find(|&w| {
            self.then(m, w) == Some(self.identity(x)) && self.then(w, m) == Some(self.identity(y))
        })
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        self.inverse(m).is_some()
    }

    /// Lowest-index isomorphism `x → y`, with its inverse.
    pub fn find_iso(&self, x: ObjId, y: ObjId) -> Option<(MorId, MorId)> {
        self.hom(x, y)
            .into_iter()
            .find_map(|m| self.inverse(m).map(|w| (m, w)))
    }

    pub fn isomorphic_objects(&self, x: ObjId, y: ObjId) -> bool {
        self.find_iso(x, y).is_some()
    }

    pub fn composites(&self) -> Vec<(MorId, MorId, MorId)> {
        let n = self.morphisms.len();
        let mut out = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(h) = self.table[f * n + g] {
                    out.push((MorId(f), MorId(g), h));
                }
            }
        }
        out
    }

    pub fn shared(self) -> CatRef {
        Arc::new(self)
    }
}

/// Audit every category axiom; the report names each violation with indices.
pub fn validate_category(c: &FiniteCategory) -> Report {
    let mut report = Report::new("category");
    let nm = c.morphism_count();

    if c.identities.len() != c.objects {
        report.push("identity-listing", format!("{} identities for {} objects", c.identities.len(), c.objects));
        return report;
    }
    for m in c.morphisms() {
        if c.src(m).0 >= c.objects || c.dst(m).0 >= c.objects {
            report.push("endpoint-range", format!("morphism {} has out-of-range endpoint", m.0));
        }
    }
    for x in c.objects() {
        let i = c.identity(x);
        if i.0 >= nm {
            report.push("identity-range", format!("identity of object {} out of range", x.0));
            continue;
        }
        if c.src(i) != x || c.dst(i) != x {
            report.push("identity-endpoints", format!("identity of object {} is not an endomorphism", x.0));
        }
    }

    // Totality and typing of the table.
    for f in c.morphisms() {
        for g in c.morphisms() {
            let composable = c.dst(f) == c.src(g);
            match c.then(f, g) {
                Some(h) => {
                    if !composable {
                        report.push("table-domain", format!("compose defined on non-composable f={} g={}", f.0, g.0));
                    } else if h.0 >= nm {
                        report.push("table-range", format!("composite of f={} g={} out of range", f.0, g.0));
                    } else if c.src(h) != c.src(f) || c.dst(h) != c.dst(g) {
                        report.push("composite-endpoints", format!("f={} g={} gives {} with wrong endpoints", f.0, g.0, h.0));
                    }
                }
                None => {
                    if composable {
                        report.push("table-totality", format!("missing composite for f={} g={}", f.0, g.0));
                    }
                }
            }
        }
    }
    if !report.is_clean() {
        return report;
    }

    // Unit laws.
    for m in c.morphisms() {
        let ids = c.identity(c.src(m));
        let idd = c.identity(c.dst(m));
        if c.then(ids, m) != Some(m) {
            report.push("left-unit", format!("identity of src fails on morphism {}", m.0));
        }
        if c.then(m, idd) != Some(m) {
            report.push("right-unit", format!("identity of dst fails on morphism {}", m.0));
        }
    }

    // Associativity over every composable triple.
    for f in c.morphisms() {
        for g in c.morphisms() {
            if c.dst(f) != c.src(g) {
                continue;
            }
            for h in c.morphisms() {
                if c.dst(g) != c.src(h) {
                    continue;
                }
                let left = c.then(f, g).and_then(|fg| c.then(fg, h));
                let right = c.then(g, h).and_then(|gh| c.then(f, gh));
                if left != right {
                    report.push("associativity", format!("triple f={} g={} h={}", f.0, g.0, h.0));
                }
            }
        }
    }
    report
}

/// The equalizer of a parallel pair, found by exhaustive cone search.
///
/// Returns the first `(object, morphism)` in index order that equalizes the
/// pair and satisfies the universal property against every cone. Absence is
/// a value, not an error.
pub fn equalizer(c: &FiniteCategory, f: MorId, g: MorId) -> Option<(ObjId, MorId)> {
    assert_eq!(c.src(f), c.src(g), "parallel pair");
    assert_eq!(c.dst(f), c.dst(g), "parallel pair");
    let a = c.src(f);

    let equalizes = |e: MorId| c.then(e, f) == c.then(e, g);
    for apex in c.objects() {
        for e in c.hom(apex, a) {
            if !equalizes(e) {
                continue;
            }
            // Universal: every equalizing x: X→a factors uniquely through e.
            let universal = c.objects().all(|x_obj| {
                c.hom(x_obj, a).into_iter().filter(|&x| equalizes(x)).all(|x| {
                    let factorings = c
                        .hom(x_obj, apex)
                        .into_iter()
                        .filter(|&u| c.then(u, e) == Some(x))
                        .count();
                    factorings == 1
                })
            });
            if universal {
                return Some((apex, e));
            }
        }
    }
    None
}

/// Product category. Objects `(c, d)` are indexed `c*|D| + d`, morphisms
/// `(f, g)` are indexed `f*|D_mor| + g`.
pub fn product_category(c: &FiniteCategory, d: &FiniteCategory) -> FiniteCategory {
    let dm = d.morphism_count();
    let dobjs = d.object_count();
    let mut morphisms = Vec::with_capacity(c.morphism_count() * dm);
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push(Hom {
                src: ObjId(c.src(f).0 * dobjs + d.src(g).0),
                dst: ObjId(c.dst(f).0 * dobjs + d.dst(g).0),
            });
        }
    }
    let mut identities = Vec::with_capacity(c.object_count() * dobjs);
    for x in c.objects() {
        for y in d.objects() {
            identities.push(MorId(c.identity(x).0 * dm + d.identity(y).0));
        }
    }
    let mut composites = Vec::new();
    for (f1, g1, h1) in c.composites() {
        for (f2, g2, h2) in d.composites() {
            composites.push((
                MorId(f1.0 * dm + f2.0),
                MorId(g1.0 * dm + g2.0),
                MorId(h1.0 * dm + h2.0),
            ));
        }
    }
    FiniteCategory::from_parts(c.object_count() * dobjs, morphisms, identities, &composites)
}

/// Opposite category on the same indices; `opposite(opposite(c)) == c`.
pub fn opposite(c: &FiniteCategory) -> FiniteCategory {
    let morphisms = c
        .morphisms()
        .map(|m| Hom { src: c.dst(m), dst: c.src(m) })
        .collect();
    let composites: Vec<(MorId, MorId, MorId)> = c
        .composites()
        .into_iter()
        .map(|(f, g, h)| (g, f, h))
        .collect();
    FiniteCategory::from_parts(c.object_count(), morphisms, c.identities.clone(), &composites)
}

/// Projections of a product category, as functors.
pub fn product_projections(c: &CatRef, d: &CatRef, prod: &CatRef) -> (Functor, Functor) {
    let dobjs = d.object_count();
    let dm = d.morphism_count();
    let p1 = Functor::new(
        prod.clone(),
        c.clone(),
        prod.objects().map(|o| ObjId(o.0 / dobjs)).collect(),
        prod.morphisms().map(|m| MorId(m.0 / dm)).collect(),
    );
    let p2 = Functor::new(
        prod.clone(),
        d.clone(),
        prod.objects().map(|o| ObjId(o.0 % dobjs)).collect(),
        prod.morphisms().map(|m| MorId(m.0 % dm)).collect(),
    );
    (p1, p2)
}

/// Pairing `⟨F, G⟩ : X → C×D` of two functors with common domain.
pub fn pair_into_product(f: &Functor, g: &Functor, prod: &CatRef) -> Functor {
    assert_eq!(f.dom(), g.dom());
    let dobjs = g.cod().object_count();
    let dm = g.cod().morphism_count();
    Functor::new(
        f.dom().clone(),
        prod.clone(),
        f.dom()
            .objects()
            .map(|x| ObjId(f.on_obj(x).0 * dobjs + g.on_obj(x).0))
            .collect(),
        f.dom()
            .morphisms()
            .map(|m| MorId(f.on_mor(m).0 * dm + g.on_mor(m).0))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn terminal_and_walking_arrow_are_valid() {
        assert!(validate_category(&corpus::terminal()).is_clean());
        assert!(validate_category(&corpus::walking_arrow()).is_clean());
        assert!(validate_category(&corpus::walking_iso()).is_clean());
        assert!(validate_category(&corpus::empty()).is_clean());
        assert!(validate_category(&corpus::parallel_pair()).is_clean());
    }

    #[test]
    fn broken_associativity_is_named() {
        // Mutate one entry of a valid 3-chain table and recheck.
        let c = corpus::chain(3);
        let mut composites = c.composites();
        // 3-chain has a genuine composite 0→1→2; redirect it to an identity.
        let victim = composites
            .iter_mut()
            .find(|(f, g, _)| !c.is_identity(*f) && !c.is_identity(*g))
            .expect("3-chain has a composable non-identity pair");
        victim.2 = c.identity(ObjId(0));
        let broken = FiniteCategory::from_parts(
            c.object_count(),
            c.morphisms().map(|m| Hom { src: c.src(m), dst: c.dst(m) }).collect(),
            (0..c.object_count()).map(|i| c.identity(ObjId(i))).collect(),
            &composites,
        );
        let report = validate_category(&broken);
        assert!(!report.is_clean());
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "composite-endpoints" || v.rule == "associativity" || v.rule == "left-unit" || v.rule == "right-unit"));
    }

    #[test]
    fn equalizer_of_identity_pair_is_domain() {
        let c = corpus::walking_arrow();
        let id0 = c.identity(ObjId(0));
        let (obj, e) = equalizer(&c, id0, id0).expect("identity pair has equalizer");
        assert_eq!(obj, ObjId(0));
        assert_eq!(e, id0);
    }

    #[test]
    fn parallel_pair_has_no_equalizer() {
        let c = corpus::parallel_pair();
        // morphisms 2 and 3 are the two non-identity arrows 0 ⇉ 1
        assert_eq!(equalizer(&c, MorId(2), MorId(3)), None);
    }

    #[test]
    fn equalizer_of_equal_maps_in_poset_is_domain() {
        let c = corpus::chain(3);
        let m = c.hom(ObjId(0), ObjId(2))[0];
        let (obj, e) = equalizer(&c, m, m).expect("equal pair");
        assert_eq!(obj, ObjId(0));
        assert!(c.is_identity(e));
    }

    #[test]
    fn product_counts() {
        let two = corpus::walking_arrow();
        let p = product_category(&two, &two);
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
        assert!(validate_category(&p).is_clean());
        let one = corpus::terminal();
        let p1 = product_category(&one, &two);
        assert_eq!(p1.object_count(), two.object_count());
        assert_eq!(p1.morphism_count(), two.morphism_count());
    }

    #[test]
    fn opposite_is_involutive_on_the_nose() {
        for c in [corpus::walking_arrow(), corpus::walking_iso(), corpus::chain(3)] {
            let back = opposite(&opposite(&c));
            assert_eq!(c, back);
            assert!(validate_category(&opposite(&c)).is_clean());
        }
    }

    #[test]
    fn walking_iso_inverses() {
        let i = corpus::walking_iso();
        let u = i.hom(ObjId(0), ObjId(1))[0];
        let v = i.hom(ObjId(1), ObjId(0))[0];
        assert_eq!(i.inverse(u), Some(v));
        assert!(i.isomorphic_objects(ObjId(0), ObjId(1)));
    }
}
