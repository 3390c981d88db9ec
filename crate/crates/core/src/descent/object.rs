//! Explicit strict descent objects in Cat and the comparison functor.

use super::{datum_equations_hold, DescentCone, DescentDatum, DescentDiagram};
use crate::cap::{Cap, Counter};
use crate::fincat::{
    is_equivalence, is_isomorphism_functor, CatRef, FiniteCategory, Functor, Hom, MorId,
    NatTransf, ObjId,
};
use crate::Result;
use std::collections::BTreeMap;

/// The strict descent object of a diagram: the category of descent data,
/// with the tables linking its indices back to `(f, ρ)` pairs and to the
/// underlying `A1`-morphisms, plus the canonical projection cone.
#[derive(Debug, Clone)]
pub struct DescentObject {
    pub cat: CatRef,
    /// Datum for each object of `cat`, in lexicographic `(f, ρ)` order.
    pub data: Vec<DescentDatum>,
    /// Underlying `A1`-morphism for each morphism of `cat`.
    pub underlying: Vec<MorId>,
    datum_index: BTreeMap<DescentDatum, ObjId>,
    mor_index: BTreeMap<(ObjId, ObjId, MorId), MorId>,
}

impl DescentObject {
    pub fn object_of(&self, datum: &DescentDatum) -> Option<ObjId> {
        self.datum_index.get(datum).copied()
    }

    pub fn morphism_of(&self, src: ObjId, dst: ObjId, underlying: MorId) -> Option<MorId> {
        self.mor_index.get(&(src, dst, underlying)).copied()
    }

    /// The projection cone over the base diagram, with `theta` at a datum
    /// given by its gluing isomorphism.
    pub fn canonical_cone(&self, base: &DescentDiagram) -> DescentCone {
        let d = Functor::new(
            self.cat.clone(),
            base.a1.clone(),
            self.data.iter().map(|dt| dt.f).collect(),
            self.underlying.clone(),
        );
        let theta = NatTransf::new(
            d.then(&base.d1),
            d.then(&base.d0),
            self.data.iter().map(|dt| dt.rho).collect(),
        );
        DescentCone { base: base.clone(), apex: self.cat.clone(), d, theta }
    }
}

/// Enumerate all descent data over a diagram and assemble them into the
/// strict descent object. Objects are ordered lexicographically by
/// `(f-index, ρ-index)`; morphisms inherit ordering from `(src, dst, m)`.
pub fn strict_descent_object(a: &DescentDiagram, cap: Cap) -> Result<DescentObject> {
    let mut counter = Counter::new(cap, "strict_descent_object");
    let mut data = Vec::new();
    for f in a.a1.objects() {
        for rho in a.a2.hom(a.d1.on_obj(f), a.d0.on_obj(f)) {
            counter.tick()?;
            if datum_equations_hold(a, f, rho) {
                data.push(DescentDatum { f, rho });
            }
        }
    }

    // Morphisms (f,ρ) → (h,ρ'): m : f→h of A1 with d0(m)∘ρ = ρ'∘d1(m).
    let mut morphisms = Vec::new();
    let mut underlying = Vec::new();
    let mut homs = Vec::new();
    for (i, x) in data.iter().enumerate() {
        for (j, y) in data.iter().enumerate() {
            for m in a.a1.hom(x.f, y.f) {
                counter.tick()?;
                let lhs = a.a2.then(x.rho, a.d0.on_mor(m));
                let rhs = a.a2.then(a.d1.on_mor(m), y.rho);
                if lhs.is_some() && lhs == rhs {
                    homs.push(Hom { src: ObjId(i), dst: ObjId(j) });
                    underlying.push(m);
                    morphisms.push((ObjId(i), ObjId(j), m));
                }
            }
        }
    }
    let mut mor_index = BTreeMap::new();
    for (k, &(s, d, m)) in morphisms.iter().enumerate() {
        mor_index.insert((s, d, m), MorId(k));
    }

    let identities: Vec<MorId> = data
        .iter()
        .enumerate()
        .map(|(i, dt)| {
            *mor_index
                .get(&(ObjId(i), ObjId(i), a.a1.identity(dt.f)))
                .expect("identity datum morphism present")
        })
        .collect();
    let mut composites = Vec::new();
    for (k1, &(s1, d1, m1)) in morphisms.iter().enumerate() {
        for (k2, &(s2, d2, m2)) in morphisms.iter().enumerate() {
            if d1 != s2 {
                continue;
            }
            let m = a.a1.then_unchecked(m1, m2);
            let k = *mor_index
                .get(&(s1, d2, m))
                .expect("descent morphisms are closed under composition");
            composites.push((MorId(k1), MorId(k2), k));
        }
    }
    let cat =
        FiniteCategory::from_parts(data.len(), homs, identities, &composites).shared();
    let datum_index = data
        .iter()
        .enumerate()
        .map(|(i, &dt)| (dt, ObjId(i)))
        .collect();
    Ok(DescentObject { cat, data, underlying, datum_index, mor_index })
}

/// The comparison functor from a cone's apex into the descent object of its
/// base: `x ↦ (d(x), θ_x)`, `g ↦ d(g)`.
pub fn comparison(k: &DescentCone, cap: Cap) -> Result<(Functor, DescentObject)> {
    let desc = strict_descent_object(&k.base, cap)?;
    let mut obj_map = Vec::with_capacity(k.apex.object_count());
    for x in k.apex.objects() {
        let datum = DescentDatum { f: k.d.on_obj(x), rho: k.theta.component(x) };
        let o = desc.object_of(&datum).ok_or_else(|| {
            crate::Error::Precondition(format!(
                "cone object {} does not carry a valid descent datum",
                x.0
            ))
        })?;
        obj_map.push(o);
    }
    let mut mor_map = Vec::with_capacity(k.apex.morphism_count());
    for g in k.apex.morphisms() {
        let s = obj_map[k.apex.src(g).0];
        let d = obj_map[k.apex.dst(g).0];
        let m = desc.morphism_of(s, d, k.d.on_mor(g)).ok_or_else(|| {
            crate::Error::Precondition(format!(
                "cone morphism {} is not a morphism of descent data",
                g.0
            ))
        })?;
        mor_map.push(m);
    }
    let functor = Functor::new(k.apex.clone(), desc.cat.clone(), obj_map, mor_map);
    Ok((functor, desc))
}

/// Is the cone a strict descent cone (comparison an isomorphism)?
pub fn is_strict_descent(k: &DescentCone, cap: Cap) -> Result<bool> {
    let (cmp, _) = comparison(k, cap)?;
    Ok(is_isomorphism_functor(&cmp))
}

/// Is the cone of effective descent (comparison an equivalence)?
pub fn is_effective_descent(k: &DescentCone, cap: Cap) -> Result<bool> {
    let (cmp, _) = comparison(k, cap)?;
    Ok(is_equivalence(&cmp, cap)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::descent::{validate_descent_cone, DescentDiagram};
    use crate::fincat::validate_category;

    #[test]
    fn constant_identity_descent_recovers_the_category() {
        // The identity equation forces ρ = id, so Desc ≅ C.
        for c in [corpus::walking_arrow().shared(), corpus::walking_iso().shared()] {
            let a = DescentDiagram::constant_identity(&c);
            let desc = strict_descent_object(&a, Cap::default()).unwrap();
            assert!(validate_category(&desc.cat).is_clean());
            assert_eq!(desc.cat.object_count(), c.object_count());
            assert_eq!(desc.cat.morphism_count(), c.morphism_count());
            let cone = desc.canonical_cone(&a);
            assert!(validate_descent_cone(&cone).is_clean());
            assert!(is_strict_descent(&cone, Cap::default()).unwrap());
            assert!(is_effective_descent(&cone, Cap::default()).unwrap());
        }
    }

    #[test]
    fn empty_a1_gives_empty_descent() {
        let c = corpus::empty().shared();
        let a = DescentDiagram::constant_identity(&c);
        let desc = strict_descent_object(&a, Cap::default()).unwrap();
        assert_eq!(desc.cat.object_count(), 0);
    }

    #[test]
    fn canonical_comparison_is_identity_on_descent() {
        let c = corpus::chain(3).shared();
        let a = DescentDiagram::constant_identity(&c);
        let desc = strict_descent_object(&a, Cap::default()).unwrap();
        let cone = desc.canonical_cone(&a);
        let (cmp, _) = comparison(&cone, Cap::default()).unwrap();
        assert!(cmp.is_identity_functor());
    }
}
