//! Equivalence and isomorphism tests for functors, with explicit witnesses.

use super::functor::{Functor, NatTransf};
use super::MorId;
use crate::cap::Cap;
use crate::{Error, Result};

/// Witness data for an equivalence of categories: a quasi-inverse together
/// with the invertible unit and counit transformations.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness {
    pub inverse: Functor,
    /// `Id_dom ⇒ inverse ∘ F`
    pub unit: NatTransf,
    /// `F ∘ inverse ⇒ Id_cod`
    pub counit: NatTransf,
}

/// Full + faithful + essentially surjective, checked by enumeration.
/// Returns a witness when the functor is an equivalence.
pub fn is_equivalence(f: &Functor, _cap: Cap) -> Result<Option<EquivalenceWitness>> {
    let dom = f.dom();
    let cod = f.cod();

    // Faithful and full on every hom-set.
    for x in dom.objects() {
        for y in dom.objects() {
            let hom = dom.hom(x, y);
            let mut images: Vec<MorId> = hom.iter().map(|&m| f.on_mor(m)).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != hom.len() {
                return Ok(None); // not faithful
            }
            let target = cod.hom(f.on_obj(x), f.on_obj(y));
            if images.len() != target.len() {
                return Ok(None); // not full
            }
        }
    }

    // Essentially surjective: for each object downstairs pick the lowest
    // preimage-up-to-iso, with the iso.
    let mut section = Vec::with_capacity(cod.object_count());
    for d in cod.objects() {
        let mut found = None;
        for c in dom.objects() {
            if let Some((iso, iso_inv)) = cod.find_iso(f.on_obj(c), d) {
                found = Some((c, iso, iso_inv));
                break;
            }
        }
        match found {
            Some(hit) => section.push(hit),
            None => return Ok(None),
        }
    }

    // Assemble the quasi-inverse G: on g: d→d' take the unique preimage of
    // iso_{d'}⁻¹ ∘ g ∘ iso_d under the hom-bijection.
    let mut obj_map = Vec::with_capacity(cod.object_count());
    for &(c, _, _) in &section {
        obj_map.push(c);
    }
    let mut mor_map = Vec::with_capacity(cod.morphism_count());
    for g in cod.morphisms() {
        let d = cod.src(g);
        let d2 = cod.dst(g);
        let (c, iso_d, _) = section[d.0];
        let (c2, _, iso_d2_inv) = section[d2.0];
        let conj = cod.then_unchecked(cod.then_unchecked(iso_d, g), iso_d2_inv);
        let pre = dom
            .hom(c, c2)
            .into_iter()
            .find(|&m| f.on_mor(m) == conj)
            .ok_or_else(|| Error::Precondition("fullness witness vanished during assembly".into()))?;
        mor_map.push(pre);
    }
    let inverse = Functor::new(cod.clone(), dom.clone(), obj_map, mor_map);

    // Counit components are the chosen isos F(G d) → d.
    let counit = NatTransf::new(
        inverse.then(f),
        Functor::identity(cod),
        cod.objects().map(|d| section[d.0].1).collect(),
    );
    // Unit at c is the unique preimage of the counit component at F(c),
    // inverted: Id ⇒ G∘F.
    let mut unit_components = Vec::with_capacity(dom.object_count());
    for c in dom.objects() {
        let d = f.on_obj(c);
        let (gc, _, iso_inv) = section[d.0];
        let u = dom
            .hom(c, gc)
            .into_iter()
            .find(|&m| f.on_mor(m) == iso_inv)
            .ok_or_else(|| Error::Precondition("unit assembly failed".into()))?;
        unit_components.push(u);
    }
    let unit = NatTransf::new(Functor::identity(dom), f.then(&inverse), unit_components);

    Ok(Some(EquivalenceWitness { inverse, unit, counit }))
}

/// Invert a functor known to be bijective on objects and morphisms.
pub fn invert_isomorphism(f: &Functor) -> Functor {
    debug_assert!(is_isomorphism_functor(f));
    let dom = f.dom();
    let cod = f.cod();
    let mut obj_map = vec![super::ObjId(0); cod.object_count()];
    for x in dom.objects() {
        obj_map[f.on_obj(x).0] = x;
    }
    let mut mor_map = vec![MorId(0); cod.morphism_count()];
    for m in dom.morphisms() {
        mor_map[f.on_mor(m).0] = m;
    }
    Functor::new(cod.clone(), dom.clone(), obj_map, mor_map)
}

/// Bijective on objects and on morphisms (functoriality is the caller's
/// concern; combined with bijectivity it forces the inverse to be a functor).
pub fn is_isomorphism_functor(f: &Functor) -> bool {
    let dom = f.dom();
    let cod = f.cod();
    if dom.object_count() != cod.object_count() || dom.morphism_count() != cod.morphism_count() {
        return false;
    }
    let mut seen_obj = vec![false; cod.object_count()];
    for x in dom.objects() {
        let i = f.on_obj(x).0;
        if seen_obj[i] {
            return false;
        }
        seen_obj[i] = true;
    }
    let mut seen_mor = vec![false; cod.morphism_count()];
    for m in dom.morphisms() {
        let i = f.on_mor(m).0;
        if seen_mor[i] {
            return false;
        }
        seen_mor[i] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fincat::functor::{validate_functor, validate_nattransf};
    use crate::fincat::ObjId;

    #[test]
    fn identity_is_equivalence_and_iso() {
        let two = corpus::walking_arrow().shared();
        let id = Functor::identity(&two);
        let w = is_equivalence(&id, Cap::default()).unwrap().expect("identity equivalence");
        assert!(validate_functor(&w.inverse).is_clean());
        assert!(validate_nattransf(&w.unit).is_clean());
        assert!(validate_nattransf(&w.counit).is_clean());
        assert!(w.unit.is_invertible() && w.counit.is_invertible());
        assert!(is_isomorphism_functor(&id));
    }

    #[test]
    fn walking_iso_collapses_to_point() {
        let i = corpus::walking_iso().shared();
        let one = corpus::terminal().shared();
        let f = Functor::constant(&i, &one, ObjId(0));
        let w = is_equivalence(&f, Cap::default()).unwrap().expect("I ≃ 1");
        assert!(validate_nattransf(&w.unit).is_clean());
        assert!(validate_nattransf(&w.counit).is_clean());
        assert!(w.unit.is_invertible());
        assert!(!is_isomorphism_functor(&f));
    }

    #[test]
    fn collapse_of_walking_arrow_is_not_equivalence() {
        // 2 → 1 is not full: hom(1,0) is empty upstairs, singleton downstairs
        // after collapsing — detected as non-faithful/non-full on homs.
        let two = corpus::walking_arrow().shared();
        let one = corpus::terminal().shared();
        let f = Functor::constant(&two, &one, ObjId(0));
        assert!(is_equivalence(&f, Cap::default()).unwrap().is_none());
    }
}
