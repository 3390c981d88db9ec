//! Brute-force enumeration of functors and natural transformations, and the
//! functor category built from them.
//!
//! Enumeration order is canonical: object maps vary lexicographically
//! (odometer over objects), morphism images vary lexicographically over the
//! non-identity morphisms, components of transformations likewise. Every
//! candidate visited counts against the size cap.

use super::functor::{validate_functor, validate_nattransf, Functor, NatTransf};
use super::{CatRef, FiniteCategory, Hom, MorId, ObjId};
use crate::cap::{Cap, Counter};
use crate::Result;
use std::collections::BTreeMap;

/// All functors `dom → cod`, in canonical order.
pub fn all_functors(dom: &CatRef, cod: &CatRef, cap: Cap) -> Result<Vec<Functor>> {
    let mut counter = Counter::new(cap, "all_functors");
    let mut out = Vec::new();

    if dom.object_count() == 0 {
        counter.tick()?;
        out.push(Functor::new(dom.clone(), cod.clone(), vec![], vec![]));
        return Ok(out);
    }
    if cod.object_count() == 0 {
        return Ok(out);
    }

    let non_identity: Vec<MorId> = dom.morphisms().filter(|&m| !dom.is_identity(m)).collect();
    let mut obj_map = vec![ObjId(0); dom.object_count()];
    'obj: loop {
        // Candidate images per non-identity morphism under this object map.
        let choices: Vec<Vec<MorId>> = non_identity
            .iter()
            .map(|&m| cod.hom(obj_map[dom.src(m).0], obj_map[dom.dst(m).0]))
            .collect();
        if choices.iter().all(|c| !c.is_empty()) {
            let mut pick = vec![0usize; non_identity.len()];
            'mor: loop {
                counter.tick()?;
                let mut mor_map = vec![MorId(0); dom.morphism_count()];
                for x in dom.objects() {
                    mor_map[dom.identity(x).0] = cod.identity(obj_map[x.0]);
                }
                for (i, &m) in non_identity.iter().enumerate() {
                    mor_map[m.0] = choices[i][pick[i]];
                }
                let cand = Functor::new(dom.clone(), cod.clone(), obj_map.clone(), mor_map);
                if validate_functor(&cand).is_clean() {
                    out.push(cand);
                }
                // Advance the morphism-image odometer.
                let mut i = non_identity.len();
                loop {
                    if i == 0 {
                        break 'mor;
                    }
                    i -= 1;
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        break;
                    }
                    pick[i] = 0;
                }
            }
        } else {
            counter.tick()?;
        }
        // Advance the object-map odometer.
        let mut i = obj_map.len();
        loop {
            if i == 0 {
                break 'obj;
            }
            i -= 1;
            obj_map[i].0 += 1;
            if obj_map[i].0 < cod.object_count() {
                break;
            }
            obj_map[i] = ObjId(0);
        }
    }
    Ok(out)
}

/// All natural transformations `f ⇒ g`, in canonical component order.
pub fn all_nat_transfs(f: &Functor, g: &Functor, cap: Cap) -> Result<Vec<NatTransf>> {
    assert_eq!(f.dom(), g.dom());
    assert_eq!(f.cod(), g.cod());
    let dom = f.dom();
    let cod = f.cod();
    let mut counter = Counter::new(cap, "all_nat_transfs");
    let mut out = Vec::new();

    if dom.object_count() == 0 {
        counter.tick()?;
        out.push(NatTransf::new(f.clone(), g.clone(), vec![]));
        return Ok(out);
    }
    let choices: Vec<Vec<MorId>> = dom
        .objects()
        .map(|x| cod.hom(f.on_obj(x), g.on_obj(x)))
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut pick = vec![0usize; choices.len()];
    loop {
        counter.tick()?;
        let components: Vec<MorId> = pick.iter().enumerate().map(|(i, &p)| choices[i][p]).collect();
        let cand = NatTransf::new(f.clone(), g.clone(), components);
        if validate_nattransf(&cand).is_clean() {
            out.push(cand);
        }
        let mut i = pick.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// The functor category `[C, D]` together with the tables linking its
/// indices back to concrete functors and transformations.
#[derive(Debug, Clone)]
pub struct FunctorCategory {
    pub cat: CatRef,
    pub objects: Vec<Functor>,
    pub morphisms: Vec<NatTransf>,
    obj_index: BTreeMap<(Vec<ObjId>, Vec<MorId>), ObjId>,
    mor_index: BTreeMap<(ObjId, ObjId, Vec<MorId>), MorId>,
}

impl FunctorCategory {
    pub fn object_of(&self, f: &Functor) -> Option<ObjId> {
        self.obj_index.get(&(f.obj_map().to_vec(), f.mor_map().to_vec())).copied()
    }

    pub fn morphism_of(&self, a: &NatTransf) -> Option<MorId> {
        let s = self.object_of(a.src())?;
        let d = self.object_of(a.dst())?;
        self.mor_index.get(&(s, d, a.components().to_vec())).copied()
    }

    pub fn functor_at(&self, o: ObjId) -> &Functor {
        &self.objects[o.0]
    }

    pub fn transf_at(&self, m: MorId) -> &NatTransf {
        &self.morphisms[m.0]
    }
}

/// Build `[C, D]`: objects are all functors, morphisms all natural
/// transformations, composition is componentwise.
pub fn functor_category(dom: &CatRef, cod: &CatRef, cap: Cap) -> Result<FunctorCategory> {
    let functors = all_functors(dom, cod, cap)?;
    let mut counter = Counter::new(cap, "functor_category");

    let mut morphisms = Vec::new();
    let mut homs: Vec<(ObjId, ObjId)> = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for a in all_nat_transfs(f, g, cap)? {
                counter.tick()?;
                morphisms.push(a);
                homs.push((ObjId(i), ObjId(j)));
            }
        }
    }

    let mut obj_index = BTreeMap::new();
    for (i, f) in functors.iter().enumerate() {
        obj_index.insert((f.obj_map().to_vec(), f.mor_map().to_vec()), ObjId(i));
    }
    let mut mor_index = BTreeMap::new();
    for (i, a) in morphisms.iter().enumerate() {
        let key = (homs[i].0, homs[i].1, a.components().to_vec());
        mor_index.insert(key, MorId(i));
    }

    let mut identities = Vec::with_capacity(functors.len());
    for (i, f) in functors.iter().enumerate() {
        let id = NatTransf::identity(f);
        let key = (ObjId(i), ObjId(i), id.components().to_vec());
        identities.push(*mor_index.get(&key).expect("identity transformation enumerated"));
    }

    let homs_data: Vec<Hom> = homs.iter().map(|&(s, d)| Hom { src: s, dst: d }).collect();
    let mut composites = Vec::new();
    for (i, a) in morphisms.iter().enumerate() {
        for (j, b) in morphisms.iter().enumerate() {
            if homs[i].1 != homs[j].0 {
                continue;
            }
            let c = a.then(b);
            let key = (homs[i].0, homs[j].1, c.components().to_vec());
            let k = *mor_index.get(&key).expect("composite transformation enumerated");
            composites.push((MorId(i), MorId(j), k));
        }
    }

    let cat = FiniteCategory::from_parts(functors.len(), homs_data, identities, &composites).shared();
    Ok(FunctorCategory { cat, objects: functors, morphisms, obj_index, mor_index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cap::Cap;
    use crate::corpus;
    use crate::fincat::validate_category;

    #[test]
    fn functor_category_two_two() {
        let two = corpus::walking_arrow().shared();
        let fc = functor_category(&two, &two, Cap::default()).unwrap();
        // Poset 00 ≤ 01 ≤ 11: three objects, three non-identity arrows.
        assert_eq!(fc.cat.object_count(), 3);
        assert_eq!(fc.cat.morphism_count(), 6);
        assert!(validate_category(&fc.cat).is_clean());
    }

    #[test]
    fn functor_category_point_evaluates() {
        let one = corpus::terminal().shared();
        let two = corpus::walking_arrow().shared();
        let fc = functor_category(&one, &two, Cap::default()).unwrap();
        assert_eq!(fc.cat.object_count(), two.object_count());
        assert_eq!(fc.cat.morphism_count(), two.morphism_count());
    }

    #[test]
    fn functor_category_empty_domain_is_terminal() {
        let empty = corpus::empty().shared();
        let two = corpus::walking_arrow().shared();
        let fc = functor_category(&empty, &two, Cap::default()).unwrap();
        assert_eq!(fc.cat.object_count(), 1);
        assert_eq!(fc.cat.morphism_count(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let two = corpus::walking_arrow().shared();
        let err = functor_category(&two, &two, Cap(2));
        assert!(err.is_err());
    }

    #[test]
    fn object_count_matches_naive_recount() {
        // Independent recount: filter raw (obj-map, mor-map) candidates by a
        // direct law check, without going through Functor machinery.
        let dom = corpus::walking_iso().shared();
        let cod = corpus::walking_arrow().shared();
        let fc = functor_category(&dom, &cod, Cap::default()).unwrap();

        let mut count = 0usize;
        let n_obj = dom.object_count();
        let n_mor = dom.morphism_count();
        let total_obj_maps = cod.object_count().pow(n_obj as u32);
        for code in 0..total_obj_maps {
            let mut rem = code;
            let mut omap = Vec::with_capacity(n_obj);
            for _ in 0..n_obj {
                omap.push(ObjId(rem % cod.object_count()));
                rem /= cod.object_count();
            }
            let total_mor_maps = cod.morphism_count().pow(n_mor as u32);
            'mm: for mcode in 0..total_mor_maps {
                let mut rem = mcode;
                let mut mmap = Vec::with_capacity(n_mor);
                for _ in 0..n_mor {
                    mmap.push(MorId(rem % cod.morphism_count()));
                    rem /= cod.morphism_count();
                }
                for m in dom.morphisms() {
                    let fm = mmap[m.0];
                    if cod.src(fm) != omap[dom.src(m).0] || cod.dst(fm) != omap[dom.dst(m).0] {
                        continue 'mm;
                    }
                }
                for x in dom.objects() {
                    if mmap[dom.identity(x).0] != cod.identity(omap[x.0]) {
                        continue 'mm;
                    }
                }
                for (a, b, c) in dom.composites() {
                    if cod.then(mmap[a.0], mmap[b.0]) != Some(mmap[c.0]) {
                        continue 'mm;
                    }
                }
                count += 1;
            }
        }
        assert_eq!(fc.cat.object_count(), count);
    }
}
