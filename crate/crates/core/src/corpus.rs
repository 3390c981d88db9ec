//! Named small categories and document generators used by tests and the
//! `corpus regen` command.
//!
//! Index conventions are fixed here once and relied on everywhere:
//! * `walking_arrow` (2): objects 0,1; morphisms 0=id0, 1=id1, 2=a:0→1.
//! * `walking_iso` (I): objects 0,1; morphisms 0=id0, 1=id1, 2=u:0→1, 3=v:1→0.
//! * `parallel_pair`: objects 0,1; morphisms 0=id0, 1=id1, 2,3: 0→1.

use crate::fincat::{FiniteCategory, Hom, MorId, ObjId};

/// The empty category.
pub fn empty() -> FiniteCategory {
    FiniteCategory::from_parts(0, vec![], vec![], &[])
}

/// The terminal category 1.
pub fn terminal() -> FiniteCategory {
    FiniteCategory::from_parts(
        1,
        vec![Hom { src: ObjId(0), dst: ObjId(0) }],
        vec![MorId(0)],
        &[(MorId(0), MorId(0), MorId(0))],
    )
}

/// The walking arrow 2.
pub fn walking_arrow() -> FiniteCategory {
    let id = |x: usize| Hom { src: ObjId(x), dst: ObjId(x) };
    let morphisms = vec![id(0), id(1), Hom { src: ObjId(0), dst: ObjId(1) }];
    let composites = vec![
        (MorId(0), MorId(0), MorId(0)),
        (MorId(1), MorId(1), MorId(1)),
        (MorId(0), MorId(2), MorId(2)),
        (MorId(2), MorId(1), MorId(2)),
    ];
    FiniteCategory::from_parts(2, morphisms, vec![MorId(0), MorId(1)], &composites)
}

/// The walking isomorphism I.
pub fn walking_iso() -> FiniteCategory {
    let id = |x: usize| Hom { src: ObjId(x), dst: ObjId(x) };
    let morphisms = vec![
        id(0),
        id(1),
        Hom { src: ObjId(0), dst: ObjId(1) }, // u
        Hom { src: ObjId(1), dst: ObjId(0) }, // v
    ];
    let composites = vec![
        (MorId(0), MorId(0), MorId(0)),
        (MorId(1), MorId(1), MorId(1)),
        (MorId(0), MorId(2), MorId(2)),
        (MorId(2), MorId(1), MorId(2)),
        (MorId(1), MorId(3), MorId(3)),
        (MorId(3), MorId(0), MorId(3)),
        (MorId(2), MorId(3), MorId(0)), // v∘u = id0
        (MorId(3), MorId(2), MorId(1)), // u∘v = id1
    ];
    FiniteCategory::from_parts(2, morphisms, vec![MorId(0), MorId(1)], &composites)
}

/// Two parallel arrows 0 ⇉ 1 with no equalizing structure.
pub fn parallel_pair() -> FiniteCategory {
    let id = |x: usize| Hom { src: ObjId(x), dst: ObjId(x) };
    let arr = Hom { src: ObjId(0), dst: ObjId(1) };
    let morphisms = vec![id(0), id(1), arr, arr];
    let composites = vec![
        (MorId(0), MorId(0), MorId(0)),
        (MorId(1), MorId(1), MorId(1)),
        (MorId(0), MorId(2), MorId(2)),
        (MorId(2), MorId(1), MorId(2)),
        (MorId(0), MorId(3), MorId(3)),
        (MorId(3), MorId(1), MorId(3)),
    ];
    FiniteCategory::from_parts(2, morphisms, vec![MorId(0), MorId(1)], &composites)
}

/// The chain poset 0 < 1 < … < n-1.
pub fn chain(n: usize) -> FiniteCategory {
    let mut morphisms = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            index.insert((i, j), MorId(morphisms.len()));
            morphisms.push(Hom { src: ObjId(i), dst: ObjId(j) });
        }
    }
    let identities: Vec<MorId> = (0..n).map(|i| index[&(i, i)]).collect();
    let mut composites = Vec::new();
    for (&(i, j), &f) in &index {
        for (&(j2, k), &g) in &index {
            if j == j2 {
                composites.push((f, g, index[&(i, k)]));
            }
        }
    }
    FiniteCategory::from_parts(n, morphisms, identities, &composites)
}

/// Discrete category on n objects.
pub fn discrete(n: usize) -> FiniteCategory {
    let morphisms = (0..n).map(|i| Hom { src: ObjId(i), dst: ObjId(i) }).collect();
    let identities = (0..n).map(MorId).collect();
    let composites: Vec<_> = (0..n).map(|i| (MorId(i), MorId(i), MorId(i))).collect();
    FiniteCategory::from_parts(n, morphisms, identities, &composites)
}

/// Chaotic (indiscrete) category on n objects: exactly one morphism between
/// any ordered pair. Morphism x→y has index `x*n + y`.
pub fn chaotic(n: usize) -> FiniteCategory {
    let mut morphisms = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            morphisms.push(Hom { src: ObjId(x), dst: ObjId(y) });
        }
    }
    let identities = (0..n).map(|x| MorId(x * n + x)).collect();
    let mut composites = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                composites.push((MorId(x * n + y), MorId(y * n + z), MorId(x * n + z)));
            }
        }
    }
    FiniteCategory::from_parts(n, morphisms, identities, &composites)
}

/// The parallel pair with a terminal object glued on: objects 0,1,t with
/// f,g: 0⇉1, u: 0→t, w: 1→t, w∘f = w∘g = u. Still lacks an equalizer of
/// (f, g).
pub fn parallel_pair_with_terminal() -> FiniteCategory {
    let id = |x: usize| Hom { src: ObjId(x), dst: ObjId(x) };
    // 0=id0 1=id1 2=idt 3=f 4=g 5=u:0→t 6=w:1→t
    let morphisms = vec![
        id(0),
        id(1),
        id(2),
        Hom { src: ObjId(0), dst: ObjId(1) },
        Hom { src: ObjId(0), dst: ObjId(1) },
        Hom { src: ObjId(0), dst: ObjId(2) },
        Hom { src: ObjId(1), dst: ObjId(2) },
    ];
    let mut composites = vec![
        (MorId(0), MorId(0), MorId(0)),
        (MorId(1), MorId(1), MorId(1)),
        (MorId(2), MorId(2), MorId(2)),
        (MorId(0), MorId(3), MorId(3)),
        (MorId(3), MorId(1), MorId(3)),
        (MorId(0), MorId(4), MorId(4)),
        (MorId(4), MorId(1), MorId(4)),
        (MorId(0), MorId(5), MorId(5)),
        (MorId(5), MorId(2), MorId(5)),
        (MorId(1), MorId(6), MorId(6)),
        (MorId(6), MorId(2), MorId(6)),
    ];
    composites.push((MorId(3), MorId(6), MorId(5))); // w∘f = u
    composites.push((MorId(4), MorId(6), MorId(5))); // w∘g = u
    FiniteCategory::from_parts(3, morphisms, vec![MorId(0), MorId(1), MorId(2)], &composites)
}

/// One-object category on the cyclic group Z/2: morphisms 0=id, 1=m with
/// m∘m = id.
pub fn group_z2() -> FiniteCategory {
    let morphisms = vec![
        Hom { src: ObjId(0), dst: ObjId(0) },
        Hom { src: ObjId(0), dst: ObjId(0) },
    ];
    let composites = vec![
        (MorId(0), MorId(0), MorId(0)),
        (MorId(0), MorId(1), MorId(1)),
        (MorId(1), MorId(0), MorId(1)),
        (MorId(1), MorId(1), MorId(0)),
    ];
    FiniteCategory::from_parts(1, morphisms, vec![MorId(0)], &composites)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn all_corpus_categories_validate() {
        for c in [
            empty(),
            terminal(),
            walking_arrow(),
            walking_iso(),
            parallel_pair(),
            chain(3),
            chain(4),
            discrete(3),
            chaotic(2),
            parallel_pair_with_terminal(),
            group_z2(),
        ] {
            assert!(validate_category(&c).is_clean(), "{:?}", validate_category(&c));
        }
    }
}
