//! JSON documents for categories, functors, transformations, adjunctions,
//! descent data, coalgebras, and diagrams, plus the manifest format.
//!
//! Emission is canonical: fixed field order, composites sorted by `(f, g)`,
//! two-space indentation. `emit(parse(d)) == emit(value)` for every valid
//! document, and reports built from these values are byte-stable.

use crate::fincat::{
    validate_category, validate_functor, validate_nattransf, CatRef, FiniteCategory, Functor, Hom,
    MorId, NatTransf, ObjId,
};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryDoc {
    pub kind: String, // "category"
    pub objects: usize,
    /// Every morphism listed explicitly, identities included.
    pub morphisms: Vec<[usize; 2]>,
    pub identities: Vec<usize>,
    /// Composition as triples [f, g, g_after_f], sorted by (f, g).
    pub compose: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorDoc {
    pub kind: String, // "functor"
    pub dom: CategoryDoc,
    pub cod: CategoryDoc,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NatTransfDoc {
    pub kind: String, // "nattransf"
    pub src: FunctorDoc,
    pub dst: FunctorDoc,
    pub components: Vec<usize>,
}

/// Adjunction bundle: the four constituents, codomain categories implied.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AdjunctionDoc {
    pub kind: String, // "adjunction"
    pub left: FunctorDoc,
    pub right: FunctorDoc,
    pub unit: NatTransfDoc,
    pub counit: NatTransfDoc,
}

/// Commuting triangle input for `onedim dubuc`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TriangleDoc {
    pub kind: String, // "triangle"
    pub j: FunctorDoc,
    pub e_adjunction: AdjunctionDoc,
    pub l_adjunction: AdjunctionDoc,
}

/// Descent diagram bundle: three categories, six functors, five cells.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DescentDiagramDoc {
    pub kind: String, // "descent-diagram"
    pub a1: CategoryDoc,
    pub a2: CategoryDoc,
    pub a3: CategoryDoc,
    pub d0: FunctorDoc,
    pub d1: FunctorDoc,
    pub s0: FunctorDoc,
    pub p0: FunctorDoc,
    pub p1: FunctorDoc,
    pub p2: FunctorDoc,
    pub sigma01: NatTransfDoc,
    pub sigma02: NatTransfDoc,
    pub sigma12: NatTransfDoc,
    pub n0: NatTransfDoc,
    pub n1: NatTransfDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DescentConeDoc {
    pub kind: String, // "descent-cone"
    pub base: DescentDiagramDoc,
    pub apex: CategoryDoc,
    pub d: FunctorDoc,
    pub theta: NatTransfDoc,
}

/// Pseudocoalgebra document over a named comonad.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoalgebraDoc {
    pub kind: String, // "pseudocoalgebra"
    /// Comonad selector, e.g. "identity" or "product:<inline category>".
    pub comonad: ComonadSelector,
    pub carrier: CategoryDoc,
    pub rho: FunctorDoc,
    pub sigma: NatTransfDoc,
    pub omega: NatTransfDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum ComonadSelector {
    Identity,
    Product { factor: CategoryDoc },
}

/// Cat-valued diagram on a finite index category.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatDiagramDoc {
    pub kind: String, // "cat-diagram"
    pub index: CategoryDoc,
    pub on_objects: Vec<CategoryDoc>,
    pub on_morphisms: Vec<FunctorDoc>,
}

/// Named references resolving to documents on disk.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Manifest {
    pub kind: String, // "manifest"
    pub documents: BTreeMap<String, String>,
    #[serde(default)]
    pub comonad: Option<String>,
    #[serde(default)]
    pub cap: Option<usize>,
    #[serde(default)]
    pub probes: Option<Vec<String>>,
}

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

pub fn category_to_doc(c: &FiniteCategory) -> CategoryDoc {
    let mut compose: Vec<[usize; 3]> = c
        .composites()
        .into_iter()
        .map(|(f, g, h)| [f.0, g.0, h.0])
        .collect();
    compose.sort_unstable();
    CategoryDoc {
        kind: "category".into(),
        objects: c.object_count(),
        morphisms: c.morphisms().map(|m| [c.src(m).0, c.dst(m).0]).collect(),
        identities: (0..c.object_count()).map(|i| c.identity(ObjId(i)).0).collect(),
        compose,
    }
}

pub fn category_from_doc(doc: &CategoryDoc) -> Result<FiniteCategory> {
    if doc.kind != "category" {
        return Err(Error::Invalid(format!("expected kind=category, got {}", doc.kind)));
    }
    let n_mor = doc.morphisms.len();
    for (i, m) in doc.morphisms.iter().enumerate() {
        if m[0] >= doc.objects || m[1] >= doc.objects {
            return Err(Error::Invalid(format!("morphism {i} endpoint out of range")));
        }
    }
    for &[f, g, h] in &doc.compose {
        if f >= n_mor || g >= n_mor || h >= n_mor {
            return Err(Error::Invalid(format!("compose triple [{f}, {g}, {h}] out of range")));
        }
    }
    if doc.identities.len() != doc.objects {
        return Err(Error::Invalid("identities must list one morphism per object".into()));
    }
    let morphisms = doc
        .morphisms
        .iter()
        .map(|m| Hom { src: ObjId(m[0]), dst: ObjId(m[1]) })
        .collect();
    let identities = doc.identities.iter().map(|&i| MorId(i)).collect();
    let composites: Vec<_> = doc
        .compose
        .iter()
        .map(|&[f, g, h]| (MorId(f), MorId(g), MorId(h)))
        .collect();
    let cat = FiniteCategory::from_parts(doc.objects, morphisms, identities, &composites);
    let report = validate_category(&cat);
    if !report.is_clean() {
        return Err(Error::invalid(&report));
    }
    Ok(cat)
}

pub fn functor_to_doc(f: &Functor) -> FunctorDoc {
    FunctorDoc {
        kind: "functor".into(),
        dom: category_to_doc(f.dom()),
        cod: category_to_doc(f.cod()),
        obj_map: f.obj_map().iter().map(|o| o.0).collect(),
        mor_map: f.mor_map().iter().map(|m| m.0).collect(),
    }
}

pub fn functor_from_doc(doc: &FunctorDoc) -> Result<Functor> {
    if doc.kind != "functor" {
        return Err(Error::Invalid(format!("expected kind=functor, got {}", doc.kind)));
    }
    let dom: CatRef = category_from_doc(&doc.dom)?.shared();
    let cod: CatRef = category_from_doc(&doc.cod)?.shared();
    functor_from_doc_between(doc, &dom, &cod)
}

/// Decode a functor document against already-decoded categories (so shared
/// categories stay pointer-shared and structurally identical).
pub fn functor_from_doc_between(doc: &FunctorDoc, dom: &CatRef, cod: &CatRef) -> Result<Functor> {
    let f = Functor::new(
        dom.clone(),
        cod.clone(),
        doc.obj_map.iter().map(|&o| ObjId(o)).collect(),
        doc.mor_map.iter().map(|&m| MorId(m)).collect(),
    );
    let report = validate_functor(&f);
    if !report.is_clean() {
        return Err(Error::invalid(&report));
    }
    Ok(f)
}

pub fn nattransf_to_doc(a: &NatTransf) -> NatTransfDoc {
    NatTransfDoc {
        kind: "nattransf".into(),
        src: functor_to_doc(a.src()),
        dst: functor_to_doc(a.dst()),
        components: a.components().iter().map(|c| c.0).collect(),
    }
}

pub fn nattransf_from_doc(doc: &NatTransfDoc) -> Result<NatTransf> {
    if doc.kind != "nattransf" {
        return Err(Error::Invalid(format!("expected kind=nattransf, got {}", doc.kind)));
    }
    let src = functor_from_doc(&doc.src)?;
    let dst_dom = src.dom().clone();
    let dst_cod = src.cod().clone();
    let dst = functor_from_doc_between(&doc.dst, &dst_dom, &dst_cod)?;
    let a = NatTransf::new(src, dst, doc.components.iter().map(|&c| MorId(c)).collect());
    let report = validate_nattransf(&a);
    if !report.is_clean() {
        return Err(Error::invalid(&report));
    }
    Ok(a)
}

/// Canonical JSON emission: serde_json pretty printing with stable field
/// order (struct order) and a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("json: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn category_roundtrip_is_byte_identical() {
        for c in [corpus::empty(), corpus::walking_iso(), corpus::chain(3), corpus::parallel_pair()] {
            let doc = category_to_doc(&c);
            let text = emit(&doc);
            let doc2: CategoryDoc = parse(&text).unwrap();
            let back = category_from_doc(&doc2).unwrap();
            assert_eq!(c, back);
            assert_eq!(text, emit(&category_to_doc(&back)));
        }
    }

    #[test]
    fn missing_composite_is_rejected_with_pair() {
        let c = corpus::walking_arrow();
        let mut doc = category_to_doc(&c);
        doc.compose.retain(|t| !(t[0] == 0 && t[1] == 2));
        let err = category_from_doc(&doc).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("table-totality") || msg.contains("violation"), "{msg}");
    }

    #[test]
    fn empty_category_document_parses() {
        let doc = category_to_doc(&corpus::empty());
        assert!(category_from_doc(&doc).is_ok());
    }
}
