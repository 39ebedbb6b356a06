//! Isomorphism testing for small groups and central-quotient classification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::families::{direct_product, make_family, semidirect_cyclic, FamilyKind};
use crate::group::FiniteGroup;
use crate::subgroup::{center, commutator_subgroup, element_order_histogram, quotient, GroupHom, Subgroup};

pub const DEFAULT_ISO_THRESHOLD: usize = 100;

/// Isomorphism invariants. Equal fingerprints are necessary, not sufficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub class_sizes: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        Fingerprint {
            order: g.order(),
            abelian: g.is_abelian(),
            center_order: center(g).size(),
            derived_order: commutator_subgroup(g, &Subgroup::whole(g)).size(),
            order_histogram: element_order_histogram(g),
            class_sizes: conjugacy_class_sizes(g),
        }
    }
}

/// Sizes of the conjugacy classes, ascending.
pub fn conjugacy_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut seen = ElementSet::empty(g.order());
    let mut sizes = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        let class = ElementSet::from_indices(g.order(), g.elements().map(|y| g.conjugate(x, y)));
        seen.union_with(&class);
        sizes.push(class.count());
    }
    sizes.sort_unstable();
    sizes
}

/// Greedy generating sequence: repeatedly the lowest index outside the
/// subgroup generated so far.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = Subgroup::trivial(g);
    while let Some(x) = reached.bits().complement().first() {
        gens.push(x);
        reached = Subgroup::generated(g, &gens);
    }
    gens
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<GroupHom>> {
    is_isomorphic_with_threshold(a, b, DEFAULT_ISO_THRESHOLD)
}

/// Returns a verified isomorphism `a → b` if one exists.
pub fn is_isomorphic_with_threshold(a: &FiniteGroup, b: &FiniteGroup, threshold: usize) -> Result<Option<GroupHom>> {
    let size = a.order().max(b.order());
    if size > threshold {
        return Err(GroupError::ExceedsThreshold {
            what: "isomorphism test",
            size,
            threshold,
        });
    }
    if Fingerprint::of(a) != Fingerprint::of(b) {
        return Ok(None);
    }
    let gens = greedy_generators(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = a.element_order(x);
            b.elements().filter(|&y| b.element_order(y) == ord).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let found = backtrack(a, b, &gens, &candidates, &mut images);
    Ok(found.filter(|hom| hom.is_bijective() && hom.respects(a, b)))
}

fn backtrack(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<GroupHom> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(a, b, gens, images)?;
        return Some(GroupHom {
            source_order: a.order(),
            target_order: b.order(),
            image: map,
        });
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend(a, b, &gens[..=depth], images).is_some() {
            if let Some(hom) = backtrack(a, b, gens, candidates, images) {
                return Some(hom);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` along right multiplication by generators.
/// Fails if two paths disagree or two elements collide; on success the map is
/// an injective homomorphism on the generated subgroup (unset entries are
/// `usize::MAX`).
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut hit = ElementSet::empty(b.order());
    map[a.identity()] = b.identity();
    hit.insert(b.identity());
    let mut frontier = vec![a.identity()];
    while let Some(x) = frontier.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let src = a.mul(x, g);
            let dst = b.mul(map[x], h);
            if map[src] == usize::MAX {
                if !hit.insert(dst) {
                    return None;
                }
                map[src] = dst;
                frontier.push(src);
            } else if map[src] != dst {
                return None;
            }
        }
    }
    Some(map)
}

/// Where `G/Z(G)` falls among the four 9-centralizer quotient classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuotientClass {
    #[serde(rename = "Q14_C7xC2")]
    Q14,
    #[serde(rename = "Q21_C7xC3")]
    Q21,
    #[serde(rename = "Q42_Frob67")]
    Q42,
    #[serde(rename = "Q49_C7xC7")]
    Q49,
    #[serde(rename = "ABELIAN")]
    Abelian,
    #[serde(rename = "OTHER")]
    Other,
}

impl QuotientClass {
    pub fn tag(self) -> &'static str {
        match self {
            QuotientClass::Q14 => "Q14_C7xC2",
            QuotientClass::Q21 => "Q21_C7xC3",
            QuotientClass::Q42 => "Q42_Frob67",
            QuotientClass::Q49 => "Q49_C7xC7",
            QuotientClass::Abelian => "ABELIAN",
            QuotientClass::Other => "OTHER",
        }
    }

    /// One of the four classes of 9-centralizer groups.
    pub fn is_nine_class(self) -> bool {
        matches!(
            self,
            QuotientClass::Q14 | QuotientClass::Q21 | QuotientClass::Q42 | QuotientClass::Q49
        )
    }

    /// The classes of primitive 9-centralizer groups.
    pub fn is_primitive_class(self) -> bool {
        matches!(self, QuotientClass::Q14 | QuotientClass::Q21 | QuotientClass::Q42)
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for QuotientClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            QuotientClass::Q14,
            QuotientClass::Q21,
            QuotientClass::Q42,
            QuotientClass::Q49,
            QuotientClass::Abelian,
            QuotientClass::Other,
        ]
        .into_iter()
        .find(|c| c.tag() == s)
        .ok_or_else(|| format!("unknown quotient class {s:?}"))
    }
}

struct References {
    c7_c2: FiniteGroup,
    c7_c3: FiniteGroup,
    frob42: FiniteGroup,
    c7_c7: FiniteGroup,
}

fn references() -> &'static References {
    static REFS: OnceLock<References> = OnceLock::new();
    REFS.get_or_init(|| {
        let c7 = make_family(FamilyKind::Cyclic, 7).unwrap();
        References {
            c7_c2: make_family(FamilyKind::Dihedral, 14).unwrap(),
            c7_c3: semidirect_cyclic(7, 3, 2).unwrap(),
            frob42: semidirect_cyclic(7, 6, 3).unwrap(),
            c7_c7: direct_product(&c7, &c7).unwrap(),
        }
    })
}

pub fn classify_central_quotient(g: &FiniteGroup) -> Result<QuotientClass> {
    classify_central_quotient_with_threshold(g, DEFAULT_ISO_THRESHOLD)
}

/// Classifies `G/Z(G)`. Only quotients of order 14, 21, 42 or 49 need an
/// isomorphism test, so larger quotients never hit the threshold.
pub fn classify_central_quotient_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<QuotientClass> {
    let (q, _) = quotient(g, &center(g))?;
    classify_quotient_group(&q, threshold)
}

/// Classifies an already-formed central quotient.
pub fn classify_quotient_group(q: &FiniteGroup, threshold: usize) -> Result<QuotientClass> {
    let refs = references();
    if q.is_abelian() {
        if q.order() == 49 && q.exponent() == 7 {
            if cfg!(debug_assertions) {
                debug_assert!(is_isomorphic_with_threshold(q, &refs.c7_c7, threshold.max(49))?.is_some());
            }
            return Ok(QuotientClass::Q49);
        }
        return Ok(QuotientClass::Abelian);
    }
    let (reference, class) = match q.order() {
        14 => (&refs.c7_c2, QuotientClass::Q14),
        21 => (&refs.c7_c3, QuotientClass::Q21),
        42 => (&refs.frob42, QuotientClass::Q42),
        _ => return Ok(QuotientClass::Other),
    };
    Ok(if is_isomorphic_with_threshold(q, reference, threshold)?.is_some() {
        class
    } else {
        QuotientClass::Other
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(kind: FamilyKind, p: u64) -> FiniteGroup {
        make_family(kind, p).unwrap()
    }

    #[test]
    fn cyclic_six_vs_product() {
        let c6 = fam(FamilyKind::Cyclic, 6);
        let prod = direct_product(&fam(FamilyKind::Cyclic, 2), &fam(FamilyKind::Cyclic, 3)).unwrap();
        let hom = is_isomorphic(&c6, &prod).unwrap().unwrap();
        assert!(hom.respects(&c6, &prod) && hom.is_bijective());
    }

    #[test]
    fn twists_of_order_three_agree() {
        let a = semidirect_cyclic(7, 3, 2).unwrap();
        let b = semidirect_cyclic(7, 3, 4).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn d8_vs_q8() {
        let d8 = fam(FamilyKind::Dihedral, 8);
        let q8 = fam(FamilyKind::Dicyclic, 8);
        assert_ne!(Fingerprint::of(&d8), Fingerprint::of(&q8));
        assert!(is_isomorphic(&d8, &q8).unwrap().is_none());
    }

    #[test]
    fn products_with_c2() {
        let a = direct_product(&fam(FamilyKind::Dihedral, 8), &fam(FamilyKind::Cyclic, 2)).unwrap();
        let b = direct_product(&fam(FamilyKind::Dicyclic, 8), &fam(FamilyKind::Cyclic, 2)).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
        assert!(is_isomorphic(&a, &a).unwrap().is_some());
    }

    #[test]
    fn iso_threshold() {
        let g = fam(FamilyKind::Cyclic, 101);
        assert!(matches!(
            is_isomorphic(&g, &g),
            Err(GroupError::ExceedsThreshold { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_central_quotient(&fam(FamilyKind::Heisenberg, 7)).unwrap(),
            QuotientClass::Q49
        );
        let d14c5 = direct_product(&fam(FamilyKind::Dihedral, 14), &fam(FamilyKind::Cyclic, 5)).unwrap();
        assert_eq!(classify_central_quotient(&d14c5).unwrap(), QuotientClass::Q14);
        assert_eq!(
            classify_central_quotient(&fam(FamilyKind::Cyclic, 12)).unwrap(),
            QuotientClass::Abelian
        );
        assert_eq!(
            classify_central_quotient(&fam(FamilyKind::Symmetric, 4)).unwrap(),
            QuotientClass::Other
        );
        assert_eq!(
            classify_central_quotient(&semidirect_cyclic(7, 3, 2).unwrap()).unwrap(),
            QuotientClass::Q21
        );
        assert_eq!(
            classify_central_quotient(&semidirect_cyclic(7, 6, 3).unwrap()).unwrap(),
            QuotientClass::Q42
        );
        // C7:C6 acting by inversion has center of order 3 and quotient D14;
        // acting by an element of order 3 it has center of order 2.
        assert_eq!(
            classify_central_quotient(&semidirect_cyclic(7, 6, 6).unwrap()).unwrap(),
            QuotientClass::Q14
        );
        assert_eq!(
            classify_central_quotient(&semidirect_cyclic(7, 6, 2).unwrap()).unwrap(),
            QuotientClass::Q21
        );
    }

    #[test]
    fn c7xc7_is_a_class_not_a_member() {
        let c7 = fam(FamilyKind::Cyclic, 7);
        let g = direct_product(&c7, &c7).unwrap();
        assert_eq!(classify_central_quotient(&g).unwrap(), QuotientClass::Abelian);
        assert_eq!(crate::centralizers::cent_count(&g), 1);
    }

    #[test]
    fn tags_round_trip() {
        for c in [QuotientClass::Q14, QuotientClass::Q49, QuotientClass::Other] {
            assert_eq!(c.tag().parse::<QuotientClass>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.tag()));
        }
    }
}
