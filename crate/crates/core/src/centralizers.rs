//! Distinct element centralizers and the structural facts built on them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::clique::max_noncommuting_with_threshold;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{all_subgroups_with_threshold, center, centralizer, Subgroup};

/// Thresholds for the analyses whose cost grows quickly with group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Bound on `|G/Z(G)|` for the exact clique search.
    pub clique: usize,
    /// Bound on `|G|` for subgroup enumeration.
    pub subgroups: usize,
    /// Bound on group order for isomorphism testing.
    pub iso: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            clique: crate::clique::DEFAULT_CLIQUE_THRESHOLD,
            subgroups: crate::subgroup::DEFAULT_SUBGROUP_THRESHOLD,
            iso: crate::iso::DEFAULT_ISO_THRESHOLD,
        }
    }
}

/// The distinct centralizers `C(x)`, including `G = C(1)`, sorted by size and
/// then bit pattern.
pub fn cent_set(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    for x in g.elements() {
        // HashSet compares full contents on hash match.
        seen.insert(centralizer(g, x).expect("in range"));
    }
    let mut out: Vec<Subgroup> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.size(), a.bits()).cmp(&(b.size(), b.bits())));
    out
}

pub fn cent_count(g: &FiniteGroup) -> usize {
    cent_set(g).len()
}

/// True iff every centralizer of a non-central element is abelian.
pub fn is_ca(g: &FiniteGroup) -> bool {
    cent_set(g).iter().filter(|c| !c.is_whole()).all(|c| c.is_abelian(g))
}

/// Centralizer structure of a nonabelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentProfile {
    pub group: String,
    pub order: usize,
    pub center_order: usize,
    pub cent_count: usize,
    #[serde(skip)]
    pub proper_centralizers: Vec<Subgroup>,
    /// `|G : C|` over the distinct proper centralizers, ascending.
    #[serde(rename = "indices")]
    pub index_multiset: Vec<usize>,
    pub r: usize,
    pub is_ca: bool,
    #[serde(rename = "covers")]
    pub covers_group: bool,
    #[serde(rename = "pairwise_central")]
    pub pairwise_intersections_central: bool,
    /// `X1·X2 = G` for a proper centralizer `X1` of least index and `X2` of
    /// greatest index.
    #[serde(rename = "product_full")]
    pub product_is_group: bool,
}

pub fn cover_profile(g: &FiniteGroup) -> Result<CentProfile> {
    cover_profile_with_limits(g, &Limits::default())
}

pub fn cover_profile_with_limits(g: &FiniteGroup, limits: &Limits) -> Result<CentProfile> {
    if g.is_abelian() {
        return Err(GroupError::AbelianInput);
    }
    let cents = cent_set(g);
    let z = center(g);
    let mut proper: Vec<Subgroup> = cents.iter().filter(|c| !c.is_whole()).cloned().collect();
    proper.sort_by(|a, b| (a.index(), a.bits()).cmp(&(b.index(), b.bits())));
    let index_multiset: Vec<usize> = proper.iter().map(Subgroup::index).collect();

    let mut union = ElementSet::empty(g.order());
    for c in &proper {
        union.union_with(c.bits());
    }
    let covers_group = union.is_full();

    let pairwise_intersections_central = proper
        .iter()
        .enumerate()
        .all(|(i, a)| proper[i + 1..].iter().all(|b| a.intersection(b) == z));

    let x1 = proper.first().expect("nonabelian group has a proper centralizer");
    let x2 = proper.last().unwrap();
    let product_is_group = setwise_product(g, x1, x2).is_full();

    let r = max_noncommuting_with_threshold(g, limits.clique)?;
    let is_ca = proper.iter().all(|c| c.is_abelian(g));

    Ok(CentProfile {
        group: g.name().to_string(),
        order: g.order(),
        center_order: z.size(),
        cent_count: cents.len(),
        proper_centralizers: proper,
        index_multiset,
        r,
        is_ca,
        covers_group,
        pairwise_intersections_central,
        product_is_group,
    })
}

/// `{a·b : a ∈ A, b ∈ B}`
pub fn setwise_product(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> ElementSet {
    let right: Vec<usize> = b.elements().collect();
    let mut out = ElementSet::empty(g.order());
    for x in a.elements() {
        for &y in &right {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Three proper subgroups whose union is `G` but whose common intersection
/// does not have index 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverViolation {
    pub sizes: [usize; 3],
    pub intersection_size: usize,
}

pub fn three_cover_index(g: &FiniteGroup) -> Result<Vec<CoverViolation>> {
    three_cover_index_with_threshold(g, crate::subgroup::DEFAULT_SUBGROUP_THRESHOLD)
}

/// Scans every triple of proper subgroups covering `G`; each must meet in a
/// subgroup of index 4.
pub fn three_cover_index_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<Vec<CoverViolation>> {
    let proper: Vec<Subgroup> = all_subgroups_with_threshold(g, threshold)?
        .into_iter()
        .filter(|s| !s.is_whole())
        .collect();
    let n = g.order();
    let mut violations = Vec::new();
    // Sorted by size: once the three largest candidates cannot reach |G|
    // elements (they share at least the identity), skip.
    for i in 0..proper.len() {
        for j in i + 1..proper.len() {
            let ab = proper[i].bits().union(proper[j].bits());
            let ab_count = ab.count();
            for c in &proper[j + 1..] {
                if ab_count + c.size() <= n {
                    continue;
                }
                let mut all = ab.clone();
                all.union_with(c.bits());
                if !all.is_full() {
                    continue;
                }
                let meet = proper[i].intersection(&proper[j]).intersection(c);
                if n / meet.size() != 4 {
                    violations.push(CoverViolation {
                        sizes: [proper[i].size(), proper[j].size(), c.size()],
                        intersection_size: meet.size(),
                    });
                }
            }
        }
    }
    Ok(violations)
}
