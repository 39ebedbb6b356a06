//! Subgroups as certified bit-vectors, quotients and derived series.

use std::collections::{BTreeMap, HashSet};

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;

/// Default order limit for [`all_subgroups`]. The join closure does roughly
/// `S·C·|G|` work for `S` subgroups and `C` cyclic subgroups; at order 200 that
/// stays well under a second for every family in the corpus.
pub const DEFAULT_SUBGROUP_THRESHOLD: usize = 200;

/// An element set certified to be closed under the group operation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    bits: ElementSet,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(size={}, {:?})", self.size(), self.bits)
    }
}

impl Subgroup {
    /// Certifies `bits` as a subgroup of `g`.
    pub fn new(g: &FiniteGroup, bits: ElementSet) -> Result<Self> {
        if bits.universe() != g.order() || !bits.contains(g.identity()) {
            return Err(GroupError::NotSubgroup);
        }
        let members: Vec<usize> = bits.iter().collect();
        for &a in &members {
            if !bits.contains(g.inv(a)) {
                return Err(GroupError::NotSubgroup);
            }
            for &b in &members {
                if !bits.contains(g.mul(a, b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        let sub = Subgroup { bits };
        assert_eq!(g.order() % sub.size(), 0, "Lagrange violated");
        Ok(sub)
    }

    #[cfg(test)]
    pub(crate) fn from_closed(bits: ElementSet) -> Self {
        Subgroup { bits }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            bits: ElementSet::from_indices(g.order(), [g.identity()]),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            bits: ElementSet::full(g.order()),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let start = ElementSet::from_indices(g.order(), [g.identity()]);
        Subgroup {
            bits: close(g, start, gens),
        }
    }

    pub fn bits(&self) -> &ElementSet {
        &self.bits
    }

    pub fn size(&self) -> usize {
        self.bits.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn is_whole(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    pub fn index(&self) -> usize {
        self.bits.universe() / self.size()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            bits: self.bits.intersection(&other.bits),
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let members: Vec<usize> = self.elements().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.commute(a, b)))
    }

    /// `x·H·x⁻¹`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup {
            bits: ElementSet::from_indices(g.order(), self.elements().map(|h| g.conjugate(h, x))),
        }
    }

    /// `Ok(())` when normal, otherwise the first conjugating element that moves it.
    pub fn check_normal(&self, g: &FiniteGroup) -> Result<()> {
        for x in g.elements() {
            if self.elements().any(|h| !self.contains(g.conjugate(h, x))) {
                return Err(GroupError::NotNormal { element: x });
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.check_normal(g).is_ok()
    }
}

/// Smallest subgroup containing `start` (assumed closed) and `gens`.
fn close(g: &FiniteGroup, mut reached: ElementSet, gens: &[usize]) -> ElementSet {
    let mut frontier: Vec<usize> = reached.iter().collect();
    while let Some(x) = frontier.pop() {
        for &h in gens {
            let y = g.mul(x, h);
            if reached.insert(y) {
                frontier.push(y);
            }
        }
    }
    reached
}

/// `C(x) = {g : gx = xg}`
pub fn centralizer(g: &FiniteGroup, x: usize) -> Result<Subgroup> {
    g.check_element(x)?;
    Ok(Subgroup {
        bits: ElementSet::from_indices(g.order(), g.elements().filter(|&y| g.commute(x, y))),
    })
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let n = g.order();
    Subgroup {
        bits: ElementSet::from_indices(n, g.elements().filter(|&z| g.elements().all(|y| g.commute(z, y)))),
    }
}

/// Every subgroup of `g`, sorted by size and then bit pattern.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    all_subgroups_with_threshold(g, DEFAULT_SUBGROUP_THRESHOLD)
}

pub fn all_subgroups_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<Vec<Subgroup>> {
    if g.order() > threshold {
        return Err(GroupError::ExceedsThreshold {
            what: "subgroup enumeration",
            size: g.order(),
            threshold,
        });
    }
    // Cyclic subgroups, one generator each (lowest index wins).
    let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements() {
        let s = Subgroup::generated(g, &[x]).bits;
        if seen_cyclic.insert(s.clone()) {
            cyclic.push((x, s));
        }
    }
    cyclic.sort_by(|a, b| (a.1.count(), &a.1).cmp(&(b.1.count(), &b.1)));

    // Every subgroup is a join of cyclic subgroups, so closing the list under
    // "join with one more cyclic subgroup" reaches the full lattice.
    let mut found: Vec<(Vec<usize>, ElementSet)> = cyclic.iter().map(|(x, s)| (vec![*x], s.clone())).collect();
    let mut seen: HashSet<ElementSet> = found.iter().map(|(_, s)| s.clone()).collect();
    let mut next = 0;
    while next < found.len() {
        let (gens, bits) = found[next].clone();
        next += 1;
        for (c, cbits) in &cyclic {
            if cbits.is_subset(&bits) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*c);
            let joined = close(g, bits.clone(), &joined_gens);
            if seen.insert(joined.clone()) {
                found.push((joined_gens, joined));
            }
        }
    }
    let mut subs: Vec<Subgroup> = found.into_iter().map(|(_, bits)| Subgroup { bits }).collect();
    subs.sort_by(|a, b| (a.size(), &a.bits).cmp(&(b.size(), &b.bits)));
    Ok(subs)
}

/// Closure of all commutators `[a, b]` with `a, b ∈ h`.
pub fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = h.elements().collect();
    let mut comms = ElementSet::empty(g.order());
    for &a in &members {
        for &b in &members {
            comms.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<usize> = comms.iter().collect();
    Subgroup::generated(g, &gens)
}

/// `G ⊇ G' ⊇ G'' ⊇ …`, stopping at the first repeated term.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap());
        if &next == series.last().unwrap() {
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

pub fn element_order_histogram(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        *hist.entry(g.element_order(x)).or_insert(0) += 1;
    }
    hist
}

/// A map between element indices of two groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub source_order: usize,
    pub target_order: usize,
    pub image: Vec<usize>,
}

impl GroupHom {
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn respects(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.source_order == source.order()
            && self.target_order == target.order()
            && self.image[source.identity()] == target.identity()
            && source.elements().all(|a| {
                source
                    .elements()
                    .all(|b| self.image[source.mul(a, b)] == target.mul(self.image[a], self.image[b]))
            })
    }

    pub fn is_surjective(&self) -> bool {
        let hit = ElementSet::from_indices(self.target_order, self.image.iter().copied());
        hit.is_full()
    }

    pub fn is_bijective(&self) -> bool {
        self.source_order == self.target_order && self.is_surjective()
    }
}

/// `G/N` on cosets ordered by their minimal element, plus the projection.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    // Recertify: callers may hand in arbitrary bit patterns.
    let n = Subgroup::new(g, n.bits.clone())?;
    n.check_normal(g)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for h in n.elements() {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    let q_order = reps.len();
    let identity = coset_of[g.identity()];
    let name = if n.is_trivial() {
        g.name().to_string()
    } else {
        format!("{}/N{}", g.name(), n.size())
    };
    let q = FiniteGroup::from_fn(name, q_order, identity, usize::MAX, |a, b| {
        coset_of[g.mul(reps[a], reps[b])]
    })?;
    let hom = GroupHom {
        source_order: g.order(),
        target_order: q_order,
        image: coset_of,
    };
    Ok((q, hom))
}
