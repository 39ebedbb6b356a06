//! Frobenius complement and kernel detection by subgroup enumeration.

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::subgroup::{all_subgroups_with_threshold, Subgroup, DEFAULT_SUBGROUP_THRESHOLD};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

pub fn is_frobenius(g: &FiniteGroup) -> Result<Option<FrobeniusWitness>> {
    is_frobenius_with_threshold(g, DEFAULT_SUBGROUP_THRESHOLD)
}

/// Searches subgroups in ascending (size, bits) order for a malnormal proper
/// nontrivial `H`, i.e. `H ∩ gHg⁻¹ = 1` for every `g ∉ H`. The kernel is the
/// complement of all conjugates of `H` with the identity put back, and is
/// certified as a normal subgroup of order `|G|/|H|` before being returned.
pub fn is_frobenius_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<Option<FrobeniusWitness>> {
    let subs = all_subgroups_with_threshold(g, threshold)?;
    for h in subs.iter().filter(|h| !h.is_trivial() && !h.is_whole()) {
        let mut conjugate_union = ElementSet::empty(g.order());
        let mut malnormal = true;
        for x in g.elements() {
            let conj = h.conjugate(g, x);
            if !h.contains(x) && !conj.intersection(h).is_trivial() {
                malnormal = false;
                break;
            }
            conjugate_union.union_with(conj.bits());
        }
        if !malnormal {
            continue;
        }
        let mut kernel_bits = conjugate_union.complement();
        kernel_bits.insert(g.identity());
        let Ok(kernel) = Subgroup::new(g, kernel_bits) else {
            continue;
        };
        if kernel.size() * h.size() == g.order() && kernel.is_normal(g) {
            return Ok(Some(FrobeniusWitness {
                kernel,
                complement: h.clone(),
            }));
        }
    }
    Ok(None)
}
