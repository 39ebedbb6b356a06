//! Deterministic family-generated group corpora.
//!
//! The corpus is NOT exhaustive over isomorphism classes: it contains the
//! named families, cyclic semidirect products and their pairwise direct
//! products, nothing more.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::expr::{Atom, GroupExpr, Term};
use crate::families::gcd_u64;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusFamily {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Heisenberg,
    Semidirect,
}

impl CorpusFamily {
    pub const ALL: [CorpusFamily; 7] = [
        CorpusFamily::Cyclic,
        CorpusFamily::Dihedral,
        CorpusFamily::Dicyclic,
        CorpusFamily::Symmetric,
        CorpusFamily::Alternating,
        CorpusFamily::Heisenberg,
        CorpusFamily::Semidirect,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub max_order: usize,
    pub families: Vec<CorpusFamily>,
    pub include_products: bool,
    /// Drop groups isomorphic to an earlier corpus member (only among groups
    /// within the isomorphism-test threshold).
    pub dedup: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec::up_to(343)
    }
}

impl CorpusSpec {
    pub fn up_to(max_order: usize) -> Self {
        CorpusSpec {
            max_order,
            families: CorpusFamily::ALL.to_vec(),
            include_products: true,
            dedup: false,
        }
    }

    fn has(&self, family: CorpusFamily) -> bool {
        self.families.contains(&family)
    }
}

/// One canonical twist per nontrivial cyclic subgroup `⟨k⟩ ≤ (Z/n)^×` whose
/// order divides `m`; the representative is the least generator.
pub fn canonical_twists(n: u64, m: u64) -> Vec<u64> {
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for k in 2..n {
        if gcd_u64(k, n) != 1 {
            continue;
        }
        let mut powers = vec![1u64];
        let mut p = k;
        while p != 1 {
            powers.push(p);
            p = p * k % n;
        }
        if m % powers.len() as u64 != 0 {
            continue;
        }
        powers.sort_unstable();
        if seen.insert(powers) {
            out.push(k);
        }
    }
    out
}

fn base_terms(spec: &CorpusSpec) -> Vec<Term> {
    let max = spec.max_order as u64;
    let mut terms = Vec::new();
    if spec.has(CorpusFamily::Cyclic) {
        terms.extend((1..=max).map(|n| Term::Atom(Atom::Cyclic(n))));
    }
    if spec.has(CorpusFamily::Dihedral) {
        terms.extend((4..=max).step_by(2).map(|n| Term::Atom(Atom::Dihedral(n))));
    }
    if spec.has(CorpusFamily::Dicyclic) {
        terms.extend((4..=max).step_by(4).map(|n| Term::Atom(Atom::Dicyclic(n))));
    }
    if spec.has(CorpusFamily::Symmetric) {
        terms.extend(
            (3..=5)
                .map(Atom::Symmetric)
                .filter(|a| a.order().unwrap() <= max)
                .map(Term::Atom),
        );
    }
    if spec.has(CorpusFamily::Alternating) {
        terms.extend(
            (4..=5)
                .map(Atom::Alternating)
                .filter(|a| a.order().unwrap() <= max)
                .map(Term::Atom),
        );
    }
    if spec.has(CorpusFamily::Heisenberg) {
        terms.extend(
            [3u64, 5, 7]
                .into_iter()
                .filter(|p| p.pow(3) <= max)
                .map(|p| Term::Atom(Atom::Heisenberg(p))),
        );
    }
    if spec.has(CorpusFamily::Semidirect) {
        for n in 3..=max / 2 {
            for m in 2..=max / n {
                for k in canonical_twists(n, m) {
                    terms.push(Term::Semidirect {
                        normal: n,
                        acting: m,
                        k,
                    });
                }
            }
        }
    }
    terms
}

/// The corpus as expressions, sorted by (order, rendered spec).
pub fn corpus_specs(spec: &CorpusSpec) -> Result<Vec<GroupExpr>> {
    if spec.max_order > DEFAULT_ORDER_CAP {
        return Err(GroupError::ExceedsCap {
            order: spec.max_order as u64,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let max = spec.max_order as u64;
    let base = base_terms(spec);
    let mut exprs: Vec<GroupExpr> = base.iter().cloned().map(GroupExpr::single).collect();
    if spec.include_products {
        let factors: Vec<(&Term, u64)> = base
            .iter()
            .map(|t| (t, t.order().unwrap()))
            .filter(|&(_, o)| o > 1)
            .collect();
        for (i, &(a, oa)) in factors.iter().enumerate() {
            for &(b, ob) in &factors[i..] {
                if oa * ob <= max {
                    exprs.push(GroupExpr {
                        terms: vec![a.clone(), b.clone()],
                    });
                }
            }
        }
    }
    let mut keyed: Vec<(u64, String, GroupExpr)> = exprs
        .into_iter()
        .map(|e| (e.order().unwrap(), e.to_string(), e))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.dedup_by(|a, b| a.1 == b.1);
    Ok(keyed.into_iter().map(|(_, _, e)| e).collect())
}

/// Builds every corpus group lazily, in corpus order.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<impl Iterator<Item = Result<(GroupExpr, FiniteGroup)>>> {
    Ok(corpus_specs(spec)?.into_iter().map(|e| {
        let g = e.eval()?;
        Ok((e, g))
    }))
}
