//! Per-group analysis shared by all theorem checks.

use serde::{Deserialize, Serialize};

use crate::centralizers::{cent_count, cover_profile_with_limits, Limits};
use crate::error::Result;
use crate::families::prime_power;
use crate::frobenius::is_frobenius_with_threshold;
use crate::group::FiniteGroup;
use crate::iso::{classify_quotient_group, QuotientClass};
use crate::subgroup::{center, is_solvable, quotient};

/// Everything the theorem checks need to know about one corpus group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub spec: String,
    pub order: usize,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Analyzed(Measurements),
    /// A threshold or construction error; reported as SKIPPED.
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measurements {
    pub center_order: usize,
    pub cent_count: usize,
    pub quotient_order: usize,
    pub quotient_abelian: bool,
    pub quotient_class: QuotientClass,
    /// `|Cent(G/Z(G))|`, computed when `G` is 9-centralizer or its quotient
    /// lands in one of the four classes.
    pub quotient_cent_count: Option<usize>,
    /// Present exactly when `cent_count == 9`.
    pub facts: Option<ProofFacts>,
}

/// Structural facts every 9-centralizer group must satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofFacts {
    pub r: usize,
    pub is_ca: bool,
    pub covers: bool,
    pub pairwise_central: bool,
    pub indices: Vec<usize>,
    pub product_full: bool,
    pub solvable: bool,
    /// `p` when `|G/Z(G)|` is a power of the prime `p`.
    pub quotient_prime: Option<u64>,
    /// (complement, kernel) orders of a Frobenius decomposition of `G/Z(G)`.
    pub quotient_frobenius: Option<(usize, usize)>,
}

impl ProofFacts {
    /// Human-readable descriptions of every fact that does not hold.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.r != 8 {
            out.push(format!("max non-commuting set has size {}, expected 8", self.r));
        }
        if !self.is_ca {
            out.push("not a CA-group".into());
        }
        if !self.covers {
            out.push("proper centralizers do not cover G".into());
        }
        if !self.pairwise_central {
            out.push("some pair of proper centralizers meets outside Z(G)".into());
        }
        let shape_ok = self.indices.len() == 8
            && [2, 3, 6, 7].contains(&self.indices[0])
            && self.indices[1..].iter().all(|&i| i == 7);
        if !shape_ok {
            out.push(format!(
                "centralizer indices {:?} are not seven 7s plus one of 2,3,6,7",
                self.indices
            ));
        }
        if !self.product_full {
            out.push("X1*X2 != G".into());
        }
        if !self.solvable {
            out.push("not solvable".into());
        }
        if self.quotient_prime != Some(7) && self.quotient_frobenius.is_none() {
            out.push("G/Z(G) is neither a 7-group nor Frobenius".into());
        }
        out
    }
}

pub fn analyze_group(spec: &str, g: &FiniteGroup, limits: &Limits) -> GroupAnalysis {
    let outcome = match measure(g, limits) {
        Ok(m) => Outcome::Analyzed(m),
        Err(e) => Outcome::Skipped { reason: e.to_string() },
    };
    GroupAnalysis {
        spec: spec.to_string(),
        order: g.order(),
        outcome,
    }
}

fn measure(g: &FiniteGroup, limits: &Limits) -> Result<Measurements> {
    let z = center(g);
    let (q, _) = quotient(g, &z)?;
    let count = cent_count(g);
    let class = classify_quotient_group(&q, limits.iso)?;
    let quotient_cent_count = (count == 9 || class.is_nine_class()).then(|| cent_count(&q));
    let facts = if count == 9 {
        Some(proof_facts(g, &q, limits)?)
    } else {
        None
    };
    Ok(Measurements {
        center_order: z.size(),
        cent_count: count,
        quotient_order: q.order(),
        quotient_abelian: q.is_abelian(),
        quotient_class: class,
        quotient_cent_count,
        facts,
    })
}

fn proof_facts(g: &FiniteGroup, q: &FiniteGroup, limits: &Limits) -> Result<ProofFacts> {
    let profile = cover_profile_with_limits(g, limits)?;
    let frob = is_frobenius_with_threshold(q, limits.subgroups)?;
    Ok(ProofFacts {
        r: profile.r,
        is_ca: profile.is_ca,
        covers: profile.covers_group,
        pairwise_central: profile.pairwise_intersections_central,
        indices: profile.index_multiset,
        product_full: profile.product_is_group,
        solvable: is_solvable(g),
        quotient_prime: prime_power(q.order() as u64).map(|(p, _)| p),
        quotient_frobenius: frob.map(|w| (w.complement.size(), w.kernel.size())),
    })
}
