//! Corpus sweeps that check the 9-centralizer classification and its
//! supporting facts on concrete groups.

pub mod analysis;
pub mod cache;
pub mod corpus;
pub mod report;

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::centralizers::Limits;
use crate::error::GroupError;
use crate::expr::GroupExpr;
use crate::iso::{is_isomorphic_with_threshold, Fingerprint};

pub use analysis::{analyze_group, GroupAnalysis, Measurements, Outcome, ProofFacts};
pub use cache::{default_cache_dir, AnalysisCache, CACHE_DIR_ENV};
pub use corpus::{canonical_twists, corpus_specs, generate_corpus, CorpusFamily, CorpusSpec};
pub use report::{
    emit_report, render_report, Counterexample, Record, ReportFormat, Status, Theorem, Verdict, VerificationReport,
    TOOL_VERSION,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Analyses for every corpus group (after optional isomorphism dedup), in
/// corpus order, plus the number of dropped duplicates. Cached entries are
/// reused and fresh ones added to `cache`.
pub fn analyze_corpus(
    spec: &CorpusSpec,
    limits: &Limits,
    cache: Option<&mut AnalysisCache>,
) -> Result<(Vec<GroupAnalysis>, usize), VerifyError> {
    let mut exprs = corpus_specs(spec)?;
    let mut dropped = 0;
    if spec.dedup {
        (exprs, dropped) = dedup_isomorphic(exprs, limits.iso);
    }
    let keys: Vec<String> = exprs.iter().map(ToString::to_string).collect();
    let cached: Vec<Option<GroupAnalysis>> = keys
        .iter()
        .map(|k| cache.as_deref().and_then(|c| c.get(k)).cloned())
        .collect();
    // Jobs are independent; results are collected back into corpus order.
    let analyses: Vec<(GroupAnalysis, bool)> = exprs
        .par_iter()
        .zip(keys.par_iter())
        .zip(cached.into_par_iter())
        .map(|((expr, key), hit)| match hit {
            Some(a) => (a, false),
            None => (analyze_expr(expr, key, limits), true),
        })
        .collect();
    if let Some(cache) = cache {
        for (a, fresh) in &analyses {
            if *fresh {
                cache.insert(a.clone());
            }
        }
    }
    Ok((analyses.into_iter().map(|(a, _)| a).collect(), dropped))
}

fn analyze_expr(expr: &GroupExpr, key: &str, limits: &Limits) -> GroupAnalysis {
    match expr.eval() {
        Ok(g) => analyze_group(key, &g, limits),
        Err(e) => GroupAnalysis {
            spec: key.to_string(),
            order: expr.order().unwrap_or(0) as usize,
            outcome: Outcome::Skipped { reason: e.to_string() },
        },
    }
}

/// Keeps the first member of each isomorphism class among groups of order at
/// most `threshold`; larger groups are always kept.
fn dedup_isomorphic(exprs: Vec<GroupExpr>, threshold: usize) -> (Vec<GroupExpr>, usize) {
    let mut kept = Vec::new();
    let mut buckets: HashMap<Fingerprint, Vec<crate::group::FiniteGroup>> = HashMap::new();
    let mut dropped = 0;
    for expr in exprs {
        let small = expr.order().is_some_and(|o| o as usize <= threshold);
        if !small {
            kept.push(expr);
            continue;
        }
        let Ok(g) = expr.eval() else {
            kept.push(expr);
            continue;
        };
        let bucket = buckets.entry(Fingerprint::of(&g)).or_default();
        let duplicate = bucket
            .iter()
            .any(|h| matches!(is_isomorphic_with_threshold(&g, h, threshold), Ok(Some(_))));
        if duplicate {
            dropped += 1;
        } else {
            bucket.push(g);
            kept.push(expr);
        }
    }
    (kept, dropped)
}

pub fn verify(
    theorem: Theorem,
    spec: &CorpusSpec,
    cache: Option<&mut AnalysisCache>,
) -> Result<VerificationReport, VerifyError> {
    let (analyses, dropped) = analyze_corpus(spec, &Limits::default(), cache)?;
    Ok(VerificationReport::build(theorem, spec, &analyses, dropped))
}

pub fn verify_theorem1(spec: &CorpusSpec) -> Result<VerificationReport, VerifyError> {
    verify(Theorem::NineCentralizer, spec, None)
}

pub fn verify_theorem2(spec: &CorpusSpec) -> Result<VerificationReport, VerifyError> {
    verify(Theorem::PrimitiveNineCentralizer, spec, None)
}

pub fn verify_small_n(spec: &CorpusSpec) -> Result<VerificationReport, VerifyError> {
    verify(Theorem::SmallN, spec, None)
}
