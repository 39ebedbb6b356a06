//! Verification reports and their JSON/CSV encodings.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::analysis::{GroupAnalysis, Outcome};
use super::corpus::{CorpusFamily, CorpusSpec};
use super::VerifyError;
use crate::iso::QuotientClass;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const CORPUS_NOTE: &str = "family-generated corpus (cyclic, dihedral, dicyclic, symmetric, alternating, \
Heisenberg, cyclic semidirect products and pairwise direct products); not exhaustive over isomorphism classes";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "theorem1")]
    NineCentralizer,
    #[serde(rename = "theorem2")]
    PrimitiveNineCentralizer,
    #[serde(rename = "small-n")]
    SmallN,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::NineCentralizer => "theorem1",
            Theorem::PrimitiveNineCentralizer => "theorem2",
            Theorem::SmallN => "small-n",
        }
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "theorem1" => Ok(Theorem::NineCentralizer),
            "theorem2" => Ok(Theorem::PrimitiveNineCentralizer),
            "small-n" => Ok(Theorem::SmallN),
            _ => Err(format!("unknown theorem {s:?}")),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub spec: String,
    pub order: usize,
    pub cent_count: Option<usize>,
    pub quotient_class: Option<QuotientClass>,
    pub quotient_cent_count: Option<usize>,
    pub r: Option<usize>,
    pub is_ca: Option<bool>,
    pub covers: Option<bool>,
    pub pairwise_central: Option<bool>,
    pub status: Status,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub spec: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEcho {
    pub max_order: usize,
    pub families: Vec<CorpusFamily>,
    pub include_products: bool,
    pub dedup: bool,
    pub groups: usize,
    pub dropped_duplicates: usize,
    pub exhaustive: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub corpus: CorpusEcho,
    pub records: Vec<Record>,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub skipped: usize,
    /// `cent_count → (central quotient description → group count)` for
    /// `cent_count` in 4..=8. Informational only; never affects the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observations: Option<BTreeMap<usize, BTreeMap<String, usize>>>,
    pub version: String,
}

impl VerificationReport {
    /// Assembles a report; records are ordered by (order, spec) regardless of
    /// the order of `analyses`.
    pub fn build(theorem: Theorem, spec: &CorpusSpec, analyses: &[GroupAnalysis], dropped: usize) -> Self {
        let mut sorted: Vec<&GroupAnalysis> = analyses.iter().collect();
        sorted.sort_by(|a, b| (a.order, &a.spec).cmp(&(b.order, &b.spec)));
        let records: Vec<Record> = sorted.iter().map(|a| judge(theorem, a)).collect();
        let observations = (theorem == Theorem::SmallN).then(|| observe(&sorted));
        let mut report = VerificationReport {
            theorem,
            corpus: CorpusEcho {
                max_order: spec.max_order,
                families: spec.families.clone(),
                include_products: spec.include_products,
                dedup: spec.dedup,
                groups: records.len(),
                dropped_duplicates: dropped,
                exhaustive: false,
                note: CORPUS_NOTE.to_string(),
            },
            records,
            verdict: Verdict::Pass,
            counterexamples: Vec::new(),
            skipped: 0,
            observations,
            version: TOOL_VERSION.to_string(),
        };
        report.refresh_verdict();
        report
    }

    /// Re-derives the verdict and counterexample list from the records.
    pub fn refresh_verdict(&mut self) {
        self.counterexamples = self
            .records
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| Counterexample {
                spec: r.spec.clone(),
                reason: r.reason.clone().unwrap_or_default(),
            })
            .collect();
        self.skipped = self.records.iter().filter(|r| r.status == Status::Skipped).count();
        self.verdict = if self.counterexamples.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }

    pub fn record(&self, spec: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.spec == spec)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("spec,order,cent_count,quotient_class,r,is_ca,covers,pairwise_central,verdict\n");
        for r in &self.records {
            let fields = [
                csv_field(&r.spec),
                r.order.to_string(),
                opt(r.cent_count),
                r.quotient_class.map(|c| c.tag().to_string()).unwrap_or_default(),
                opt(r.r),
                opt(r.is_ca),
                opt(r.covers),
                opt(r.pairwise_central),
                r.status.as_str().to_string(),
            ];
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

pub fn render_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    }
}

pub fn emit_report(report: &VerificationReport, format: ReportFormat, path: &Path) -> Result<(), VerifyError> {
    std::fs::write(path, render_report(report, format))?;
    Ok(())
}

fn judge(theorem: Theorem, analysis: &GroupAnalysis) -> Record {
    let mut record = Record {
        spec: analysis.spec.clone(),
        order: analysis.order,
        cent_count: None,
        quotient_class: None,
        quotient_cent_count: None,
        r: None,
        is_ca: None,
        covers: None,
        pairwise_central: None,
        status: Status::Skipped,
        reason: None,
    };
    let m = match &analysis.outcome {
        Outcome::Skipped { reason } => {
            record.reason = Some(reason.clone());
            return record;
        }
        Outcome::Analyzed(m) => m,
    };
    record.cent_count = Some(m.cent_count);
    record.quotient_class = Some(m.quotient_class);
    record.quotient_cent_count = m.quotient_cent_count;
    if let Some(f) = &m.facts {
        record.r = Some(f.r);
        record.is_ca = Some(f.is_ca);
        record.covers = Some(f.covers);
        record.pairwise_central = Some(f.pairwise_central);
    }

    let mut problems = Vec::new();
    let class = m.quotient_class;
    match theorem {
        Theorem::NineCentralizer => {
            let nine = m.cent_count == 9;
            if nine != class.is_nine_class() {
                problems.push(format!("cent_count {} with quotient class {}", m.cent_count, class));
            }
            if let Some(f) = &m.facts {
                problems.extend(f.failures());
            }
        }
        Theorem::PrimitiveNineCentralizer => {
            let primitive = m.cent_count == 9 && m.quotient_cent_count == Some(9);
            if primitive != class.is_primitive_class() {
                problems.push(format!(
                    "primitive={primitive} (cent_count {}, quotient cent_count {:?}) with quotient class {}",
                    m.cent_count, m.quotient_cent_count, class
                ));
            }
            if class == QuotientClass::Q49 && m.quotient_cent_count != Some(1) {
                problems.push(format!(
                    "C7xC7 quotient with quotient cent_count {:?}",
                    m.quotient_cent_count
                ));
            }
        }
        Theorem::SmallN => {
            if m.cent_count == 2 || m.cent_count == 3 {
                problems.push(format!("{}-centralizer group", m.cent_count));
            }
        }
    }
    if problems.is_empty() {
        record.status = Status::Pass;
    } else {
        record.status = Status::Fail;
        record.reason = Some(problems.join("; "));
    }
    record
}

fn observe(analyses: &[&GroupAnalysis]) -> BTreeMap<usize, BTreeMap<String, usize>> {
    let mut table: BTreeMap<usize, BTreeMap<String, usize>> = BTreeMap::new();
    for a in analyses {
        if let Outcome::Analyzed(m) = &a.outcome {
            if (4..=8).contains(&m.cent_count) {
                let kind = if m.quotient_abelian { "abelian" } else { "nonabelian" };
                let key = format!("G/Z order {} {kind}", m.quotient_order);
                *table.entry(m.cent_count).or_default().entry(key).or_insert(0) += 1;
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::analysis::Measurements;

    fn analysis(spec: &str, order: usize, cent_count: usize, class: QuotientClass) -> GroupAnalysis {
        GroupAnalysis {
            spec: spec.into(),
            order,
            outcome: Outcome::Analyzed(Measurements {
                center_order: 1,
                cent_count,
                quotient_order: order,
                quotient_abelian: false,
                quotient_class: class,
                quotient_cent_count: None,
                facts: None,
            }),
        }
    }

    #[test]
    fn empty_corpus_passes() {
        let r = VerificationReport::build(Theorem::NineCentralizer, &CorpusSpec::up_to(0), &[], 0);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.records.is_empty());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["theorem"], "theorem1");
        for key in ["theorem", "corpus", "records", "verdict", "counterexamples", "version"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn injected_fake_record_fails() {
        let fake = analysis("FAKE", 10, 9, QuotientClass::Other);
        let ok = analysis("S3", 6, 5, QuotientClass::Other);
        let r = VerificationReport::build(Theorem::NineCentralizer, &CorpusSpec::up_to(10), &[fake, ok], 0);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(r.counterexamples[0].spec, "FAKE");
        assert_eq!(serde_json::to_value(&r).unwrap()["verdict"], "fail");
    }

    #[test]
    fn records_sorted_and_skips_counted() {
        let skipped = GroupAnalysis {
            spec: "C9".into(),
            order: 9,
            outcome: Outcome::Skipped {
                reason: "too big".into(),
            },
        };
        let a = analysis("S3", 6, 5, QuotientClass::Other);
        let r = VerificationReport::build(Theorem::SmallN, &CorpusSpec::up_to(10), &[skipped, a], 0);
        assert_eq!(r.records[0].spec, "S3");
        assert_eq!(r.skipped, 1);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.records[1].status, Status::Skipped);
    }

    #[test]
    fn small_n_flags_two_and_three() {
        let bad = analysis("X", 8, 3, QuotientClass::Other);
        let r = VerificationReport::build(Theorem::SmallN, &CorpusSpec::up_to(10), &[bad], 0);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn csv_layout() {
        let a = analysis("C7:C3(k=2)", 21, 9, QuotientClass::Q21);
        let r = VerificationReport::build(Theorem::SmallN, &CorpusSpec::up_to(21), &[a], 0);
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "spec,order,cent_count,quotient_class,r,is_ca,covers,pairwise_central,verdict"
        );
        assert_eq!(lines.next().unwrap(), "C7:C3(k=2),21,9,Q21_C7xC3,,,,,PASS");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
