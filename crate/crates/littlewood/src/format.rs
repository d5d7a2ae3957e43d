//! Machine-readable records. Field order is fixed by declaration order, and
//! no record holds a float, so parsing an emitted line and rendering it again
//! gives the same bytes.

use littlewood_core::complex::{ComplexTerms, Term};
use littlewood_core::verify::{BettiTable, VerificationReport};
use littlewood_core::{Group, Label, ModOutcome, Partition};
use serde::{Deserialize, Deserializer, Serialize};

/// Distinguishes an absent field from an explicit `null`.
fn double_option<'de, D, T>(d: D) -> Result<Option<Option<T>>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    Option::<T>::deserialize(d).map(Some)
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

/// One `modrule` result. `lambda2` and `tau2` appear only for `gl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModruleRecord {
    pub group: String,
    pub dim: usize,
    pub lambda: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<Vec<usize>>,
    pub vanishes: bool,
    pub degree: Option<usize>,
    pub tau: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "double_option")]
    pub tau2: Option<Option<Vec<usize>>>,
    pub rule: String,
}

impl ModruleRecord {
    pub fn new(group: Group, label: &Label, outcome: &ModOutcome<Label>, rule: &str) -> Self {
        let (lambda, lambda2) = match label {
            Label::Single(p) => (parts(p), None),
            Label::Pair(pair) => (parts(&pair.plus), Some(parts(&pair.minus))),
        };
        let (tau, tau2) = match outcome.tau() {
            None => (None, lambda2.as_ref().map(|_| None)),
            Some(Label::Single(p)) => (Some(parts(p)), None),
            Some(Label::Pair(pair)) => (Some(parts(&pair.plus)), Some(Some(parts(&pair.minus)))),
        };
        ModruleRecord {
            group: group.name().into(),
            dim: group.dim(),
            lambda,
            lambda2,
            vanishes: outcome.is_vanishing(),
            degree: outcome.degree(),
            tau,
            tau2,
            rule: rule.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub id: String,
    pub params: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub witness: Option<String>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            id: r.id.clone(),
            params: r.params.clone(),
            seed: r.seed,
            passed: r.passed,
            witness: r.witness.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub hom_degree: usize,
    pub internal_degree: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRecord {
    pub group: String,
    pub dim: usize,
    pub target: String,
    pub max_internal_degree: usize,
    pub rows: Vec<BettiRow>,
}

pub fn betti_rows(table: &BettiTable) -> Vec<BettiRow> {
    table
        .rows()
        .map(|(i, d, l)| BettiRow { hom_degree: i, internal_degree: d, label: l.to_text() })
        .collect()
}

impl From<&BettiTable> for BettiRecord {
    fn from(t: &BettiTable) -> Self {
        BettiRecord {
            group: t.group.name().into(),
            dim: t.group.dim(),
            target: t.target.to_text(),
            max_internal_degree: t.max_internal_degree,
            rows: betti_rows(t),
        }
    }
}

/// CSV with header `hom_degree,internal_degree,label`.
pub fn betti_csv(table: &BettiTable) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    // The header is written even for an empty table.
    w.write_record(["hom_degree", "internal_degree", "label"])?;
    for row in betti_rows(table) {
        w.write_record([row.hom_degree.to_string(), row.internal_degree.to_string(), row.label])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermsRecord {
    pub group: String,
    pub dim: usize,
    pub label: String,
    /// `degrees[i]` lists the summands of the degree `i` term as `outer/inner`.
    pub degrees: Vec<Vec<String>>,
}

impl From<&ComplexTerms> for TermsRecord {
    fn from(t: &ComplexTerms) -> Self {
        TermsRecord {
            group: t.group.name().into(),
            dim: t.group.dim(),
            label: t.label.to_text(),
            degrees: t.degrees.iter().map(|d| d.iter().map(Term::to_string).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QsetRecord {
    pub epsilon: i8,
    pub max: usize,
    pub partitions: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRecord {
    pub group: String,
    pub dim: usize,
    pub generator: String,
    pub relation: String,
}

/// `0; 1,1; 2,1,1`.
pub fn family_text(family: &[Partition]) -> String {
    family.iter().map(Partition::to_text).collect::<Vec<_>>().join("; ")
}
