use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidPartition(Vec<usize>),
    InvalidFrobenius(Vec<usize>, Vec<usize>),
    NotContained { outer: String, inner: String },
    Inadmissible { group: Group, label: String },
    Parse(String),
    /// A finite window of an infinite sequence failed its tail certificate.
    WindowTooShort { window: usize },
    /// Evaluation points that make an alternant vanish.
    SingularEvaluation,
    /// The border-strip and Weyl-group rules returned different outcomes.
    RuleDisagreement { group: Group, label: String },
    /// A pair-only operation was called for a single partition, or vice versa.
    WrongArity(Group),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(p) => write!(f, "not a partition: {p:?}"),
            Error::InvalidFrobenius(a, b) => write!(f, "invalid Frobenius coordinates ({a:?} | {b:?})"),
            Error::NotContained { outer, inner } => write!(f, "{inner} is not contained in {outer}"),
            Error::Inadmissible { group, label } => write!(f, "{label} is not admissible for {group}"),
            Error::Parse(s) => write!(f, "cannot parse partition from {s:?}"),
            Error::WindowTooShort { window } => write!(f, "window of length {window} failed the tail certificate"),
            Error::SingularEvaluation => f.write_str("evaluation points are not pairwise distinct and nonzero"),
            Error::RuleDisagreement { group, label } => {
                write!(f, "strip and Weyl rules disagree for {label} at {group}")
            }
            Error::WrongArity(group) => write!(f, "wrong number of partitions for {group}"),
        }
    }
}

impl core::error::Error for Error {}
