//! Homology of Littlewood complexes for `Sp(2n)`, `O(m)` and `GL(n)`.
//!
//! The homology of each complex is concentrated in at most one degree and is
//! computed by a modification rule, available here in two independent forms:
//! repeated border-strip removal and reduction of a ρ-shifted sequence by a
//! Weyl group. The [`schur`] and [`verify`] modules supply the combinatorial
//! oracles used to check those answers.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod complex;
pub mod error;
pub mod modrule;
pub mod partition;
pub mod schur;
pub mod verify;
pub mod weyl;

use alloc::string::String;
use core::fmt;

pub use error::Error;
pub use partition::{Partition, PartitionPair, SkewShape};

/// A classical group together with its dimension parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `Sp(2n)`, holding `n`.
    Sp(usize),
    /// `O(m)`, holding `m`.
    O(usize),
    /// `GL(n)`, holding `n`.
    Gl(usize),
}

impl Group {
    /// The parameter as written on the command line: `n`, `m`, `n`.
    pub fn dim(self) -> usize {
        match self {
            Group::Sp(d) | Group::O(d) | Group::Gl(d) => d,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Sp(_) => "sp",
            Group::O(_) => "o",
            Group::Gl(_) => "gl",
        }
    }

    /// Whether representations are labelled by pairs of partitions.
    pub fn takes_pairs(self) -> bool {
        matches!(self, Group::Gl(_))
    }

    /// Parses `sp`, `o` or `gl` with the given parameter.
    pub fn from_name(name: &str, dim: usize) -> Result<Self, Error> {
        match name {
            "sp" => Ok(Group::Sp(dim)),
            "o" => Ok(Group::O(dim)),
            "gl" => Ok(Group::Gl(dim)),
            other => Err(Error::Parse(alloc::format!("unknown group `{other}`"))),
        }
    }

    /// Whether `label` indexes an irreducible representation of this group.
    pub fn is_admissible(self, label: &Label) -> bool {
        match (self, label) {
            (Group::Sp(n), Label::Single(p)) => p.len() <= n,
            (Group::O(m), Label::Single(p)) => p.first_two_columns() <= m,
            (Group::Gl(n), Label::Pair(pair)) => pair.plus.len() + pair.minus.len() <= n,
            _ => false,
        }
    }

    /// Checks that `label` has the right shape (single or pair) for the group.
    pub fn check_arity(self, label: &Label) -> Result<(), Error> {
        if self.takes_pairs() == label.is_pair() {
            Ok(())
        } else {
            Err(Error::WrongArity(self))
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Sp(n) => write!(f, "Sp({})", 2 * n),
            Group::O(m) => write!(f, "O({m})"),
            Group::Gl(n) => write!(f, "GL({n})"),
        }
    }
}

/// A representation label: one partition for `Sp` and `O`, a pair for `GL`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Single(Partition),
    Pair(PartitionPair),
}

impl Label {
    pub fn is_pair(&self) -> bool {
        matches!(self, Label::Pair(_))
    }

    /// `|λ|`, or `|λ| + |λ′|` for a pair.
    pub fn size(&self) -> usize {
        match self {
            Label::Single(p) => p.size(),
            Label::Pair(pair) => pair.plus.size() + pair.minus.size(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn empty_for(group: Group) -> Label {
        if group.takes_pairs() {
            Label::Pair(PartitionPair::new(Partition::empty(), Partition::empty()))
        } else {
            Label::Single(Partition::empty())
        }
    }

    pub fn as_single(&self) -> Option<&Partition> {
        match self {
            Label::Single(p) => Some(p),
            Label::Pair(_) => None,
        }
    }

    pub fn as_pair(&self) -> Option<&PartitionPair> {
        match self {
            Label::Pair(p) => Some(p),
            Label::Single(_) => None,
        }
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Single(p) => p.fmt(f),
            Label::Pair(p) => p.fmt(f),
        }
    }
}

impl From<Partition> for Label {
    fn from(p: Partition) -> Self {
        Label::Single(p)
    }
}

impl From<PartitionPair> for Label {
    fn from(p: PartitionPair) -> Self {
        Label::Pair(p)
    }
}

/// The homology predicted by a modification rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModOutcome<T> {
    /// The complex is exact.
    Vanishing,
    /// Homology is the irreducible labelled `tau`, in degree `degree` only.
    Concentrated { degree: usize, tau: T },
}

impl<T> ModOutcome<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> ModOutcome<U> {
        match self {
            ModOutcome::Vanishing => ModOutcome::Vanishing,
            ModOutcome::Concentrated { degree, tau } => ModOutcome::Concentrated { degree, tau: f(tau) },
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            ModOutcome::Vanishing => None,
            ModOutcome::Concentrated { degree, .. } => Some(*degree),
        }
    }

    pub fn tau(&self) -> Option<&T> {
        match self {
            ModOutcome::Vanishing => None,
            ModOutcome::Concentrated { tau, .. } => Some(tau),
        }
    }

    pub fn is_vanishing(&self) -> bool {
        matches!(self, ModOutcome::Vanishing)
    }
}
