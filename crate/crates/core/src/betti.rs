//! Presentations of the modules `M_λ` over the invariant rings: the
//! generator is `λ` itself in homological degree 0, and the relations are the
//! degree 1 labels whose homology is `[λ]`.
//!
//! * `Sp(2n)`: one relation `(λ, 1^{2n+2-2ℓ(λ)})`.
//! * `O(m)`: one relation `ν` with `ν† = (m+1-λ†₂, m+1-λ†₁, λ†₃, …)`.
//! * `GL(n)`: one relation `((λ, 1^d), (λ′, 1^d))` with `d = n+1-ℓ(λ)-ℓ(λ′)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{Partition, PartitionPair};
use crate::verify::{betti_table, BettiTable};
use crate::{Group, Label};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator: Label,
    pub relation: Label,
}

pub fn presentation(group: Group, label: &Label) -> Result<Presentation, Error> {
    group.check_arity(label)?;
    if !group.is_admissible(label) {
        return Err(Error::Inadmissible { group, label: label.to_text() });
    }
    let relation = match (group, label) {
        (Group::Sp(n), Label::Single(lambda)) => Label::Single(lambda.with_rows(1, 2 * n + 2 - 2 * lambda.len())?),
        (Group::O(m), Label::Single(lambda)) => {
            let mut cols: Vec<usize> = vec![m + 1 - lambda.column_len(1), m + 1 - lambda.column_len(0)];
            cols.extend(lambda.transpose().parts().iter().skip(2));
            Label::Single(Partition::from_columns(&cols)?)
        }
        (Group::Gl(n), Label::Pair(pair)) => {
            let d = n + 1 - pair.plus.len() - pair.minus.len();
            Label::Pair(PartitionPair::new(pair.plus.with_rows(1, d)?, pair.minus.with_rows(1, d)?))
        }
        _ => return Err(Error::WrongArity(group)),
    };
    Ok(Presentation { generator: label.clone(), relation })
}

/// Internal degree large enough to contain the relation of `label`.
pub fn relation_degree_bound(group: Group, label: &Label) -> usize {
    match (group, label) {
        (Group::Sp(n), l) => l.size() + 2 * n + 2,
        (Group::O(m), l) => l.size() + 2 * m + 2,
        (Group::Gl(n), Label::Pair(p)) => p.plus.size() + n + 1,
        (Group::Gl(n), l) => l.size() + n + 1,
    }
}

/// Degree 0 and 1 columns of the table of labels with homology `[label]`,
/// found by enumeration.
pub fn enumerated_presentation(group: Group, label: &Label) -> Result<(Vec<Label>, Vec<Label>), Error> {
    let table: BettiTable = betti_table(group, relation_degree_bound(group, label), Some(label))?;
    Ok((table.column(0), table.column(1)))
}
