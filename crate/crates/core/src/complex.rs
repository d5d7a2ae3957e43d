//! Terms of the Littlewood complexes and the families `Q₋₁`, `Q₀`, `Q₁`.
//!
//! `Q_ε` is the set of partitions with Frobenius coordinates satisfying
//! `a_i = b_i + ε`. Equivalently `μ ∈ Q_ε` when `μ` is empty, or
//! `ℓ(μ) = μ₁ - ε` and deleting the first row and column leaves a member of
//! `Q_ε`. The exterior algebra on `⋀²E` decomposes as `⊕_{μ ∈ Q₋₁} S_μ E`
//! and the one on `Sym²E` as `⊕_{μ ∈ Q₁} S_μ E`, with `μ` in degree `|μ|/2`.
//!
//! Degree `i` of the Koszul complex of the form pulled back along
//! `Hom(E, V)` is `⋀^i` of the space of forms on `E` tensored with the
//! coordinate ring of `Hom(E, V)`. Taking the `S_λ E` isotypic part of
//! `S_μ E ⊗ S_ν E ⊗ S_ν V` and applying Littlewood-Richardson gives the terms
//!
//! * `Sp`: `⊕ S_{λ/μ} V` over `μ ∈ Q₋₁`, `|μ| = 2i`;
//! * `O`: `⊕ S_{λ/μ} V` over `μ ∈ Q₁`, `|μ| = 2i`;
//! * `GL`: `⊕ S_{λ/ν} V ⊗ S_{λ′/ν†} V*` over `|ν| = i`, from
//!   `⋀^i(E ⊗ E′) = ⊕_{|ν|=i} S_ν E ⊗ S_{ν†} E′`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::modrule::modify_checked;
use crate::partition::{Partition, SkewShape};
use crate::{Group, Label, ModOutcome};

/// Frobenius test for `μ ∈ Q_ε`.
pub fn in_q(mu: &Partition, epsilon: i8) -> bool {
    let (a, b) = mu.frobenius();
    a.iter().zip(&b).all(|(&a, &b)| a as i64 == b as i64 + i64::from(epsilon))
}

/// Recursive test for `μ ∈ Q_ε`: peel off first rows and columns.
pub fn in_q_inductive(mu: &Partition, epsilon: i8) -> bool {
    let mut cur = mu.clone();
    while !cur.is_empty() {
        if cur.len() as i64 != cur.first_row() as i64 - i64::from(epsilon) {
            return false;
        }
        cur = Partition::new(cur.parts()[1..].iter().map(|&p| p - 1).collect())
            .expect("inner partition of a partition");
    }
    true
}

fn sort_family(mut v: Vec<Partition>) -> Vec<Partition> {
    v.sort_by(|x, y| (x.size(), x.parts()).cmp(&(y.size(), y.parts())));
    v
}

/// Members of `Q_ε` with `|μ| ≤ max_size`, sorted by size and then
/// lexicographically. Built from strictly decreasing leg lengths `b`.
pub fn enumerate_q(epsilon: i8, max_size: usize) -> Vec<Partition> {
    assert!((-1..=1).contains(&epsilon), "epsilon must be -1, 0 or 1");
    let eps = i64::from(epsilon);
    let mut out = Vec::new();
    // box count of one diagonal hook with leg b: a + b - 1 = 2b + ε - 1
    let hook = |b: i64| 2 * b + eps - 1;
    let mut stack: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 0)];
    while let Some((legs, size)) = stack.pop() {
        let arms: Vec<usize> = legs.iter().map(|&b| (b as i64 + eps) as usize).collect();
        out.push(Partition::from_frobenius(&arms, &legs).expect("valid Frobenius coordinates"));
        let next_max = legs.last().map_or(i64::MAX, |&b| b as i64 - 1);
        // both arm and leg must be positive
        let mut b = 1.max(1 - eps);
        while b <= next_max && size + hook(b) <= max_size as i64 {
            let mut more = legs.clone();
            more.push(b as usize);
            stack.push((more, size + hook(b)));
            b += 1;
        }
    }
    sort_family(out)
}

/// Members of `Q_ε` with `|μ| ≤ max_size`, built recursively: a member with
/// first row `r` is `(r, ν₁+1, …, ν_k+1, 1, …, 1)` with `r - ε` rows in total
/// and `ν` a smaller member.
pub fn enumerate_q_inductive(epsilon: i8, max_size: usize) -> Vec<Partition> {
    assert!((-1..=1).contains(&epsilon), "epsilon must be -1, 0 or 1");
    let eps = i64::from(epsilon);
    let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); max_size + 1];
    by_size[0].push(Partition::empty());
    for size in 1..=max_size {
        for inner_size in 0..size {
            let inner: Vec<Partition> = by_size[inner_size].clone();
            for nu in inner {
                // rows ℓ = r - ε, size = r + (ℓ - 1) + |ν|
                let twice_r = size as i64 - inner_size as i64 + 1 + eps;
                if twice_r <= 0 || twice_r % 2 != 0 {
                    continue;
                }
                let r = twice_r / 2;
                let rows = r - eps;
                if rows < 1 || (nu.len() as i64) > rows - 1 || (nu.first_row() as i64) + 1 > r {
                    continue;
                }
                let mut parts = vec![r as usize];
                parts.extend(nu.parts().iter().map(|&x| x + 1));
                parts.resize(rows as usize, 1);
                by_size[size].push(Partition::new(parts).expect("constructed partition"));
            }
        }
    }
    sort_family(by_size.into_iter().flatten().collect())
}

/// One summand of a complex term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// `S_{λ/μ} V`.
    Skew(SkewShape),
    /// `S_{λ/ν} V ⊗ S_{λ′/ν†} V*`.
    Pair(SkewShape, SkewShape),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Skew(s) => s.fmt(f),
            Term::Pair(a, b) => write!(f, "{a};{b}"),
        }
    }
}

/// The terms of a Littlewood complex, indexed by homological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerms {
    pub group: Group,
    pub label: Label,
    /// `degrees[i]` lists the summands of the degree `i` term.
    pub degrees: Vec<Vec<Term>>,
}

impl ComplexTerms {
    /// Last degree with a nonzero term.
    pub fn length(&self) -> usize {
        self.degrees.iter().rposition(|d| !d.is_empty()).unwrap_or(0)
    }
}

/// Default degree bound: `⌊|λ|/2⌋` for `Sp` and `O`, `min(|λ|, |λ′|)` for `GL`.
pub fn default_max_degree(label: &Label) -> usize {
    match label {
        Label::Single(p) => p.size() / 2,
        Label::Pair(pair) => pair.plus.size().min(pair.minus.size()),
    }
}

pub fn complex_terms(group: Group, label: &Label, max_degree: Option<usize>) -> Result<ComplexTerms, Error> {
    group.check_arity(label)?;
    let top = max_degree.unwrap_or_else(|| default_max_degree(label));
    let mut degrees: Vec<Vec<Term>> = vec![Vec::new(); top + 1];
    match label {
        Label::Single(lambda) => {
            let eps = if matches!(group, Group::Sp(_)) { -1 } else { 1 };
            for mu in enumerate_q(eps, (2 * top).min(lambda.size())) {
                if lambda.contains(&mu) {
                    degrees[mu.size() / 2].push(Term::Skew(SkewShape::new(lambda.clone(), mu)?));
                }
            }
        }
        Label::Pair(pair) => {
            for (i, slot) in degrees.iter_mut().enumerate() {
                for nu in Partition::all_of_size(i) {
                    let nu_t = nu.transpose();
                    if pair.plus.contains(&nu) && pair.minus.contains(&nu_t) {
                        slot.push(Term::Pair(
                            SkewShape::new(pair.plus.clone(), nu)?,
                            SkewShape::new(pair.minus.clone(), nu_t)?,
                        ));
                    }
                }
            }
        }
    }
    Ok(ComplexTerms { group, label: label.clone(), degrees })
}

/// The homology of the complex: both rule formulations are run and must agree.
pub fn predicted_homology(group: Group, label: &Label) -> Result<ModOutcome<Label>, Error> {
    modify_checked(group, label)
}
