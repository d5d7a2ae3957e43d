//! Checkable consequences of the homology computation: Euler characteristics
//! on a maximal torus, the bijections between regular Bott inputs and rule
//! preimages, plethysm identities, and Betti tables of the invariant rings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Zero};

use crate::complex::{complex_terms, enumerate_q, predicted_homology, Term};
use crate::error::Error;
use crate::partition::{Partition, PartitionPair};
use crate::schur::{
    complete_values, determinant, elementary_values, eval_gl_rational, eval_schur, eval_skew, ExactScalar,
};
use crate::weyl::{bott, concat_at, BottOutcome};
use crate::{Group, Label, ModOutcome};

/// Outcome of one check. Failures carry a witness naming the input and
/// evaluation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub params: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub witness: Option<String>,
}

impl VerificationReport {
    fn new(id: &str, params: String) -> Self {
        VerificationReport { id: id.into(), params, seed: None, passed: true, witness: None }
    }

    fn fail(&mut self, witness: String) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness);
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn point_text(xs: &[ExactScalar]) -> String {
    let mut s = String::from("(");
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s.push(')');
    s
}

/// Number of free torus coordinates: `n` for `Sp(2n)` and `GL(n)`, `⌊m/2⌋`
/// for `O(m)`.
pub fn torus_rank(group: Group) -> usize {
    match group {
        Group::Sp(n) | Group::Gl(n) => n,
        Group::O(m) => m / 2,
    }
}

/// Eigenvalues of the torus element with coordinates `xs` acting on `V`.
pub fn torus(group: Group, xs: &[ExactScalar]) -> Vec<ExactScalar> {
    match group {
        Group::Gl(_) => xs.to_vec(),
        Group::Sp(_) | Group::O(_) => {
            let mut v: Vec<ExactScalar> = xs.iter().flat_map(|x| [x.clone(), x.recip()]).collect();
            if let Group::O(m) = group {
                if m % 2 == 1 {
                    v.push(ExactScalar::one());
                }
            }
            v
        }
    }
}

/// Alternating sum of the characters of the complex terms at `xs`.
pub fn euler_characteristic(group: Group, label: &Label, xs: &[ExactScalar]) -> Result<ExactScalar, Error> {
    if xs.len() != torus_rank(group) {
        return Err(Error::Parse(format!("{group} needs {} torus coordinates", torus_rank(group))));
    }
    let terms = complex_terms(group, label, None)?;
    let t = torus(group, xs);
    let inverses: Vec<ExactScalar> = xs.iter().map(|x| x.recip()).collect();
    let mut total = ExactScalar::zero();
    for (i, summands) in terms.degrees.iter().enumerate() {
        let mut degree_sum = ExactScalar::zero();
        for term in summands {
            degree_sum += match term {
                Term::Skew(shape) => eval_skew(shape, &t),
                Term::Pair(a, b) => eval_skew(a, &t) * eval_skew(b, &inverses),
            };
        }
        if i % 2 == 0 {
            total += degree_sum;
        } else {
            total -= degree_sum;
        }
    }
    Ok(total)
}

/// Character of the irreducible `Sp(2n)` representation `[λ]` at the torus
/// element `xs` by Weyl's formula, with `l_i = λ_i + n - i + 1`:
/// `det(x_j^{l_i} - x_j^{-l_i}) / det(x_j^{n-i+1} - x_j^{-(n-i+1)})`.
pub fn eval_sp_character(lambda: &Partition, xs: &[ExactScalar]) -> Result<ExactScalar, Error> {
    let n = xs.len();
    if lambda.len() > n {
        return Err(Error::Inadmissible { group: Group::Sp(n), label: lambda.to_text() });
    }
    let odd = |x: &ExactScalar, e: usize| {
        let p: ExactScalar = num_traits::pow(x.clone(), e);
        &p - p.recip()
    };
    let alternant = |shift: &dyn Fn(usize) -> usize| {
        determinant((0..n).map(|i| xs.iter().map(|x| odd(x, shift(i) + n - i)).collect()).collect())
    };
    let denominator = alternant(&|_| 0);
    if denominator.is_zero() {
        return Err(Error::SingularEvaluation);
    }
    Ok(alternant(&|i| lambda.part(i)) / denominator)
}

/// Checks `E(λ) = (-1)^i E(τ)` when the homology is `[τ]` in degree `i`, and
/// `E(λ) = 0` when it vanishes. For `GL`, `E(τ)` is also compared with the
/// alternant formula for the character of `[τ]`.
pub fn verify_euler(group: Group, label: &Label, points: &[Vec<ExactScalar>]) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("euler", format!("group={} dim={} label={label}", group.name(), group.dim()));
    let prediction = predicted_homology(group, label)?;
    for xs in points {
        let e = euler_characteristic(group, label, xs)?;
        match &prediction {
            ModOutcome::Vanishing => {
                if !e.is_zero() {
                    report.fail(format!("point={} E={e} expected 0", point_text(xs)));
                }
            }
            ModOutcome::Concentrated { degree, tau } => {
                let mut anchor = euler_characteristic(group, tau, xs)?;
                if degree % 2 == 1 {
                    anchor = -anchor;
                }
                if e != anchor {
                    report.fail(format!("point={} E={e} expected {anchor} from tau={tau}", point_text(xs)));
                }
                if let Label::Pair(pair) = tau {
                    let direct = eval_gl_rational(pair, xs)?;
                    let tau_euler = euler_characteristic(group, tau, xs)?;
                    if direct != tau_euler {
                        report.fail(format!("point={} alternant={direct} euler={tau_euler} tau={tau}", point_text(xs)));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `[S_[λ]] = Σ_{μ ∈ Q₋₁} (-1)^{|μ|/2} [S_{λ/μ}]` for `ℓ(λ) ≤ n`, with the
/// left side computed by Weyl's character formula.
pub fn verify_littlewood_identity(lambda: &Partition, n: usize, points: &[Vec<ExactScalar>]) -> Result<VerificationReport, Error> {
    let group = Group::Sp(n);
    let label = Label::Single(lambda.clone());
    if !group.is_admissible(&label) {
        return Err(Error::Inadmissible { group, label: lambda.to_text() });
    }
    let mut report = VerificationReport::new("littlewood", format!("n={n} lambda={lambda}"));
    for xs in points {
        let alternating = euler_characteristic(group, &label, xs)?;
        let character = eval_sp_character(lambda, xs)?;
        if alternating != character {
            report.fail(format!("point={} sum={alternating} character={character}", point_text(xs)));
        }
    }
    Ok(report)
}

fn single_outcome(group: Group, p: &Partition) -> Result<ModOutcome<Partition>, Error> {
    Ok(predicted_homology(group, &Label::Single(p.clone()))?.map(|l| match l {
        Label::Single(t) => t,
        Label::Pair(_) => unreachable!("single-partition group"),
    }))
}

fn regular(seq: crate::weyl::WeylVector) -> Option<(usize, Partition)> {
    match bott(&seq) {
        BottOutcome::Singular => None,
        BottOutcome::Regular { length, result } => Some((length, result)),
    }
}

/// Labels the bijection is stated for: `ℓ(λ) ≤ n` for `Sp(2n)`, `O(2n)` and
/// `O(2n+1)`, and `ℓ(λ) + ℓ(λ′) ≤ n` for `GL(n)`. For `O` this is narrower
/// than admissibility; the other admissible labels are the `σ`-conjugates
/// reached through the target set.
pub fn in_bijection_domain(group: Group, label: &Label) -> bool {
    match (group, label) {
        (Group::O(m), Label::Single(lambda)) => lambda.len() <= m / 2,
        _ => group.check_arity(label).is_ok() && group.is_admissible(label),
    }
}

/// Checks the bijection between regular sequences `(λ |_k μ)`, with `μ` in the
/// relevant family and `|μ| ≤ size_bound`, and the partitions the rule sends
/// back to `λ`, together with the length bookkeeping.
///
/// * `Sp(2n)`: `μ ∈ Q₋₁`, `ℓ(w) + i(α) = |μ|/2`, `τ(α) = λ`.
/// * `O(2n)`: `μ ∈ Q₁`, `ℓ(w) + i(α) = |μ|/2`.
/// * `O(2n+1)`: `μ ∈ Q₀`, `ℓ(w) + i(α) = (|μ| - rank μ)/2`.
///
/// For `O`, `τ(α)` is `λ` or `λ^σ` as `rank μ` is even or odd, and the target
/// set is `{α : bar(τ(α)) = λ}`.
/// * `GL(n)`: every split `n = a + b` with `ℓ(λ) ≤ a`, `ℓ(λ′) ≤ b`; `μ` ranges
///   over all partitions, `α = w • (λ |_a μ)`, `α′ = w′ • (λ′ |_b μ†)`, and
///   `ℓ(w) + ℓ(w′) + i(α, α′) = |μ|`.
pub fn verify_bijection(group: Group, label: &Label, size_bound: usize) -> Result<VerificationReport, Error> {
    group.check_arity(label)?;
    if !in_bijection_domain(group, label) {
        return Err(Error::Inadmissible { group, label: label.to_text() });
    }
    let mut report = VerificationReport::new(
        "bijection",
        format!("group={} dim={} label={label} bound={size_bound}", group.name(), group.dim()),
    );
    match (group, label) {
        (Group::Sp(_) | Group::O(_), Label::Single(lambda)) => {
            single_bijection(group, lambda, size_bound, &mut report)?;
        }
        (Group::Gl(n), Label::Pair(pair)) => {
            for a in pair.plus.len()..=n - pair.minus.len() {
                pair_bijection(n, a, pair, size_bound, &mut report)?;
            }
        }
        _ => return Err(Error::WrongArity(group)),
    }
    Ok(report)
}

fn single_bijection(group: Group, lambda: &Partition, bound: usize, report: &mut VerificationReport) -> Result<(), Error> {
    let (k, epsilon, m) = match group {
        Group::Sp(n) => (n, -1, None),
        Group::O(m) => (m / 2, if m % 2 == 0 { 1 } else { 0 }, Some(m)),
        Group::Gl(_) => unreachable!(),
    };
    let mut image = BTreeSet::new();
    for mu in enumerate_q(epsilon, bound) {
        let Some((length, alpha)) = regular(concat_at(lambda, k, &mu)) else {
            continue;
        };
        let rank = mu.rank();
        let (expected_sum, expected_tau) = match m {
            None => (mu.size() / 2, lambda.clone()),
            Some(m) => {
                let half = if m % 2 == 0 { mu.size() / 2 } else { (mu.size() - rank) / 2 };
                let tau = if rank % 2 == 0 { lambda.clone() } else { lambda.sigma_conjugate(m)? };
                (half, tau)
            }
        };
        match single_outcome(group, &alpha)? {
            ModOutcome::Concentrated { degree, tau } if tau == expected_tau && degree + length == expected_sum => {}
            other => report.fail(format!(
                "mu={mu} alpha={alpha} l(w)={length} outcome={other:?} expected tau={expected_tau} sum={expected_sum}"
            )),
        }
        if !image.insert(alpha.clone()) {
            report.fail(format!("alpha={alpha} hit twice"));
        }
    }
    let mut targets = BTreeSet::new();
    for alpha in Partition::all_up_to(lambda.size() + bound) {
        if alpha.size() < lambda.size() {
            continue;
        }
        if let ModOutcome::Concentrated { tau, .. } = single_outcome(group, &alpha)? {
            let normalized = match m {
                None => tau,
                Some(m) => tau.bar(m)?,
            };
            if &normalized == lambda {
                targets.insert(alpha);
            }
        }
    }
    if image != targets {
        let missing: Vec<_> = targets.difference(&image).take(3).map(Partition::to_text).collect();
        let extra: Vec<_> = image.difference(&targets).take(3).map(Partition::to_text).collect();
        report.fail(format!("image and target sets differ: missing {missing:?}, extra {extra:?}"));
    }
    Ok(())
}

fn pair_bijection(n: usize, a: usize, pair: &PartitionPair, bound: usize, report: &mut VerificationReport) -> Result<(), Error> {
    let group = Group::Gl(n);
    let b = n - a;
    let mut image = BTreeSet::new();
    for mu in Partition::all_up_to(bound) {
        let Some((l1, alpha)) = regular(concat_at(&pair.plus, a, &mu)) else {
            continue;
        };
        let Some((l2, alpha2)) = regular(concat_at(&pair.minus, b, &mu.transpose())) else {
            continue;
        };
        let target = PartitionPair::new(alpha, alpha2);
        match predicted_homology(group, &Label::Pair(target.clone()))? {
            ModOutcome::Concentrated { degree, tau: Label::Pair(tau) }
                if &tau == pair && degree + l1 + l2 == mu.size() => {}
            other => report.fail(format!("split={a}+{b} mu={mu} alpha={target} lengths={l1},{l2} outcome={other:?}")),
        }
        if !image.insert(target.clone()) {
            report.fail(format!("split={a}+{b} alpha={target} hit twice"));
        }
    }
    let mut targets = BTreeSet::new();
    for k in 0..=bound {
        for alpha in Partition::all_of_size(pair.plus.size() + k) {
            for alpha2 in Partition::all_of_size(pair.minus.size() + k) {
                let candidate = PartitionPair::new(alpha.clone(), alpha2);
                if let ModOutcome::Concentrated { tau: Label::Pair(tau), .. } =
                    predicted_homology(group, &Label::Pair(candidate.clone()))?
                {
                    if &tau == pair {
                        targets.insert(candidate);
                    }
                }
            }
        }
    }
    if image != targets {
        let missing: Vec<String> = targets.difference(&image).take(3).map(|p| format!("{p}")).collect();
        let extra: Vec<String> = image.difference(&targets).take(3).map(|p| format!("{p}")).collect();
        report.fail(format!("split={a}+{b}: image and target sets differ: missing {missing:?}, extra {extra:?}"));
    }
    Ok(())
}

/// The plethysm identities checked by evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plethysm {
    /// `⋀^k(⋀²E) = ⊕_{μ ∈ Q₋₁, |μ| = 2k} S_μ E`.
    ExteriorOfExterior,
    /// `⋀^k(Sym²E) = ⊕_{μ ∈ Q₁, |μ| = 2k} S_μ E`.
    ExteriorOfSymmetric,
    /// `Sym^k(Sym²E) = ⊕_{|μ| = k} S_{2μ} E`.
    SymmetricOfSymmetric,
    /// `Sym^k(⋀²E) = ⊕_{|μ| = k} S_{(2μ)†} E`.
    SymmetricOfExterior,
    /// `⋀^k(E ⊗ F) = ⊕_{|ν| = k} S_ν E ⊗ S_{ν†} F`.
    ExteriorOfTensor,
}

impl Plethysm {
    pub const ALL: [Plethysm; 5] = [
        Plethysm::ExteriorOfExterior,
        Plethysm::ExteriorOfSymmetric,
        Plethysm::SymmetricOfSymmetric,
        Plethysm::SymmetricOfExterior,
        Plethysm::ExteriorOfTensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Plethysm::ExteriorOfExterior => "ext-ext2",
            Plethysm::ExteriorOfSymmetric => "ext-sym2",
            Plethysm::SymmetricOfSymmetric => "sym-sym2",
            Plethysm::SymmetricOfExterior => "sym-ext2",
            Plethysm::ExteriorOfTensor => "ext-tensor",
        }
    }
}

fn doubled(mu: &Partition) -> Partition {
    Partition::new(mu.parts().iter().map(|&p| 2 * p).collect()).expect("doubling keeps order")
}

/// Evaluates both sides of a plethysm identity in degree `k` at `xs`
/// (and `ys` for the tensor identity).
pub fn plethysm_sides(kind: Plethysm, k: usize, xs: &[ExactScalar], ys: &[ExactScalar]) -> (ExactScalar, ExactScalar) {
    let pairs = |strict: bool| -> Vec<ExactScalar> {
        let mut v = Vec::new();
        for i in 0..xs.len() {
            for j in i..xs.len() {
                if !strict || i < j {
                    v.push(&xs[i] * &xs[j]);
                }
            }
        }
        v
    };
    let sum = |labels: Vec<Partition>| {
        labels.iter().fold(ExactScalar::zero(), |acc, mu| acc + eval_schur(mu, xs))
    };
    let q_of_size = |eps: i8| enumerate_q(eps, 2 * k).into_iter().filter(|m| m.size() == 2 * k).collect();
    match kind {
        Plethysm::ExteriorOfExterior => (elementary_values(&pairs(true), k)[k].clone(), sum(q_of_size(-1))),
        Plethysm::ExteriorOfSymmetric => (elementary_values(&pairs(false), k)[k].clone(), sum(q_of_size(1))),
        Plethysm::SymmetricOfSymmetric => (
            complete_values(&pairs(false), k)[k].clone(),
            sum(Partition::all_of_size(k).iter().map(doubled).collect()),
        ),
        Plethysm::SymmetricOfExterior => (
            complete_values(&pairs(true), k)[k].clone(),
            sum(Partition::all_of_size(k).iter().map(|m| doubled(m).transpose()).collect()),
        ),
        Plethysm::ExteriorOfTensor => {
            let products: Vec<ExactScalar> = xs.iter().flat_map(|x| ys.iter().map(move |y| x * y)).collect();
            let rhs = Partition::all_of_size(k)
                .iter()
                .fold(ExactScalar::zero(), |acc, nu| acc + eval_schur(nu, xs) * eval_schur(&nu.transpose(), ys));
            (elementary_values(&products, k)[k].clone(), rhs)
        }
    }
}

pub fn verify_plethysm(kind: Plethysm, k: usize, xs: &[ExactScalar], ys: &[ExactScalar]) -> VerificationReport {
    let mut report = VerificationReport::new(
        "plethysm",
        format!("identity={} degree={k} dim={}", kind.name(), xs.len()),
    );
    let (lhs, rhs) = plethysm_sides(kind, k, xs, ys);
    if lhs != rhs {
        report.fail(format!("x={} y={} lhs={lhs} rhs={rhs}", point_text(xs), point_text(ys)));
    }
    report
}

/// Labels grouped by homological degree and internal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub group: Group,
    pub target: Label,
    pub max_internal_degree: usize,
    /// `(i, d) ↦` labels with homology in degree `i` and `|λ| = d`.
    pub entries: BTreeMap<(usize, usize), Vec<Label>>,
}

impl BettiTable {
    /// All labels in homological degree `i`, by internal degree.
    pub fn column(&self, i: usize) -> Vec<Label> {
        self.entries.range((i, 0)..=(i, usize::MAX)).flat_map(|(_, v)| v.iter().cloned()).collect()
    }

    pub fn entry(&self, i: usize, d: usize) -> &[Label] {
        self.entries.get(&(i, d)).map_or(&[], Vec::as_slice)
    }

    /// `(i, d, label)` rows in table order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &Label)> {
        self.entries.iter().flat_map(|(&(i, d), v)| v.iter().map(move |l| (i, d, l)))
    }
}

/// Every label of internal degree at most `max_internal_degree` whose
/// homology is `[target]`, grouped by degree. With `target` empty this is
/// the equivariant Betti table of the invariant ring. For `GL` the internal
/// degree is `|λ|`, and `|λ′|` is fixed by the size difference of the target.
pub fn betti_table(group: Group, max_internal_degree: usize, target: Option<&Label>) -> Result<BettiTable, Error> {
    let target = target.cloned().unwrap_or_else(|| Label::empty_for(group));
    group.check_arity(&target)?;
    let mut entries: BTreeMap<(usize, usize), Vec<Label>> = BTreeMap::new();
    let mut consider = |label: Label, internal: usize| -> Result<(), Error> {
        if let ModOutcome::Concentrated { degree, tau } = predicted_homology(group, &label)? {
            if tau == target {
                entries.entry((degree, internal)).or_default().push(label);
            }
        }
        Ok(())
    };
    match &target {
        Label::Single(_) => {
            for lambda in Partition::all_up_to(max_internal_degree) {
                let d = lambda.size();
                consider(Label::Single(lambda), d)?;
            }
        }
        Label::Pair(t) => {
            let shift = t.minus.size() as i64 - t.plus.size() as i64;
            for d in 0..=max_internal_degree {
                let d2 = d as i64 + shift;
                if d2 < 0 {
                    continue;
                }
                for a in Partition::all_of_size(d) {
                    for b in Partition::all_of_size(d2 as usize) {
                        consider(Label::Pair(PartitionPair::new(a.clone(), b)), d)?;
                    }
                }
            }
        }
    }
    Ok(BettiTable { group, target, max_internal_degree, entries })
}
