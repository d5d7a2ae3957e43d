//! Littlewood-Richardson coefficients by tableau enumeration and exact
//! evaluation of Schur polynomials, skew Schur polynomials and rational
//! `GL(n)` characters.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{Partition, PartitionPair, SkewShape};

/// Exact rational scalar.
pub type ExactScalar = BigRational;

pub fn scalar(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite integer combination of labels; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurExpansion<K: Ord = Partition> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for SchurExpansion<K> {
    fn default() -> Self {
        SchurExpansion { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SchurExpansion<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: K) -> Self {
        let mut e = Self::new();
        e.add_term(label, 1);
        e
    }

    pub fn add_term(&mut self, label: K, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(label.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn add(&mut self, other: &SchurExpansion<K>) {
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn scaled(&self, factor: i64) -> Self {
        let mut out = Self::new();
        for (k, &c) in &self.terms {
            out.add_term(k.clone(), c * factor);
        }
        out
    }

    pub fn coefficient(&self, label: &K) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Calls `visit` with the content of every Littlewood-Richardson tableau of
/// shape `outer / inner`: semistandard fillings whose reverse reading word
/// (rows top to bottom, each right to left) is a lattice word. With `limit`
/// set, only fillings whose content fits inside `limit` are produced.
fn lr_contents(outer: &Partition, inner: &Partition, limit: Option<&Partition>, visit: &mut dyn FnMut(&[usize])) {
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (inner.part(i)..outer.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut table: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; outer.part(i)]).collect();
    let max_letter = limit.map_or(rows, Partition::len);
    let mut counts = vec![0usize; max_letter + 2];
    fill(0, &cells, inner, &mut table, &mut counts, limit, max_letter, visit);
}

#[allow(clippy::too_many_arguments)]
fn fill(
    k: usize,
    cells: &[(usize, usize)],
    inner: &Partition,
    table: &mut [Vec<usize>],
    counts: &mut [usize],
    limit: Option<&Partition>,
    max_letter: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if k == cells.len() {
        let len = counts[1..].iter().position(|&c| c == 0).unwrap_or(counts.len() - 1);
        visit(&counts[1..=len]);
        return;
    }
    let (i, j) = cells[k];
    // weakly increasing along rows, filled right to left
    let hi = table[i].get(j + 1).copied().unwrap_or(usize::MAX).min(max_letter);
    // strictly increasing down columns
    let lo = if i > 0 && j >= inner.part(i - 1) { table[i - 1][j] + 1 } else { 1 };
    for v in lo..=hi {
        if v > 1 && counts[v - 1] <= counts[v] {
            continue;
        }
        if let Some(l) = limit {
            if counts[v] >= l.part(v - 1) {
                continue;
            }
        }
        counts[v] += 1;
        table[i][j] = v;
        fill(k + 1, cells, inner, table, counts, limit, max_letter, visit);
        counts[v] -= 1;
    }
    table[i][j] = 0;
}

/// `c^λ_{μν}`, the number of LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let mut count = 0;
    lr_contents(lambda, mu, Some(nu), &mut |_| count += 1);
    count
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn skew_expand(shape: &SkewShape) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    lr_contents(shape.outer(), shape.inner(), None, &mut |content| {
        out.add_term(Partition::new(content.to_vec()).expect("lattice word content is a partition"), 1);
    });
    out
}

/// `h_0, …, h_kmax` at `xs`, one variable at a time.
pub fn complete_values(xs: &[ExactScalar], kmax: usize) -> Vec<ExactScalar> {
    let mut h = vec![ExactScalar::zero(); kmax + 1];
    h[0] = ExactScalar::one();
    for x in xs {
        for k in 1..=kmax {
            let prev = h[k - 1].clone();
            h[k] += x * prev;
        }
    }
    h
}

/// `e_0, …, e_kmax` at `xs`.
pub fn elementary_values(xs: &[ExactScalar], kmax: usize) -> Vec<ExactScalar> {
    let mut e = vec![ExactScalar::zero(); kmax + 1];
    e[0] = ExactScalar::one();
    for x in xs {
        for k in (1..=kmax).rev() {
            let prev = e[k - 1].clone();
            e[k] += x * prev;
        }
    }
    e
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn determinant(mut m: Vec<Vec<ExactScalar>>) -> ExactScalar {
    let n = m.len();
    if n == 0 {
        return ExactScalar::one();
    }
    let mut sign = ExactScalar::one();
    let mut prev = ExactScalar::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return ExactScalar::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `s_λ(x₁, …, x_d)` by the Jacobi-Trudi determinant `det(h_{λ_i - i + j})`.
pub fn eval_schur(lambda: &Partition, xs: &[ExactScalar]) -> ExactScalar {
    let l = lambda.len();
    if l > xs.len() {
        return ExactScalar::zero();
    }
    let h = complete_values(xs, lambda.first_row() + l);
    let entry = |i: usize, j: usize| {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            ExactScalar::zero()
        } else {
            h[k as usize].clone()
        }
    };
    determinant((0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect())
}

/// `s_{λ/μ}(xs)` through the LR expansion.
pub fn eval_skew(shape: &SkewShape, xs: &[ExactScalar]) -> ExactScalar {
    let mut total = ExactScalar::zero();
    for (nu, c) in skew_expand(shape).iter() {
        total += eval_schur(nu, xs) * scalar(c);
    }
    total
}

/// Evaluates an expansion term by term.
pub fn eval_expansion(e: &SchurExpansion, xs: &[ExactScalar]) -> ExactScalar {
    let mut total = ExactScalar::zero();
    for (nu, c) in e.iter() {
        total += eval_schur(nu, xs) * scalar(c);
    }
    total
}

fn power(x: &ExactScalar, e: i64) -> ExactScalar {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Character of the irreducible rational `GL(n)` representation with highest
/// weight `(λ₁, …, λ_r, 0, …, 0, -λ′_s, …, -λ′₁)` at the diagonal matrix
/// `xs`, as the ratio of alternants `det(x_j^{w_i + n - i}) / det(x_j^{n - i})`.
pub fn eval_gl_rational(pair: &PartitionPair, xs: &[ExactScalar]) -> Result<ExactScalar, Error> {
    let n = xs.len();
    if pair.plus.len() + pair.minus.len() > n {
        return Err(Error::Inadmissible { group: crate::Group::Gl(n), label: alloc::format!("{pair}") });
    }
    if xs.iter().any(Zero::is_zero) {
        return Err(Error::SingularEvaluation);
    }
    let weight: Vec<i64> = (0..n)
        .map(|i| pair.plus.part(i) as i64 - pair.minus.part(n - 1 - i) as i64)
        .collect();
    let alternant = |shift: &dyn Fn(usize) -> i64| {
        determinant(
            (0..n)
                .map(|i| xs.iter().map(|x| power(x, shift(i) + (n - 1 - i) as i64)).collect())
                .collect(),
        )
    };
    let denominator = alternant(&|_| 0);
    if denominator.is_zero() {
        return Err(Error::SingularEvaluation);
    }
    Ok(alternant(&|i| weight[i]) / denominator)
}
