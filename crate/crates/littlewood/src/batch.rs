//! Verification batches over every label up to a size bound. Cases run in
//! parallel; results come back in enumeration order, and each case draws
//! its points from its own stream, so output never depends on scheduling.

use littlewood_core::schur::ExactScalar;
use littlewood_core::verify::{
    in_bijection_domain, torus_rank, verify_bijection, verify_euler, verify_littlewood_identity, verify_plethysm, Plethysm,
    VerificationReport,
};
use littlewood_core::{Error, Group, Label, Partition, PartitionPair};
use rayon::prelude::*;

use crate::points::sample_points;

/// Every label for `group` of total size at most `max_size`, sorted.
pub fn labels_up_to(group: Group, max_size: usize) -> Vec<Label> {
    let mut labels: Vec<Label> = if group.takes_pairs() {
        let all = Partition::all_up_to(max_size);
        all.iter()
            .flat_map(|a| {
                all.iter()
                    .filter(move |b| a.size() + b.size() <= max_size)
                    .map(move |b| Label::Pair(PartitionPair::new(a.clone(), b.clone())))
            })
            .collect()
    } else {
        Partition::all_up_to(max_size).into_iter().map(Label::Single).collect()
    };
    labels.sort();
    labels
}

pub fn admissible_labels_up_to(group: Group, max_size: usize) -> Vec<Label> {
    labels_up_to(group, max_size).into_iter().filter(|l| group.is_admissible(l)).collect()
}

/// Labels up to `max_size` that the bijection check accepts.
pub fn bijection_labels_up_to(group: Group, max_size: usize) -> Vec<Label> {
    labels_up_to(group, max_size).into_iter().filter(|l| in_bijection_domain(group, l)).collect()
}

/// `verify_euler` on each label with `count` seeded torus points.
pub fn euler_batch(group: Group, labels: &[Label], seed: u64, count: usize) -> Result<Vec<VerificationReport>, Error> {
    let rank = torus_rank(group);
    labels
        .par_iter()
        .enumerate()
        .map(|(i, label)| {
            let points = sample_points(seed, i as u64, rank, count);
            Ok(verify_euler(group, label, &points)?.with_seed(seed))
        })
        .collect()
}

pub fn bijection_batch(group: Group, labels: &[Label], bound: usize) -> Result<Vec<VerificationReport>, Error> {
    labels.par_iter().map(|label| verify_bijection(group, label, bound)).collect()
}

/// The Littlewood identity for every `λ` with `ℓ(λ) ≤ n` and `|λ| ≤ max_size`.
pub fn littlewood_batch(n: usize, max_size: usize, seed: u64, count: usize) -> Result<Vec<VerificationReport>, Error> {
    let lambdas: Vec<Partition> = Partition::all_up_to(max_size).into_iter().filter(|p| p.len() <= n).collect();
    lambdas
        .par_iter()
        .enumerate()
        .map(|(i, lambda)| {
            let points = sample_points(seed, i as u64, n, count);
            Ok(verify_littlewood_identity(lambda, n, &points)?.with_seed(seed))
        })
        .collect()
}

/// Every plethysm identity in dimensions `1..=max_dim` and degrees
/// `0..=max_degree`, one report per (identity, dimension, degree) covering
/// all `count` points. The tensor identity takes `x` and `y` from disjoint
/// coordinates of one sampled point.
pub fn plethysm_batch(max_dim: usize, max_degree: usize, seed: u64, count: usize) -> Vec<VerificationReport> {
    let cases: Vec<(Plethysm, usize, usize)> = Plethysm::ALL
        .iter()
        .flat_map(|&kind| (1..=max_dim).flat_map(move |d| (0..=max_degree).map(move |k| (kind, d, k))))
        .collect();
    cases
        .par_iter()
        .enumerate()
        .map(|(i, &(kind, dim, k))| {
            let points = sample_points(seed, i as u64, 2 * dim, count);
            let mut merged: Option<VerificationReport> = None;
            for pt in &points {
                let (xs, ys): (&[ExactScalar], &[ExactScalar]) = pt.split_at(dim);
                let report = verify_plethysm(kind, k, xs, ys);
                match &merged {
                    Some(m) if !m.passed => {}
                    _ => merged = Some(report),
                }
            }
            merged.unwrap_or_else(|| verify_plethysm(kind, k, &[], &[])).with_seed(seed)
        })
        .collect()
}
