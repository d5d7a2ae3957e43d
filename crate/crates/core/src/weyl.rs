//! Dot actions of the Weyl groups used by the modification rules, Bott's
//! algorithm, and a greedy reduction to the dominant chamber.
//!
//! Sequences are eventually zero; after adding ρ they are eventually equal to
//! ρ. All ρ-shifted vectors are stored doubled so that the half-integral ρ of
//! the odd orthogonal case stays in `i64`.
//!
//! | kind        | ρ (1-based index i)  | extra generator `s₀` (linear)     |
//! |-------------|----------------------|-----------------------------------|
//! | `A`         | `-i`                 | none                              |
//! | `Bc { n }`  | `-(n + i)`           | negate entry 1                    |
//! | `D { m }`   | `-(m/2 + i - 1)`     | swap entries 1, 2 and negate both |

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{Partition, PartitionPair};

/// Which ρ a sequence is shifted by, and hence which `s₀` acts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoKind {
    A,
    Bc { n: usize },
    D { m: usize },
}

impl RhoKind {
    /// `2ρ_i` for 0-based `i`.
    pub fn doubled_rho(self, i: usize) -> i64 {
        let i = i as i64;
        match self {
            RhoKind::A => -2 * (i + 1),
            RhoKind::Bc { n } => -2 * (n as i64 + i + 1),
            RhoKind::D { m } => -(m as i64) - 2 * i,
        }
    }

    pub fn symmetry(self) -> Symmetry {
        match self {
            RhoKind::A => Symmetry::A,
            RhoKind::Bc { .. } => Symmetry::Bc,
            RhoKind::D { .. } => Symmetry::D,
        }
    }
}

/// The reflection group acting linearly on shifted vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Finitary permutations.
    A,
    /// Signed permutations, `s₀` negating the first entry.
    Bc,
    /// Evenly signed permutations, `s₀ = (a, b) ↦ (-b, -a)` on the first two.
    D,
}

/// A finite head of an eventually-zero integer sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylVector {
    head: Vec<i64>,
}

impl WeylVector {
    pub fn new(head: Vec<i64>) -> Self {
        WeylVector { head }
    }

    pub fn from_partition(p: &Partition) -> Self {
        WeylVector::new(p.parts().iter().map(|&x| x as i64).collect())
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// Entry at 0-based position `i`; zero past the head.
    pub fn entry(&self, i: usize) -> i64 {
        self.head.get(i).copied().unwrap_or(0)
    }

    fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.head.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Dot action of the adjacent transposition `s_i`, `i ≥ 1`:
    /// `(…, a_i, a_{i+1}, …) ↦ (…, a_{i+1} - 1, a_i + 1, …)`.
    pub fn dot_reflect(&self, i: usize) -> WeylVector {
        assert!(i >= 1, "s_i needs i >= 1");
        let mut v = self.padded(i + 1);
        let (a, b) = (v[i - 1], v[i]);
        v[i - 1] = b - 1;
        v[i] = a + 1;
        WeylVector::new(v)
    }

    /// Dot action of `s₀` for the symplectic ρ: `a₁ ↦ 2n + 2 - a₁`.
    pub fn bc_s0(&self, n: usize) -> WeylVector {
        let mut v = self.padded(1);
        v[0] = 2 * n as i64 + 2 - v[0];
        WeylVector::new(v)
    }

    /// Dot action of `s₀` for the orthogonal ρ:
    /// `(a₁, a₂, …) ↦ (m + 1 - a₂, m + 1 - a₁, …)`.
    pub fn d_s0(&self, m: usize) -> WeylVector {
        let mut v = self.padded(2);
        let (a, b) = (v[0], v[1]);
        v[0] = m as i64 + 1 - b;
        v[1] = m as i64 + 1 - a;
        WeylVector::new(v)
    }

    /// `2(a + ρ)` over the first `window` positions.
    pub fn shifted(&self, kind: RhoKind, window: usize) -> ShiftedWindow {
        let entries = (0..window)
            .map(|i| 2 * self.entry(i) + kind.doubled_rho(i))
            .collect();
        ShiftedWindow { entries, kind }
    }

    /// Smallest window, starting from `start`, whose tail certificate holds.
    pub fn shifted_certified(&self, kind: RhoKind, start: usize) -> ShiftedWindow {
        let mut window = start.max(self.head.len()).max(2);
        loop {
            let w = self.shifted(kind, window);
            if w.certify().is_ok() {
                return w;
            }
            window *= 2;
        }
    }
}

/// A doubled ρ-shifted window; entries past the window equal `2ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedWindow {
    entries: Vec<i64>,
    kind: RhoKind,
}

impl ShiftedWindow {
    pub fn new(entries: Vec<i64>, kind: RhoKind) -> Self {
        ShiftedWindow { entries, kind }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn kind(&self) -> RhoKind {
        self.kind
    }

    /// Checks that no element of the group can move a tail entry into the
    /// window: for `A`, every tail entry is below every window entry; for the
    /// signed groups, every tail entry is larger in absolute value.
    pub fn certify(&self) -> Result<(), Error> {
        let tail = self.kind.doubled_rho(self.entries.len());
        let ok = match self.kind.symmetry() {
            Symmetry::A => self.entries.iter().all(|&x| x > tail),
            Symmetry::Bc | Symmetry::D => self.entries.iter().all(|&x| x.abs() < tail.abs()),
        };
        if ok && self.entries.len() >= 2 {
            Ok(())
        } else {
            Err(Error::WindowTooShort { window: self.entries.len() })
        }
    }

    /// Subtracts ρ back off and halves, giving the unshifted window.
    pub fn unshift(&self) -> Vec<i64> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let d = x - self.kind.doubled_rho(i);
                debug_assert!(d % 2 == 0);
                d / 2
            })
            .collect()
    }
}

/// Whether a nontrivial group element fixes the shifted vector.
///
/// `Bc`: some entry is zero or two entries agree in absolute value.
/// `D`: two entries agree in absolute value.
/// `A`: two entries are equal.
pub fn is_singular(x: &ShiftedWindow) -> Result<bool, Error> {
    x.certify()?;
    let e = &x.entries;
    let sym = x.kind.symmetry();
    if sym == Symmetry::Bc && e.contains(&0) {
        return Ok(true);
    }
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let hit = match sym {
                Symmetry::A => e[i] == e[j],
                Symmetry::Bc | Symmetry::D => e[i].abs() == e[j].abs(),
            };
            if hit {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Result of Bott's algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottOutcome {
    Singular,
    Regular { length: usize, result: Partition },
}

/// Bott's algorithm with the leftmost ascent chosen at every step.
pub fn bott(seq: &WeylVector) -> BottOutcome {
    bott_with(seq, |_| 0)
}

/// Bott's algorithm; `choose` receives the current ascent positions (1-based
/// `i` with `a_{i+1} > a_i`) and returns an index into that list.
pub fn bott_with(seq: &WeylVector, mut choose: impl FnMut(&[usize]) -> usize) -> BottOutcome {
    // With this window every tail entry of a + ρ sits below every window
    // entry, so no ascent can ever straddle the window boundary.
    let min = seq.head.iter().copied().min().unwrap_or(0).min(0);
    let window = seq.head.len() + (-min) as usize + 1;
    let mut a = seq.padded(window);
    let mut length = 0;
    let mut ascents = Vec::new();
    loop {
        ascents.clear();
        ascents.extend((1..window).filter(|&i| a[i] > a[i - 1]));
        if ascents.is_empty() {
            let parts = a.iter().map(|&x| x as usize).collect();
            let result = Partition::new(parts).expect("sorted window is a partition");
            return BottOutcome::Regular { length, result };
        }
        let i = ascents[choose(&ascents) % ascents.len()];
        if a[i] - a[i - 1] == 1 {
            return BottOutcome::Singular;
        }
        let (x, y) = (a[i - 1], a[i]);
        a[i - 1] = y - 1;
        a[i] = x + 1;
        length += 1;
    }
}

/// Result of [`greedy_modify`]: the generator count and the dominant
/// representative of the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Singular,
    Regular { length: usize, dominant: ShiftedWindow },
}

/// Bubble sort into strictly decreasing order, returning the number of
/// adjacent swaps, or `None` if two entries coincide.
fn sort_decreasing(x: &mut [i64]) -> Option<usize> {
    let mut swaps = 0;
    for end in (1..x.len()).rev() {
        for i in 0..end {
            if x[i] < x[i + 1] {
                x.swap(i, i + 1);
                swaps += 1;
            }
        }
    }
    if x.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(swaps)
    }
}

/// Reduces a shifted vector to the dominant chamber one generator at a time:
/// sort, then apply `s₀` if the first entries sit on the wrong side of its
/// wall, and repeat. Lands on a wall exactly when the vector is singular.
///
/// The dominant chamber is: strictly decreasing, plus `x₁ < 0` for `Bc` and
/// `x₁ + x₂ < 0` for `D`.
pub fn greedy_modify(x: &ShiftedWindow) -> Result<GreedyOutcome, Error> {
    x.certify()?;
    let mut e = x.entries.clone();
    let mut length = 0;
    loop {
        match sort_decreasing(&mut e) {
            Some(s) => length += s,
            None => return Ok(GreedyOutcome::Singular),
        }
        let wall = match x.kind.symmetry() {
            Symmetry::A => break,
            Symmetry::Bc => e[0],
            Symmetry::D => e[0] + e[1],
        };
        match wall {
            w if w < 0 => break,
            0 => return Ok(GreedyOutcome::Singular),
            _ => {
                match x.kind.symmetry() {
                    Symmetry::Bc => e[0] = -e[0],
                    _ => {
                        let (a, b) = (e[0], e[1]);
                        e[0] = -b;
                        e[1] = -a;
                    }
                }
                length += 1;
            }
        }
    }
    Ok(GreedyOutcome::Regular {
        length,
        dominant: ShiftedWindow::new(e, x.kind),
    })
}

/// Length of the element sending a regular `x` to the dominant chamber,
/// counted as the positive roots that are negative on `x`.
pub fn inversion_length(x: &ShiftedWindow) -> usize {
    let e = &x.entries;
    let sym = x.kind.symmetry();
    let mut count = 0;
    for i in 0..e.len() {
        if sym == Symmetry::Bc && e[i] > 0 {
            count += 1;
        }
        for j in i + 1..e.len() {
            if e[i] < e[j] {
                count += 1;
            }
            if sym != Symmetry::A && e[i] + e[j] > 0 {
                count += 1;
            }
        }
    }
    count
}

/// Weyl-group reduction of `λ†` for `Sp(2n)` (`kind = Bc`) or `O(m)`
/// (`kind = D`). Returns the generator count and the partition `μ` with
/// `w • λ† = μ†`.
pub fn reduce_transpose(lambda: &Partition, kind: RhoKind) -> Result<Option<(usize, Partition)>, Error> {
    let start = lambda.first_row().max(lambda.len()) + 2;
    let x = WeylVector::from_partition(&lambda.transpose()).shifted_certified(kind, start);
    match greedy_modify(&x)? {
        GreedyOutcome::Singular => Ok(None),
        GreedyOutcome::Regular { length, dominant } => {
            let cols: Vec<usize> = dominant
                .unshift()
                .into_iter()
                .map(|c| usize::try_from(c).expect("dominant window has nonnegative columns"))
                .collect();
            let mu = Partition::from_columns(&cols).expect("dominant window is a partition");
            Ok(Some((length, mu)))
        }
    }
}

/// The two-sided sequence `(σ(λ′) | λ†) + ρ` used for `GL(n)`, shifted but
/// not doubled. Left positions are stored nearest-the-bar first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSided {
    n: usize,
    left: Vec<i64>,
    right: Vec<i64>,
}

impl TwoSided {
    /// Left position `-k` holds `n - λ′†_k + k`; right position `j` holds
    /// `λ†_j + 1 - j`.
    pub fn new(pair: &PartitionPair, n: usize, left_window: usize, right_window: usize) -> Self {
        let minus_t = pair.minus.transpose();
        let plus_t = pair.plus.transpose();
        let left = (1..=left_window)
            .map(|k| n as i64 - minus_t.part(k - 1) as i64 + k as i64)
            .collect();
        let right = (1..=right_window)
            .map(|j| plus_t.part(j - 1) as i64 + 1 - j as i64)
            .collect();
        TwoSided { n, left, right }
    }

    /// Grows both windows until [`TwoSided::certify`] succeeds.
    pub fn certified(pair: &PartitionPair, n: usize) -> Self {
        let mut k = pair.minus.first_row() + pair.plus.first_row() + 2;
        loop {
            let t = TwoSided::new(pair, n, k, k);
            if t.certify().is_ok() {
                return t;
            }
            k *= 2;
        }
    }

    pub fn left(&self) -> &[i64] {
        &self.left
    }

    pub fn right(&self) -> &[i64] {
        &self.right
    }

    /// Left tail entries (`n + k`, `k > K`) must exceed every window entry
    /// and right tail entries (`1 - j`, `j > J`) must lie below all of them.
    pub fn certify(&self) -> Result<(), Error> {
        let left_tail = self.n as i64 + self.left.len() as i64 + 1;
        let right_tail = -(self.right.len() as i64);
        let ok = self.left.iter().chain(&self.right).all(|&v| v < left_tail && v > right_tail);
        if ok {
            Ok(())
        } else {
            Err(Error::WindowTooShort { window: self.left.len() + self.right.len() })
        }
    }

    /// Concatenated window in positional order `-K, …, -1, 1, …, J`.
    pub fn concatenated(&self) -> Vec<i64> {
        self.left.iter().rev().chain(&self.right).copied().collect()
    }

    /// Sorts the two-sided window decreasingly by adjacent swaps. Returns the
    /// swap count and the resulting pair `(β, σ⁻¹(β′))` as partitions, or
    /// `None` on a repeated entry.
    pub fn sort(&self) -> Result<Option<(usize, PartitionPair)>, Error> {
        self.certify()?;
        let mut v = self.concatenated();
        let Some(length) = sort_decreasing(&mut v) else {
            return Ok(None);
        };
        let k = self.left.len();
        // β′ at left position -j is v - j; σ⁻¹ gives column j of λ′ as n - β′.
        let minus_cols: Vec<usize> = (1..=k)
            .map(|j| {
                let beta = v[k - j] - j as i64;
                usize::try_from(self.n as i64 - beta).expect("left part bounded by n")
            })
            .collect();
        let plus_cols: Vec<usize> = self
            .right
            .iter()
            .enumerate()
            .map(|(idx, _)| {
                let j = idx as i64 + 1;
                usize::try_from(v[k + idx] - (1 - j)).expect("right part nonnegative")
            })
            .collect();
        let minus = Partition::from_columns(&minus_cols).expect("sorted left side is a partition");
        let plus = Partition::from_columns(&plus_cols).expect("sorted right side is a partition");
        Ok(Some((length, PartitionPair::new(plus, minus))))
    }
}

/// Number of inversions of a sequence, for cross-checking swap counts.
pub fn count_inversions(v: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                count += 1;
            }
        }
    }
    count
}

/// `(λ |_k μ)`: the first `k` entries of `λ` (padded with zeros) followed by `μ`.
pub fn concat_at(lambda: &Partition, k: usize, mu: &Partition) -> WeylVector {
    let mut head = vec![0i64; k];
    for (i, slot) in head.iter_mut().enumerate() {
        *slot = lambda.part(i) as i64;
    }
    head.extend(mu.parts().iter().map(|&x| x as i64));
    WeylVector::new(head)
}
