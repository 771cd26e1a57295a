//! Brute-force ground truth: enumerate factorizations in `S_n` directly.
//!
//! Composition is right-to-left, `(p∘q)(x) = p(q(x))`, so a product
//! `σ_1 ⋯ σ_m` applies `σ_m` first. Given `σ_1, …, σ_{m-1}`, the last factor
//! is forced to be `σ_{m-1}^{-1} ⋯ σ_1^{-1} π`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default cap on the number of `(σ_1, …, σ_{m-1})` tuples the oracle will visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A permutation of `{0, …, n-1}` in one-line form; displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// `(1 2 ⋯ n)`.
    pub fn full_cycle(n: usize) -> Self {
        Self { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// Checks that `images` is a bijection on `0..len`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Internal(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens = Vec::new();
        cycle_lengths(&self.images, &mut vec![false; self.len()], &mut lens);
        Partition::new(lens).unwrap_or_else(|_| Partition::empty())
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with fixed points omitted, e.g. `(1 2 3)(4 5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut wrote = false;
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x];
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn cycle_lengths(images: &[usize], seen: &mut [bool], out: &mut Vec<usize>) {
    out.clear();
    seen.iter_mut().for_each(|s| *s = false);
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
}

pub fn cycle_type(p: &Perm) -> Partition {
    p.cycle_type()
}

/// All permutations of cycle type λ on `|λ|` points, each exactly once.
///
/// The smallest unused point always opens the next cycle; its length is
/// chosen among the distinct remaining lengths and the rest of the cycle is an
/// ordered selection of unused points.
pub fn permutations_of_type(lambda: &Partition) -> std::vec::IntoIter<Perm> {
    let n = lambda.size();
    let mut lengths: Vec<(usize, usize)> = lambda.multiplicities().to_vec();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    build_cycles(&mut lengths, &mut images, &mut used, &mut out);
    out.into_iter()
}

fn build_cycles(lengths: &mut [(usize, usize)], images: &mut [usize], used: &mut [bool], out: &mut Vec<Perm>) {
    let Some(start) = used.iter().position(|u| !u) else {
        out.push(Perm { images: images.to_vec() });
        return;
    };
    for li in 0..lengths.len() {
        if lengths[li].1 == 0 {
            continue;
        }
        let len = lengths[li].0;
        lengths[li].1 -= 1;
        used[start] = true;
        let mut cycle = vec![start];
        extend_cycle(len, &mut cycle, lengths, images, used, out);
        used[start] = false;
        lengths[li].1 += 1;
    }
}

fn extend_cycle(
    len: usize,
    cycle: &mut Vec<usize>,
    lengths: &mut [(usize, usize)],
    images: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Perm>,
) {
    if cycle.len() == len {
        for w in 0..len {
            images[cycle[w]] = cycle[(w + 1) % len];
        }
        build_cycles(lengths, images, used, out);
        return;
    }
    for x in 0..used.len() {
        if used[x] {
            continue;
        }
        used[x] = true;
        cycle.push(x);
        extend_cycle(len, cycle, lengths, images, used, out);
        cycle.pop();
        used[x] = false;
    }
}

/// A fixed permutation of type λ: cycles of decreasing length laid out left
/// to right, so `(n)` gives `(1 2 ⋯ n)`.
pub fn canonical_representative(lambda: &Partition) -> Perm {
    let mut images = Vec::with_capacity(lambda.size());
    let mut offset = 0;
    for &len in lambda.parts() {
        for i in 0..len {
            images.push(offset + (i + 1) % len);
        }
        offset += len;
    }
    Perm { images }
}

/// Counts `σ_1 ⋯ σ_m = π` with `σ_i` of type `α_i`, for the canonical
/// representative `π` of `target`.
pub fn count_bruteforce(target: &Partition, alphas: &[Partition], budget: u64) -> Result<BigInt> {
    count_factorizations_of(&canonical_representative(target), alphas, budget)
}

/// Same as [`count_bruteforce`] for an explicit `π`.
pub fn count_factorizations_of(pi: &Perm, alphas: &[Partition], budget: u64) -> Result<BigInt> {
    let (last, free) = alphas.split_last().ok_or(Error::NoFactors)?;
    let n = pi.len();
    for a in alphas {
        if a.size() != n {
            return Err(Error::SizeMismatch { expected: n, found: a.size() });
        }
    }
    let required: BigInt = free.iter().map(Partition::class_size).product();
    if required > BigInt::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    // inverses of each class; σ^{-1} ranges over the same class
    let classes: Vec<Vec<Perm>> = free.iter().map(|a| permutations_of_type(a).collect()).collect();
    let mut scratch = Scratch { seen: vec![false; n], lens: Vec::with_capacity(n) };
    let count = descend(&classes, pi, last.parts(), &mut scratch);
    Ok(BigInt::from(count))
}

struct Scratch {
    seen: Vec<bool>,
    lens: Vec<usize>,
}

/// `rest` is `σ_{i-1}^{-1} ⋯ σ_1^{-1} π`; multiplying on the left by each
/// `τ = σ_i^{-1}` in the class walks the next level.
fn descend(classes: &[Vec<Perm>], rest: &Perm, last: &[usize], scratch: &mut Scratch) -> u64 {
    match classes.split_first() {
        None => {
            cycle_lengths(&rest.images, &mut scratch.seen, &mut scratch.lens);
            u64::from(scratch.lens == last)
        }
        Some((class, deeper)) => {
            let mut total = 0;
            for tau in class {
                total += descend(deeper, &tau.compose(rest), last, scratch);
            }
            total
        }
    }
}
