//! Integer partitions as cycle types of permutations.
//!
//! A [`Partition`] keeps its parts in weakly decreasing order together with the
//! multiplicity view `i -> m_i`; both are fixed at construction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
    /// `(part, multiplicity)` pairs, ascending by part.
    mult: Vec<(usize, usize)>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts and the empty
    /// sequence are rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// The partition of 0. Only produced by enumeration.
    pub fn empty() -> Self {
        Self { parts: Vec::new(), size: 0, mult: Vec::new() }
    }

    fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        let mut mult: Vec<(usize, usize)> = Vec::new();
        for &p in parts.iter().rev() {
            match mult.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => mult.push((p, 1)),
            }
        }
        Self { parts, size, mult }
    }

    /// `[1^n]`, the cycle type of the identity.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `(n)`, the cycle type of a full cycle.
    pub fn full_cycle(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The hook `(a|b) = [1^b, a+1]`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat_n(1, b));
        Self::from_parts_unchecked(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn multiplicities(&self) -> &[(usize, usize)] {
        &self.mult
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.mult.iter().find(|(p, _)| *p == part).map_or(0, |&(_, m)| m)
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of this type.
    pub fn z(&self) -> BigInt {
        self.mult.iter().fold(BigInt::one(), |acc, &(i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
    }

    /// `aut λ = ∏ m_i!`.
    pub fn aut(&self) -> BigInt {
        self.mult.iter().fold(BigInt::one(), |acc, &(_, m)| acc * factorial(m))
    }

    /// Number of permutations of cycle type λ, `n!/z_λ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size) / self.z()
    }

    /// Product of the parts, equal to `z_λ / aut λ`.
    pub fn part_product(&self) -> BigInt {
        self.parts.iter().fold(BigInt::one(), |acc, &p| acc * BigInt::from(p))
    }

    /// Replaces every part `i` by `2i - 1`.
    pub fn double_minus_one(&self) -> Self {
        Self::from_parts_unchecked(self.parts.iter().map(|&p| 2 * p - 1).collect())
    }

    /// Replaces every part `i` by `2i + 1`.
    pub fn double_plus_one(&self) -> Self {
        Self::from_parts_unchecked(self.parts.iter().map(|&p| 2 * p + 1).collect())
    }

    /// Frobenius coordinates `(a, b)` when this partition is a hook.
    pub fn as_hook(&self) -> Option<(usize, usize)> {
        let first = *self.parts.first()?;
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some((first - 1, self.len() - 1))
        } else {
            None
        }
    }

    /// Multiplicity notation such as `[1^2 3]`.
    pub fn multiplicity_notation(&self) -> String {
        let body: Vec<String> =
            self.mult.iter().map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") }).collect();
        format!("[{}]", body.join(" "))
    }
}

impl fmt::Display for Partition {
    /// Comma form, e.g. `3,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Builds a partition from signed entries, rejecting anything `<= 0`.
pub fn make_partition(parts: &[i64]) -> Result<Partition> {
    if parts.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut out = Vec::with_capacity(parts.len());
    for &p in parts {
        if p <= 0 {
            return Err(Error::NonPositivePart(p));
        }
        out.push(p as usize);
    }
    Partition::new(out)
}

/// Lazy enumeration of the partitions of `a` under optional length and part
/// constraints, in decreasing lexicographic order.
///
/// ```
/// use fullcycle::partitions::Partitions;
/// let two_parts: Vec<_> = Partitions::of(4).exact_len(2).map(|p| p.to_string()).collect();
/// assert_eq!(two_parts, ["3,1", "2,2"]);
/// ```
#[derive(Clone, Debug)]
pub struct Partitions {
    exact_len: Option<usize>,
    max_len: Option<usize>,
    // (prefix, remaining, largest allowed next part)
    stack: Vec<(Vec<usize>, usize, usize)>,
}

impl Partitions {
    pub fn of(a: usize) -> Self {
        Self { exact_len: None, max_len: None, stack: vec![(Vec::new(), a, a)] }
    }

    pub fn exact_len(mut self, len: usize) -> Self {
        self.exact_len = Some(len);
        self
    }

    pub fn max_len(mut self, len: usize) -> Self {
        self.max_len = Some(len);
        self
    }

    pub fn max_part(mut self, part: usize) -> Self {
        for frame in &mut self.stack {
            frame.2 = frame.2.min(part);
        }
        self
    }

    fn length_bounds(&self) -> (usize, usize) {
        let hi = match (self.exact_len, self.max_len) {
            (Some(e), Some(m)) => e.min(m),
            (Some(e), None) => e,
            (None, Some(m)) => m,
            (None, None) => usize::MAX,
        };
        (self.exact_len.unwrap_or(0), hi)
    }

    /// Whether `prefix` can still be completed with `remaining` using parts `<= cap`.
    fn feasible(&self, len: usize, remaining: usize, cap: usize) -> bool {
        let (lo, hi) = self.length_bounds();
        if remaining == 0 {
            return len >= lo && len <= hi;
        }
        if cap == 0 {
            return false;
        }
        let fewest = remaining.div_ceil(cap);
        let most = remaining;
        len.saturating_add(fewest) <= hi && len + most >= lo
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while let Some((prefix, remaining, cap)) = self.stack.pop() {
            if !self.feasible(prefix.len(), remaining, cap) {
                continue;
            }
            if remaining == 0 {
                return Some(Partition::from_parts_unchecked(prefix));
            }
            // smallest first part pushed first so the largest is popped first
            for part in 1..=cap.min(remaining) {
                let mut next = prefix.clone();
                next.push(part);
                self.stack.push((next, remaining - part, part));
            }
        }
        None
    }
}

/// Function form of [`Partitions`].
pub fn enumerate_partitions(
    a: usize,
    exact_len: Option<usize>,
    max_len: Option<usize>,
    max_part: Option<usize>,
) -> Partitions {
    let mut it = Partitions::of(a);
    if let Some(l) = exact_len {
        it = it.exact_len(l);
    }
    if let Some(l) = max_len {
        it = it.max_len(l);
    }
    if let Some(p) = max_part {
        it = it.max_part(p);
    }
    it
}
