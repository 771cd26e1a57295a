//! Irreducible characters of the symmetric group.
//!
//! Hook characters come from the generating series
//! `F_γ(u, v) = ∏_i (u^{γ_i} - (-v)^{γ_i}) / (u + v)`; general characters come
//! from the border-strip (Murnaghan–Nakayama) recursion and serve as an
//! independent check and for arbitrary target classes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, expect_count, factorial};
use crate::error::{Error, Result};
use crate::partitions::{Partition, Partitions};

/// The hook `(a|b) = [1^b, a+1]` in Frobenius notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hook {
    pub a: usize,
    pub b: usize,
}

impl Hook {
    pub fn size(&self) -> usize {
        self.a + self.b + 1
    }

    pub fn to_partition(&self) -> Partition {
        Partition::hook(self.a, self.b)
    }
}

/// Coefficients of `F_γ(u, v) = Σ_{a+b=n-1} χ^{(a|b)}_γ u^a v^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookSeries {
    n: usize,
    /// indexed by `a`; the `v` exponent is `n - 1 - a`
    coeffs: Vec<BigInt>,
}

impl HookSeries {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `χ^{(a|b)}_γ`; `None` unless `a + b = n - 1`.
    pub fn get(&self, a: usize, b: usize) -> Option<&BigInt> {
        if a + b + 1 != self.n {
            return None;
        }
        self.coeffs.get(a)
    }

    /// `(hook, value)` pairs for `a = n-1, …, 0`.
    pub fn iter(&self) -> impl Iterator<Item = (Hook, &BigInt)> {
        let n = self.n;
        self.coeffs.iter().enumerate().rev().map(move |(a, c)| (Hook { a, b: n - 1 - a }, c))
    }
}

/// Expands `∏_i (u^{γ_i} - (-v)^{γ_i})` and divides it by `u + v`.
pub fn hook_series(gamma: &Partition) -> Result<HookSeries> {
    let n = gamma.size();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    // homogeneous of degree n, indexed by u-degree
    let mut prod = vec![BigInt::one()];
    for &g in gamma.parts() {
        let mut next = vec![BigInt::zero(); prod.len() + g];
        let v_sign = if g % 2 == 0 { -1 } else { 1 }; // -(-1)^g
        for (i, c) in prod.iter().enumerate() {
            next[i + g] += c;
            if v_sign > 0 {
                next[i] += c;
            } else {
                next[i] -= c;
            }
        }
        prod = next;
    }
    // synthetic division by (u + v), highest u-degree first
    let mut quot = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for a in (0..n).rev() {
        let c = &prod[a + 1] - &carry;
        carry = c.clone();
        quot[a] = c;
    }
    if prod[0] != carry {
        return Err(Error::Internal(format!("hook series of {gamma} left a remainder")));
    }
    Ok(HookSeries { n, coeffs: quot })
}

/// `χ^{(a|b)}_γ`.
pub fn hook_char(a: usize, b: usize, gamma: &Partition) -> Result<BigInt> {
    let n = gamma.size();
    if a + b + 1 != n {
        return Err(Error::HookSize { a, b, n });
    }
    let series = hook_series(gamma)?;
    Ok(series.get(a, b).cloned().expect("index checked"))
}

/// Degree of `χ^{(a|b)}`, `C(a+b, b)`.
pub fn hook_degree(a: usize, b: usize) -> BigInt {
    binomial(a + b, b)
}

/// Memoized border-strip recursion.
///
/// Shapes are handled through their beta-sets: removing a border strip of
/// length `k` moves one bead from `x` to `x - k`, and its height is the number
/// of beads strictly in between.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^β_μ`.
    pub fn character(&mut self, beta: &Partition, mu: &Partition) -> Result<BigInt> {
        if beta.size() != mu.size() {
            return Err(Error::SizeMismatch { expected: beta.size(), found: mu.size() });
        }
        Ok(self.eval(beta.parts(), mu.parts()))
    }

    fn eval(&mut self, shape: &[usize], mu: &[usize]) -> BigInt {
        let Some((&k, rest)) = mu.split_first() else {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        if rest.is_empty() {
            // one strip covering the whole shape: only hooks survive
            return match Partition::new(shape.to_vec()).ok().and_then(|p| p.as_hook()) {
                Some((_, b)) if b % 2 == 0 => BigInt::one(),
                Some(_) => -BigInt::one(),
                None => BigInt::zero(),
            };
        }
        let key = (shape.to_vec(), mu.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let len = shape.len();
        let beads: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = BigInt::zero();
        for (idx, &x) in beads.iter().enumerate() {
            if x < k || beads.contains(&(x - k)) {
                continue;
            }
            let target = x - k;
            let height = beads.iter().filter(|&&y| y > target && y < x).count();
            let mut moved = beads.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<usize> =
                moved.iter().enumerate().map(|(i, &y)| y - (len - 1 - i)).filter(|&p| p > 0).collect();
            let v = self.eval(&smaller, rest);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^β_μ` via the border-strip recursion.
pub fn mn_character(beta: &Partition, mu: &Partition) -> Result<BigInt> {
    MnEvaluator::new().character(beta, mu)
}

fn check_sizes<'a>(n: usize, parts: impl IntoIterator<Item = &'a Partition>) -> Result<()> {
    for p in parts {
        if p.size() != n {
            return Err(Error::SizeMismatch { expected: n, found: p.size() });
        }
    }
    Ok(())
}

/// Connection coefficient `c^λ_{α_1…α_m}` for an arbitrary target class, summed
/// over all irreducible characters.
pub fn count_via_characters(lambda: &Partition, alphas: &[Partition]) -> Result<BigInt> {
    if alphas.is_empty() {
        return Err(Error::NoFactors);
    }
    let n = lambda.size();
    check_sizes(n, alphas)?;
    let m = alphas.len();
    let identity = Partition::ones(n)?;
    let mut mn = MnEvaluator::new();
    let mut sum = BigRational::zero();
    for beta in Partitions::of(n) {
        let mut num = mn.character(&beta, lambda)?;
        if num.is_zero() {
            continue;
        }
        for a in alphas {
            num *= mn.character(&beta, a)?;
        }
        let degree = mn.character(&beta, &identity)?;
        sum += BigRational::new(num, degree.pow(m as u32 - 1));
    }
    let z_prod = alphas.iter().fold(BigInt::one(), |acc, a| acc * a.z());
    let prefactor = BigRational::new(factorial(n).pow(m as u32 - 1), z_prod);
    expect_count(prefactor * sum, "character-sum count")
}

/// `c^{(n)}_{α_1…α_m}` from hook characters only.
pub fn count_fullcycle_characters(alphas: &[Partition]) -> Result<BigInt> {
    let first = alphas.first().ok_or(Error::NoFactors)?;
    let n = first.size();
    check_sizes(n, alphas)?;
    let m = alphas.len() as u32;
    let series: Vec<HookSeries> = alphas.iter().map(hook_series).collect::<Result<_>>()?;
    let mut sum = BigInt::zero();
    for a in 0..n {
        let b = n - 1 - a;
        let mut term = (factorial(a) * factorial(b)).pow(m - 1);
        for s in &series {
            term *= s.get(a, b).expect("in range");
        }
        if b % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let z_prod = alphas.iter().fold(BigInt::one(), |acc, a| acc * a.z());
    let value = BigRational::new(BigInt::from(n).pow(m - 1) * sum, z_prod);
    expect_count(value, "hook-character count")
}
