//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Exponents`], so iteration order is
//! graded lexicographic and output is reproducible. The coefficient ring
//! defaults to [`ExactRational`]; the counting engines also use `BigInt`
//! coefficients where integrality is known up front.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::arith::ExactRational;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Exponent vector of a monomial; all tuples of one polynomial share its arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        Self(exps.into())
    }

    pub fn zero(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn product(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn within(&self, caps: &[u32]) -> bool {
        self.0.iter().zip(caps).all(|(e, c)| e <= c)
    }
}

impl Ord for Exponents {
    /// Graded lexicographic: total degree first, then entry by entry.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient rings usable in [`MultiPoly`].
pub trait Coefficient:
    Clone + Num + Neg<Output = Self> + fmt::Display + for<'a> AddAssign<&'a Self> + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + Num + Neg<Output = T> + fmt::Display + for<'a> AddAssign<&'a T> + for<'a> Mul<&'a T, Output = T>
{
}

/// Sparse polynomial in a fixed number of variables. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<C = ExactRational> {
    arity: usize,
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        Self::monomial(Exponents::zero(arity), c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    /// `c · x^exps`.
    pub fn monomial(exps: Exponents, c: C) -> Self {
        let arity = exps.arity();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { arity, terms }
    }

    /// The variable `x_{index+1}`.
    pub fn variable(index: usize, arity: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Self::monomial(Exponents(exps), C::one())
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats and dropping zeros.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: exps.len() });
            }
            out.add_term(Exponents(exps), c);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponents::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Exponents::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    fn add_term(&mut self, exps: Exponents, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// Coefficient of `x^exps`, zero when absent.
    pub fn coefficient(&self, exps: &[u32]) -> Result<C> {
        if exps.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: exps.len() });
        }
        Ok(self.terms.get(&Exponents(exps.to_vec())).cloned().unwrap_or_else(C::zero))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self { arity: self.arity, terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c)).collect() }
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Drops every term with an exponent above its per-variable cap.
    pub fn prune(&self, caps: &[u32]) -> Self {
        assert_eq!(caps.len(), self.arity, "cap vector arity");
        Self {
            arity: self.arity,
            terms: self.terms.iter().filter(|(e, _)| e.within(caps)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Product, optionally discarding monomials whose exponent in some variable
    /// exceeds `caps`. Capped multiplication equals full multiplication followed
    /// by [`prune`](Self::prune) since exponents only grow.
    pub fn mul_capped(&self, other: &Self, caps: Option<&[u32]>) -> Self {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        if let Some(c) = caps {
            assert_eq!(c.len(), self.arity, "cap vector arity");
        }
        let mut acc: HashMap<Exponents, C> = HashMap::with_capacity(self.len() * other.len().min(64));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.product(eb);
                if let Some(c) = caps {
                    if !e.within(c) {
                        continue;
                    }
                }
                let v = ca.clone() * cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += &v,
                    None => {
                        acc.insert(e, v);
                    }
                }
            }
        }
        Self { arity: self.arity, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `self^k`, pruned against `caps` after every multiplication.
    pub fn pow_capped(&self, k: u32, caps: Option<&[u32]>) -> Self {
        let mut acc = match caps {
            Some(c) => Self::one(self.arity).prune(c),
            None => Self::one(self.arity),
        };
        for _ in 0..k {
            acc = acc.mul_capped(self, caps);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        self.pow_capped(k, None)
    }

    /// Elementary symmetric polynomial `e_k(x_1, …, x_m)`.
    pub fn elem_sym(k: usize, arity: usize) -> Self {
        let mut out = Self::zero(arity);
        if k > arity {
            return out;
        }
        // walk k-subsets of the variables in lexicographic order
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut exps = vec![0u32; arity];
            for &i in &idx {
                exps[i] = 1;
            }
            out.add_term(Exponents(exps), C::one());
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if idx[pos] < arity - k + pos {
                    break;
                }
            }
            idx[pos] += 1;
            for t in pos + 1..k {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }

    /// `e_λ = ∏_j e_{λ_j}`.
    pub fn elem_sym_indexed(lambda: &Partition, arity: usize) -> Self {
        lambda.parts().iter().fold(Self::one(arity), |acc, &part| acc.mul_capped(&Self::elem_sym(part, arity), None))
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn add(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn sub(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn neg(self) -> MultiPoly<C> {
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;

    fn mul(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self.mul_capped(rhs, None)
    }
}

impl<C: Coefficient> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, (e, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                    .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `e_k(x_1, …, x_m)` over the rationals.
pub fn elem_sym(k: usize, arity: usize) -> MultiPoly {
    MultiPoly::elem_sym(k, arity)
}

/// `e_λ(x_1, …, x_m)` over the rationals.
pub fn elem_sym_indexed(lambda: &Partition, arity: usize) -> MultiPoly {
    MultiPoly::elem_sym_indexed(lambda, arity)
}

/// `(Σ_{s odd, s ≤ m} e_s)^{n-1}` with integer coefficients, pruned at `cap` per variable.
pub(crate) fn odd_elementary_power_int(arity: usize, n: usize, cap: u32) -> MultiPoly<BigInt> {
    let caps = vec![cap; arity];
    let mut base = MultiPoly::<BigInt>::zero(arity);
    for s in (1..=arity).step_by(2) {
        base = &base + &MultiPoly::elem_sym(s, arity);
    }
    base.pow_capped(n.saturating_sub(1) as u32, Some(&caps))
}

/// `(Σ_{s odd, s ≤ m} e_s(x_1, …, x_m))^{n-1}`, pruned at `cap` per variable.
///
/// By the multinomial theorem this is `(n-1)! Σ_{ℓ(λ)=n-1} e_{2λ-1}/aut λ`.
pub fn odd_elementary_power(arity: usize, n: usize, cap: u32) -> MultiPoly {
    odd_elementary_power_int(arity, n, cap).map_coefficients(|c| BigRational::from_integer(c.clone()))
}

/// Coefficient of `x^t` in `p`; errors on arity mismatch.
pub fn coefficient_of<C: Coefficient>(p: &MultiPoly<C>, t: &[u32]) -> Result<C> {
    p.coefficient(t)
}

/// Falling factorial `t (t-1) ⋯ (t-j+1)`, i.e. 𝔇(x^j) evaluated at `t`.
pub fn falling_eval(j: u32, t: i64) -> BigInt {
    (0..j as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(t - i))
}

/// 𝔇(f) evaluated at `t`: each monomial power `x_i^e` becomes the falling
/// factorial of `t_i` of length `e`.
pub fn d_eval<C: Coefficient + Mul<BigInt, Output = C>>(f: &MultiPoly<C>, t: &[i64]) -> Result<C> {
    if t.len() != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: t.len() });
    }
    let mut acc = C::zero();
    for (e, c) in f.terms() {
        let weight = e.as_slice().iter().zip(t).fold(BigInt::one(), |w, (&j, &ti)| w * falling_eval(j, ti));
        if !weight.is_zero() {
            acc += &(c.clone() * weight);
        }
    }
    Ok(acc)
}

/// Integer polynomial laid out for repeated 𝔇-evaluation at nonnegative points.
///
/// Terms are sorted lexicographically so that the evaluation walks them as a
/// trie, sharing partial products and skipping any subtree whose exponent
/// exceeds the evaluation point.
#[derive(Clone, Debug)]
pub(crate) struct FallingEvaluator {
    arity: usize,
    terms: Vec<(Vec<u32>, BigInt)>,
}

impl FallingEvaluator {
    pub(crate) fn new(p: &MultiPoly<BigInt>) -> Self {
        let mut terms: Vec<(Vec<u32>, BigInt)> = p.terms().map(|(e, c)| (e.as_slice().to_vec(), c.clone())).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Self { arity: p.arity(), terms }
    }

    /// `falling[i][t][e]` must hold the falling factorial of `t` of length `e`
    /// for `e ≤ t`; `point` must be nonnegative.
    pub(crate) fn eval(&self, point: &[usize], falling: &[Vec<BigInt>]) -> BigInt {
        debug_assert_eq!(point.len(), self.arity);
        let mut acc = BigInt::zero();
        self.walk(&self.terms, 0, point, falling, &BigInt::one(), &mut acc);
        acc
    }

    fn walk(
        &self,
        terms: &[(Vec<u32>, BigInt)],
        level: usize,
        point: &[usize],
        falling: &[Vec<BigInt>],
        prefix: &BigInt,
        acc: &mut BigInt,
    ) {
        if level == self.arity {
            for (_, c) in terms {
                *acc += prefix * c;
            }
            return;
        }
        let t = point[level];
        let mut start = 0;
        while start < terms.len() {
            let e = terms[start].0[level] as usize;
            if e > t {
                break;
            }
            let mut end = start + 1;
            while end < terms.len() && terms[end].0[level] as usize == e {
                end += 1;
            }
            let group = &terms[start..end];
            if e == 0 {
                self.walk(group, level + 1, point, falling, prefix, acc);
            } else {
                let next = prefix * &falling[t][e];
                self.walk(group, level + 1, point, falling, &next, acc);
            }
            start = end;
        }
    }
}

/// `falling[t][e] = t!/(t-e)!` for `0 ≤ e ≤ t ≤ max`.
pub(crate) fn falling_table(max: usize) -> Vec<Vec<BigInt>> {
    (0..=max)
        .map(|t| {
            let mut row = Vec::with_capacity(t + 1);
            let mut acc = BigInt::one();
            row.push(acc.clone());
            for e in 1..=t {
                acc *= BigInt::from(t + 1 - e);
                row.push(acc.clone());
            }
            row
        })
        .collect()
}
