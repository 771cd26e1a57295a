use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, expect_count, pow2};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Coefficients `ρ^γ_{j,k}` of
/// `R_γ(x, y) = (1/2y) ∏_i ((x+y)^{γ_i} - (x-y)^{γ_i}) = Σ_{j+k=n-1} ρ_{j,k} x^j y^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoTable {
    gamma: Partition,
    /// indexed by the `y` exponent `k`
    by_k: Vec<BigInt>,
}

impl RhoTable {
    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.gamma.size()
    }

    /// `ρ_{j,k}`, or `None` when `j + k ≠ n - 1`.
    pub fn get(&self, j: usize, k: usize) -> Option<&BigInt> {
        if j + k + 1 != self.n() {
            return None;
        }
        self.by_k.get(k)
    }

    /// `ρ_{n-1-k, k}`.
    pub(crate) fn at_k(&self, k: usize) -> &BigInt {
        &self.by_k[k]
    }

    /// `(j, k, ρ_{j,k})` for `k = 0, …, n-1`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        let n = self.n();
        self.by_k.iter().enumerate().map(move |(k, v)| (n - 1 - k, k, v))
    }

    pub fn total(&self) -> BigInt {
        self.by_k.iter().sum()
    }
}

/// Expands `R_γ` directly: each factor is `2 Σ_{c odd} C(γ_i, c) x^{γ_i-c} y^c`.
pub fn rho_table(gamma: &Partition) -> Result<RhoTable> {
    let n = gamma.size();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let mut prod = vec![BigInt::one()]; // indexed by y-degree
    for &g in gamma.parts() {
        let factor: Vec<BigInt> =
            (0..=g).map(|c| if c % 2 == 1 { binomial(g, c) * 2 } else { BigInt::zero() }).collect();
        let mut next = vec![BigInt::zero(); prod.len() + g];
        for (i, a) in prod.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, f) in factor.iter().enumerate() {
                if !f.is_zero() {
                    next[i + c] += a * f;
                }
            }
        }
        prod = next;
    }
    let two = BigInt::from(2);
    if !prod[0].is_zero() {
        return Err(Error::Internal(format!("R polynomial of {gamma} is not divisible by y")));
    }
    let mut by_k = Vec::with_capacity(n);
    for c in &prod[1..] {
        if !(c % &two).is_zero() {
            return Err(Error::Internal(format!("R polynomial of {gamma} is not divisible by 2")));
        }
        by_k.push(c / &two);
    }
    Ok(RhoTable { gamma: gamma.clone(), by_k })
}

/// `T_p(γ) = Σ_{p_1+⋯+p_l=p} ∏_i C(γ_i, 2p_i+1)` for `p = 0, …, pmax`, so that
/// `S_p(γ) = T_p(γ) / ∏ γ_i`.
pub(crate) fn s_numerators(gamma: &Partition, pmax: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); pmax + 1];
    acc[0] = BigInt::one();
    for &g in gamma.parts() {
        let mut next = vec![BigInt::zero(); pmax + 1];
        for (p, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for pi in 0..=(pmax - p) {
                if 2 * pi + 1 > g {
                    break;
                }
                next[p + pi] += a * binomial(g, 2 * pi + 1);
            }
        }
        acc = next;
    }
    acc
}

/// `S_p(γ_1, …, γ_l) = Σ_{p_1+⋯+p_l=p} ∏_i C(γ_i, 2p_i+1) / γ_i`, with `S_0 = 1`.
pub fn s_value(p: usize, gamma: &Partition) -> BigRational {
    if p == 0 {
        return BigRational::one();
    }
    let t = s_numerators(gamma, p).swap_remove(p);
    BigRational::new(t, gamma.part_product())
}

/// Builds the same table from `ρ_{j,k} = 2^{ℓ-1} (z_γ / aut γ) S_p(γ)` at
/// `(j, k) = (n - ℓ - 2p, ℓ + 2p - 1)`.
pub fn rho_closed(gamma: &Partition) -> Result<RhoTable> {
    let n = gamma.size();
    let len = gamma.len();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let scale = BigRational::new(pow2(len - 1) * gamma.z(), gamma.aut());
    let mut by_k = vec![BigInt::zero(); n];
    let mut p = 0;
    while len + 2 * p <= n {
        let k = len + 2 * p - 1;
        by_k[k] = expect_count(&scale * s_value(p, gamma), "closed-form rho entry")?;
        p += 1;
    }
    Ok(RhoTable { gamma: gamma.clone(), by_k })
}
