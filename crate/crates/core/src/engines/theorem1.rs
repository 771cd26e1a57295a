use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rho::{rho_table, RhoTable};
use super::FactorizationProblem;
use crate::arith::{expect_count, factorial, pow2};
use crate::error::Result;
use crate::polynomial::odd_elementary_power_int;

/// Counts through the ρ-coefficients and the odd elementary symmetric sum.
///
/// The inner sum over partitions with `n-1` parts is read off
/// `(Σ_{s odd} e_s)^{n-1} / (n-1)!`, and only its stored monomials are visited.
pub fn count_theorem1(problem: &FactorizationProblem) -> Result<BigInt> {
    let n = problem.n();
    let m = problem.m();
    let rhos: Vec<RhoTable> = problem.alphas().iter().map(rho_table).collect::<Result<_>>()?;
    let facts: Vec<BigInt> = (0..n).map(factorial).collect();
    let power = odd_elementary_power_int(m, n, (n - 1) as u32);

    let mut sum = BigInt::zero();
    'terms: for (exps, coeff) in power.terms() {
        let mut term = coeff.clone();
        for (rho, &j) in rhos.iter().zip(exps.as_slice()) {
            let j = j as usize;
            let k = n - 1 - j;
            let r = rho.at_k(k);
            if r.is_zero() {
                continue 'terms;
            }
            term *= &facts[j] * &facts[k] * r;
        }
        sum += term;
    }

    let z_prod = problem.alphas().iter().fold(BigInt::one(), |acc, a| acc * a.z());
    let denom = factorial(n - 1) * pow2((n - 1) * (m - 1)) * z_prod;
    let numer = BigInt::from(n).pow(m as u32 - 1) * sum;
    expect_count(BigRational::new(numer, denom), "theorem-1 count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn problem(alphas: &[&[usize]]) -> FactorizationProblem {
        FactorizationProblem::new(alphas.iter().map(|a| Partition::new(a.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(count_theorem1(&problem(&[&[3], &[3]])).unwrap(), 1.into());
        assert_eq!(count_theorem1(&problem(&[&[2, 1], &[2, 1]])).unwrap(), 3.into());
        assert_eq!(count_theorem1(&problem(&[&[5]])).unwrap(), 1.into());
    }

    #[test]
    fn single_factor_is_an_indicator() {
        for n in 1..=7 {
            for a in crate::partitions::Partitions::of(n) {
                let want = if a.len() == 1 { 1 } else { 0 };
                assert_eq!(count_theorem1(&FactorizationProblem::new(vec![a]).unwrap()).unwrap(), want.into());
            }
        }
    }
}
