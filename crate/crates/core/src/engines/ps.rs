//! Genus-stratified counting: `S_p`, the `P_q^b` polynomials evaluated through
//! the falling-factorial operator, and the genus-0 product formula.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rho::s_numerators;
use super::{genus_of, FactorizationProblem};
use crate::arith::{expect_count, factorial, pow2};
use crate::error::{Error, Result};
use crate::partitions::Partitions;
use crate::polynomial::{d_eval, falling_table, FallingEvaluator, MultiPoly};

/// `P_a^b(t) = Σ_{λ ⊢ a, ℓ(λ) ≤ b} 𝔇(e_{2λ+1}(x) / aut λ)` at `x = t`, with `P_0^b = 1`.
pub fn p_value(a: usize, b: usize, t: &[i64]) -> BigRational {
    p_value_bounded(a, Some(b), t)
}

/// `P_a` without the length restriction on λ.
pub fn p_value_unrestricted(a: usize, t: &[i64]) -> BigRational {
    p_value_bounded(a, None, t)
}

fn p_value_bounded(a: usize, max_len: Option<usize>, t: &[i64]) -> BigRational {
    if a == 0 {
        return BigRational::one();
    }
    let m = t.len();
    if m < 3 {
        return BigRational::zero();
    }
    // parts with 2k+1 > m give a vanishing e_{2k+1}
    let mut lambdas = Partitions::of(a).max_part((m - 1) / 2);
    if let Some(b) = max_len {
        lambdas = lambdas.max_len(b);
    }
    let mut total = BigRational::zero();
    for lambda in lambdas {
        let e: MultiPoly = MultiPoly::elem_sym_indexed(&lambda.double_plus_one(), m);
        let v = d_eval(&e, t).expect("arity matches by construction");
        total += v / BigRational::from_integer(lambda.aut());
    }
    total
}

/// `q! · Σ_{λ ⊢ q, ℓ(λ) ≤ max_len} e_{2λ+1}/aut λ` for `q = 0, …, qmax`, with
/// integer coefficients and monomials pruned at `caps`.
///
/// Uses compositions: `U_{q,ℓ} = Σ_k e_{2k+1} U_{q-k,ℓ-1}` sums `∏ e_{2c_j+1}`
/// over compositions `c` of `q` into `ℓ` parts, which is `ℓ!` times the sum
/// over partitions of length `ℓ` weighted by `1/aut λ`.
pub(crate) fn scaled_p_polynomials(
    arity: usize,
    qmax: usize,
    caps: &[u32],
    max_len: Option<usize>,
) -> Vec<MultiPoly<BigInt>> {
    let kmax = arity.saturating_sub(1) / 2;
    let odd: Vec<MultiPoly<BigInt>> = (0..=kmax).map(|k| MultiPoly::elem_sym(2 * k + 1, arity).prune(caps)).collect();
    // comps[q][l] = U_{q,l}
    let mut comps: Vec<Vec<MultiPoly<BigInt>>> = Vec::with_capacity(qmax + 1);
    comps.push(vec![MultiPoly::one(arity).prune(caps)]);
    for q in 1..=qmax {
        let mut row = vec![MultiPoly::zero(arity); q + 1];
        for (l, slot) in row.iter_mut().enumerate().skip(1) {
            let mut acc = MultiPoly::zero(arity);
            for k in 1..=kmax.min(q) {
                let prev = &comps[q - k];
                if l - 1 < prev.len() && !prev[l - 1].is_zero() {
                    acc = &acc + &prev[l - 1].mul_capped(&odd[k], Some(caps));
                }
            }
            *slot = acc;
        }
        comps.push(row);
    }
    comps
        .iter()
        .enumerate()
        .map(|(q, row)| {
            let qf = factorial(q);
            let mut out = MultiPoly::zero(arity);
            for (l, u) in row.iter().enumerate() {
                if max_len.is_some_and(|b| l > b) || u.is_zero() {
                    continue;
                }
                out = &out + &u.scale(&(&qf / factorial(l)));
            }
            out
        })
        .collect()
}

/// Counts full-cycle factorizations from genus-stratified data; zero whenever
/// the genus is not a nonnegative integer.
pub fn count_ps(problem: &FactorizationProblem) -> Result<BigInt> {
    count_ps_bounded(problem, Some(problem.n() - 1))
}

/// Same as [`count_ps`] with `P_q` in place of `P_q^{n-1}`.
pub fn count_ps_unrestricted(problem: &FactorizationProblem) -> Result<BigInt> {
    count_ps_bounded(problem, None)
}

fn count_ps_bounded(problem: &FactorizationProblem, max_len: Option<usize>) -> Result<BigInt> {
    let Some(g) = genus_of(problem).genus else {
        return Ok(BigInt::zero());
    };
    let n = problem.n();
    let m = problem.m();
    let alphas = problem.alphas();
    let r: Vec<usize> = alphas.iter().map(|a| n - a.len()).collect();

    // weights[i][p] = (ℓ_i + 2p - 1)! T_p(α_i), where S_p(α_i) = T_p(α_i) / ∏ α_i
    let weights: Vec<Vec<BigInt>> = alphas
        .iter()
        .zip(&r)
        .map(|(a, &ri)| {
            let pmax = g.min(ri / 2);
            s_numerators(a, pmax).into_iter().enumerate().map(|(p, t)| factorial(a.len() + 2 * p - 1) * t).collect()
        })
        .collect();

    let caps: Vec<u32> = r.iter().map(|&x| x as u32).collect();
    let polys = scaled_p_polynomials(m, g, &caps, max_len);
    let evaluators: Vec<FallingEvaluator> = polys.iter().map(FallingEvaluator::new).collect();
    let falling = falling_table(r.iter().copied().max().unwrap_or(0));

    let mut by_q = vec![BigInt::zero(); g + 1];
    let mut point = vec![0usize; m];
    let walk = TupleWalk { r: &r, weights: &weights, evaluators: &evaluators, falling: &falling };
    walk.run(0, g, &mut point, &BigInt::one(), &mut by_q);

    let mut total = BigRational::zero();
    for (q, v) in by_q.into_iter().enumerate() {
        if !v.is_zero() {
            total += BigRational::new(v, factorial(q));
        }
    }
    let z_prod = alphas.iter().fold(BigInt::one(), |acc, a| acc * a.z());
    let scale = BigRational::new(BigInt::from(n).pow(m as u32 - 1), pow2(2 * g) * z_prod);
    expect_count(scale * total, "genus-stratified count")
}

/// Enumerates `(p_1, …, p_m)` with `Σ p_i ≤ g` and `r_i - 2p_i ≥ 0`; the
/// remaining budget is `q`.
struct TupleWalk<'a> {
    r: &'a [usize],
    weights: &'a [Vec<BigInt>],
    evaluators: &'a [FallingEvaluator],
    falling: &'a [Vec<BigInt>],
}

impl TupleWalk<'_> {
    fn run(&self, i: usize, budget: usize, point: &mut [usize], weight: &BigInt, by_q: &mut [BigInt]) {
        if i == self.r.len() {
            let f = self.evaluators[budget].eval(point, self.falling);
            if !f.is_zero() {
                by_q[budget] += f * weight;
            }
            return;
        }
        for (p, w) in self.weights[i].iter().enumerate().take(budget + 1) {
            if w.is_zero() {
                continue;
            }
            point[i] = self.r[i] - 2 * p;
            self.run(i + 1, budget - p, point, &(weight * w), by_q);
        }
    }
}

/// Genus-0 closed form `n^{m-1} ∏ (ℓ(α_i) - 1)! / aut α_i`.
pub fn count_genus0(problem: &FactorizationProblem) -> Result<BigInt> {
    let data = genus_of(problem);
    if data.genus != Some(0) {
        return Err(Error::NotGenusZero(match data.genus {
            Some(g) => format!("genus is {g}"),
            None => format!("twice the genus is {}", data.g2),
        }));
    }
    let m = problem.m() as u32;
    let mut num = BigInt::from(problem.n()).pow(m - 1);
    let mut den = BigInt::one();
    for a in problem.alphas() {
        num *= factorial(a.len() - 1);
        den *= a.aut();
    }
    expect_count(BigRational::new(num, den), "genus-0 count")
}
