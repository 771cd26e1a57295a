//! Counting engines for factorizations of the full cycle `(1 2 ⋯ n)`.
//!
//! * [`count_theorem1`]: ρ-coefficients of `R_γ(x, y)` against the odd
//!   elementary symmetric sum.
//! * [`count_ps`]: genus-stratified sum over `S_p` and `P_q^{n-1}`.
//! * [`count_genus0`]: the product formula for top connection coefficients.
//! * hook characters ([`crate::characters::count_fullcycle_characters`]) and
//!   the brute-force oracle, reachable through [`count`].
//!
//! Every engine returns 0 when twice the genus is odd or negative.

mod ps;
mod rho;
mod theorem1;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::count_fullcycle_characters;
use crate::error::{Error, Result};
use crate::oracle::{count_bruteforce, DEFAULT_BUDGET};
use crate::partitions::Partition;

pub use ps::{count_genus0, count_ps, count_ps_unrestricted, p_value, p_value_unrestricted};
pub use rho::{rho_closed, rho_table, s_value, RhoTable};
pub use theorem1::count_theorem1;

/// Cycle types `α_1, …, α_m` of `n` for an ordered factorization of the full cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct FactorizationProblem {
    n: usize,
    alphas: Vec<Partition>,
}

impl FactorizationProblem {
    /// All factors must be partitions of the same `n`; at least one is required.
    pub fn new(alphas: Vec<Partition>) -> Result<Self> {
        let n = alphas.first().ok_or(Error::NoFactors)?.size();
        Self::with_size(n, alphas)
    }

    pub fn with_size(n: usize, alphas: Vec<Partition>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::NoFactors);
        }
        if n == 0 {
            return Err(Error::EmptyPartition);
        }
        for a in &alphas {
            if a.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: a.size() });
            }
        }
        Ok(Self { n, alphas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of factors.
    pub fn m(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Partition] {
        &self.alphas
    }
}

impl TryFrom<Vec<Partition>> for FactorizationProblem {
    type Error = Error;

    fn try_from(alphas: Vec<Partition>) -> Result<Self> {
        Self::new(alphas)
    }
}

impl From<FactorizationProblem> for Vec<Partition> {
    fn from(p: FactorizationProblem) -> Self {
        p.alphas
    }
}

/// `r_i = n - ℓ(α_i)` and `g2 = Σ r_i - n + 1`; the genus is `g2/2` when that
/// is a nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusData {
    pub r: Vec<usize>,
    pub g2: i64,
    pub genus: Option<usize>,
}

pub fn genus_of(problem: &FactorizationProblem) -> GenusData {
    let n = problem.n();
    let r: Vec<usize> = problem.alphas().iter().map(|a| n - a.len()).collect();
    let g2 = r.iter().sum::<usize>() as i64 - n as i64 + 1;
    let genus = (g2 >= 0 && g2 % 2 == 0).then_some((g2 / 2) as usize);
    GenusData { r, g2, genus }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Auto,
    Theorem1,
    Ps,
    Characters,
    Oracle,
    Genus0,
}

impl Engine {
    pub const ALL: [Engine; 6] =
        [Engine::Auto, Engine::Theorem1, Engine::Ps, Engine::Characters, Engine::Oracle, Engine::Genus0];

    pub fn as_str(&self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Theorem1 => "theorem1",
            Engine::Ps => "ps",
            Engine::Characters => "characters",
            Engine::Oracle => "oracle",
            Engine::Genus0 => "genus0",
        }
    }

    /// The engine that actually runs for this selector.
    pub fn resolve(self) -> Engine {
        match self {
            Engine::Auto => Engine::Ps,
            e => e,
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown engine `{s}`") })
    }
}

/// Runs one engine; the oracle uses [`DEFAULT_BUDGET`].
pub fn count(problem: &FactorizationProblem, engine: Engine) -> Result<BigInt> {
    count_with_budget(problem, engine, DEFAULT_BUDGET)
}

pub fn count_with_budget(problem: &FactorizationProblem, engine: Engine, budget: u64) -> Result<BigInt> {
    match engine.resolve() {
        Engine::Theorem1 => count_theorem1(problem),
        Engine::Ps => count_ps(problem),
        Engine::Characters => count_fullcycle_characters(problem.alphas()),
        Engine::Genus0 => count_genus0(problem),
        Engine::Oracle => count_bruteforce(&Partition::full_cycle(problem.n())?, problem.alphas(), budget),
        Engine::Auto => unreachable!("resolved above"),
    }
}
