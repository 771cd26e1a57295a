//! Exact integer and rational helpers shared by every module.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;
/// Arbitrary-precision rational, always kept in lowest terms.
pub type ExactRational = BigRational;

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!`, served from a table that grows to the largest `n` requested so far.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Converts a rational that must be integral into an integer.
pub(crate) fn expect_integer(value: BigRational, what: &str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::Internal(format!("{what} is not an integer: {value}")));
    }
    Ok(value.to_integer())
}

/// Like [`expect_integer`] but also rejects negative values.
pub(crate) fn expect_count(value: BigRational, what: &str) -> Result<BigInt> {
    let v = expect_integer(value, what)?;
    if v.is_negative() {
        return Err(Error::Internal(format!("{what} is negative: {v}")));
    }
    Ok(v)
}
