//! Eventually periodic digit expansions as `n`-adic rationals.
//!
//! A digit stream `a₀ a₁ …` with preperiod `P` and period `T` sums (in the
//! `n`-adic integers) to the rational
//! `Σ_{i<P} aᵢ nⁱ + n^P · W / (1 − n^T)` with `W = Σ_{i<T} a_{P+i} nⁱ`.
//! Conversely every rational whose denominator is coprime to `n` has such an
//! expansion, recovered digit by digit until the remainder repeats.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::numtheory::{check_base, mod_inverse, pow_bigint};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Value of the expansion `preperiod · (period)^∞` in base `n`.
pub fn adic_value(n: u64, preperiod: &[u64], period: &[u64]) -> Result<Rational> {
    check_base(n)?;
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let base = BigInt::from(n);
    let horner = |digits: &[u64]| {
        digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * &base + BigInt::from(d))
    };
    let head = horner(preperiod);
    let word = horner(period);
    let scale = pow_bigint(n, preperiod.len() as u64);
    let denom = BigInt::one() - pow_bigint(n, period.len() as u64);
    Ok(Rational::from_integer(head) + Rational::new(scale * word, denom))
}

/// Base-`n` expansion of `value` as `(preperiod, period)`. Fails when the
/// denominator of `value` shares a factor with `n`.
pub fn adic_digits(n: u64, value: &Rational) -> Result<(Vec<u64>, Vec<u64>)> {
    check_base(n)?;
    let base = BigInt::from(n);
    let den_inv = mod_inverse(value.denom(), &base)
        .ok_or_else(|| Error::InvalidArgument(format!("{value} has no expansion in base {n}")))?;
    let mut seen: HashMap<Rational, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut x = value.clone();
    loop {
        if let Some(&start) = seen.get(&x) {
            let period = digits.split_off(start);
            return Ok((digits, period));
        }
        seen.insert(x.clone(), digits.len());
        let d = (x.numer() * &den_inv).mod_floor(&base);
        digits.push(d.to_u64().expect("digit below base"));
        x = (x - Rational::from_integer(d)) / Rational::from_integer(base.clone());
    }
}
