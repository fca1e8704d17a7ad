//! Base compatibility: an adjacent family can only use bases that are all
//! powers of one integer, and for two bases without a common root a
//! violating lattice point exists at every tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::lattice::split_fraction;
use crate::exact::numtheory::{factorize, phi, pow_bigint, primitive_root};
use crate::exact::rational::{round_half_down, serde_bigint, serde_str};
use crate::exact::Rational;

/// The common primitive root and the exponents `sᵢ` with `nᵢ = root^sᵢ`, or
/// `None` when the primitive roots differ.
pub fn base_compatible(bases: &[u64]) -> Result<Option<(u64, Vec<u32>)>> {
    if bases.is_empty() {
        return Err(Error::InvalidArgument("base list must be non-empty".into()));
    }
    let roots = bases
        .iter()
        .map(|&n| primitive_root(n))
        .collect::<Result<Vec<_>>>()?;
    let root = roots[0].0;
    if roots.iter().any(|&(r, _)| r != root) {
        return Ok(None);
    }
    Ok(Some((root, roots.into_iter().map(|(_, e)| e).collect())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessCase {
    /// Some prime has `a·φ(m) >= a'·m`; the tolerance is `C / n₂^m`.
    I,
    /// Otherwise; the tolerance is `C / (n₁·n₁^φ(m))`.
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncompatibilityWitness {
    pub m: u64,
    pub phi: u64,
    #[serde(with = "serde_bigint")]
    pub k1: BigInt,
    #[serde(with = "serde_bigint")]
    pub k2: BigInt,
    /// `|δ − k₁/n₁^φ − k₂/n₂^m|`
    #[serde(with = "serde_str")]
    pub distance: Rational,
    #[serde(with = "serde_str")]
    pub tolerance: Rational,
    pub case: WitnessCase,
    /// `max (a·φ(m) − a'·m)` over primes of `n₁`, if any.
    pub psi1: Option<i64>,
    /// `max (a'·m − a·φ(m))` over primes of `n₂`, if any.
    pub psi2: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WitnessSearch {
    Found(IncompatibilityWitness),
    Exhausted {
        m_max: u64,
        /// Smallest `n₂^m · dist` seen.
        #[serde(with = "serde_str")]
        best: Rational,
    },
}

/// Exponent vectors of `n1` and `n2` over their joint primes.
fn exponent_pairs(n1: u64, n2: u64) -> Vec<(i64, i64)> {
    let f1 = factorize(n1);
    let f2 = factorize(n2);
    let mut primes: Vec<u64> = f1.primes.iter().chain(&f2.primes).copied().collect();
    primes.sort_unstable();
    primes.dedup();
    primes
        .into_iter()
        .map(|p| (f1.exponent_of(p) as i64, f2.exponent_of(p) as i64))
        .collect()
}

/// `Ψ₁(m)` and `Ψ₂(m)` for `φ = φ(n₂, n₁, m)`.
pub fn psi_values(n1: u64, n2: u64, m: u64) -> Result<(Option<i64>, Option<i64>)> {
    let f = phi(n2, n1, m)? as i64;
    let m = m as i64;
    let pairs = exponent_pairs(n1, n2);
    let psi1 = pairs
        .iter()
        .filter(|(a, _)| *a >= 1)
        .map(|(a, b)| a * f - b * m)
        .max();
    let psi2 = pairs
        .iter()
        .filter(|(_, b)| *b >= 1)
        .map(|(a, b)| b * m - a * f)
        .max();
    Ok((psi1, psi2))
}

/// Searches `m = 0..=m_max` for `K₁, K₂` with
/// `|δ − K₁/n₁^φ(m) − K₂/n₂^m|` below the tolerance of the case that `m`
/// falls in.
pub fn incompatibility_witness(
    n1: u64,
    n2: u64,
    delta: &Rational,
    c: &Rational,
    m_max: u64,
) -> Result<WitnessSearch> {
    if *c <= Rational::from_integer(0.into()) {
        return Err(Error::NonPositive {
            what: "tolerance C",
            value: c.to_string(),
        });
    }
    let mut best: Option<Rational> = None;
    for m in 0..=m_max {
        let f = phi(n2, n1, m)?;
        let p1 = pow_bigint(n1, f);
        let p2 = pow_bigint(n2, m);
        let l = p1.lcm(&p2);
        let scaled = delta * Rational::from_integer(l.clone());
        let k = round_half_down(&scaled);
        let distance =
            (scaled - Rational::from_integer(k.clone())).abs() / Rational::from_integer(l);
        let normalized = &distance * Rational::from_integer(p2.clone());
        if best.as_ref().is_none_or(|b| normalized < *b) {
            best = Some(normalized);
        }
        let (psi1, psi2) = psi_values(n1, n2, m)?;
        let case = if psi1.is_some_and(|v| v >= 0) {
            WitnessCase::I
        } else {
            WitnessCase::II
        };
        let tolerance = match case {
            WitnessCase::I => c / Rational::from_integer(p2.clone()),
            WitnessCase::II => c / Rational::from_integer(&p1 * n1),
        };
        if distance < tolerance {
            let (k1, k2) = split_fraction(&k, &p1, &p2);
            return Ok(WitnessSearch::Found(IncompatibilityWitness {
                m,
                phi: f,
                k1,
                k2,
                distance,
                tolerance,
                case,
                psi1,
                psi2,
            }));
        }
    }
    Ok(WitnessSearch::Exhausted {
        m_max,
        best: best.expect("m = 0 is always scanned"),
    })
}
