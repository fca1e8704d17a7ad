//! Integer logarithms, the scale-matching function, factorization and
//! primitive roots. Every result is decided by exact integer comparison.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

pub(crate) fn check_base(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidBase(n))
    } else {
        Ok(())
    }
}

pub fn pow_big(n: u64, k: u64) -> BigUint {
    num_traits::pow(BigUint::from(n), k as usize)
}

pub fn pow_bigint(n: u64, k: u64) -> BigInt {
    BigInt::from(pow_big(n, k))
}

/// `n^k` for any integer `k`, as an exact rational.
pub fn pow_rational(n: u64, k: i64) -> Rational {
    let p = pow_bigint(n, k.unsigned_abs());
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Largest `k` with `n^k <= x`. Requires `x >= 1`.
///
/// The bit length gives a starting guess that is then corrected by exact
/// comparison, so the guess only affects speed.
pub fn ilog(n: u64, x: &BigUint) -> u64 {
    debug_assert!(n >= 2 && !x.is_zero());
    let bits = x.bits().saturating_sub(1) as f64;
    let mut k = (bits / (n as f64).log2()).floor().max(0.0) as u64;
    let base = BigUint::from(n);
    let mut p = pow_big(n, k);
    while &p > x {
        k -= 1;
        p /= &base;
    }
    loop {
        let next = &p * &base;
        if &next > x {
            return k;
        }
        p = next;
        k += 1;
    }
}

/// Smallest `k` with `n^k >= x`. Requires `x >= 1`.
pub fn ilog_ceil(n: u64, x: &BigUint) -> u64 {
    let k = ilog(n, x);
    if &pow_big(n, k) == x {
        k
    } else {
        k + 1
    }
}

/// Largest integer `k` with `n^k <= x` for a positive rational `x`.
pub fn floor_log_rational(n: u64, x: &Rational) -> Result<i64> {
    check_base(n)?;
    if !x.is_positive() {
        return Err(Error::NonPositive {
            what: "logarithm argument",
            value: x.to_string(),
        });
    }
    let p = x.numer().magnitude();
    let q = x.denom().magnitude();
    if p >= q {
        Ok(ilog(n, &(p / q)) as i64)
    } else {
        // n^-t <= p/q  <=>  n^t >= ceil(q/p)
        let ratio = Integer::div_ceil(q, p);
        Ok(-(ilog_ceil(n, &ratio) as i64))
    }
}

/// Smallest integer `k` with `n^k >= x` for a positive rational `x`.
pub fn ceil_log_rational(n: u64, x: &Rational) -> Result<i64> {
    let k = floor_log_rational(n, x)?;
    if pow_rational(n, k) == *x {
        Ok(k)
    } else {
        Ok(k + 1)
    }
}

/// Scale matching: the unique `k >= 0` with `(n')^k <= n^j < (n')^(k+1)`,
/// i.e. `⌊j·log n / log n'⌋` without any floating-point logarithm.
pub fn phi(n: u64, n_prime: u64, j: u64) -> Result<u64> {
    check_base(n)?;
    check_base(n_prime)?;
    if n == n_prime || j == 0 {
        return Ok(j);
    }
    let (root_a, exp_a) = primitive_root_unchecked(n);
    let (root_b, exp_b) = primitive_root_unchecked(n_prime);
    if root_a == root_b {
        return Ok(j * exp_a as u64 / exp_b as u64);
    }
    Ok(ilog(n_prime, &pow_big(n, j)))
}

/// `phi(n, n', j)` for `j = 0..=upto`, built incrementally from running
/// powers.
pub fn phi_sequence(n: u64, n_prime: u64, upto: u64) -> Result<Vec<u64>> {
    check_base(n)?;
    check_base(n_prime)?;
    let mut out = Vec::with_capacity(upto as usize + 1);
    let big_n = BigUint::from(n);
    let big_np = BigUint::from(n_prime);
    let mut power = BigUint::one();
    let mut next = big_np.clone();
    let mut k = 0u64;
    for j in 0..=upto {
        if j > 0 {
            power *= &big_n;
        }
        while next <= power {
            next *= &big_np;
            k += 1;
        }
        out.push(k);
    }
    Ok(out)
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// `a^-1 mod m` for coprime `a`, `m >= 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, x, _) = ext_gcd(&a.mod_floor(m), m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFactorization {
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
}

impl PrimeFactorization {
    pub fn product(&self) -> BigUint {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &e)| pow_big(p, e as u64))
            .product()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.primes
            .iter()
            .position(|&q| q == p)
            .map_or(0, |i| self.exponents[i])
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Trial division. Bases handled here are small, so nothing fancier is needed.
pub fn factorize(n: u64) -> PrimeFactorization {
    let mut primes = Vec::new();
    let mut exponents = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while rest > 1 && d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            primes.push(d);
            exponents.push(e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
        exponents.push(1);
    }
    PrimeFactorization { primes, exponents }
}

fn primitive_root_unchecked(n: u64) -> (u64, u32) {
    let f = factorize(n);
    let g = f.exponents.iter().fold(0u32, |acc, &e| acc.gcd(&e));
    let root = f
        .primes
        .iter()
        .zip(&f.exponents)
        .map(|(&p, &e)| p.pow(e / g))
        .product();
    (root, g)
}

/// The non-perfect-power `root` and the exponent `s` with `root^s = n`.
pub fn primitive_root(n: u64) -> Result<(u64, u32)> {
    check_base(n)?;
    Ok(primitive_root_unchecked(n))
}

/// The common primitive root of `a` and `b` together with both exponents,
/// or `None` when the two are not powers of one integer.
pub fn common_root(a: u64, b: u64) -> Result<Option<(u64, u32, u32)>> {
    let (ra, ea) = primitive_root(a)?;
    let (rb, eb) = primitive_root(b)?;
    Ok((ra == rb).then_some((ra, ea, eb)))
}
