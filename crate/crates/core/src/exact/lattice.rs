//! Two-scale lattices `{k₁/n^a + k₂/n'^b}` and exact distances to them.
//!
//! The sum of the two lattices `n^-a·Z + n'^-b·Z` is the single lattice
//! `Z / lcm(n^a, n'^b)`; integer lattices `n^a·Z + n'^b·Z` collapse to
//! `gcd(n^a, n'^b)·Z`. Both identities reduce a two-parameter minimum to one
//! floor division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::numtheory::{check_base, ext_gcd, pow_bigint};
use super::rational::{floor, Rational};
use crate::error::{Error, Result};

/// `1 / lcm(n^a, n'^b)`
pub fn lattice_mesh(n: u64, a: u64, n_prime: u64, b: u64) -> Result<Rational> {
    check_base(n)?;
    check_base(n_prime)?;
    let l = pow_bigint(n, a).lcm(&pow_bigint(n_prime, b));
    Ok(Rational::new(BigInt::one(), l))
}

fn check_mesh(mesh: &Rational) -> Result<()> {
    if mesh.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            what: "lattice mesh",
            value: mesh.to_string(),
        })
    }
}

/// Index `k` of the lattice point `k·mesh` nearest to `x`. Exact halves go to
/// the lower neighbour; the distance is the same either way.
pub fn nearest_index(x: &Rational, mesh: &Rational) -> Result<BigInt> {
    check_mesh(mesh)?;
    let t = x / mesh;
    let k = floor(&t);
    let frac = &t - Rational::from_integer(k.clone());
    if frac * BigInt::from(2) > Rational::one() {
        Ok(k + 1)
    } else {
        Ok(k)
    }
}

/// `min_k |x − k·mesh|`, always in `[0, mesh/2]`.
pub fn dist_to_lattice(x: &Rational, mesh: &Rational) -> Result<Rational> {
    let k = nearest_index(x, mesh)?;
    Ok((x - mesh * Rational::from_integer(k)).abs())
}

/// Distance from an integer to the integer lattice `g·Z`, `g >= 1`.
pub fn dist_to_multiple(x: &BigInt, g: &BigInt) -> BigInt {
    let r = x.mod_floor(g);
    let other = g - &r;
    r.min(other)
}

/// Splits the lattice point `K / lcm(p1, p2)` into `k₁/p1 + k₂/p2`, with
/// `k₂` reduced into `[0, lcm/p1)`.
pub fn split_fraction(k: &BigInt, p1: &BigInt, p2: &BigInt) -> (BigInt, BigInt) {
    let l = p1.lcm(p2);
    let u = &l / p1;
    let v = &l / p2;
    let (_, x, y) = ext_gcd(&u, &v);
    let k1 = k * x;
    let k2 = k * y;
    let t = k2.div_floor(&u);
    (k1 + &t * &v, k2 - &t * &u)
}

/// Splits the multiple `K·gcd(p1, p2)` into `k₃·p1 − k₄·p2`, with `k₄`
/// reduced into `[0, p1/gcd)`.
pub fn split_multiple(k: &BigInt, p1: &BigInt, p2: &BigInt) -> (BigInt, BigInt) {
    let (g, x, y) = ext_gcd(p1, p2);
    let k3 = k * x;
    let k4 = -(k * y);
    let step3 = p2 / &g;
    let step4 = p1 / &g;
    let t = k4.div_floor(&step4);
    (k3 - &t * &step3, k4 - &t * &step4)
}
