//! Far numbers: `δ` is far with respect to `(n, n')` and the base set `𝒩`
//! when `f(ℓ, m) = n_ℓ^m · dist(δ, Z / lcm(n^a, n'^b))`, with
//! `a = φ(n_ℓ, n, m)` and `b = φ(n_ℓ, n', m)`, stays above a positive
//! constant for every `n_ℓ ∈ 𝒩` and `m >= 0`.
//!
//! Rational `δ = p/q` admits an exact decision. If `n` and `n'` are not powers
//! of one root the lattice mesh shrinks faster than `n_ℓ^-m` and `f` tends to
//! zero. If `n = 𝔫^α` and `n' = 𝔫^β`, then `lcm = 𝔫^t` and
//! `f = (n_ℓ^m / 𝔫^t) · ‖p·𝔫^t / q‖`, which vanishes for large `t` exactly
//! when every prime of `q` divides `𝔫`, and is otherwise at least `1/q`.
//! When `n_ℓ` is a power of `𝔫` too, `f` depends only on
//! `(m mod lcm(α, β), 𝔫^t mod q)`, so its infimum is found by cycle detection.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::verdict::{default_threshold, Basis, Verdict, VerdictKind, Witness};
use crate::error::{Error, Result};
use crate::exact::lattice::split_fraction;
use crate::exact::numtheory::{
    check_base, common_root, phi, phi_sequence, pow_bigint, primitive_root,
};
use crate::exact::rational::round_half_down;
use crate::exact::Rational;

/// `f(ℓ, m)` at one reference base together with the nearest lattice point
/// `index / lcm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberSample {
    pub a: u64,
    pub b: u64,
    pub lcm: BigInt,
    pub index: BigInt,
    pub value: Rational,
}

fn sample_with(
    delta: &Rational,
    n: u64,
    n_prime: u64,
    reference: u64,
    m: u64,
    a: u64,
    b: u64,
) -> NumberSample {
    let pa = pow_bigint(n, a);
    let pb = pow_bigint(n_prime, b);
    let lcm = pa.lcm(&pb);
    let scaled = delta * Rational::from_integer(lcm.clone());
    let index = round_half_down(&scaled);
    let gap = (scaled - Rational::from_integer(index.clone())).abs();
    let value = gap * Rational::new(pow_bigint(reference, m), lcm.clone());
    NumberSample {
        a,
        b,
        lcm,
        index,
        value,
    }
}

/// `f(ℓ, m)` for the reference base `reference = n_ℓ`.
pub fn far_number_sample(
    delta: &Rational,
    n: u64,
    n_prime: u64,
    reference: u64,
    m: u64,
) -> Result<NumberSample> {
    let a = phi(reference, n, m)?;
    let b = phi(reference, n_prime, m)?;
    Ok(sample_with(delta, n, n_prime, reference, m, a, b))
}

/// Recomputes `n_ℓ^m · |δ − k₁/n^a − k₂/n'^b|` straight from a witness.
pub fn far_number_recheck(delta: &Rational, n: u64, n_prime: u64, w: &Witness) -> Rational {
    let point = Rational::new(w.k_first.clone(), pow_bigint(n, w.a))
        + Rational::new(w.k_second.clone(), pow_bigint(n_prime, w.b));
    (delta - point).abs() * Rational::from_integer(pow_bigint(w.base, w.scale))
}

fn witness_from(
    base_index: usize,
    base: u64,
    m: u64,
    s: &NumberSample,
    n: u64,
    n_prime: u64,
) -> Witness {
    let (k1, k2) = split_fraction(&s.index, &pow_bigint(n, s.a), &pow_bigint(n_prime, s.b));
    Witness {
        base_index,
        base,
        scale: m,
        a: s.a,
        b: s.b,
        k_first: k1,
        k_second: k2,
        value: s.value.clone(),
    }
}

pub fn far_number(
    delta: &Rational,
    n: u64,
    n_prime: u64,
    bases: &[u64],
    depth: u64,
) -> Result<Verdict> {
    far_number_with(delta, n, n_prime, bases, depth, &default_threshold())
}

pub fn far_number_with(
    delta: &Rational,
    n: u64,
    n_prime: u64,
    bases: &[u64],
    depth: u64,
    threshold: &Rational,
) -> Result<Verdict> {
    check_base(n)?;
    check_base(n_prime)?;
    if bases.is_empty() {
        return Err(Error::InvalidArgument("base set must be non-empty".into()));
    }
    for &b in bases {
        check_base(b)?;
    }
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }

    // Lexicographic minimum of (value, m, base index) over the whole range.
    let mut best: Option<(usize, u64, NumberSample)> = None;
    for (i, &nl) in bases.iter().enumerate() {
        let pa = phi_sequence(nl, n, depth)?;
        let pb = phi_sequence(nl, n_prime, depth)?;
        for m in 0..=depth {
            let s = sample_with(delta, n, n_prime, nl, m, pa[m as usize], pb[m as usize]);
            let better = match &best {
                None => true,
                Some((bi, bm, bs)) => (&s.value, m, i) < (&bs.value, *bm, *bi),
            };
            if better {
                best = Some((i, m, s));
            }
        }
    }
    let (bi, bm, bs) = best.expect("non-empty scan");
    let not_far = |basis| Verdict {
        kind: VerdictKind::NotFar,
        bound: bs.value.clone(),
        exact: bs.value.is_zero(),
        witness: Some(witness_from(bi, bases[bi], bm, &bs, n, n_prime)),
        depth_used: depth,
        start: 0,
        basis,
    };
    let undecided = Verdict {
        kind: VerdictKind::Undecided,
        bound: bs.value.clone(),
        exact: false,
        witness: None,
        depth_used: depth,
        start: 0,
        basis: Basis::DepthExhausted,
    };

    if bs.value.is_zero() {
        return Ok(not_far(Basis::ExactZero));
    }
    let Some((root, alpha, beta)) = common_root(n, n_prime)? else {
        return Ok(if bs.value < *threshold {
            not_far(Basis::Collapse)
        } else {
            undecided
        });
    };

    let p = delta.numer().clone();
    let q = delta.denom().clone();
    if coprime_part(&q, root).is_one() {
        // q divides a power of the root: the zero lies beyond the scanned depth.
        return Ok(undecided);
    }

    let mut bound: Option<Rational> = None;
    let mut exact = true;
    for &nl in bases {
        let (b, e) = reference_bound(&p, &q, root, alpha, beta, nl, depth)?;
        exact &= e;
        if bound.as_ref().is_none_or(|x| b < *x) {
            bound = Some(b);
        }
    }
    Ok(Verdict {
        kind: VerdictKind::Far,
        bound: bound.expect("non-empty base set"),
        exact,
        witness: None,
        depth_used: depth,
        start: 0,
        basis: if exact { Basis::Cycle } else { Basis::Bound },
    })
}

/// `q` with every prime factor of `root` removed.
pub(crate) fn coprime_part(q: &BigInt, root: u64) -> BigInt {
    let r = BigInt::from(root);
    let mut q = q.abs();
    loop {
        let g = q.gcd(&r);
        if g.is_one() {
            return q;
        }
        while (&q % &g).is_zero() {
            q /= &g;
        }
    }
}

/// `‖p·x / q‖` for an integer `x`.
fn frac_dist(p: &BigInt, x: &BigInt, q: &BigInt) -> Rational {
    let r = (p * x).mod_floor(q);
    let other = q - &r;
    Rational::new(r.min(other), q.clone())
}

const ORBIT_BUDGET: usize = 1 << 16;

/// `min_t ‖p·𝔫^t / q‖` over all `t >= 0`, or `1/q` when the orbit of `𝔫`
/// modulo `q` is too long to enumerate. Valid whenever `q` has a prime factor
/// not dividing `𝔫`.
fn orbit_bound(p: &BigInt, q: &BigInt, root: u64) -> Rational {
    let r = BigInt::from(root);
    let mut x = BigInt::one().mod_floor(q);
    let mut seen = HashSet::new();
    let mut best = frac_dist(p, &x, q);
    while seen.insert(x.clone()) {
        if seen.len() > ORBIT_BUDGET {
            return Rational::new(BigInt::one(), q.clone());
        }
        let d = frac_dist(p, &x, q);
        if d < best {
            best = d;
        }
        x = (x * &r).mod_floor(q);
    }
    best
}

/// Lower bound on `inf_m f(ℓ, m)` for one reference base, and whether it is
/// the exact infimum.
fn reference_bound(
    p: &BigInt,
    q: &BigInt,
    root: u64,
    alpha: u32,
    beta: u32,
    nl: u64,
    depth: u64,
) -> Result<(Rational, bool)> {
    let (rl, gamma) = primitive_root(nl)?;
    if rl != root {
        return Ok((orbit_bound(p, q, root), false));
    }
    let (alpha, beta, gamma) = (alpha as u64, beta as u64, gamma as u64);
    let period = alpha.lcm(&beta);
    let r = BigInt::from(root);
    let mut seen = HashSet::new();
    let mut best: Option<Rational> = None;
    for m in 0..=depth {
        let gm = gamma * m;
        let t = (alpha * (gm / alpha)).max(beta * (gm / beta));
        let x = r.modpow(&BigInt::from(t), q);
        if !seen.insert((m % period, x.clone())) {
            return Ok((best.expect("at least one state"), true));
        }
        let value = frac_dist(p, &x, q) * Rational::from_integer(pow_bigint(root, gm - t));
        if best.as_ref().is_none_or(|b| value < *b) {
            best = Some(value);
        }
    }
    Ok((orbit_bound(p, q, root), false))
}
