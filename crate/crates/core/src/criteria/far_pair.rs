//! Far pairs: the location functions `L_A`, `L_B` of two grids form a far
//! pair with respect to `𝒩` when, for some `J` and `C' > 0`,
//! `g(ℓ, j) = dist(L_A(a)_s − L_B(b)_s, gcd(n^a, n'^b)·Z) / n_ℓ^j >= C'` for
//! all `j >= J`, where `a = φ(n_ℓ, n, j)` and `b = φ(n_ℓ, n', j)`.
//!
//! For eventually periodic digits the coordinate streams sum to rationals
//! `A`, `B` in the `𝔫`-adic integers. With `n = 𝔫^α`, `n' = 𝔫^β`,
//! `u = min(αa, βb)` and `C = A − B = r/s` one has
//! `L_A(a) − L_B(b) ≡ C (mod 𝔫^u)`, so the fractional part of
//! `(L_A(a) − L_B(b)) / 𝔫^u` is `λ_u + C·𝔫^-u` with
//! `λ_u = (−r·𝔫^-u mod s) / s`. Integer `C` forces `g → 0`; otherwise
//! `λ_u >= 1/s` and `g` is bounded below once `𝔫^u > 2|r|`. Past that point
//! each residue class of `(j mod lcm(α, β), 𝔫^u mod s)` is monotone and
//! converges to `𝔫^-e·‖λ_u‖`, which gives the exact infimum.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::verdict::{default_threshold, Basis, Verdict, VerdictKind, Witness};
use crate::error::{Error, Result};
use crate::exact::lattice::split_multiple;
use crate::exact::numtheory::{
    check_base, common_root, mod_inverse, phi, phi_sequence, pow_bigint, primitive_root,
};
use crate::exact::Rational;
use crate::grid::GridRep;

/// Prefix table `L(0), L(1), …, L(upto)` for coordinate `s`.
pub(crate) fn location_table(rep: &GridRep, s: usize, upto: u64) -> Vec<BigInt> {
    let n = BigInt::from(rep.base());
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut acc = BigInt::zero();
    let mut power = BigInt::one();
    out.push(acc.clone());
    for i in 0..upto as usize {
        acc += &power * rep.digits().digit(i)[s];
        power *= &n;
        out.push(acc.clone());
    }
    out
}

/// `g(ℓ, j)` at one reference base with the nearest multiple `index·gcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSample {
    pub a: u64,
    pub b: u64,
    pub gcd: BigInt,
    pub difference: BigInt,
    pub index: BigInt,
    pub value: Rational,
}

fn sample_with(
    diff: BigInt,
    n: u64,
    n_prime: u64,
    reference: u64,
    j: u64,
    a: u64,
    b: u64,
) -> PairSample {
    let g = pow_bigint(n, a).gcd(&pow_bigint(n_prime, b));
    let r = diff.mod_floor(&g);
    let mut index = diff.div_floor(&g);
    if &r * 2 > g {
        index += 1;
    }
    let dist = (&diff - &index * &g).abs();
    let value = Rational::new(dist, pow_bigint(reference, j));
    PairSample {
        a,
        b,
        gcd: g,
        difference: diff,
        index,
        value,
    }
}

fn check_coordinate(rep: &GridRep, s: usize) -> Result<()> {
    if s < rep.dim() {
        Ok(())
    } else {
        Err(Error::CoordinateOutOfRange {
            coordinate: s,
            dimension: rep.dim(),
        })
    }
}

/// `g(ℓ, j)` for the reference base `reference = n_ℓ`.
pub fn far_pair_sample(
    rep_a: &GridRep,
    rep_b: &GridRep,
    s: usize,
    reference: u64,
    j: u64,
) -> Result<PairSample> {
    check_coordinate(rep_a, s)?;
    check_coordinate(rep_b, s)?;
    let a = phi(reference, rep_a.base(), j)?;
    let b = phi(reference, rep_b.base(), j)?;
    let diff = rep_a.location_coord(a, s) - rep_b.location_coord(b, s);
    Ok(sample_with(
        diff,
        rep_a.base(),
        rep_b.base(),
        reference,
        j,
        a,
        b,
    ))
}

/// Recomputes `|L_A(a)_s + k₃·n^a − L_B(b)_s − k₄·n'^b| / n_ℓ^j` from a
/// witness.
pub fn far_pair_recheck(rep_a: &GridRep, rep_b: &GridRep, s: usize, w: &Witness) -> Rational {
    let lhs = rep_a.location_coord(w.a, s) + &w.k_first * pow_bigint(rep_a.base(), w.a)
        - rep_b.location_coord(w.b, s)
        - &w.k_second * pow_bigint(rep_b.base(), w.b);
    Rational::new(lhs.abs(), pow_bigint(w.base, w.scale))
}

fn witness_from(
    base_index: usize,
    base: u64,
    j: u64,
    s: &PairSample,
    n: u64,
    n_prime: u64,
) -> Witness {
    let (k3, k4) = split_multiple(&-&s.index, &pow_bigint(n, s.a), &pow_bigint(n_prime, s.b));
    Witness {
        base_index,
        base,
        scale: j,
        a: s.a,
        b: s.b,
        k_first: k3,
        k_second: k4,
        value: s.value.clone(),
    }
}

pub fn far_pair(
    rep_a: &GridRep,
    rep_b: &GridRep,
    s: usize,
    bases: &[u64],
    j_start: u64,
    depth: u64,
) -> Result<Verdict> {
    far_pair_with(rep_a, rep_b, s, bases, j_start, depth, &default_threshold())
}

struct Scan {
    base: u64,
    /// Samples for `j = j_start..=depth`.
    samples: Vec<PairSample>,
}

pub fn far_pair_with(
    rep_a: &GridRep,
    rep_b: &GridRep,
    s: usize,
    bases: &[u64],
    j_start: u64,
    depth: u64,
    threshold: &Rational,
) -> Result<Verdict> {
    check_coordinate(rep_a, s)?;
    check_coordinate(rep_b, s)?;
    if bases.is_empty() {
        return Err(Error::InvalidArgument("base set must be non-empty".into()));
    }
    for &b in bases {
        check_base(b)?;
    }
    if j_start == 0 {
        return Err(Error::InvalidArgument("J must be at least 1".into()));
    }
    if depth < j_start {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} is below J = {j_start}"
        )));
    }
    let (n, n_prime) = (rep_a.base(), rep_b.base());

    let mut scans = Vec::with_capacity(bases.len());
    for &nl in bases {
        let pa = phi_sequence(nl, n, depth)?;
        let pb = phi_sequence(nl, n_prime, depth)?;
        let table_a = location_table(rep_a, s, pa[depth as usize]);
        let table_b = location_table(rep_b, s, pb[depth as usize]);
        let samples = (j_start..=depth)
            .map(|j| {
                let (a, b) = (pa[j as usize], pb[j as usize]);
                let diff = &table_a[a as usize] - &table_b[b as usize];
                sample_with(diff, n, n_prime, nl, j, a, b)
            })
            .collect();
        scans.push(Scan { base: nl, samples });
    }

    let mut best: Option<(usize, u64, &PairSample)> = None;
    for (i, sc) in scans.iter().enumerate() {
        for (off, smp) in sc.samples.iter().enumerate() {
            let j = j_start + off as u64;
            let better = match best {
                None => true,
                Some((bi, bj, bs)) => (&smp.value, j, i) < (&bs.value, bj, bi),
            };
            if better {
                best = Some((i, j, smp));
            }
        }
    }
    let (bi, bj, bs) = best.expect("non-empty scan");
    let not_far = |basis| Verdict {
        kind: VerdictKind::NotFar,
        bound: bs.value.clone(),
        exact: bs.value.is_zero(),
        witness: Some(witness_from(bi, bases[bi], bj, bs, n, n_prime)),
        depth_used: depth,
        start: j_start,
        basis,
    };
    let undecided = Verdict {
        kind: VerdictKind::Undecided,
        bound: bs.value.clone(),
        exact: false,
        witness: None,
        depth_used: depth,
        start: j_start,
        basis: Basis::DepthExhausted,
    };

    let Some((root, alpha, beta)) = common_root(n, n_prime)? else {
        return Ok(if bs.value < *threshold {
            not_far(Basis::Collapse)
        } else {
            undecided
        });
    };

    let c = rep_a.digits().coordinate_value(s) - rep_b.digits().coordinate_value(s);
    if c.is_integer() {
        return Ok(if c.is_zero() {
            not_far(Basis::ExactZero)
        } else if bs.value < *threshold {
            not_far(Basis::IntegerDifference)
        } else {
            undecided
        });
    }
    let r = c.numer().clone();
    let den = c.denom().clone();
    let twice_r = r.abs() * 2;

    // First j past which the C·𝔫^-u term cannot move λ_u across an integer.
    let mut settle = Vec::with_capacity(scans.len());
    for sc in &scans {
        let j1 = sc.samples.iter().enumerate().find_map(|(off, smp)| {
            let u = (alpha as u64 * smp.a).min(beta as u64 * smp.b);
            (pow_bigint(root, u) > twice_r).then_some(j_start + off as u64)
        });
        match j1 {
            Some(j1) => settle.push(j1),
            None => return Ok(undecided),
        }
    }

    // Exact zeros can only occur before settling; the bound starts after the
    // last of them.
    let mut start = j_start;
    for sc in &scans {
        for (off, smp) in sc.samples.iter().enumerate() {
            if smp.value.is_zero() {
                start = start.max(j_start + off as u64 + 1);
            }
        }
    }

    let floor_bound = Rational::new(BigInt::one(), &den * 2 * BigInt::from(n.max(n_prime)));
    let mut bound: Option<Rational> = None;
    let mut exact = true;
    for (sc, &j1) in scans.iter().zip(&settle) {
        let value_at = |j: u64| &sc.samples[(j - j_start) as usize].value;
        let (rl, gamma) = primitive_root(sc.base)?;
        let cycle = if rl == root {
            cycle_infimum(
                sc,
                j_start,
                j1.max(start),
                depth,
                (alpha, beta, gamma),
                root,
                &r,
                &den,
            )
        } else {
            None
        };
        let b = match cycle {
            Some((j_rep, limit)) => (start..j_rep)
                .map(value_at)
                .cloned()
                .chain(Some(limit))
                .min(),
            None => {
                exact = false;
                (start..j1)
                    .map(value_at)
                    .cloned()
                    .chain(Some(floor_bound.clone()))
                    .min()
            }
        }
        .expect("non-empty");
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
        start,
        basis: if exact { Basis::Cycle } else { Basis::Bound },
    })
}

/// Runs the residue cycle from `from` and returns the index at which a state
/// repeats together with the smallest limit over the cycle's classes.
#[allow(clippy::too_many_arguments)]
fn cycle_infimum(
    sc: &Scan,
    j_start: u64,
    from: u64,
    depth: u64,
    (alpha, beta, gamma): (u32, u32, u32),
    root: u64,
    r: &BigInt,
    den: &BigInt,
) -> Option<(u64, Rational)> {
    let (alpha, beta, gamma) = (alpha as u64, beta as u64, gamma as u64);
    let period = alpha.lcm(&beta);
    let big_root = BigInt::from(root);
    let mut first_seen: HashMap<(u64, BigInt), usize> = HashMap::new();
    let mut limits: Vec<Rational> = Vec::new();
    for j in from..=depth {
        let smp = &sc.samples[(j - j_start) as usize];
        let u = (alpha * smp.a).min(beta * smp.b);
        let x = big_root.modpow(&BigInt::from(u), den);
        let key = (j % period, x.clone());
        if let Some(&pos) = first_seen.get(&key) {
            return limits[pos..].iter().min().cloned().map(|l| (j, l));
        }
        first_seen.insert(key, limits.len());
        let inv = mod_inverse(&x, den).expect("root is coprime to the denominator");
        let lambda = (-r * inv).mod_floor(den);
        let near = lambda.clone().min(den - &lambda);
        let e = gamma * j - u;
        limits.push(Rational::new(near, den * pow_bigint(root, e)));
    }
    None
}
