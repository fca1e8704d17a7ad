//! Cubes that no grid of a family covers at a comparable size.
//!
//! At a scale where a boundary of grid `ℓ₁` and a boundary of grid `ℓ₂` nearly
//! coincide in coordinate `s`, an open cube around both points, with its other
//! coordinates pinned on boundaries of the remaining grids, meets a boundary
//! of every grid at every generation finer than the scale. Any grid cube that
//! contains it is therefore larger than the scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::criteria::certificate::check_family;
use crate::criteria::AdjacencyCertificate;
use crate::error::{Error, Result};
use crate::exact::lattice::{split_fraction, split_multiple};
use crate::exact::numtheory::{phi, pow_bigint, pow_rational};
use crate::exact::rational::{round_half_down, serde_str};
use crate::exact::{rat, Rational};
use crate::grid::{canonical, Cube, GridRep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarialSpec {
    /// Zero-based grid indices `(ℓ₁, ℓ₂)`.
    pub pair: (usize, usize),
    /// Zero-based coordinate.
    pub coordinate: usize,
    /// `m >= 0` for cubes of side about `n^-m`, `m < 0` for side about `n^|m|`.
    pub scale: i64,
    /// Base `n` that sets the scale.
    pub reference_base: u64,
    #[serde(with = "serde_str")]
    pub target_ratio: Rational,
}

/// A cube every cover of which exceeds the target ratio.
pub fn adversarial_cubes(family: &[GridRep], spec: &AdversarialSpec) -> Result<Vec<Cube>> {
    let d = check_family(family)?;
    let (l1, l2) = spec.pair;
    for l in [l1, l2] {
        if l >= family.len() {
            return Err(Error::GridIndexOutOfRange {
                index: l,
                len: family.len(),
            });
        }
    }
    if l1 == l2 {
        return Err(Error::InvalidArgument(
            "the pair must consist of two different grids".into(),
        ));
    }
    if spec.coordinate >= d {
        return Err(Error::CoordinateOutOfRange {
            coordinate: spec.coordinate,
            dimension: d,
        });
    }
    if spec.target_ratio < rat(1, 1) {
        return Err(Error::InvalidArgument(
            "target ratio must be at least 1".into(),
        ));
    }
    let grids = family.iter().map(canonical).collect::<Result<Vec<_>>>()?;
    let (g1, g2) = (&grids[l1], &grids[l2]);
    let s = spec.coordinate;
    let nr = spec.reference_base;
    let others: Vec<usize> = (0..grids.len()).filter(|&k| k != l1 && k != l2).collect();
    let other_coords: Vec<usize> = (0..d).filter(|&t| t != s).collect();

    let (x1, x2, pins, unit) = if spec.scale >= 0 {
        let m = spec.scale as u64;
        let a = phi(nr, g1.base(), m)?;
        let b = phi(nr, g2.base(), m)?;
        let (pa, pb) = (pow_bigint(g1.base(), a), pow_bigint(g2.base(), b));
        let lcm = pa.lcm(&pb);
        let delta = &g1.origin()[s] - &g2.origin()[s];
        let index = round_half_down(&(&delta * Rational::from_integer(lcm)));
        let (k1, k2) = split_fraction(&index, &pa, &pb);
        let x1 = &g1.origin()[s] - Rational::new(k1, pa);
        let x2 = &g2.origin()[s] + Rational::new(k2, pb);
        let pins: Vec<Rational> = others
            .iter()
            .zip(&other_coords)
            .map(|(&k, &t)| grids[k].origin()[t].clone())
            .collect();
        (x1, x2, pins, pow_rational(nr, -(m as i64)))
    } else {
        let j = spec.scale.unsigned_abs();
        let a = phi(nr, g1.base(), j)?;
        let b = phi(nr, g2.base(), j)?;
        let (pa, pb) = (pow_bigint(g1.base(), a), pow_bigint(g2.base(), b));
        let anchor1 = &g1.origin()[s] + Rational::from_integer(g1.location_coord(a, s));
        let anchor2 = &g2.origin()[s] + Rational::from_integer(g2.location_coord(b, s));
        let g = pa.gcd(&pb);
        let index = round_half_down(&((&anchor1 - &anchor2) / Rational::from_integer(g)));
        let (k3, k4) = split_multiple(&-index, &pa, &pb);
        let x1 = anchor1 + Rational::from_integer(k3 * pa);
        let x2 = anchor2 + Rational::from_integer(k4 * pb);
        let pins = others
            .iter()
            .zip(&other_coords)
            .map(|(&k, &t)| {
                let gk = &grids[k];
                let c = phi(nr, gk.base(), j)?;
                Ok(&gk.origin()[t] + Rational::from_integer(gk.location_coord(c, t)))
            })
            .collect::<Result<Vec<_>>>()?;
        (x1, x2, pins, pow_rational(nr, j as i64))
    };

    let gap = (&x1 - &x2).abs();
    let side = &unit / &spec.target_ratio;
    if gap >= side {
        return Err(Error::NoNearCoincidence {
            scale: spec.scale,
            normalized_gap: (&gap / &unit).to_string(),
            required: spec.target_ratio.recip().to_string(),
        });
    }
    let mut center = vec![Rational::zero(); d];
    center[s] = (x1 + x2) / rat(2, 1);
    for (&t, p) in other_coords.iter().zip(pins) {
        center[t] = p;
    }
    Ok(vec![Cube::open_around(&center, side)?])
}

/// An adversarial cube derived from a certificate's first NOT_FAR entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub condition: u8,
    pub spec: AdversarialSpec,
    pub cube: Cube,
}

/// Starting at the witness scale, moves to finer (condition 1) or coarser
/// (condition 2) scales until a near-coincidence below `1/target_ratio`
/// appears, trying at most `extra + 1` scales.
pub fn refute(
    family: &[GridRep],
    cert: &AdjacencyCertificate,
    target_ratio: &Rational,
    extra: u64,
) -> Result<Refutation> {
    let Some((condition, entry)) = cert.first_failure() else {
        return Err(Error::InvalidArgument(
            "certificate has no NOT_FAR entry".into(),
        ));
    };
    let w = entry
        .verdict
        .witness
        .as_ref()
        .expect("NOT_FAR carries a witness");
    let mut last = None;
    for step in 0..=extra {
        let scale = (w.scale + step) as i64;
        let spec = AdversarialSpec {
            pair: (entry.first, entry.second),
            coordinate: entry.coordinate,
            scale: if condition == 1 { scale } else { -scale },
            reference_base: w.base,
            target_ratio: target_ratio.clone(),
        };
        match adversarial_cubes(family, &spec) {
            Ok(mut cubes) => {
                return Ok(Refutation {
                    condition,
                    spec,
                    cube: cubes.remove(0),
                })
            }
            Err(e @ Error::NoNearCoincidence { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one scale tried"))
}

/// Smallest normalized gap `n^m·|x₁ − x₂|` over all boundary pairs at a
/// small scale, found by direct enumeration of `k₁, k₂` in a window. Used to
/// cross-check the lattice reduction.
pub fn brute_small_gap(
    g1: &GridRep,
    g2: &GridRep,
    s: usize,
    nr: u64,
    m: u64,
    window: i64,
) -> Result<Rational> {
    let a = phi(nr, g1.base(), m)?;
    let b = phi(nr, g2.base(), m)?;
    let (pa, pb) = (pow_bigint(g1.base(), a), pow_bigint(g2.base(), b));
    let mut best: Option<Rational> = None;
    for k1 in -window..=window {
        let x1 = &g1.origin()[s] + Rational::new(BigInt::from(k1), pa.clone());
        // nearest boundary of the second grid to x1
        let k2 = round_half_down(&((&x1 - &g2.origin()[s]) * Rational::from_integer(pb.clone())));
        let x2 = &g2.origin()[s] + Rational::new(k2, pb.clone());
        let v = (x1 - x2).abs();
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    Ok(best.expect("non-empty window") * pow_rational(nr, m as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::search::smallest_comparable;
    use crate::grid::DigitStream;

    fn line(base: u64, delta: Rational, per: &[u64]) -> GridRep {
        let digits =
            DigitStream::new(base, vec![], per.iter().map(|&d| vec![d]).collect()).unwrap();
        GridRep::new(base, vec![delta], digits, "g").unwrap()
    }

    fn spec(scale: i64, base: u64, n: i64) -> AdversarialSpec {
        AdversarialSpec {
            pair: (0, 1),
            coordinate: 0,
            scale,
            reference_base: base,
            target_ratio: rat(n, 1),
        }
    }

    #[test]
    fn duplicate_grid_straddles_a_shared_boundary() {
        let g = line(2, rat(0, 1), &[0]);
        let fam = vec![g.clone(), g];
        let cubes = adversarial_cubes(&fam, &spec(1, 2, 100)).unwrap();
        assert_eq!(cubes.len(), 1);
        let q = &cubes[0];
        let center = &q.corner[0] + &q.side / rat(2, 1);
        assert!(center.is_integer() || (&center * rat(2, 1)).is_integer());
        assert!(smallest_comparable(&fam, q, &rat(100, 1))
            .unwrap()
            .is_none());
    }

    #[test]
    fn third_shift_has_no_small_coincidence() {
        let fam = vec![line(2, rat(0, 1), &[0]), line(2, rat(1, 3), &[0, 1])];
        for m in 0..=20u64 {
            let brute = brute_small_gap(&fam[0], &fam[1], 0, 2, m, 1 << 10.min(m + 2)).unwrap();
            assert!(brute >= rat(1, 3));
            let err = adversarial_cubes(&fam, &spec(m as i64, 2, 4)).unwrap_err();
            let Error::NoNearCoincidence { normalized_gap, .. } = err else {
                panic!("unexpected error");
            };
            assert_eq!(normalized_gap, "1/3");
        }
    }

    #[test]
    fn incompatible_bases_blow_up() {
        let fam = vec![line(2, rat(0, 1), &[0]), line(3, rat(2, 7), &[0])];
        let mut worst = rat(1, 1);
        for m in 0..=12u64 {
            let brute = brute_small_gap(&fam[0], &fam[1], 0, 3, m, 1 << 12).unwrap();
            if let Ok(cubes) = adversarial_cubes(&fam, &spec(m as i64, 3, 50)) {
                assert!(smallest_comparable(&fam, &cubes[0], &rat(50, 1))
                    .unwrap()
                    .is_none());
            }
            if brute < worst {
                worst = brute;
            }
        }
        assert!(worst < rat(1, 50));
    }

    #[test]
    fn large_scale_needs_a_shared_tail() {
        // identical digits: coincidences at every coarse scale once the
        // origin offset is small relative to the scale
        let fam = vec![line(2, rat(0, 1), &[0]), line(2, rat(1, 3), &[0])];
        assert!(adversarial_cubes(&fam, &spec(-4, 2, 1000)).is_err());
        let cubes = adversarial_cubes(&fam, &spec(-12, 2, 1000)).unwrap();
        assert!(smallest_comparable(&fam, &cubes[0], &rat(1000, 1))
            .unwrap()
            .is_none());
    }
}
