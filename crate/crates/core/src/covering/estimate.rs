//! Empirical comparability constants from random query cubes.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::search::smallest_comparable;
use crate::criteria::certificate::check_family;
use crate::error::{Error, Result};
use crate::exact::numtheory::pow_rational;
use crate::exact::rational::serde_str;
use crate::exact::Rational;
use crate::grid::{Cube, GridRep};

/// Denominator of the random fractions inside one scale unit.
pub const GRAIN: i64 = 1024 * 27 * 5 * 7;
/// Corners are drawn from `[-WINDOW, WINDOW)` scale units.
pub const WINDOW: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaleReport {
    pub scale: i64,
    pub samples: usize,
    /// Largest ratio among covered cubes.
    #[serde(with = "opt_rational")]
    pub max_ratio: Option<Rational>,
    pub worst_cube: Option<Cube>,
    pub covered_by: Option<usize>,
    /// Cubes with no cover within the ratio cap.
    pub failures: Vec<Cube>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EstimateReport {
    pub seed: u64,
    #[serde(with = "serde_str")]
    pub ratio_cap: Rational,
    #[serde(with = "opt_rational")]
    pub max_ratio: Option<Rational>,
    pub failure_count: usize,
    pub scales: Vec<ScaleReport>,
}

mod opt_rational {
    use serde::Serializer;

    use crate::exact::Rational;

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_str(&x.to_string()),
            None => s.serialize_none(),
        }
    }
}

/// A random open cube at scale `m` for base `n`: side in `[n^-m-1, n^-m)`,
/// corner within `WINDOW` scale units of the origin.
pub fn random_cube(rng: &mut impl Rng, n: u64, dim: usize, m: i64) -> Cube {
    let unit = pow_rational(n, -m);
    let grain = Rational::from_integer(BigInt::from(GRAIN));
    let u = Rational::from_integer(BigInt::from(rng.gen_range(0..GRAIN))) / &grain;
    let stretch =
        Rational::from_integer(BigInt::from(1)) + Rational::from_integer(BigInt::from(n - 1)) * u;
    let side = &unit / Rational::from_integer(BigInt::from(n)) * stretch;
    let corner = (0..dim)
        .map(|_| {
            let z = rng.gen_range(-WINDOW..WINDOW);
            let v = rng.gen_range(0..GRAIN);
            &unit * Rational::new(BigInt::from(z * GRAIN + v), BigInt::from(GRAIN))
        })
        .collect();
    Cube::open(corner, side).expect("positive side")
}

/// Samples `samples` cubes per scale (scales in powers of the first grid's
/// base) and records the worst cover ratio. Each scale draws from its own
/// stream of a ChaCha generator seeded with `seed`, so results do not depend
/// on thread scheduling.
pub fn estimate_constant(
    family: &[GridRep],
    scales: RangeInclusive<i64>,
    samples: usize,
    seed: u64,
    ratio_cap: &Rational,
) -> Result<EstimateReport> {
    let d = check_family(family)?;
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "samples per scale must be at least 1".into(),
        ));
    }
    let n1 = family[0].base();
    let scale_list: Vec<i64> = scales.collect();
    let reports = scale_list
        .par_iter()
        .map(|&m| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(m as u64);
            let mut report = ScaleReport {
                scale: m,
                samples,
                max_ratio: None,
                worst_cube: None,
                covered_by: None,
                failures: Vec::new(),
            };
            for _ in 0..samples {
                let q = random_cube(&mut rng, n1, d, m);
                match smallest_comparable(family, &q, ratio_cap)? {
                    Some(r) => {
                        if report.max_ratio.as_ref().is_none_or(|x| r.ratio > *x) {
                            report.max_ratio = Some(r.ratio);
                            report.worst_cube = Some(q);
                            report.covered_by = Some(r.grid_index);
                        }
                    }
                    None => report.failures.push(q),
                }
            }
            Ok(report)
        })
        .collect::<Result<Vec<_>>>()?;
    let max_ratio = reports.iter().filter_map(|r| r.max_ratio.clone()).max();
    let failure_count = reports.iter().map(|r| r.failures.len()).sum();
    Ok(EstimateReport {
        seed,
        ratio_cap: ratio_cap.clone(),
        max_ratio,
        failure_count,
        scales: reports,
    })
}
