//! Grid-to-grid constructions: dropping generations (the base-changing
//! construction), re-representing a grid with shifted origin, and projecting
//! onto one coordinate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::digits::DigitStream;
use super::rep::GridRep;
use crate::error::{Error, Result};
use crate::exact::numtheory::pow_bigint;
use crate::exact::rational::floor;
use crate::exact::Rational;

/// Keeps generations `0, ±k, ±2k, …` of `rep`: the result has base `n^k` and
/// its generation `i` is generation `k·i` of the input.
pub fn drop_generations(rep: &GridRep, k: u32) -> Result<GridRep> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "generation step must be at least 1".into(),
        ));
    }
    let n = rep.base();
    let new_base = n
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidArgument(format!("{n}^{k} overflows a 64-bit base")))?;
    let stream = rep.digits();
    let k = k as usize;
    let pre = stream.preperiod().len().div_ceil(k);
    let per = stream.period().len() / stream.period().len().gcd(&k);
    let block = |i: usize| -> Vec<u64> {
        (0..rep.dim())
            .map(|s| {
                (0..k)
                    .rev()
                    .fold(0u64, |acc, t| acc * n + stream.digit(i * k + t)[s])
            })
            .collect()
    };
    let digits = DigitStream::new(
        new_base,
        (0..pre).map(block).collect(),
        (pre..pre + per).map(block).collect(),
    )?;
    GridRep::new(
        new_base,
        rep.origin().to_vec(),
        digits,
        format!("{}/every-{k}", rep.label()),
    )
}

/// Moves the origin by the integer vector `shift` and absorbs the move into
/// the location function, so every generation keeps the same cubes.
pub fn shift_origin(rep: &GridRep, shift: &[BigInt]) -> Result<GridRep> {
    if shift.len() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: shift.len(),
        });
    }
    let origin = rep
        .origin()
        .iter()
        .zip(shift)
        .map(|(o, n)| o + Rational::from_integer(n.clone()))
        .collect();
    // L'(j) = (L(j) - N) mod n^j, i.e. the n-adic value drops by N.
    let values: Vec<Rational> = rep
        .digits()
        .values()
        .into_iter()
        .zip(shift)
        .map(|(v, n)| v - Rational::from_integer(n.clone()))
        .collect();
    let digits = DigitStream::from_values(rep.base(), &values)?;
    GridRep::new(rep.base(), origin, digits, rep.label())
}

/// Re-representation with origin `δ + shift` for a non-negative shift that
/// fits in `depth` digits.
pub fn rerepresent(rep: &GridRep, shift: &[BigInt], depth: u64) -> Result<GridRep> {
    let limit = pow_bigint(rep.base(), depth);
    for (coordinate, n) in shift.iter().enumerate() {
        if n.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "shift must be non-negative, got {n} in coordinate {coordinate}"
            )));
        }
        if *n >= limit {
            return Err(Error::ShiftNotAbsorbable {
                coordinate,
                shift: n.to_string(),
                depth,
                base: rep.base(),
            });
        }
    }
    shift_origin(rep, shift)
}

/// The representation of the same grid with origin in `[0, 1)^d`.
pub fn canonical(rep: &GridRep) -> Result<GridRep> {
    let shift: Vec<BigInt> = rep.origin().iter().map(|o| -floor(o)).collect();
    if shift.iter().all(Zero::is_zero) {
        return Ok(rep.clone());
    }
    shift_origin(rep, &shift)
}

/// The one-dimensional grid seen along coordinate `s`.
pub fn project_grid(rep: &GridRep, s: usize) -> Result<GridRep> {
    if s >= rep.dim() {
        return Err(Error::CoordinateOutOfRange {
            coordinate: s,
            dimension: rep.dim(),
        });
    }
    let (pre, per) = rep.digits().coordinate(s);
    let digits = DigitStream::new(
        rep.base(),
        pre.into_iter().map(|d| vec![d]).collect(),
        per.into_iter().map(|d| vec![d]).collect(),
    )?;
    GridRep::new(
        rep.base(),
        vec![rep.origin()[s].clone()],
        digits,
        format!("{}[{}]", rep.label(), s + 1),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn line(base: u64, delta: Rational, pre: &[u64], per: &[u64]) -> GridRep {
        let digits = DigitStream::new(
            base,
            pre.iter().map(|&d| vec![d]).collect(),
            per.iter().map(|&d| vec![d]).collect(),
        )
        .unwrap();
        GridRep::new(base, vec![delta], digits, "g").unwrap()
    }

    fn sample_points() -> Vec<Rational> {
        (0..100).map(|i| rat(i * 37 - 1850, 29)).collect()
    }

    fn same_cubes(a: &GridRep, b: &GridRep, gens: std::ops::RangeInclusive<i64>) {
        for m in gens {
            for x in sample_points() {
                assert_eq!(
                    a.cube_at(m, std::slice::from_ref(&x)).unwrap(),
                    b.cube_at(m, std::slice::from_ref(&x)).unwrap(),
                    "generation {m}, point {x}"
                );
            }
        }
    }

    #[test]
    fn drop_one_is_identity() {
        let g = line(3, rat(1, 5), &[2], &[0, 1]);
        let d = drop_generations(&g, 1).unwrap();
        assert_eq!(d.base(), 3);
        assert_eq!(d.digits().values(), g.digits().values());
        same_cubes(&g, &d, -6..=6);
    }

    #[test]
    fn drop_regroups_blocks() {
        let g = line(3, rat(0, 1), &[], &[1]);
        let d = drop_generations(&g, 2).unwrap();
        assert_eq!(d.base(), 9);
        assert!((0..10).all(|i| d.digits().digit(i)[0] == 4));
        for j in 0..12 {
            assert_eq!(g.location_coord(2 * j, 0), d.location_coord(j, 0));
        }
    }

    #[test]
    fn dropped_cubes_are_source_cubes() {
        let g = line(2, rat(1, 3), &[1, 1, 0], &[0, 1, 1]);
        let d = drop_generations(&g, 4).unwrap();
        assert_eq!(d.base(), 16);
        for i in -4..=4i64 {
            for x in sample_points() {
                assert_eq!(
                    d.cube_at(i, std::slice::from_ref(&x)).unwrap(),
                    g.cube_at(4 * i, &[x]).unwrap()
                );
            }
        }
    }

    #[test]
    fn rerepresent_examples() {
        let g = line(2, rat(1, 3), &[], &[0]);
        assert_eq!(
            rerepresent(&g, &[BigInt::from(0)], 8)
                .unwrap()
                .digits()
                .values(),
            g.digits().values()
        );
        let r = rerepresent(&g, &[BigInt::from(1)], 8).unwrap();
        assert_eq!(r.origin(), &[rat(4, 3)]);
        for j in 0..=8u64 {
            let lhs = r.origin()[0].clone() + Rational::from_integer(r.location_coord(j, 0));
            let rhs = g.origin()[0].clone() + Rational::from_integer(g.location_coord(j, 0));
            let diff = (lhs - rhs) / Rational::from_integer(pow_bigint(2, j));
            assert!(crate::exact::rational::is_integer(&diff));
        }
        same_cubes(&g, &r, -8..=8);
        assert!(matches!(
            rerepresent(&g, &[BigInt::from(256)], 8),
            Err(Error::ShiftNotAbsorbable { .. })
        ));
        assert!(rerepresent(&g, &[BigInt::from(-1)], 8).is_err());
    }

    #[test]
    fn canonical_keeps_cubes() {
        let g = line(3, rat(-7, 2), &[2, 1], &[1, 0]);
        let c = canonical(&g).unwrap();
        assert_eq!(c.origin(), &[rat(1, 2)]);
        same_cubes(&g, &c, -7..=5);
        let h = line(2, rat(17, 3), &[], &[1]);
        same_cubes(&h, &canonical(&h).unwrap(), -7..=5);
    }

    #[test]
    fn projection_extracts_coordinate() {
        let digits = DigitStream::new(2, vec![vec![1, 0]], vec![vec![0, 1]]).unwrap();
        let g = GridRep::new(2, vec![rat(1, 3), rat(2, 3)], digits, "plane").unwrap();
        let p = project_grid(&g, 1).unwrap();
        assert_eq!(p.origin(), &[rat(2, 3)]);
        assert_eq!(p.digits().coordinate(0), (vec![0], vec![1]));
        assert!(project_grid(&g, 2).is_err());
    }
}
