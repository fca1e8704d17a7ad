//! The adjacency certificate: far-number checks on origin differences and
//! far-pair checks on location functions, over all ordered pairs of grids and
//! all coordinates.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::far_number::far_number_with;
use super::far_pair::far_pair_with;
use super::verdict::{CriteriaConfig, Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::exact::numtheory::pow_bigint;
use crate::exact::rational::{serde_str, serde_str_vec};
use crate::exact::Rational;
use crate::grid::{canonical, project_grid, GridRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Adjacency {
    Adjacent,
    NotAdjacent,
    Undecided,
}

impl Adjacency {
    /// Process exit code for this outcome.
    pub fn exit_code(self) -> i32 {
        match self {
            Adjacency::Adjacent => 0,
            Adjacency::NotAdjacent => 1,
            Adjacency::Undecided => 2,
        }
    }
}

/// One verdict of the certificate, for the ordered pair `(first, second)` of
/// grid indices and coordinate `coordinate` (all zero-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub first: usize,
    pub second: usize,
    pub coordinate: usize,
    pub verdict: Verdict,
}

impl Entry {
    /// Key of the form `"1-2/1"`, one-based.
    pub fn key(&self) -> String {
        format!(
            "{}-{}/{}",
            self.first + 1,
            self.second + 1,
            self.coordinate + 1
        )
    }
}

fn serialize_entries<S: Serializer>(
    entries: &[Entry],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(entries.len()))?;
    for e in entries {
        map.serialize_entry(&e.key(), &e.verdict)?;
    }
    map.end()
}

/// Comparability constant implied by an all-FAR certificate.
///
/// With `n₁` the base of the first grid, `C₁`, `C₂` the smallest bounds of the
/// two conditions and `J` the start of the far-pair bounds, every open cube of
/// side `σ` lies in a grid cube of side below `cap·σ`, where `cap` is the
/// largest of `n_max·n₁/C₁` (side `σ <= C₁`), `2n₁/C₂` (large cubes) and
/// `n₁^J/C₁` (intermediate cubes enlarged to side `n₁^J`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparability {
    #[serde(with = "serde_str")]
    pub c1: Rational,
    #[serde(with = "serde_str")]
    pub c2: Rational,
    #[serde(rename = "J")]
    pub j: u64,
    #[serde(with = "serde_str")]
    pub cap: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyCertificate {
    pub family: Vec<String>,
    pub dimension: usize,
    pub base_set: Vec<u64>,
    #[serde(with = "serde_str_vec")]
    pub max_origin_gap: Vec<Rational>,
    pub config: CriteriaConfig,
    #[serde(serialize_with = "serialize_entries")]
    pub condition1: Vec<Entry>,
    #[serde(serialize_with = "serialize_entries")]
    pub condition2: Vec<Entry>,
    pub overall: Adjacency,
    #[serde(rename = "J")]
    pub j: u64,
    pub comparability: Option<Comparability>,
}

impl AdjacencyCertificate {
    pub fn entries(&self) -> impl Iterator<Item = (u8, &Entry)> {
        self.condition1
            .iter()
            .map(|e| (1u8, e))
            .chain(self.condition2.iter().map(|e| (2u8, e)))
    }

    /// The first NOT_FAR entry and the condition (1 or 2) it belongs to.
    pub fn first_failure(&self) -> Option<(u8, &Entry)> {
        self.entries().find(|(_, e)| e.verdict.is_not_far())
    }

    pub fn cap(&self) -> Option<&Rational> {
        self.comparability.as_ref().map(|c| &c.cap)
    }
}

/// Checks that `family` has `d + 1` grids of a common dimension `d`.
pub fn check_family(family: &[GridRep]) -> Result<usize> {
    let Some(first) = family.first() else {
        return Err(Error::FamilySize {
            dimension: 0,
            found: 0,
        });
    };
    let d = first.dim();
    for g in family {
        if g.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: g.dim(),
            });
        }
    }
    if family.len() != d + 1 {
        return Err(Error::FamilySize {
            dimension: d,
            found: family.len(),
        });
    }
    Ok(d)
}

/// The sorted distinct bases of a family.
pub fn base_set(family: &[GridRep]) -> Vec<u64> {
    let mut bases: Vec<u64> = family.iter().map(GridRep::base).collect();
    bases.sort_unstable();
    bases.dedup();
    bases
}

pub fn check_adjacency(
    family: &[GridRep],
    config: &CriteriaConfig,
) -> Result<AdjacencyCertificate> {
    let d = check_family(family)?;
    if config.depth_small == 0 || config.depth_large == 0 {
        return Err(Error::InvalidArgument("depths must be at least 1".into()));
    }
    let grids = family.iter().map(canonical).collect::<Result<Vec<_>>>()?;
    let bases = base_set(&grids);

    let mut slots = Vec::new();
    for first in 0..grids.len() {
        for second in 0..grids.len() {
            if first != second {
                for coordinate in 0..d {
                    slots.push((first, second, coordinate));
                }
            }
        }
    }

    let condition1 = slots
        .par_iter()
        .map(|&(first, second, coordinate)| {
            let (g1, g2) = (&grids[first], &grids[second]);
            let delta = &g1.origin()[coordinate] - &g2.origin()[coordinate];
            let verdict = far_number_with(
                &delta,
                g1.base(),
                g2.base(),
                &bases,
                config.depth_small,
                &config.threshold,
            )?;
            Ok(Entry {
                first,
                second,
                coordinate,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let condition2 = slots
        .par_iter()
        .map(|&(first, second, coordinate)| {
            let verdict = far_pair_with(
                &grids[first],
                &grids[second],
                coordinate,
                &bases,
                config.j_start,
                config.depth_large.max(config.j_start),
                &config.threshold,
            )?;
            Ok(Entry {
                first,
                second,
                coordinate,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let all = condition1.iter().chain(&condition2);
    let overall = if all.clone().any(|e| e.verdict.is_not_far()) {
        Adjacency::NotAdjacent
    } else if all.clone().all(|e| e.verdict.is_far()) {
        Adjacency::Adjacent
    } else {
        Adjacency::Undecided
    };
    let j = condition2
        .iter()
        .filter(|e| e.verdict.kind == VerdictKind::Far)
        .map(|e| e.verdict.start)
        .max()
        .unwrap_or(config.j_start);

    let max_origin_gap: Vec<Rational> = (0..d)
        .map(|s| {
            let lo = grids
                .iter()
                .map(|g| &g.origin()[s])
                .min()
                .expect("non-empty");
            let hi = grids
                .iter()
                .map(|g| &g.origin()[s])
                .max()
                .expect("non-empty");
            hi - lo
        })
        .collect();
    let comparability = (overall == Adjacency::Adjacent).then(|| {
        comparability(
            grids[0].base(),
            *bases.last().expect("non-empty"),
            &condition1,
            &condition2,
            j,
            &max_origin_gap,
        )
    });

    Ok(AdjacencyCertificate {
        family: family.iter().map(|g| g.label().to_string()).collect(),
        dimension: d,
        base_set: bases,
        max_origin_gap,
        config: config.clone(),
        condition1,
        condition2,
        overall,
        j,
        comparability,
    })
}

fn comparability(
    n1: u64,
    n_max: u64,
    condition1: &[Entry],
    condition2: &[Entry],
    j_cert: u64,
    max_origin_gap: &[Rational],
) -> Comparability {
    let c1 = condition1
        .iter()
        .map(|e| e.verdict.bound.clone())
        .min()
        .expect("non-empty");
    let c2 = condition2
        .iter()
        .map(|e| e.verdict.bound.clone())
        .min()
        .expect("non-empty");
    let gap = max_origin_gap.iter().max().cloned().expect("non-empty");
    // Past this scale the origin offset costs at most half of C₂·n₁^j.
    let mut j = j_cert;
    while &c2 * Rational::from_integer(pow_bigint(n1, j))
        < &gap * Rational::from_integer(BigInt::from(2))
    {
        j += 1;
    }
    let n1r = Rational::from_integer(BigInt::from(n1));
    let small = Rational::from_integer(BigInt::from(n_max)) * &n1r / &c1;
    let large = Rational::from_integer(BigInt::from(2)) * &n1r / &c2;
    let middle = Rational::from_integer(pow_bigint(n1, j)) / &c1;
    let cap = small.max(large).max(middle);
    debug_assert!(cap >= Rational::one() && !cap.is_negative());
    Comparability { c1, c2, j, cap }
}

/// The `d + 1` one-dimensional grids seen along coordinate `s`.
pub fn project(family: &[GridRep], s: usize) -> Result<Vec<GridRep>> {
    family.iter().map(|g| project_grid(g, s)).collect()
}
