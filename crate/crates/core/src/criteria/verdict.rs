use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::rational::{serde_bigint, serde_str};
use crate::exact::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    Far,
    NotFar,
    Undecided,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// The defining quantity vanishes at the witness.
    ExactZero,
    /// The bases are not powers of a common root, so the quantity tends to 0.
    Collapse,
    /// The location functions differ by an integer, so the quantity tends to 0.
    IntegerDifference,
    /// Residue cycle closed: the bound is the exact infimum.
    Cycle,
    /// A valid lower bound that need not be attained.
    Bound,
    /// Ran out of depth before the analysis could conclude.
    DepthExhausted,
}

/// A violation of the far inequality at one reference base and scale.
///
/// For far numbers the integers are `k₁, k₂` with the lattice point
/// `k₁/n^a + k₂/n'^b`; for far pairs they are `k₃, k₄` with the integer
/// `k₃·n^a − k₄·n'^b`. `value` is the normalized distance at that point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub base_index: usize,
    pub base: u64,
    pub scale: u64,
    pub a: u64,
    pub b: u64,
    #[serde(with = "serde_bigint")]
    pub k_first: BigInt,
    #[serde(with = "serde_bigint")]
    pub k_second: BigInt,
    #[serde(with = "serde_str")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// FAR: certified lower bound. NOT_FAR: the witness value. UNDECIDED:
    /// smallest value seen.
    #[serde(with = "serde_str")]
    pub bound: Rational,
    /// Whether `bound` is the exact infimum rather than only a lower bound.
    pub exact: bool,
    pub witness: Option<Witness>,
    pub depth_used: u64,
    /// First scale covered by the bound.
    pub start: u64,
    pub basis: Basis,
}

impl Verdict {
    pub fn is_far(&self) -> bool {
        self.kind == VerdictKind::Far
    }

    pub fn is_not_far(&self) -> bool {
        self.kind == VerdictKind::NotFar
    }
}

/// Parameters shared by the far-number and far-pair checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaConfig {
    pub depth_small: u64,
    #[serde(rename = "J")]
    pub j_start: u64,
    pub depth_large: u64,
    /// A witness whose normalized value falls below this settles NOT_FAR when
    /// the quantity is known to tend to zero.
    #[serde(with = "serde_str")]
    pub threshold: Rational,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig {
            depth_small: 64,
            j_start: 8,
            depth_large: 64,
            threshold: default_threshold(),
        }
    }
}

pub fn default_threshold() -> Rational {
    rat(1, 1024)
}
