use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::digits::DigitStream;
use crate::error::{Error, Result};
use crate::exact::numtheory::{check_base, pow_rational};
use crate::exact::rational::{floor, serde_str, serde_str_vec};
use crate::exact::Rational;

/// A general `n`-adic grid given by its base, origin and digit stream.
///
/// Generation `m` consists of the cubes of side `base^-m` anchored at
/// `origin` for `m >= 0`, and at `origin + location(-m)` for `m < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRep {
    base: u64,
    origin: Vec<Rational>,
    digits: DigitStream,
    label: String,
}

impl GridRep {
    pub fn new(
        base: u64,
        origin: Vec<Rational>,
        digits: DigitStream,
        label: impl Into<String>,
    ) -> Result<Self> {
        check_base(base)?;
        if digits.base() != base {
            return Err(Error::InvalidArgument(format!(
                "digit stream has base {}, grid has base {base}",
                digits.base()
            )));
        }
        if origin.len() != digits.dim() {
            return Err(Error::DimensionMismatch {
                expected: digits.dim(),
                found: origin.len(),
            });
        }
        Ok(GridRep {
            base,
            origin,
            digits,
            label: label.into(),
        })
    }

    /// A grid whose digits are constantly zero: every generation is anchored
    /// at the origin.
    pub fn anchored(base: u64, origin: Vec<Rational>, label: impl Into<String>) -> Result<Self> {
        let digits = DigitStream::constant(base, origin.len().max(1), 0)?;
        GridRep::new(base, origin, digits, label)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self) -> &[Rational] {
        &self.origin
    }

    pub fn digits(&self) -> &DigitStream {
        &self.digits
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Coordinate `s` of the location function `L(j) = Σ_{i<j} nⁱ·aᵢ`.
    pub fn location_coord(&self, j: u64, s: usize) -> BigInt {
        let n = BigInt::from(self.base);
        (0..j as usize).rev().fold(BigInt::zero(), |acc, i| {
            acc * &n + BigInt::from(self.digits.digit(i)[s])
        })
    }

    pub fn location(&self, j: u64) -> Vec<BigInt> {
        (0..self.dim()).map(|s| self.location_coord(j, s)).collect()
    }

    /// Anchor point of generation `m`.
    pub fn generation_offset(&self, m: i64) -> Vec<Rational> {
        if m >= 0 {
            return self.origin.clone();
        }
        let loc = self.location(m.unsigned_abs());
        self.origin
            .iter()
            .zip(loc)
            .map(|(o, l)| o + Rational::from_integer(l))
            .collect()
    }

    pub fn side(&self, m: i64) -> Rational {
        pow_rational(self.base, -m)
    }

    /// The generation-`m` cube containing `x`.
    pub fn cube_at(&self, m: i64, x: &[Rational]) -> Result<Cube> {
        self.check_point(x)?;
        let offset = self.generation_offset(m);
        Ok(self.cube_from_offset(&offset, m, x))
    }

    pub(crate) fn cube_from_offset(&self, offset: &[Rational], m: i64, x: &[Rational]) -> Cube {
        let side = self.side(m);
        let corner = offset
            .iter()
            .zip(x)
            .map(|(o, xs)| {
                let k = floor(&((xs - o) / &side));
                o + &side * Rational::from_integer(k)
            })
            .collect();
        Cube {
            corner,
            side,
            openness: Openness::HalfOpen,
        }
    }

    fn check_point(&self, x: &[Rational]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Openness {
    HalfOpen,
    Open,
}

/// An axis-parallel cube `∏ [cᵢ, cᵢ + side)` (half-open) or `∏ (cᵢ, cᵢ + side)`
/// (open).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cube {
    #[serde(with = "serde_str_vec")]
    pub corner: Vec<Rational>,
    #[serde(with = "serde_str")]
    pub side: Rational,
    pub openness: Openness,
}

impl Cube {
    pub fn open(corner: Vec<Rational>, side: Rational) -> Result<Self> {
        Cube::with_openness(corner, side, Openness::Open)
    }

    pub fn half_open(corner: Vec<Rational>, side: Rational) -> Result<Self> {
        Cube::with_openness(corner, side, Openness::HalfOpen)
    }

    fn with_openness(corner: Vec<Rational>, side: Rational, openness: Openness) -> Result<Self> {
        if !side.is_positive() {
            return Err(Error::NonPositive {
                what: "cube side",
                value: side.to_string(),
            });
        }
        Ok(Cube {
            corner,
            side,
            openness,
        })
    }

    /// Open cube of the given side centred at `center`.
    pub fn open_around(center: &[Rational], side: Rational) -> Result<Self> {
        let half = &side / Rational::from_integer(BigInt::from(2));
        Cube::open(center.iter().map(|c| c - &half).collect(), side)
    }

    pub fn dim(&self) -> usize {
        self.corner.len()
    }

    pub fn interior(&self) -> Cube {
        Cube {
            openness: Openness::Open,
            ..self.clone()
        }
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.corner.iter().zip(x).all(|(c, xs)| {
            let hi = c + &self.side;
            match self.openness {
                Openness::HalfOpen => c <= xs && *xs < hi,
                Openness::Open => c < xs && *xs < hi,
            }
        })
    }

    /// Set containment `other ⊆ self`.
    pub fn contains_cube(&self, other: &Cube) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let strict_low = self.openness == Openness::Open && other.openness == Openness::HalfOpen;
        self.corner.iter().zip(&other.corner).all(|(c, oc)| {
            let low_ok = if strict_low { c < oc } else { c <= oc };
            low_ok && oc + &other.side <= c + &self.side
        })
    }

    /// Whether the two cubes share an interior point.
    pub fn overlaps(&self, other: &Cube) -> bool {
        self.corner
            .iter()
            .zip(&other.corner)
            .all(|(a, b)| a < &(b + &other.side) && b < &(a + &self.side))
    }
}

impl std::fmt::Display for Cube {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (l, r) = match self.openness {
            Openness::HalfOpen => ('[', ')'),
            Openness::Open => ('(', ')'),
        };
        for (i, c) in self.corner.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{l}{c}, {}{r}", c + &self.side)?;
        }
        Ok(())
    }
}
