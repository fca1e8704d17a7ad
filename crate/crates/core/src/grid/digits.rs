use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::adic::{adic_digits, adic_value};
use crate::exact::numtheory::check_base;
use crate::exact::Rational;

/// An eventually periodic stream of digit vectors in `{0, …, base−1}^d`.
///
/// Index `i` reads `preperiod[i]` while `i < preperiod.len()`, and the period
/// cyclically after that.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitStream {
    base: u64,
    preperiod: Vec<Vec<u64>>,
    period: Vec<Vec<u64>>,
}

impl DigitStream {
    pub fn new(base: u64, preperiod: Vec<Vec<u64>>, period: Vec<Vec<u64>>) -> Result<Self> {
        check_base(base)?;
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let dim = period[0].len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (index, v) in preperiod.iter().chain(&period).enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if let Some((coordinate, &digit)) = v.iter().enumerate().find(|(_, &x)| x >= base) {
                return Err(Error::DigitOutOfRange {
                    index,
                    coordinate,
                    digit,
                    base,
                });
            }
        }
        Ok(DigitStream {
            base,
            preperiod,
            period,
        })
    }

    /// The constant stream `digit, digit, …` in every coordinate.
    pub fn constant(base: u64, dim: usize, digit: u64) -> Result<Self> {
        DigitStream::new(base, Vec::new(), vec![vec![digit; dim]])
    }

    /// The stream of `d` one-dimensional streams read side by side. Periods
    /// are aligned to their least common multiple.
    pub fn zip(base: u64, coords: &[(Vec<u64>, Vec<u64>)]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if coords.iter().any(|(_, per)| per.is_empty()) {
            return Err(Error::EmptyPeriod);
        }
        let pre = coords.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        let per = coords.iter().fold(1usize, |acc, (_, p)| acc.lcm(&p.len()));
        let read = |(p, q): &(Vec<u64>, Vec<u64>), i: usize| {
            if i < p.len() {
                p[i]
            } else {
                q[(i - p.len()) % q.len()]
            }
        };
        let row = |i: usize| coords.iter().map(|c| read(c, i)).collect::<Vec<_>>();
        DigitStream::new(
            base,
            (0..pre).map(row).collect(),
            (pre..pre + per).map(row).collect(),
        )
    }

    /// The stream whose coordinate `s` sums to `values[s]` as a `base`-adic
    /// integer.
    pub fn from_values(base: u64, values: &[Rational]) -> Result<Self> {
        let coords = values
            .iter()
            .map(|v| adic_digits(base, v))
            .collect::<Result<Vec<_>>>()?;
        DigitStream::zip(base, &coords)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.period[0].len()
    }

    pub fn preperiod(&self) -> &[Vec<u64>] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Vec<u64>] {
        &self.period
    }

    pub fn digit(&self, i: usize) -> &[u64] {
        if i < self.preperiod.len() {
            &self.preperiod[i]
        } else {
            &self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// Coordinate `s` read as a one-dimensional `(preperiod, period)` pair.
    pub fn coordinate(&self, s: usize) -> (Vec<u64>, Vec<u64>) {
        (
            self.preperiod.iter().map(|v| v[s]).collect(),
            self.period.iter().map(|v| v[s]).collect(),
        )
    }

    /// `Σ aᵢ[s]·baseⁱ` as a `base`-adic integer, which is a rational number.
    pub fn coordinate_value(&self, s: usize) -> Rational {
        let (pre, per) = self.coordinate(s);
        adic_value(self.base, &pre, &per).expect("validated stream")
    }

    pub fn values(&self) -> Vec<Rational> {
        (0..self.dim()).map(|s| self.coordinate_value(s)).collect()
    }
}
