use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::numtheory::{ceil_log_rational, floor_log_rational};
use crate::exact::rational::serde_str;
use crate::exact::Rational;
use crate::grid::{Cube, GridRep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub grid_index: usize,
    pub generation: i64,
    pub cube: Cube,
    /// `side(cube) / side(query)`
    #[serde(with = "serde_str")]
    pub ratio: Rational,
}

/// The generation-`m` cube of `rep` that contains `q`, if there is one.
pub fn containing_cube(rep: &GridRep, m: i64, q: &Cube) -> Result<Option<Cube>> {
    if q.dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: q.dim(),
        });
    }
    let side = rep.side(m);
    if q.side > side {
        return Ok(None);
    }
    let d = rep.cube_from_offset(&rep.generation_offset(m), m, &q.corner);
    Ok(d.contains_cube(q).then_some(d))
}

/// The smallest grid cube containing `q` among sides up to `ratio_cap` times
/// the side of `q`. Equal sides go to the lowest grid index.
pub fn smallest_comparable(
    family: &[GridRep],
    q: &Cube,
    ratio_cap: &Rational,
) -> Result<Option<CoverResult>> {
    if family.is_empty() {
        return Err(Error::InvalidArgument("family must be non-empty".into()));
    }
    if *ratio_cap < Rational::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!(
            "ratio cap {ratio_cap} is below 1"
        )));
    }
    let inv_side = q.side.recip();
    let inv_limit = (&q.side * ratio_cap).recip();
    let mut best: Option<CoverResult> = None;
    for (grid_index, rep) in family.iter().enumerate() {
        let n = rep.base();
        // sides n^-m with side(q) <= n^-m <= cap·side(q)
        let finest = floor_log_rational(n, &inv_side)?;
        let coarsest = ceil_log_rational(n, &inv_limit)?;
        for m in (coarsest..=finest).rev() {
            if let Some(best) = &best {
                if rep.side(m) >= best.cube.side {
                    break;
                }
            }
            if let Some(cube) = containing_cube(rep, m, q)? {
                let ratio = &cube.side / &q.side;
                best = Some(CoverResult {
                    grid_index,
                    generation: m,
                    cube,
                    ratio,
                });
                break;
            }
        }
    }
    Ok(best)
}
