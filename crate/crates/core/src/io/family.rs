//! Family files:
//!
//! ```json
//! { "dimension": 1,
//!   "grids": [ { "base": 2, "delta": ["1/3"],
//!                "digits": { "preperiod": [], "period": [[0], [1]] },
//!                "label": "third" } ] }
//! ```
//!
//! Errors name the offending JSON path, e.g. `grids[1].digits.period[0][2]`.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::grid::{DigitStream, GridRep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub dimension: usize,
    pub grids: Vec<GridRep>,
}

impl Family {
    pub fn new(grids: Vec<GridRep>) -> Result<Self> {
        let dimension = grids
            .first()
            .map(GridRep::dim)
            .ok_or(Error::ZeroDimension)?;
        Ok(Family { dimension, grids })
    }

    /// Fails unless the family has exactly `dimension + 1` grids.
    pub fn require_full(&self) -> Result<()> {
        if self.grids.len() == self.dimension + 1 {
            Ok(())
        } else {
            Err(Error::input(
                "grids",
                format!(
                    "a family in R^{} needs exactly {} grids, found {}",
                    self.dimension,
                    self.dimension + 1,
                    self.grids.len()
                ),
            ))
        }
    }

    pub fn bases(&self) -> Vec<u64> {
        self.grids.iter().map(GridRep::base).collect()
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::input(path, format!("missing field \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::input(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::input(path, "expected an array"))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::input(path, format!("expected a non-negative integer, got {v}")))
}

fn as_rational(v: &Value, path: &str) -> Result<Rational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => {
            return Err(Error::input(
                path,
                format!("expected a rational \"p/q\", got {v}"),
            ))
        }
    };
    parse_rational(&text).map_err(|e| Error::input(path, e.to_string()))
}

fn digit_rows(v: &Value, base: u64, dim: usize, path: &str) -> Result<Vec<Vec<u64>>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let rpath = format!("{path}[{r}]");
            let cells = as_array(row, &rpath)?;
            if cells.len() != dim {
                return Err(Error::input(
                    &rpath,
                    format!("expected {dim} digits, found {}", cells.len()),
                ));
            }
            cells
                .iter()
                .enumerate()
                .map(|(c, cell)| {
                    let cpath = format!("{rpath}[{c}]");
                    let d = as_u64(cell, &cpath)?;
                    if d >= base {
                        return Err(Error::input(
                            &cpath,
                            format!("digit {d} is outside 0..{base}"),
                        ));
                    }
                    Ok(d)
                })
                .collect()
        })
        .collect()
}

fn parse_grid(v: &Value, index: usize, dim: usize) -> Result<GridRep> {
    let path = format!("grids[{index}]");
    let obj = as_object(v, &path)?;
    let bpath = format!("{path}.base");
    let base = as_u64(field(obj, "base", &path)?, &bpath)?;
    if base < 2 {
        return Err(Error::input(
            bpath,
            format!("base must be at least 2, got {base}"),
        ));
    }
    let dpath = format!("{path}.delta");
    let delta_v = as_array(field(obj, "delta", &path)?, &dpath)?;
    if delta_v.len() != dim {
        return Err(Error::input(
            dpath,
            format!("expected {dim} coordinates, found {}", delta_v.len()),
        ));
    }
    let origin = delta_v
        .iter()
        .enumerate()
        .map(|(k, x)| as_rational(x, &format!("{dpath}[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    let gpath = format!("{path}.digits");
    let digits = as_object(field(obj, "digits", &path)?, &gpath)?;
    let pre = match digits.get("preperiod") {
        Some(v) => digit_rows(v, base, dim, &format!("{gpath}.preperiod"))?,
        None => Vec::new(),
    };
    let ppath = format!("{gpath}.period");
    let per = digit_rows(field(digits, "period", &gpath)?, base, dim, &ppath)?;
    if per.is_empty() {
        return Err(Error::input(ppath, "period must be non-empty"));
    }
    let label = match obj.get("label") {
        None => format!("G{}", index + 1),
        Some(Value::String(s)) => s.clone(),
        Some(other) => {
            return Err(Error::input(
                format!("{path}.label"),
                format!("expected a string, got {other}"),
            ))
        }
    };
    let stream =
        DigitStream::new(base, pre, per).map_err(|e| Error::input(&gpath, e.to_string()))?;
    GridRep::new(base, origin, stream, label).map_err(|e| Error::input(&path, e.to_string()))
}

/// Parses a family without checking the `d + 1` grid count.
pub fn parse_family(text: &str) -> Result<Family> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::input("$", e.to_string()))?;
    let obj = as_object(&root, "$")?;
    let dim = as_u64(field(obj, "dimension", "$")?, "dimension")? as usize;
    if dim == 0 {
        return Err(Error::input("dimension", "dimension must be at least 1"));
    }
    let grids = as_array(field(obj, "grids", "$")?, "grids")?
        .iter()
        .enumerate()
        .map(|(i, g)| parse_grid(g, i, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(Family {
        dimension: dim,
        grids,
    })
}

pub fn load_family(path: impl AsRef<Path>) -> Result<Family> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(path.display().to_string(), e.to_string()))?;
    parse_family(&text)
}

fn grid_json(g: &GridRep) -> Value {
    json!({
        "base": g.base(),
        "delta": g.origin().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "digits": {
            "preperiod": g.digits().preperiod(),
            "period": g.digits().period(),
        },
        "label": g.label(),
    })
}

pub fn family_to_json(family: &Family) -> String {
    let v = json!({
        "dimension": family.dimension,
        "grids": family.grids.iter().map(grid_json).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("json values always serialize") + "\n"
}

pub fn save_family(family: &Family, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, family_to_json(family))
        .map_err(|e| Error::input(path.display().to_string(), e.to_string()))
}
