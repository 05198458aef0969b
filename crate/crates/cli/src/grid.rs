//! Parsing of list and range arguments.

use std::fmt;

/// Values from a list argument, kept in the order given.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T>(pub Vec<T>);

impl<T: fmt::Display> fmt::Display for Grid<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Integers as a comma list whose items are values or inclusive ranges
/// `a..b`, e.g. `1..4,8,16`.
pub fn parse_counts(s: &str) -> Result<Grid<u64>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if let Some((a, b)) = item.split_once("..") {
            let a = parse_count(a)?;
            let b = parse_count(b)?;
            if b < a {
                return Err(format!("empty range `{item}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(parse_count(item)?);
        }
    }
    Ok(Grid(out))
}

fn parse_count(s: &str) -> Result<u64, String> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))?;
    if v == 0 {
        return Err("values must be at least 1".into());
    }
    Ok(v)
}

/// Reals as `start:step:stop` (inclusive, `step > 0`) or a comma list.
pub fn parse_reals(s: &str) -> Result<Grid<f64>, String> {
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    match parts.as_slice() {
        [start, step, stop] => {
            let (start, step, stop) = (parse_real(start)?, parse_real(step)?, parse_real(stop)?);
            if !(step > 0.0) {
                return Err(format!("step must be positive, got {step}"));
            }
            if stop < start {
                return Err(format!("stop {stop} is below start {start}"));
            }
            // index-based so that no rounding error accumulates
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            if count > 1_000_000 {
                return Err(format!("grid has {count} points, limit is 1000000"));
            }
            Ok(Grid((0..count).map(|i| start + step * i as f64).collect()))
        }
        [_] => s
            .split(',')
            .map(parse_real)
            .collect::<Result<Vec<_>, _>>()
            .map(Grid),
        _ => Err(format!("`{s}` is neither start:step:stop nor a comma list")),
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

/// Probabilities in `(0, 1)` as a comma list.
pub fn parse_probabilities(s: &str) -> Result<Grid<f64>, String> {
    let g = s
        .split(',')
        .map(parse_real)
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(p) = g.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
        return Err(format!("probability {p} is outside (0, 1)"));
    }
    Ok(Grid(g))
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
