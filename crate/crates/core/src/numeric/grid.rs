use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eval_nested, gaussian, nest, EvalPoint};
use crate::error::{Error, Result};
use crate::operators::GaussianState;

/// Sampling of one coordinate: a fixed value or `count` evenly spaced points
/// on `[lo, hi]`, endpoints included.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum AxisSampling {
    Fixed(f64),
    Range { lo: f64, hi: f64, count: usize },
}

impl AxisSampling {
    fn validate(&self) -> Result<()> {
        match *self {
            AxisSampling::Fixed(v) if !v.is_finite() => Err(Error::NonFinite(format!("fixed coordinate {v}"))),
            AxisSampling::Range { lo, hi, count } => {
                if !(lo.is_finite() && hi.is_finite()) {
                    return Err(Error::NonFinite(format!("range [{lo}, {hi}]")));
                }
                if lo >= hi {
                    return Err(Error::ParameterDomain(format!("range needs lo < hi, got [{lo}, {hi}]")));
                }
                if count < 2 {
                    return Err(Error::ParameterDomain(format!("range needs at least 2 samples, got {count}")));
                }
                Ok(())
            }
            AxisSampling::Fixed(_) => Ok(()),
        }
    }

    fn points(&self) -> Vec<f64> {
        match *self {
            AxisSampling::Fixed(v) => vec![v],
            AxisSampling::Range { lo, hi, count } => {
                let step = (hi - lo) / (count - 1) as f64;
                (0..count).map(|i| if i == count - 1 { hi } else { lo + step * i as f64 }).collect()
            }
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub axes: [AxisSampling; 3],
    pub include_gaussian: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct GridRow {
    pub x: [f64; 3],
    pub value: f64,
}

/// Rows ordered with `x1` slowest and `x3` fastest.
pub fn emit_grid(st: &GaussianState, spec: &GridSpec) -> Result<Vec<GridRow>> {
    for a in &spec.axes {
        a.validate()?;
    }
    if !st.is_real() {
        return Err(Error::ParameterDomain("only real states can be evaluated".into()));
    }
    let nested = nest(&st.real_poly());
    let [p1, p2, p3] = spec.axes.map(|a| a.points());
    let mut points = Vec::with_capacity(p1.len() * p2.len() * p3.len());
    for &a in &p1 {
        for &b in &p2 {
            points.extend(p3.iter().map(|&c| [a, b, c]));
        }
    }
    Ok(points
        .par_iter()
        .map(|&x| {
            let mut value = eval_nested(&nested, &x);
            if spec.include_gaussian {
                value *= gaussian(&EvalPoint { x });
            }
            GridRow { x, value }
        })
        .collect())
}

/// `x1,x2,x3,value` rows with 17 significant digits.
pub fn write_csv(rows: &[GridRow], out: impl Write) -> Result<()> {
    let io = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x1", "x2", "x3", "value"]).map_err(io)?;
    for r in rows {
        let fields = [r.x[0], r.x[1], r.x[2], r.value].map(|v| format!("{v:.16e}"));
        w.write_record(&fields).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("writing CSV: {e}")))?;
    Ok(())
}
