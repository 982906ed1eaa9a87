//! Min, max and argmax of each column over the stable grid points.

use std::fmt;

use cavmag_core::SweepResult;

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSummary {
    pub quantity: String,
    pub min: f64,
    pub max: f64,
    /// Axis values of the first grid point attaining `max`.
    pub argmax: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub axes: Vec<String>,
    pub points: usize,
    pub unstable: usize,
    pub columns: Vec<ColumnSummary>,
}

pub fn summarize(result: &SweepResult) -> Summary {
    let columns = result
        .spec
        .quantities
        .iter()
        .enumerate()
        .filter_map(|(k, q)| {
            let mut best: Option<(f64, f64, &[f64])> = None;
            for row in &result.rows {
                let Some(v) = row.values[k] else { continue };
                best = Some(match best {
                    None => (v, v, &row.axes),
                    Some((lo, hi, at)) => (
                        lo.min(v),
                        if v > hi { v } else { hi },
                        if v > hi { &row.axes } else { at },
                    ),
                });
            }
            best.map(|(min, max, at)| ColumnSummary {
                quantity: q.name().to_string(),
                min,
                max,
                argmax: at.to_vec(),
            })
        })
        .collect();
    Summary {
        axes: result
            .spec
            .axes
            .iter()
            .map(|a| a.parameter.name().to_string())
            .collect(),
        points: result.rows.len(),
        unstable: result.rows.iter().filter(|r| !r.stable).count(),
        columns,
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} points, {} unstable", self.points, self.unstable)?;
        for c in &self.columns {
            let at: Vec<String> = self
                .axes
                .iter()
                .zip(&c.argmax)
                .map(|(a, v)| format!("{a}={v:.6}"))
                .collect();
            writeln!(
                f,
                "  {:<14} min {:>12.6e}  max {:>12.6e}  at {}",
                c.quantity,
                c.min,
                c.max,
                at.join(" ")
            )?;
        }
        Ok(())
    }
}
