//! Sweep description files: the config grammar plus sweep keys.
//!
//! ```text
//! preset      = fig4a            # optional starting point
//! axis        = r 0 1 101        # name start stop count; at most two lines
//! axis        = temperature 0 3 101
//! quantities  = e_cc, r_min
//! description = thermal robustness
//! grid        = 11               # resolution override
//! r           = 0.5              # any parameter key sets the base point
//! ```
//!
//! Explicit `axis` or `quantities` lines replace those of the preset.

use cavmag_core::sweep::{AxisParam, AxisSpec, Quantity};
use cavmag_core::{figure_preset, FigureId, PhysicalParams, SweepSpec};

use crate::config::{key_values, RunConfig};
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepFile {
    pub preset: Option<FigureId>,
    pub axes: Vec<AxisSpec>,
    pub quantities: Vec<Quantity>,
    pub description: Option<String>,
    pub run: RunConfig,
}

/// `name start stop count`, whitespace or comma separated.
pub fn parse_axis(s: &str) -> std::result::Result<AxisSpec, String> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    let [name, start, stop, count] = parts[..] else {
        return Err(format!("axis needs `name start stop count`, got `{s}`"));
    };
    let parameter: AxisParam = name.parse().map_err(|e: cavmag_core::Error| {
        let valid: Vec<&str> = AxisParam::ALL.iter().map(|a| a.name()).collect();
        format!("{e} (valid: {})", valid.join(", "))
    })?;
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("bad axis bound `{t}`"));
    let count = count
        .parse::<usize>()
        .map_err(|_| format!("bad axis count `{count}`"))?;
    Ok(AxisSpec::new(parameter, num(start)?, num(stop)?, count))
}

pub fn parse_quantities(s: &str) -> std::result::Result<Vec<Quantity>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Quantity>().map_err(|_| {
                let valid: Vec<&str> = Quantity::ALL.iter().map(|q| q.name()).collect();
                format!("unknown quantity `{t}` (valid: {})", valid.join(", "))
            })
        })
        .collect()
}

pub fn parse_spec_file(text: &str, origin: &str) -> Result<SweepFile> {
    let mut f = SweepFile::default();
    for item in key_values(text, origin) {
        let (line, key, value) = item?;
        let err = |msg: String| CliError::parse(origin, line, format!("{key}: {msg}"));
        match key {
            "preset" => f.preset = Some(value.parse().map_err(|e: cavmag_core::Error| err(e.to_string()))?),
            "axis" => {
                if f.axes.len() == 2 {
                    return Err(err("at most two axes".into()));
                }
                f.axes.push(parse_axis(value).map_err(err)?);
            }
            "quantities" => f.quantities = parse_quantities(value).map_err(err)?,
            "description" => f.description = Some(value.to_string()),
            _ => match f.run.accept(key, value) {
                Ok(true) => {}
                Ok(false) => return Err(CliError::parse(origin, line, format!("unknown key `{key}`"))),
                Err(msg) => return Err(err(msg)),
            },
        }
    }
    if f.preset.is_none() && f.axes.is_empty() {
        return Err(CliError::parse(origin, 0, "no `axis` lines and no `preset`"));
    }
    if f.preset.is_none() && f.quantities.is_empty() {
        return Err(CliError::parse(origin, 0, "no `quantities` line and no `preset`"));
    }
    Ok(f)
}

impl SweepFile {
    pub fn from_preset(id: FigureId) -> Self {
        SweepFile {
            preset: Some(id),
            ..Default::default()
        }
    }

    /// Resolves the sweep. `run` holds the settings layered over the file's
    /// own (parameter overrides and grid).
    pub fn build(&self, run: &RunConfig) -> Result<SweepSpec> {
        let preset = self.preset.map(figure_preset);
        let mut spec = preset.unwrap_or_else(|| SweepSpec {
            base: PhysicalParams::default(),
            axes: Vec::new(),
            quantities: Vec::new(),
            description: String::new(),
        });
        if !self.axes.is_empty() {
            spec.axes.clone_from(&self.axes);
        }
        if !self.quantities.is_empty() {
            spec.quantities.clone_from(&self.quantities);
        }
        if let Some(d) = &self.description {
            spec.description.clone_from(d);
        }
        let mut merged = self.run.clone();
        merged.merge(run);
        spec.base = merged.params.apply(&spec.base)?;
        if let Some(grid) = &merged.grid {
            spec = spec.with_resolution(grid)?;
        }
        spec.validate()?;
        Ok(spec)
    }
}
