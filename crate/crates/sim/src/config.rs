//! Flat `key = value [unit]` configuration files and the unit tags shared
//! with command-line flags.
//!
//! ```text
//! # comments run to end of line
//! kappa_1     = 5 MHz     # hz, khz, mhz, ghz: frequency f, stored as 2πf
//! gamma_1     = 4 kc      # multiples of κ_c = κ₁
//! delta_m     = 3.1e7 rad/s
//! temperature = 20 mK     # K or mK
//! r           = 0.4
//! workers     = 4
//! ```
//!
//! Bare numbers are rad/s for rates and kelvin for the temperature.

use std::path::PathBuf;
use std::str::FromStr;

use cavmag_core::model::hz_to_angular;
use cavmag_core::PhysicalParams;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKey {
    Kappa1,
    Kappa2,
    KappaM,
    Gamma1,
    Gamma2,
    Delta1,
    Delta2,
    DeltaM,
    R,
    OmegaM,
    Temperature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Rate,
    Dimensionless,
    Temperature,
}

impl ParamKey {
    pub const ALL: [ParamKey; 11] = [
        ParamKey::Kappa1,
        ParamKey::Kappa2,
        ParamKey::KappaM,
        ParamKey::Gamma1,
        ParamKey::Gamma2,
        ParamKey::Delta1,
        ParamKey::Delta2,
        ParamKey::DeltaM,
        ParamKey::R,
        ParamKey::OmegaM,
        ParamKey::Temperature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamKey::Kappa1 => "kappa_1",
            ParamKey::Kappa2 => "kappa_2",
            ParamKey::KappaM => "kappa_m",
            ParamKey::Gamma1 => "gamma_1",
            ParamKey::Gamma2 => "gamma_2",
            ParamKey::Delta1 => "delta_1",
            ParamKey::Delta2 => "delta_2",
            ParamKey::DeltaM => "delta_m",
            ParamKey::R => "r",
            ParamKey::OmegaM => "omega_m",
            ParamKey::Temperature => "temperature",
        }
    }

    pub fn from_name(s: &str) -> Option<ParamKey> {
        ParamKey::ALL.into_iter().find(|k| k.name() == s)
    }

    fn kind(self) -> Kind {
        match self {
            ParamKey::R => Kind::Dimensionless,
            ParamKey::Temperature => Kind::Temperature,
            _ => Kind::Rate,
        }
    }

    fn slot(self, p: &mut PhysicalParams) -> &mut f64 {
        match self {
            ParamKey::Kappa1 => &mut p.kappa_1,
            ParamKey::Kappa2 => &mut p.kappa_2,
            ParamKey::KappaM => &mut p.kappa_m,
            ParamKey::Gamma1 => &mut p.gamma_1,
            ParamKey::Gamma2 => &mut p.gamma_2,
            ParamKey::Delta1 => &mut p.delta_1,
            ParamKey::Delta2 => &mut p.delta_2,
            ParamKey::DeltaM => &mut p.delta_m,
            ParamKey::R => &mut p.r,
            ParamKey::OmegaM => &mut p.omega_m,
            ParamKey::Temperature => &mut p.temperature,
        }
    }
}

/// A parameter value after unit parsing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    /// Fully resolved in core units (rad/s, kelvin or dimensionless).
    Absolute(f64),
    /// Multiple of `κ_c`, resolved once `κ₁` is final.
    KappaC(f64),
}

fn split_unit(text: &str) -> Option<(f64, &str)> {
    let text = text.trim();
    (1..=text.len())
        .rev()
        .filter(|&i| text.is_char_boundary(i))
        .find_map(|i| text[..i].trim().parse::<f64>().ok().map(|v| (v, text[i..].trim())))
}

/// Parses `value [unit]` for `key`.
pub fn parse_value(key: ParamKey, text: &str) -> std::result::Result<ParamValue, String> {
    let (v, unit) = split_unit(text).ok_or_else(|| format!("`{text}` is not a number"))?;
    if !v.is_finite() {
        return Err(format!("`{text}` is not finite"));
    }
    let unit_lc = unit.to_ascii_lowercase();
    let hz = |scale: f64| ParamValue::Absolute(hz_to_angular(scale * v));
    let value = match (key.kind(), unit_lc.as_str()) {
        (Kind::Rate, "" | "rad/s") => ParamValue::Absolute(v),
        (Kind::Rate, "hz") => hz(1.0),
        (Kind::Rate, "khz") => hz(1e3),
        (Kind::Rate, "mhz") => hz(1e6),
        (Kind::Rate, "ghz") => hz(1e9),
        (Kind::Rate, "kc") if key == ParamKey::Kappa1 => {
            return Err("kappa_1 defines κ_c and cannot be given in kc".into())
        }
        (Kind::Rate, "kc") => ParamValue::KappaC(v),
        (Kind::Temperature, "" | "k") => ParamValue::Absolute(v),
        (Kind::Temperature, "mk") => ParamValue::Absolute(v * 1e-3),
        (Kind::Dimensionless, "") => ParamValue::Absolute(v),
        _ => {
            let allowed = match key.kind() {
                Kind::Rate => "rad/s, Hz, kHz, MHz, GHz, kc",
                Kind::Temperature => "K, mK",
                Kind::Dimensionless => "none",
            };
            return Err(format!(
                "unit `{unit}` not valid for {} (allowed: {allowed})",
                key.name()
            ));
        }
    };
    Ok(value)
}

/// Ordered parameter assignments; a later entry for the same key wins.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    entries: Vec<(ParamKey, ParamValue)>,
}

impl Overrides {
    pub fn set(&mut self, key: ParamKey, value: ParamValue) {
        self.entries.retain(|(k, _)| *k != key);
        self.entries.push((key, value));
    }

    /// Layers `other` on top of `self`.
    pub fn merge(&mut self, other: &Overrides) {
        for &(k, v) in &other.entries {
            self.set(k, v);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies the assignments to `base` and validates the result.
    pub fn apply(&self, base: &PhysicalParams) -> Result<PhysicalParams> {
        let mut p = *base;
        for &(k, v) in &self.entries {
            if let ParamValue::Absolute(x) = v {
                *k.slot(&mut p) = x;
            }
        }
        let kc = p.kappa_c();
        for &(k, v) in &self.entries {
            if let ParamValue::KappaC(x) = v {
                *k.slot(&mut p) = x * kc;
            }
        }
        p.validate()?;
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected csv or json)")),
        }
    }
}

/// `11`, `11x21` or `11,21`.
pub fn parse_grid(s: &str) -> std::result::Result<Vec<usize>, String> {
    let counts = s
        .split(['x', 'X', ','])
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad grid count `{t}`")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if counts.is_empty() || counts.len() > 2 || counts.iter().any(|&c| c < 2) {
        return Err(format!("grid `{s}` must be one or two counts of at least 2"));
    }
    Ok(counts)
}

fn parse_workers(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("workers must be a positive integer, got `{s}`")),
    }
}

/// Settings from a config file or flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    pub params: Overrides,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub grid: Option<Vec<usize>>,
    pub workers: Option<usize>,
}

impl RunConfig {
    /// Layers `other` on top of `self`.
    pub fn merge(&mut self, other: &RunConfig) {
        self.params.merge(&other.params);
        if other.out.is_some() {
            self.out.clone_from(&other.out);
        }
        if other.format.is_some() {
            self.format = other.format;
        }
        if other.grid.is_some() {
            self.grid.clone_from(&other.grid);
        }
        if other.workers.is_some() {
            self.workers = other.workers;
        }
    }

    /// Handles a config key; returns `Ok(false)` for keys it does not know.
    pub(crate) fn accept(&mut self, key: &str, value: &str) -> std::result::Result<bool, String> {
        if let Some(k) = ParamKey::from_name(key) {
            self.params.set(k, parse_value(k, value)?);
            return Ok(true);
        }
        match key {
            "out" => self.out = Some(PathBuf::from(value)),
            "format" => self.format = Some(value.parse()?),
            "grid" => self.grid = Some(parse_grid(value)?),
            "workers" => self.workers = Some(parse_workers(value)?),
            _ => return Ok(false),
        }
        Ok(true)
    }
}

/// Non-blank, comment-stripped `key = value` lines with 1-based numbers.
pub(crate) fn key_values<'a>(
    text: &'a str,
    origin: &'a str,
) -> impl Iterator<Item = Result<(usize, &'a str, &'a str)>> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        Some(match line.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => Ok((i + 1, k.trim(), v.trim())),
            _ => Err(CliError::parse(
                origin,
                i + 1,
                format!("expected `key = value`, got `{line}`"),
            )),
        })
    })
}

fn known_keys() -> String {
    let mut keys: Vec<&str> = ParamKey::ALL.iter().map(|k| k.name()).collect();
    keys.extend(["out", "format", "grid", "workers"]);
    keys.join(", ")
}

/// Parses a config file. Unknown keys are rejected with their line number.
pub fn parse_config(text: &str, origin: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    for item in key_values(text, origin) {
        let (line, key, value) = item?;
        match cfg.accept(key, value) {
            Ok(true) => {}
            Ok(false) => {
                return Err(CliError::parse(
                    origin,
                    line,
                    format!("unknown key `{key}` (known: {})", known_keys()),
                ))
            }
            Err(msg) => return Err(CliError::parse(origin, line, format!("{key}: {msg}"))),
        }
    }
    Ok(cfg)
}
