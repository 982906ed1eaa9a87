use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use cavmag::config::{parse_grid, parse_value, ParamKey};
use cavmag::output::{render, resolve_format};
use cavmag::specfile::{parse_axis, SweepFile};
use cavmag::{
    parse_config, parse_spec_file, run_parallel, summarize, write_atomic, CliError, Format, Result, RunConfig,
};
use cavmag_core::sweep::{AxisSpec, Quantity};
use cavmag_core::{full_report, FigureId, PhysicalParams, SweepResult, SweepSpec};
use clap::{Args, Parser, Subcommand};

/// Steady-state entanglement and steering of a squeezed-driven dual-cavity
/// magnon system.
#[derive(Parser)]
#[command(name = "cavmag", version)]
struct Cli {
    /// Config file of `key = value [unit]` lines; flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full correlation report at one parameter point, as JSON on stdout.
    Point {
        #[command(flatten)]
        params: ParamArgs,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the sweep described in a spec file.
    Sweep {
        spec: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Regenerate a figure panel (fig2a ... fig8b).
    Figure {
        id: String,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Scan the largest real part of the drift spectrum.
    Stability {
        /// Starting preset, fig8a or fig8b.
        #[arg(long, default_value = "fig8a")]
        preset: String,
        /// `NAME,START,STOP,COUNT`; up to two, replacing the preset axes.
        #[arg(long = "axis", allow_hyphen_values = true)]
        axes: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args, Default)]
struct OutputArgs {
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json; defaults to the output extension, then csv.
    #[arg(long)]
    format: Option<Format>,
    /// Grid resolution override: `N` or `NxM`.
    #[arg(long)]
    grid: Option<String>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    workers: Option<usize>,
}

/// Parameter overrides. Rates accept rad/s (bare), Hz/kHz/MHz/GHz (as f,
/// stored 2πf) or `kc` multiples of κ₁; temperature accepts K or mK.
#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    kappa_1: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    kappa_2: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    kappa_m: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    gamma_1: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    gamma_2: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    delta_1: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    delta_2: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    delta_m: Option<String>,
    #[arg(long, value_name = "R", allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, value_name = "RATE", allow_hyphen_values = true)]
    omega_m: Option<String>,
    #[arg(long, value_name = "TEMP", allow_hyphen_values = true)]
    temperature: Option<String>,
}

impl ParamArgs {
    fn entries(&self) -> [(ParamKey, &Option<String>); 11] {
        [
            (ParamKey::Kappa1, &self.kappa_1),
            (ParamKey::Kappa2, &self.kappa_2),
            (ParamKey::KappaM, &self.kappa_m),
            (ParamKey::Gamma1, &self.gamma_1),
            (ParamKey::Gamma2, &self.gamma_2),
            (ParamKey::Delta1, &self.delta_1),
            (ParamKey::Delta2, &self.delta_2),
            (ParamKey::DeltaM, &self.delta_m),
            (ParamKey::R, &self.r),
            (ParamKey::OmegaM, &self.omega_m),
            (ParamKey::Temperature, &self.temperature),
        ]
    }

    fn into_config(self, output: Option<OutputArgs>) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        for (key, value) in self.entries() {
            if let Some(text) = value {
                let v = parse_value(key, text)
                    .map_err(|m| CliError::Usage(format!("--{}: {m}", key.name().replace('_', "-"))))?;
                cfg.params.set(key, v);
            }
        }
        if let Some(o) = output {
            cfg.out = o.out;
            cfg.format = o.format;
            cfg.workers = o.workers;
            if let Some(g) = o.grid {
                cfg.grid = Some(parse_grid(&g).map_err(|m| CliError::Usage(format!("--grid: {m}")))?);
            }
        }
        Ok(cfg)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Config file settings with flags layered on top.
fn layered(config: Option<&Path>, flags: RunConfig) -> Result<RunConfig> {
    let mut cfg = match config {
        Some(path) => parse_config(&read(path)?, &path.display().to_string())?,
        None => RunConfig::default(),
    };
    cfg.merge(&flags);
    if matches!(cfg.workers, Some(0)) {
        return Err(CliError::Usage("--workers must be positive".into()));
    }
    Ok(cfg)
}

fn progress_printer(label: String) -> impl Fn(usize, usize) + Sync {
    let shown = AtomicUsize::new(0);
    move |done, total| {
        let pct = done * 100 / total.max(1) / 10 * 10;
        if shown.fetch_max(pct + 1, Ordering::Relaxed) < pct + 1 {
            eprint!("\r{label}: {pct:>3}% ({done}/{total})");
            if done == total {
                eprintln!();
            }
        }
    }
}

fn emit(result: &SweepResult, cfg: &RunConfig) -> Result<()> {
    let format = resolve_format(cfg.format, cfg.out.as_deref());
    let text = render(result, format);
    match &cfg.out {
        Some(path) => {
            write_atomic(path, text.as_bytes())?;
            eprintln!("wrote {} rows to {}", result.rows.len(), path.display());
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e))?,
    }
    Ok(())
}

fn run_spec(label: &str, spec: &SweepSpec, cfg: &RunConfig) -> Result<SweepResult> {
    eprintln!("{label}: {} ({} points)", spec.description, spec.len());
    let progress = progress_printer(label.to_string());
    let result = run_parallel(spec, cfg.workers, Some(&progress))?;
    emit(&result, cfg)?;
    eprint!("{}", summarize(&result));
    Ok(result)
}

fn figure_id(s: &str) -> Result<FigureId> {
    s.parse()
        .map_err(|e: cavmag_core::Error| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<u8> {
    let config = cli.config.as_deref();
    match cli.command {
        Command::Point { params, out } => {
            let cfg = layered(config, params.into_config(None)?)?;
            let p = cfg.params.apply(&PhysicalParams::default())?;
            let report = full_report(&p)?;
            let mut json = serde_json::to_string_pretty(&report).expect("reports are finite");
            json.push('\n');
            if let Some(path) = out.or(cfg.out) {
                write_atomic(&path, json.as_bytes())?;
            }
            std::io::stdout()
                .write_all(json.as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))?;
            if !report.is_stable() {
                eprintln!(
                    "unstable: max real part of drift spectrum {:e}",
                    report.stability.max_real_part
                );
                return Ok(2);
            }
            Ok(0)
        }
        Command::Sweep { spec, output, params } => {
            let cfg = layered(config, params.into_config(Some(output))?)?;
            let file = parse_spec_file(&read(&spec)?, &spec.display().to_string())?;
            let sweep = file.build(&cfg)?;
            let mut out_cfg = file.run.clone();
            out_cfg.merge(&cfg);
            run_spec("sweep", &sweep, &out_cfg)?;
            Ok(0)
        }
        Command::Figure { id, output, params } => {
            let id = figure_id(&id)?;
            let cfg = layered(config, params.into_config(Some(output))?)?;
            let spec = SweepFile::from_preset(id).build(&cfg)?;
            run_spec(id.name(), &spec, &cfg)?;
            Ok(0)
        }
        Command::Stability {
            preset,
            axes,
            output,
            params,
        } => {
            let id = figure_id(&preset)?;
            if !matches!(id, FigureId::Fig8a | FigureId::Fig8b) {
                return Err(CliError::Usage(format!(
                    "stability presets are fig8a and fig8b, got {id}"
                )));
            }
            let cfg = layered(config, params.into_config(Some(output))?)?;
            let axes = axes
                .iter()
                .map(|a| parse_axis(a).map_err(|m| CliError::Usage(format!("--axis: {m}"))))
                .collect::<Result<Vec<AxisSpec>>>()?;
            if axes.len() > 2 {
                return Err(CliError::Usage("at most two --axis flags".into()));
            }
            let description = (!axes.is_empty()).then(|| {
                let names: Vec<String> = axes
                    .iter()
                    .map(|a| format!("{} [{}, {}]", a.parameter, a.start, a.stop))
                    .collect();
                format!("max Re λ of the drift vs {}", names.join(" × "))
            });
            let file = SweepFile {
                axes,
                quantities: vec![Quantity::MaxRealEig],
                description,
                ..SweepFile::from_preset(id)
            };
            let spec = file.build(&cfg)?;
            let result = run_spec("stability", &spec, &cfg)?;
            let unstable = result.rows.iter().filter(|r| !r.stable).count();
            eprintln!(
                "{}",
                if unstable == 0 {
                    "stable everywhere".to_string()
                } else {
                    format!("{unstable} unstable points")
                }
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
