//! Parallel sweep evaluation. Output is identical to
//! [`cavmag_core::run_sweep`] for any worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use cavmag_core::sweep::{evaluate_point, SweepResult};
use cavmag_core::SweepSpec;
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Called with `(completed, total)` after each grid point.
pub type Progress<'a> = &'a (dyn Fn(usize, usize) + Sync);

pub fn run_parallel(spec: &SweepSpec, workers: Option<usize>, progress: Option<Progress<'_>>) -> Result<SweepResult> {
    spec.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let total = spec.len();
    let done = AtomicUsize::new(0);
    let rows = pool.install(|| {
        (0..total)
            .into_par_iter()
            .map(|i| {
                let row = evaluate_point(spec, i);
                if let Some(report) = progress {
                    report(done.fetch_add(1, Ordering::Relaxed) + 1, total);
                }
                row
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(SweepResult::from_rows(spec.clone(), rows)?)
}
