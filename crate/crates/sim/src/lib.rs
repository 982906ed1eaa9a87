//! Configuration, file formats, parallel sweeps and the `cavmag` command
//! line around [`cavmag_core`].

pub mod config;
pub mod error;
pub mod output;
pub mod runner;
pub mod specfile;
pub mod summary;

pub use config::{parse_config, Format, RunConfig};
pub use error::{CliError, Result};
pub use output::{to_csv, to_json, write_atomic};
pub use runner::run_parallel;
pub use specfile::{parse_spec_file, SweepFile};
pub use summary::summarize;
