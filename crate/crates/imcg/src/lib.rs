//! File formats, sweeps and the command line over `imcg-core`.

pub mod cli;
mod error;
pub mod export;
pub mod format;
pub mod harness;

pub use cli::run_cli;
pub use error::{Error, Result};
pub use export::{export_graph, ExportFormat};
pub use format::{parse_spec, spec_to_json};
pub use harness::{crosscheck, search, Mismatch, Mode, SweepReport};
