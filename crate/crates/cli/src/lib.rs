//! File formats, reports and the command-line front end for `normpm`.
//!
//! * [`scx`]: facet-list files, one facet per line.
//! * [`script`]: stack scripts for generating stacked spheres.
//! * [`record`]: one-line surgery records for replay files.
//! * [`report`]: `key=value` and JSON reports.
//! * [`app`]: the verbs of the `normpm` binary.

pub mod app;
pub mod error;
pub mod record;
pub mod report;
pub mod scx;
pub mod script;

pub use app::{run, Outcome};
pub use error::CliError;
