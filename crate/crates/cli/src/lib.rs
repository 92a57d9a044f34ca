//! File formats, reports and the command runner behind the `dartboard`
//! binary.

pub mod app;
pub mod certfile;
pub mod plot;
pub mod pointfile;
pub mod report;

pub use app::{run, CliError};
