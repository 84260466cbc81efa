//! Library half of the `proxi` binary: argument types, the subcommands and
//! the SVG renderer.

pub mod args;
pub mod commands;
pub mod error;
pub mod render;

pub use args::Cli;
pub use commands::run;
pub use error::{exit, CliError, CliResult};
