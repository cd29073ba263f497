//! Command-line front end: table emitters, verification runner and an
//! on-disk cache of decomposition tables.

pub mod args;
pub mod cache;
pub mod commands;
pub mod error;
pub mod output;

pub use args::Cli;
pub use commands::run;
pub use error::{CliError, CliResult};
