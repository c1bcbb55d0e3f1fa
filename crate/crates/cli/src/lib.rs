//! Command line front end: argument parsing, JSON and DOT formats.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, CliError, Output};
