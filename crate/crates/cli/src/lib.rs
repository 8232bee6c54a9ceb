//! Command-line front end: file formats, JSON certificates and the
//! random-graph experiment harness.

pub mod commands;
pub mod error;
pub mod experiment;
pub mod io;

pub use commands::{run, Cli, Command, Output, SCHEMA};
pub use error::CliError;
