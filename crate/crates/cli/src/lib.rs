//! Command-line front end: argument types, input loading, command execution and
//! the reproduction manifest.

pub mod args;
pub mod commands;
pub mod error;
pub mod inputs;
pub mod reproduce;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
