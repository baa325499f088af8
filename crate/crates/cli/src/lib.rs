//! Front end for `adp-core`: argument definitions, rendering, batch input
//! and command dispatch. The `adp` binary is a thin wrapper around [`run`].

pub mod args;
pub mod batch;
pub mod commands;
pub mod error;
pub mod render;
pub mod tables;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
