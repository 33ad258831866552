//! Library side of the `subcodes` binary: config parsing, the subcommands and
//! their exit-code mapping.

pub mod commands;
pub mod config;
pub mod error;
