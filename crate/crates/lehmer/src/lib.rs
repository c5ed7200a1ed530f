//! Command-line surface and JSON formats for [`lehmer_core`].

pub mod cli;
pub mod json;

pub use cli::{run, Cli, Command, Output, Status, UsageError, USAGE_EXIT};
