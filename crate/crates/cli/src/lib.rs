//! Command-line front end for `tcluster`: the `.tg` file format and the
//! subcommand driver behind the `tcluster` binary.

pub mod commands;
pub mod format;

pub use commands::{run, Outcome};
pub use format::{parse_tg, serialise_tg, ParseError};
