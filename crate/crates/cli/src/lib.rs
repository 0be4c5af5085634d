//! Command-line front end for `hopf_forge`.

pub mod error;
pub mod parse;
mod commands;
mod render;
mod specs;

pub use commands::{run, Output};
pub use error::CliError;
pub use parse::{parse, parse_scalar, MAX_EXPONENT};
