//! Command-line front end: exact argument grammar, JSON/CSV/PGM output and
//! the acceptance runner.

pub mod acceptance;
pub mod cli;
pub mod output;
pub mod parse;
pub mod view;

pub use cli::{run, RunConfig};
