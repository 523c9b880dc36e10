//! Command-line front end and JSON formats for `partcat-core`.

pub mod cli;
pub mod json;

pub use cli::run;
