//! File formats and the command-line front end for `torskit-core`.

pub use torskit_core as core;

pub mod cli;
pub mod formats;
pub mod parse;
