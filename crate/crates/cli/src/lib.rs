//! The `polycat` command-line tool: everything IO-shaped around
//! `polycat-core` — argument handling, text/JSON/SVG output, fixture and
//! network sequence lookups.
//!
//! The library surface exists so integration tests (and anyone embedding
//! the tool) can reach the same code paths the binary uses.

pub mod commands;
pub mod oeis;
pub mod output;
pub mod svg;

pub use commands::{run, CliError};
