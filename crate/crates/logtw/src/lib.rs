//! File formats, corpus and benchmark drivers behind the `logtw` binary.

pub mod bench;
pub mod corpus;
pub mod error;
pub mod families;
pub mod format;

pub use error::CliError;
