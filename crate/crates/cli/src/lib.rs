//! Structure files, law dispatch and reports behind the `alia` binary.

pub mod commands;
pub mod corpus;
pub mod dispatch;
pub mod error;
pub mod format;
pub mod report;

pub use error::CliError;
pub use format::{emit, parse_document, parse_structure};
