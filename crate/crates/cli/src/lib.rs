//! Workbench documents, verification suites and the command-line driver.

pub mod cli;
pub mod corpus;
pub mod document;
pub mod report;
pub mod suites;
pub mod workspace;

pub use document::{parse_document, serialize_document, WorkbenchDocument};
pub use report::{Check, SuiteReport, Verdict};
pub use suites::{run_suite, SUITES};
pub use workspace::{LoadError, Value, Workspace};
