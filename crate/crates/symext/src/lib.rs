//! Front end for `symext-core`: JSON formats, the verification suites and the
//! command line.

pub mod cli;
pub mod json;
pub mod suites;

pub use suites::{run_suite, Suite, VerifyReport};
