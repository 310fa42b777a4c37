//! File format and report plumbing for the `algd` command-line tool.

pub mod fixture;
pub mod report_doc;
