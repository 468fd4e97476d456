//! IO layer over `uch-core`: the record line format and the verify suites.

pub mod records;
pub mod suites;
