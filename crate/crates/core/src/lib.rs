//! Exact combinatorics and rationality data for unipotent characters of
//! finite reductive groups and their extensions by graph automorphisms.
//!
//! Everything here is computed with exact integer arithmetic; there is no
//! floating point anywhere in this crate. The crate is `no_std` (with
//! `alloc`) so the algorithmic core can be reused without an operating
//! system; file formats and the command line live in the companion crate.
//!
//! Module map:
//! * [`partition`] - partitions, beta-sets, border strips, 2-cores/quotients
//! * [`weyl`] - character values of symmetric and hyperoctahedral groups
//! * [`perm`] - concrete (signed) permutations used by the brute-force code
//! * [`oracle`] - independent brute-force character tables and searches
//! * [`field`] - Frobenius eigenvalues and the small character-field calculus
//! * [`groups`] - group descriptors and built-in unipotent character records
//! * [`classify`] - extension-field classification and consistency checks
//! * [`dlverify`] - hypothesis checks for the eigenvalue argument in type A

#![no_std]
// Divisibility tests stay in `x % d == 0` form, matching the `% d == r`
// comparisons they sit next to.
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod classify;
pub mod dlverify;
pub mod error;
pub mod field;
pub mod groups;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod weyl;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
