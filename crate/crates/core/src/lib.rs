//! Binary sequence design for code-division multiple access.
//!
//! This crate builds the classical binary CDMA families (m-sequences,
//! Legendre, Hall, Gold, small Kasami, No-Kumar) together with the
//! array-based Moreno-Tirkel families, moves between sequences,
//! doubly periodic arrays, shift sequences and frequency-hop patterns, and
//! measures periodic correlation and linear complexity.
//!
//! The crate is `no_std` and only needs an allocator. File formats, the
//! command-line tool and parallel scans live in the `seqdesign` crate.
//!
//! ```
//! use seqdesign_core::{seqgen, analysis};
//!
//! let kasami = seqgen::kasami_family(3).unwrap();
//! assert_eq!(kasami.members.len(), 8);
//! let report = analysis::family_correlation_report(&kasami);
//! assert_eq!(report.max_abs(), 9);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod arrays;
mod error;
pub mod field;
pub mod poly2;
pub mod sequence;
pub mod seqgen;
pub mod shiftseq;

pub use arrays::{BinaryArray, DotGrid, ShiftSequence};
pub use error::{Error, Result};
pub use poly2::Poly2;
pub use sequence::BinarySequence;
pub use seqgen::{FamilyKind, FamilyParams, SequenceFamily};
