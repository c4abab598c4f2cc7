//! File formats, parallel scans, table reproduction and the `seqdesign`
//! command-line tool, on top of `seqdesign-core`.

pub mod build;
pub mod cli;
pub mod formats;
pub mod parallel;
pub mod tables;

pub use seqdesign_core as core;
