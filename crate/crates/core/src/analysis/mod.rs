//! Periodic correlation, linear complexity and the column-polynomial check.

mod complexity;
mod conjecture;
mod correlation;

pub use complexity::{berlekamp_massey, family_max_complexity, linear_complexity_periodic, ComplexityReport, Lfsr};
pub use conjecture::{conjecture_check, ConjectureResult};
pub use correlation::{
    array_crosscorrelation, autocorrelation, correlation_spectrum, crosscorrelation,
    family_correlation_report, pair_correlation_report, CorrelationReport, Extreme, PackedSequence,
};
