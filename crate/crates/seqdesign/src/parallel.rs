//! Rayon-backed scans. Every reduction is order independent, so results do
//! not depend on the thread count.

use rayon::prelude::*;

use seqdesign_core::analysis::{
    linear_complexity_periodic, pair_correlation_report, ComplexityReport, CorrelationReport,
};
use seqdesign_core::seqgen::SequenceFamily;
use seqdesign_core::shiftseq::{hop_hamming_max, HopMax, ShiftFamily};
use seqdesign_core::Error;

/// Environment variable read when no explicit thread count is given.
pub const THREADS_ENV: &str = "SEQDESIGN_THREADS";

/// Sets the global pool size from `threads`, else `SEQDESIGN_THREADS`, else
/// the available parallelism. Only the first call has an effect.
pub fn configure_threads(threads: Option<usize>) -> Result<(), String> {
    let n = match threads {
        Some(n) => Some(n),
        None => match std::env::var(THREADS_ENV) {
            Ok(v) => Some(v.trim().parse().map_err(|_| format!("{THREADS_ENV}={v:?} is not a thread count"))?),
            Err(_) => None,
        },
    };
    if n == Some(0) {
        return Err("thread count must be positive".into());
    }
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = n {
        b = b.num_threads(n);
    }
    // a second initialisation is harmless; keep the existing pool
    let _ = b.build_global();
    Ok(())
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Parallel [`seqdesign_core::analysis::family_correlation_report`].
pub fn correlation_report(family: &SequenceFamily) -> CorrelationReport {
    let n = family.members.len();
    pairs(n)
        .into_par_iter()
        .map(|(i, j)| pair_correlation_report(family, i, j))
        .reduce(
            || CorrelationReport::empty(family.length(), n),
            |mut a, b| {
                a.merge(&b);
                a
            },
        )
}

/// Complexity of every member, in member order.
pub fn complexities(family: &SequenceFamily) -> Result<Vec<ComplexityReport>, Error> {
    family.members.par_iter().map(linear_complexity_periodic).collect()
}

/// Largest member complexity.
pub fn max_complexity(family: &SequenceFamily) -> Result<usize, Error> {
    Ok(complexities(family)?.iter().map(|r| r.l).max().unwrap_or(0))
}

/// Worst coincidence over all pattern pairs, self pairs off-peak.
pub fn hop_max(f: &ShiftFamily) -> Result<(HopMax, usize, usize), Error> {
    let results = pairs(f.patterns.len())
        .into_par_iter()
        .map(|(i, j)| hop_hamming_max(&f.patterns[i], &f.patterns[j], i == j).map(|h| (h, i, j)))
        .collect::<Result<Vec<_>, _>>()?;
    // first strict maximum in pair order, as the sequential scan reports it
    Ok(results.into_iter().fold((HopMax::default(), 0, 0), |best, x| if x.0.max > best.0.max { x } else { best }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqdesign_core::analysis::family_correlation_report;
    use seqdesign_core::seqgen::gold_family;
    use seqdesign_core::shiftseq::{family_a_shifts, family_hop_max};

    #[test]
    fn agrees_with_sequential() {
        let g = gold_family(5).unwrap();
        assert_eq!(correlation_report(&g), family_correlation_report(&g));
        let a = family_a_shifts(11).unwrap();
        assert_eq!(hop_max(&a).unwrap(), family_hop_max(&a).unwrap());
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let g = gold_family(5).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| correlation_report(&g));
        let b = four.install(|| correlation_report(&g));
        assert_eq!(a, b);
        assert_eq!(one.install(|| complexities(&g)).unwrap(), four.install(|| complexities(&g)).unwrap());
    }
}
