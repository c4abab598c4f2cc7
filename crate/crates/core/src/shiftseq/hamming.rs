use alloc::vec;

use super::ShiftFamily;
use crate::arrays::ShiftSequence;
use crate::error::{Error, Result};

/// Largest doubly periodic coincidence and where it occurs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HopMax {
    pub max: u32,
    /// Time shift.
    pub s: usize,
    /// Frequency offset.
    pub d: u32,
}

/// Max over time shifts `s` and frequency offsets `d` of the number of slots
/// `j` with `a[j+s] ≡ b[j] + d (mod m)`, both defined. With `exclude_trivial`
/// and `a == b` the in-phase point `(0, 0)` is skipped.
pub fn hop_hamming_max(a: &ShiftSequence, b: &ShiftSequence, exclude_trivial: bool) -> Result<HopMax> {
    if a.len() != b.len() || a.modulus() != b.modulus() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let n = a.len();
    let m = a.modulus();
    let skip_origin = exclude_trivial && a == b;
    let mut counts = vec![0u32; m as usize];
    let mut best = HopMax::default();
    for s in 0..n {
        counts.iter_mut().for_each(|c| *c = 0);
        for (j, bj) in b.values().iter().enumerate() {
            if let (Some(x), Some(y)) = (a.values()[(j + s) % n], bj) {
                counts[((x + m - y) % m) as usize] += 1;
            }
        }
        for (d, &c) in counts.iter().enumerate() {
            if skip_origin && s == 0 && d == 0 {
                continue;
            }
            if c > best.max {
                best = HopMax { max: c, s, d: d as u32 };
            }
        }
    }
    Ok(best)
}

/// Worst coincidence over all pattern pairs, self pairs off-peak, as
/// `(max, i, j)`.
pub fn family_hop_max(f: &ShiftFamily) -> Result<(HopMax, usize, usize)> {
    let mut best = (HopMax::default(), 0, 0);
    for i in 0..f.patterns.len() {
        for j in i..f.patterns.len() {
            let h = hop_hamming_max(&f.patterns[i], &f.patterns[j], i == j)?;
            if h.max > best.0.max {
                best = (h, i, j);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str, m: u32) -> ShiftSequence {
        ShiftSequence::parse_csv(s, m).unwrap()
    }

    #[test]
    fn trivial_and_constant_cases() {
        let a = pat("0,0,3,2,5,6,5,2,3", 7);
        assert_eq!(hop_hamming_max(&a, &a, false).unwrap().max, 9);
        assert!(hop_hamming_max(&a, &a, true).unwrap().max <= 2);
        let p = pat("0,0", 3);
        let q = pat("1,1", 3);
        let h = hop_hamming_max(&p, &q, true).unwrap();
        assert_eq!((h.max, h.d), (2, 2));
        assert!(hop_hamming_max(&p, &pat("1,1,1", 3), false).is_err());
    }

    #[test]
    fn blanks_never_match() {
        let a = pat("-,-,1", 5);
        assert_eq!(hop_hamming_max(&a, &a, false).unwrap().max, 1);
    }
}
