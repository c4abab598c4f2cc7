use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::arrays::BinaryArray;
use crate::error::{Error, Result};
use crate::sequence::{pack_bits, BinarySequence};
use crate::seqgen::SequenceFamily;

/// A sequence packed for fast shifted comparisons: one period plus a doubled
/// copy so that every cyclic shift is a plain bit window.
#[derive(Clone, Debug)]
pub struct PackedSequence {
    len: usize,
    words: Vec<u64>,
    doubled: Vec<u64>,
}

impl PackedSequence {
    pub fn new(s: &BinarySequence) -> Self {
        let mut doubled = pack_bits(&s.repeat(2));
        doubled.push(0);
        PackedSequence { len: s.len(), words: s.packed(), doubled }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false: sequences are never empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    fn window_word(&self, bit: usize) -> u64 {
        let (q, r) = (bit / 64, bit % 64);
        if r == 0 {
            self.doubled[q]
        } else {
            (self.doubled[q] >> r) | (self.doubled[q + 1] << (64 - r))
        }
    }

    /// Hamming distance between `self` and `other.shift(tau)`.
    fn distance(&self, other: &PackedSequence, tau: usize) -> u32 {
        let full = self.len / 64;
        let mut d = 0;
        for w in 0..full {
            d += (self.words[w] ^ other.window_word(tau + 64 * w)).count_ones();
        }
        let rest = self.len % 64;
        if rest > 0 {
            let mask = (1u64 << rest) - 1;
            d += ((self.words[full] ^ other.window_word(tau + 64 * full)) & mask).count_ones();
        }
        d
    }

    /// `θ(τ) = L − 2·wt(a ⊕ b.shift(τ))`.
    pub fn correlation(&self, other: &PackedSequence, tau: usize) -> i64 {
        self.len as i64 - 2 * self.distance(other, tau % self.len) as i64
    }
}

/// Periodic autocorrelation of `s` at shift `tau`.
pub fn autocorrelation(s: &BinarySequence, tau: i64) -> i64 {
    let p = PackedSequence::new(s);
    p.correlation(&p, tau.rem_euclid(s.len() as i64) as usize)
}

/// `Σ (−1)^(a_i + b_{i+τ})`.
pub fn crosscorrelation(a: &BinarySequence, b: &BinarySequence, tau: i64) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let t = tau.rem_euclid(a.len() as i64) as usize;
    Ok(PackedSequence::new(a).correlation(&PackedSequence::new(b), t))
}

/// Cross-correlation at every shift `0..L`.
pub fn correlation_spectrum(a: &BinarySequence, b: &BinarySequence) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let (pa, pb) = (PackedSequence::new(a), PackedSequence::new(b));
    Ok((0..a.len()).map(|t| pa.correlation(&pb, t)).collect())
}

/// Array correlation `Σ_{i,j} A(i,j)·B(i+v, j+h)` in the bipolar view, indices
/// taken modulo the array dimensions.
pub fn array_crosscorrelation(a: &BinaryArray, b: &BinaryArray, h: i64, v: i64) -> Result<i64> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::DimensionMismatch { rows: b.rows(), cols: b.cols(), len: a.cells().len() });
    }
    let hs = h.rem_euclid(a.cols() as i64) as usize;
    let vs = v.rem_euclid(a.rows() as i64) as usize;
    let mut sum = 0i64;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            sum += (a.bipolar(i, j) * b.bipolar(i + vs, j + hs)) as i64;
        }
    }
    Ok(sum)
}

/// Where the largest absolute off-peak value occurs: members `i ≤ j`, shift `tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extreme {
    pub value: i64,
    pub i: usize,
    pub j: usize,
    pub tau: usize,
}

impl Extreme {
    /// Larger magnitude wins; ties go to the lexicographically first location,
    /// so merging is order independent.
    fn better(&self, other: &Extreme) -> bool {
        match self.value.abs().cmp(&other.value.abs()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (self.i, self.j, self.tau, self.value) < (other.i, other.j, other.tau, other.value),
        }
    }
}

/// Correlation spectrum of a family: in-phase peak, worst off-peak auto and
/// cross values, and a histogram of every off-peak value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationReport {
    pub length: usize,
    pub members: usize,
    pub peak: i64,
    pub max_offpeak_auto: i64,
    pub max_cross: i64,
    pub histogram: BTreeMap<i64, u64>,
    pub argmax: Option<Extreme>,
}

impl CorrelationReport {
    pub fn empty(length: usize, members: usize) -> Self {
        CorrelationReport {
            length,
            members,
            peak: length as i64,
            max_offpeak_auto: 0,
            max_cross: 0,
            histogram: BTreeMap::new(),
            argmax: None,
        }
    }

    /// Largest off-peak magnitude.
    pub fn max_abs(&self) -> i64 {
        self.max_offpeak_auto.max(self.max_cross)
    }

    /// Values that occur at least once.
    pub fn support(&self) -> Vec<i64> {
        self.histogram.keys().copied().collect()
    }

    pub fn merge(&mut self, other: &CorrelationReport) {
        self.max_offpeak_auto = self.max_offpeak_auto.max(other.max_offpeak_auto);
        self.max_cross = self.max_cross.max(other.max_cross);
        for (&v, &c) in &other.histogram {
            *self.histogram.entry(v).or_insert(0) += c;
        }
        self.argmax = match (self.argmax, other.argmax) {
            (Some(a), Some(b)) => Some(if b.better(&a) { b } else { a }),
            (a, b) => a.or(b),
        };
    }

    fn record(&mut self, i: usize, j: usize, tau: usize, value: i64) {
        *self.histogram.entry(value).or_insert(0) += 1;
        if i == j {
            self.max_offpeak_auto = self.max_offpeak_auto.max(value.abs());
        } else {
            self.max_cross = self.max_cross.max(value.abs());
        }
        let e = Extreme { value, i, j, tau };
        if self.argmax.is_none_or(|a| e.better(&a)) {
            self.argmax = Some(e);
        }
    }
}

/// Report for the single pair `(i, j)`; shift 0 is skipped when `i == j`.
pub fn pair_correlation_report(family: &SequenceFamily, i: usize, j: usize) -> CorrelationReport {
    let a = PackedSequence::new(&family.members[i]);
    let b = PackedSequence::new(&family.members[j]);
    pair_report_packed(&a, &b, i, j, family.members.len())
}

fn pair_report_packed(a: &PackedSequence, b: &PackedSequence, i: usize, j: usize, members: usize) -> CorrelationReport {
    let mut r = CorrelationReport::empty(a.len(), members);
    let start = usize::from(i == j);
    for tau in start..a.len() {
        r.record(i, j, tau, a.correlation(b, tau));
    }
    r
}

/// Exhaustive scan over all unordered member pairs and all shifts.
pub fn family_correlation_report(family: &SequenceFamily) -> CorrelationReport {
    let packed: Vec<_> = family.members.iter().map(PackedSequence::new).collect();
    let n = packed.len();
    let mut report = CorrelationReport::empty(family.length(), n);
    for i in 0..n {
        for j in i..n {
            report.merge(&pair_report_packed(&packed[i], &packed[j], i, j, n));
        }
    }
    report
}
