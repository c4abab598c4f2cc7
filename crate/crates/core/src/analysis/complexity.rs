use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly2::{xor_shifted, Poly2};
use crate::sequence::{pack_bits, BinarySequence};
use crate::seqgen::SequenceFamily;

/// Shortest LFSR found by Berlekamp-Massey.
///
/// `connection` is `c(x) = 1 + c_1 x + … + c_l x^l` with
/// `s_i = c_1 s_{i−1} + … + c_l s_{i−l}` over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lfsr {
    pub length: usize,
    pub connection: Poly2,
}

impl Lfsr {
    /// `x^l c(1/x)`, the characteristic polynomial of the recurrence.
    pub fn characteristic(&self) -> Poly2 {
        self.connection.reciprocal_with_len(self.length)
    }

    /// Whether the recurrence reproduces `bits` from its first `length` terms.
    pub fn generates(&self, bits: &[u8]) -> bool {
        let taps: Vec<usize> = (1..=self.length).filter(|&j| self.connection.coeff(j)).collect();
        (self.length..bits.len()).all(|i| taps.iter().fold(0u8, |acc, &j| acc ^ bits[i - j]) == bits[i])
    }
}

fn parity_window(c: &[u64], r: &[u64], off: usize) -> u32 {
    let (q, sh) = (off / 64, off % 64);
    let mut acc = 0u64;
    for (w, &cw) in c.iter().enumerate() {
        if cw == 0 {
            continue;
        }
        let lo = r.get(q + w).copied().unwrap_or(0);
        let win = if sh == 0 {
            lo
        } else {
            (lo >> sh) | (r.get(q + w + 1).copied().unwrap_or(0) << (64 - sh))
        };
        acc ^= cw & win;
    }
    acc.count_ones() & 1
}

/// Berlekamp-Massey over GF(2), word packed.
///
/// The input is stored reversed so that each discrepancy
/// `s_n + Σ c_i s_{n−i}` is the parity of `C AND window`.
pub fn berlekamp_massey(bits: &[u8]) -> Lfsr {
    let n_bits = bits.len();
    let rev: Vec<u8> = bits.iter().rev().copied().collect();
    let r = pack_bits(&rev);
    let mut c: Vec<u64> = alloc::vec![1];
    let mut b: Vec<u64> = alloc::vec![1];
    let mut l = 0usize;
    let mut m = 1usize;
    for n in 0..n_bits {
        let d = parity_window(&c[..=(l / 64).min(c.len() - 1)], &r, n_bits - 1 - n);
        if d == 0 {
            m += 1;
        } else if 2 * l <= n {
            let t = c.clone();
            xor_shifted(&mut c, &b, m);
            l = n + 1 - l;
            b = t;
            m = 1;
        } else {
            xor_shifted(&mut c, &b, m);
            m += 1;
        }
    }
    Lfsr { length: l, connection: Poly2::from_words(c) }
}

/// Linear complexity of one period, with its gcd cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityReport {
    /// Period length L.
    pub length: usize,
    pub l: usize,
    pub feedback: Poly2,
    /// `L − deg gcd(x^L + 1, S(x))`.
    pub oracle_l: usize,
}

impl ComplexityReport {
    pub fn normalized(&self) -> f64 {
        self.l as f64 / self.length as f64
    }

    /// `x^l c(1/x)`.
    pub fn characteristic(&self) -> Poly2 {
        self.feedback.reciprocal_with_len(self.l)
    }
}

fn gcd_oracle(s: &BinarySequence) -> usize {
    let len = s.len();
    let sx = Poly2::from_words(s.packed());
    let mut modulus = Poly2::monomial(len);
    modulus.set_coeff(0, true);
    match Poly2::gcd(&modulus, &sx).degree() {
        _ if sx.is_zero() => 0,
        Some(d) => len - d,
        None => len,
    }
}

/// Complexity of a periodic sequence from Berlekamp-Massey on two periods,
/// checked against the gcd oracle.
pub fn linear_complexity_periodic(s: &BinarySequence) -> Result<ComplexityReport> {
    let two = s.repeat(2);
    let lfsr = berlekamp_massey(&two);
    if cfg!(debug_assertions) && !lfsr.generates(&two) {
        return Err(Error::OracleDisagreement { bm: lfsr.length, oracle: usize::MAX });
    }
    let oracle_l = gcd_oracle(s);
    if oracle_l != lfsr.length {
        return Err(Error::OracleDisagreement { bm: lfsr.length, oracle: oracle_l });
    }
    Ok(ComplexityReport { length: s.len(), l: lfsr.length, feedback: lfsr.connection, oracle_l })
}

/// Largest member complexity of a family, with the first member attaining it.
pub fn family_max_complexity(family: &SequenceFamily) -> Result<(usize, usize)> {
    let mut best = (0, 0);
    for (i, s) in family.members.iter().enumerate() {
        let l = linear_complexity_periodic(s)?.l;
        if l > best.0 {
            best = (l, i);
        }
    }
    Ok(best)
}
