use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One period of a periodic binary sequence.
///
/// Bits are stored one per byte as 0/1. The bipolar view maps bit `s` to
/// `(-1)^s`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidParameter { name: "sequence", reason: "empty".into() });
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidParameter {
                name: "sequence",
                reason: alloc::format!("bit value {b} is not 0 or 1"),
            });
        }
        Ok(BinarySequence { bits })
    }

    /// Panics if `bits` is empty; values are reduced to their low bit.
    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        assert!(!bits.is_empty());
        BinarySequence { bits }
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> u8) -> Self {
        BinarySequence::from_bits_unchecked((0..len).map(f).map(|b| b & 1).collect())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    /// Bit at position `i mod L`.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i % self.bits.len()]
    }

    pub fn bipolar(&self, i: usize) -> i32 {
        1 - 2 * self.bit(i) as i32
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_constant(&self) -> bool {
        self.bits.iter().all(|&b| b == self.bits[0])
    }

    /// Left cyclic shift: `[s_{(i+τ) mod L}]`.
    pub fn shift(&self, tau: i64) -> BinarySequence {
        let l = self.len();
        let t = tau.rem_euclid(l as i64) as usize;
        let mut bits = Vec::with_capacity(l);
        bits.extend_from_slice(&self.bits[t..]);
        bits.extend_from_slice(&self.bits[..t]);
        BinarySequence { bits }
    }

    /// `[s_{n·i mod L}]`, same length as the input.
    pub fn decimate(&self, n: u64) -> BinarySequence {
        let l = self.len() as u64;
        let n = n % l;
        BinarySequence::from_fn(self.len(), |i| self.bits[((n * i as u64) % l) as usize])
    }

    pub fn xor(&self, other: &BinarySequence) -> Result<BinarySequence> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(BinarySequence {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn complement(&self) -> BinarySequence {
        BinarySequence { bits: self.bits.iter().map(|b| b ^ 1).collect() }
    }

    /// The bits of `periods` consecutive periods.
    pub fn repeat(&self, periods: usize) -> Vec<u8> {
        self.bits.repeat(periods)
    }

    /// Smallest τ ≥ 0 with `other == self.shift(τ)`.
    pub fn shift_to(&self, other: &BinarySequence) -> Option<usize> {
        if self.len() != other.len() {
            return None;
        }
        let l = self.len();
        (0..l).find(|&t| (0..l).all(|i| self.bits[(i + t) % l] == other.bits[i]))
    }

    /// Bits packed 64 per word, bit i of the sequence in bit i%64 of word i/64.
    pub fn packed(&self) -> Vec<u64> {
        pack_bits(&self.bits)
    }
}

pub(crate) fn pack_bits(bits: &[u8]) -> Vec<u64> {
    let mut words = alloc::vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        words[i / 64] |= (b as u64 & 1) << (i % 64);
    }
    words
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    /// Accepts `"0010111"` as well as `"0,0,1,0,1,1,1"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(alloc::format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BinarySequence::new(bits)
    }
}
