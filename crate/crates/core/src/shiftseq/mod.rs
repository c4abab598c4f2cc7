//! Shift-sequence families, their binary sequence families, and hop patterns.

mod constructions;
mod hamming;

pub use constructions::{family_a_shifts, family_b_shifts, family_c_pre_rotation, family_c_shifts};
pub use hamming::{family_hop_max, hop_hamming_max, HopMax};

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arrays::{extract_shift_sequence, first_nonconstant_column, fold, substitute_columns, unfold, ShiftSequence};
use crate::error::{Error, Result};
use crate::sequence::BinarySequence;
use crate::seqgen::{kasami_family, no_kumar_family, FamilyKind, FamilyParams, SequenceFamily};

/// A frequency-hop pattern: slot `j` transmits on frequency `values[j]`, or
/// not at all when blank.
pub type HopPattern = ShiftSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftFamilyKind {
    MorenoTirkelA,
    MorenoTirkelB,
    MorenoTirkelC,
    KasamiHop,
    NoKumarHop,
}

impl ShiftFamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            ShiftFamilyKind::MorenoTirkelA => "mt-a",
            ShiftFamilyKind::MorenoTirkelB => "mt-b",
            ShiftFamilyKind::MorenoTirkelC => "mt-c",
            ShiftFamilyKind::KasamiHop => "kasami-hop",
            ShiftFamilyKind::NoKumarHop => "nokumar-hop",
        }
    }

    /// Kind of the binary family obtained by column substitution.
    pub fn sequence_kind(self) -> FamilyKind {
        match self {
            ShiftFamilyKind::MorenoTirkelA => FamilyKind::MorenoTirkelA,
            ShiftFamilyKind::MorenoTirkelB => FamilyKind::MorenoTirkelB,
            ShiftFamilyKind::MorenoTirkelC => FamilyKind::MorenoTirkelC,
            ShiftFamilyKind::KasamiHop => FamilyKind::Kasami,
            ShiftFamilyKind::NoKumarHop => FamilyKind::NoKumar,
        }
    }
}

impl fmt::Display for ShiftFamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShiftFamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            ShiftFamilyKind::MorenoTirkelA,
            ShiftFamilyKind::MorenoTirkelB,
            ShiftFamilyKind::MorenoTirkelC,
            ShiftFamilyKind::KasamiHop,
            ShiftFamilyKind::NoKumarHop,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Parse(alloc::format!("unknown shift family {s:?}")))
    }
}

/// Shift sequences sharing one length and modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftFamily {
    pub kind: ShiftFamilyKind,
    pub params: FamilyParams,
    /// Primitive element or root the construction used, if any.
    pub generator: Option<u64>,
    /// Coincidence bound the construction guarantees.
    pub bound: u32,
    pub patterns: Vec<ShiftSequence>,
}

impl ShiftFamily {
    pub fn new(
        kind: ShiftFamilyKind,
        params: FamilyParams,
        generator: Option<u64>,
        patterns: Vec<ShiftSequence>,
    ) -> Result<Self> {
        let first = patterns
            .first()
            .ok_or(Error::InvalidParameter { name: "shift family", reason: "no patterns".into() })?;
        if let Some(bad) = patterns.iter().find(|s| s.len() != first.len() || s.modulus() != first.modulus()) {
            return Err(Error::LengthMismatch { expected: first.len(), found: bad.len() });
        }
        Ok(ShiftFamily { kind, params, generator, bound: 2, patterns })
    }

    /// Number of columns (time slots).
    pub fn n_cols(&self) -> usize {
        self.patterns[0].len()
    }

    /// Column length (number of frequencies).
    pub fn row_modulus(&self) -> u32 {
        self.patterns[0].modulus()
    }
}

/// Substitutes `column` into every pattern and unfolds the arrays.
pub fn mt_sequence_family(shifts: &ShiftFamily, column: &BinarySequence, fill: u8) -> Result<SequenceFamily> {
    let members = shifts
        .patterns
        .iter()
        .map(|s| unfold(&substitute_columns(s, column, fill)?))
        .collect::<Result<Vec<_>>>()?;
    let params = FamilyParams { fill: Some(fill), ..shifts.params.clone() };
    SequenceFamily::new(shifts.kind.sequence_kind(), params, members)
}

/// Family whose arrays are converted into hop patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopSource {
    Kasami,
    NoKumar,
}

/// Hop patterns read off a small Kasami or No-Kumar family, plus the column
/// the patterns were read against.
pub fn kasami_hop_family(m: u32, source: HopSource, r: u64) -> Result<(ShiftFamily, BinarySequence)> {
    let (family, kind) = match source {
        HopSource::Kasami => (kasami_family(m)?, ShiftFamilyKind::KasamiHop),
        HopSource::NoKumar => (no_kumar_family(m, r)?, ShiftFamilyKind::NoKumarHop),
    };
    let (patterns, base) = hop_patterns_of(&family, (1usize << m) - 1, (1usize << m) + 1)?;
    Ok((ShiftFamily::new(kind, family.params, None, patterns)?, base))
}

/// Folds every member into `rows × cols` and reads its shift sequence against
/// the first non-constant column of the first member.
pub fn hop_patterns_of(
    family: &SequenceFamily,
    rows: usize,
    cols: usize,
) -> Result<(Vec<ShiftSequence>, BinarySequence)> {
    let arrays = family
        .members
        .iter()
        .map(|s| fold(s, rows, cols))
        .collect::<Result<Vec<_>>>()?;
    let base = arrays
        .iter()
        .find_map(first_nonconstant_column)
        .ok_or(Error::InvalidParameter { name: "family", reason: "every column is constant".into() })?;
    let patterns = arrays
        .iter()
        .map(|a| extract_shift_sequence(a, &base))
        .collect::<Result<Vec<_>>>()?;
    Ok((patterns, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::constant_columns;

    #[test]
    fn kasami_hops_shape_and_regeneration() {
        let (hops, base) = kasami_hop_family(3, HopSource::Kasami, 1).unwrap();
        assert_eq!(hops.patterns.len(), 8);
        assert_eq!((hops.n_cols(), hops.row_modulus()), (9, 7));
        let fam = kasami_family(3).unwrap();
        for (s, pat) in fam.members.iter().zip(&hops.patterns) {
            let a = fold(s, 7, 9).unwrap();
            let fill = constant_columns(&a).first().map_or(0, |c| c.1);
            assert_eq!(substitute_columns(pat, &base, fill).unwrap(), a);
        }
    }

    #[test]
    fn parent_pattern_is_palindromic_after_blank() {
        let (hops, _) = kasami_hop_family(3, HopSource::Kasami, 1).unwrap();
        let v = hops.patterns[0].values();
        assert_eq!(v[0], None);
        let rest = &v[1..];
        assert!(rest.iter().eq(rest.iter().rev()));
    }

    #[test]
    fn no_kumar_hops() {
        let (hops, _) = kasami_hop_family(4, HopSource::NoKumar, 7).unwrap();
        assert_eq!((hops.patterns.len(), hops.n_cols(), hops.row_modulus()), (16, 17, 15));
        assert_eq!(hops.kind, ShiftFamilyKind::NoKumarHop);
    }

    #[test]
    fn mt_lengths() {
        let a = family_a_shifts(7).unwrap();
        let col = crate::seqgen::legendre(7).unwrap();
        let f = mt_sequence_family(&a, &col, 0).unwrap();
        assert_eq!((f.size(), f.length()), (7, 42));
        let bad = crate::seqgen::legendre(5).unwrap();
        assert!(mt_sequence_family(&a, &bad, 0).is_err());
    }
}
