use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::BinaryArray;
use crate::error::{Error, Result};
use crate::sequence::BinarySequence;

/// Per-column cyclic shifts of a base column; `None` marks a constant
/// (blank) column. Also read as a frequency-hop pattern: column = time slot,
/// value = frequency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftSequence {
    modulus: u32,
    values: Vec<Option<u32>>,
}

impl ShiftSequence {
    pub fn new(values: Vec<Option<u32>>, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter { name: "modulus", reason: "zero".into() });
        }
        if values.is_empty() {
            return Err(Error::InvalidParameter { name: "shift sequence", reason: "empty".into() });
        }
        if let Some(v) = values.iter().flatten().find(|&&v| v >= modulus) {
            return Err(Error::InvalidParameter {
                name: "shift sequence",
                reason: alloc::format!("value {v} not below modulus {modulus}"),
            });
        }
        Ok(ShiftSequence { modulus, values })
    }

    /// Reduces every defined value modulo `modulus`.
    pub fn from_residues<I: IntoIterator<Item = Option<i64>>>(values: I, modulus: u32) -> Self {
        let values: Vec<_> = values
            .into_iter()
            .map(|v| v.map(|x| x.rem_euclid(modulus as i64) as u32))
            .collect();
        assert!(!values.is_empty() && modulus > 0);
        ShiftSequence { modulus, values }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Option<u32>] {
        &self.values
    }

    pub fn get(&self, j: usize) -> Option<u32> {
        self.values[j % self.values.len()]
    }

    pub fn defined(&self) -> usize {
        self.values.iter().flatten().count()
    }

    pub fn blanks(&self) -> usize {
        self.len() - self.defined()
    }

    /// Adds `d` to every defined value (a vertical array shift).
    pub fn offset(&self, d: i64) -> ShiftSequence {
        ShiftSequence::from_residues(self.values.iter().map(|v| v.map(|x| x as i64 + d)), self.modulus)
    }

    /// Multiplies every defined value by `c`.
    pub fn scale(&self, c: i64) -> ShiftSequence {
        ShiftSequence::from_residues(self.values.iter().map(|v| v.map(|x| x as i64 * c)), self.modulus)
    }

    /// Cyclic column translate: entry `j` of the result is entry `j + s` of self.
    pub fn translate(&self, s: i64) -> ShiftSequence {
        let n = self.len() as i64;
        let values = (0..n).map(|j| self.values[(j + s).rem_euclid(n) as usize]).collect();
        ShiftSequence { modulus: self.modulus, values }
    }

    /// Comma-separated values with `-` for blanks, e.g. `5,-,-,5,6`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match v {
                Some(x) => out.push_str(&alloc::format!("{x}")),
                None => out.push('-'),
            }
        }
        out
    }

    pub fn parse_csv(s: &str, modulus: u32) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| match t.trim() {
                "-" => Ok(None),
                t => t
                    .parse::<u32>()
                    .map(Some)
                    .map_err(|_| Error::Parse(alloc::format!("bad shift value {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        ShiftSequence::new(values, modulus)
    }
}

impl fmt::Display for ShiftSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}

impl fmt::Debug for ShiftSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftSequence[mod {}]({})", self.modulus, self.to_csv())
    }
}

/// Reads each column of `a` as blank (constant) or as the unique left shift
/// of `base` it equals.
pub fn extract_shift_sequence(a: &BinaryArray, base: &BinarySequence) -> Result<ShiftSequence> {
    if base.len() != a.rows() {
        return Err(Error::LengthMismatch { expected: a.rows(), found: base.len() });
    }
    let values = (0..a.cols())
        .map(|j| {
            let col = a.column(j);
            if col.is_constant() {
                Ok(None)
            } else {
                base.shift_to(&col)
                    .map(|t| Some(t as u32))
                    .ok_or(Error::ColumnNotAShift { column: j })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ShiftSequence::new(values, a.rows() as u32)
}

/// Builds the array whose column `j` is `column` left-shifted by `shifts[j]`,
/// or constant `fill` where the shift is blank.
pub fn substitute_columns(
    shifts: &ShiftSequence,
    column: &BinarySequence,
    fill: u8,
) -> Result<BinaryArray> {
    if column.len() != shifts.modulus() as usize {
        return Err(Error::LengthMismatch { expected: shifts.modulus() as usize, found: column.len() });
    }
    Ok(BinaryArray::from_fn(column.len(), shifts.len(), |i, j| match shifts.values[j] {
        Some(t) => column.bit(i + t as usize),
        None => fill,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::fold;
    use proptest::prelude::*;

    #[test]
    fn extract_from_small_fold() {
        let m: BinarySequence = "000100110101111".parse().unwrap();
        let a = fold(&m, 3, 5).unwrap();
        let base: BinarySequence = "011".parse().unwrap();
        let s = extract_shift_sequence(&a, &base).unwrap();
        assert_eq!(s.values(), &[None, Some(2), Some(1), Some(1), Some(2)]);
    }

    #[test]
    fn extract_edge_cases() {
        let base: BinarySequence = "011".parse().unwrap();
        let zero = BinaryArray::from_fn(3, 5, |_, _| 0);
        assert_eq!(extract_shift_sequence(&zero, &base).unwrap().blanks(), 5);
        let bad = BinaryArray::from_fn(3, 2, |i, j| (j == 1 && i == 1) as u8);
        assert_eq!(extract_shift_sequence(&bad, &base), Err(Error::ColumnNotAShift { column: 1 }));
        let short: BinarySequence = "01".parse().unwrap();
        assert!(extract_shift_sequence(&zero, &short).is_err());
    }

    #[test]
    fn single_column_substitution() {
        let c: BinarySequence = "0010111".parse().unwrap();
        let s = ShiftSequence::new(alloc::vec![Some(0)], 7).unwrap();
        assert_eq!(substitute_columns(&s, &c, 0).unwrap().column(0), c);
        let short: BinarySequence = "001".parse().unwrap();
        assert!(substitute_columns(&s, &short, 0).is_err());
    }

    #[test]
    fn csv_roundtrip_and_validation() {
        let s = ShiftSequence::parse_csv("5,-,-,5,6,4,0,4,6", 7).unwrap();
        assert_eq!(s.blanks(), 2);
        assert_eq!(s.to_csv(), "5,-,-,5,6,4,0,4,6");
        assert!(ShiftSequence::parse_csv("7,1", 7).is_err());
        assert!(ShiftSequence::parse_csv("a,1", 7).is_err());
    }

    proptest! {
        #[test]
        fn extract_inverts_substitute(
            vals in proptest::collection::vec(proptest::option::of(0u32..7), 1..20),
            fill in 0u8..2,
        ) {
            let c: BinarySequence = "0010111".parse().unwrap();
            let s = ShiftSequence::new(vals, 7).unwrap();
            let a = substitute_columns(&s, &c, fill).unwrap();
            prop_assert_eq!(extract_shift_sequence(&a, &c).unwrap(), s);
        }
    }
}
