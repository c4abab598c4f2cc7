//! Doubly periodic arrays and the sequence ↔ array ↔ shift-sequence maps.
//!
//! A length `L = u·v` sequence with `gcd(u, v) = 1` folds into a `u × v`
//! array by placing `s_k` at row `k mod u`, column `k mod v`. That is the
//! same as writing the sequence down the main diagonal and wrapping at the
//! edges, but it is random access.

mod grid;
mod shifts;

pub use grid::DotGrid;
pub use shifts::{extract_shift_sequence, substitute_columns, ShiftSequence};

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::gcd;
use crate::sequence::BinarySequence;

/// A `rows × cols` binary array stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryArray {
    rows: usize,
    cols: usize,
    cells: Vec<u8>,
}

impl BinaryArray {
    pub fn new(rows: usize, cols: usize, cells: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols != cells.len() {
            return Err(Error::DimensionMismatch { rows, cols, len: cells.len() });
        }
        if cells.iter().any(|&c| c > 1) {
            return Err(Error::InvalidParameter { name: "array", reason: "cell not 0/1".into() });
        }
        Ok(BinaryArray { rows, cols, cells })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        assert!(rows > 0 && cols > 0);
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                cells.push(f(i, j) & 1);
            }
        }
        BinaryArray { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.cells[(i % self.rows) * self.cols + j % self.cols]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> BinarySequence {
        BinarySequence::from_fn(self.rows, |i| self.get(i, j))
    }

    pub fn bipolar(&self, i: usize, j: usize) -> i32 {
        1 - 2 * self.get(i, j) as i32
    }

    pub fn transpose(&self) -> BinaryArray {
        BinaryArray::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }
}

impl fmt::Debug for BinaryArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryArray {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for &c in self.row(i) {
                f.write_str(if c == 1 { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_coprime(rows: usize, cols: usize) -> Result<()> {
    if gcd(rows as u64, cols as u64) != 1 {
        return Err(Error::NotCoprime { rows, cols });
    }
    Ok(())
}

/// Folds `s` into a `rows × cols` array by CRT residues.
pub fn fold(s: &BinarySequence, rows: usize, cols: usize) -> Result<BinaryArray> {
    if rows == 0 || cols == 0 || rows * cols != s.len() {
        return Err(Error::DimensionMismatch { rows, cols, len: s.len() });
    }
    check_coprime(rows, cols)?;
    let mut cells = alloc::vec![0u8; s.len()];
    for (k, &b) in s.bits().iter().enumerate() {
        cells[(k % rows) * cols + k % cols] = b;
    }
    Ok(BinaryArray { rows, cols, cells })
}

/// Sequence index stored at each cell of a `rows × cols` fold, row-major.
pub fn fold_positions(rows: usize, cols: usize) -> Result<Vec<usize>> {
    if rows == 0 || cols == 0 {
        return Err(Error::DimensionMismatch { rows, cols, len: 0 });
    }
    check_coprime(rows, cols)?;
    let mut pos = alloc::vec![0; rows * cols];
    for k in 0..rows * cols {
        pos[(k % rows) * cols + k % cols] = k;
    }
    Ok(pos)
}

/// Inverse of [`fold`].
pub fn unfold(a: &BinaryArray) -> Result<BinarySequence> {
    check_coprime(a.rows, a.cols)?;
    let l = a.rows * a.cols;
    Ok(BinarySequence::from_fn(l, |k| a.cells[(k % a.rows) * a.cols + k % a.cols]))
}

/// Cyclic shift by `h` columns to the left and `v` rows: cell `(i, j)` of the
/// result is `a[(i + v) mod rows][(j + h) mod cols]`.
pub fn array_shift(a: &BinaryArray, h: i64, v: i64) -> BinaryArray {
    let hs = h.rem_euclid(a.cols as i64) as usize;
    let vs = v.rem_euclid(a.rows as i64) as usize;
    BinaryArray::from_fn(a.rows, a.cols, |i, j| a.get(i + vs, j + hs))
}

/// Columns that are constant, as `(column, bit)` pairs.
pub fn constant_columns(a: &BinaryArray) -> Vec<(usize, u8)> {
    (0..a.cols)
        .filter_map(|j| {
            let c = a.column(j);
            c.is_constant().then(|| (j, c.bit(0)))
        })
        .collect()
}

/// First column that is not constant, if any.
pub fn first_nonconstant_column(a: &BinaryArray) -> Option<BinarySequence> {
    (0..a.cols).map(|j| a.column(j)).find(|c| !c.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_cell_positions() {
        let s = BinarySequence::from_fn(15, |k| (k == 7) as u8);
        let a = fold(&s, 3, 5).unwrap();
        assert_eq!(a.get(1, 2), 1);
        assert_eq!(a.cells().iter().filter(|&&c| c == 1).count(), 1);
    }

    #[test]
    fn fold_errors() {
        let s = BinarySequence::from_fn(16, |_| 0);
        assert_eq!(fold(&s, 4, 4), Err(Error::NotCoprime { rows: 4, cols: 4 }));
        assert!(matches!(fold(&s, 3, 5), Err(Error::DimensionMismatch { .. })));
        let a = BinaryArray::from_fn(2, 4, |_, _| 0);
        assert!(unfold(&a).is_err());
    }

    #[test]
    fn shift_identity_and_period() {
        let s: BinarySequence = "000100110101111".parse().unwrap();
        let a = fold(&s, 3, 5).unwrap();
        assert_eq!(array_shift(&a, 0, 0), a);
        assert_eq!(array_shift(&a, 5, 3), a);
        assert_eq!(array_shift(&a, -1, -1), array_shift(&a, 4, 2));
    }

    #[test]
    fn sequence_shift_is_array_shift() {
        let s: BinarySequence = "000100110101111".parse().unwrap();
        let a = fold(&s, 3, 5).unwrap();
        for tau in 0..15i64 {
            assert_eq!(fold(&s.shift(tau), 3, 5).unwrap(), array_shift(&a, tau % 5, tau % 3));
        }
    }
}
