use alloc::collections::BTreeSet;
use alloc::vec;

use super::ShiftSequence;
use crate::error::{Error, Result};

/// A set of marked cells in an `rows × cols` grid; a shift sequence drawn
/// as one dot per defined column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotGrid {
    rows: usize,
    cols: usize,
    dots: BTreeSet<(usize, usize)>,
}

impl DotGrid {
    pub fn new(rows: usize, cols: usize, dots: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let dots: BTreeSet<_> = dots.into_iter().collect();
        if let Some(&(r, c)) = dots.iter().find(|&&(r, c)| r >= rows || c >= cols) {
            return Err(Error::InvalidParameter {
                name: "dot",
                reason: alloc::format!("({r}, {c}) outside {rows}x{cols}"),
            });
        }
        Ok(DotGrid { rows, cols, dots })
    }

    /// Dot `(value, column)` for every defined entry.
    pub fn from_shift_sequence(s: &ShiftSequence) -> Self {
        let dots = s
            .values()
            .iter()
            .enumerate()
            .filter_map(|(j, v)| v.map(|r| (r as usize, j)))
            .collect();
        DotGrid { rows: s.modulus() as usize, cols: s.len(), dots }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dots(&self) -> &BTreeSet<(usize, usize)> {
        &self.dots
    }

    /// Quarter turn anticlockwise: `rows × cols` becomes `cols × rows` and
    /// dot `(r, c)` moves to `(cols − 1 − c, r)`.
    pub fn rotate_ccw(&self) -> DotGrid {
        DotGrid {
            rows: self.cols,
            cols: self.rows,
            dots: self.dots.iter().map(|&(r, c)| (self.cols - 1 - c, r)).collect(),
        }
    }

    /// Mirror top to bottom: dot `(r, c)` moves to `(rows − 1 − r, c)`.
    pub fn flip_vertical(&self) -> DotGrid {
        DotGrid {
            rows: self.rows,
            cols: self.cols,
            dots: self.dots.iter().map(|&(r, c)| (self.rows - 1 - r, c)).collect(),
        }
    }

    pub fn dots_per_row(&self) -> alloc::vec::Vec<usize> {
        let mut counts = vec![0; self.rows];
        for &(r, _) in &self.dots {
            counts[r] += 1;
        }
        counts
    }

    pub fn dots_per_col(&self) -> alloc::vec::Vec<usize> {
        let mut counts = vec![0; self.cols];
        for &(_, c) in &self.dots {
            counts[c] += 1;
        }
        counts
    }

    /// Column `j` maps to its dot's row, or blank.
    pub fn to_shift_sequence(&self) -> Result<ShiftSequence> {
        let mut values = vec![None; self.cols];
        for &(r, c) in &self.dots {
            if values[c].is_some() {
                return Err(Error::MultipleDotsInColumn { column: c });
            }
            values[c] = Some(r as u32);
        }
        ShiftSequence::new(values, self.rows as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rotation_basics() {
        let g = DotGrid::new(1, 1, [(0, 0)]).unwrap();
        assert_eq!(g.rotate_ccw(), g);
        let g = DotGrid::new(3, 4, [(0, 3), (2, 1)]).unwrap();
        // top-right corner goes to top-left
        assert!(g.rotate_ccw().dots().contains(&(0, 0)));
        assert_eq!(g.rotate_ccw().rotate_ccw().rotate_ccw().rotate_ccw(), g);
    }

    #[test]
    fn reading_shift_sequences() {
        let g = DotGrid::new(3, 2, []).unwrap();
        assert_eq!(g.to_shift_sequence().unwrap().blanks(), 2);
        let g = DotGrid::new(3, 2, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.to_shift_sequence().unwrap().values(), &[Some(2), Some(0)]);
        let g = DotGrid::new(3, 2, [(2, 0), (0, 0)]).unwrap();
        assert_eq!(g.to_shift_sequence(), Err(Error::MultipleDotsInColumn { column: 0 }));
        assert!(DotGrid::new(3, 2, [(3, 0)]).is_err());
    }

    proptest! {
        // one dot per row, at most one per column, rotates to one dot per column
        #[test]
        fn permutation_grids_rotate_to_functions(
            perm in Just((0..9usize).collect::<alloc::vec::Vec<_>>()).prop_shuffle(),
            extra in 0usize..4,
        ) {
            let rows = 9;
            let cols = 9 + extra;
            let g = DotGrid::new(rows, cols, perm.iter().enumerate().map(|(r, &c)| (r, c))).unwrap();
            prop_assert!(g.dots_per_row().iter().all(|&n| n == 1));
            let rot = g.rotate_ccw();
            prop_assert!(rot.dots_per_col().iter().all(|&n| n == 1));
            let s = rot.to_shift_sequence().unwrap();
            prop_assert_eq!(s.blanks(), 0);
        }
    }
}
