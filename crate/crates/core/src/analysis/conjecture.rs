use super::complexity::linear_complexity_periodic;
use crate::error::Result;
use crate::poly2::Poly2;
use crate::sequence::BinarySequence;

/// Outcome of comparing a long sequence's feedback polynomial with the
/// column's polynomial in `x^n_cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureResult {
    pub holds: bool,
    pub long: Poly2,
    pub column: Poly2,
    /// `column(x^n_cols)`.
    pub expected: Poly2,
    /// Degrees agree even if the polynomials differ.
    pub degree_match: bool,
    /// `long` equals the reciprocal of `expected`.
    pub reciprocal_match: bool,
}

/// Tests `c_long(x) = c_column(x^n_cols)`.
pub fn conjecture_check(long: &BinarySequence, column: &BinarySequence, n_cols: usize) -> Result<ConjectureResult> {
    let lr = linear_complexity_periodic(long)?;
    let cr = linear_complexity_periodic(column)?;
    let expected = cr.feedback.compose_power(n_cols);
    let exp_len = cr.l * n_cols;
    Ok(ConjectureResult {
        holds: lr.feedback == expected,
        degree_match: lr.l == cr.l * n_cols,
        reciprocal_match: lr.feedback == expected.reciprocal_with_len(exp_len),
        long: lr.feedback,
        column: cr.feedback,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::{substitute_columns, unfold, ShiftSequence};
    use crate::seqgen::legendre;

    #[test]
    fn identity_case() {
        let col = legendre(17).unwrap();
        assert!(conjecture_check(&col, &col, 1).unwrap().holds);
    }

    #[test]
    fn uniform_shifts_collapse() {
        let col = legendre(17).unwrap();
        let shifts = ShiftSequence::new(alloc::vec![Some(0); 15], 17).unwrap();
        let long = unfold(&substitute_columns(&shifts, &col, 0).unwrap()).unwrap();
        let r = conjecture_check(&long, &col, 15).unwrap();
        assert!(!r.holds);
        assert_eq!(r.long, r.column);
    }
}
