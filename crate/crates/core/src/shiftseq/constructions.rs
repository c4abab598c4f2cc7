use alloc::vec::Vec;

use super::{ShiftFamily, ShiftFamilyKind};
use crate::arrays::{DotGrid, ShiftSequence};
use crate::error::{Error, Result};
use crate::field::{is_prime, pow_mod, primitive_root, PrimeField, QuadExtField};
use crate::seqgen::FamilyParams;

/// Quadratic-exponential family: member `b ∈ Z_p` is
/// `f_b(j) = b·g^(2j) + g^j mod p` for `j < p − 1`.
pub fn family_a_shifts(p: u64) -> Result<ShiftFamily> {
    if p < 5 {
        return Err(Error::InvalidParameter { name: "p", reason: alloc::format!("{p} is below 5") });
    }
    let g = primitive_root(p)?;
    let powers: Vec<u64> = (0..p - 1).map(|j| pow_mod(g, j, p)).collect();
    let patterns = (0..p)
        .map(|b| {
            let values = powers.iter().map(|&x| Some(((b * x % p * x + x) % p) as u32)).collect();
            ShiftSequence::new(values, p as u32)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = FamilyParams { p: Some(p), ..Default::default() };
    ShiftFamily::new(ShiftFamilyKind::MorenoTirkelA, params, Some(g), patterns)
}

/// Rational-map family of length `p + 1`: with `θ^j = a + b·x` in GF(p²) the
/// base is `a/b` (blank when `b = 0`), and member `c ∈ Z_p*` is `c` times it.
pub fn family_b_shifts(p: u64) -> Result<ShiftFamily> {
    let f = QuadExtField::new(p)?;
    let base: Vec<Option<u64>> = (0..=p)
        .map(|j| {
            let (a, b) = f.theta_pow(j);
            (b != 0).then(|| {
                let inv = pow_mod(b, p - 2, p);
                a * inv % p
            })
        })
        .collect();
    let patterns = (1..p)
        .map(|c| {
            let values = base.iter().map(|v| v.map(|x| (c * x % p) as u32)).collect();
            ShiftSequence::new(values, p as u32)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = FamilyParams { p: Some(p), ..Default::default() };
    ShiftFamily::new(ShiftFamilyKind::MorenoTirkelB, params, None, patterns)
}

fn fermat_prime(n: u32) -> Result<u64> {
    if n == 0 || n > 16 || !is_prime((1u64 << n) + 1) {
        return Err(Error::FermatPrimeRequired { n });
    }
    Ok((1u64 << n) + 1)
}

/// Family C before rotation: length `2^n + 1`, values mod `2^n − 1`. Entry
/// `j` is `log_g(j)` when that is at most `2^n − 2`, else blank (also `j = 0`).
pub fn family_c_pre_rotation(n: u32) -> Result<ShiftSequence> {
    let q = fermat_prime(n)?;
    let field = PrimeField::new(q)?;
    let rows = (1u64 << n) - 1;
    let values = (0..q)
        .map(|j| {
            if j == 0 {
                return Ok(None);
            }
            let e = field.log(j)?;
            Ok((e < rows).then_some(e as u32))
        })
        .collect::<Result<Vec<_>>>()?;
    ShiftSequence::new(values, rows as u32)
}

/// Family C: the pre-rotation grid turned a quarter anticlockwise, rows read
/// from the bottom edge, giving `h(k) = g^k mod (2^n + 1)`; the family is the
/// `2^n − 1` cyclic translates of `h`.
pub fn family_c_shifts(n: u32) -> Result<ShiftFamily> {
    let q = fermat_prime(n)?;
    let pre = family_c_pre_rotation(n)?;
    let base = DotGrid::from_shift_sequence(&pre).rotate_ccw().flip_vertical().to_shift_sequence()?;
    let patterns = (0..base.len() as i64).map(|s| base.translate(s)).collect();
    let params = FamilyParams { n: Some(n), ..Default::default() };
    ShiftFamily::new(ShiftFamilyKind::MorenoTirkelC, params, Some(primitive_root(q)?), patterns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vals(s: &ShiftSequence) -> Vec<Option<u32>> {
        s.values().to_vec()
    }

    #[test]
    fn family_a_small() {
        let f = family_a_shifts(5).unwrap();
        assert_eq!(f.patterns.len(), 5);
        assert_eq!(f.generator, Some(2));
        assert_eq!(f.patterns[0].to_csv(), "1,2,4,3");
        assert_eq!(f.patterns[1].to_csv(), "2,1,0,2");
        assert!(family_a_shifts(3).is_err());
        assert!(family_a_shifts(9).is_err());
    }

    #[test]
    fn family_b_small() {
        let f = family_b_shifts(3).unwrap();
        assert_eq!(f.patterns.len(), 2);
        assert_eq!(f.patterns[0].to_csv(), "-,1,0,2");
        assert_eq!(f.patterns[1].to_csv(), "-,2,0,1");
    }

    #[test]
    fn family_b_base_is_a_bijection() {
        for p in [3u64, 5, 7, 11, 13] {
            let base = &family_b_shifts(p).unwrap().patterns[0];
            assert_eq!(base.blanks(), 1);
            let mut seen = vec![false; p as usize];
            for v in base.values().iter().flatten() {
                assert!(!seen[*v as usize]);
                seen[*v as usize] = true;
            }
        }
    }

    #[test]
    fn family_c_n4() {
        let f = family_c_shifts(4).unwrap();
        let expected = [1, 3, 9, 10, 13, 5, 15, 11, 16, 14, 8, 7, 4, 12, 2];
        assert_eq!(vals(&f.patterns[0]), expected.iter().map(|&x| Some(x)).collect::<Vec<_>>());
        assert_eq!(f.patterns.len(), 15);
        assert_eq!(f.row_modulus(), 17);
        assert_eq!(family_c_shifts(3), Err(Error::FermatPrimeRequired { n: 3 }));
    }

    #[test]
    fn family_c_pre_rotation_grid() {
        let pre = family_c_pre_rotation(4).unwrap();
        assert_eq!((pre.len(), pre.modulus(), pre.blanks()), (17, 15, 2));
        let g = DotGrid::from_shift_sequence(&pre);
        assert!(g.dots_per_row().iter().all(|&c| c == 1));
        assert!(g.dots_per_col().iter().all(|&c| c <= 1));
    }
}
