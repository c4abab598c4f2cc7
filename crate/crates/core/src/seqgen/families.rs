use alloc::vec::Vec;

use super::{ColumnSpec, FamilyKind, FamilyParams, SequenceFamily};
use crate::arrays::{extract_shift_sequence, first_nonconstant_column, fold, substitute_columns, unfold};
use crate::error::{Error, Result};
use crate::field::{gcd, BinaryField};
use crate::sequence::BinarySequence;
use crate::seqgen::m_sequence_default;

/// Decimation paired with the degree-`n` m-sequence in [`gold_family`], and
/// whether the pair is only Gold-like.
pub fn gold_decimation(n: u32) -> Result<(u64, bool)> {
    if !(3..=20).contains(&n) {
        return Err(Error::InvalidParameter { name: "n", reason: alloc::format!("{n} not in 3..=20") });
    }
    match n % 4 {
        1 | 3 => Ok((3, false)),
        2 => Ok((5, false)),
        _ => {
            let period = (1u64 << n) - 1;
            let d = (3..period)
                .find(|&d| gcd(d, period) == 1 && !(0..n).any(|i| (1u64 << i) % period == d))
                .expect("a unit outside the coset of 1 exists for n >= 4");
            Ok((d, true))
        }
    }
}

/// Gold family of degree `n`: `u`, `v = u[d·]` and `u ⊕ v.shift(τ)` for every τ.
pub fn gold_family(n: u32) -> Result<SequenceFamily> {
    let (d, gold_like) = gold_decimation(n)?;
    let u = m_sequence_default(n)?;
    let v = u.decimate(d);
    let mut members = Vec::with_capacity(u.len() + 2);
    members.push(u.clone());
    members.push(v.clone());
    for tau in 0..u.len() {
        members.push(u.xor(&v.shift(tau as i64))?);
    }
    let params = FamilyParams { n: Some(n), decimation: Some(d), gold_like, ..Default::default() };
    SequenceFamily::new(FamilyKind::Gold, params, members)
}

fn check_half_degree(m: u32) -> Result<()> {
    if (2..=8).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name: "m", reason: alloc::format!("{m} not in 2..=8") })
    }
}

/// The degree-`2m` m-sequence that small Kasami families are built on.
pub fn kasami_parent(m: u32) -> Result<BinarySequence> {
    check_half_degree(m)?;
    m_sequence_default(2 * m)
}

/// Small Kasami family of `2^m` sequences of length `2^(2m) − 1`.
///
/// The parent m-sequence is folded into a `(2^m − 1) × (2^m + 1)` array. Its
/// non-constant columns are all shifts of one column `c`, and member `k` adds
/// `c.shift(k)` to every column of the parent. In unfolded form that is
/// `s_t ⊕ c_{(t mod (2^m − 1)) + k}`.
pub fn kasami_family(m: u32) -> Result<SequenceFamily> {
    let parent = kasami_parent(m)?;
    let rows = (1usize << m) - 1;
    let cols = (1usize << m) + 1;
    let base = first_nonconstant_column(&fold(&parent, rows, cols)?)
        .ok_or(Error::InvalidParameter { name: "m", reason: "parent array has no column sequence".into() })?;
    let mut members = Vec::with_capacity(rows + 1);
    members.push(parent.clone());
    for k in 0..rows {
        members.push(BinarySequence::from_fn(parent.len(), |t| parent.bit(t) ^ base.bit(t % rows + k)));
    }
    SequenceFamily::new(FamilyKind::Kasami, FamilyParams { m: Some(m), ..Default::default() }, members)
}

/// Exponents `r` giving distinct No-Kumar families: the smallest element of
/// each cyclotomic coset mod `2^m − 1` made of units.
pub fn no_kumar_r_values(m: u32) -> Result<Vec<u64>> {
    check_half_degree(m)?;
    let period = (1u64 << m) - 1;
    Ok((1..period)
        .filter(|&r| gcd(r, period) == 1)
        .filter(|&r| (1..m).all(|i| (r << i) % period >= r))
        .collect())
}

struct NoKumar {
    field: BinaryField,
    m: u32,
    r: u64,
}

impl NoKumar {
    fn new(m: u32, r: u64) -> Result<Self> {
        check_half_degree(m)?;
        let period = (1u64 << m) - 1;
        if r == 0 || gcd(r, period) != 1 {
            return Err(Error::GcdNotOne { r, modulus: period });
        }
        Ok(NoKumar { field: BinaryField::with_default(2 * m)?, m, r })
    }

    /// `tr_1^m([tr_m^{2m}(α^{2t}) + γ·α^{(2^m+1)t}]^r)` for every `t`.
    fn member(&self, gamma: u32) -> Result<BinarySequence> {
        let f = &self.field;
        let n = f.order() as usize;
        let t_exp = (1u64 << self.m) + 1;
        let mut bits = Vec::with_capacity(n);
        for t in 0..n as u64 {
            let half = f.trace_to_subfield(f.exp(2 * t), self.m)?;
            let z = half ^ f.mul(gamma, f.exp(t_exp * t));
            bits.push(f.relative_trace(f.pow(z, self.r), self.m, 1)? as u8);
        }
        Ok(BinarySequence::from_bits_unchecked(bits))
    }
}

/// The γ = 0 member of the No-Kumar family.
pub fn no_kumar_base(m: u32, r: u64) -> Result<BinarySequence> {
    NoKumar::new(m, r)?.member(0)
}

/// No-Kumar family with `2^m` members of length `2^(2m) − 1`:
///
/// `s_γ(t) = tr_1^m([tr_m^{2m}(α^{2t}) + γ·α^{(2^m+1)t}]^r)`, γ ∈ GF(2^m),
/// listed as γ = 0 followed by γ = β^k with `β = α^(2^m+1)`.
/// `r = 1` gives the small Kasami set.
pub fn no_kumar_family(m: u32, r: u64) -> Result<SequenceFamily> {
    let nk = NoKumar::new(m, r)?;
    let beta_exp = (1u64 << m) + 1;
    let mut members = Vec::with_capacity(1 << m);
    members.push(nk.member(0)?);
    for k in 0..(1u64 << m) - 1 {
        members.push(nk.member(nk.field.exp(beta_exp * k))?);
    }
    let params = FamilyParams { m: Some(m), r: Some(r), ..Default::default() };
    SequenceFamily::new(FamilyKind::NoKumar, params, members)
}

/// Bit for constant columns that keeps substituted arrays balanced like the
/// original: the minority bit of `column`.
pub fn balancing_fill(column: &BinarySequence) -> u8 {
    (2 * column.weight() < column.len()) as u8
}

/// No-Kumar family with every column sequence replaced by `column`.
///
/// Each member is folded into its `(2^m − 1) × (2^m + 1)` array, its shift
/// sequence is read against the base member's column, and `column` is put in
/// its place. Constant columns take [`balancing_fill`].
pub fn generalized_no_kumar_family(m: u32, r: u64, column: ColumnSpec) -> Result<SequenceFamily> {
    let rows = (1usize << m) - 1;
    let cols = (1usize << m) + 1;
    let replacement = column.build()?;
    if replacement.len() != rows {
        return Err(Error::LengthMismatch { expected: rows, found: replacement.len() });
    }
    let fill = balancing_fill(&replacement);
    let nk = no_kumar_family(m, r)?;
    let base = first_nonconstant_column(&fold(&nk.members[0], rows, cols)?)
        .ok_or(Error::InvalidParameter { name: "m", reason: "base array has no column sequence".into() })?;
    let members = nk
        .members
        .iter()
        .map(|s| {
            let shifts = extract_shift_sequence(&fold(s, rows, cols)?, &base)?;
            unfold(&substitute_columns(&shifts, &replacement, fill)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = FamilyParams {
        m: Some(m),
        r: Some(r),
        column: Some(column),
        fill: Some(fill),
        ..Default::default()
    };
    SequenceFamily::new(FamilyKind::GeneralizedNoKumar, params, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn gold_decimations() {
        assert_eq!(gold_decimation(5).unwrap(), (3, false));
        assert_eq!(gold_decimation(6).unwrap(), (5, false));
        assert_eq!(gold_decimation(8).unwrap(), (7, true));
        assert!(gold_decimation(2).is_err());
    }

    #[test]
    fn family_sizes() {
        assert_eq!(gold_family(5).unwrap().size(), 33);
        let k = kasami_family(3).unwrap();
        assert_eq!((k.size(), k.length()), (8, 63));
        let nk = no_kumar_family(3, 1).unwrap();
        assert_eq!((nk.size(), nk.length()), (8, 63));
    }

    #[test]
    fn r_sweep_and_domain() {
        assert_eq!(no_kumar_r_values(4).unwrap(), alloc::vec![1, 7]);
        assert_eq!(no_kumar_r_values(3).unwrap(), alloc::vec![1, 3]);
        assert_eq!(no_kumar_family(4, 3), Err(Error::GcdNotOne { r: 3, modulus: 15 }));
        assert!(kasami_family(9).is_err());
    }

    #[test]
    fn no_kumar_r1_is_kasami_set() {
        // same member set up to ordering and a common shift of the parent
        let nk = no_kumar_family(3, 1).unwrap();
        let k = kasami_family(3).unwrap();
        let tau = k.members[0].shift_to(&nk.members[0]).expect("parents are shifts");
        let mut a: Vec<_> = k.members.iter().map(|s| s.shift(tau as i64)).collect();
        let mut b = nk.members.clone();
        a.sort_by_key(|s| s.to_string());
        b.sort_by_key(|s| s.to_string());
        assert_eq!(a, b);
    }

    #[test]
    fn fill_bits() {
        assert_eq!(balancing_fill(&m_sequence_default(5).unwrap()), 0);
        assert_eq!(balancing_fill(&super::super::legendre(31).unwrap()), 1);
    }
}
