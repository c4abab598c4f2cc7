//! Builds any family from its kind and parameter set.

use seqdesign_core::seqgen::{
    generalized_no_kumar_family, gold_family, hall, kasami_family, legendre, m_sequence_default, no_kumar_family,
    ColumnSpec, FamilyKind, FamilyParams, SequenceFamily,
};
use seqdesign_core::shiftseq::{family_a_shifts, family_b_shifts, family_c_shifts, mt_sequence_family, ShiftFamily};
use seqdesign_core::{Error, Result};

fn need<T>(v: Option<T>, name: &'static str) -> Result<T> {
    v.ok_or(Error::InvalidParameter { name, reason: "required".into() })
}

/// Shift family behind a Moreno-Tirkel kind.
pub fn mt_shifts(kind: FamilyKind, params: &FamilyParams) -> Result<ShiftFamily> {
    match kind {
        FamilyKind::MorenoTirkelA => family_a_shifts(need(params.p, "p")?),
        FamilyKind::MorenoTirkelB => family_b_shifts(need(params.p, "p")?),
        FamilyKind::MorenoTirkelC => family_c_shifts(need(params.n, "n")?),
        other => Err(Error::InvalidParameter { name: "family", reason: format!("{other} has no shift family") }),
    }
}

/// Default column for a Moreno-Tirkel family: the Legendre sequence of the row modulus.
pub fn default_column(shifts: &ShiftFamily) -> ColumnSpec {
    ColumnSpec::Legendre(shifts.row_modulus() as u64)
}

pub fn build_family(kind: FamilyKind, params: &FamilyParams) -> Result<SequenceFamily> {
    let single = |s| SequenceFamily::new(kind, params.clone(), vec![s]);
    match kind {
        FamilyKind::MSequence => single(m_sequence_default(need(params.n, "n")?)?),
        FamilyKind::Legendre => single(legendre(need(params.p, "p")?)?),
        FamilyKind::Hall => single(hall(need(params.p, "p")?)?),
        FamilyKind::Gold => gold_family(need(params.n, "n")?),
        FamilyKind::Kasami => kasami_family(need(params.m, "m")?),
        FamilyKind::NoKumar => no_kumar_family(need(params.m, "m")?, params.r.unwrap_or(1)),
        FamilyKind::GeneralizedNoKumar => {
            let m = need(params.m, "m")?;
            let column = params.column.unwrap_or(ColumnSpec::Legendre((1 << m) - 1));
            generalized_no_kumar_family(m, params.r.unwrap_or(1), column)
        }
        FamilyKind::MorenoTirkelA | FamilyKind::MorenoTirkelB | FamilyKind::MorenoTirkelC => {
            let shifts = mt_shifts(kind, params)?;
            let spec = params.column.unwrap_or_else(|| default_column(&shifts));
            let fill = params.fill.unwrap_or(0);
            if fill > 1 {
                return Err(Error::InvalidParameter { name: "fill", reason: format!("{fill} is not a bit") });
            }
            let mut f = mt_sequence_family(&shifts, &spec.build()?, fill)?;
            f.params.column = Some(spec);
            Ok(f)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_every_kind() {
        let cases = [
            (FamilyKind::MSequence, "n=5", 1),
            (FamilyKind::Legendre, "p=7", 1),
            (FamilyKind::Hall, "p=31", 1),
            (FamilyKind::Gold, "n=5", 33),
            (FamilyKind::Kasami, "m=3", 8),
            (FamilyKind::NoKumar, "m=3,r=3", 8),
            (FamilyKind::GeneralizedNoKumar, "m=3,column=legendre:7", 8),
            (FamilyKind::MorenoTirkelA, "p=7", 7),
            (FamilyKind::MorenoTirkelB, "p=7", 6),
            (FamilyKind::MorenoTirkelC, "n=2", 3),
        ];
        for (kind, params, size) in cases {
            let f = build_family(kind, &params.parse().unwrap()).unwrap();
            assert_eq!(f.size(), size, "{kind}");
        }
        assert!(build_family(FamilyKind::Gold, &FamilyParams::default()).is_err());
    }

    #[test]
    fn params_survive_a_rebuild() {
        let f = build_family(FamilyKind::MorenoTirkelC, &"n=4".parse().unwrap()).unwrap();
        assert_eq!(f.params.to_string(), "n=4,column=legendre:17,fill=0");
        let again = build_family(f.kind, &f.params).unwrap();
        assert_eq!(again, f);
    }
}
