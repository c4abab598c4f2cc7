//! Base sequences and the classical CDMA families.

mod families;
mod mseq;
mod residues;

pub use families::{
    balancing_fill, generalized_no_kumar_family, gold_decimation, gold_family, kasami_family,
    kasami_parent, no_kumar_base, no_kumar_family, no_kumar_r_values,
};
pub use mseq::{m_sequence, m_sequence_default};
pub use residues::{hall, hall_primitive_root, legendre};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::BinarySequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    MSequence,
    Legendre,
    Hall,
    Gold,
    Kasami,
    NoKumar,
    GeneralizedNoKumar,
    MorenoTirkelA,
    MorenoTirkelB,
    MorenoTirkelC,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::MSequence,
        FamilyKind::Legendre,
        FamilyKind::Hall,
        FamilyKind::Gold,
        FamilyKind::Kasami,
        FamilyKind::NoKumar,
        FamilyKind::GeneralizedNoKumar,
        FamilyKind::MorenoTirkelA,
        FamilyKind::MorenoTirkelB,
        FamilyKind::MorenoTirkelC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::MSequence => "mseq",
            FamilyKind::Legendre => "legendre",
            FamilyKind::Hall => "hall",
            FamilyKind::Gold => "gold",
            FamilyKind::Kasami => "kasami",
            FamilyKind::NoKumar => "nokumar",
            FamilyKind::GeneralizedNoKumar => "gnk",
            FamilyKind::MorenoTirkelA => "mt-a",
            FamilyKind::MorenoTirkelB => "mt-b",
            FamilyKind::MorenoTirkelC => "mt-c",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown family kind {s:?}")))
    }
}

/// Sequence substituted into array columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnSpec {
    /// m-sequence of degree `k` on the default primitive polynomial.
    MSequence(u32),
    Legendre(u64),
    Hall(u64),
}

impl ColumnSpec {
    pub fn build(self) -> Result<BinarySequence> {
        match self {
            ColumnSpec::MSequence(k) => m_sequence_default(k),
            ColumnSpec::Legendre(p) => legendre(p),
            ColumnSpec::Hall(p) => hall(p),
        }
    }

    /// Period of the column this spec builds.
    pub fn length(self) -> u64 {
        match self {
            ColumnSpec::MSequence(k) => (1u64 << k) - 1,
            ColumnSpec::Legendre(p) | ColumnSpec::Hall(p) => p,
        }
    }
}

impl fmt::Display for ColumnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnSpec::MSequence(k) => write!(f, "mseq:{k}"),
            ColumnSpec::Legendre(p) => write!(f, "legendre:{p}"),
            ColumnSpec::Hall(p) => write!(f, "hall:{p}"),
        }
    }
}

impl FromStr for ColumnSpec {
    type Err = Error;

    /// `legendre:17`, `hall:31` or `mseq:5`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(alloc::format!("column spec {s:?} needs kind:value")))?;
        let n: u64 = arg
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad number in column spec {s:?}")))?;
        match kind {
            "legendre" => Ok(ColumnSpec::Legendre(n)),
            "hall" => Ok(ColumnSpec::Hall(n)),
            "mseq" => Ok(ColumnSpec::MSequence(n as u32)),
            _ => Err(Error::Parse(alloc::format!("unknown column kind {kind:?}"))),
        }
    }
}

/// Construction parameters; unset fields do not apply to the family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub p: Option<u64>,
    pub r: Option<u64>,
    pub decimation: Option<u64>,
    pub column: Option<ColumnSpec>,
    pub fill: Option<u8>,
    /// Gold construction without a preferred pair (n ≡ 0 mod 4).
    pub gold_like: bool,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let Some(m) = self.m {
            parts.push(alloc::format!("m={m}"));
        }
        if let Some(n) = self.n {
            parts.push(alloc::format!("n={n}"));
        }
        if let Some(p) = self.p {
            parts.push(alloc::format!("p={p}"));
        }
        if let Some(r) = self.r {
            parts.push(alloc::format!("r={r}"));
        }
        if let Some(d) = self.decimation {
            parts.push(alloc::format!("decimation={d}"));
        }
        if let Some(c) = self.column {
            parts.push(alloc::format!("column={c}"));
        }
        if let Some(b) = self.fill {
            parts.push(alloc::format!("fill={b}"));
        }
        if self.gold_like {
            parts.push("gold-like".into());
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = FamilyParams::default();
        let bad = |what: &str| Error::Parse(alloc::format!("bad family parameter {what:?}"));
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "gold-like" {
                out.gold_like = true;
                continue;
            }
            let (k, v) = part.split_once('=').ok_or_else(|| bad(part))?;
            match k {
                "m" => out.m = Some(v.parse().map_err(|_| bad(part))?),
                "n" => out.n = Some(v.parse().map_err(|_| bad(part))?),
                "p" => out.p = Some(v.parse().map_err(|_| bad(part))?),
                "r" => out.r = Some(v.parse().map_err(|_| bad(part))?),
                "decimation" => out.decimation = Some(v.parse().map_err(|_| bad(part))?),
                "column" => out.column = Some(v.parse()?),
                "fill" => out.fill = Some(v.parse().map_err(|_| bad(part))?),
                _ => return Err(bad(part)),
            }
        }
        Ok(out)
    }
}

/// A named set of equal-length sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFamily {
    pub kind: FamilyKind,
    pub params: FamilyParams,
    pub members: Vec<BinarySequence>,
}

impl SequenceFamily {
    pub fn new(kind: FamilyKind, params: FamilyParams, members: Vec<BinarySequence>) -> Result<Self> {
        let first = members
            .first()
            .ok_or(Error::InvalidParameter { name: "family", reason: "no members".into() })?;
        if let Some(bad) = members.iter().find(|s| s.len() != first.len()) {
            return Err(Error::LengthMismatch { expected: first.len(), found: bad.len() });
        }
        Ok(SequenceFamily { kind, params, members })
    }

    /// Common member length.
    pub fn length(&self) -> usize {
        self.members[0].len()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn params_text_roundtrip() {
        let p = FamilyParams {
            m: Some(5),
            r: Some(7),
            column: Some(ColumnSpec::Legendre(31)),
            fill: Some(1),
            gold_like: true,
            ..Default::default()
        };
        let s = p.to_string();
        assert_eq!(s, "m=5,r=7,column=legendre:31,fill=1,gold-like");
        assert_eq!(s.parse::<FamilyParams>().unwrap(), p);
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("bent".parse::<FamilyKind>().is_err());
        assert!("x=1".parse::<FamilyParams>().is_err());
    }
}
