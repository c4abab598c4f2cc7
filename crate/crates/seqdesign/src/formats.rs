//! Text file formats: sequence families, shift families, arrays (plain and
//! PBM) and JSON reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use seqdesign_core::analysis::{ComplexityReport, CorrelationReport};
use seqdesign_core::seqgen::{FamilyKind, FamilyParams, SequenceFamily};
use seqdesign_core::shiftseq::{ShiftFamily, ShiftFamilyKind};
use seqdesign_core::{BinaryArray, BinarySequence, Error, ShiftSequence};

/// Optional provenance line; the only part of any output that varies between runs.
pub fn stamp_line() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    format!("# seqdesign {} unix-time={secs}\n", env!("CARGO_PKG_VERSION"))
}

fn header_fields(line: &str) -> BTreeMap<String, String> {
    line.trim_start_matches('#')
        .split_whitespace()
        .filter_map(|w| w.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

/// `# kind=... params=...` followed by one member per line.
pub fn write_family(f: &SequenceFamily, stamp: bool) -> String {
    let mut out = String::new();
    if stamp {
        out.push_str(&stamp_line());
    }
    let _ = writeln!(out, "# kind={} params={}", f.kind, f.params);
    for s in &f.members {
        let _ = writeln!(out, "{s}");
    }
    out
}

/// Sequences without a kind header, e.g. a single unfolded array.
pub fn write_sequences(members: &[BinarySequence], stamp: bool) -> String {
    let mut out = String::new();
    if stamp {
        out.push_str(&stamp_line());
    }
    for s in members {
        let _ = writeln!(out, "{s}");
    }
    out
}

/// Contents of a sequence file; `label` is absent for plain lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyFile {
    pub label: Option<(FamilyKind, FamilyParams)>,
    pub members: Vec<BinarySequence>,
}

impl FamilyFile {
    pub fn kind_name(&self) -> String {
        self.label.as_ref().map_or("unlabelled".into(), |l| l.0.to_string())
    }

    pub fn params_text(&self) -> String {
        self.label.as_ref().map_or(String::new(), |l| l.1.to_string())
    }

    /// As a family; unlabelled files are tagged as m-sequences, which only
    /// matters for code that inspects the kind.
    pub fn family(&self) -> Result<SequenceFamily, Error> {
        let (kind, params) = self.label.clone().unwrap_or((FamilyKind::MSequence, FamilyParams::default()));
        SequenceFamily::new(kind, params, self.members.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub kind: String,
    pub params: String,
    pub members: Vec<String>,
}

pub fn write_family_json(f: &SequenceFamily) -> String {
    let j = FamilyJson {
        kind: f.kind.to_string(),
        params: f.params.to_string(),
        members: f.members.iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string_pretty(&j).expect("plain data serialises") + "\n"
}

/// Reads the line format or the JSON form written by [`write_family_json`].
pub fn read_family(text: &str) -> Result<FamilyFile, Error> {
    if text.trim_start().starts_with('{') {
        let j: FamilyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let members = j.members.iter().map(|m| m.parse()).collect::<Result<Vec<_>, _>>()?;
        return Ok(FamilyFile { label: Some((j.kind.parse()?, j.params.parse()?)), members });
    }
    let mut label = None;
    let mut members = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with('#') {
            let fields = header_fields(line);
            if let Some(k) = fields.get("kind") {
                let params = fields.get("params").map_or(Ok(FamilyParams::default()), |p| p.parse())?;
                label = Some((k.parse()?, params));
            }
            continue;
        }
        members.push(line.parse::<BinarySequence>()?);
    }
    if members.is_empty() {
        return Err(Error::Parse("no sequences in input".into()));
    }
    Ok(FamilyFile { label, members })
}

/// `# kind=... params=... modulus=...` then one comma-separated pattern per line.
pub fn write_shift_family(f: &ShiftFamily, stamp: bool) -> String {
    let mut out = String::new();
    if stamp {
        out.push_str(&stamp_line());
    }
    let _ = writeln!(out, "# kind={} params={} modulus={}", f.kind, f.params, f.row_modulus());
    for p in &f.patterns {
        let _ = writeln!(out, "{p}");
    }
    out
}

/// Reads shift patterns; `modulus` overrides or supplies the header value.
pub fn read_shift_patterns(text: &str, modulus: Option<u32>) -> Result<(Option<ShiftFamilyKind>, Vec<ShiftSequence>), Error> {
    let mut kind = None;
    let mut header_modulus = None;
    let mut lines = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with('#') {
            let fields = header_fields(line);
            if let Some(k) = fields.get("kind") {
                kind = Some(k.parse()?);
            }
            if let Some(m) = fields.get("modulus") {
                header_modulus = Some(m.parse().map_err(|_| Error::Parse(format!("bad modulus {m:?}")))?);
            }
            continue;
        }
        lines.push(line);
    }
    let m = modulus.or(header_modulus).ok_or_else(|| {
        Error::InvalidParameter { name: "modulus", reason: "not given and no modulus= header".into() }
    })?;
    let patterns = lines.into_iter().map(|l| ShiftSequence::parse_csv(l, m)).collect::<Result<Vec<_>, _>>()?;
    Ok((kind, patterns))
}

/// One row of 0/1 digits per array row.
pub fn write_array_text(a: &BinaryArray) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        for &c in a.row(i) {
            out.push(if c == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Plain PBM (P1); 1 is a black cell.
pub fn write_pbm(a: &BinaryArray) -> String {
    let mut out = format!("P1\n{} {}\n", a.cols(), a.rows());
    for i in 0..a.rows() {
        let row: Vec<&str> = a.row(i).iter().map(|&c| if c == 1 { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_pbm(text: &str) -> Result<BinaryArray, Error> {
    let tokens: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .collect();
    let bad = |what: &str| Error::Parse(format!("PBM: {what}"));
    if tokens.first() != Some(&"P1") || tokens.len() < 3 {
        return Err(bad("missing P1 header"));
    }
    let cols: usize = tokens[1].parse().map_err(|_| bad("width"))?;
    let rows: usize = tokens[2].parse().map_err(|_| bad("height"))?;
    // P1 allows pixels without separators
    let cells: Vec<u8> = tokens[3..]
        .iter()
        .flat_map(|t| t.chars())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(bad("pixel value")),
        })
        .collect::<Result<_, _>>()?;
    BinaryArray::new(rows, cols, cells)
}

/// Reads either format, detected by the `P1` magic.
pub fn read_array(text: &str) -> Result<BinaryArray, Error> {
    if text.trim_start().starts_with("P1") {
        return parse_pbm(text);
    }
    let rows: Vec<Vec<u8>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(Error::Parse(format!("array cell {other:?}"))),
                })
                .collect::<Result<Vec<u8>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    let n = rows.len();
    BinaryArray::new(n, cols, rows.concat())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub bitstring: String,
    pub human: String,
}

impl From<&seqdesign_core::Poly2> for PolynomialJson {
    fn from(p: &seqdesign_core::Poly2) -> Self {
        PolynomialJson { bitstring: p.to_bitstring(), human: p.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgmaxJson {
    pub value: i64,
    pub i: usize,
    pub j: usize,
    pub tau: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationJson {
    pub kind: String,
    pub params: String,
    pub length: usize,
    pub members: usize,
    pub peak: i64,
    pub max_offpeak_auto: i64,
    pub max_cross: i64,
    /// Keys are correlation values as decimal strings.
    pub histogram: BTreeMap<String, u64>,
    pub argmax: Option<ArgmaxJson>,
}

impl CorrelationJson {
    pub fn new(kind: String, params: String, r: &CorrelationReport) -> Self {
        CorrelationJson {
            kind,
            params,
            length: r.length,
            members: r.members,
            peak: r.peak,
            max_offpeak_auto: r.max_offpeak_auto,
            max_cross: r.max_cross,
            histogram: r.histogram.iter().map(|(v, c)| (v.to_string(), *c)).collect(),
            argmax: r.argmax.map(|e| ArgmaxJson { value: e.value, i: e.i, j: e.j, tau: e.tau }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemberComplexityJson {
    pub member: usize,
    pub l: usize,
    pub oracle_l: usize,
    pub normalized: f64,
    pub feedback_polynomial: PolynomialJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexityJson {
    pub kind: String,
    pub params: String,
    pub length: usize,
    pub max_l: usize,
    pub normalized: f64,
    pub members: Vec<MemberComplexityJson>,
}

impl ComplexityJson {
    pub fn new(kind: String, params: String, reports: &[ComplexityReport]) -> Self {
        let members: Vec<_> = reports
            .iter()
            .enumerate()
            .map(|(i, r)| MemberComplexityJson {
                member: i,
                l: r.l,
                oracle_l: r.oracle_l,
                normalized: r.normalized(),
                feedback_polynomial: (&r.feedback).into(),
            })
            .collect();
        let max_l = members.iter().map(|m| m.l).max().unwrap_or(0);
        let length = reports.first().map_or(0, |r| r.length);
        ComplexityJson {
            kind,
            params,
            length,
            max_l,
            normalized: if length == 0 { 0.0 } else { max_l as f64 / length as f64 },
            members,
        }
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use seqdesign_core::arrays::fold;
    use seqdesign_core::seqgen::{kasami_family, m_sequence_default};
    use seqdesign_core::shiftseq::family_b_shifts;

    #[test]
    fn family_round_trip() {
        let k = kasami_family(3).unwrap();
        for stamp in [false, true] {
            assert_eq!(read_family(&write_family(&k, stamp)).unwrap().family().unwrap(), k);
        }
        assert_eq!(read_family(&write_family_json(&k)).unwrap().family().unwrap(), k);
        let plain = read_family(&write_sequences(&k.members[..2], true)).unwrap();
        assert_eq!((plain.label, plain.members.len()), (None, 2));
        assert!(read_family("# kind=gold\n").is_err());
    }

    #[test]
    fn shift_round_trip() {
        let b = family_b_shifts(5).unwrap();
        let (kind, pats) = read_shift_patterns(&write_shift_family(&b, false), None).unwrap();
        assert_eq!(kind, Some(ShiftFamilyKind::MorenoTirkelB));
        assert_eq!(pats, b.patterns);
        assert!(read_shift_patterns("1,2\n", None).is_err());
    }

    #[test]
    fn array_round_trips() {
        let a = fold(&m_sequence_default(6).unwrap(), 7, 9).unwrap();
        assert_eq!(read_array(&write_array_text(&a)).unwrap(), a);
        assert_eq!(read_array(&write_pbm(&a)).unwrap(), a);
        assert_eq!(read_array("P1\n# c\n3 1\n101\n").unwrap().row(0), &[1, 0, 1]);
        assert!(read_array("P1\n3 1\n1 2 1\n").is_err());
    }

    #[test]
    fn atomic_write() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x.txt");
        write_atomic(&p, "abc").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "abc");
        assert!(write_atomic(&dir.path().join("missing/x.txt"), "abc").is_err());
    }
}
