//! Command-line front end. [`run`] returns the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use seqdesign_core::analysis::conjecture_check;
use seqdesign_core::arrays::{fold, unfold};
use seqdesign_core::seqgen::{ColumnSpec, FamilyKind, FamilyParams};
use seqdesign_core::shiftseq::{kasami_hop_family, HopSource, ShiftFamily};
use seqdesign_core::Error;

use crate::build::{build_family, default_column, mt_shifts};
use crate::formats::{self, CorrelationJson, ComplexityJson};
use crate::parallel;
use crate::tables::{self, Selection};

#[derive(Parser, Debug)]
#[command(name = "seqdesign", version, about = "Binary CDMA sequence families, arrays, hop patterns and their correlation and linear complexity")]
pub struct Cli {
    /// Worker threads for exhaustive scans (default: SEQDESIGN_THREADS, else all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Omit the provenance line so identical runs give identical files.
    #[arg(long, global = true)]
    pub no_header: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a sequence family.
    Gen(GenArgs),
    /// Fold one sequence into a doubly periodic array.
    Fold(FoldArgs),
    /// Read an array back into a sequence.
    Unfold(UnfoldArgs),
    /// Generate a Moreno-Tirkel shift-sequence family.
    Shifts(ShiftsArgs),
    /// Convert Kasami/No-Kumar families to hop patterns, or scan a pattern file.
    Hop(HopArgs),
    /// Exhaustive periodic correlation of a family file.
    Corr(InputArgs),
    /// Linear complexity of every member of a family file.
    Complexity(InputArgs),
    /// Compare long-sequence and column feedback polynomials of a Moreno-Tirkel family.
    Conjecture(ConjectureArgs),
    /// Reproduce the published comparison tables.
    Report(ReportArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyOpts {
    /// Kasami/No-Kumar parameter (length 2^(2m) - 1).
    #[arg(short = 'm')]
    pub m: Option<u32>,
    /// Degree for mseq, gold and mt-c.
    #[arg(short = 'n')]
    pub n: Option<u32>,
    /// Prime for legendre, hall, mt-a and mt-b.
    #[arg(short = 'p')]
    pub p: Option<u64>,
    /// No-Kumar exponent, coprime to 2^m - 1.
    #[arg(short = 'r')]
    pub r: Option<u64>,
    /// Column sequence, e.g. legendre:17, hall:31, mseq:5.
    #[arg(long)]
    pub column: Option<String>,
    /// Bit used for blank columns.
    #[arg(long)]
    pub fill: Option<u8>,
}

impl FamilyOpts {
    fn params(&self) -> Result<FamilyParams, Error> {
        Ok(FamilyParams {
            m: self.m,
            n: self.n,
            p: self.p,
            r: self.r,
            column: self.column.as_deref().map(str::parse).transpose()?,
            fill: self.fill,
            ..Default::default()
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyFormat {
    Bits,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArrayFormat {
    Text,
    Pbm,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// mseq, legendre, hall, gold, kasami, nokumar, gnk, mt-a, mt-b or mt-c.
    pub kind: String,
    #[command(flatten)]
    pub family: FamilyOpts,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "bits")]
    pub format: FamilyFormat,
}

#[derive(Args, Debug)]
pub struct FoldArgs {
    /// Family file: one 0/1 line per member, or JSON.
    #[arg(short, long)]
    pub input: PathBuf,
    /// Member of the input family to fold.
    #[arg(long, default_value_t = 0)]
    pub member: usize,
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub cols: usize,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ArrayFormat,
}

#[derive(Args, Debug)]
pub struct UnfoldArgs {
    /// Array as 0/1 rows or plain PBM.
    #[arg(short, long)]
    pub input: PathBuf,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ShiftsArgs {
    /// mt-a, mt-b or mt-c.
    pub kind: String,
    #[command(flatten)]
    pub family: FamilyOpts,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Kasami,
    Nokumar,
}

#[derive(Args, Debug)]
pub struct HopArgs {
    /// Family converted to hop patterns.
    #[arg(long, value_enum, conflicts_with = "check")]
    pub source: Option<Source>,
    /// Kasami/No-Kumar parameter.
    #[arg(short = 'm')]
    pub m: Option<u32>,
    /// No-Kumar exponent.
    #[arg(short = 'r', default_value_t = 1)]
    pub r: u64,
    /// Pattern file to scan instead.
    #[arg(long)]
    pub check: Option<PathBuf>,
    /// Frequency count for pattern files without a modulus= header.
    #[arg(long)]
    pub modulus: Option<u32>,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Family file: one 0/1 line per member, or JSON.
    #[arg(short, long)]
    pub input: PathBuf,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    /// mt-a, mt-b or mt-c.
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub opts: FamilyOpts,
    /// Member to test; every member when omitted.
    #[arg(long)]
    pub member: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Table1,
    Table2,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    pub table: Table,
    /// Comma-separated row keys (kasami, nokumar, gnk, gold, mt-a, mt-b, mt-c, bent, kerdock).
    #[arg(long, value_delimiter = ',')]
    pub rows: Option<Vec<String>>,
    /// Length columns of table1 (255, 1023, 4095).
    #[arg(long = "length", value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    /// Output file, written atomically; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// A failed run: usage problems exit with 2, broken invariants and IO with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::OracleDisagreement { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Writes to `output` atomically, or to stdout.
fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(p) => formats::write_atomic(p, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serialises") + "\n"
}

fn mt_kind(name: &str) -> CliResult<FamilyKind> {
    match name.parse::<FamilyKind>()? {
        k @ (FamilyKind::MorenoTirkelA | FamilyKind::MorenoTirkelB | FamilyKind::MorenoTirkelC) => Ok(k),
        other => Err(CliError::Usage(format!("invalid family: {other} is not mt-a, mt-b or mt-c"))),
    }
}

fn gen(cli: &Cli, a: &GenArgs) -> CliResult<()> {
    let kind: FamilyKind = a.kind.parse()?;
    let f = build_family(kind, &a.family.params()?)?;
    let text = match a.format {
        FamilyFormat::Bits => formats::write_family(&f, !cli.no_header),
        FamilyFormat::Json => formats::write_family_json(&f),
    };
    emit(a.output.as_deref(), &text)
}

fn fold_cmd(a: &FoldArgs) -> CliResult<()> {
    let file = formats::read_family(&read_input(&a.input)?)?;
    let s = file
        .members
        .get(a.member)
        .ok_or_else(|| CliError::Usage(format!("invalid member: {} of {}", a.member, file.members.len())))?;
    let arr = fold(s, a.rows, a.cols)?;
    let text = match a.format {
        ArrayFormat::Text => formats::write_array_text(&arr),
        ArrayFormat::Pbm => formats::write_pbm(&arr),
    };
    emit(a.output.as_deref(), &text)
}

fn unfold_cmd(cli: &Cli, a: &UnfoldArgs) -> CliResult<()> {
    let arr = formats::read_array(&read_input(&a.input)?)?;
    let s = unfold(&arr)?;
    emit(a.output.as_deref(), &formats::write_sequences(&[s], !cli.no_header))
}

fn shifts_cmd(cli: &Cli, a: &ShiftsArgs) -> CliResult<()> {
    let f = mt_shifts(mt_kind(&a.kind)?, &a.family.params()?)?;
    let (worst, i, j) = parallel::hop_max(&f)?;
    eprintln!("{} patterns, max coincidence {} (patterns {i},{j} at s={}, d={})", f.patterns.len(), worst.max, worst.s, worst.d);
    emit(a.output.as_deref(), &formats::write_shift_family(&f, !cli.no_header))
}

fn hop_cmd(cli: &Cli, a: &HopArgs) -> CliResult<()> {
    if let Some(path) = &a.check {
        let (kind, patterns) = formats::read_shift_patterns(&read_input(path)?, a.modulus)?;
        let f = ShiftFamily::new(
            kind.unwrap_or(seqdesign_core::shiftseq::ShiftFamilyKind::KasamiHop),
            FamilyParams::default(),
            None,
            patterns,
        )?;
        let mut out = String::new();
        for (i, p) in f.patterns.iter().enumerate() {
            let auto = seqdesign_core::shiftseq::hop_hamming_max(p, p, true)?;
            let _ = writeln!(out, "pattern {i}: {p}  off-peak auto {}", auto.max);
        }
        let (worst, i, j) = parallel::hop_max(&f)?;
        let _ = writeln!(out, "max coincidence {} (patterns {i},{j} at s={}, d={})", worst.max, worst.s, worst.d);
        return emit(a.output.as_deref(), &out);
    }
    let source = a.source.ok_or_else(|| CliError::Usage("hop needs --source or --check".into()))?;
    let m = a.m.ok_or_else(|| CliError::Usage("invalid m: required".into()))?;
    let src = match source {
        Source::Kasami => HopSource::Kasami,
        Source::Nokumar => HopSource::NoKumar,
    };
    let (f, base) = kasami_hop_family(m, src, a.r)?;
    let (worst, _, _) = parallel::hop_max(&f)?;
    eprintln!(
        "{} patterns, {} slots, {} frequencies, base column {base}, max coincidence {}",
        f.patterns.len(),
        f.n_cols(),
        f.row_modulus(),
        worst.max
    );
    emit(a.output.as_deref(), &formats::write_shift_family(&f, !cli.no_header))
}

fn corr_cmd(a: &InputArgs) -> CliResult<()> {
    let file = formats::read_family(&read_input(&a.input)?)?;
    let r = parallel::correlation_report(&file.family()?);
    let j = CorrelationJson::new(file.kind_name(), file.params_text(), &r);
    let text = match a.format {
        TextFormat::Json => json(&j),
        TextFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "kind {} params {}", j.kind, j.params);
            let _ = writeln!(s, "members {} length {} peak {}", j.members, j.length, j.peak);
            let _ = writeln!(s, "max off-peak auto {} max cross {}", j.max_offpeak_auto, j.max_cross);
            for (v, c) in &r.histogram {
                let _ = writeln!(s, "value {v}: {c}");
            }
            s
        }
    };
    emit(a.output.as_deref(), &text)
}

fn complexity_cmd(a: &InputArgs) -> CliResult<()> {
    let file = formats::read_family(&read_input(&a.input)?)?;
    let reports = parallel::complexities(&file.family()?)?;
    let j = ComplexityJson::new(file.kind_name(), file.params_text(), &reports);
    let text = match a.format {
        TextFormat::Json => json(&j),
        TextFormat::Text => {
            let mut s = String::new();
            for m in &j.members {
                let _ = writeln!(s, "member {} l {} normalized {:.6} feedback {}", m.member, m.l, m.normalized, m.feedback_polynomial.human);
            }
            let _ = writeln!(s, "max l {} of length {} normalized {:.6}", j.max_l, j.length, j.normalized);
            s
        }
    };
    emit(a.output.as_deref(), &text)
}

fn conjecture_cmd(a: &ConjectureArgs) -> CliResult<()> {
    let kind = mt_kind(&a.family)?;
    let params = a.opts.params()?;
    let shifts = mt_shifts(kind, &params)?;
    let spec: ColumnSpec = params.column.unwrap_or_else(|| default_column(&shifts));
    let column = spec.build()?;
    let f = build_family(kind, &FamilyParams { column: Some(spec), ..params })?;
    let members: Vec<usize> = match a.member {
        Some(k) if k < f.size() => vec![k],
        Some(k) => return Err(CliError::Usage(format!("invalid member: {k} of {}", f.size()))),
        None => (0..f.size()).collect(),
    };
    let mut all = true;
    let mut out = String::new();
    for k in members {
        let r = conjecture_check(&f.members[k], &column, shifts.n_cols())?;
        all &= r.holds;
        let _ = writeln!(out, "member {k}");
        let _ = writeln!(out, "  column   {}", r.column);
        let _ = writeln!(out, "  long     {}", r.long);
        let _ = writeln!(out, "  expected {}", r.expected);
        let _ = writeln!(
            out,
            "  {}{}",
            if r.holds { "MATCH" } else { "MISMATCH" },
            if r.holds { String::new() } else { format!(" (degree match {}, reciprocal match {})", r.degree_match, r.reciprocal_match) }
        );
    }
    let _ = writeln!(out, "{}", if all { "MATCH" } else { "MISMATCH" });
    emit(None, &out)
}

fn report_cmd(a: &ReportArgs) -> CliResult<()> {
    let sel = Selection { rows: a.rows.clone(), lengths: a.lengths.clone() };
    let text = match (a.table, a.format) {
        (Table::Table1, f) => {
            let rows = tables::table1(&sel)?;
            if f == TextFormat::Json { json(&rows) } else { tables::render_table1(&rows) }
        }
        (Table::Table2, f) => {
            let rows = tables::table2(&sel)?;
            if f == TextFormat::Json { json(&rows) } else { tables::render_table2(&rows) }
        }
    };
    emit(a.output.as_deref(), &text)
}

fn dispatch(cli: &Cli) -> CliResult<()> {
    parallel::configure_threads(cli.threads).map_err(CliError::Usage)?;
    match &cli.command {
        Command::Gen(a) => gen(cli, a),
        Command::Fold(a) => fold_cmd(a),
        Command::Unfold(a) => unfold_cmd(cli, a),
        Command::Shifts(a) => shifts_cmd(cli, a),
        Command::Hop(a) => hop_cmd(cli, a),
        Command::Corr(a) => corr_cmd(a),
        Command::Complexity(a) => complexity_cmd(a),
        Command::Conjecture(a) => conjecture_cmd(a),
        Command::Report(a) => report_cmd(a),
    }
}

/// Parses `args` and runs the command; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Internal(msg)) = &e;
            eprintln!("seqdesign: {msg}");
            e.code()
        }
    }
}
