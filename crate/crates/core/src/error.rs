use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus does not generate the full multiplicative group.
    NonPrimitiveModulus { degree: u32, order: u64 },
    /// Modulus degree does not match the requested extension degree.
    DegreeMismatch { expected: u32, found: Option<usize> },
    LogOfZero,
    NotASubfield { k: u32, sub_k: u32 },
    NotOddPrime(u64),
    HallNotDefined(u64),
    GcdNotOne { r: u64, modulus: u64 },
    ZeroSeed,
    InvalidParameter { name: &'static str, reason: String },
    DimensionMismatch { rows: usize, cols: usize, len: usize },
    NotCoprime { rows: usize, cols: usize },
    ColumnNotAShift { column: usize },
    LengthMismatch { expected: usize, found: usize },
    MultipleDotsInColumn { column: usize },
    FermatPrimeRequired { n: u32 },
    /// Berlekamp-Massey and the gcd oracle disagree. Never expected.
    OracleDisagreement { bm: usize, oracle: usize },
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimitiveModulus { degree, order } => write!(
                f,
                "modulus of degree {degree} is not primitive (generator order {order})"
            ),
            Error::DegreeMismatch { expected, found } => match found {
                Some(d) => write!(f, "modulus has degree {d}, expected {expected}"),
                None => write!(f, "modulus is zero, expected degree {expected}"),
            },
            Error::LogOfZero => f.write_str("discrete logarithm of zero"),
            Error::NotASubfield { k, sub_k } => {
                write!(f, "GF(2^{sub_k}) is not a subfield of GF(2^{k})")
            }
            Error::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::HallNotDefined(p) => {
                write!(f, "Hall sequence needs a prime p = 4a^2 + 27, got {p}")
            }
            Error::GcdNotOne { r, modulus } => {
                write!(f, "gcd(r={r}, {modulus}) must be 1")
            }
            Error::ZeroSeed => f.write_str("LFSR seed must be nonzero"),
            Error::InvalidParameter { name, reason } => write!(f, "invalid {name}: {reason}"),
            Error::DimensionMismatch { rows, cols, len } => {
                write!(f, "{rows}x{cols} array cannot hold {len} entries")
            }
            Error::NotCoprime { rows, cols } => {
                write!(f, "array dimensions {rows} and {cols} are not coprime")
            }
            Error::ColumnNotAShift { column } => write!(
                f,
                "column {column} is neither constant nor a cyclic shift of the base column"
            ),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::MultipleDotsInColumn { column } => {
                write!(f, "column {column} holds more than one dot")
            }
            Error::FermatPrimeRequired { n } => write!(f, "2^{n}+1 is not prime"),
            Error::OracleDisagreement { bm, oracle } => write!(
                f,
                "linear complexity mismatch: Berlekamp-Massey {bm}, gcd oracle {oracle}"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
