//! Crate-wide error type. Every message names the violated constraint.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not a prime number.
    NotPrime(u32),
    /// The field order `p^k` exceeds the desk-scale bound 2^16.
    OrderTooLarge { p: u32, k: u32 },
    /// An element of one field was handed to an operation of another.
    FieldMismatch { expected: u32, got: u32 },
    /// Element value out of range for the field order.
    BadElementValue { value: u32, order: u32 },
    /// Source degree does not divide the target degree.
    IncompatibleEmbedding { src_order: u32, dst_order: u32 },
    /// `n` does not divide `q - 1`, so no primitive n-th root of unity exists.
    NoRootOfUnity { n: u32, order: u32 },
    /// Zero has no multiplicative inverse.
    ZeroInverse,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// Division by the zero polynomial.
    ZeroPolyDivision,
    /// Matrix shapes are incompatible for the requested operation.
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    /// Operands live over different ambient function fields.
    AmbientMismatch,
    /// Divisor support contains a place the operation does not handle.
    UnsupportedSupport(String),
    /// Extension-descriptor configuration outside the supported catalog.
    UnsupportedConfiguration(String),
    /// The Hurwitz formula produced a non-integral or negative genus.
    InconsistentGenus { twice_genus: i64 },
    /// A Riemann-Roch basis count disagreed with the dimension formula.
    BasisCountMismatch { expected: i64, got: usize },
    /// An evaluation place lies in the support of the code divisor.
    PlaceInSupport(String),
    /// An evaluation place is not rational over the code alphabet.
    NonRationalPlace(String),
    /// Evaluation hit a pole of a basis function.
    EvaluationAtPole(String),
    /// The evaluation map was expected to be injective but is not.
    RankDeficiency { expected: usize, got: usize },
    /// Parameters violate the two-point code window; names the constraint.
    WindowViolation(String),
    /// The two hull oracles disagreed; signals a linear-algebra bug.
    OracleDisagreement { rank_method: usize, intersection_method: usize },
    /// The place-counting assumption fails over the listed places.
    AssumptionViolated { places: Vec<String> },
    /// Dimension requested for a divisor outside the supported catalog.
    UnsupportedDivisor(String),
    /// Constant-extension degree divisible by the characteristic.
    BadConstantDegree { t: u32, characteristic: u32 },
    /// Text-format parse failure.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::OrderTooLarge { p, k } => {
                write!(f, "field order {p}^{k} exceeds the bound 2^16")
            }
            Error::FieldMismatch { expected, got } => {
                write!(f, "element of GF({got}) used where GF({expected}) is required")
            }
            Error::BadElementValue { value, order } => {
                write!(f, "element value {value} out of range for GF({order})")
            }
            Error::IncompatibleEmbedding { src_order, dst_order } => {
                write!(f, "GF({src_order}) does not embed into GF({dst_order})")
            }
            Error::NoRootOfUnity { n, order } => {
                write!(f, "{n} does not divide q-1 = {}", order - 1)
            }
            Error::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            Error::ZeroPolyDivision => write!(f, "polynomial division by zero"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "shape mismatch: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)
            }
            Error::AmbientMismatch => write!(f, "operands belong to different function fields"),
            Error::UnsupportedSupport(s) => write!(f, "unsupported divisor support: {s}"),
            Error::UnsupportedConfiguration(s) => write!(f, "unsupported configuration: {s}"),
            Error::InconsistentGenus { twice_genus } => {
                write!(f, "Hurwitz formula gave 2g' = {twice_genus}, not a valid genus")
            }
            Error::BasisCountMismatch { expected, got } => {
                write!(f, "basis has {got} functions, dimension count requires {expected}")
            }
            Error::PlaceInSupport(p) => {
                write!(f, "evaluation place {p} lies in the support of G")
            }
            Error::NonRationalPlace(p) => {
                write!(f, "place {p} is not rational over the code alphabet")
            }
            Error::EvaluationAtPole(p) => write!(f, "function has a pole at {p}"),
            Error::RankDeficiency { expected, got } => {
                write!(f, "evaluation matrix has rank {got}, expected {expected}")
            }
            Error::WindowViolation(c) => write!(f, "parameter window violated: {c}"),
            Error::OracleDisagreement { rank_method, intersection_method } => write!(
                f,
                "hull oracles disagree: rank method {rank_method}, intersection method {intersection_method}"
            ),
            Error::AssumptionViolated { places } => {
                write!(f, "place-counting assumption fails at: ")?;
                for (i, p) in places.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Error::UnsupportedDivisor(s) => {
                write!(f, "no dimension algorithm for this divisor: {s}")
            }
            Error::BadConstantDegree { t, characteristic } => {
                write!(f, "constant-extension degree {t} is divisible by the characteristic {characteristic}")
            }
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}
