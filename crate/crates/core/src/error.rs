use core::fmt;

/// Errors produced by the arithmetic kernel, graph model, spectra and
/// transfer decisions.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An argument that must be a positive integer was zero.
    Zero,
    /// An argument exceeded the supported range (`n <= 2^30`).
    OutOfRange(u64),
    /// A floating-point oracle sum was not within tolerance of an integer.
    NonIntegerResidual { value: f64, residual: f64 },
    /// The operation needs an even modulus.
    OddModulus(u64),
    /// The operation needs a modulus divisible by four.
    NotDivisibleByFour(u64),
    /// `r` in `G_n^r(d)` must be 1 or 3.
    BadResidue(u64),
    /// Directed classes were given for `n` not divisible by four.
    BadModulus(u64),
    /// A divisor class failed its divisibility or range constraint.
    BadDivisor { divisor: u64, directed: bool },
    /// A divisor appears in both the undirected and directed sets.
    Overlap(u64),
    /// The sign map's domain differs from the directed divisor set.
    SigmaDomainMismatch,
    /// A raw connection set violates negation closure or antisymmetry.
    InvalidConnectionSet,
    /// An index outside the residue class a term is defined on.
    WrongResidueClass { j: u64 },
    /// The spec does not satisfy the reduced-spectrum hypotheses.
    HypothesesNotMet,
    /// Source and target vertex coincide.
    SamePair,
    /// A vertex outside `0..n`.
    VertexOutOfRange { vertex: u64, n: u64 },
    /// No perfect state transfer time exists for the pair.
    NotFeasible,
    /// Numeric verification of a witness time failed.
    VerificationFailed { residual: f64 },
    /// An operation restricted to a sub-family received a spec outside it.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Zero => write!(f, "argument must be a positive integer"),
            Error::OutOfRange(n) => write!(f, "argument {n} exceeds 2^30"),
            Error::NonIntegerResidual { value, residual } => {
                write!(f, "sum {value} is not an integer (residual {residual:e})")
            }
            Error::OddModulus(n) => write!(f, "modulus {n} must be even"),
            Error::NotDivisibleByFour(n) => write!(f, "modulus {n} must be divisible by 4"),
            Error::BadResidue(r) => write!(f, "residue class {r} must be 1 or 3"),
            Error::BadModulus(n) => {
                write!(f, "directed classes require n divisible by 4 (n = {n})")
            }
            Error::BadDivisor {
                divisor,
                directed: false,
            } => {
                write!(
                    f,
                    "undirected class {divisor} must be a proper divisor of n"
                )
            }
            Error::BadDivisor {
                divisor,
                directed: true,
            } => {
                write!(f, "directed class {divisor} must divide n/4")
            }
            Error::Overlap(d) => write!(f, "divisor {d} is both undirected and directed"),
            Error::SigmaDomainMismatch => {
                write!(f, "sign map domain must equal the directed divisor set")
            }
            Error::InvalidConnectionSet => write!(f, "connection set violates its invariants"),
            Error::WrongResidueClass { j } => {
                write!(
                    f,
                    "index {j} is outside the residue class of the requested term"
                )
            }
            Error::HypothesesNotMet => write!(f, "spec does not meet the reduced-form hypotheses"),
            Error::SamePair => write!(f, "source and target vertex coincide"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::NotFeasible => write!(f, "no perfect state transfer between the pair"),
            Error::VerificationFailed { residual } => {
                write!(
                    f,
                    "witness failed numeric verification (residual {residual:e})"
                )
            }
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
