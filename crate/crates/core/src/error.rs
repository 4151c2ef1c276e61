//! Crate-wide error type.

use core::fmt;

/// Errors reported by construction, validation, and transform operations.
///
/// Structure-validation variants carry the position of the first failure so
/// that file parsers can report precise diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument was out of its legal range.
    InvalidParameter(&'static str),
    /// A construction was refused because it would exceed a hard size cap.
    SizeLimit { requested: usize, max: usize },
    /// A table row has the wrong length.
    TableNotSquare { row: usize, len: usize, expected: usize },
    /// A table entry is outside `0..order`.
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    /// A Cayley-table row repeats an element.
    RowNotPermutation { row: usize },
    /// A Cayley-table column repeats an element.
    ColumnNotPermutation { col: usize },
    /// The product table violates `(gh)k = g(hk)` at the named triple.
    NotAssociative { g: usize, h: usize, k: usize },
    /// No two-sided identity element exists.
    NoIdentity,
    /// The named element has no two-sided inverse.
    NoInverse { element: usize },
    /// The identity element moves the named point.
    IdentityActsNontrivially { point: usize },
    /// The action table violates `g·(h·x) = (gh)·x` at the named triple.
    ActionIncompatible { g: usize, h: usize, point: usize },
    /// The named element's action row is not a permutation of the points.
    ActionNotPermutation { element: usize },
    /// Two objects that must live on the same space have different sizes.
    DimensionMismatch { expected: usize, found: usize },
    /// Two functions carry different measures (weights or side tag).
    MeasureMismatch,
    /// The measure is not invariant under the action of the named element.
    MeasureNotInvariant { element: usize },
    /// A nonzero vector was required.
    ZeroVector,
    /// The candidate subspace is not invariant under the operator family.
    NotInvariantSubspace { residual: f64 },
    /// The operation requires a certified-irreducible subspace.
    NotIrreducible { commutant_dim: usize },
    /// The function does not lie in the required subspace.
    OutsideSubspace { residual: f64 },
    /// An orthonormal basis with at least one vector was required.
    EmptyBasis,
    /// The wavelet's admissibility integral diverges or vanishes.
    InadmissibleWavelet,
    /// Sampled signals disagree with the grid in length or spacing.
    SignalGridMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::SizeLimit { requested, max } => {
                write!(f, "size {requested} exceeds the hard cap {max}")
            }
            Error::TableNotSquare { row, len, expected } => {
                write!(f, "table row {row} has length {len}, expected {expected}")
            }
            Error::EntryOutOfRange { row, col, value, order } => write!(
                f,
                "table entry at row {row}, column {col} is {value}, outside 0..{order}"
            ),
            Error::RowNotPermutation { row } => {
                write!(f, "cayley row {row} is not a permutation")
            }
            Error::ColumnNotPermutation { col } => {
                write!(f, "cayley column {col} is not a permutation")
            }
            Error::NotAssociative { g, h, k } => write!(
                f,
                "product table is not associative at triple (g, h, k) = ({g}, {h}, {k})"
            ),
            Error::NoIdentity => write!(f, "no two-sided identity element"),
            Error::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            Error::IdentityActsNontrivially { point } => {
                write!(f, "identity element moves point {point}")
            }
            Error::ActionIncompatible { g, h, point } => write!(
                f,
                "action violates g·(h·x) = (gh)·x at (g, h, x) = ({g}, {h}, {point})"
            ),
            Error::ActionNotPermutation { element } => {
                write!(f, "action of element {element} is not a permutation of the points")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::MeasureMismatch => write!(f, "functions live on different measure spaces"),
            Error::MeasureNotInvariant { element } => {
                write!(f, "measure is not invariant under element {element}")
            }
            Error::ZeroVector => write!(f, "operation requires a nonzero vector"),
            Error::NotInvariantSubspace { residual } => {
                write!(f, "subspace is not invariant (residual {residual:.3e})")
            }
            Error::NotIrreducible { commutant_dim } => write!(
                f,
                "subspace is not irreducible (restricted commutant dimension {commutant_dim})"
            ),
            Error::OutsideSubspace { residual } => {
                write!(f, "function lies outside the subspace (residual {residual:.3e})")
            }
            Error::EmptyBasis => write!(f, "subspace basis is empty"),
            Error::InadmissibleWavelet => {
                write!(f, "wavelet is inadmissible (admissibility integral diverges or vanishes)")
            }
            Error::SignalGridMismatch => {
                write!(f, "sampled signal does not match the grid (length or spacing)")
            }
        }
    }
}

impl core::error::Error for Error {}
