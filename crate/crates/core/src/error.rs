use thiserror::Error;

use crate::qcore::Qubit;

/// Errors produced by state and operator construction and by the protocol.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate qubit label {0:?}")]
    DuplicateLabel(Qubit),
    #[error("label {0:?} is not carried by this value")]
    MissingLabel(Qubit),
    #[error("amplitude vector has length {got}, expected {expected}")]
    BadDimension { got: usize, expected: usize },
    #[error("label sets differ: {0:?} vs {1:?}")]
    LabelMismatch(Vec<Qubit>, Vec<Qubit>),
    #[error("amplitudes contain a non-finite entry")]
    NonFiniteAmplitude,
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("not PSD (eigenvalue {0:.3e})")]
    NotPsd(f64),
    #[error("not a density matrix: {0}")]
    NotDensity(String),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("measurement axis is not a unit vector (norm {0})")]
    AxisNotUnit(f64),
    #[error("measurement strength g = {0} lies outside [0, 1]")]
    StrengthOutOfRange(f64),
    #[error("Jτ = {0} lies outside [0, π/4]")]
    CouplingOutOfRange(f64),
    #[error("operator is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("postselection probability vanishes")]
    DegeneratePostselection,
    #[error("branch amplitudes are not normalized (|α|² + |β|² = {0})")]
    AmplitudesNotNormalized(f64),
    #[error("angle {0} lies outside [0, 2π]")]
    AngleOutOfRange(f64),
    #[error("arccos argument {0} lies outside [-1, 1]")]
    ArccosDomain(f64),
    #[error("{0} must be strictly positive")]
    NonPositive(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
