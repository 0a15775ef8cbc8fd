//! Numerical tolerances used across the crate.
//!
//! Every comparison in the library is a max-norm test against one of the
//! constants below, so a tolerance is never invented at a call site.

/// Max-norm Hermiticity deviation allowed for a matrix flagged as a density.
pub const DENSITY_HERM_TOL: f64 = 1e-12;

/// Smallest eigenvalue a density matrix may carry before it stops counting
/// as positive semidefinite.
pub const DENSITY_PSD_FLOOR: f64 = -1e-10;

/// Deviation allowed between the trace of a density and its stored weight.
pub const DENSITY_TRACE_TOL: f64 = 1e-12;

/// Max-norm Hermiticity deviation accepted by the eigensolver.
pub const EIG_HERM_TOL: f64 = 1e-10;

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
pub const JACOBI_OFF_TOL: f64 = 1e-14;

/// Hard cap on Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Per-pair eigen residual `‖Hv - λv‖` guaranteed by the eigensolver.
pub const EIG_RESIDUAL_TOL: f64 = 1e-10;

/// Eigenvalues of a nominally PSD matrix below this bound are an error;
/// negatives above it are clamped to zero before taking square roots.
pub const PSD_SQRT_ERROR_FLOOR: f64 = -1e-8;

/// Square-root self-consistency: `‖(√ρ)² - ρ‖_max` stays below this.
pub const PSD_SQRT_TOL: f64 = 1e-9;

/// Norm deviation allowed for states that must arrive normalized
/// (measurement inputs, protocol inputs, postselection targets) and for
/// measurement axes.
pub const NORM_TOL: f64 = 1e-12;

/// Deviation allowed in `|α|² + |β|² = 1` for branch amplitudes.
pub const AMP_NORM_TOL: f64 = 1e-12;

/// Completeness deviation allowed for a Kraus pair, `‖L₊†L₊ + L₋†L₋ - I‖_max`.
pub const KRAUS_COMPLETENESS_TOL: f64 = 1e-12;

/// Max-norm deviation from unitarity accepted by `extract_kraus`.
pub const UNITARY_TOL: f64 = 1e-12;

/// Total postselected weight below which a protocol run counts as degenerate.
pub const DEGENERATE_WEIGHT: f64 = 1e-14;

/// Normalized colinearity statistic below which two single-qubit vectors
/// count as parallel.
pub const COLINEAR_STAT_TOL: f64 = 1e-9;

/// Projector overlap above which a single-qubit state counts as an
/// eigenstate of the measured observable.
pub const EIGENSTATE_OVERLAP_TOL: f64 = 1e-12;

/// Agreement required between a closed form and its numeric counterpart on
/// parameter grids (concurrence, Horodecki γ, boundary consistency).
pub const CLOSED_NUMERIC_TOL: f64 = 1e-9;

/// Agreement required between closed-form and simulated sector weights, and
/// between the two protocol paths' weights.
pub const WEIGHT_MATCH_TOL: f64 = 1e-12;

/// `1 - fidelity` allowed when comparing states up to a global phase.
pub const PHASE_FIDELITY_TOL: f64 = 1e-10;

/// Concurrence deviation allowed for the maximally entangled sectors.
pub const BELL_SECTOR_TOL: f64 = 1e-10;

/// Concurrence below which a state counts as unentangled in the
/// readout-averaging probe.
pub const PROBE_CONCURRENCE_TOL: f64 = 1e-8;

/// Purity above which a probed state counts as pure.
pub const PROBE_PURITY_TOL: f64 = 1e-10;

/// Slack allowed beyond the 1/2 ceiling of the readout-averaged concurrence.
pub const CONCURRENCE_BOUND_SLACK: f64 = 1e-9;

/// Max-norm agreement required between factorized unitaries and the matrix
/// exponentials of their Hamiltonians.
pub const EXPM_TOL: f64 = 1e-9;

/// Slack on the arccos argument clamp in the Bell-boundary closed form.
pub const ARCCOS_CLAMP_TOL: f64 = 1e-12;
