//! Statistics of single qubits and entangled qubit pairs under measurement-basis
//! rotations.
//!
//! The crate has three layers:
//!
//! * [`qubit`] — single two-level systems: Bloch-sphere directions, basis
//!   frames, the 2×2 rotation matrices connecting them, and the resulting
//!   outcome probabilities and fringe visibilities.
//! * [`pair`] — entangled pairs of qubits: correlation-sign conventions,
//!   entanglement-strength and basis-shape ratios, closed-form joint and
//!   local probabilities, and their visibilities.
//! * [`oracle`] — an independent brute-force reference path: explicit
//!   four-amplitude state vectors, tensor-product rotations, Born-rule
//!   probabilities, partial traces, and empirical fringe contrast. Every
//!   closed form in the other two layers is checked against it.
//!
//! [`sweep`] evaluates parameter grids over the pair quantities (in parallel
//! when the `parallel` feature is on) and [`verify`] runs the full
//! self-verification suite on seeded pseudo-random inputs.

pub mod error;
pub mod oracle;
pub mod pair;
mod par;
pub mod qubit;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};

/// Tolerance for algebraic identities: unitarity, normalization, and
/// agreement between closed forms and the Born-rule reference path.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

/// Tolerance for fringe visibilities recovered from finite phase sweeps,
/// where grid discretization dominates round-off.
pub const FRINGE_TOL: f64 = 1e-9;

/// Tolerance for identities that hold exactly up to round-off, such as the
/// reduced state of a pair being diagonal in the computational basis.
pub const EXACT_TOL: f64 = 1e-15;

/// Normalization gate applied to externally supplied amplitude pairs before
/// building a rotation matrix from them.
pub const NORM_GATE: f64 = 1e-9;
