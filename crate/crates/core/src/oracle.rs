//! Brute-force reference path for everything the closed forms claim.
//!
//! Works directly on the four-amplitude state vector of a qubit pair in the
//! ordered product basis `(↑↑, ↑↓, ↓↑, ↓↓)`, first index qubit A, second
//! qubit B. Measurement in rotated frames is realized by applying the
//! entrywise-conjugated basis matrix per side (amplitudes transform with the
//! conjugate of the ket matrix) and squaring magnitudes — no closed-form
//! shortcut anywhere, which is the point.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::pair::{CorrelationSign, JointProbabilities, PairAmplitudes};
use crate::qubit::{BasisFrame, BasisTransform};
use crate::ALGEBRAIC_TOL;

/// Selector for the qubit kept by a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    A,
    B,
}

/// A pure state of two qubits over `(↑↑, ↑↓, ↓↑, ↓↓)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitVector {
    amps: [Complex64; 4],
}

impl TwoQubitVector {
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        for c in &amps {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::InputDomain {
                    what: "state amplitude",
                    value: c.norm_sqr(),
                });
            }
        }
        let vec = Self { amps };
        let miss = (vec.norm_sqr() - 1.0).abs();
        if miss > ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "two-qubit state normalization",
                deviation: miss,
            });
        }
        Ok(vec)
    }

    pub fn amps(&self) -> &[Complex64; 4] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Places a pair's branch amplitudes into the explicit state vector:
/// `(0, p, q e^{iα}, 0)` for the `(−)` sign, `(p, 0, 0, q e^{iα})` for `(+)`.
pub fn expand_pair(pair: &PairAmplitudes) -> TwoQubitVector {
    let zero = Complex64::new(0.0, 0.0);
    let first = Complex64::new(pair.amp_first(), 0.0);
    let second = pair.amp_second_complex();
    let amps = match pair.sign() {
        CorrelationSign::Minus => [zero, first, second, zero],
        CorrelationSign::Plus => [first, zero, zero, second],
    };
    TwoQubitVector { amps }
}

/// Re-expresses `vec` in the product eigenbasis of the two frames and returns
/// the squared magnitudes as joint outcome probabilities.
pub fn joint_born(
    vec: &TwoQubitVector,
    frame_a: &BasisFrame,
    frame_b: &BasisFrame,
) -> JointProbabilities {
    let rot_a = BasisTransform::from_frame(frame_a).conj();
    let rot_b = BasisTransform::from_frame(frame_b).conj();
    let a = &vec.amps;
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..2 {
                for l in 0..2 {
                    acc += rot_a.entry(i, k) * rot_b.entry(j, l) * a[2 * k + l];
                }
            }
            out[2 * i + j] = acc;
        }
    }
    JointProbabilities {
        p_ee: out[0].norm_sqr(),
        p_eb: out[1].norm_sqr(),
        p_be: out[2].norm_sqr(),
        p_bb: out[3].norm_sqr(),
    }
}

/// A 2×2 density matrix: Hermitian, trace one, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    entries: [[Complex64; 2]; 2],
}

impl DensityMatrix2 {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let hermitian_miss = (entries[0][1] - entries[1][0].conj())
            .norm()
            .max(entries[0][0].im.abs())
            .max(entries[1][1].im.abs());
        if hermitian_miss > ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "density matrix hermiticity",
                deviation: hermitian_miss,
            });
        }
        let trace_miss = (entries[0][0].re + entries[1][1].re - 1.0).abs();
        if trace_miss > ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "density matrix trace",
                deviation: trace_miss,
            });
        }
        let rho = Self { entries };
        let (lo, _) = rho.eigenvalues();
        if lo < -ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "density matrix positivity",
                deviation: -lo,
            });
        }
        Ok(rho)
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0].re + self.entries[1][1].re
    }

    /// `Tr(ρ²)`: 1 for a pure state, 1/2 for the maximally mixed one.
    pub fn purity(&self) -> f64 {
        let d0 = self.entries[0][0].re;
        let d1 = self.entries[1][1].re;
        d0 * d0 + d1 * d1 + 2.0 * self.entries[0][1].norm_sqr()
    }

    /// Eigenvalues `(λ_min, λ_max)` from the closed 2×2 Hermitian formula;
    /// no iterative solver involved.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let d0 = self.entries[0][0].re;
        let d1 = self.entries[1][1].re;
        let mid = 0.5 * (d0 + d1);
        let radius = (0.25 * (d0 - d1) * (d0 - d1) + self.entries[0][1].norm_sqr()).sqrt();
        (mid - radius, mid + radius)
    }
}

/// Partial trace of a pure two-qubit state, keeping the selected qubit.
pub fn reduce(vec: &TwoQubitVector, which: Qubit) -> DensityMatrix2 {
    let a = &vec.amps;
    let element = |r: usize, c: usize| -> Complex64 {
        match which {
            // trace out B: ρ_A[r][c] = Σ_j a[(r,j)]·conj(a[(c,j)])
            Qubit::A => a[2 * r] * a[2 * c].conj() + a[2 * r + 1] * a[2 * c + 1].conj(),
            // trace out A: ρ_B[r][c] = Σ_i a[(i,r)]·conj(a[(i,c)])
            Qubit::B => a[r] * a[c].conj() + a[2 + r] * a[2 + c].conj(),
        }
    };
    DensityMatrix2 {
        entries: [
            [element(0, 0), element(0, 1)],
            [element(1, 0), element(1, 1)],
        ],
    }
}

/// Magnitude of the off-diagonal of `ρ` expressed in the given frame:
/// `|(R·ρ·R†)_{01}|`. A frame at polar angle zero reads off the
/// computational-basis coherence directly.
pub fn offdiag_magnitude(rho: &DensityMatrix2, frame: &BasisFrame) -> f64 {
    let r = BasisTransform::from_frame(frame);
    // (R ρ R†)_{01} = Σ_{k,l} R_{0k} ρ_{kl} conj(R_{1l})
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..2 {
        for l in 0..2 {
            acc += r.entry(0, k) * rho.entries[k][l] * r.entry(1, l).conj();
        }
    }
    acc.norm()
}

/// Fringe contrast `(max − min)/(max + min)` of a probability curve sampled
/// on a uniform phase grid `α_k = 2πk/N`, `k = 0..N`.
///
/// Returns 0 for a constant curve (including the all-zero one). Grids below
/// 64 points under-resolve the extrema and are rejected.
pub fn empirical_visibility<F>(curve: F, grid_points: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if grid_points < 64 {
        return Err(Error::InputDomain {
            what: "phase grid points",
            value: grid_points as f64,
        });
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..grid_points {
        let value = curve(TAU * k as f64 / grid_points as f64);
        lo = lo.min(value);
        hi = hi.max(value);
    }
    if hi + lo == 0.0 {
        return Ok(0.0);
    }
    Ok((hi - lo) / (hi + lo))
}

/// Convenience: checks that a reduced state is diagonal `diag(d0, d1)` to the
/// exactness tolerance, returning the worst entrywise deviation.
pub fn diagonal_deviation(rho: &DensityMatrix2, d0: f64, d1: f64) -> f64 {
    let mut dev = (rho.entry(0, 0) - Complex64::new(d0, 0.0)).norm();
    dev = dev.max((rho.entry(1, 1) - Complex64::new(d1, 0.0)).norm());
    dev = dev.max(rho.entry(0, 1).norm());
    dev.max(rho.entry(1, 0).norm())
}
