//! Single two-level systems: Bloch-sphere directions, measurement frames,
//! the 2×2 rotation matrices connecting bases, and the interference
//! statistics of a state measured in a rotated frame.
//!
//! Conventions: a direction with polar angle θ and azimuth φ labels the state
//! `cos(θ/2)|↑⟩ + sin(θ/2)e^{iφ}|↓⟩`; both half-angle amplitudes are kept
//! real and nonnegative, so every phase lives in the azimuth.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::{ALGEBRAIC_TOL, NORM_GATE};

/// Slack for polar angles that land just outside `[0, π]` through round-off.
const POLAR_SLACK: f64 = 1e-12;

fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InputDomain { what, value })
    }
}

/// Reduces an angle to `[0, 2π)`.
pub(crate) fn wrap_angle(angle: f64) -> f64 {
    let r = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn validate_polar(what: &'static str, polar: f64) -> Result<f64> {
    let polar = ensure_finite(what, polar)?;
    if !(-POLAR_SLACK..=PI + POLAR_SLACK).contains(&polar) {
        return Err(Error::InputDomain { what, value: polar });
    }
    Ok(polar.clamp(0.0, PI))
}

/// A physical-space direction labeling a spin state or measurement axis.
///
/// The polar angle is confined to `[0, π]` and the azimuth reduced to
/// `[0, 2π)`. At the poles the azimuth is physically irrelevant and is
/// canonicalized to zero so direction equality is well defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochDirection {
    polar: f64,
    azimuth: f64,
}

impl BlochDirection {
    pub fn new(polar: f64, azimuth: f64) -> Result<Self> {
        let polar = validate_polar("polar angle", polar)?;
        let azimuth = ensure_finite("azimuth", azimuth)?;
        let azimuth = if polar == 0.0 || polar == PI {
            0.0
        } else {
            wrap_angle(azimuth)
        };
        Ok(Self { polar, azimuth })
    }

    pub fn polar(&self) -> f64 {
        self.polar
    }

    pub fn azimuth(&self) -> f64 {
        self.azimuth
    }

    /// Amplitude of the `|↑⟩` component: `cos(θ/2)`, nonnegative on `[0, π]`.
    pub fn cos_half(&self) -> f64 {
        (0.5 * self.polar).cos()
    }

    /// Magnitude of the `|↓⟩` component: `sin(θ/2)`, nonnegative on `[0, π]`.
    pub fn sin_half(&self) -> f64 {
        (0.5 * self.polar).sin()
    }

    /// The spin state pointing along this direction:
    /// `cos(θ/2)|↑⟩ + sin(θ/2)e^{iφ}|↓⟩`.
    pub fn state(&self) -> QubitState {
        QubitState {
            up: Complex64::new(self.cos_half(), 0.0),
            down: Complex64::from_polar(self.sin_half(), self.azimuth),
        }
    }

    /// The orthogonal partner state, diametrically opposite on the sphere:
    /// `sin(θ/2)|↑⟩ − cos(θ/2)e^{iφ}|↓⟩`.
    pub fn antipode(&self) -> QubitState {
        QubitState {
            up: Complex64::new(self.sin_half(), 0.0),
            down: -Complex64::from_polar(self.cos_half(), self.azimuth),
        }
    }
}

/// A measurement basis along a direction with polar angle χ and azimuth δ.
///
/// The basis states are `|e⟩ = m|↑⟩ + n e^{iδ}|↓⟩` and
/// `|ē⟩ = n|↑⟩ − m e^{iδ}|↓⟩` with `m = cos(χ/2)`, `n = sin(χ/2)`; the
/// half-angle amplitudes are cached at construction and satisfy
/// `m² + n² = 1` to round-off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisFrame {
    polar: f64,
    azimuth: f64,
    cos_half: f64,
    sin_half: f64,
}

impl BasisFrame {
    pub fn new(polar: f64, azimuth: f64) -> Result<Self> {
        let polar = validate_polar("frame polar angle", polar)?;
        let azimuth = wrap_angle(ensure_finite("frame azimuth", azimuth)?);
        Ok(Self {
            polar,
            azimuth,
            cos_half: (0.5 * polar).cos(),
            sin_half: (0.5 * polar).sin(),
        })
    }

    /// Frame at azimuth zero whose amplitude ratio `m²/n²` equals `ratio`.
    ///
    /// `+∞` selects the computational basis itself (χ = 0); `0` the inverted
    /// one (χ = π).
    pub fn from_basis_ratio(ratio: f64) -> Result<Self> {
        if ratio.is_nan() || ratio < 0.0 {
            return Err(Error::InputDomain {
                what: "basis ratio",
                value: ratio,
            });
        }
        // χ/2 = atan(n/m) = atan(1/√ratio); atan2 handles both sentinels
        Self::new(2.0 * 1f64.atan2(ratio.sqrt()), 0.0)
    }

    pub fn polar(&self) -> f64 {
        self.polar
    }

    pub fn azimuth(&self) -> f64 {
        self.azimuth
    }

    /// `m = cos(χ/2)`.
    pub fn cos_half(&self) -> f64 {
        self.cos_half
    }

    /// `n = sin(χ/2)`.
    pub fn sin_half(&self) -> f64 {
        self.sin_half
    }

    /// `σ = m²/n²`; `+∞` when the frame is the computational basis.
    pub fn basis_ratio(&self) -> f64 {
        let m2 = self.cos_half * self.cos_half;
        let n2 = self.sin_half * self.sin_half;
        if n2 == 0.0 {
            f64::INFINITY
        } else {
            m2 / n2
        }
    }
}

/// A pure state of one qubit: complex amplitudes over `{|↑⟩, |↓⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    up: Complex64,
    down: Complex64,
}

impl QubitState {
    /// Builds a state from raw amplitudes, requiring finite components and
    /// unit norm within `ALGEBRAIC_TOL`.
    pub fn new(up: Complex64, down: Complex64) -> Result<Self> {
        for (what, c) in [("up amplitude", up), ("down amplitude", down)] {
            ensure_finite(what, c.re)?;
            ensure_finite(what, c.im)?;
        }
        let norm = up.norm_sqr() + down.norm_sqr();
        if (norm - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "qubit state normalization",
                deviation: (norm - 1.0).abs(),
            });
        }
        Ok(Self { up, down })
    }

    pub fn up(&self) -> Complex64 {
        self.up
    }

    pub fn down(&self) -> Complex64 {
        self.down
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    /// Hermitian inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &QubitState) -> Complex64 {
        self.up.conj() * other.up + self.down.conj() * other.down
    }
}

/// A 2×2 basis-change matrix of the form `[[a, b e^{iφ}], [b, −a e^{iφ}]]`.
///
/// Rows are the expansion of the rotated basis kets over `{|↑⟩, |↓⟩}`; the
/// determinant of this form is `−e^{iφ}` and the matrix is unitary whenever
/// `a² + b² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisTransform {
    rows: [[Complex64; 2]; 2],
}

impl BasisTransform {
    /// Builds the matrix from a normalized half-angle amplitude pair and a
    /// phase. Rejects pairs whose squared amplitudes miss 1 by more than
    /// `NORM_GATE`.
    pub fn from_amplitudes(cos_amp: f64, sin_amp: f64, phase: f64) -> Result<Self> {
        let a = ensure_finite("cosine amplitude", cos_amp)?;
        let b = ensure_finite("sine amplitude", sin_amp)?;
        let phase = ensure_finite("phase", phase)?;
        let miss = (a * a + b * b - 1.0).abs();
        if miss > NORM_GATE {
            return Err(Error::InvariantViolation {
                what: "amplitude pair normalization",
                deviation: miss,
            });
        }
        let up = Complex64::from_polar(b, phase);
        let down = -Complex64::from_polar(a, phase);
        Ok(Self {
            rows: [[Complex64::new(a, 0.0), up], [Complex64::new(b, 0.0), down]],
        })
    }

    /// Rotation whose first row is the state along `dir`.
    pub fn from_direction(dir: &BlochDirection) -> Self {
        Self::from_amplitudes(dir.cos_half(), dir.sin_half(), dir.azimuth())
            .expect("direction amplitudes are normalized by construction")
    }

    /// Rotation onto the eigenbasis of `frame`.
    pub fn from_frame(frame: &BasisFrame) -> Self {
        Self::from_amplitudes(frame.cos_half(), frame.sin_half(), frame.azimuth())
            .expect("frame amplitudes are normalized by construction")
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.rows[row][col]
    }

    pub fn determinant(&self) -> Complex64 {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            rows: [
                [self.rows[0][0].conj(), self.rows[1][0].conj()],
                [self.rows[0][1].conj(), self.rows[1][1].conj()],
            ],
        }
    }

    /// Entrywise complex conjugate (the matrix that carries amplitude
    /// columns into the rotated basis).
    pub fn conj(&self) -> Self {
        Self {
            rows: [
                [self.rows[0][0].conj(), self.rows[0][1].conj()],
                [self.rows[1][0].conj(), self.rows[1][1].conj()],
            ],
        }
    }

    /// The inverse of a unitary transform, computed as its adjoint.
    ///
    /// Fails with an invariant violation when the matrix is not unitary
    /// within `ALGEBRAIC_TOL`.
    pub fn adjoint_inverse(&self) -> Result<Self> {
        let dev = self.unitarity_deviation();
        if dev > ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "unitarity",
                deviation: dev,
            });
        }
        Ok(self.adjoint())
    }

    /// Max-norm of `M·M† − I`.
    pub fn unitarity_deviation(&self) -> f64 {
        let product = self.mul(&self.adjoint());
        let mut dev: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let expect = if r == c { 1.0 } else { 0.0 };
                dev = dev.max((product.rows[r][c] - expect).norm());
            }
        }
        dev
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut rows = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (r, row) in rows.iter_mut().enumerate() {
            for (c, out) in row.iter_mut().enumerate() {
                *out = self.rows[r][0] * rhs.rows[0][c] + self.rows[r][1] * rhs.rows[1][c];
            }
        }
        Self { rows }
    }

    /// Applies the matrix to an amplitude column.
    pub fn apply(&self, column: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.rows[0][0] * column[0] + self.rows[0][1] * column[1],
            self.rows[1][0] * column[0] + self.rows[1][1] * column[1],
        ]
    }
}

/// Components `(u, v)` of the state along `dir` over the eigenbasis of
/// `frame`: `u = ⟨e|s⟩ = am + bn e^{iη}`, `v = ⟨ē|s⟩ = an − bm e^{iη}` with
/// `η = φ − δ`.
pub fn components_in_frame(dir: &BlochDirection, frame: &BasisFrame) -> (Complex64, Complex64) {
    let (a, b) = (dir.cos_half(), dir.sin_half());
    let (m, n) = (frame.cos_half(), frame.sin_half());
    let cross = Complex64::from_polar(b, dir.azimuth() - frame.azimuth());
    (m * a + n * cross, n * a - m * cross)
}

/// Probabilities of the two outcomes when the state along `dir` is measured
/// in `frame`:
/// `P(e) = a²m² + b²n² + 2abmn·cos η` and its complement.
pub fn outcome_probs(dir: &BlochDirection, frame: &BasisFrame) -> (f64, f64) {
    let (a, b) = (dir.cos_half(), dir.sin_half());
    let (m, n) = (frame.cos_half(), frame.sin_half());
    let interference = 2.0 * a * b * m * n * (dir.azimuth() - frame.azimuth()).cos();
    let p_e = a * a * m * m + b * b * n * n + interference;
    let p_ebar = a * a * n * n + b * b * m * m - interference;
    (p_e, p_ebar)
}

/// Fringe visibilities of the two outcome probabilities as the relative
/// azimuth η sweeps:
/// `V_e = 2abmn/(a²m² + b²n²)`, `V_ē = 2abmn/(a²n² + b²m²)`.
///
/// When a denominator vanishes the corresponding probability is constant in
/// η, so the visibility is zero by convention.
pub fn fringe_visibilities(polar: f64, frame_polar: f64) -> Result<(f64, f64)> {
    let theta = validate_polar("polar angle", polar)?;
    let chi = validate_polar("frame polar angle", frame_polar)?;
    let (a, b) = ((0.5 * theta).cos(), (0.5 * theta).sin());
    let (m, n) = ((0.5 * chi).cos(), (0.5 * chi).sin());
    let amplitude = 2.0 * a * b * m * n;
    let ratio = |den: f64| if den == 0.0 { 0.0 } else { amplitude / den };
    Ok((
        ratio(a * a * m * m + b * b * n * n),
        ratio(a * a * n * n + b * b * m * m),
    ))
}
