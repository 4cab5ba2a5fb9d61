//! Entangled qubit pairs: construction, entanglement strength, rotated-basis
//! decomposition, and the closed-form correlation and local statistics.
//!
//! A pair is a two-branch superposition with real nonnegative branch
//! amplitudes `p, q` (`p² + q² = 1`) and relative phase α. The `(−)`
//! correlation sign places the branches on opposite single-qubit outcomes
//! (`p|↑↓⟩ + q e^{iα}|↓↑⟩`), the `(+)` sign on equal ones
//! (`p|↑↑⟩ + q e^{iα}|↓↓⟩`).
//!
//! Closed forms exist for the `(−)` pair; the `(+)` pair is evaluated through
//! the Born-rule oracle with the frame azimuth canonicalized to zero.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oracle;
use crate::qubit::BasisFrame;

/// Whether the two branches of the superposition pair opposite or equal
/// single-qubit outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationSign {
    /// Opposite outcomes: `p|↑↓⟩ + q e^{iα}|↓↑⟩`.
    Minus,
    /// Equal outcomes: `p|↑↑⟩ + q e^{iα}|↓↓⟩`.
    Plus,
}

impl CorrelationSign {
    pub fn label(&self) -> &'static str {
        match self {
            CorrelationSign::Minus => "minus",
            CorrelationSign::Plus => "plus",
        }
    }
}

/// Normalized amplitudes of an entangled pair: branch weights `p ≥ 0`,
/// `q ≥ 0` with `p² + q² = 1`, relative phase in `[0, 2π)`, and a
/// correlation sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairAmplitudes {
    amp_first: f64,
    amp_second: f64,
    phase: f64,
    sign: CorrelationSign,
}

impl PairAmplitudes {
    /// Builds a pair from the squared weight of the first branch.
    pub fn new(first_weight: f64, phase: f64, sign: CorrelationSign) -> Result<Self> {
        if !(0.0..=1.0).contains(&first_weight) {
            return Err(Error::InputDomain {
                what: "branch weight",
                value: first_weight,
            });
        }
        if !phase.is_finite() {
            return Err(Error::InputDomain {
                what: "pair phase",
                value: phase,
            });
        }
        Ok(Self {
            amp_first: first_weight.sqrt(),
            amp_second: (1.0 - first_weight).sqrt(),
            phase: crate::qubit::wrap_angle(phase),
            sign,
        })
    }

    /// Amplitude of the first branch (`p`).
    pub fn amp_first(&self) -> f64 {
        self.amp_first
    }

    /// Amplitude of the second branch (`q`).
    pub fn amp_second(&self) -> f64 {
        self.amp_second
    }

    /// Relative phase α of the second branch.
    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn sign(&self) -> CorrelationSign {
        self.sign
    }

    /// Second-branch amplitude with its phase attached: `q e^{iα}`.
    pub fn amp_second_complex(&self) -> Complex64 {
        Complex64::from_polar(self.amp_second, self.phase)
    }

    /// Entanglement strength `ε = p²/q²`; `+∞` when the second branch is
    /// absent (the disentangled limit).
    pub fn strength(&self) -> f64 {
        let q2 = self.amp_second * self.amp_second;
        if q2 == 0.0 {
            f64::INFINITY
        } else {
            (self.amp_first * self.amp_first) / q2
        }
    }
}

/// Branch probabilities `(P_p, P_q) = (ε/(1+ε), 1/(1+ε))` for a given
/// entanglement strength; the `+∞` sentinel maps to `(1, 0)`.
pub fn weights_from_strength(strength: f64) -> Result<(f64, f64)> {
    if strength.is_nan() || strength < 0.0 {
        return Err(Error::InputDomain {
            what: "entanglement strength",
            value: strength,
        });
    }
    if strength.is_infinite() {
        return Ok((1.0, 0.0));
    }
    Ok((strength / (1.0 + strength), 1.0 / (1.0 + strength)))
}

/// The two ratios that fully parametrize pair statistics: entanglement
/// strength `ε = p²/q²` and basis shape `σ = m²/n²`. Either may carry the
/// `+∞` sentinel for the single-branch / computational-basis limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioParams {
    epsilon: f64,
    sigma: f64,
}

impl RatioParams {
    pub fn new(epsilon: f64, sigma: f64) -> Result<Self> {
        for (what, value) in [("epsilon", epsilon), ("sigma", sigma)] {
            if value.is_nan() || value < 0.0 {
                return Err(Error::InputDomain { what, value });
            }
        }
        Ok(Self { epsilon, sigma })
    }

    pub fn from_pair_frame(pair: &PairAmplitudes, frame: &BasisFrame) -> Self {
        Self {
            epsilon: pair.strength(),
            sigma: frame.basis_ratio(),
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// `(p², q²)` recovered from ε.
    pub fn pair_weights(&self) -> (f64, f64) {
        weights_from_strength(self.epsilon).expect("validated at construction")
    }

    /// `(m², n²)` recovered from σ.
    pub fn frame_weights(&self) -> (f64, f64) {
        let sigma = self.sigma;
        if sigma.is_infinite() {
            (1.0, 0.0)
        } else {
            (sigma / (1.0 + sigma), 1.0 / (1.0 + sigma))
        }
    }
}

/// Coefficients of the `(−)` pair re-expressed in a rotated basis.
///
/// `same` multiplies the equal-outcome branch `|ee⟩` (and, with opposite
/// sign, `|ēē⟩`); `eb` and `be` govern the two opposite-outcome components.
/// They satisfy `2|same|² + |eb|² + |be|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedPairCoefficients {
    pub same: Complex64,
    pub eb: Complex64,
    pub be: Complex64,
}

impl RotatedPairCoefficients {
    pub fn norm_sqr(&self) -> f64 {
        2.0 * self.same.norm_sqr() + self.eb.norm_sqr() + self.be.norm_sqr()
    }
}

/// Rotated-basis coefficients of a `(−)` pair:
/// `same = (p + q e^{iα})mn`, `eb = pm² − q e^{iα}n²`, `be = pn² − q e^{iα}m²`.
///
/// The `(+)` pair has no closed form of this shape; requesting it returns
/// [`Error::UnsupportedAnalyticForm`] and callers should expand through
/// [`oracle::joint_born`] instead.
pub fn rotated_coefficients(
    pair: &PairAmplitudes,
    frame: &BasisFrame,
) -> Result<RotatedPairCoefficients> {
    if pair.sign() == CorrelationSign::Plus {
        return Err(Error::UnsupportedAnalyticForm);
    }
    let p = pair.amp_first();
    let q = pair.amp_second_complex();
    let (m, n) = (frame.cos_half(), frame.sin_half());
    Ok(RotatedPairCoefficients {
        same: (p + q) * (m * n),
        eb: p * m * m - q * (n * n),
        be: p * n * n - q * (m * m),
    })
}

/// The four outcome probabilities of a two-sided measurement in a shared
/// basis frame, ordered `(e,e), (e,ē), (ē,e), (ē,ē)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointProbabilities {
    pub p_ee: f64,
    pub p_eb: f64,
    pub p_be: f64,
    pub p_bb: f64,
}

impl JointProbabilities {
    /// Validates entries in `[0, 1]` (round-off below zero is clamped) and a
    /// unit total.
    pub fn new(p_ee: f64, p_eb: f64, p_be: f64, p_bb: f64) -> Result<Self> {
        let mut entries = [p_ee, p_eb, p_be, p_bb];
        for value in &mut entries {
            if !(-crate::ALGEBRAIC_TOL..=1.0 + crate::ALGEBRAIC_TOL).contains(value) {
                return Err(Error::InputDomain {
                    what: "joint probability",
                    value: *value,
                });
            }
            *value = value.clamp(0.0, 1.0);
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > crate::ALGEBRAIC_TOL {
            return Err(Error::InvariantViolation {
                what: "joint probability total",
                deviation: (sum - 1.0).abs(),
            });
        }
        let [p_ee, p_eb, p_be, p_bb] = entries;
        Ok(Self {
            p_ee,
            p_eb,
            p_be,
            p_bb,
        })
    }

    pub fn sum(&self) -> f64 {
        self.p_ee + self.p_eb + self.p_be + self.p_bb
    }

    /// Total probability of equal outcomes.
    pub fn plus_total(&self) -> f64 {
        self.p_ee + self.p_bb
    }

    /// Total probability of opposite outcomes.
    pub fn minus_total(&self) -> f64 {
        self.p_eb + self.p_be
    }

    /// Marginal `(P(e), P(ē))` for the first qubit.
    pub fn local_first(&self) -> (f64, f64) {
        (self.p_ee + self.p_eb, self.p_be + self.p_bb)
    }

    /// Marginal `(P(e), P(ē))` for the second qubit.
    pub fn local_second(&self) -> (f64, f64) {
        (self.p_ee + self.p_be, self.p_eb + self.p_bb)
    }
}

/// Joint outcome probabilities at the given ratios and phase.
///
/// For the `(−)` pair these are the closed forms
///
/// ```text
/// P(e,e) = P(ē,ē) = σ(ε + 1 + 2√ε·cos α) / ((1+ε)(1+σ)²)
/// P(e,ē) = (εσ² + 1 − 2√ε·σ·cos α) / ((1+ε)(1+σ)²)
/// P(ē,e) = (ε + σ² − 2√ε·σ·cos α) / ((1+ε)(1+σ)²)
/// ```
///
/// evaluated through the branch weights `(p², q², m², n²)` so the `+∞`
/// sentinels stay finite. The `(+)` pair goes through the Born-rule oracle
/// at frame azimuth zero.
pub fn correlation_probs(
    params: &RatioParams,
    phase: f64,
    sign: CorrelationSign,
) -> Result<JointProbabilities> {
    if !phase.is_finite() {
        return Err(Error::InputDomain {
            what: "pair phase",
            value: phase,
        });
    }
    let (p2, q2) = params.pair_weights();
    match sign {
        CorrelationSign::Minus => {
            let (m2, n2) = params.frame_weights();
            let pq = (p2 * q2).sqrt();
            let mn2 = m2 * n2;
            let cos = phase.cos();
            let p_ee = mn2 * (1.0 + 2.0 * pq * cos);
            let cross = 2.0 * pq * mn2 * cos;
            // fault-inject builds flip this sign to prove the verify suite catches it
            #[cfg(not(feature = "fault-inject"))]
            let p_eb = p2 * m2 * m2 + q2 * n2 * n2 - cross;
            #[cfg(feature = "fault-inject")]
            let p_eb = p2 * m2 * m2 + q2 * n2 * n2 + cross;
            let p_be = p2 * n2 * n2 + q2 * m2 * m2 - cross;
            JointProbabilities::new(p_ee, p_eb, p_be, p_ee)
        }
        CorrelationSign::Plus => {
            let pair = PairAmplitudes::new(p2, phase, CorrelationSign::Plus)?;
            let frame = BasisFrame::from_basis_ratio(params.sigma())?;
            Ok(oracle::joint_born(
                &oracle::expand_pair(&pair),
                &frame,
                &frame,
            ))
        }
    }
}

/// Fringe visibilities of the total equal- and opposite-outcome probabilities
/// of the `(−)` pair as the phase sweeps:
///
/// ```text
/// V⁺ = 2√ε / (1+ε)            V⁻ = 4√ε·σ / ((1+ε)(1+σ²))
/// ```
///
/// Both reduce to `2pq` and `4pq·m²n²/(m⁴+n⁴)` in branch weights, which is
/// how they are computed so the `+∞` sentinels yield the limit value 0.
pub fn pair_visibilities(params: &RatioParams) -> (f64, f64) {
    let (p2, q2) = params.pair_weights();
    let (m2, n2) = params.frame_weights();
    let pq = (p2 * q2).sqrt();
    let v_plus = 2.0 * pq;
    let quartic = m2 * m2 + n2 * n2;
    let v_minus = if quartic == 0.0 {
        0.0
    } else {
        4.0 * pq * m2 * n2 / quartic
    };
    (v_plus, v_minus)
}

/// Phase-independent local outcome probabilities of either-sign pairs:
///
/// ```text
/// P(e) = (εσ + 1) / ((1+ε)(1+σ))      P(ē) = (ε + σ) / ((1+ε)(1+σ))
/// ```
///
/// equivalently `p²m² + q²n²` and `p²n² + q²m²` in branch weights.
pub fn local_probs(params: &RatioParams) -> (f64, f64) {
    let (p2, q2) = params.pair_weights();
    let (m2, n2) = params.frame_weights();
    (p2 * m2 + q2 * n2, p2 * n2 + q2 * m2)
}
