//! Parameter grids over the pair statistics.
//!
//! A sweep fixes every parameter except up to three axes, evaluates one row
//! per grid point, and orders rows lexicographically by grid index with the
//! last axis varying fastest. Evaluation over grid points is embarrassingly
//! parallel; [`SweepSpec::evaluate`] uses the thread pool when the `parallel`
//! feature is on while [`SweepSpec::evaluate_seq`] always runs on the calling
//! thread. The two produce bit-identical rows.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::pair::{
    correlation_probs, local_probs, pair_visibilities, CorrelationSign, PairAmplitudes, RatioParams,
};
use crate::qubit::BasisFrame;
use crate::{oracle, par};

/// A sweepable parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    /// Squared weight of the pair's first branch, in `[0, 1]`.
    P2,
    /// Frame polar angle, in `[0, π]`.
    Chi,
    /// Pair relative phase, in `[0, 2π]` (2π wraps to 0).
    Alpha,
    /// Single-qubit polar angle, carried through for grid labeling.
    Theta,
    /// Single-qubit azimuth, carried through for grid labeling.
    Phi,
    /// Frame azimuth, in `[0, 2π]`.
    Delta,
}

impl SweepParam {
    pub const ALL: [SweepParam; 6] = [
        SweepParam::P2,
        SweepParam::Chi,
        SweepParam::Alpha,
        SweepParam::Theta,
        SweepParam::Phi,
        SweepParam::Delta,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::P2 => "p2",
            SweepParam::Chi => "chi",
            SweepParam::Alpha => "alpha",
            SweepParam::Theta => "theta",
            SweepParam::Phi => "phi",
            SweepParam::Delta => "delta",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|p| p.name() == name)
    }

    fn domain(&self) -> (f64, f64) {
        match self {
            SweepParam::P2 => (0.0, 1.0),
            SweepParam::Chi | SweepParam::Theta => (0.0, PI),
            SweepParam::Alpha | SweepParam::Phi | SweepParam::Delta => (0.0, TAU),
        }
    }
}

/// One swept axis: an inclusive linear grid of `count ≥ 2` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub param: SweepParam,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Axis {
    fn value_at(&self, index: usize) -> f64 {
        if index + 1 == self.count {
            return self.stop;
        }
        self.start + (self.stop - self.start) * index as f64 / (self.count - 1) as f64
    }

    fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InputDomain {
                what: "axis point count",
                value: self.count as f64,
            });
        }
        let (lo, hi) = self.param.domain();
        for value in [self.start, self.stop] {
            if !value.is_finite() || value < lo || value > hi {
                return Err(Error::InputDomain {
                    what: "axis endpoint",
                    value,
                });
            }
        }
        Ok(())
    }
}

/// Fixed values for every parameter; axes override the swept ones per point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedParams {
    pub p2: f64,
    pub chi: f64,
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
    pub delta: f64,
}

impl Default for FixedParams {
    fn default() -> Self {
        Self {
            p2: 0.5,
            chi: 0.5 * PI,
            alpha: 0.0,
            theta: 0.0,
            phi: 0.0,
            delta: 0.0,
        }
    }
}

impl FixedParams {
    fn set(&mut self, param: SweepParam, value: f64) {
        match param {
            SweepParam::P2 => self.p2 = value,
            SweepParam::Chi => self.chi = value,
            SweepParam::Alpha => self.alpha = value,
            SweepParam::Theta => self.theta = value,
            SweepParam::Phi => self.phi = value,
            SweepParam::Delta => self.delta = value,
        }
    }
}

/// A full sweep description: up to three axes, fixed values for the rest,
/// and the pair's correlation sign.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axes: Vec<Axis>,
    pub fixed: FixedParams,
    pub sign: CorrelationSign,
}

/// One evaluated grid point. The first six fields echo the parameter values
/// at the point; the rest are the pair statistics there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p2: f64,
    pub chi: f64,
    pub alpha: f64,
    pub theta: f64,
    pub phi: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub sigma: f64,
    pub p_ee: f64,
    pub p_eb: f64,
    pub p_be: f64,
    pub p_bb: f64,
    pub p_plus: f64,
    pub p_minus: f64,
    pub p_e_local: f64,
    pub p_ebar_local: f64,
    pub v_plus: f64,
    pub v_minus: f64,
}

/// Column names in row order, shared by the CSV and JSON writers.
pub const COLUMNS: [&str; 18] = [
    "p2",
    "chi",
    "alpha",
    "theta",
    "phi",
    "delta",
    "epsilon",
    "sigma",
    "p_ee",
    "p_eb",
    "p_be",
    "p_bb",
    "p_plus",
    "p_minus",
    "p_e_local",
    "p_ebar_local",
    "v_plus",
    "v_minus",
];

impl SweepRow {
    pub fn values(&self) -> [f64; 18] {
        [
            self.p2,
            self.chi,
            self.alpha,
            self.theta,
            self.phi,
            self.delta,
            self.epsilon,
            self.sigma,
            self.p_ee,
            self.p_eb,
            self.p_be,
            self.p_bb,
            self.p_plus,
            self.p_minus,
            self.p_e_local,
            self.p_ebar_local,
            self.v_plus,
            self.v_minus,
        ]
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 3 {
            return Err(Error::InputDomain {
                what: "swept axis count",
                value: self.axes.len() as f64,
            });
        }
        for axis in &self.axes {
            axis.validate()?;
        }
        for i in 1..self.axes.len() {
            if self.axes[..i].iter().any(|a| a.param == self.axes[i].param) {
                return Err(Error::InputDomain {
                    what: "duplicate swept axis",
                    value: i as f64,
                });
            }
        }
        Ok(())
    }

    /// Product of the axis point counts.
    pub fn row_count(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    fn point(&self, mut index: usize) -> FixedParams {
        let mut values = self.fixed;
        // last axis fastest: peel counts from the right
        for axis in self.axes.iter().rev() {
            values.set(axis.param, axis.value_at(index % axis.count));
            index /= axis.count;
        }
        values
    }

    /// Evaluates the grid, in parallel when the `parallel` feature is on.
    pub fn evaluate(&self) -> Result<Vec<SweepRow>> {
        self.validate()?;
        let rows = par::map_indexed(self.row_count(), |i| {
            evaluate_point(&self.point(i), self.sign)
        });
        rows.into_iter().collect()
    }

    /// Evaluates the grid on the calling thread regardless of features.
    pub fn evaluate_seq(&self) -> Result<Vec<SweepRow>> {
        self.validate()?;
        (0..self.row_count())
            .map(|i| evaluate_point(&self.point(i), self.sign))
            .collect()
    }
}

fn evaluate_point(values: &FixedParams, sign: CorrelationSign) -> Result<SweepRow> {
    let pair = PairAmplitudes::new(values.p2, values.alpha, sign)?;
    let frame = BasisFrame::new(values.chi, values.delta)?;
    let params = RatioParams::from_pair_frame(&pair, &frame);
    let joint = match sign {
        CorrelationSign::Minus => correlation_probs(&params, values.alpha, sign)?,
        // the (+) pair has no closed form; measure it in the actual frames,
        // where a nonzero frame azimuth shifts the effective phase by −2δ
        CorrelationSign::Plus => oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame),
    };
    let (p_e_local, p_ebar_local) = local_probs(&params);
    let (v_same, v_opposite) = pair_visibilities(&params);
    // visibilities describe this row's p_plus/p_minus curves over α, so the
    // (+) pair reports them with roles exchanged
    let (v_plus, v_minus) = match sign {
        CorrelationSign::Minus => (v_same, v_opposite),
        CorrelationSign::Plus => (v_opposite, v_same),
    };
    Ok(SweepRow {
        p2: values.p2,
        chi: values.chi,
        alpha: values.alpha,
        theta: values.theta,
        phi: values.phi,
        delta: values.delta,
        epsilon: params.epsilon(),
        sigma: params.sigma(),
        p_ee: joint.p_ee,
        p_eb: joint.p_eb,
        p_be: joint.p_be,
        p_bb: joint.p_bb,
        p_plus: joint.plus_total(),
        p_minus: joint.minus_total(),
        p_e_local,
        p_ebar_local,
        v_plus,
        v_minus,
    })
}
