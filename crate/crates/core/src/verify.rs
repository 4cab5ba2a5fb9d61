//! Self-verification suite: every module invariant evaluated on seeded
//! pseudo-random inputs plus the fixed edge cases (poles, singlet- and
//! triplet-like pairs, single-branch weights).
//!
//! Randomness comes from ChaCha8 seeded per invariant from the user seed, so
//! a report is reproducible across platforms and independent of whether the
//! checks run in parallel. The configurable tolerance applies to algebraic
//! identities; fringe, exactness, and limit checks keep their own fixed
//! tolerances (recorded per row in the report).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

use crate::oracle::{self, Qubit};
use crate::pair::{
    correlation_probs, local_probs, pair_visibilities, rotated_coefficients, CorrelationSign,
    JointProbabilities, PairAmplitudes, RatioParams,
};
use crate::qubit::{self, BasisFrame, BasisTransform, BlochDirection};
use crate::{par, ALGEBRAIC_TOL, EXACT_TOL, FRINGE_TOL};

/// Identifier of the pseudo-random generator backing the suite.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Tolerance for the disentangled-limit consistency check.
const LIMIT_TOL: f64 = 1e-5;

/// Phase-grid resolution used by the sweeping checks.
const PHASE_GRID: usize = 128;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Random samples per randomized invariant.
    pub samples: usize,
    pub seed: u64,
    /// Tolerance for algebraic identities.
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 42,
            tol: ALGEBRAIC_TOL,
        }
    }
}

/// Outcome of one invariant: worst observed deviation over all samples.
#[derive(Debug, Clone)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Full suite outcome; `pass` holds exactly when every check passed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub rng_algorithm: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub checks: Vec<InvariantCheck>,
    pub pass: bool,
}

struct Outcome {
    samples: usize,
    max_deviation: f64,
    tolerance: f64,
}

type CheckFn = fn(&VerifyConfig, &mut ChaCha8Rng) -> Outcome;

const CHECKS: &[(&str, CheckFn)] = &[
    ("antipode_orthogonality", check_antipode_orthogonality),
    ("basis_matrix_unitarity", check_basis_matrix_unitarity),
    ("basis_matrix_determinant", check_basis_matrix_determinant),
    ("adjoint_inverse_identity", check_adjoint_inverse_identity),
    ("component_normalization", check_component_normalization),
    ("single_closed_vs_matrix", check_single_closed_vs_matrix),
    ("single_fringe_visibility", check_single_fringe_visibility),
    ("pair_normalization", check_pair_normalization),
    ("equal_plus_branches", check_equal_plus_branches),
    ("rotated_coefficients_norm", check_rotated_coefficients_norm),
    ("pair_closed_vs_oracle", check_pair_closed_vs_oracle),
    ("ratio_weight_roundtrip", check_ratio_weight_roundtrip),
    ("local_phase_independence", check_local_phase_independence),
    (
        "reduced_state_alpha_invariance",
        check_reduced_state_alpha_invariance,
    ),
    ("local_coherence_zero", check_local_coherence_zero),
    ("visibility_swap", check_visibility_swap),
    ("probability_swap", check_probability_swap),
    ("disentangled_limit", check_disentangled_limit),
    ("purity_extremes", check_purity_extremes),
];

/// Names of every invariant the suite runs, in report order.
pub fn invariant_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

/// Runs the whole suite. Checks are independent and may evaluate in
/// parallel; each gets its own generator derived from the seed, so the
/// report does not depend on scheduling.
pub fn run(config: &VerifyConfig) -> VerifyReport {
    let checks = par::map_indexed(CHECKS.len(), |index| {
        let (name, check) = CHECKS[index];
        let mut rng = rng_for(config.seed, index as u64);
        let outcome = check(config, &mut rng);
        InvariantCheck {
            name,
            samples: outcome.samples,
            max_deviation: outcome.max_deviation,
            tolerance: outcome.tolerance,
            pass: outcome.max_deviation <= outcome.tolerance,
        }
    });
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        rng_algorithm: RNG_ALGORITHM,
        seed: config.seed,
        samples: config.samples,
        tol: config.tol,
        checks,
        pass,
    }
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_direction(rng: &mut ChaCha8Rng) -> BlochDirection {
    BlochDirection::new(rng.gen::<f64>() * PI, rng.gen::<f64>() * TAU).expect("in domain")
}

fn random_frame(rng: &mut ChaCha8Rng) -> BasisFrame {
    BasisFrame::new(rng.gen::<f64>() * PI, rng.gen::<f64>() * TAU).expect("in domain")
}

fn random_pair(rng: &mut ChaCha8Rng, sign: CorrelationSign) -> PairAmplitudes {
    PairAmplitudes::new(rng.gen::<f64>(), rng.gen::<f64>() * TAU, sign).expect("in domain")
}

/// Polar-angle edge cases every direction-driven check also visits.
fn edge_directions() -> Vec<BlochDirection> {
    [(0.0, 0.0), (PI, 0.0), (0.5 * PI, 0.0), (0.5 * PI, PI)]
        .into_iter()
        .map(|(t, p)| BlochDirection::new(t, p).expect("in domain"))
        .collect()
}

/// Pair-weight edge cases: single-branch limits, singlet- and triplet-like.
fn edge_pairs(sign: CorrelationSign) -> Vec<PairAmplitudes> {
    [(0.0, 0.0), (1.0, 0.0), (0.5, PI), (0.5, 0.0), (0.8, 0.0)]
        .into_iter()
        .map(|(w, a)| PairAmplitudes::new(w, a, sign).expect("in domain"))
        .collect()
}

fn check_antipode_orthogonality(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dirs = edge_directions();
    dirs.extend((0..config.samples).map(|_| random_direction(rng)));
    let max_deviation = dirs
        .iter()
        .map(|d| d.state().inner(&d.antipode()).norm())
        .fold(0.0, f64::max);
    Outcome {
        samples: dirs.len(),
        max_deviation,
        tolerance: config.tol,
    }
}

fn check_basis_matrix_unitarity(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for dir in edge_directions() {
        dev = dev.max(BasisTransform::from_direction(&dir).unitarity_deviation());
        count += 1;
    }
    for _ in 0..config.samples {
        let t = if rng.gen::<bool>() {
            BasisTransform::from_direction(&random_direction(rng))
        } else {
            BasisTransform::from_frame(&random_frame(rng))
        };
        dev = dev.max(t.unitarity_deviation());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_basis_matrix_determinant(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let mut visit = |t: BasisTransform, phase: f64| {
        let expected = -num_complex::Complex64::from_polar(1.0, phase);
        count += 1;
        (t.determinant() - expected).norm()
    };
    for dir in edge_directions() {
        dev = dev.max(visit(BasisTransform::from_direction(&dir), dir.azimuth()));
    }
    for _ in 0..config.samples {
        let dir = random_direction(rng);
        dev = dev.max(visit(BasisTransform::from_direction(&dir), dir.azimuth()));
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_adjoint_inverse_identity(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let r = BasisTransform::from_frame(&random_frame(rng));
        let product = r
            .adjoint_inverse()
            .expect("unitary by construction")
            .mul(&r);
        for row in 0..2 {
            for col in 0..2 {
                let expect = if row == col { 1.0 } else { 0.0 };
                dev = dev.max((product.entry(row, col) - expect).norm());
            }
        }
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_component_normalization(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let (u, v) = qubit::components_in_frame(&random_direction(rng), &random_frame(rng));
        dev = dev.max((u.norm_sqr() + v.norm_sqr() - 1.0).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_single_closed_vs_matrix(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let dir = random_direction(rng);
        let frame = random_frame(rng);
        let (p_e, p_ebar) = qubit::outcome_probs(&dir, &frame);
        // independent route: row 0 of R_s · R_e⁻¹
        let composed = BasisTransform::from_direction(&dir).mul(
            &BasisTransform::from_frame(&frame)
                .adjoint_inverse()
                .expect("unitary by construction"),
        );
        dev = dev.max((p_e - composed.entry(0, 0).norm_sqr()).abs());
        dev = dev.max((p_ebar - composed.entry(0, 1).norm_sqr()).abs());
        dev = dev.max((p_e + p_ebar - 1.0).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_single_fringe_visibility(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let spots = config.samples.clamp(4, 32);
    let mut angles: Vec<(f64, f64)> = vec![(PI / 3.0, 0.5 * PI), (0.5 * PI, 0.5 * PI), (0.0, 1.0)];
    angles.extend((0..spots).map(|_| (rng.gen::<f64>() * PI, rng.gen::<f64>() * PI)));
    let mut dev: f64 = 0.0;
    for &(theta, chi) in &angles {
        let frame = BasisFrame::new(chi, 0.0).expect("in domain");
        let sweep = |pick: fn((f64, f64)) -> f64| {
            oracle::empirical_visibility(
                |eta| {
                    let dir = BlochDirection::new(theta, eta).expect("in domain");
                    pick(qubit::outcome_probs(&dir, &frame))
                },
                PHASE_GRID,
            )
            .expect("grid is fine enough")
        };
        let (v_e, v_ebar) = qubit::fringe_visibilities(theta, chi).expect("in domain");
        dev = dev.max((sweep(|p| p.0) - v_e).abs());
        dev = dev.max((sweep(|p| p.1) - v_ebar).abs());
    }
    Outcome {
        samples: angles.len(),
        max_deviation: dev,
        tolerance: FRINGE_TOL,
    }
}

fn check_pair_normalization(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for sign in [CorrelationSign::Minus, CorrelationSign::Plus] {
        let mut pairs = edge_pairs(sign);
        pairs.extend((0..config.samples / 2).map(|_| random_pair(rng, sign)));
        for pair in pairs {
            let frame = random_frame(rng);
            let params = RatioParams::from_pair_frame(&pair, &frame);
            // a formula broken badly enough to fail construction is a
            // failed invariant, not a crash
            match correlation_probs(&params, pair.phase(), sign) {
                Ok(joint) => dev = dev.max((joint.sum() - 1.0).abs()),
                Err(_) => dev = f64::INFINITY,
            }
            count += 1;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_equal_plus_branches(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let pair = random_pair(rng, CorrelationSign::Minus);
        let frame = random_frame(rng);
        let params = RatioParams::from_pair_frame(&pair, &frame);
        match correlation_probs(&params, pair.phase(), CorrelationSign::Minus) {
            Ok(closed) => dev = dev.max((closed.p_ee - closed.p_bb).abs()),
            Err(_) => dev = f64::INFINITY,
        }
        let born = oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame);
        dev = dev.max((born.p_ee - born.p_bb).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_rotated_coefficients_norm(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let mut pairs = edge_pairs(CorrelationSign::Minus);
    pairs.extend((0..config.samples).map(|_| random_pair(rng, CorrelationSign::Minus)));
    for pair in pairs {
        let frame = random_frame(rng);
        let coeff = rotated_coefficients(&pair, &frame).expect("minus pair");
        dev = dev.max((coeff.norm_sqr() - 1.0).abs());
        let born = oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame);
        dev = dev.max((coeff.same.norm_sqr() - born.p_ee).abs());
        dev = dev.max((coeff.eb.norm_sqr() - born.p_eb).abs());
        dev = dev.max((coeff.be.norm_sqr() - born.p_be).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_pair_closed_vs_oracle(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let mut pairs = edge_pairs(CorrelationSign::Minus);
    pairs.extend((0..config.samples).map(|_| random_pair(rng, CorrelationSign::Minus)));
    for pair in pairs {
        let frame = random_frame(rng);
        let params = RatioParams::from_pair_frame(&pair, &frame);
        let born = oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame);
        match correlation_probs(&params, pair.phase(), CorrelationSign::Minus) {
            Ok(closed) => {
                dev = dev.max((closed.p_ee - born.p_ee).abs());
                dev = dev.max((closed.p_eb - born.p_eb).abs());
                dev = dev.max((closed.p_be - born.p_be).abs());
                dev = dev.max((closed.p_bb - born.p_bb).abs());
            }
            Err(_) => dev = f64::INFINITY,
        }
        let (p_e, p_ebar) = local_probs(&params);
        let (born_e, born_ebar) = born.local_first();
        dev = dev.max((p_e - born_e).abs());
        dev = dev.max((p_ebar - born_ebar).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_ratio_weight_roundtrip(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let pair = random_pair(rng, CorrelationSign::Minus);
        let frame = random_frame(rng);
        let params = RatioParams::from_pair_frame(&pair, &frame);
        let (p2, q2) = params.pair_weights();
        let (m2, n2) = params.frame_weights();
        dev = dev.max((p2 - pair.amp_first().powi(2)).abs());
        dev = dev.max((q2 - pair.amp_second().powi(2)).abs());
        dev = dev.max((m2 - frame.cos_half().powi(2)).abs());
        dev = dev.max((n2 - frame.sin_half().powi(2)).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

/// The headline claim: local statistics do not move with the pair phase, at
/// any entanglement strength. Scans a log grid of strengths against a grid
/// of basis shapes, all through the Born-rule oracle.
fn check_local_phase_independence(config: &VerifyConfig, _rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for eps_step in 0..25 {
        let epsilon = 10f64.powf(-6.0 + 12.0 * eps_step as f64 / 24.0);
        let p2 = epsilon / (1.0 + epsilon);
        for sigma_step in 0..9 {
            let sigma = 10f64.powf(-2.0 + 4.0 * sigma_step as f64 / 8.0);
            let frame = BasisFrame::from_basis_ratio(sigma).expect("in domain");
            let local_e = |alpha: f64| {
                let pair =
                    PairAmplitudes::new(p2, alpha, CorrelationSign::Minus).expect("in domain");
                oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame)
                    .local_first()
                    .0
            };
            let at_zero = local_e(0.0);
            for k in 0..64 {
                let alpha = TAU * k as f64 / 64.0;
                dev = dev.max((local_e(alpha) - at_zero).abs());
            }
            count += 1;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

fn check_reduced_state_alpha_invariance(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let weights: Vec<f64> = [0.0, 0.5, 0.8, 1.0]
        .into_iter()
        .chain((0..config.samples.clamp(4, 64)).map(|_| rng.gen::<f64>()))
        .collect();
    for &p2 in &weights {
        let q2 = 1.0 - p2;
        for k in 0..16 {
            let alpha = TAU * k as f64 / 16.0;
            let minus = oracle::expand_pair(
                &PairAmplitudes::new(p2, alpha, CorrelationSign::Minus).expect("in domain"),
            );
            dev = dev.max(oracle::diagonal_deviation(
                &oracle::reduce(&minus, Qubit::A),
                p2,
                q2,
            ));
            dev = dev.max(oracle::diagonal_deviation(
                &oracle::reduce(&minus, Qubit::B),
                q2,
                p2,
            ));
            let plus = oracle::expand_pair(
                &PairAmplitudes::new(p2, alpha, CorrelationSign::Plus).expect("in domain"),
            );
            dev = dev.max(oracle::diagonal_deviation(
                &oracle::reduce(&plus, Qubit::A),
                p2,
                q2,
            ));
            dev = dev.max(oracle::diagonal_deviation(
                &oracle::reduce(&plus, Qubit::B),
                p2,
                q2,
            ));
            count += 1;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: EXACT_TOL,
    }
}

fn check_local_coherence_zero(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let computational = BasisFrame::new(0.0, 0.0).expect("in domain");
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for sign in [CorrelationSign::Minus, CorrelationSign::Plus] {
        let mut pairs = edge_pairs(sign);
        pairs.extend((0..config.samples / 2).map(|_| random_pair(rng, sign)));
        for pair in pairs {
            let vec = oracle::expand_pair(&pair);
            for which in [Qubit::A, Qubit::B] {
                let rho = oracle::reduce(&vec, which);
                dev = dev.max(oracle::offdiag_magnitude(&rho, &computational));
            }
            count += 1;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: EXACT_TOL,
    }
}

/// Fringe contrasts of the `(+)` pair equal the `(−)` pair's with the roles
/// of equal- and opposite-outcome totals exchanged.
fn check_visibility_swap(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut spots: Vec<(f64, f64)> = vec![(1.0, 1.0), (4.0, 1.0), (4.0, 3.0), (0.25, 0.2)];
    let extra = config.samples.clamp(2, 12);
    spots.extend((0..extra).map(|_| {
        (
            10f64.powf(rng.gen::<f64>() * 4.0 - 2.0),
            10f64.powf(rng.gen::<f64>() * 4.0 - 2.0),
        )
    }));
    let mut dev: f64 = 0.0;
    for &(epsilon, sigma) in &spots {
        let params = RatioParams::new(epsilon, sigma).expect("in domain");
        let (p2, _) = params.pair_weights();
        let frame = BasisFrame::from_basis_ratio(sigma).expect("in domain");
        let empirical = |sign: CorrelationSign, pick: fn(&JointProbabilities) -> f64| {
            oracle::empirical_visibility(
                |alpha| {
                    let pair = PairAmplitudes::new(p2, alpha, sign).expect("in domain");
                    pick(&oracle::joint_born(
                        &oracle::expand_pair(&pair),
                        &frame,
                        &frame,
                    ))
                },
                PHASE_GRID,
            )
            .expect("grid is fine enough")
        };
        let (v_plus, v_minus) = pair_visibilities(&params);
        // the (−) pair reproduces its own closed forms...
        dev = dev.max(
            (empirical(CorrelationSign::Minus, JointProbabilities::plus_total) - v_plus).abs(),
        );
        dev = dev.max(
            (empirical(CorrelationSign::Minus, JointProbabilities::minus_total) - v_minus).abs(),
        );
        // ...and the (+) pair lands on them swapped
        dev = dev.max(
            (empirical(CorrelationSign::Plus, JointProbabilities::plus_total) - v_minus).abs(),
        );
        dev = dev.max(
            (empirical(CorrelationSign::Plus, JointProbabilities::minus_total) - v_plus).abs(),
        );
    }
    Outcome {
        samples: spots.len(),
        max_deviation: dev,
        tolerance: FRINGE_TOL,
    }
}

/// At frame azimuth zero, the `(+)` pair's joint distribution at phase α is
/// the `(−)` pair's at α + π with correlation roles exchanged.
fn check_probability_swap(config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for _ in 0..config.samples {
        let p2 = rng.gen::<f64>();
        let alpha = rng.gen::<f64>() * TAU;
        let frame = BasisFrame::new(rng.gen::<f64>() * PI, 0.0).expect("in domain");
        let plus = oracle::joint_born(
            &oracle::expand_pair(
                &PairAmplitudes::new(p2, alpha, CorrelationSign::Plus).expect("in domain"),
            ),
            &frame,
            &frame,
        );
        let minus = oracle::joint_born(
            &oracle::expand_pair(
                &PairAmplitudes::new(p2, alpha + PI, CorrelationSign::Minus).expect("in domain"),
            ),
            &frame,
            &frame,
        );
        dev = dev.max((plus.p_ee - minus.p_eb).abs());
        dev = dev.max((plus.p_bb - minus.p_be).abs());
        dev = dev.max((plus.p_eb - minus.p_ee).abs());
        dev = dev.max((plus.p_be - minus.p_bb).abs());
        count += 1;
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}

/// Near the single-branch limit the local statistics match the single-qubit
/// prediction for a pole state: `P(e) → m²`.
fn check_disentangled_limit(_config: &VerifyConfig, _rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    let pole = BlochDirection::new(0.0, 0.0).expect("in domain");
    for sigma in [0.01, 0.5, 1.0, 3.0, 100.0] {
        let frame = BasisFrame::from_basis_ratio(sigma).expect("in domain");
        let (m2, _) = qubit::outcome_probs(&pole, &frame);
        for epsilon in [1e12_f64, (1.0 - 1e-13) / 1e-13] {
            let params = RatioParams::new(epsilon, sigma).expect("in domain");
            dev = dev.max((local_probs(&params).0 - m2).abs());
            // the oracle marginal agrees
            let (p2, _) = params.pair_weights();
            let pair = PairAmplitudes::new(p2, 1.0, CorrelationSign::Minus).expect("in domain");
            let born = oracle::joint_born(&oracle::expand_pair(&pair), &frame, &frame);
            dev = dev.max((born.local_first().0 - m2).abs());
            count += 1;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: LIMIT_TOL,
    }
}

fn check_purity_extremes(config: &VerifyConfig, _rng: &mut ChaCha8Rng) -> Outcome {
    let mut dev: f64 = 0.0;
    let mut count = 0;
    for sign in [CorrelationSign::Minus, CorrelationSign::Plus] {
        for alpha in [0.0, PI / 3.0, PI] {
            let balanced = PairAmplitudes::new(0.5, alpha, sign).expect("in domain");
            let rho = oracle::reduce(&oracle::expand_pair(&balanced), Qubit::A);
            dev = dev.max((rho.purity() - 0.5).abs());
            for weight in [0.0, 1.0] {
                let product = PairAmplitudes::new(weight, alpha, sign).expect("in domain");
                let rho = oracle::reduce(&oracle::expand_pair(&product), Qubit::A);
                dev = dev.max((rho.purity() - 1.0).abs());
            }
            count += 3;
        }
    }
    Outcome {
        samples: count,
        max_deviation: dev,
        tolerance: config.tol,
    }
}
