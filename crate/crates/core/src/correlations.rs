//! Mutual information, measurement-conditioned entropy, classical
//! correlation, quantum discord, Wootters concurrence, and the critical
//! temperature of thermal entanglement.
//!
//! Classical correlation maximizes the information a rank-1 projective
//! measurement on qubit B extracts about qubit A. The maximization runs a
//! 33x65 coarse grid over the basis angles followed by compass refinement
//! with step halving; POVMs are out of scope. All functions are pure and
//! deterministic: identical inputs give bit-identical outputs on a platform.

use core::f64::consts::{FRAC_PI_2, PI};
use core::fmt;

use crate::linalg::{
    entropy_from_eigenvalues, herm_eigen, partial_trace, partial_trace_matrix, pauli_y,
    tensor_product, Complex64, ComplexMatrix2, ComplexMatrix4, DensityMatrix4, LinalgError,
    Subsystem,
};
use crate::math;
use crate::models::{concurrence_closed_dz, thermal_state, Model, ModelError, ModelParams};

const TWO_PI: f64 = 2.0 * PI;

/// Measurement outcomes with probability below this contribute nothing to
/// the conditioned entropy (avoids 0/0 in the conditional-state normalization).
const PROB_CUTOFF: f64 = 1e-14;

/// Raw discord within this window below zero clamps to exactly zero.
const DISCORD_CLAMP: f64 = 1e-9;

const GRID_THETA: usize = 33;
const GRID_PHI: usize = 65;
const REFINE_INITIAL_STEP: f64 = PI / 32.0;
const REFINE_MIN_STEP: f64 = 1e-7;
const REFINE_FTOL: f64 = 1e-11;
const REFINE_MAX_MOVES: usize = 5000;

/// Rank-1 projective measurement basis on one qubit:
/// `|psi1> = cos(theta_m)|0> + e^{i phi_m} sin(theta_m)|1>` and
/// `|psi2> = e^{-i phi_m} sin(theta_m)|0> - cos(theta_m)|1>`.
///
/// `theta_m` lives in `[0, pi/2]`, `phi_m` in `[0, 2 pi)`; that range already
/// covers every orthonormal basis up to outcome relabeling, which leaves the
/// conditioned entropy unchanged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    theta_m: f64,
    phi_m: f64,
}

impl MeasurementBasis {
    /// Canonicalizes the angles: `theta_m` clamps into `[0, pi/2]`, `phi_m`
    /// wraps modulo `2 pi`.
    pub fn new(theta_m: f64, phi_m: f64) -> Self {
        let mut phi = phi_m % TWO_PI;
        if phi < 0.0 {
            phi += TWO_PI;
        }
        if phi >= TWO_PI {
            phi = 0.0;
        }
        Self {
            theta_m: theta_m.clamp(0.0, FRAC_PI_2),
            phi_m: phi,
        }
    }

    pub fn theta_m(&self) -> f64 {
        self.theta_m
    }

    pub fn phi_m(&self) -> f64 {
        self.phi_m
    }

    /// The orthonormal pair (|psi1>, |psi2>) on the measured qubit.
    pub fn measured_states(&self) -> ([Complex64; 2], [Complex64; 2]) {
        let cos_t = math::cos(self.theta_m);
        let sin_t = math::sin(self.theta_m);
        let phase = Complex64::new(math::cos(self.phi_m), math::sin(self.phi_m));
        let psi1 = [Complex64::new(cos_t, 0.0), phase * sin_t];
        let psi2 = [phase.conj() * sin_t, Complex64::new(-cos_t, 0.0)];
        (psi1, psi2)
    }

    /// The two-qubit projectors `Pi_i = I (x) |psi_i><psi_i|` for a
    /// measurement on qubit B.
    pub fn projectors(&self) -> (ComplexMatrix4, ComplexMatrix4) {
        let (psi1, psi2) = self.measured_states();
        (
            tensor_product(&ComplexMatrix2::identity(), &outer(&psi1)),
            tensor_product(&ComplexMatrix2::identity(), &outer(&psi2)),
        )
    }
}

fn outer(psi: &[Complex64; 2]) -> ComplexMatrix2 {
    let mut m = ComplexMatrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = psi[i] * psi[j].conj();
        }
    }
    m
}

/// Everything computed for one parameter point. `quantum_discord` equals
/// `mutual_information - classical_correlation`, clamped to zero when the
/// raw difference sits within 1e-9 below zero; the unclamped value is kept
/// in `quantum_discord_raw` for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub quantum_discord_raw: f64,
    pub concurrence: f64,
    pub optimal_basis: MeasurementBasis,
    pub optimizer_evals: u64,
}

/// Result of the classical-correlation maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalCorrelation {
    /// Bits extracted by the best measurement found.
    pub value: f64,
    pub basis: MeasurementBasis,
    /// Objective evaluations spent (grid plus refinement).
    pub evaluations: u64,
}

/// `S(rho_A) + S(rho_B) - S(rho_AB)` in bits.
pub fn mutual_information(rho: &DensityMatrix4) -> Result<f64, LinalgError> {
    let s_a = entropy_of_reduced(rho, Subsystem::A)?;
    let s_b = entropy_of_reduced(rho, Subsystem::B)?;
    let s_ab = entropy_of(rho.matrix())?;
    Ok(s_a + s_b - s_ab)
}

fn entropy_of_reduced(rho: &DensityMatrix4, keep: Subsystem) -> Result<f64, LinalgError> {
    let reduced = partial_trace(rho, keep);
    let eig = herm_eigen(reduced.matrix())?;
    entropy_from_eigenvalues(&eig.eigenvalues)
}

fn entropy_of<const N: usize>(m: &crate::linalg::ComplexMatrix<N>) -> Result<f64, LinalgError> {
    let eig = herm_eigen(m)?;
    entropy_from_eigenvalues(&eig.eigenvalues)
}

/// `sum_i p_i S(rho_i^A)` with `p_i = tr(Pi_i rho Pi_i)` and
/// `rho_i^A = tr_B(Pi_i rho Pi_i) / p_i`, for the projective measurement on
/// qubit B described by `basis`.
pub fn conditional_entropy(
    rho: &DensityMatrix4,
    basis: &MeasurementBasis,
) -> Result<f64, LinalgError> {
    let (pi1, pi2) = basis.projectors();
    let mut total = 0.0;
    for projector in [pi1, pi2] {
        let projected = projector * *rho.matrix() * projector;
        let p = projected.trace().re;
        if p < PROB_CUTOFF {
            continue;
        }
        let conditional_a = partial_trace_matrix(&projected, Subsystem::A).scale(1.0 / p);
        total += p * entropy_of(&conditional_a)?;
    }
    Ok(total)
}

/// Maximum over measurement bases of `S(rho_A) - conditional_entropy`,
/// found by the coarse grid plus compass refinement.
pub fn classical_correlation(rho: &DensityMatrix4) -> Result<ClassicalCorrelation, LinalgError> {
    classical_correlation_with_grid_offset(rho, 0.0)
}

/// Same maximization with the phi grid shifted by `phi_offset`; the achieved
/// maximum must not depend on the shift (the projector pair is unchanged up
/// to outcome exchange under `phi -> phi + pi`).
pub(crate) fn classical_correlation_with_grid_offset(
    rho: &DensityMatrix4,
    phi_offset: f64,
) -> Result<ClassicalCorrelation, LinalgError> {
    let s_a = entropy_of_reduced(rho, Subsystem::A)?;

    let mut evals: u64 = 0;
    let mut objective = |theta: f64, phi: f64| -> Result<f64, LinalgError> {
        evals += 1;
        conditional_entropy(rho, &MeasurementBasis::new(theta, phi))
    };

    // Coarse grid over [0, pi/2] x [0, 2 pi).
    let mut best_theta = 0.0;
    let mut best_phi = phi_offset;
    let mut best = f64::INFINITY;
    for i in 0..GRID_THETA {
        let theta = FRAC_PI_2 * i as f64 / (GRID_THETA - 1) as f64;
        for j in 0..GRID_PHI {
            let phi = TWO_PI * j as f64 / GRID_PHI as f64 + phi_offset;
            let value = objective(theta, phi)?;
            if value < best {
                best = value;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // theta = 0 and theta = pi/2 both describe the sigma_z measurement, a
    // pole where the azimuth has no effect; compass moves from there cannot
    // discover an optimum that tilts off the pole along one particular
    // azimuth. Seed such cases with a ring of half-grid-step tilts.
    if best_theta == 0.0 || best_theta == FRAC_PI_2 {
        let tilt = FRAC_PI_2 / (GRID_THETA - 1) as f64 * 0.5;
        for j in 0..GRID_PHI {
            let phi = TWO_PI * j as f64 / GRID_PHI as f64 + phi_offset;
            let value = objective(tilt, phi)?;
            if value < best {
                best = value;
                best_theta = tilt;
                best_phi = phi;
            }
        }
    }

    // Compass refinement with step halving.
    let mut step = REFINE_INITIAL_STEP;
    let mut moves = 0usize;
    while step >= REFINE_MIN_STEP && moves < REFINE_MAX_MOVES {
        let candidates = [
            ((best_theta + step).min(FRAC_PI_2), best_phi),
            ((best_theta - step).max(0.0), best_phi),
            (best_theta, best_phi + step),
            (best_theta, best_phi - step),
        ];
        let mut cand_best = best;
        let mut cand_at = None;
        for &(theta, phi) in candidates.iter() {
            let value = objective(theta, phi)?;
            if value < cand_best {
                cand_best = value;
                cand_at = Some((theta, phi));
            }
        }
        match cand_at {
            Some((theta, phi)) => {
                let improvement = best - cand_best;
                best = cand_best;
                best_theta = theta;
                best_phi = phi;
                moves += 1;
                if improvement < REFINE_FTOL {
                    step *= 0.5;
                }
            }
            None => step *= 0.5,
        }
    }

    // Measurement cannot extract negative information; guard the rounding.
    let value = (s_a - best).max(0.0);
    Ok(ClassicalCorrelation {
        value,
        basis: MeasurementBasis::new(best_theta, best_phi),
        evaluations: evals,
    })
}

/// Quantum discord `I(rho) - CC(rho)` together with every ingredient.
pub fn quantum_discord(rho: &DensityMatrix4) -> Result<CorrelationReport, LinalgError> {
    let mutual = mutual_information(rho)?;
    let cc = classical_correlation(rho)?;
    let raw = mutual - cc.value;
    let discord = if raw >= 0.0 {
        raw
    } else if raw >= -DISCORD_CLAMP {
        0.0
    } else {
        raw
    };
    Ok(CorrelationReport {
        mutual_information: mutual,
        classical_correlation: cc.value,
        quantum_discord: discord,
        quantum_discord_raw: raw,
        concurrence: concurrence_wootters(rho)?,
        optimal_basis: cc.basis,
        optimizer_evals: cc.evaluations,
    })
}

/// Wootters concurrence `max(0, sqrt(m1) - sqrt(m2) - sqrt(m3) - sqrt(m4))`
/// where the `m_i` are the descending eigenvalues of
/// `rho (sy (x) sy) rho* (sy (x) sy)`, computed through the Hermitian
/// equivalent `sqrt(rho) rho~ sqrt(rho)`.
pub fn concurrence_wootters(rho: &DensityMatrix4) -> Result<f64, LinalgError> {
    let syy = tensor_product(&pauli_y(), &pauli_y());
    let rho_m = *rho.matrix();
    let flipped = syy * rho_m.conj() * syy;

    let eig = herm_eigen(&rho_m)?;
    let mut sqrt_rho = ComplexMatrix4::zeros();
    for k in 0..4 {
        let s = math::sqrt(eig.eigenvalues[k].max(0.0));
        let v = &eig.eigenvectors[k];
        for i in 0..4 {
            for j in 0..4 {
                sqrt_rho[(i, j)] += s * v[i] * v[j].conj();
            }
        }
    }

    let product = sqrt_rho * flipped * sqrt_rho;
    let mu = herm_eigen(&product)?.eigenvalues;
    let value = math::sqrt(mu[0].max(0.0))
        - math::sqrt(mu[1].max(0.0))
        - math::sqrt(mu[2].max(0.0))
        - math::sqrt(mu[3].max(0.0));
    Ok(value.max(0.0))
}

/// Outcome of the critical-temperature search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalTemperature {
    /// Concurrence vanishes at this temperature (bisection width 1e-6).
    Found(f64),
    /// No entanglement even at T = 1e-2; nothing to bracket.
    ZeroThroughout,
    /// Concurrence still positive at the ceiling; the interval does not
    /// bracket a zero crossing.
    PositiveThroughout,
}

impl CriticalTemperature {
    pub fn value(&self) -> Option<f64> {
        match self {
            CriticalTemperature::Found(t) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for CriticalTemperature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalTemperature::Found(t) => write!(f, "{t}"),
            CriticalTemperature::ZeroThroughout => write!(f, "zero_throughout"),
            CriticalTemperature::PositiveThroughout => write!(f, "positive_throughout"),
        }
    }
}

/// Bisection for the temperature at which the thermal concurrence of
/// `p.model` reaches zero, over `[1e-2, t_hi]` to absolute width 1e-6.
/// The `t` field of `p` is ignored.
pub fn critical_temperature(
    p: &ModelParams,
    t_hi: f64,
) -> Result<CriticalTemperature, ModelError> {
    const T_LO: f64 = 1e-2;
    const WIDTH: f64 = 1e-6;
    if !(t_hi > T_LO) {
        return Err(ModelError::InvalidTemperatureCeiling { t_hi });
    }
    let concurrence_at = |t: f64| -> Result<f64, ModelError> {
        let rho = thermal_state(&p.with_t(t))?;
        concurrence_wootters(&rho).map_err(ModelError::from)
    };

    if concurrence_at(T_LO)? <= 0.0 {
        return Ok(CriticalTemperature::ZeroThroughout);
    }
    if concurrence_at(t_hi)? > 0.0 {
        return Ok(CriticalTemperature::PositiveThroughout);
    }

    let (mut lo, mut hi) = (T_LO, t_hi);
    while hi - lo > WIDTH {
        let mid = 0.5 * (lo + hi);
        if concurrence_at(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // Upper end of the final bracket: the concurrence evaluates to exactly
    // zero there, within width 1e-6 of the crossing.
    Ok(CriticalTemperature::Found(hi))
}

/// Closed-form concurrence next to the Wootters value for the same Dz
/// parameter point; the two are reported side by side rather than asserted
/// equal (see [`concurrence_closed_dz`]).
pub fn concurrence_comparison_dz(p: &ModelParams) -> Result<(f64, f64), ModelError> {
    debug_assert_eq!(p.model, Model::Dz);
    let closed = concurrence_closed_dz(p)?;
    let rho = thermal_state(p)?;
    let wootters = concurrence_wootters(&rho)?;
    Ok((closed, wootters))
}
