//! The two DM-coupled XXZ Hamiltonians, their thermal states in closed form,
//! an independent Gibbs-state oracle, and the closed-form concurrence.
//!
//! Couplings and temperature are dimensionless with Boltzmann's constant set
//! to 1 (beta = 1/T). The two-qubit standard basis is {|00>, |01>, |10>, |11>}
//! with qubit ordering A tensor B.
//!
//! Boltzmann factors are always evaluated relative to the minimum eigenvalue,
//! `exp(-beta * (lambda - lambda_min))`, in the oracle and closed forms alike;
//! the raw exponentials overflow for T below roughly 0.01 at coupling
//! strengths near 3.

use core::fmt;

use crate::linalg::{
    herm_eigen, pauli_x, pauli_y, pauli_z, tensor_product, Complex64, ComplexMatrix4,
    DensityMatrix4, HermitianMatrix4, LinalgError,
};
use crate::math;

/// Which DM interaction component the model carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// DM vector along z: `D_z (sigma1_x sigma2_y - sigma1_y sigma2_x)`.
    Dz,
    /// DM vector along x: `D_x (sigma1_y sigma2_z - sigma1_z sigma2_y)`.
    Dx,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Dz => write!(f, "dz"),
            Model::Dx => write!(f, "dx"),
        }
    }
}

/// Couplings and temperature for one parameter point.
///
/// `d` is read as `D_z` or `D_x` depending on `model`. The antiferromagnetic
/// regime (`j > 0`, `jz > 0`) is the one of interest, but construction
/// accepts any sign; only `t > 0` is enforced, and only by the thermal-state
/// operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub model: Model,
    pub j: f64,
    pub jz: f64,
    pub d: f64,
    pub t: f64,
}

impl ModelParams {
    pub fn new(model: Model, j: f64, jz: f64, d: f64, t: f64) -> Self {
        Self { model, j, jz, d, t }
    }

    pub fn with_t(&self, t: f64) -> Self {
        Self { t, ..*self }
    }

    pub fn with_d(&self, d: f64) -> Self {
        Self { d, ..*self }
    }

    fn beta(&self) -> f64 {
        1.0 / self.t
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelError {
    /// Operation invoked with the other model's parameter set.
    WrongModel { expected: Model, got: Model },
    /// Thermal-state construction needs T > 0.
    NonPositiveTemperature { t: f64 },
    /// Bisection needs an upper temperature above the fixed 1e-2 lower end.
    InvalidTemperatureCeiling { t_hi: f64 },
    Linalg(LinalgError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::WrongModel { expected, got } => {
                write!(f, "operation expects the {expected} model, got {got}")
            }
            ModelError::NonPositiveTemperature { t } => {
                write!(f, "temperature must be positive, got {t}")
            }
            ModelError::InvalidTemperatureCeiling { t_hi } => {
                write!(f, "temperature ceiling {t_hi} must exceed 1e-2")
            }
            ModelError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ModelError {}

impl From<LinalgError> for ModelError {
    fn from(e: LinalgError) -> Self {
        ModelError::Linalg(e)
    }
}

fn require_model(p: &ModelParams, expected: Model) -> Result<(), ModelError> {
    if p.model == expected {
        Ok(())
    } else {
        Err(ModelError::WrongModel {
            expected,
            got: p.model,
        })
    }
}

fn require_thermal(p: &ModelParams) -> Result<(), ModelError> {
    if p.t > 0.0 {
        Ok(())
    } else {
        Err(ModelError::NonPositiveTemperature { t: p.t })
    }
}

/// `H = J(sx sx + sy sy) + Jz sz sz + Dz(sx sy - sy sx)` built from Pauli
/// tensor products; diagonal `(Jz, -Jz, -Jz, Jz)`, inner off-diagonal
/// `2J +- 2i Dz`.
pub fn hamiltonian_dz(p: &ModelParams) -> Result<HermitianMatrix4, ModelError> {
    require_model(p, Model::Dz)?;
    let (sx, sy, sz) = (pauli_x(), pauli_y(), pauli_z());
    let m = tensor_product(&sx, &sx).scale(p.j)
        + tensor_product(&sy, &sy).scale(p.j)
        + tensor_product(&sz, &sz).scale(p.jz)
        + (tensor_product(&sx, &sy) - tensor_product(&sy, &sx)).scale(p.d);
    Ok(HermitianMatrix4::new(m)?)
}

/// `H' = J(sx sx + sy sy) + Jz sz sz + Dx(sy sz - sz sy)`; couples the outer
/// and inner blocks through `+- i Dx` entries.
pub fn hamiltonian_dx(p: &ModelParams) -> Result<HermitianMatrix4, ModelError> {
    require_model(p, Model::Dx)?;
    let (sx, sy, sz) = (pauli_x(), pauli_y(), pauli_z());
    let m = tensor_product(&sx, &sx).scale(p.j)
        + tensor_product(&sy, &sy).scale(p.j)
        + tensor_product(&sz, &sz).scale(p.jz)
        + (tensor_product(&sy, &sz) - tensor_product(&sz, &sy)).scale(p.d);
    Ok(HermitianMatrix4::new(m)?)
}

/// The Hamiltonian selected by `p.model`.
pub fn hamiltonian(p: &ModelParams) -> Result<HermitianMatrix4, ModelError> {
    match p.model {
        Model::Dz => hamiltonian_dz(p),
        Model::Dx => hamiltonian_dx(p),
    }
}

/// Thermal state `exp(-beta H) / Z` via eigendecomposition, with every
/// Boltzmann factor shifted by the minimum eigenvalue. This construction
/// depends only on the Hamiltonian and the Gibbs definition and serves as
/// the ground truth the closed forms are checked against.
pub fn gibbs_oracle(h: &HermitianMatrix4, t: f64) -> Result<DensityMatrix4, ModelError> {
    if t <= 0.0 {
        return Err(ModelError::NonPositiveTemperature { t });
    }
    let beta = 1.0 / t;
    let eig = herm_eigen(h.matrix())?;
    let lambda_min = eig.eigenvalues[3];

    let mut weights = [0.0f64; 4];
    let mut z = 0.0;
    for (w, &lambda) in weights.iter_mut().zip(eig.eigenvalues.iter()) {
        *w = math::exp(-beta * (lambda - lambda_min));
        z += *w;
    }

    let mut m = ComplexMatrix4::zeros();
    for k in 0..4 {
        let v = &eig.eigenvectors[k];
        let p = weights[k] / z;
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] += p * v[i] * v[j].conj();
            }
        }
    }
    Ok(DensityMatrix4::new(m)?)
}

/// Numerical T -> 0 limit: the Gibbs state evaluated at T = 1e-3, which the
/// shifted Boltzmann factors keep well-conditioned.
pub fn ground_state_limit(p: &ModelParams) -> Result<DensityMatrix4, ModelError> {
    gibbs_oracle(&hamiltonian(p)?, 1e-3)
}

/// Scalars of the closed-form Dz thermal state.
///
/// `u`, `v` and `z` are the plain (unshifted) values; they can overflow to
/// infinity below T of roughly 0.01, while the assembled density matrix stays
/// finite because it is built from shifted factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DzClosedForm {
    /// `sqrt(J^2 + Dz^2)`.
    pub w: f64,
    /// DM phase `arctan(Dz / J)`.
    pub theta: f64,
    /// Inner diagonal weight `e^{beta Jz} cosh(2 beta w)`.
    pub u: f64,
    /// Inner off-diagonal weight `-e^{beta Jz} sinh(2 beta w)`.
    pub v: f64,
    /// Partition function `2 e^{-beta Jz} + 2 e^{beta Jz} cosh(2 beta w)`.
    pub z: f64,
}

/// Closed-form thermal state of the Dz model: corners `e^{-beta Jz}/Z`,
/// inner diagonal `u/Z`, inner off-diagonal `(v/Z) e^{+-i theta}`.
pub fn thermal_state_closed_dz(
    p: &ModelParams,
) -> Result<(DensityMatrix4, DzClosedForm), ModelError> {
    require_model(p, Model::Dz)?;
    require_thermal(p)?;
    let beta = p.beta();
    let w = math::hypot(p.j, p.d);
    // atan2 agrees with arctan(d/j) for j > 0 and stays the phase of
    // (j + i d) elsewhere, including j = 0.
    let theta = math::atan2(p.d, p.j);

    // Spectrum: Jz on both corner states, -Jz +- 2w on the inner block.
    let e_corner = p.jz;
    let e_plus = -p.jz + 2.0 * w;
    let e_minus = -p.jz - 2.0 * w;
    let shift = e_corner.min(e_minus);

    let g_corner = math::exp(-beta * (e_corner - shift));
    let g_plus = math::exp(-beta * (e_plus - shift));
    let g_minus = math::exp(-beta * (e_minus - shift));

    let z_shifted = 2.0 * g_corner + g_plus + g_minus;
    let u_shifted = 0.5 * (g_plus + g_minus);
    let v_shifted = 0.5 * (g_plus - g_minus);

    let corner = g_corner / z_shifted;
    let inner = u_shifted / z_shifted;
    let off = v_shifted / z_shifted;
    let off_phase = Complex64::new(off * math::cos(theta), off * math::sin(theta));

    let mut m = ComplexMatrix4::from_diagonal([corner, inner, inner, corner]);
    m[(1, 2)] = off_phase;
    m[(2, 1)] = off_phase.conj();
    let rho = DensityMatrix4::new(m)?;

    let form = DzClosedForm {
        w,
        theta,
        u: math::exp(beta * p.jz) * math::cosh(2.0 * beta * w),
        v: -math::exp(beta * p.jz) * math::sinh(2.0 * beta * w),
        z: 2.0 * math::exp(-beta * p.jz) + 2.0 * math::exp(beta * p.jz) * math::cosh(2.0 * beta * w),
    };
    Ok((rho, form))
}

/// Scalars of the closed-form Dx thermal state; see [`thermal_state_closed_dx`].
///
/// As with [`DzClosedForm`], the weights are the plain values and may
/// overflow at very low T even though the assembled state does not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DxClosedForm {
    /// `sqrt((J + Jz)^2 + 4 Dx^2)`.
    pub w_prime: f64,
    /// Mixing angle of the `-J + w'` eigenvector, `arctan(2 Dx / (J + Jz - w'))`.
    pub phi: f64,
    /// Mixing angle of the `-J - w'` eigenvector, `arctan(2 Dx / (J + Jz + w'))`.
    pub varphi: f64,
    pub mu_plus: f64,
    pub mu_minus: f64,
    pub nu_plus: f64,
    pub nu_minus: f64,
    /// Purely imaginary coherence between the outer and inner blocks.
    pub xi: Complex64,
    /// Partition function `2 e^{-beta J} cosh(beta(J - Jz)) + 2 e^{beta J} cosh(beta w')`.
    pub z_prime: f64,
}

/// Angle plus the squared/cross trig terms for an eigenvector direction
/// `tan(angle) = y / x`. When both arguments vanish the direction is the
/// degenerate limit `angle -> pi/2` (sin^2 = 1), which is the value the
/// non-degenerate neighborhood converges to.
fn angle_terms(y: f64, x: f64) -> (f64, f64, f64, f64) {
    if y == 0.0 && x == 0.0 {
        return (core::f64::consts::FRAC_PI_2, 1.0, 0.0, 0.0);
    }
    let angle = math::atan2(y, x);
    let s = math::sin(angle);
    let c = math::cos(angle);
    (angle, s * s, c * c, s * c)
}

/// Closed-form thermal state of the Dx model, assembled as
///
/// ```text
///            | mu+  -xi   xi   mu- |
///  1/(2 Z') .|  xi  nu+   nu-  -xi |
///            | -xi  nu-   nu+   xi |
///            | mu-   xi  -xi   mu+ |
/// ```
///
/// with `mu+- = e^{-b Jz} +- (e^{b(J-w')} sin^2 phi + e^{b(J+w')} sin^2 varphi)`,
/// `nu+-` the matching cos^2 combination around `e^{b(Jz-2J)}`, and
/// `xi = i (e^{b(J-w')} sin phi cos phi + e^{b(J+w')} sin varphi cos varphi)`.
///
/// When `w' = 0` (J + Jz = 0 and Dx = 0) both mixing angles are undefined and
/// the state falls back to the Gibbs oracle.
pub fn thermal_state_closed_dx(
    p: &ModelParams,
) -> Result<(DensityMatrix4, DxClosedForm), ModelError> {
    require_model(p, Model::Dx)?;
    require_thermal(p)?;
    let beta = p.beta();
    let a = p.j + p.jz;
    let w_prime = math::hypot(a, 2.0 * p.d);

    if w_prime == 0.0 {
        // Doubly degenerate (s-, t-) block; any orthonormal pair of angles
        // assembles the same state, so delegate to the oracle and report the
        // (pi/2, 0) convention.
        let rho = gibbs_oracle(&hamiltonian_dx(p)?, p.t)?;
        let k_inner = math::exp(beta * p.j);
        let form = DxClosedForm {
            w_prime,
            phi: core::f64::consts::FRAC_PI_2,
            varphi: 0.0,
            mu_plus: math::exp(-beta * p.jz) + k_inner,
            mu_minus: math::exp(-beta * p.jz) - k_inner,
            nu_plus: math::exp(beta * (p.jz - 2.0 * p.j)) + k_inner,
            nu_minus: math::exp(beta * (p.jz - 2.0 * p.j)) - k_inner,
            xi: Complex64::ZERO,
            z_prime: 2.0 * math::exp(-beta * p.j) * math::cosh(beta * (p.j - p.jz))
                + 2.0 * math::exp(beta * p.j),
        };
        return Ok((rho, form));
    }

    let (phi, sin2_phi, cos2_phi, sc_phi) = angle_terms(2.0 * p.d, a - w_prime);
    let (varphi, sin2_var, cos2_var, sc_var) = angle_terms(2.0 * p.d, a + w_prime);

    // Spectrum: Jz (|00> +- |11> symmetric combo), 2J - Jz (|01> + |10>),
    // -J +- w' (the mixed block).
    let e1 = p.jz;
    let e2 = 2.0 * p.j - p.jz;
    let e3 = -p.j + w_prime;
    let e4 = -p.j - w_prime;
    let shift = e1.min(e2).min(e4);

    let k1 = math::exp(-beta * (e1 - shift));
    let k2 = math::exp(-beta * (e2 - shift));
    let k3 = math::exp(-beta * (e3 - shift));
    let k4 = math::exp(-beta * (e4 - shift));

    let sin_part = k3 * sin2_phi + k4 * sin2_var;
    let cos_part = k3 * cos2_phi + k4 * cos2_var;
    let cross = k3 * sc_phi + k4 * sc_var;

    let norm = 2.0 * (k1 + k2 + k3 + k4);
    let mu_p = (k1 + sin_part) / norm;
    let mu_m = (k1 - sin_part) / norm;
    let nu_p = (k2 + cos_part) / norm;
    let nu_m = (k2 - cos_part) / norm;
    let xi = Complex64::new(0.0, cross / norm);

    let re = |x: f64| Complex64::new(x, 0.0);
    let m = ComplexMatrix4::from_rows([
        [re(mu_p), -xi, xi, re(mu_m)],
        [xi, re(nu_p), re(nu_m), -xi],
        [-xi, re(nu_m), re(nu_p), xi],
        [re(mu_m), xi, -xi, re(mu_p)],
    ]);
    let rho = DensityMatrix4::new(m)?;

    let b1 = math::exp(-beta * e1);
    let b2 = math::exp(-beta * e2);
    let b3 = math::exp(-beta * e3);
    let b4 = math::exp(-beta * e4);
    let form = DxClosedForm {
        w_prime,
        phi,
        varphi,
        mu_plus: b1 + (b3 * sin2_phi + b4 * sin2_var),
        mu_minus: b1 - (b3 * sin2_phi + b4 * sin2_var),
        nu_plus: b2 + (b3 * cos2_phi + b4 * cos2_var),
        nu_minus: b2 - (b3 * cos2_phi + b4 * cos2_var),
        xi: Complex64::new(0.0, b3 * sc_phi + b4 * sc_var),
        z_prime: 2.0 * math::exp(-beta * p.j) * math::cosh(beta * (p.j - p.jz))
            + 2.0 * math::exp(beta * p.j) * math::cosh(beta * w_prime),
    };
    Ok((rho, form))
}

/// Thermal state selected by `p.model`, built from the closed forms.
pub fn thermal_state(p: &ModelParams) -> Result<DensityMatrix4, ModelError> {
    match p.model {
        Model::Dz => thermal_state_closed_dz(p).map(|(rho, _)| rho),
        Model::Dx => thermal_state_closed_dx(p).map(|(rho, _)| rho),
    }
}

/// Closed-form concurrence of the Dz thermal state as published:
/// `(beta Jz / Z) (e^{2 beta w} - e^{-2 beta w} - 2 e^{-2 beta Jz})` for
/// `Jz > -w`, zero for `Jz < -w`, clamped below at zero.
///
/// The published prefactor makes this expression disagree with the Wootters
/// procedure, which is the authoritative one; this evaluator exists so the
/// two can be compared side by side.
pub fn concurrence_closed_dz(p: &ModelParams) -> Result<f64, ModelError> {
    require_model(p, Model::Dz)?;
    require_thermal(p)?;
    let beta = p.beta();
    let w = math::hypot(p.j, p.d);
    if p.jz < -w {
        return Ok(0.0);
    }
    // Numerator and denominator scaled by e^{-2 beta w} so only the
    // e^{beta Jz} factor can grow large.
    let num = 1.0 - math::exp(-4.0 * beta * w) - 2.0 * math::exp(-2.0 * beta * (p.jz + w));
    let den = 2.0 * math::exp(-beta * (p.jz + 2.0 * w))
        + math::exp(beta * p.jz) * (1.0 + math::exp(-4.0 * beta * w));
    Ok((beta * p.jz * num / den).max(0.0))
}
