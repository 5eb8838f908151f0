//! Dense complex Hermitian linear algebra on 2x2 and 4x4 matrices.
//!
//! Provides the eigendecomposition (cyclic Jacobi rotations), partial trace,
//! tensor products, and von Neumann entropy that the thermal-state and
//! correlation machinery is built on. Matrices are fixed-size stack arrays;
//! nothing here allocates.

use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use crate::math;

pub type Complex64 = num_complex::Complex<f64>;

/// Tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance for the unit-trace check on density matrices.
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues of a density matrix may dip this far below zero from rounding;
/// anything lower is rejected, anything in `(EIGENVALUE_FLOOR, 0]` clamps to 0.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

const JACOBI_OFFDIAG_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

#[inline]
fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Validation failures for the matrix types in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinalgError {
    /// `entry[row][col]` is not the conjugate of `entry[col][row]` within tolerance.
    NotHermitian { row: usize, col: usize },
    /// The trace differs from 1 beyond tolerance.
    TraceNotOne { trace: f64 },
    /// An eigenvalue lies below the rounding floor for positive semidefiniteness.
    NegativeEigenvalue { value: f64 },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotHermitian { row, col } => write!(
                f,
                "matrix is not Hermitian: entry ({row},{col}) is not the conjugate of ({col},{row})"
            ),
            LinalgError::TraceNotOne { trace } => {
                write!(f, "density matrix trace is {trace}, expected 1")
            }
            LinalgError::NegativeEigenvalue { value } => {
                write!(f, "density matrix has negative eigenvalue {value}")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Square complex matrix of compile-time dimension `N` (2 or 4 in practice).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix<const N: usize> {
    entries: [[Complex64; N]; N],
}

pub type ComplexMatrix2 = ComplexMatrix<2>;
pub type ComplexMatrix4 = ComplexMatrix<4>;

impl<const N: usize> ComplexMatrix<N> {
    pub fn zeros() -> Self {
        Self {
            entries: [[Complex64::ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.entries[i][i] = Complex64::ONE;
        }
        m
    }

    pub fn from_rows(entries: [[Complex64; N]; N]) -> Self {
        Self { entries }
    }

    pub fn from_diagonal(diag: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.entries[i][i] = cr(diag[i]);
        }
        m
    }

    pub const fn dim(&self) -> usize {
        N
    }

    pub fn trace(&self) -> Complex64 {
        let mut t = Complex64::ZERO;
        for i in 0..N {
            t += self.entries[i][i];
        }
        t
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.conj();
            }
        }
        m
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for e in row.iter_mut() {
                *e *= factor;
            }
        }
        m
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                let d = (self.entries[i][j] - other.entries[i][j]).norm_sqr();
                if d > worst {
                    worst = d;
                }
            }
        }
        math::sqrt(worst)
    }

    /// Index pair `(i, j)` with `i < j` most violating Hermitian symmetry,
    /// if the violation exceeds `tol`. Also flags non-real diagonal entries
    /// as `(i, i)`.
    pub fn hermiticity_violation(&self, tol: f64) -> Option<(usize, usize)> {
        let mut worst = tol;
        let mut pair = None;
        for i in 0..N {
            let d = math::abs(self.entries[i][i].im);
            if d > worst {
                worst = d;
                pair = Some((i, i));
            }
            for j in (i + 1)..N {
                let d = (self.entries[i][j] - self.entries[j][i].conj()).norm();
                if d > worst {
                    worst = d;
                    pair = Some((i, j));
                }
            }
        }
        pair
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_violation(tol).is_none()
    }
}

impl<const N: usize> Index<(usize, usize)> for ComplexMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for ComplexMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i][j]
    }
}

impl<const N: usize> Add for ComplexMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] += rhs.entries[i][j];
            }
        }
        m
    }
}

impl<const N: usize> Sub for ComplexMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] -= rhs.entries[i][j];
            }
        }
        m
    }
}

impl<const N: usize> Mul for ComplexMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.entries[i][k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..N {
                    m.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

/// Pauli sigma_x.
pub fn pauli_x() -> ComplexMatrix2 {
    ComplexMatrix::from_rows([[cr(0.0), cr(1.0)], [cr(1.0), cr(0.0)]])
}

/// Pauli sigma_y.
pub fn pauli_y() -> ComplexMatrix2 {
    ComplexMatrix::from_rows([[cr(0.0), c(0.0, -1.0)], [c(0.0, 1.0), cr(0.0)]])
}

/// Pauli sigma_z.
pub fn pauli_z() -> ComplexMatrix2 {
    ComplexMatrix::from_rows([[cr(1.0), cr(0.0)], [cr(0.0), cr(-1.0)]])
}

/// Kronecker product in the basis ordering {|00>, |01>, |10>, |11>}:
/// entry `(2a+b, 2a'+b')` is `m1[a][a'] * m2[b][b']`.
pub fn tensor_product(m1: &ComplexMatrix2, m2: &ComplexMatrix2) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    for a in 0..2 {
        for ap in 0..2 {
            for b in 0..2 {
                for bp in 0..2 {
                    m[(2 * a + b, 2 * ap + bp)] = m1[(a, ap)] * m2[(b, bp)];
                }
            }
        }
    }
    m
}

/// A 4x4 matrix validated Hermitian on construction; holds the Hamiltonians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix4 {
    matrix: ComplexMatrix4,
}

impl HermitianMatrix4 {
    pub fn new(matrix: ComplexMatrix4) -> Result<Self, LinalgError> {
        match matrix.hermiticity_violation(HERMITICITY_TOL) {
            Some((row, col)) => Err(LinalgError::NotHermitian { row, col }),
            None => Ok(Self { matrix }),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.matrix
    }
}

/// Which qubit survives a partial trace. Qubit ordering is A tensor B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Trace-one positive-semidefinite Hermitian matrix.
///
/// `new` enforces all three invariants (Hermitian within 1e-12, trace one
/// within 1e-10, eigenvalues above -1e-10); operations that preserve them
/// construct results internally without re-validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<const N: usize> {
    matrix: ComplexMatrix<N>,
}

pub type DensityMatrix2 = DensityMatrix<2>;
pub type DensityMatrix4 = DensityMatrix<4>;

impl<const N: usize> DensityMatrix<N> {
    pub fn new(matrix: ComplexMatrix<N>) -> Result<Self, LinalgError> {
        if let Some((row, col)) = matrix.hermiticity_violation(HERMITICITY_TOL) {
            return Err(LinalgError::NotHermitian { row, col });
        }
        let trace = matrix.trace().re;
        if math::abs(trace - 1.0) > TRACE_TOL {
            return Err(LinalgError::TraceNotOne { trace });
        }
        let eig = herm_eigen(&matrix)?;
        for &value in eig.eigenvalues.iter() {
            if value < EIGENVALUE_FLOOR {
                return Err(LinalgError::NegativeEigenvalue { value });
            }
        }
        Ok(Self { matrix })
    }

    /// Construct without validation; callers must guarantee the invariants
    /// structurally (e.g. partial traces and spectral mixtures of valid states).
    pub(crate) fn trusted(matrix: ComplexMatrix<N>) -> Self {
        debug_assert!(matrix.is_hermitian(HERMITICITY_TOL));
        debug_assert!(math::abs(matrix.trace().re - 1.0) <= TRACE_TOL);
        Self { matrix }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            matrix: ComplexMatrix::identity().scale(1.0 / N as f64),
        }
    }

    /// Projector |psi><psi| onto a state vector, normalized internally.
    pub fn from_pure(state: [Complex64; N]) -> Self {
        let mut norm_sqr = 0.0;
        for a in state.iter() {
            norm_sqr += a.norm_sqr();
        }
        let mut m = ComplexMatrix::zeros();
        for i in 0..N {
            for j in 0..N {
                m[(i, j)] = state[i] * state[j].conj() / norm_sqr;
            }
        }
        Self::trusted(m)
    }

    pub fn matrix(&self) -> &ComplexMatrix<N> {
        &self.matrix
    }

    pub const fn dim(&self) -> usize {
        N
    }
}

/// Reduce a two-qubit state to one qubit, summing out the other.
pub fn partial_trace(rho: &DensityMatrix4, keep: Subsystem) -> DensityMatrix2 {
    DensityMatrix::trusted(partial_trace_matrix(rho.matrix(), keep))
}

/// Partial trace on a raw (possibly unnormalized) 4x4 matrix.
pub(crate) fn partial_trace_matrix(m: &ComplexMatrix4, keep: Subsystem) -> ComplexMatrix2 {
    let mut out = ComplexMatrix2::zeros();
    match keep {
        Subsystem::A => {
            for a in 0..2 {
                for ap in 0..2 {
                    out[(a, ap)] = m[(2 * a, 2 * ap)] + m[(2 * a + 1, 2 * ap + 1)];
                }
            }
        }
        Subsystem::B => {
            for b in 0..2 {
                for bp in 0..2 {
                    out[(b, bp)] = m[(b, bp)] + m[(2 + b, 2 + bp)];
                }
            }
        }
    }
    out
}

/// Real spectrum and orthonormal eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone, Copy)]
pub struct EigenDecomposition<const N: usize> {
    /// Sorted descending.
    pub eigenvalues: [f64; N],
    /// `eigenvectors[i]` is the unit eigenvector paired with `eigenvalues[i]`.
    pub eigenvectors: [[Complex64; N]; N],
}

impl<const N: usize> EigenDecomposition<N> {
    /// Rebuild `sum_i lambda_i |v_i><v_i|`.
    pub fn reconstruct(&self) -> ComplexMatrix<N> {
        let mut m = ComplexMatrix::zeros();
        for k in 0..N {
            let v = &self.eigenvectors[k];
            let lambda = self.eigenvalues[k];
            for i in 0..N {
                for j in 0..N {
                    m[(i, j)] += lambda * v[i] * v[j].conj();
                }
            }
        }
        m
    }
}

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations, sweeping until the largest off-diagonal magnitude drops below
/// 1e-13 or 100 sweeps have run.
pub fn herm_eigen<const N: usize>(
    m: &ComplexMatrix<N>,
) -> Result<EigenDecomposition<N>, LinalgError> {
    if let Some((row, col)) = m.hermiticity_violation(HERMITICITY_TOL) {
        return Err(LinalgError::NotHermitian { row, col });
    }

    // Work on the Hermitian average so sub-tolerance asymmetry cannot leak
    // into the rotations.
    let mut a = *m;
    for i in 0..N {
        a[(i, i)] = cr(a[(i, i)].re);
        for j in (i + 1)..N {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }

    let mut vectors = ComplexMatrix::<N>::identity();

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for i in 0..N {
            for j in (i + 1)..N {
                let mag = a[(i, j)].norm();
                if mag > off {
                    off = mag;
                }
            }
        }
        if off < JACOBI_OFFDIAG_TOL {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                jacobi_rotate(&mut a, &mut vectors, p, q);
            }
        }
    }

    // Diagonal now holds the eigenvalues; sort descending and carry the
    // matching eigenvector columns along.
    let mut order = [0usize; N];
    for (i, slot) in order.iter_mut().enumerate() {
        *slot = i;
    }
    order.sort_unstable_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .unwrap_or(core::cmp::Ordering::Equal)
    });

    let mut eigenvalues = [0.0f64; N];
    let mut eigenvectors = [[Complex64::ZERO; N]; N];
    for (slot, &col) in order.iter().enumerate() {
        eigenvalues[slot] = a[(col, col)].re;
        for row in 0..N {
            eigenvectors[slot][row] = vectors[(row, col)];
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One Jacobi rotation zeroing `a[p][q]` (and its conjugate); accumulates the
/// unitary into `vectors` column-wise.
fn jacobi_rotate<const N: usize>(
    a: &mut ComplexMatrix<N>,
    vectors: &mut ComplexMatrix<N>,
    p: usize,
    q: usize,
) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;

    // tan(2*theta) = 2|a_pq| / (a_pp - a_qq); pick the smaller rotation.
    let kappa = (a[(p, p)].re - a[(q, q)].re) / (2.0 * r);
    let sign = if kappa < 0.0 { -1.0 } else { 1.0 };
    let t = sign / (math::abs(kappa) + math::sqrt(kappa * kappa + 1.0));
    let cos = 1.0 / math::sqrt(t * t + 1.0);
    let sin = t * cos;

    // Column update A <- A*U with U = [[c, -s*phase], [s*conj(phase), c]] on (p, q).
    for i in 0..N {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * cos + aiq * (sin * phase.conj());
        a[(i, q)] = aiq * cos - aip * (sin * phase);
    }
    // Row update A <- U^dagger * A.
    for j in 0..N {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * cos + aqj * (sin * phase);
        a[(q, j)] = aqj * cos - apj * (sin * phase.conj());
    }
    a[(p, q)] = Complex64::ZERO;
    a[(q, p)] = Complex64::ZERO;
    a[(p, p)] = cr(a[(p, p)].re);
    a[(q, q)] = cr(a[(q, q)].re);

    for i in 0..N {
        let vip = vectors[(i, p)];
        let viq = vectors[(i, q)];
        vectors[(i, p)] = vip * cos + viq * (sin * phase.conj());
        vectors[(i, q)] = viq * cos - vip * (sin * phase);
    }
}

/// Shannon entropy (base 2) of a clamped eigenvalue spectrum, with the
/// convention 0*log(0) = 0. Values in `(EIGENVALUE_FLOOR, 0]` clamp to zero.
pub(crate) fn entropy_from_eigenvalues(eigenvalues: &[f64]) -> Result<f64, LinalgError> {
    let mut s = 0.0;
    for &value in eigenvalues {
        if value < EIGENVALUE_FLOOR {
            return Err(LinalgError::NegativeEigenvalue { value });
        }
        if value > 0.0 {
            s -= value * math::log2(value);
        }
    }
    // A spectrum entry infinitesimally above 1 can push a term below zero.
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits, computed from the eigenvalue spectrum.
pub fn von_neumann_entropy<const N: usize>(rho: &DensityMatrix<N>) -> Result<f64, LinalgError> {
    let eig = herm_eigen(rho.matrix())?;
    entropy_from_eigenvalues(&eig.eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2: f64 = core::f64::consts::SQRT_2;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} != {b} (tol {tol})");
    }

    /// Eq.-(10)-shaped test Hamiltonian.
    fn dz_matrix(j: f64, jz: f64, dz: f64) -> ComplexMatrix4 {
        let mut m = ComplexMatrix4::from_diagonal([jz, -jz, -jz, jz]);
        m[(1, 2)] = c(2.0 * j, 2.0 * dz);
        m[(2, 1)] = c(2.0 * j, -2.0 * dz);
        m
    }

    #[test]
    fn eigen_identity() {
        let eig = herm_eigen(&ComplexMatrix4::identity()).unwrap();
        for v in eig.eigenvalues {
            assert_close(v, 1.0, 1e-14);
        }
    }

    #[test]
    fn eigen_diagonal_sorts_descending() {
        let m = ComplexMatrix4::from_diagonal([1.0, 2.0, 3.0, 4.0]);
        let eig = herm_eigen(&m).unwrap();
        assert_eq!(eig.eigenvalues, [4.0, 3.0, 2.0, 1.0]);
    }

    #[test]
    fn eigen_dz_hamiltonian_block_reduction() {
        // Outer block contributes J_z twice, inner block -J_z +- 2w.
        let eig = herm_eigen(&dz_matrix(1.0, 0.2, 1.0)).unwrap();
        let w = 2.0f64.sqrt();
        let expected = [2.0 * w - 0.2, 0.2, 0.2, -2.0 * w - 0.2];
        for (got, want) in eig.eigenvalues.iter().zip(expected) {
            assert_close(*got, want, 1e-12);
        }
    }

    #[test]
    fn eigen_reconstructs_and_is_orthonormal() {
        let m = dz_matrix(1.3, -0.4, 0.8);
        let eig = herm_eigen(&m).unwrap();
        assert!(eig.reconstruct().max_abs_diff(&m) < 1e-10);
        for i in 0..4 {
            for j in 0..4 {
                let mut dot = Complex64::ZERO;
                for k in 0..4 {
                    dot += eig.eigenvectors[i][k].conj() * eig.eigenvectors[j][k];
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot - cr(expected)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn eigen_rejects_non_hermitian_naming_pair() {
        let mut m = ComplexMatrix4::identity();
        m[(0, 2)] = cr(0.5);
        // (2, 0) left at zero.
        assert_eq!(
            herm_eigen(&m).unwrap_err(),
            LinalgError::NotHermitian { row: 0, col: 2 }
        );
    }

    #[test]
    fn tensor_product_identities() {
        let eye = ComplexMatrix2::identity();
        assert_eq!(tensor_product(&eye, &eye), ComplexMatrix4::identity());

        let zz = tensor_product(&pauli_z(), &pauli_z());
        assert_eq!(zz, ComplexMatrix4::from_diagonal([1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn tensor_product_xy_antidiagonal() {
        let xy = tensor_product(&pauli_x(), &pauli_y());
        let mut expected = ComplexMatrix4::zeros();
        expected[(0, 3)] = c(0.0, -1.0);
        expected[(1, 2)] = c(0.0, 1.0);
        expected[(2, 1)] = c(0.0, -1.0);
        expected[(3, 0)] = c(0.0, 1.0);
        assert_eq!(xy, expected);
    }

    #[test]
    fn partial_trace_product_state() {
        let rho = DensityMatrix::from_pure([cr(1.0), cr(0.0), cr(0.0), cr(0.0)]);
        let a = partial_trace(&rho, Subsystem::A);
        let mut expected = ComplexMatrix2::zeros();
        expected[(0, 0)] = cr(1.0);
        assert!(a.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn partial_trace_maximally_mixed() {
        let rho = DensityMatrix4::maximally_mixed();
        let b = partial_trace(&rho, Subsystem::B);
        assert!(
            b.matrix()
                .max_abs_diff(&ComplexMatrix2::identity().scale(0.5))
                < 1e-15
        );
    }

    #[test]
    fn entropy_pure_and_mixed() {
        let pure = DensityMatrix::from_pure([cr(0.0), cr(1.0), cr(0.0), cr(0.0)]);
        assert_close(von_neumann_entropy(&pure).unwrap(), 0.0, 1e-12);
        assert_close(
            von_neumann_entropy(&DensityMatrix2::maximally_mixed()).unwrap(),
            1.0,
            1e-12,
        );
        assert_close(
            von_neumann_entropy(&DensityMatrix4::maximally_mixed()).unwrap(),
            2.0,
            1e-12,
        );
    }

    #[test]
    fn entropy_of_bell_state_halves() {
        let bell = DensityMatrix::from_pure([cr(0.0), cr(1.0 / SQRT_2), cr(-1.0 / SQRT_2), cr(0.0)]);
        assert_close(von_neumann_entropy(&bell).unwrap(), 0.0, 1e-10);
        let a = partial_trace(&bell, Subsystem::A);
        assert_close(von_neumann_entropy(&a).unwrap(), 1.0, 1e-10);
    }

    #[test]
    fn density_matrix_validation() {
        // Trace off by too much.
        let m = ComplexMatrix4::from_diagonal([0.5, 0.5, 0.5, 0.0]);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(LinalgError::TraceNotOne { .. })
        ));

        // Negative eigenvalue.
        let m = ComplexMatrix4::from_diagonal([1.5, -0.5, 0.0, 0.0]);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(LinalgError::NegativeEigenvalue { .. })
        ));

        // Non-Hermitian.
        let mut m = ComplexMatrix4::from_diagonal([0.25, 0.25, 0.25, 0.25]);
        m[(0, 1)] = c(0.0, 0.1);
        m[(1, 0)] = c(0.0, 0.1);
        assert!(matches!(
            DensityMatrix::new(m),
            Err(LinalgError::NotHermitian { row: 0, col: 1 })
        ));

        assert!(DensityMatrix::new(ComplexMatrix4::identity().scale(0.25)).is_ok());
    }
}
