//! Randomized property checks for the linear-algebra layer, against
//! independent oracles (trace, cofactor determinant, unitary conjugation).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use xxzdm_core::{
    herm_eigen, partial_trace, tensor_product, von_neumann_entropy, Complex64, ComplexMatrix,
    ComplexMatrix2, ComplexMatrix4, DensityMatrix, DensityMatrix4, Subsystem,
};

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_hermitian4(rng: &mut ChaCha8Rng) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    for i in 0..4 {
        m[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..4 {
            let e = random_complex(rng);
            m[(i, j)] = e;
            m[(j, i)] = e.conj();
        }
    }
    m
}

fn random_density2(rng: &mut ChaCha8Rng) -> DensityMatrix<2> {
    // Ginibre-style: G G^dagger normalized to unit trace.
    let mut g = ComplexMatrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            g[(i, j)] = random_complex(rng);
        }
    }
    let m = g * g.adjoint();
    let trace = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / trace)).expect("Ginibre construction is a valid state")
}

pub fn random_density4(rng: &mut ChaCha8Rng) -> DensityMatrix4 {
    let mut g = ComplexMatrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g[(i, j)] = random_complex(rng);
        }
    }
    let m = g * g.adjoint();
    let trace = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / trace)).expect("Ginibre construction is a valid state")
}

/// Cofactor-expansion determinant, independent of the eigensolver.
fn det<const N: usize>(m: &ComplexMatrix<N>) -> Complex64 {
    fn minor(rows: &[Vec<Complex64>], skip_col: usize) -> Vec<Vec<Complex64>> {
        rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != skip_col)
                    .map(|(_, e)| *e)
                    .collect()
            })
            .collect()
    }
    fn det_rows(rows: &[Vec<Complex64>]) -> Complex64 {
        if rows.len() == 1 {
            return rows[0][0];
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for col in 0..rows.len() {
            let cofactor = det_rows(&minor(rows, col));
            let signed = if col % 2 == 0 { 1.0 } else { -1.0 };
            acc += rows[0][col] * cofactor * signed;
        }
        acc
    }
    let rows: Vec<Vec<Complex64>> = (0..N).map(|i| (0..N).map(|j| m[(i, j)]).collect()).collect();
    det_rows(&rows)
}

#[test]
fn eigenvalue_sum_matches_trace_and_product_matches_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let m = random_hermitian4(&mut rng);
        let eig = herm_eigen(&m).unwrap();
        let sum: f64 = eig.eigenvalues.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-10);

        let product: f64 = eig.eigenvalues.iter().product();
        let d = det(&m);
        assert!(d.im.abs() < 1e-10);
        let scale = d.re.abs().max(product.abs()).max(1e-12);
        assert!(
            (product - d.re).abs() / scale < 1e-8,
            "eigenvalue product {product} vs determinant {}",
            d.re
        );
    }
}

#[test]
fn reconstruction_error_stays_below_1e10_on_1000_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let m = random_hermitian4(&mut rng);
        let eig = herm_eigen(&m).unwrap();
        worst = worst.max(eig.reconstruct().max_abs_diff(&m));
    }
    assert!(worst < 1e-10, "worst reconstruction error {worst}");
}

#[test]
fn partial_trace_of_product_state_recovers_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let rho_a = random_density2(&mut rng);
        let rho_b = random_density2(&mut rng);
        let product =
            DensityMatrix::new(tensor_product(rho_a.matrix(), rho_b.matrix())).unwrap();
        let back_a = partial_trace(&product, Subsystem::A);
        let back_b = partial_trace(&product, Subsystem::B);
        assert!(back_a.matrix().max_abs_diff(rho_a.matrix()) < 1e-12);
        assert!(back_b.matrix().max_abs_diff(rho_b.matrix()) < 1e-12);
    }
}

#[test]
fn entropy_is_invariant_under_unitary_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let rho = random_density4(&mut rng);
        // Eigenvectors of a random Hermitian matrix form a Haar-ish unitary.
        let eig = herm_eigen(&random_hermitian4(&mut rng)).unwrap();
        let mut u = ComplexMatrix4::zeros();
        for k in 0..4 {
            for i in 0..4 {
                u[(i, k)] = eig.eigenvectors[k][i];
            }
        }
        let rotated = DensityMatrix::new(u * *rho.matrix() * u.adjoint()).unwrap();
        let s0 = von_neumann_entropy(&rho).unwrap();
        let s1 = von_neumann_entropy(&rotated).unwrap();
        assert!((s0 - s1).abs() < 1e-9, "{s0} vs {s1}");
    }
}
