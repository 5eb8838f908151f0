//! Thermal quantum correlations of a two-qubit anisotropic Heisenberg XXZ
//! chain with Dzyaloshinskii-Moriya (DM) interaction.
//!
//! The crate builds the two DM-coupled XXZ Hamiltonians (z-axis and x-axis
//! DM vectors), their thermal (Gibbs) states in both closed form and through
//! an eigendecomposition-based oracle, and evaluates quantum mutual
//! information, classical correlation, quantum discord, and Wootters
//! concurrence on the resulting two-qubit density matrices.
//!
//! Everything here is pure computation over fixed-size complex matrices, so
//! the crate is `no_std`-compatible: disable the default `std` feature and
//! enable `libm` to route scalar math through [`libm`].

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("xxzdm-core requires either the `std` or the `libm` feature");

mod math;

pub mod correlations;
pub mod linalg;
pub mod models;

pub use correlations::{
    classical_correlation, concurrence_comparison_dz, concurrence_wootters, conditional_entropy,
    critical_temperature, mutual_information, quantum_discord, ClassicalCorrelation,
    CorrelationReport, CriticalTemperature, MeasurementBasis,
};
pub use linalg::{
    herm_eigen, partial_trace, tensor_product, von_neumann_entropy, Complex64, ComplexMatrix,
    ComplexMatrix2, ComplexMatrix4, DensityMatrix, DensityMatrix2, DensityMatrix4,
    EigenDecomposition, HermitianMatrix4, LinalgError, Subsystem,
};
pub use models::{
    concurrence_closed_dz, gibbs_oracle, ground_state_limit, hamiltonian, hamiltonian_dx,
    hamiltonian_dz, thermal_state, thermal_state_closed_dx, thermal_state_closed_dz, DxClosedForm,
    DzClosedForm, Model, ModelError, ModelParams,
};
