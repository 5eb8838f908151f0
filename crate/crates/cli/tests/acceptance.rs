//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). Every tolerance is pinned in the constants
//! below.
//!
//! Criterion 6 is implemented exactly as stated and is expected to fail:
//! with the standard definitions, discord and concurrence both increase with
//! the DM strength at those couplings, for both models. Two independent
//! implementations and an analytic monotonicity argument agree; see the test
//! body for details.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use xxzdm_cli::figures::{render_figure_csv, FigureId};
use xxzdm_cli::tendency::detect_opposite_tendency;
use xxzdm_cli::ModelArg;
use xxzdm_core::{
    classical_correlation, conditional_entropy, critical_temperature, gibbs_oracle, hamiltonian,
    partial_trace, quantum_discord, thermal_state, thermal_state_closed_dx,
    thermal_state_closed_dz, Complex64, ComplexMatrix2, ComplexMatrix4, CriticalTemperature,
    DensityMatrix, DensityMatrix4, MeasurementBasis, Model, ModelParams, Subsystem,
};

const ORACLE_POINTS_PER_MODEL: usize = 500;
const ORACLE_TOL: f64 = 1e-9;
const ORACLE_BUDGET_SECS: f64 = 10.0;
const REDUCED_TOL: f64 = 1e-10;
const DISCORD_FLOOR: f64 = -1e-9;
const BELL_DISCORD_TOL: f64 = 1e-6;
const ROBUSTNESS_BUDGET_SECS: f64 = 5.0;
const DISCORD_AT_TC_PLUS_1_MIN: f64 = 1e-4;
const OPPOSITE_RANGE: (f64, f64) = (0.3, 1.2);
const OPPOSITE_POINTS: usize = 46;
const DENSE_GRID_THETA: usize = 513;
const DENSE_GRID_PHI: usize = 1025;
const OPTIMIZER_STATES: usize = 20;
const OPTIMIZER_TOL: f64 = 1e-6;
const OPTIMIZER_BUDGET_SECS: f64 = 60.0;
const FIGURES_BUDGET_SECS: f64 = 180.0;

fn random_params(rng: &mut ChaCha8Rng, model: Model) -> ModelParams {
    ModelParams::new(
        model,
        rng.gen_range(0.0..3.0),
        rng.gen_range(0.0..3.0),
        rng.gen_range(0.0..2.0),
        rng.gen_range(0.05..20.0),
    )
}

fn closed_state(p: &ModelParams) -> DensityMatrix4 {
    match p.model {
        Model::Dz => thermal_state_closed_dz(p).unwrap().0,
        Model::Dx => thermal_state_closed_dx(p).unwrap().0,
    }
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for model in [Model::Dz, Model::Dx] {
        for _ in 0..ORACLE_POINTS_PER_MODEL {
            let p = random_params(&mut rng, model);
            let closed = closed_state(&p);
            let oracle = gibbs_oracle(&hamiltonian(&p).unwrap(), p.t).unwrap();
            worst = worst.max(closed.matrix().max_abs_diff(oracle.matrix()));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let ok = worst < ORACLE_TOL && elapsed < ORACLE_BUDGET_SECS;
    println!(
        "criterion 1 {} — closed forms vs Gibbs oracle on {}x2 random points: worst {worst:.3e} \
         (tol {ORACLE_TOL:.0e}), {elapsed:.2} s (budget {ORACLE_BUDGET_SECS} s)",
        if ok { "PASS" } else { "FAIL" },
        ORACLE_POINTS_PER_MODEL,
    );
    assert!(ok, "worst deviation {worst:.3e}, elapsed {elapsed:.2} s");
}

#[test]
fn criterion_2_reduced_state_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let half = ComplexMatrix2::identity().scale(0.5);
    let mut worst = 0.0f64;
    for model in [Model::Dz, Model::Dx] {
        for _ in 0..ORACLE_POINTS_PER_MODEL {
            let p = random_params(&mut rng, model);
            let rho = closed_state(&p);
            for keep in [Subsystem::A, Subsystem::B] {
                worst = worst.max(partial_trace(&rho, keep).matrix().max_abs_diff(&half));
            }
        }
    }
    let ok = worst < REDUCED_TOL;
    println!(
        "criterion 2 {} — both reduced states equal I/2: worst deviation {worst:.3e} \
         (tol {REDUCED_TOL:.0e})",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(ok, "worst deviation {worst:.3e}");
}

#[test]
fn criterion_3_discord_sanity_suite() {
    let bell = DensityMatrix::from_pure([
        Complex64::new(0.0, 0.0),
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(-std::f64::consts::FRAC_1_SQRT_2, 0.0),
        Complex64::new(0.0, 0.0),
    ]);
    let maximally_mixed = DensityMatrix4::maximally_mixed();
    let classical =
        DensityMatrix::new(ComplexMatrix4::from_diagonal([0.5, 0.0, 0.0, 0.5])).unwrap();
    let werner_boundary = {
        let m = ComplexMatrix4::identity().scale(0.5 / 4.0) + bell.matrix().scale(0.5);
        DensityMatrix::new(m).unwrap()
    };
    let thermal = thermal_state(&ModelParams::new(Model::Dz, 1.0, 0.2, 1.0, 1.0)).unwrap();

    let mut ok = true;
    let mut notes = Vec::new();
    for (name, rho) in [
        ("I/4", &maximally_mixed),
        ("bell", &bell),
        ("classical", &classical),
        ("werner", &werner_boundary),
        ("thermal", &thermal),
    ] {
        let r = quantum_discord(rho).unwrap();
        if r.quantum_discord_raw < DISCORD_FLOOR {
            ok = false;
            notes.push(format!("{name}: raw discord {}", r.quantum_discord_raw));
        }
        if r.quantum_discord > r.mutual_information + 1e-9 {
            ok = false;
            notes.push(format!("{name}: discord exceeds mutual information"));
        }
    }

    let mixed_discord = quantum_discord(&maximally_mixed).unwrap().quantum_discord;
    if mixed_discord.abs() > 1e-12 {
        ok = false;
        notes.push(format!("discord(I/4) = {mixed_discord}"));
    }
    let bell_discord = quantum_discord(&bell).unwrap().quantum_discord;
    if (bell_discord - 1.0).abs() > BELL_DISCORD_TOL {
        ok = false;
        notes.push(format!("discord(bell) = {bell_discord}"));
    }

    println!(
        "criterion 3 {} — discord sanity on canonical states: discord(I/4) = {mixed_discord:.1e}, \
         discord(bell) = {bell_discord:.9} (tol {BELL_DISCORD_TOL:.0e}) {}",
        if ok { "PASS" } else { "FAIL" },
        notes.join("; "),
    );
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_4_robustness_contrast() {
    let start = Instant::now();
    let p = ModelParams::new(Model::Dz, 1.0, 0.2, 1.0, 1.0);
    let tc = match critical_temperature(&p, 8.0).unwrap() {
        CriticalTemperature::Found(tc) => tc,
        other => panic!("expected a finite critical temperature, got {other:?}"),
    };
    let at_tc = quantum_discord(&thermal_state(&p.with_t(tc)).unwrap()).unwrap();
    let past = quantum_discord(&thermal_state(&p.with_t(tc + 1.0)).unwrap()).unwrap();
    let elapsed = start.elapsed().as_secs_f64();

    let ok = at_tc.concurrence == 0.0
        && past.quantum_discord > DISCORD_AT_TC_PLUS_1_MIN
        && elapsed < ROBUSTNESS_BUDGET_SECS;
    println!(
        "criterion 4 {} — concurrence dies at Tc = {tc:.6} while discord(Tc+1) = {:.4e} \
         (> {DISCORD_AT_TC_PLUS_1_MIN:.0e}), {elapsed:.2} s (budget {ROBUSTNESS_BUDGET_SECS} s)",
        if ok { "PASS" } else { "FAIL" },
        past.quantum_discord,
    );
    assert!(
        ok,
        "tc {tc}, concurrence(tc) {}, discord(tc+1) {}, elapsed {elapsed:.2} s",
        at_tc.concurrence, past.quantum_discord
    );
}

#[test]
fn criterion_5_critical_temperature_ordering() {
    let base = ModelParams::new(Model::Dz, 1.0, 0.2, 1.0, 1.0);
    let tc = |d: f64| {
        critical_temperature(&base.with_d(d), 8.0)
            .unwrap()
            .value()
            .expect("concurrence must vanish below the ceiling")
    };
    let (tc_10, tc_07, tc_05) = (tc(1.0), tc(0.7), tc(0.5));
    let ok = tc_10 > tc_07 && tc_07 > tc_05;
    println!(
        "criterion 5 {} — Tc ordering: Tc(1.0) = {tc_10:.6} > Tc(0.7) = {tc_07:.6} > \
         Tc(0.5) = {tc_05:.6}",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(ok, "{tc_10} vs {tc_07} vs {tc_05}");
}

/// Expected to FAIL. With the standard Ollivier-Zurek discord (optimizer
/// validated against a dense grid and an independent implementation) and the
/// Wootters concurrence, both quantities increase monotonically with the DM
/// strength on D in [0.3, 1.2] at J = 1, Jz = 0.2, T = 1, for both models;
/// for the Dz model the concurrence is even analytically monotone in
/// w = sqrt(J^2 + D^2). No interval with dQD/dD < 0 and dC/dD > 0 exists.
#[test]
fn criterion_6_opposite_tendency() {
    let mut ok = true;
    let mut notes = Vec::new();
    for model in [ModelArg::Dz, ModelArg::Dx] {
        let intervals = detect_opposite_tendency(
            model,
            1.0,
            0.2,
            1.0,
            OPPOSITE_RANGE.0,
            OPPOSITE_RANGE.1,
            OPPOSITE_POINTS,
        )
        .unwrap();
        let wanted: Vec<_> = intervals
            .iter()
            .filter(|i| i.discord_slope_sign == -1 && i.concurrence_slope_sign == 1)
            .collect();
        if wanted.is_empty() {
            ok = false;
            notes.push(format!(
                "{model}: no discord-down/concurrence-up interval in [{}, {}] ({} intervals of any kind)",
                OPPOSITE_RANGE.0,
                OPPOSITE_RANGE.1,
                intervals.len()
            ));
        }
    }
    println!(
        "criterion 6 {} — opposite tendency at J=1, Jz=0.2, T=1: {}",
        if ok { "PASS" } else { "FAIL" },
        if notes.is_empty() {
            "found for both models".to_string()
        } else {
            notes.join("; ")
        },
    );
    assert!(
        ok,
        "no opposite-tendency interval exists at these couplings: {notes:?}; \
         discord and concurrence both increase with D here (verified against an \
         independent dense-grid implementation)"
    );
}

#[test]
fn criterion_7_jz_monotonicity() {
    let mut ok = true;
    let mut notes = Vec::new();
    for t in [0.5, 1.0, 2.0] {
        let discord_at = |model: Model, jz: f64| {
            let p = ModelParams::new(model, 1.0, jz, 1.0, t);
            quantum_discord(&thermal_state(&p).unwrap())
                .unwrap()
                .quantum_discord
        };
        let dz: Vec<f64> = [1.0, 2.0, 3.0]
            .iter()
            .map(|&jz| discord_at(Model::Dz, jz))
            .collect();
        let dx: Vec<f64> = [0.0, 0.4, 0.9]
            .iter()
            .map(|&jz| discord_at(Model::Dx, jz))
            .collect();
        if !(dz[0] < dz[1] && dz[1] < dz[2]) {
            ok = false;
            notes.push(format!("dz at T={t}: {dz:?}"));
        }
        if !(dx[0] < dx[1] && dx[1] < dx[2]) {
            ok = false;
            notes.push(format!("dx at T={t}: {dx:?}"));
        }
    }
    println!(
        "criterion 7 {} — discord increases with Jz at T in {{0.5, 1, 2}} for both models {}",
        if ok { "PASS" } else { "FAIL" },
        notes.join("; "),
    );
    assert!(ok, "{notes:?}");
}

fn random_density4(rng: &mut ChaCha8Rng) -> DensityMatrix4 {
    let mut g = ComplexMatrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g[(i, j)] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    let m = g * g.adjoint();
    let trace = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / trace)).unwrap()
}

/// Brute-force maximum of the classical correlation: a full
/// 513x1025 scan whose raw node values carry a discretization error of a few
/// 1e-6 bits, followed by nested sub-grid zooms around every competitive
/// local minimum, which push the brute-force resolution far below the 1e-6
/// comparison tolerance. Shares no code with the compass refinement it
/// validates.
fn dense_grid_classical_correlation(rho: &DensityMatrix4) -> f64 {
    let objective = |theta: f64, phi: f64| {
        conditional_entropy(rho, &MeasurementBasis::new(theta, phi)).unwrap()
    };
    let theta_step = std::f64::consts::FRAC_PI_2 / (DENSE_GRID_THETA - 1) as f64;
    let phi_step = 2.0 * std::f64::consts::PI / DENSE_GRID_PHI as f64;

    let mut values = vec![0.0f64; DENSE_GRID_THETA * DENSE_GRID_PHI];
    for i in 0..DENSE_GRID_THETA {
        for j in 0..DENSE_GRID_PHI {
            values[i * DENSE_GRID_PHI + j] = objective(i as f64 * theta_step, j as f64 * phi_step);
        }
    }
    let coarse_best = values.iter().cloned().fold(f64::INFINITY, f64::min);

    // Grid-local minima competitive with the best node (phi wraps).
    let mut seeds = Vec::new();
    for i in 0..DENSE_GRID_THETA {
        for j in 0..DENSE_GRID_PHI {
            let v = values[i * DENSE_GRID_PHI + j];
            if v > coarse_best + 1e-5 {
                continue;
            }
            let mut is_min = true;
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let ni = i as i64 + di;
                    if ni < 0 || ni >= DENSE_GRID_THETA as i64 {
                        continue;
                    }
                    let nj = (j as i64 + dj).rem_euclid(DENSE_GRID_PHI as i64);
                    if values[ni as usize * DENSE_GRID_PHI + nj as usize] < v {
                        is_min = false;
                    }
                }
            }
            if is_min {
                seeds.push((i as f64 * theta_step, j as f64 * phi_step));
            }
        }
    }

    // Nested zooms: each pass lays a 65x65 grid across +-1 current cell and
    // shrinks the cell by 32x; three passes resolve the optimum to ~1e-7 rad.
    let mut best = coarse_best;
    for &(seed_theta, seed_phi) in &seeds {
        let (mut theta0, mut phi0) = (seed_theta, seed_phi);
        let (mut dt, mut dp) = (theta_step, phi_step);
        for _zoom in 0..3 {
            let mut local = f64::INFINITY;
            let (mut next_theta, mut next_phi) = (theta0, phi0);
            for a in 0..65 {
                let theta = (theta0 + (a as f64 / 32.0 - 1.0) * dt)
                    .clamp(0.0, std::f64::consts::FRAC_PI_2);
                for b in 0..65 {
                    let phi = phi0 + (b as f64 / 32.0 - 1.0) * dp;
                    let value = objective(theta, phi);
                    if value < local {
                        local = value;
                        next_theta = theta;
                        next_phi = phi;
                    }
                }
            }
            best = best.min(local);
            theta0 = next_theta;
            phi0 = next_phi;
            dt /= 32.0;
            dp /= 32.0;
        }
    }

    let s_a = xxzdm_core::von_neumann_entropy(&partial_trace(rho, Subsystem::A)).unwrap();
    (s_a - best).max(0.0)
}

#[test]
fn criterion_8_optimizer_validation() {
    use rayon::prelude::*;

    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let states: Vec<DensityMatrix4> = (0..OPTIMIZER_STATES)
        .map(|_| random_density4(&mut rng))
        .collect();

    let worst = states
        .par_iter()
        .map(|rho| {
            let refined = classical_correlation(rho).unwrap().value;
            let dense = dense_grid_classical_correlation(rho);
            (refined - dense).abs()
        })
        .reduce(|| 0.0, f64::max);

    let elapsed = start.elapsed().as_secs_f64();
    let ok = worst < OPTIMIZER_TOL && elapsed < OPTIMIZER_BUDGET_SECS;
    println!(
        "criterion 8 {} — grid+refinement vs {DENSE_GRID_THETA}x{DENSE_GRID_PHI} dense \
         brute force on {OPTIMIZER_STATES} random states: worst gap {worst:.3e} \
         (tol {OPTIMIZER_TOL:.0e}), {elapsed:.1} s (budget {OPTIMIZER_BUDGET_SECS} s)",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(ok, "worst gap {worst:.3e}, elapsed {elapsed:.1} s");
}

#[test]
fn criterion_9_figure_regeneration() {
    let start = Instant::now();
    let mut first_pass = Vec::new();
    for id in FigureId::ALL {
        first_pass.push(render_figure_csv(id).unwrap());
    }
    let elapsed = start.elapsed().as_secs_f64();

    let mut deterministic = true;
    for (id, earlier) in FigureId::ALL.iter().zip(&first_pass) {
        let again = render_figure_csv(*id).unwrap();
        if again != *earlier {
            deterministic = false;
        }
    }

    let ok = elapsed < FIGURES_BUDGET_SECS && deterministic;
    println!(
        "criterion 9 {} — all 10 figure presets regenerated in {elapsed:.1} s \
         (budget {FIGURES_BUDGET_SECS} s), deterministic: {deterministic}",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(ok, "elapsed {elapsed:.1} s, deterministic {deterministic}");
}
