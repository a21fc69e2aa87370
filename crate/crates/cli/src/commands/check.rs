use anyon_core::protocols::run_scattering;
use anyon_core::{cell3, cell4, PauliOperator, StateVector64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::output::{CliError, CliResult};

const TOL: f64 = 1e-10;

fn random_pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliOperator {
    let mask = (1u64 << n) - 1;
    PauliOperator::from_masks(n, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask, rng.gen_range(0..4))
        .expect("masks fit")
}

fn max_diff(a: &StateVector64, b: &StateVector64) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn composition(rng: &mut ChaCha8Rng, cases: usize) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let n = rng.gen_range(1..=10);
        let (p, q) = (random_pauli(rng, n), random_pauli(rng, n));
        let psi = StateVector64::seeded_random(n, rng.gen()).map_err(|e| e.to_string())?;
        let mut seq = psi.clone();
        seq.apply_pauli(&q).map_err(|e| e.to_string())?;
        seq.apply_pauli(&p).map_err(|e| e.to_string())?;
        let mut once = psi;
        once.apply_pauli(&(p * q)).map_err(|e| e.to_string())?;
        worst = worst.max(max_diff(&seq, &once));
    }
    Ok(worst)
}

fn kickback(rng: &mut ChaCha8Rng, cases: usize) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let n = rng.gen_range(1..=9);
        let p = random_pauli(rng, n);
        let psi = StateVector64::seeded_random(n, rng.gen()).map_err(|e| e.to_string())?;
        let direct = psi.matrix_element(&p).map_err(|e| e.to_string())?;
        let out = run_scattering(&psi, &[p], None).map_err(|e| e.to_string())?;
        worst = worst.max((out.sz - direct.re).abs()).max((out.sy - direct.im).abs());
    }
    Ok(worst)
}

fn injected() -> Result<f64, String> {
    use std::f64::consts::PI;
    let g = cell3().ground_state::<f64>().map_err(|e| e.to_string())?;
    let id = PauliOperator::identity(g.n());
    let mut worst = 0.0f64;
    for alpha in [0.0, PI / 2.0, -PI / 2.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0, PI] {
        let out = run_scattering(&g, &[id], Some(alpha)).map_err(|e| e.to_string())?;
        worst = worst.max((out.phase - alpha).abs());
    }
    Ok(worst)
}

fn ground_states() -> Result<f64, String> {
    let mut worst = 0.0f64;
    for cell in [cell3(), cell4()] {
        let g = cell.ground_state::<f64>().map_err(|e| e.to_string())?;
        for s in &cell.stabilizers {
            worst = worst.max((g.expectation(s).map_err(|e| e.to_string())? - 1.0).abs());
        }
    }
    Ok(worst)
}

pub fn run(seed: u64, cases: usize) -> CliResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks: Vec<(&str, Result<f64, String>)> = vec![
        ("pauli composition", composition(&mut rng, cases)),
        ("phase kickback", kickback(&mut rng, cases)),
        ("injected phases", injected()),
        ("preset ground states", ground_states()),
    ];
    let mut failed = 0;
    for (name, result) in checks {
        match result {
            Ok(dev) if dev <= TOL => println!("PASS {name:<22} max deviation {dev:.3e}"),
            Ok(dev) => {
                failed += 1;
                println!("FAIL {name:<22} max deviation {dev:.3e}");
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {name:<22} {e}");
            }
        }
    }
    println!("seed {seed}, {cases} cases");
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Failure(format!("{failed} self-test check(s) failed")))
    }
}
