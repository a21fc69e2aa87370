use super::*;
use crate::anyon::{toric_code_model, trivial_model, validate_model, verlinde_check};
use crate::lattice::cell4;
use num_complex::Complex64;
use std::f64::consts::PI;

const TOL: f64 = 1e-10;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < TOL
}

#[test]
fn half_braid_flips_on_path1_only() {
    for cell in [cell3(), cell4()] {
        let r1 = half_braid_experiment::<f64>(&cell, "1").unwrap();
        assert!(close(r1.fidelities["flipped"], 1.0) && close(r1.fidelities["initial"], 0.0));
        assert!(close(r1.phase, PI));
        let r2 = half_braid_experiment::<f64>(&cell, "2").unwrap();
        assert!(close(r2.fidelities["initial"], 1.0) && close(r2.fidelities["flipped"], 0.0));
        assert!(close(r2.phase, 0.0));
        for r in [r1, r2] {
            assert!(close(r.fidelities.values().sum::<f64>(), 1.0));
            assert!(r.sz.is_none());
        }
    }
}

#[test]
fn r_phase_values() {
    let r = r_phase_scattering::<f64>(&cell3(), "1").unwrap();
    assert!(close(r.phase, PI), "{}", r.phase);
    assert!(close(r.sz.unwrap(), -1.0) && close(r.sy.unwrap(), 0.0));
    let r = r_phase_scattering::<f64>(&cell3(), "2").unwrap();
    assert!(close(r.phase, 0.0) && close(r.sz.unwrap(), 1.0));
    let r = r_phase_scattering::<f64>(&cell4(), "1").unwrap();
    assert!(close(r.phase, PI));
}

#[test]
fn r_phase_matches_direct_ratio() {
    for cell in [cell3(), cell4()] {
        let g = cell.ground_state::<f64>().unwrap();
        let e = cell.excited_state::<f64>().unwrap();
        for path in cell.path_names() {
            let u = cell.path_operator(path).unwrap();
            let ratio = e.matrix_element(&u).unwrap() / g.matrix_element(&u).unwrap();
            let r = r_phase_scattering::<f64>(&cell, path).unwrap();
            assert!((r.unit_phase() - ratio).norm() < TOL);
        }
    }
}

#[test]
fn f_phase_values() {
    let cell = cell3();
    let r = f_phase_scattering::<f64>(&cell).unwrap();
    assert!(close(r.phase, 0.0) && close(r.sz.unwrap(), 1.0));
    assert!((r.unit_phase() - Complex64::new(1.0, 0.0)).norm() < TOL);

    let a1 = cell.fusion_op("A1").unwrap();
    let same = f_phase_scattering_with::<f64>(&cell, &a1, &a1).unwrap();
    assert!((same.sz.unwrap() - 1.0).abs() <= 4.0 * f64::EPSILON);
    assert_eq!(same.sy, Some(0.0));
    assert!(close(same.phase, 0.0));

    let a2 = cell.fusion_op("A2").unwrap().neg();
    let flipped = f_phase_scattering_with::<f64>(&cell, &a1, &a2).unwrap();
    assert!(close(flipped.phase, PI));

    assert!(matches!(f_phase_scattering::<f64>(&cell4()), Err(Error::MissingFusionOps(_))));
}

#[test]
fn injected_phases_are_recovered() {
    let cell = cell3();
    let g = cell.ground_state::<f64>().unwrap();
    let id = PauliOperator::identity(cell.n);
    for alpha in [0.0, PI / 2.0, -PI / 2.0, PI, 2.0 * PI / 3.0, -2.0 * PI / 3.0] {
        let out = run_scattering(&g, &[id], Some(alpha)).unwrap();
        assert!(close(out.phase, alpha), "{alpha} -> {}", out.phase);
        assert!(out.sz * out.sz + out.sy * out.sy <= 1.0 + TOL);
    }
}

#[test]
fn unknown_path_is_reported() {
    assert!(matches!(r_phase_scattering::<f64>(&cell3(), "9"), Err(Error::UnknownPath { .. })));
    assert!(matches!(half_braid_experiment::<f64>(&cell4(), "x"), Err(Error::UnknownPath { .. })));
}

#[test]
fn batch_is_deterministic_and_matches_serial() {
    let jobs = all_jobs(&[cell3(), cell4()]);
    assert_eq!(jobs.len(), 9);
    let a = run_batch::<f64>(&jobs);
    let b = run_batch::<f64>(&jobs);
    assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>());
    for job in &jobs {
        let serial = job.run::<f64>().unwrap();
        assert_eq!(a[&job.name()].as_ref().unwrap(), &serial);
    }
}

#[test]
fn toric_r_table_is_measured() {
    let model = toric_code_model::<f64>();
    let table = measure_r_table(&model, &["1", "m"], &["1", "e"], &toric_cellset()).unwrap();
    assert!(table.passed());
    assert!((table.measured[&("m".into(), "e".into())] - Complex64::new(-1.0, 0.0)).norm() < TOL);
    assert!(table.max_deviation < TOL);
    let t: Vec<f64> = (0..4).map(|i| table.t_matrix[(i, i)].re).collect();
    assert!(t.iter().zip([1.0, 1.0, 1.0, -1.0]).all(|(a, b)| close(*a, b)));
    let s_ref = crate::anyon::s_matrix(&model).unwrap();
    assert!(table.s_matrix.max_abs_diff(&s_ref).unwrap() < TOL);
    assert!(validate_model(&table.measured_model).accepted());
    assert!(verlinde_check(&table.measured_model).unwrap().matches_model);
}

#[test]
fn corrupted_cell_fails_naming_the_pair() {
    let model = toric_code_model::<f64>();
    let mut cells = toric_cellset();
    cells.get_mut(&("m".into(), "e".into())).unwrap().path = "2".into();
    let table = measure_r_table(&model, &["1", "m"], &["1", "e"], &cells).unwrap();
    assert!(!table.passed());
    assert_eq!(table.failing_pairs, vec![("m".to_string(), "e".to_string())]);
}

#[test]
fn missing_cell_is_an_error() {
    let model = toric_code_model::<f64>();
    let err = measure_r_table(&model, &["1", "m"], &["1", "e"], &CellSet::new()).unwrap_err();
    assert_eq!(err, Error::MissingCell("m".into(), "e".into()));
}

#[test]
fn trivial_model_needs_no_cells() {
    let model = trivial_model::<f64>();
    let table = measure_r_table(&model, &["1"], &["1"], &CellSet::new()).unwrap();
    assert!(table.passed());
    assert_eq!(table.assembled.rows(), 1);
    assert!((table.assembled[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < TOL);
}

#[test]
fn protocols_run_in_single_precision() {
    let r = r_phase_scattering::<f32>(&cell3(), "1").unwrap();
    assert!((r.phase - std::f32::consts::PI).abs() < 1e-4);
}
