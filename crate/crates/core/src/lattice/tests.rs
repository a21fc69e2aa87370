use super::*;
use crate::sim::fidelity;
use num_complex::Complex64;

fn grid(rows: usize, cols: usize, top: BoundaryKind, side: BoundaryKind) -> StabilizerCell {
    build_lattice(
        rows,
        cols,
        Boundaries {
            top,
            bottom: top,
            left: side,
            right: side,
        },
    )
    .unwrap()
}

#[test]
fn presets_are_valid_and_full_rank() {
    for cell in [cell3(), cell4()] {
        cell.validate().unwrap();
        assert!(cell.has_unique_ground_state(), "{}", cell.name);
    }
}

#[test]
fn cell3_ground_state_amplitudes() {
    let g = cell3().ground_state::<f64>().unwrap();
    for b in 0..8u64 {
        let want = if b.count_ones() % 2 == 0 { 0.5 } else { 0.0 };
        assert!((g.amplitude(b) - Complex64::new(want, 0.0)).norm() < 1e-12, "b={b}");
    }
    let zzz = PauliOperator::from_label("ZZZ").unwrap();
    assert!((g.expectation(&zzz).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn cell4_ground_state_is_even_parity() {
    let g = cell4().ground_state::<f64>().unwrap();
    let amp = 1.0 / 8f64.sqrt();
    for b in 0..16u64 {
        let want = if b.count_ones() % 2 == 0 { amp } else { 0.0 };
        assert!((g.amplitude(b).re - want).abs() < 1e-12 && g.amplitude(b).im.abs() < 1e-12);
    }
}

#[test]
fn fusion_operators_of_cell3() {
    let cell = cell3();
    let a1 = cell.fusion_op("A1").unwrap();
    let a2 = cell.fusion_op("A2").unwrap();
    assert_eq!(a1.adjoint() * a2, PauliOperator::from_label("ZZZ").unwrap());
    let g = cell.ground_state::<f64>().unwrap();
    let m = g.matrix_element(&(a1.adjoint() * a2)).unwrap();
    assert!((m - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    assert!(matches!(cell4().fusion_op("A1"), Err(Error::MissingFusionOps(_))));
}

#[test]
fn path_algebra() {
    for cell in [cell3(), cell4()] {
        let p1 = cell.path_operator("1").unwrap();
        let p2 = cell.path_operator("Path2").unwrap();
        assert!(!p1.commutes_with(&cell.excitation), "{}", cell.name);
        assert!(p2.commutes_with(&cell.excitation), "{}", cell.name);
        let g = cell.ground_state::<f64>().unwrap();
        for p in [p1, p2] {
            assert!((g.expectation(&p).unwrap() - 1.0).abs() < 1e-12);
        }
    }
    assert_eq!(cell3().path_operator("path 1").unwrap(), PauliOperator::from_label("XXI").unwrap());
}

#[test]
fn path_gates_compose_to_path_operator() {
    let cell = cell4();
    for name in cell.path_names() {
        let product = cell
            .path_gates(name)
            .unwrap()
            .into_iter()
            .fold(PauliOperator::identity(cell.n), |acc, g| g * acc);
        assert_eq!(product, cell.path_operator(name).unwrap());
    }
}

#[test]
fn unknown_path_lists_valid_names() {
    match cell3().path("7") {
        Err(Error::UnknownPath { valid, .. }) => assert_eq!(valid, "1, 2"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn string_operators() {
    let cell = cell3();
    assert_eq!(string_operator(&cell, StringKind::M, &[0, 1]).unwrap(), PauliOperator::from_label("XXI").unwrap());
    assert_eq!(string_operator(&cell, StringKind::E, &[0]).unwrap(), cell.excitation);
    assert!(string_operator(&cell, StringKind::E, &[]).unwrap().is_identity_up_to_phase());
    assert!(string_operator(&cell, StringKind::E, &[3]).is_err());
}

#[test]
fn smallest_lattices_commute_and_have_stabilized_ground_states() {
    use BoundaryKind::*;
    for (top, side) in [(Smooth, Smooth), (Smooth, Rough), (Rough, Smooth), (Rough, Rough)] {
        let cell = grid(2, 3, top, side);
        let layout = cell.layout.as_ref().unwrap();
        for color in [PlaquetteColor::White, PlaquetteColor::Blue] {
            assert!(layout.plaquettes.iter().any(|p| p.color == color && p.qubits.len() == 4));
        }
        for s in &cell.stabilizers {
            for t in &cell.stabilizers {
                assert!(s.commutes_with(t));
            }
        }
        let g = cell.ground_state::<f64>().unwrap();
        for s in &cell.stabilizers {
            assert!((g.expectation(s).unwrap() - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn planar_lattices_encode_one_qubit() {
    use BoundaryKind::*;
    for (top, side) in [(Smooth, Smooth), (Smooth, Rough), (Rough, Rough)] {
        for (rows, cols) in [(2, 3), (3, 3), (3, 4)] {
            let cell = grid(rows, cols, top, side);
            assert_eq!(cell.stabilizers.len(), cell.n - 1, "{rows}x{cols} {top}/{side}");
        }
    }
}

#[test]
fn z_string_flips_exactly_two_white_plaquettes() {
    let cell = grid(3, 3, BoundaryKind::Smooth, BoundaryKind::Smooth);
    let g = cell.ground_state::<f64>().unwrap();
    let string = string_operator(&cell, StringKind::E, &[4, 5]).unwrap();
    let mut excited = g.clone();
    excited.apply_pauli(&string).unwrap();
    let layout = cell.layout.as_ref().unwrap();
    let mut flipped = Vec::new();
    for (s, p) in cell.stabilizers.iter().zip(&layout.plaquettes) {
        let v = excited.expectation(s).unwrap();
        if v < 0.0 {
            assert!((v + 1.0).abs() < 1e-10);
            assert_eq!(p.color, PlaquetteColor::White);
            flipped.push(p.face);
        } else {
            assert!((v - 1.0).abs() < 1e-10);
        }
    }
    assert_eq!(flipped, vec![(0, 0), (0, 2)]);
}

#[test]
fn closed_x_loop_acts_as_identity() {
    let cell = grid(2, 3, BoundaryKind::Smooth, BoundaryKind::Smooth);
    let layout = cell.layout.as_ref().unwrap();
    let lp = cell
        .stabilizers
        .iter()
        .zip(&layout.plaquettes)
        .filter(|(_, p)| p.color == PlaquetteColor::White)
        .fold(PauliOperator::identity(cell.n), |acc, (s, _)| acc * *s);
    assert!(!lp.is_identity_up_to_phase());
    let g = cell.ground_state::<f64>().unwrap();
    let moved = crate::sim::apply_pauli(&g, &lp).unwrap();
    assert!((fidelity(&g, &moved).unwrap() - 1.0).abs() < 1e-12);
    assert!((g.matrix_element(&lp).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn lattice_budget() {
    let b = Boundaries::uniform(BoundaryKind::Smooth);
    assert!(matches!(build_lattice(5, 5, b), Err(Error::ResourceLimit(_))));
    assert!(matches!(build_lattice(1, 4, b), Err(Error::InvalidArgument(_))));
    assert_eq!(build_lattice(4, 6, b).unwrap().n, 24);
}

#[test]
fn lookup_by_name() {
    assert_eq!(cell_by_name("3").unwrap().name, "cell3");
    assert_eq!(cell_by_name("cell4").unwrap().n, 4);
    assert_eq!(cell_by_name("lattice:2x3").unwrap().n, 6);
    assert!(cell_by_name("five").is_err());
}
