use num_complex::Complex;

use super::*;
use crate::anyon::{builtin, dz3_model, s_matrix, t_matrix, toric_code_model, trivial_model};

fn omega(k: i64) -> Phase {
    Phase::root_of_unity(k, 3)
}

#[test]
fn center_of_z2_is_the_toric_code() {
    let center = CyclicCenter::new(2).unwrap();
    assert_eq!(center.labels(), builtin::TORIC_LABELS);
    assert_eq!(center.parts(2), (1, 0)); // m
    assert_eq!(center.parts(1), (0, 1)); // e
    assert_eq!(center.braiding(), builtin::toric_code_braiding());
    assert_eq!(center_of_cyclic::<f64>(2).unwrap(), toric_code_model::<f64>());
}

#[test]
fn center_of_z1_is_trivial() {
    assert_eq!(center_of_cyclic::<f64>(1).unwrap(), trivial_model::<f64>());
}

#[test]
fn center_of_z0_is_rejected() {
    assert!(matches!(center_of_cyclic::<f64>(0), Err(Error::InvalidArgument(_))));
}

#[test]
fn center_of_z3_matches_listed_phases() {
    let center = CyclicCenter::new(3).unwrap();
    assert_eq!(center.labels(), builtin::DZ3_LABELS);
    let r = center.braiding();
    assert_eq!(r.r("m1", "e1"), omega(1));
    assert_eq!(r.r("m2", "e2"), omega(1));
    assert_eq!(r.r("m1", "e2"), omega(-1));
    assert_eq!(r.r("m2", "e1"), omega(-1));
    assert_eq!(r, builtin::dz3_braiding());
    assert_eq!(center.model::<f64>(), dz3_model::<f64>());
}

fn phases(t: &BulkAnyonTriple) -> Vec<Phase> {
    t.half_braiding.iter().map(|(_, p)| *p).collect()
}

#[test]
fn smooth_z2_reproduces_boundary_triples() {
    let triples = reconstruct_bulk(2, BoundaryKind::Smooth).unwrap();
    let minus = Phase::minus_one();
    let one = Phase::ONE;
    let expected = [
        ("1", "1", [one, one]),
        ("e", "e", [one, one]),
        ("m", "1", [one, minus]),
        ("ε", "e", [one, minus]),
    ];
    assert_eq!(triples.len(), 4);
    for (t, (bulk, boundary, hb)) in triples.iter().zip(expected) {
        assert_eq!(t.bulk_label, bulk);
        assert_eq!(t.boundary_label, boundary);
        assert_eq!(phases(t), hb);
        assert_eq!(t.half_braiding[0].0, "1");
        assert_eq!(t.half_braiding[1].0, "e");
    }
    assert_eq!(triples[2].half_braiding_at("e"), Some(minus));
}

#[test]
fn rough_z3_charge_condenses() {
    let triples = reconstruct_bulk(3, BoundaryKind::Rough).unwrap();
    let e1 = triples.iter().find(|t| t.bulk_label == "e1").unwrap();
    assert_eq!(e1.boundary_label, "1");
    // R'_{e1 m1} = R_{m1 e1} = ω
    assert_eq!(e1.half_braiding_at("m1"), Some(omega(1)));
    let m1 = triples.iter().find(|t| t.bulk_label == "m1").unwrap();
    assert_eq!(m1.boundary_label, "m1");
    assert!(phases(m1).iter().all(Phase::is_one));
}

#[test]
fn triples_are_characters() {
    for n in 1..=5 {
        for kind in [BoundaryKind::Smooth, BoundaryKind::Rough] {
            let triples = reconstruct_bulk(n, kind).unwrap();
            assert_eq!(triples.len(), (n * n) as usize);
            assert!(triples.iter().all(BulkAnyonTriple::is_character));
        }
    }
}

#[test]
fn table_1b_from_half_braidings() {
    let r = braidings_from_half_braidings(&reconstruct_bulk(2, BoundaryKind::Smooth).unwrap()).unwrap();
    assert_eq!(r.r("m", "e"), Phase::minus_one());
    assert_eq!(r.r("e", "m"), Phase::ONE);
    assert_eq!(r.r("ε", "ε"), Phase::minus_one());
    assert_eq!(r, builtin::toric_code_braiding());
}

#[test]
fn smooth_reconstruction_matches_center_up_to_n5() {
    for n in 1..=5 {
        let r = braidings_from_half_braidings(&reconstruct_bulk(n, BoundaryKind::Smooth).unwrap()).unwrap();
        let center = CyclicCenter::new(n).unwrap();
        assert_eq!(r, center.braiding(), "N = {n}");
        let model = center.model::<f64>();
        assert_eq!(r.max_deviation_from(&model).unwrap(), 0.0);
    }
}

#[test]
fn rough_reconstruction_is_the_transpose() {
    for n in 1..=5 {
        let smooth = braidings_from_half_braidings(&reconstruct_bulk(n, BoundaryKind::Smooth).unwrap()).unwrap();
        let rough = braidings_from_half_braidings(&reconstruct_bulk(n, BoundaryKind::Rough).unwrap()).unwrap();
        assert_eq!(rough, smooth.transpose(), "N = {n}");
        let center = CyclicCenter::new(n).unwrap();
        let (ms, mr) = (center.model_with::<f64>(&smooth).unwrap(), center.model_with::<f64>(&rough).unwrap());
        for a in 0..smooth.len() {
            for b in 0..smooth.len() {
                assert_eq!(smooth.monodromy(a, b), rough.monodromy(a, b));
            }
        }
        assert!(s_matrix(&ms).unwrap().max_abs_diff(&s_matrix(&mr).unwrap()).unwrap() < 1e-12);
        assert!(t_matrix(&ms).unwrap().max_abs_diff(&t_matrix(&mr).unwrap()).unwrap() < 1e-12);
    }
}

#[test]
fn closure_violation_is_rejected() {
    let mut triples = reconstruct_bulk(2, BoundaryKind::Smooth).unwrap();
    triples.remove(3);
    assert!(matches!(braidings_from_half_braidings(&triples), Err(Error::InvalidArgument(_))));
    assert!(braidings_from_half_braidings(&[]).is_err());
}

#[test]
fn non_character_half_braiding_is_rejected() {
    let mut triples = reconstruct_bulk(3, BoundaryKind::Smooth).unwrap();
    triples[3].half_braiding[2].1 = omega(1);
    assert!(matches!(braidings_from_half_braidings(&triples), Err(Error::InvalidArgument(_))));
}

#[test]
fn condensing_m_on_the_smooth_boundary() {
    let toric = toric_code_model::<f64>();
    let map = condense(&toric, &["1", "m"]).unwrap();
    assert_eq!(map.boundary_labels, vec!["1", "e"]);
    assert_eq!(map.image("1"), Some("1"));
    assert_eq!(map.image("m"), Some("1"));
    assert_eq!(map.image("e"), Some("e"));
    assert_eq!(map.image("ε"), Some("e"));
}

#[test]
fn condensing_e_on_the_rough_boundary() {
    let map = condense(&toric_code_model::<f64>(), &["1", "e"]).unwrap();
    assert_eq!(map.boundary_labels, vec!["1", "m"]);
    assert_eq!(map.image("e"), Some("1"));
    assert_eq!(map.image("m"), Some("m"));
    assert_eq!(map.image("ε"), Some("m"));
}

#[test]
fn fermion_cannot_condense() {
    let err = condense(&toric_code_model::<f64>(), &["1", "ε"]).unwrap_err();
    match err {
        Error::CondensationRejected { a, b, .. } => assert_eq!((a.as_str(), b.as_str()), ("ε", "ε")),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn non_closed_or_nonlocal_sets_are_rejected() {
    let toric = toric_code_model::<f64>();
    assert!(matches!(condense(&toric, &["m"]), Err(Error::CondensationRejected { .. })));
    // e and m are bosons but braid nontrivially; the set is also not closed
    assert!(matches!(condense(&toric, &["1", "e", "m"]), Err(Error::CondensationRejected { .. })));
    let dz3 = dz3_model::<f64>();
    assert!(matches!(condense(&dz3, &["1", "e1"]), Err(Error::CondensationRejected { .. })));
    let map = condense(&dz3, &["1", "e1", "e2"]).unwrap();
    assert_eq!(map.boundary_labels, vec!["1", "m1", "m2"]);
    assert_eq!(map.image("e2m1"), Some("m1"));
}

#[test]
fn toric_phase_table() {
    let table = qdm_phase_table(&toric_code_model::<f64>(), &["1", "m"], &["1", "e"]).unwrap();
    assert_eq!((table.phases.rows(), table.phases.cols()), (1, 1));
    assert_eq!(table.phases[(0, 0)], Complex::new(-1.0, 0.0));
    assert!(table.matches_model());
    assert_eq!(table.max_deviation, 0.0);
}

#[test]
fn dz3_phase_table() {
    let table = qdm_phase_table(&dz3_model::<f64>(), &["1", "m1", "m2"], &["1", "e1", "e2"]).unwrap();
    let w = omega(1).to_complex::<f64>();
    let expected = [[w, w.conj()], [w.conj(), w]];
    for (i, row) in expected.iter().enumerate() {
        for (k, want) in row.iter().enumerate() {
            assert!((table.phases[(i, k)] - want).norm() < 1e-15);
        }
    }
    assert!(table.matches_model());
}

#[test]
fn vacuum_only_boundary_gives_empty_table() {
    let table = qdm_phase_table(&trivial_model::<f64>(), &["1"], &["1"]).unwrap();
    assert_eq!((table.phases.rows(), table.phases.cols()), (0, 0));
    assert!(table.matches_model());
    let toric = toric_code_model::<f64>();
    let table = qdm_phase_table(&toric, &["1", "e", "m", "ε"], &["1"]).unwrap();
    assert_eq!(table.phases.cols(), 0);
}

#[test]
fn decomposition_failures() {
    let toric = toric_code_model::<f64>();
    assert!(matches!(qdm_phase_table(&toric, &["1", "m"], &["1"]), Err(Error::InvalidDecomposition(_))));
    assert!(matches!(qdm_phase_table(&toric, &["1", "m"], &["1", "e", "ε"]), Err(Error::InvalidDecomposition(_))));
}

#[test]
fn commutativity_within_classes_and_trivial_reverse_half_braiding() {
    let dz3 = dz3_model::<f64>();
    let table = qdm_phase_table(&dz3, &["1", "m1", "m2"], &["1", "e1", "e2"]).unwrap();
    let idx = |l: &str| dz3.index_of(l).unwrap();
    let one = Complex::new(1.0, 0.0);
    for set in [["1", "m1", "m2"], ["1", "e1", "e2"]] {
        for a in set {
            for b in set {
                assert_eq!(table.assembled[(idx(a), idx(b))], one);
            }
        }
    }
    for b in ["1", "e1", "e2"] {
        for a in ["1", "m1", "m2"] {
            assert_eq!(table.assembled[(idx(b), idx(a))], one);
        }
    }
}
