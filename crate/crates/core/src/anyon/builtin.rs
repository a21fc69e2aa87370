//! Built-in models: the toric code and the D(Z3) quantum double.

use super::braiding::BraidingTable;
use super::model::AnyonModel;
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::Scalar;

pub const TORIC_LABELS: [&str; 4] = ["1", "e", "m", "ε"];

pub const DZ3_LABELS: [&str; 9] = ["1", "e1", "e2", "m1", "m2", "e1m1", "e2m1", "e1m2", "e2m2"];

/// Names accepted by [`by_name`], for error messages.
pub const BUILTIN_NAMES: &str = "toric, dz3, center:zN";

/// The sixteen toric-code braidings, listed pair by pair.
pub fn toric_code_braiding() -> BraidingTable {
    let minus = Phase::minus_one();
    let plus = Phase::ONE;
    let listed: [(&str, &str, Phase); 9] = [
        ("e", "e", plus),
        ("m", "m", plus),
        ("ε", "ε", minus),
        ("e", "m", plus),
        ("m", "e", minus),
        ("e", "ε", plus),
        ("ε", "e", minus),
        ("m", "ε", minus),
        ("ε", "m", plus),
    ];
    let labels: Vec<String> = TORIC_LABELS.iter().map(|s| s.to_string()).collect();
    BraidingTable::from_fn(labels, |a, b| {
        if a == 0 || b == 0 {
            return plus;
        }
        let (la, lb) = (TORIC_LABELS[a], TORIC_LABELS[b]);
        listed
            .iter()
            .find(|(x, y, _)| *x == la && *y == lb)
            .map(|(_, _, p)| *p)
            .expect("every non-vacuum pair is listed")
    })
}

/// Toric code: labels `1, e, m, ε`, Z2×Z2 fusion, F ≡ 1.
pub fn toric_code_model<T: Scalar>() -> AnyonModel<T> {
    // indices double as Z2×Z2 bit pairs: e = 01, m = 10, ε = 11
    toric_code_braiding()
        .to_model(|a, b| a ^ b)
        .expect("toric code data is well formed")
}

fn dz3_parts(index: usize) -> (usize, usize) {
    // (flux, charge)
    [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (1, 2), (2, 1), (2, 2)][index]
}

fn dz3_index(flux: usize, charge: usize) -> usize {
    (0..9).find(|&i| dz3_parts(i) == (flux % 3, charge % 3)).unwrap()
}

/// D(Z3) braidings extended from the four flux–charge phases: a braiding
/// `R_{xy}` is the phase of x's flux class moving around y's charge class,
/// and is trivial whenever either class is.
pub fn dz3_braiding() -> BraidingTable {
    let omega = Phase::root_of_unity(1, 3);
    let nontrivial = |flux: usize, charge: usize| match (flux, charge) {
        (1, 1) | (2, 2) => omega,
        (1, 2) | (2, 1) => omega.conj(),
        _ => Phase::ONE,
    };
    let labels = DZ3_LABELS.iter().map(|s| s.to_string()).collect();
    BraidingTable::from_fn(labels, |x, y| nontrivial(dz3_parts(x).0, dz3_parts(y).1))
}

/// The nine-anyon D(Z3) model with Z3×Z3 fusion and F ≡ 1.
pub fn dz3_model<T: Scalar>() -> AnyonModel<T> {
    dz3_braiding()
        .to_model(|a, b| {
            let (fa, qa) = dz3_parts(a);
            let (fb, qb) = dz3_parts(b);
            dz3_index(fa + fb, qa + qb)
        })
        .expect("D(Z3) data is well formed")
}

/// The trivial single-anyon model.
pub fn trivial_model<T: Scalar>() -> AnyonModel<T> {
    BraidingTable::from_fn(vec!["1".into()], |_, _| Phase::ONE)
        .to_model(|_, _| 0)
        .expect("trivial model is well formed")
}

/// Resolves `toric`, `dz3`, `trivial` or `center:zN`.
pub fn by_name<T: Scalar>(name: &str) -> Result<AnyonModel<T>> {
    match name {
        "toric" => Ok(toric_code_model()),
        "dz3" => Ok(dz3_model()),
        "trivial" => Ok(trivial_model()),
        other => {
            let n = other
                .strip_prefix("center:z")
                .and_then(|n| n.parse::<u32>().ok())
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "unknown builtin model {other:?}; available: {BUILTIN_NAMES}"
                    ))
                })?;
            crate::boundary::center_of_cyclic(n)
        }
    }
}
