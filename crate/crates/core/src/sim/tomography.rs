//! Full Pauli tomography of small pure states.
//!
//! Strings are enumerated by an index `t` in `0..4^n` read as base-4 digits,
//! qubit 0 least significant, with digits `0 = I, 1 = X, 2 = Y, 3 = Z`. The
//! label character at position `q` is the letter on qubit `q`, so for one
//! qubit the order is `I, X, Y, Z` and for two it starts `II, XI, YI, ZI, IX`.

use super::pauli::PauliOperator;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Scalar;

pub const MAX_TOMOGRAPHY_QUBITS: usize = 8;

/// The `t`-th Pauli string of the documented order.
pub fn pauli_by_index(n: usize, t: u64) -> PauliOperator {
    let (mut x, mut z) = (0u64, 0u64);
    for q in 0..n {
        let (bx, bz) = [(0, 0), (1, 0), (1, 1), (0, 1)][((t >> (2 * q)) & 3) as usize];
        x |= bx << q;
        z |= bz << q;
    }
    PauliOperator::from_masks(n, x, z, 0).expect("masks fit the register")
}

/// Expectations of all `4^n` Pauli strings, in the documented order.
pub fn pauli_tomography<T: Scalar>(state: &StateVector<T>) -> Result<Vec<(String, T)>> {
    let n = state.n();
    if n > MAX_TOMOGRAPHY_QUBITS {
        return Err(Error::ResourceLimit(format!(
            "tomography of {n} qubits needs 4^{n} expectations (cap {MAX_TOMOGRAPHY_QUBITS} qubits)"
        )));
    }
    (0..1u64 << (2 * n))
        .map(|t| {
            let p = pauli_by_index(n, t);
            Ok((p.letters(), state.expectation(&p)?))
        })
        .collect()
}

/// `ρ = 2^{-n} Σ ⟨P⟩ P` from a table in the documented order.
pub fn density_from_tomography<T: Scalar>(n: usize, table: &[(String, T)]) -> Result<CMatrix<T>> {
    if table.len() != 1usize << (2 * n) {
        return Err(Error::DimensionMismatch {
            expected: 1usize << (2 * n),
            found: table.len(),
        });
    }
    let dim = 1usize << n;
    let mut rho = CMatrix::zeros(dim, dim);
    let scale = T::one() / T::from_usize(dim).unwrap_or_else(T::one);
    for (t, (_, value)) in table.iter().enumerate() {
        let p = pauli_by_index(n, t as u64);
        let k = p.xz_phase();
        for b in 0..dim {
            // ⟨b ^ x| P |b⟩
            rho[(b ^ p.x_mask() as usize, b)] =
                rho[(b ^ p.x_mask() as usize, b)] + p.basis_factor::<T>(k, b as u64) * (*value * scale);
        }
    }
    Ok(rho)
}

/// `|ψ⟩⟨ψ|`.
pub fn outer_product<T: Scalar>(state: &StateVector<T>) -> CMatrix<T> {
    let amps = state.amplitudes();
    CMatrix::from_fn(amps.len(), amps.len(), |i, j| amps[i] * amps[j].conj())
}
