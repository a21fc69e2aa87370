//! Dense statevector simulation with bit-packed Pauli strings.

pub mod circuit;
pub mod pauli;
pub mod state;
pub mod tomography;

pub use circuit::{Circuit, Gate};
pub use pauli::{symplectic_rank, PauliOperator};
pub use state::{
    apply_controlled_pauli, apply_pauli, expectation, fidelity, ground_state_from_stabilizers,
    StateExport, StateVector, MAX_QUBITS,
};
pub use tomography::{density_from_tomography, outer_product, pauli_by_index, pauli_tomography};
