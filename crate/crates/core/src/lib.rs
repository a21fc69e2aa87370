//! Anyon models, boundary-bulk reconstruction, and simulated toric-code
//! braiding experiments.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); exact
//! roots of unity use [`Phase`]. The `*64` aliases fix the scalar to `f64`.

pub mod anyon;
pub mod boundary;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod phase;
pub mod protocols;
pub mod scalar;
pub mod sim;

pub use anyon::{
    dz3_model, modular_data, monodromy, quantum_dimensions, s_matrix, s_matrix_from_spins, spins,
    t_matrix, toric_code_model, topological_spin, trivial_model, validate_model, verlinde_check,
    AnyonModel, BraidingTable, ModelFile, ModularData, ValidationReport, VerlindeReport,
};
pub use boundary::{
    braidings_from_half_braidings, center_of_cyclic, condense, qdm_phase_table, reconstruct_bulk,
    BoundaryKind, BulkAnyonTriple, CondensationMap, CyclicCenter, QdmDecomposition, QdmPhaseTable,
};
pub use error::{Error, Result};
pub use lattice::{build_lattice, cell3, cell4, string_operator, Boundaries, StabilizerCell, StringKind};
pub use matrix::CMatrix;
pub use phase::Phase;
pub use protocols::{
    f_phase_scattering, half_braid_experiment, measure_r_table, r_phase_scattering, ExperimentRecord,
    MeasuredRTable,
};
pub use scalar::{principal_angle, Scalar};
pub use sim::{fidelity, ground_state_from_stabilizers, Circuit, Gate, PauliOperator, StateVector};

pub type AnyonModel64 = AnyonModel<f64>;
pub type ModularData64 = ModularData<f64>;
pub type CMatrix64 = CMatrix<f64>;
pub type StateVector64 = StateVector<f64>;
pub type Circuit64 = Circuit<f64>;
pub type ExperimentRecord64 = ExperimentRecord<f64>;
pub type MeasuredRTable64 = MeasuredRTable<f64>;
pub type QdmPhaseTable64 = QdmPhaseTable<f64>;
pub type AnyonModel32 = AnyonModel<f32>;
pub type StateVector32 = StateVector<f32>;
