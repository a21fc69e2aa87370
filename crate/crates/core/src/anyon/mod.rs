//! Multiplicity-free anyon models and the modular data derived from them.

mod braiding;
pub mod builtin;
mod file;
mod modular;
mod model;
mod validate;

pub use braiding::BraidingTable;
pub use builtin::{dz3_model, toric_code_model, trivial_model};
pub use file::{FEntry, ModelFile};
pub use model::{AnyonModel, FKey, Vertex, VACUUM};
pub(crate) use modular::monodromy_by_index;
pub use modular::{
    modular_data, monodromy, quantum_dimensions, s_matrix, s_matrix_from_spins, spins,
    t_matrix, topological_spin, verlinde_check, ModularData, QuantumDimensions, VerlindeReport,
    MAX_POWER_ITERATIONS, VERLINDE_TOLERANCE,
};
pub use validate::{validate_model, CheckKind, CheckResult, ValidationReport};
