//! The three measurement protocols (half braiding, R-phase scattering,
//! F-phase scattering) and the driver that assembles a measured R table.
//!
//! Scattering circuits append the ancilla as the highest-index qubit and run
//! `H, controlled ops, H, Z` on it, so that `⟨σz⟩ = Re⟨φ|U|φ⟩` and
//! `⟨σy⟩ = Im⟨φ|U|φ⟩` for the product `U` of the controlled operators.

use std::collections::BTreeMap;
use std::thread;

use num_complex::Complex;
use serde::Serialize;

use crate::anyon::{s_matrix, t_matrix, AnyonModel};
use crate::boundary::{max_deviation_from_model, QdmDecomposition};
use crate::error::{Error, Result};
use crate::lattice::{cell3, normalize_path_name, StabilizerCell};
use crate::matrix::CMatrix;
use crate::scalar::{c, principal_angle, Scalar};
use crate::sim::{fidelity, Circuit, PauliOperator, StateVector};

/// Outcome of one protocol run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRecord<T> {
    pub name: String,
    /// Ancilla `⟨σz⟩`, when an ancilla is used.
    pub sz: Option<T>,
    pub sy: Option<T>,
    /// Extracted angle in `(-π, π]`.
    pub phase: T,
    pub fidelities: BTreeMap<String, T>,
    pub metadata: BTreeMap<String, String>,
}

impl<T: Scalar> ExperimentRecord<T> {
    /// `e^{iθ}`; from the normalized ancilla readout `sz + i·sy` when available.
    pub fn unit_phase(&self) -> Complex<T> {
        if let (Some(sz), Some(sy)) = (self.sz, self.sy) {
            let z = c(sz, sy);
            if z.norm() > T::tolerance() {
                return z / z.norm();
            }
        }
        c(self.phase.cos(), self.phase.sin())
    }

    pub fn phase_over_pi(&self) -> T {
        self.phase / T::PI()
    }
}

/// Ancilla readout of a scattering circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringOutcome<T> {
    pub sz: T,
    pub sy: T,
    pub phase: T,
}

/// `H, C-op₁, …, C-opₖ, [phase(α)], H, Z` on an ancilla appended to an `n`-qubit system.
///
/// The ops act on the system only and are applied in the given order.
pub fn scattering_circuit<T: Scalar>(
    n: usize,
    controlled: &[PauliOperator],
    injected: Option<T>,
) -> Result<Circuit<T>> {
    let anc = n;
    let mut circuit = Circuit::new(n + 1);
    circuit.hadamard(anc)?;
    for op in controlled {
        if op.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: op.n() });
        }
        circuit.controlled_pauli(anc, op.embed(n + 1)?)?;
    }
    if let Some(alpha) = injected {
        circuit.phase(anc, alpha)?;
    }
    circuit.hadamard(anc)?.pauli(PauliOperator::z(n + 1, anc)?)?;
    Ok(circuit)
}

/// Runs the scattering circuit on `|φ⟩ ⊗ |0⟩` and reads out the ancilla.
pub fn run_scattering<T: Scalar>(
    phi: &StateVector<T>,
    controlled: &[PauliOperator],
    injected: Option<T>,
) -> Result<ScatteringOutcome<T>> {
    let n = phi.n();
    let out = scattering_circuit(n, controlled, injected)?.run(&phi.with_ancilla()?)?;
    let sz = out.expectation(&PauliOperator::z(n + 1, n)?)?;
    let sy = out.expectation(&PauliOperator::y(n + 1, n)?)?;
    Ok(ScatteringOutcome {
        sz,
        sy,
        phase: principal_angle(sy, sz),
    })
}

fn metadata(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn op_labels(ops: &[PauliOperator]) -> String {
    ops.iter().map(PauliOperator::label).collect::<Vec<_>>().join(" ")
}

/// Drags the `m` string along `path` across `(|g⟩ + |e⟩)/√2`.
///
/// Fidelities are recorded against the initial state (`initial`) and
/// `(|g⟩ − |e⟩)/√2` (`flipped`); the phase is the relative phase of the
/// `|e⟩` component with respect to the `|g⟩` component.
pub fn half_braid_experiment<T: Scalar>(cell: &StabilizerCell, path: &str) -> Result<ExperimentRecord<T>> {
    let gates = cell.path_gates(path)?;
    let g = cell.ground_state::<T>()?;
    let e = cell.excited_state::<T>()?;
    let (p, m) = (c(T::one(), T::zero()), c(-T::one(), T::zero()));
    let initial = g.superpose(p, &e, p)?;
    let flipped = g.superpose(p, &e, m)?;
    let mut state = initial.clone();
    for gate in &gates {
        state.apply_pauli(gate)?;
    }
    let rel = e.inner(&state)? / g.inner(&state)?;
    let fidelities = BTreeMap::from([
        ("initial".to_string(), fidelity(&initial, &state)?),
        ("flipped".to_string(), fidelity(&flipped, &state)?),
    ]);
    Ok(ExperimentRecord {
        name: "half-braid".into(),
        sz: None,
        sy: None,
        phase: principal_angle(rel.im, rel.re),
        fidelities,
        metadata: metadata(&[
            ("cell", cell.name.clone()),
            ("path", normalize_path_name(path)),
            ("operators", op_labels(&gates)),
        ]),
    })
}

/// Scattering measurement of the path operator on the excited state `|e⟩`.
pub fn r_phase_scattering<T: Scalar>(cell: &StabilizerCell, path: &str) -> Result<ExperimentRecord<T>> {
    let gates = cell.path_gates(path)?;
    let e = cell.excited_state::<T>()?;
    let out = run_scattering(&e, &gates, None)?;
    Ok(ExperimentRecord {
        name: "r-phase".into(),
        sz: Some(out.sz),
        sy: Some(out.sy),
        phase: out.phase,
        fidelities: BTreeMap::new(),
        metadata: metadata(&[
            ("cell", cell.name.clone()),
            ("path", normalize_path_name(path)),
            ("operators", op_labels(&gates)),
        ]),
    })
}

/// Overlap of the two fusion orders on the ground state, using the cell's `A1`, `A2`.
pub fn f_phase_scattering<T: Scalar>(cell: &StabilizerCell) -> Result<ExperimentRecord<T>> {
    f_phase_scattering_with(cell, &cell.fusion_op("A1")?, &cell.fusion_op("A2")?)
}

/// Controlled `a2` then controlled `a1†` on the ground state; reads `⟨g|a1† a2|g⟩`.
pub fn f_phase_scattering_with<T: Scalar>(
    cell: &StabilizerCell,
    a1: &PauliOperator,
    a2: &PauliOperator,
) -> Result<ExperimentRecord<T>> {
    let g = cell.ground_state::<T>()?;
    let ops = [*a2, a1.adjoint()];
    let out = run_scattering(&g, &ops, None)?;
    Ok(ExperimentRecord {
        name: "f-phase".into(),
        sz: Some(out.sz),
        sy: Some(out.sy),
        phase: out.phase,
        fidelities: BTreeMap::new(),
        metadata: metadata(&[
            ("cell", cell.name.clone()),
            ("A1", a1.label()),
            ("A2", a2.label()),
        ]),
    })
}

/// One protocol invocation for the batch driver.
#[derive(Debug, Clone)]
pub enum Job {
    HalfBraid { cell: StabilizerCell, path: String },
    RPhase { cell: StabilizerCell, path: String },
    FPhase { cell: StabilizerCell },
}

impl Job {
    /// Unique, stable key such as `r-phase/cell3/1`.
    pub fn name(&self) -> String {
        match self {
            Job::HalfBraid { cell, path } => format!("half-braid/{}/{}", cell.name, normalize_path_name(path)),
            Job::RPhase { cell, path } => format!("r-phase/{}/{}", cell.name, normalize_path_name(path)),
            Job::FPhase { cell } => format!("f-phase/{}", cell.name),
        }
    }

    pub fn run<T: Scalar>(&self) -> Result<ExperimentRecord<T>> {
        match self {
            Job::HalfBraid { cell, path } => half_braid_experiment(cell, path),
            Job::RPhase { cell, path } => r_phase_scattering(cell, path),
            Job::FPhase { cell } => f_phase_scattering(cell),
        }
    }
}

/// Every protocol on every path of every cell; f-phase only where fusion ops exist.
pub fn all_jobs(cells: &[StabilizerCell]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for cell in cells {
        for path in cell.paths.keys() {
            jobs.push(Job::HalfBraid { cell: cell.clone(), path: path.clone() });
            jobs.push(Job::RPhase { cell: cell.clone(), path: path.clone() });
        }
        if !cell.fusion_ops.is_empty() {
            jobs.push(Job::FPhase { cell: cell.clone() });
        }
    }
    jobs
}

/// Runs the jobs on scoped threads and merges the results by job name.
pub fn run_batch<T: Scalar>(jobs: &[Job]) -> BTreeMap<String, Result<ExperimentRecord<T>>> {
    thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|job| (job.name(), s.spawn(move || job.run::<T>()))).collect();
        handles
            .into_iter()
            .map(|(name, h)| (name, h.join().expect("experiment thread panicked")))
            .collect()
    })
}

/// Cell and path realizing the half braiding of a condensed anyon around a boundary excitation.
#[derive(Debug, Clone)]
pub struct CellAssignment {
    pub cell: StabilizerCell,
    pub path: String,
}

/// Keyed by `(condensed, boundary)` label pair.
pub type CellSet = BTreeMap<(String, String), CellAssignment>;

/// The toric-code cell set: `m` around `e` on the 3-qubit cell, path 1.
pub fn toric_cellset() -> CellSet {
    BTreeMap::from([(
        ("m".to_string(), "e".to_string()),
        CellAssignment {
            cell: cell3(),
            path: "1".into(),
        },
    )])
}

/// Measured R table, its full assembly, and the modular data derived from it.
#[derive(Debug, Clone)]
pub struct MeasuredRTable<T: Scalar> {
    pub labels: Vec<String>,
    /// `(condensed, boundary) → e^{iθ}` as measured.
    pub measured: BTreeMap<(String, String), Complex<T>>,
    pub records: BTreeMap<(String, String), ExperimentRecord<T>>,
    pub assembled: CMatrix<T>,
    pub reference: CMatrix<T>,
    pub s_matrix: CMatrix<T>,
    pub t_matrix: CMatrix<T>,
    pub max_deviation: T,
    /// Measured pairs that disagree with the reference model.
    pub failing_pairs: Vec<(String, String)>,
    /// The reference model with its R data replaced by `assembled`.
    pub measured_model: AnyonModel<T>,
}

impl<T: Scalar> MeasuredRTable<T> {
    pub fn passed(&self) -> bool {
        self.max_deviation <= T::tolerance() && self.failing_pairs.is_empty()
    }
}

/// Runs one R-phase scattering per nontrivial `(condensed, boundary)` pair,
/// assembles the full table, and compares it with `model`.
pub fn measure_r_table<T: Scalar>(
    model: &AnyonModel<T>,
    condensed: &[&str],
    boundary: &[&str],
    cells: &CellSet,
) -> Result<MeasuredRTable<T>> {
    let dec = QdmDecomposition::new(model, condensed, boundary)?;
    let mut measured = BTreeMap::new();
    let mut records = BTreeMap::new();
    let mut thetas: BTreeMap<(usize, usize), Complex<T>> = BTreeMap::new();
    let mut failing_pairs = Vec::new();
    for (a, b) in dec.nontrivial_pairs() {
        let key = (model.label(a).to_string(), model.label(b).to_string());
        let assignment = cells
            .get(&key)
            .ok_or_else(|| Error::MissingCell(key.0.clone(), key.1.clone()))?;
        let record = r_phase_scattering::<T>(&assignment.cell, &assignment.path)?;
        let value = record.unit_phase();
        let expected = crate::boundary::abelian_r(model, a, b)?;
        if (value - expected).norm() > T::tolerance() {
            failing_pairs.push(key.clone());
        }
        let i = dec.condensed.iter().position(|&x| x == a).expect("condensed index");
        let l = dec.boundary.iter().position(|&x| x == b).expect("boundary index");
        thetas.insert((i, l), value);
        measured.insert(key.clone(), value);
        records.insert(key, record);
    }
    let assembled = dec.assemble(|i, l| thetas[&(i, l)]);
    let n = model.len();
    let reference = CMatrix::from_fn(n, n, |x, y| crate::boundary::abelian_r(model, x, y).expect("abelian model"));
    let max_deviation = max_deviation_from_model(model, &assembled)?;

    let mut measured_model = model.clone();
    for x in 0..n {
        for y in 0..n {
            let z = model.unique_outcome(x, y).expect("abelian model");
            measured_model.set_r(model.label(x), model.label(y), model.label(z), assembled[(x, y)])?;
        }
    }
    Ok(MeasuredRTable {
        labels: model.labels().to_vec(),
        measured,
        records,
        s_matrix: s_matrix(&measured_model)?,
        t_matrix: t_matrix(&measured_model)?,
        assembled,
        reference,
        max_deviation,
        failing_pairs,
        measured_model,
    })
}

#[cfg(test)]
mod tests;
