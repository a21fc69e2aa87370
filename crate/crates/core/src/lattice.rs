//! Toric-code stabilizer cells: the 3- and 4-qubit presets and small planar
//! lattices with smooth or rough edges.
//!
//! Qubits are indexed from 0; the preset cells' qubit `j` corresponds to
//! qubit `j + 1` in the usual one-based drawings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::boundary::BoundaryKind;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sim::{ground_state_from_stabilizers, symplectic_rank, PauliOperator, StateVector, MAX_QUBITS};

/// Kind of string operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StringKind {
    /// σz string; creates `e` pairs.
    E,
    /// σx string; creates `m` pairs.
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaquetteColor {
    /// `A_p = Π σx`.
    White,
    /// `B_p = Π σz`.
    Blue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Plaquette {
    pub color: PlaquetteColor,
    /// Face coordinates; boundary faces lie one step outside the grid.
    pub face: (i64, i64),
    pub qubits: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Boundaries {
    pub top: BoundaryKind,
    pub bottom: BoundaryKind,
    pub left: BoundaryKind,
    pub right: BoundaryKind,
}

impl Boundaries {
    pub fn uniform(kind: BoundaryKind) -> Self {
        Boundaries {
            top: kind,
            bottom: kind,
            left: kind,
            right: kind,
        }
    }
}

/// Geometry of a planar lattice: qubit `r * cols + c` sits at `(r, c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeLayout {
    pub rows: usize,
    pub cols: usize,
    pub boundaries: Boundaries,
    pub coordinates: Vec<(usize, usize)>,
    pub plaquettes: Vec<Plaquette>,
}

/// A small toric-code fragment with its excitation and braiding paths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilizerCell {
    pub name: String,
    pub n: usize,
    pub stabilizers: Vec<PauliOperator>,
    /// Creates the pair of boundary `e` excitations.
    pub excitation: PauliOperator,
    /// Path name → qubits receiving one σx each, in time order.
    pub paths: BTreeMap<String, Vec<usize>>,
    /// Fusion-order operators `A1`, `A2`.
    pub fusion_ops: BTreeMap<String, PauliOperator>,
    pub layout: Option<LatticeLayout>,
}

fn pauli(label: &str) -> PauliOperator {
    PauliOperator::from_label(label).expect("preset label")
}

/// Accepts `1`, `Path1`, `path 1`, and so on.
pub fn normalize_path_name(name: &str) -> String {
    let lower = name.trim().to_ascii_lowercase();
    lower.strip_prefix("path").unwrap_or(&lower).trim().to_string()
}

impl StabilizerCell {
    pub fn path_names(&self) -> Vec<&str> {
        self.paths.keys().map(String::as_str).collect()
    }

    pub fn path(&self, name: &str) -> Result<&[usize]> {
        self.paths
            .get(&normalize_path_name(name))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownPath {
                path: name.to_string(),
                valid: self.path_names().join(", "),
            })
    }

    /// One σx per path step, in order.
    pub fn path_gates(&self, name: &str) -> Result<Vec<PauliOperator>> {
        self.path(name)?
            .iter()
            .map(|&q| PauliOperator::x(self.n, q))
            .collect()
    }

    /// Product of the path's steps.
    pub fn path_operator(&self, name: &str) -> Result<PauliOperator> {
        string_operator(self, StringKind::M, self.path(name)?)
    }

    pub fn fusion_op(&self, name: &str) -> Result<PauliOperator> {
        self.fusion_ops
            .get(name)
            .copied()
            .ok_or_else(|| Error::MissingFusionOps(self.name.clone()))
    }

    /// Stabilizers commute pairwise, are independent, and the excitation
    /// anticommutes with at least one of them.
    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.stabilizers.iter().enumerate() {
            if s.n() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: s.n() });
            }
            if let Some(t) = self.stabilizers[..i].iter().find(|t| !t.commutes_with(s)) {
                return Err(Error::InvalidStabilizerSet(format!("{t} and {s} anticommute")));
            }
        }
        if symplectic_rank(&self.stabilizers) != self.stabilizers.len() {
            return Err(Error::InvalidStabilizerSet("stabilizers are not independent".into()));
        }
        if self.stabilizers.iter().all(|s| s.commutes_with(&self.excitation)) {
            return Err(Error::InvalidStabilizerSet(format!(
                "excitation {} commutes with every stabilizer",
                self.excitation
            )));
        }
        Ok(())
    }

    /// Whether the stabilizers fix a unique state.
    pub fn has_unique_ground_state(&self) -> bool {
        self.stabilizers.len() == self.n
    }

    pub fn ground_state<T: Scalar>(&self) -> Result<StateVector<T>> {
        ground_state_from_stabilizers(&self.stabilizers)
    }

    /// Normalized `excitation · |g⟩`.
    pub fn excited_state<T: Scalar>(&self) -> Result<StateVector<T>> {
        let mut e = self.ground_state::<T>()?;
        e.apply_pauli(&self.excitation)?;
        Ok(e)
    }
}

/// Three qubits; qubit 0 is the edge shared by the two lower white half-plaquettes.
pub fn cell3() -> StabilizerCell {
    let a1 = pauli("IIX") * pauli("IIZ");
    let a2 = pauli("IZI") * pauli("IIX") * pauli("ZII");
    StabilizerCell {
        name: "cell3".into(),
        n: 3,
        stabilizers: vec![pauli("XXI"), pauli("XIX"), pauli("ZZZ")],
        excitation: pauli("ZII"),
        paths: BTreeMap::from([("1".into(), vec![0, 1]), ("2".into(), vec![1, 2])]),
        fusion_ops: BTreeMap::from([("A1".into(), a1), ("A2".into(), a2)]),
        layout: None,
    }
}

/// Four qubits in a row with a σz excitation on qubit 1.
pub fn cell4() -> StabilizerCell {
    StabilizerCell {
        name: "cell4".into(),
        n: 4,
        stabilizers: vec![pauli("XXII"), pauli("IXXI"), pauli("IIXX"), pauli("ZZZZ")],
        excitation: pauli("IZII"),
        paths: BTreeMap::from([("1".into(), vec![0, 1]), ("2".into(), vec![2, 3])]),
        fusion_ops: BTreeMap::new(),
        layout: None,
    }
}

/// Product of σz (kind `E`) or σx (kind `M`) over `qubits`.
pub fn string_operator(cell: &StabilizerCell, kind: StringKind, qubits: &[usize]) -> Result<PauliOperator> {
    if let Some(q) = qubits.iter().find(|&&q| q >= cell.n) {
        return Err(Error::InvalidArgument(format!("qubit {q} out of range for {} qubits", cell.n)));
    }
    match kind {
        StringKind::E => PauliOperator::z_string(cell.n, qubits),
        StringKind::M => PauliOperator::x_string(cell.n, qubits),
    }
}

/// Planar lattice with qubits on the vertices of a `rows × cols` grid.
///
/// Grid faces form a checkerboard of white (`A_p`, σx) and blue (`B_p`, σz)
/// plaquettes; face `(i, j)` is white when `i + j` is even. Each edge of the
/// grid adds the two-qubit truncations of the faces just outside it: white
/// ones on a smooth edge, blue ones on a rough edge. Generators that are
/// products of earlier ones are dropped.
pub fn build_lattice(rows: usize, cols: usize, boundaries: Boundaries) -> Result<StabilizerCell> {
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidArgument("lattice needs at least 2 rows and 2 columns".into()));
    }
    let n = rows * cols;
    if n > MAX_QUBITS {
        return Err(Error::ResourceLimit(format!("{rows}x{cols} lattice needs {n} qubits (cap {MAX_QUBITS})")));
    }
    let (r, c) = (rows as i64, cols as i64);
    let qubit = |i: i64, j: i64| -> Option<usize> {
        (0..r).contains(&i).then_some(())?;
        (0..c).contains(&j).then_some(())?;
        Some((i * c + j) as usize)
    };
    let color = |i: i64, j: i64| {
        if (i + j).rem_euclid(2) == 0 {
            PlaquetteColor::White
        } else {
            PlaquetteColor::Blue
        }
    };
    let wanted = |kind: BoundaryKind| match kind {
        BoundaryKind::Smooth => PlaquetteColor::White,
        BoundaryKind::Rough => PlaquetteColor::Blue,
    };
    let mut faces: Vec<(i64, i64)> = Vec::new();
    for i in 0..r - 1 {
        for j in 0..c - 1 {
            faces.push((i, j));
        }
    }
    let mut edge_faces: Vec<((i64, i64), BoundaryKind)> = Vec::new();
    edge_faces.extend((0..c - 1).map(|j| ((-1, j), boundaries.top)));
    edge_faces.extend((0..c - 1).map(|j| ((r - 1, j), boundaries.bottom)));
    edge_faces.extend((0..r - 1).map(|i| ((i, -1), boundaries.left)));
    edge_faces.extend((0..r - 1).map(|i| ((i, c - 1), boundaries.right)));
    faces.extend(
        edge_faces
            .into_iter()
            .filter(|&((i, j), kind)| color(i, j) == wanted(kind))
            .map(|(f, _)| f),
    );

    let mut plaquettes = Vec::new();
    let mut stabilizers: Vec<PauliOperator> = Vec::new();
    for (i, j) in faces {
        let qubits: Vec<usize> = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)]
            .into_iter()
            .filter_map(|(a, b)| qubit(a, b))
            .collect();
        let col = color(i, j);
        let op = match col {
            PlaquetteColor::White => PauliOperator::x_string(n, &qubits)?,
            PlaquetteColor::Blue => PauliOperator::z_string(n, &qubits)?,
        };
        let mut trial = stabilizers.clone();
        trial.push(op);
        if symplectic_rank(&trial) == trial.len() {
            stabilizers = trial;
            plaquettes.push(Plaquette {
                color: col,
                face: (i, j),
                qubits,
            });
        }
    }

    let excitation = (0..n)
        .map(|q| PauliOperator::z(n, q).expect("in range"))
        .chain((0..n).map(|q| PauliOperator::x(n, q).expect("in range")))
        .find(|e| stabilizers.iter().any(|s| !s.commutes_with(e)))
        .ok_or_else(|| Error::InvalidStabilizerSet("lattice has no stabilizers".into()))?;

    let cell = StabilizerCell {
        name: format!("lattice{rows}x{cols}"),
        n,
        stabilizers,
        excitation,
        paths: BTreeMap::new(),
        fusion_ops: BTreeMap::new(),
        layout: Some(LatticeLayout {
            rows,
            cols,
            boundaries,
            coordinates: (0..n).map(|q| (q / cols, q % cols)).collect(),
            plaquettes,
        }),
    };
    cell.validate()?;
    Ok(cell)
}

/// Looks up `3`, `4`, `cell3`, `cell4` or `lattice:RxC` (all edges smooth
/// except left/right rough).
pub fn cell_by_name(name: &str) -> Result<StabilizerCell> {
    match name {
        "3" | "cell3" => Ok(cell3()),
        "4" | "cell4" => Ok(cell4()),
        other => {
            let dims = other.strip_prefix("lattice:").and_then(|d| {
                let (r, c) = d.split_once('x')?;
                Some((r.parse().ok()?, c.parse().ok()?))
            });
            let (rows, cols) = dims.ok_or_else(|| {
                Error::InvalidArgument(format!("unknown cell {other:?}; valid cells: 3, 4, lattice:RxC"))
            })?;
            build_lattice(
                rows,
                cols,
                Boundaries {
                    top: BoundaryKind::Smooth,
                    bottom: BoundaryKind::Smooth,
                    left: BoundaryKind::Rough,
                    right: BoundaryKind::Rough,
                },
            )
        }
    }
}

#[cfg(test)]
mod tests;
