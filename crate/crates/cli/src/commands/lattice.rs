use std::path::Path;

use anyon_core::{build_lattice, BoundaryKind, Boundaries};
use serde_json::json;

use crate::output::{output_target, to_json_text, write_output, CliResult};

pub fn run(rows: usize, cols: usize, sides: [&str; 4], output: Option<&Path>) -> CliResult {
    let kinds: Vec<BoundaryKind> = sides.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let boundaries = Boundaries {
        top: kinds[0],
        bottom: kinds[1],
        left: kinds[2],
        right: kinds[3],
    };
    let cell = build_lattice(rows, cols, boundaries)?;
    let layout = cell.layout.as_ref().expect("lattices carry a layout");
    let plaquettes: Vec<_> = layout
        .plaquettes
        .iter()
        .zip(&cell.stabilizers)
        .map(|(p, s)| {
            json!({
                "color": p.color,
                "face": [p.face.0, p.face.1],
                "qubits": p.qubits,
                "operator": s.label(),
            })
        })
        .collect();
    let text = to_json_text(&json!({
        "name": cell.name,
        "n": cell.n,
        "rows": rows,
        "cols": cols,
        "boundaries": layout.boundaries,
        "coordinates": layout.coordinates.iter().map(|(r, c)| [r, c]).collect::<Vec<_>>(),
        "plaquettes": plaquettes,
        "excitation": cell.excitation.label(),
    }));
    print!("{text}");
    write_output(output_target(output, &format!("lattice-{rows}x{cols}.json")), &text)
}
