use std::path::Path;

use anyon_core::protocols::{measure_r_table, toric_cellset, CellSet};
use anyon_core::{toric_code_model, trivial_model, AnyonModel64};
use serde::{Deserialize, Serialize};

use crate::output::{clean, output_target, to_json_text, write_output, CliError, CliResult};

/// One measured half braiding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasuredEntry {
    pub pair: (String, String),
    pub value: [f64; 2],
    pub phase_over_pi: f64,
    pub cell: String,
    pub path: String,
}

/// The `measure-r` document. Matrices are row-major lists of `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureReport {
    pub model: String,
    pub labels: Vec<String>,
    pub condensed: Vec<String>,
    pub boundary: Vec<String>,
    pub measured_r: Vec<MeasuredEntry>,
    pub assembled_r: Vec<Vec<[f64; 2]>>,
    pub reference: Vec<Vec<[f64; 2]>>,
    pub s: Vec<Vec<[f64; 2]>>,
    pub t: Vec<Vec<[f64; 2]>>,
    pub max_deviation: f64,
    pub failing_pairs: Vec<(String, String)>,
    pub verdict: String,
}

fn rows(m: &anyon_core::CMatrix64) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [clean(z.re), clean(z.im)]).collect())
        .collect()
}

fn setup(name: &str) -> CliResult<(AnyonModel64, Vec<&'static str>, Vec<&'static str>, CellSet)> {
    match name {
        "toric" => Ok((toric_code_model(), vec!["1", "m"], vec!["1", "e"], toric_cellset())),
        "trivial" => Ok((trivial_model(), vec!["1"], vec!["1"], CellSet::new())),
        other => Err(CliError::Usage(format!("measure-r supports --model toric or trivial, got {other:?}"))),
    }
}

pub fn report(name: &str, corrupt: bool) -> CliResult<MeasureReport> {
    let (model, condensed, boundary, mut cells) = setup(name)?;
    if corrupt {
        for assignment in cells.values_mut() {
            let trivial = assignment
                .cell
                .paths
                .keys()
                .find(|p| {
                    let op = assignment.cell.path_operator(p).expect("listed path");
                    op.commutes_with(&assignment.cell.excitation)
                })
                .cloned();
            if let Some(p) = trivial {
                assignment.path = p;
            }
        }
    }
    let table = measure_r_table(&model, &condensed, &boundary, &cells)?;
    let measured_r = table
        .records
        .iter()
        .map(|((a, b), r)| MeasuredEntry {
            pair: (a.clone(), b.clone()),
            value: {
                let z = r.unit_phase();
                [clean(z.re), clean(z.im)]
            },
            phase_over_pi: clean(r.phase_over_pi()),
            cell: r.metadata.get("cell").cloned().unwrap_or_default(),
            path: r.metadata.get("path").cloned().unwrap_or_default(),
        })
        .collect();
    Ok(MeasureReport {
        model: name.to_string(),
        labels: table.labels.clone(),
        condensed: condensed.iter().map(|s| s.to_string()).collect(),
        boundary: boundary.iter().map(|s| s.to_string()).collect(),
        measured_r,
        assembled_r: rows(&table.assembled),
        reference: rows(&table.reference),
        s: rows(&table.s_matrix),
        t: rows(&table.t_matrix),
        max_deviation: table.max_deviation,
        failing_pairs: table.failing_pairs.clone(),
        verdict: if table.passed() { "PASS" } else { "FAIL" }.to_string(),
    })
}

pub fn run(name: &str, corrupt: bool, output: Option<&Path>) -> CliResult {
    let report = report(name, corrupt)?;
    let value = serde_json::to_value(&report).expect("report serializes");
    let text = to_json_text(&value);
    print!("{text}");
    write_output(output_target(output, &format!("measure-r-{name}.json")), &text)?;
    if report.verdict == "PASS" {
        Ok(())
    } else {
        let pairs: Vec<String> = report.failing_pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        Err(CliError::Failure(format!(
            "measured R table deviates from the {name} model at {} (max deviation {:.3e})",
            pairs.join(", "),
            report.max_deviation
        )))
    }
}
