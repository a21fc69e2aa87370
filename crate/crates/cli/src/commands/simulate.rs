use std::collections::BTreeMap;
use std::path::Path;

use anyon_core::lattice::{cell_by_name, StabilizerCell};
use anyon_core::protocols::{run_batch, Job};
use anyon_core::{cell3, cell4, ExperimentRecord64};
use serde_json::{json, Value};

use super::{Format, Protocol};
use crate::output::{clean, complex_json, fixed, output_target, to_json_text, write_output, CliError, CliResult};

fn job(protocol: Protocol, cell: &StabilizerCell, path: &str) -> Job {
    match protocol {
        Protocol::HalfBraid => Job::HalfBraid { cell: cell.clone(), path: path.to_string() },
        Protocol::RPhase => Job::RPhase { cell: cell.clone(), path: path.to_string() },
        Protocol::FPhase => Job::FPhase { cell: cell.clone() },
    }
}

pub fn record_json(record: &ExperimentRecord64) -> Value {
    let mut v = serde_json::to_value(record).expect("record serializes");
    let obj = v.as_object_mut().expect("record is an object");
    obj.insert("phase".into(), json!(clean(record.phase)));
    obj.insert("phase_over_pi".into(), json!(clean(record.phase_over_pi())));
    if record.name == "f-phase" {
        obj.insert("F".into(), complex_json(record.unit_phase()));
    }
    v
}

pub fn record_text(record: &ExperimentRecord64) -> String {
    let mut lines = vec![format!("experiment   {}", record.name)];
    for (k, v) in &record.metadata {
        lines.push(format!("{:<12} {v}", k));
    }
    if let (Some(sz), Some(sy)) = (record.sz, record.sy) {
        lines.push(format!("⟨σz⟩         {}", fixed(sz)));
        lines.push(format!("⟨σy⟩         {}", fixed(sy)));
    }
    lines.push(format!("phase/π      {}", fixed(record.phase_over_pi())));
    if record.name == "f-phase" {
        let f = record.unit_phase();
        lines.push(format!("F            {}{}{}i", fixed(f.re), if fixed(f.im).starts_with('-') { "" } else { "+" }, fixed(f.im)));
    }
    for (target, f) in &record.fidelities {
        lines.push(format!("fidelity({target}) {}", fixed(*f)));
    }
    lines.join("\n") + "\n"
}

pub fn run(
    protocol: Protocol,
    cell: Option<&str>,
    path: &str,
    all: bool,
    format: Option<Format>,
    output: Option<&Path>,
) -> CliResult {
    if format == Some(Format::Csv) {
        return Err(CliError::Usage("experiment records are JSON only; CSV is for model matrices".into()));
    }
    let cells: Vec<StabilizerCell> = match cell {
        Some(name) => vec![cell_by_name(name)?],
        None if all => vec![cell3(), cell4()],
        None => vec![cell3()],
    };
    if protocol == Protocol::FPhase && !all {
        cells[0].fusion_op("A1")?;
    }
    let jobs: Vec<Job> = if all {
        let mut jobs = Vec::new();
        for c in &cells {
            match protocol {
                Protocol::FPhase if c.fusion_ops.is_empty() => {}
                Protocol::FPhase => jobs.push(job(protocol, c, "")),
                _ => jobs.extend(c.paths.keys().map(|p| job(protocol, c, p))),
            }
        }
        if jobs.is_empty() {
            return Err(CliError::Usage(format!("no {} experiments for the selected cells", protocol.name())));
        }
        jobs
    } else {
        if protocol != Protocol::FPhase {
            cells[0].path(path)?;
        }
        vec![job(protocol, &cells[0], path)]
    };

    let results = run_batch::<f64>(&jobs);
    let mut records: BTreeMap<String, ExperimentRecord64> = BTreeMap::new();
    for (name, result) in results {
        records.insert(name, result?);
    }

    let default_name = format!("simulate-{}.json", jobs[0].name().replace('/', "-"));
    let json_text = if all {
        to_json_text(&Value::Object(records.iter().map(|(k, r)| (k.clone(), record_json(r))).collect()))
    } else {
        to_json_text(&record_json(records.values().next().expect("one record")))
    };
    let text = match format {
        Some(_) => json_text.clone(),
        None => records.values().map(record_text).collect::<Vec<_>>().join("\n"),
    };
    print!("{text}");
    write_output(output_target(output, &default_name), &json_text)
}
