use std::path::Path;

use anyon_core::anyon::builtin;
use anyon_core::{
    s_matrix, t_matrix, validate_model, verlinde_check, AnyonModel64, Error, ModelFile, ValidationReport,
    anyon::VERLINDE_TOLERANCE,
};
use serde_json::json;

use super::{Format, ModelAction};
use crate::output::{matrix_csv, matrix_json, output_target, to_json_text, write_output, CliError, CliResult};

enum Loaded {
    Model(AnyonModel64),
    /// The file parsed but its labels or keys are malformed.
    Malformed(Error),
}

fn load(builtin_name: Option<&str>, file: Option<&Path>) -> CliResult<(String, Loaded)> {
    if let Some(name) = builtin_name {
        return Ok((name.to_string(), Loaded::Model(builtin::by_name(name)?)));
    }
    let path = file.expect("clap enforces one model source");
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = ModelFile::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let name = path.file_stem().map_or("model".into(), |s| s.to_string_lossy().into_owned());
    Ok(match parsed.to_model::<f64>() {
        Ok(m) => (name, Loaded::Model(m)),
        Err(e @ Error::Structural(_)) => (name, Loaded::Malformed(e)),
        Err(e) => return Err(e.into()),
    })
}

fn report_json(report: &ValidationReport) -> serde_json::Value {
    json!({
        "accepted": report.accepted(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "kind": format!("{:?}", c.kind).to_lowercase(),
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

pub fn run(
    action: ModelAction,
    builtin_name: Option<&str>,
    file: Option<&Path>,
    format: Option<Format>,
    output: Option<&Path>,
) -> CliResult {
    let (name, loaded) = load(builtin_name, file)?;
    let model = match loaded {
        Loaded::Model(m) => m,
        Loaded::Malformed(e) if action == ModelAction::Validate => {
            let report = ValidationReport::structural_failure(e.to_string());
            let text = match format {
                Some(Format::Json) => to_json_text(&report_json(&report)),
                _ => format!("{report}\n"),
            };
            print!("{text}");
            write_output(output_target(output, &format!("validate-{name}.txt")), &text)?;
            return Err(CliError::Failure(format!("model {name} is malformed")));
        }
        Loaded::Malformed(e) => return Err(e.into()),
    };
    let labels = model.labels().to_vec();

    if format == Some(Format::Csv) && !matches!(action, ModelAction::Smatrix | ModelAction::Tmatrix) {
        return Err(CliError::Usage("CSV output is only available for smatrix and tmatrix".into()));
    }

    let (text, default_name, failure) = match action {
        ModelAction::Show => {
            let text = format!("{}\n", ModelFile::from_model(&model).to_json());
            (text, format!("{name}.json"), None)
        }
        ModelAction::Validate => {
            let report = validate_model(&model);
            let text = match format {
                Some(Format::Json) => to_json_text(&report_json(&report)),
                _ => format!("{report}\n"),
            };
            let failure = (!report.accepted()).then(|| format!("model {name} failed validation"));
            (text, format!("validate-{name}.txt"), failure)
        }
        ModelAction::Smatrix | ModelAction::Tmatrix => {
            let (m, key) = if action == ModelAction::Smatrix {
                (s_matrix(&model)?, "s")
            } else {
                (t_matrix(&model)?, "t")
            };
            match format {
                Some(Format::Csv) => (matrix_csv(&labels, &m)?, format!("{name}-{key}.csv"), None),
                _ => (
                    to_json_text(&json!({ "labels": labels, "matrix": matrix_json(&m) })),
                    format!("{name}-{key}.json"),
                    None,
                ),
            }
        }
        ModelAction::Verlinde => {
            let report = verlinde_check(&model)?;
            let pass = report.matches_model && report.max_deviation <= VERLINDE_TOLERANCE;
            let verdict = if pass { "PASS" } else { "FAIL" };
            let text = match format {
                Some(Format::Json) => to_json_text(&json!({
                    "verdict": verdict,
                    "max_deviation": report.max_deviation,
                    "matches_model": report.matches_model,
                    "fusion": report.fusion,
                })),
                _ => format!("{verdict}, max deviation {:.3e}\n", report.max_deviation),
            };
            let failure = (!pass).then(|| format!("Verlinde formula does not reproduce the fusion rules of {name}"));
            (text, format!("verlinde-{name}.txt"), failure)
        }
    };
    print!("{text}");
    write_output(output_target(output, &default_name), &text)?;
    match failure {
        Some(msg) => Err(CliError::Failure(msg)),
        None => Ok(()),
    }
}
