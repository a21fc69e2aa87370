use std::path::Path;

use anyon_core::{braidings_from_half_braidings, reconstruct_bulk, BoundaryKind, BraidingTable, CyclicCenter, Phase};
use serde_json::json;

use super::Format;
use crate::output::{output_target, to_json_text, write_output, CliError, CliResult};

pub const MAX_N: u32 = 12;

/// `1`, `-1`, `ω`, `ω̄`, or `ω^k` with `ω = exp(2πi/n)`.
fn symbol(p: Phase, n: u32) -> String {
    let (num, den): (i64, i64) = p.into();
    let n = i64::from(n);
    if (num * n) % den != 0 {
        return p.to_string();
    }
    match num * n / den {
        0 => "1".into(),
        k if 2 * k == n => "-1".into(),
        1 => "ω".into(),
        k if k == n - 1 => "ω̄".into(),
        k => format!("ω^{k}"),
    }
}

fn turns_json(p: Phase) -> serde_json::Value {
    let (num, den): (i64, i64) = p.into();
    json!([num, den])
}

/// Column width of `s`, ignoring combining marks.
fn width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

fn table_text(table: &BraidingTable, n: u32) -> String {
    let w = table.labels().iter().map(|l| width(l)).max().unwrap_or(1).max(4) + 2;
    let pad = |s: &str| format!("{s}{}", " ".repeat(w.saturating_sub(width(s))));
    let mut out = pad("R");
    for l in table.labels() {
        out.push_str(&pad(l));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for a in 0..table.len() {
        let mut line = pad(&table.labels()[a]);
        for b in 0..table.len() {
            line.push_str(&pad(&symbol(table.get(a, b), n)));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn run(n: u32, boundary: &str, check: bool, format: Option<Format>, output: Option<&Path>) -> CliResult {
    if !(1..=MAX_N).contains(&n) {
        return Err(CliError::Usage(format!("--n must be between 1 and {MAX_N}, got {n}")));
    }
    let kind: BoundaryKind = boundary.parse()?;
    if format == Some(Format::Csv) {
        return Err(CliError::Usage("center output is JSON or text; CSV is for model matrices".into()));
    }
    let triples = reconstruct_bulk(n, kind)?;
    let table = braidings_from_half_braidings(&triples)?;
    let reference = CyclicCenter::new(n)?.braiding();
    // the rough reconstruction is the transpose gauge of the smooth one
    let comparable = match kind {
        BoundaryKind::Smooth => table.clone(),
        BoundaryKind::Rough => table.transpose(),
    };
    let verdict = check.then(|| if comparable == reference { "PASS" } else { "FAIL" });

    let text = match format {
        Some(_) => to_json_text(&json!({
            "n": n,
            "boundary": kind.to_string(),
            "triples": triples.iter().map(|t| json!({
                "bulk": t.bulk_label,
                "boundary": t.boundary_label,
                "half_braiding": t.half_braiding.iter().map(|(l, p)| json!([l, turns_json(*p)])).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "labels": table.labels(),
            "r_turns": (0..table.len()).map(|a| (0..table.len()).map(|b| turns_json(table.get(a, b))).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "check": verdict,
        })),
        None => {
            let mut s = format!("D(Z_{n}) from the {kind} boundary, ω = exp(2πi/{n})\n\n");
            let boundary_labels: Vec<&str> = triples[0].half_braiding.iter().map(|(l, _)| l.as_str()).collect();
            s.push_str(&format!("bulk      boundary  half braiding around [{}]\n", boundary_labels.join(", ")));
            for t in &triples {
                let hb: Vec<String> = t.half_braiding.iter().map(|(_, p)| symbol(*p, n)).collect();
                s.push_str(&format!("{:<10}{:<10}{}\n", t.bulk_label, t.boundary_label, hb.join(" ")));
            }
            s.push_str("\nbraiding R (row moves around column):\n");
            s.push_str(&table_text(&table, n));
            if let Some(v) = verdict {
                let what = match kind {
                    BoundaryKind::Smooth => "rebuilt R",
                    BoundaryKind::Rough => "transpose of rebuilt R",
                };
                s.push_str(&format!("\n{v}: {what} vs center of Rep(Z_{n})\n"));
            }
            s
        }
    };
    print!("{text}");
    write_output(output_target(output, &format!("center-z{n}-{kind}.txt")), &text)?;
    match verdict {
        Some("FAIL") => Err(CliError::Failure("rebuilt braiding differs from the center".into())),
        _ => Ok(()),
    }
}
