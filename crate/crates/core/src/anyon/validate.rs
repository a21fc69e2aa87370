use std::fmt;

use serde::Serialize;

use super::model::{AnyonModel, VACUUM};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Malformed data (labels, tensor shapes, keys on non-channels).
    Structural,
    /// A physical axiom of the model.
    Physics,
    /// Reported but not required for acceptance.
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    /// A report consisting of a single structural failure.
    pub fn structural_failure(detail: impl Into<String>) -> Self {
        ValidationReport {
            checks: vec![CheckResult {
                name: "structure",
                kind: CheckKind::Structural,
                passed: false,
                detail: detail.into(),
            }],
        }
    }

    pub fn accepted(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.kind == CheckKind::Info)
    }

    pub fn has_structural_failure(&self) -> bool {
        self.checks
            .iter()
            .any(|c| !c.passed && c.kind == CheckKind::Structural)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .filter(|c| !c.passed && c.kind != CheckKind::Info)
    }

    fn push(&mut self, name: &'static str, kind: CheckKind, problems: Vec<String>, ok_detail: &str) {
        let passed = problems.is_empty();
        let detail = if passed {
            ok_detail.to_string()
        } else {
            let shown: Vec<_> = problems.iter().take(5).cloned().collect();
            let extra = problems.len().saturating_sub(shown.len());
            if extra > 0 {
                format!("{} (+{extra} more)", shown.join("; "))
            } else {
                shown.join("; ")
            }
        };
        self.checks.push(CheckResult {
            name,
            kind,
            passed,
            detail,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.passed, c.kind) {
                (true, _) => "PASS",
                (false, CheckKind::Info) => "INFO",
                (false, CheckKind::Structural) => "STRUCTURAL FAIL",
                (false, CheckKind::Physics) => "FAIL",
            };
            writeln!(f, "{status:<16} {:<18} {}", c.name, c.detail)?;
        }
        write!(f, "{}", if self.accepted() { "ACCEPTED" } else { "REJECTED" })
    }
}

/// Runs every model check and reports each one, pass or fail.
pub fn validate_model<T: Scalar>(model: &AnyonModel<T>) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = model.len();
    let name = |i: usize| model.label(i).to_string();
    let tol = T::tolerance();

    let mut problems = Vec::new();
    if model.label(0) != VACUUM {
        problems.push(format!("label 0 is {:?}", model.label(0)));
    }
    for (key, _) in model.r_entries() {
        if key.mu != 1 {
            problems.push(format!("R entry ({}, {}, {}) has multiplicity index {}", name(key.a), name(key.b), name(key.c), key.mu));
        } else if model.fusion(key.a, key.b, key.c) == 0 {
            problems.push(format!("R entry on non-channel ({}, {} -> {})", name(key.a), name(key.b), name(key.c)));
        }
    }
    for (key, _) in model.f_entries() {
        let admissible = model
            .fusion_outcomes(key.a, key.b)
            .any(|e| model.fusion(e, key.c, key.d) > 0);
        if !admissible {
            problems.push(format!("F entry on non-admissible ({}, {}, {}; {})", name(key.a), name(key.b), name(key.c), name(key.d)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if model.fusion_outcomes(a, b).next().is_none() {
                problems.push(format!("{} ⊗ {} has no fusion outcome", name(a), name(b)));
            }
        }
    }
    report.push("structure", CheckKind::Structural, problems, "labels, tensor shape and keys are well formed");

    let mut problems = Vec::new();
    for a in 0..n {
        for c in 0..n {
            let expect = u32::from(a == c);
            if model.fusion(0, a, c) != expect || model.fusion(a, 0, c) != expect {
                problems.push(format!("1 ⊗ {} -> {} has multiplicity {} / {}", name(a), name(c), model.fusion(0, a, c), model.fusion(a, 0, c)));
            }
        }
    }
    report.push("vacuum_unit", CheckKind::Physics, problems, "vacuum is a two-sided fusion unit");

    let mut problems = Vec::new();
    for a in 0..n {
        match model.dual_of(a) {
            None => problems.push(format!("label {} has no dual entry", name(a))),
            Some(d) if model.fusion(a, d, 0) != 1 => {
                problems.push(format!("N[{}][{}][1] = {}", name(a), name(d), model.fusion(a, d, 0)))
            }
            Some(_) => {}
        }
    }
    report.push("dual_pairing", CheckKind::Physics, problems, "N[a][a*][1] = 1 for every a");

    let mut problems = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let left: u64 = (0..n)
                        .map(|e| u64::from(model.fusion(a, b, e)) * u64::from(model.fusion(e, c, d)))
                        .sum();
                    let right: u64 = (0..n)
                        .map(|f| u64::from(model.fusion(b, c, f)) * u64::from(model.fusion(a, f, d)))
                        .sum();
                    if left != right {
                        problems.push(format!("({}{}){} -> {}: {left} vs {right}", name(a), name(b), name(c), name(d)));
                    }
                }
            }
        }
    }
    report.push("associativity", CheckKind::Physics, problems, "fusion multiplicities are associative");

    let mut problems = Vec::new();
    for (key, value) in model.r_entries() {
        if (value.norm() - T::one()).abs() > tol {
            problems.push(format!("|R^{}_{{{}{}}}| = {}", name(key.c), name(key.a), name(key.b), value.norm()));
        }
    }
    report.push("r_unit_modulus", CheckKind::Physics, problems, "every R value has modulus 1");

    let mut problems = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in model.fusion_outcomes(a, b) {
                if model.r(a, b, c).is_none() {
                    problems.push(format!("R^{}_{{{}{}}}", name(c), name(a), name(b)));
                }
            }
        }
    }
    report.push("r_complete", CheckKind::Physics, problems, "every fusion channel has an R value");

    let problems = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| model.unique_outcome(a, b).is_none())
        .map(|(a, b)| format!("{} ⊗ {} is not a single channel", name(a), name(b)))
        .collect();
    report.push("abelian", CheckKind::Info, problems, "every fusion has exactly one outcome");

    report
}
