//! JSON model-file schema.
//!
//! ```json
//! {
//!   "labels": ["1", "e", "m", "ε"],
//!   "dual":   {"1": "1", "e": "e", "m": "m", "ε": "ε"},
//!   "fusion": [["e", "m", "ε", 1], ...],
//!   "r":      [["m", "e", "ε", -1.0, 0.0], ...],
//!   "f":      [["e", "e", "m", "m", 1.0, 0.0], ...]
//! }
//! ```
//!
//! * `labels`: declaration order fixes matrix indices; the first label must be `"1"`.
//! * `dual`: label → dual label.
//! * `fusion`: `[a, b, c, N]` quadruples; omitted entries are 0.
//! * `r`: `[a, b, c, re, im]` giving `R^c_{ab}`.
//! * `f`: optional `[a, b, c, d, re, im]` giving `F^d_{abc}`; when the field is
//!   absent every admissible F is 1.
//!
//! Unknown fields are rejected.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::model::AnyonModel;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `[a, b, c, d, re, im]`.
pub type FEntry = (String, String, String, String, f64, f64);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub labels: Vec<String>,
    pub dual: BTreeMap<String, String>,
    pub fusion: Vec<(String, String, String, u32)>,
    pub r: Vec<(String, String, String, f64, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<FEntry>>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model file serializes")
    }

    /// Resolves labels into a model. Unknown labels are structural errors;
    /// missing duals and axiom violations are left for validation.
    pub fn to_model<T: Scalar>(&self) -> Result<AnyonModel<T>> {
        let cplx = |re: f64, im: f64| Complex::new(T::from_f64_lossy(re), T::from_f64_lossy(im));
        let mut model = AnyonModel::new(self.labels.iter().cloned())?;
        for (a, a_dual) in &self.dual {
            model.set_dual(a, a_dual)?;
        }
        for (a, b, c, n) in &self.fusion {
            model.set_fusion(a, b, c, *n)?;
        }
        for (a, b, c, re, im) in &self.r {
            model.set_r(a, b, c, cplx(*re, *im))?;
        }
        match &self.f {
            Some(entries) => {
                for (a, b, c, d, re, im) in entries {
                    model.set_f(a, b, c, d, cplx(*re, *im))?;
                }
            }
            None => model.fill_trivial_f(),
        }
        Ok(model)
    }

    /// Serializes a model, listing only non-zero fusion entries.
    pub fn from_model<T: Scalar>(model: &AnyonModel<T>) -> Self {
        let n = model.len();
        let name = |i: usize| model.label(i).to_string();
        let f64_of = |x: T| x.to_f64().unwrap_or(f64::NAN);
        let mut fusion = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in model.fusion_outcomes(a, b) {
                    fusion.push((name(a), name(b), name(c), model.fusion(a, b, c)));
                }
            }
        }
        ModelFile {
            labels: model.labels().to_vec(),
            dual: (0..n)
                .filter_map(|a| model.dual_of(a).map(|d| (name(a), name(d))))
                .collect(),
            fusion,
            r: model
                .r_entries()
                .map(|(k, v)| (name(k.a), name(k.b), name(k.c), f64_of(v.re), f64_of(v.im)))
                .collect(),
            f: Some(
                model
                    .f_entries()
                    .map(|(k, v)| (name(k.a), name(k.b), name(k.c), name(k.d), f64_of(v.re), f64_of(v.im)))
                    .collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anyon::{builtin, validate_model};

    #[test]
    fn round_trips_builtin() {
        let toric = builtin::toric_code_model::<f64>();
        let file = ModelFile::from_model(&toric);
        let parsed = ModelFile::parse(&file.to_json()).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.to_model::<f64>().unwrap(), toric);
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{"labels":["1"],"dual":{"1":"1"},"fusion":[["1","1","1",1]],"r":[["1","1","1",1.0,0.0]],"extra":1}"#;
        let err = ModelFile::parse(text).unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("extra")));
    }

    #[test]
    fn parse_error_reports_position() {
        let err = ModelFile::parse("{\n  \"labels\": [1]\n}").unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("line 2")), "{err}");
    }

    #[test]
    fn unknown_label_is_structural() {
        let text = r#"{"labels":["1","e"],"dual":{"1":"1","e":"e"},"fusion":[["e","q","1",1]],"r":[]}"#;
        let file = ModelFile::parse(text).unwrap();
        assert!(matches!(file.to_model::<f64>(), Err(Error::Structural(_))));
    }

    #[test]
    fn f_defaults_to_one() {
        let text = r#"{"labels":["1","e"],"dual":{"1":"1","e":"e"},
            "fusion":[["1","1","1",1],["1","e","e",1],["e","1","e",1],["e","e","1",1]],
            "r":[["1","1","1",1,0],["1","e","e",1,0],["e","1","e",1,0],["e","e","1",1,0]]}"#;
        let model = ModelFile::parse(text).unwrap().to_model::<f64>().unwrap();
        assert_eq!(model.f(1, 1, 1, 1), Some(Complex::new(1.0, 0.0)));
        assert!(validate_model(&model).accepted());
    }
}
