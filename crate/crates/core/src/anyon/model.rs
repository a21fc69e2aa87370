use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{one, Scalar};

/// Name of the vacuum label; it must come first.
pub const VACUUM: &str = "1";

/// Key of an R-symbol `R^c_{ab}`. `mu` is the fusion multiplicity index; only
/// multiplicity-free models are supported so it is always 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub mu: u32,
}

impl Vertex {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Vertex { a, b, c, mu: 1 }
    }
}

/// Key of an F-symbol `F^d_{abc}` in its multiplicity-free number form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FKey {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// A multiplicity-free anyon model: labels, duals, fusion multiplicities and
/// R/F symbols stored as numbers keyed by fusion channel.
///
/// Label order is declaration order and index 0 is always the vacuum `"1"`.
/// Mutators refuse unknown labels (a structural error), but accept data that
/// breaks the physical axioms; use [`super::validate_model`] to check those.
#[derive(Debug, Clone, PartialEq)]
pub struct AnyonModel<T> {
    labels: Vec<String>,
    dual: Vec<Option<usize>>,
    fusion: Vec<u32>,
    r_data: BTreeMap<Vertex, Complex<T>>,
    f_data: BTreeMap<FKey, Complex<T>>,
}

impl<T: Scalar> AnyonModel<T> {
    /// Empty model over `labels`: no fusion, no duals, no R/F data.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Structural("label list is empty".into()));
        }
        if labels[0] != VACUUM {
            return Err(Error::Structural(format!(
                "first label must be the vacuum {VACUUM:?}, found {:?}",
                labels[0]
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Structural(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(AnyonModel {
            labels,
            dual: vec![None; n],
            fusion: vec![0; n * n * n],
            r_data: BTreeMap::new(),
            f_data: BTreeMap::new(),
        })
    }

    /// Builds a model on an Abelian group: `fuse(a, b)` gives the unique outcome
    /// index and `braid(a, b)` the scalar `R_{ab}`. Duals are derived from the
    /// fusion table and F is set to 1 everywhere.
    pub fn abelian<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        fuse: impl Fn(usize, usize) -> usize,
        braid: impl Fn(usize, usize) -> Complex<T>,
    ) -> Result<Self> {
        let mut model = Self::new(labels)?;
        let n = model.len();
        for a in 0..n {
            for b in 0..n {
                let c = fuse(a, b);
                if c >= n {
                    return Err(Error::Structural(format!("fusion outcome index {c} out of range")));
                }
                let k = model.flat(a, b, c);
                model.fusion[k] = 1;
                model.r_data.insert(Vertex::new(a, b, c), braid(a, b));
                if c == 0 {
                    model.dual[a] = Some(b);
                }
            }
        }
        model.fill_trivial_f();
        Ok(model)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Structural(format!("unknown label {label:?}")))
    }

    fn flat(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.labels.len();
        (a * n + b) * n + c
    }

    pub fn fusion(&self, a: usize, b: usize, c: usize) -> u32 {
        self.fusion[self.flat(a, b, c)]
    }

    /// Outcomes `c` with `N_ab^c > 0`.
    pub fn fusion_outcomes(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&c| self.fusion(a, b, c) > 0)
    }

    /// The unique outcome of `a ⊗ b` when it is multiplicity-free and single-channel.
    pub fn unique_outcome(&self, a: usize, b: usize) -> Option<usize> {
        let mut outs = self.fusion_outcomes(a, b);
        let c = outs.next()?;
        (outs.next().is_none() && self.fusion(a, b, c) == 1).then_some(c)
    }

    pub fn dual_of(&self, a: usize) -> Option<usize> {
        self.dual[a]
    }

    pub fn r(&self, a: usize, b: usize, c: usize) -> Option<Complex<T>> {
        self.r_data.get(&Vertex::new(a, b, c)).copied()
    }

    pub fn f(&self, a: usize, b: usize, c: usize, d: usize) -> Option<Complex<T>> {
        self.f_data.get(&FKey { a, b, c, d }).copied()
    }

    pub fn r_entries(&self) -> impl Iterator<Item = (&Vertex, &Complex<T>)> {
        self.r_data.iter()
    }

    pub fn f_entries(&self) -> impl Iterator<Item = (&FKey, &Complex<T>)> {
        self.f_data.iter()
    }

    /// `Σ_c N_ab^c = 1` for every pair.
    pub fn is_abelian(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.unique_outcome(a, b).is_some()))
    }

    pub fn set_dual(&mut self, a: &str, a_dual: &str) -> Result<()> {
        let (i, j) = (self.index_of(a)?, self.index_of(a_dual)?);
        self.dual[i] = Some(j);
        Ok(())
    }

    pub fn set_fusion(&mut self, a: &str, b: &str, c: &str, multiplicity: u32) -> Result<()> {
        let (i, j, k) = (self.index_of(a)?, self.index_of(b)?, self.index_of(c)?);
        let at = self.flat(i, j, k);
        self.fusion[at] = multiplicity;
        Ok(())
    }

    pub fn set_r(&mut self, a: &str, b: &str, c: &str, value: Complex<T>) -> Result<()> {
        let key = Vertex::new(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?);
        self.r_data.insert(key, value);
        Ok(())
    }

    pub fn set_f(&mut self, a: &str, b: &str, c: &str, d: &str, value: Complex<T>) -> Result<()> {
        let key = FKey {
            a: self.index_of(a)?,
            b: self.index_of(b)?,
            c: self.index_of(c)?,
            d: self.index_of(d)?,
        };
        self.f_data.insert(key, value);
        Ok(())
    }

    /// Sets `F^d_{abc} = 1` for every admissible `(a, b, c, d)` lacking an entry.
    pub fn fill_trivial_f(&mut self) {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for e in self.fusion_outcomes(a, b).collect::<Vec<_>>() {
                    for c in 0..n {
                        for d in self.fusion_outcomes(e, c).collect::<Vec<_>>() {
                            self.f_data.entry(FKey { a, b, c, d }).or_insert_with(one);
                        }
                    }
                }
            }
        }
    }

    /// Same model with every R/F value converted to another scalar type.
    pub fn cast<U: Scalar>(&self) -> AnyonModel<U> {
        let conv = |z: &Complex<T>| {
            Complex::new(
                U::from_f64_lossy(z.re.to_f64().unwrap_or(f64::NAN)),
                U::from_f64_lossy(z.im.to_f64().unwrap_or(f64::NAN)),
            )
        };
        AnyonModel {
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            fusion: self.fusion.clone(),
            r_data: self.r_data.iter().map(|(k, v)| (*k, conv(v))).collect(),
            f_data: self.f_data.iter().map(|(k, v)| (*k, conv(v))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_label_lists() {
        assert!(matches!(AnyonModel::<f64>::new(Vec::<String>::new()), Err(Error::Structural(_))));
        assert!(matches!(AnyonModel::<f64>::new(["e", "1"]), Err(Error::Structural(_))));
        assert!(matches!(AnyonModel::<f64>::new(["1", "e", "e"]), Err(Error::Structural(_))));
    }

    #[test]
    fn unknown_label_is_structural() {
        let mut m = AnyonModel::<f64>::new(["1", "e"]).unwrap();
        assert!(matches!(m.set_fusion("e", "x", "1", 1), Err(Error::Structural(_))));
    }

    #[test]
    fn abelian_constructor_derives_duals() {
        let m = AnyonModel::<f64>::abelian(["1", "a", "b"], |x, y| (x + y) % 3, |_, _| one()).unwrap();
        assert_eq!(m.dual_of(1), Some(2));
        assert_eq!(m.unique_outcome(2, 2), Some(1));
        assert!(m.is_abelian());
        assert_eq!(m.f(1, 1, 1, 0), Some(one()));
        assert_eq!(m.f(1, 1, 1, 1), None);
    }
}
