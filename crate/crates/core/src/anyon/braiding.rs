use serde::Serialize;

use super::model::AnyonModel;
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::Scalar;

/// Exact table of scalar braidings `R_{ab}` for an Abelian model, one root of
/// unity per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidingTable {
    labels: Vec<String>,
    entries: Vec<Phase>,
}

impl BraidingTable {
    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> Phase) -> Self {
        let n = labels.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        BraidingTable { labels, entries }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown label {label:?}")))
    }

    pub fn get(&self, a: usize, b: usize) -> Phase {
        self.entries[a * self.labels.len() + b]
    }

    /// `R_{ab}` by label. Panics on unknown labels.
    pub fn r(&self, a: &str, b: &str) -> Phase {
        let (a, b) = (self.index_of(a).unwrap(), self.index_of(b).unwrap());
        self.get(a, b)
    }

    pub fn transpose(&self) -> Self {
        BraidingTable::from_fn(self.labels.clone(), |a, b| self.get(b, a))
    }

    pub fn monodromy(&self, a: usize, b: usize) -> Phase {
        self.get(a, b) * self.get(b, a)
    }

    /// Builds a model whose fusion is `fuse`, with this table as its R data.
    pub fn to_model<T: Scalar>(&self, fuse: impl Fn(usize, usize) -> usize) -> Result<AnyonModel<T>> {
        AnyonModel::abelian(self.labels.clone(), fuse, |a, b| self.get(a, b).to_complex())
    }

    /// Largest deviation of this table from the R data of `model` over all
    /// ordered pairs, using the model's unique fusion channel.
    pub fn max_deviation_from<T: Scalar>(&self, model: &AnyonModel<T>) -> Result<T> {
        if model.labels() != self.labels.as_slice() {
            return Err(Error::InvalidArgument("label sets differ".into()));
        }
        let mut worst = T::zero();
        for a in 0..self.len() {
            for b in 0..self.len() {
                let c = model
                    .unique_outcome(a, b)
                    .ok_or_else(|| Error::UnsupportedModel("non-Abelian fusion".into()))?;
                let r = model
                    .r(a, b, c)
                    .ok_or_else(|| Error::IncompleteModel(format!("R for ({}, {})", self.labels[a], self.labels[b])))?;
                worst = worst.max((r - self.get(a, b).to_complex()).norm());
            }
        }
        Ok(worst)
    }
}
