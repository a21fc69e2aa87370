//! Bulk anyons recovered from gapped-boundary excitations with half braidings.
//!
//! For the cyclic quantum double `D(Z_N)` the bulk anyons are pairs
//! `(flux, charge)`. On a smooth boundary fluxes condense and the surviving
//! excitations are the charges `{1, e1, ..., e_{N-1}}`; on a rough boundary
//! the roles swap. A bulk anyon is a boundary excitation together with the
//! phases it picks up when dragged along a semicircle around every boundary
//! excitation, and the bulk braiding `R_{ab}` is the half braiding of the
//! moving (left) anyon around the boundary image of the fixed one.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use serde::Serialize;

use crate::anyon::{monodromy_by_index, spins, AnyonModel, BraidingTable};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::phase::Phase;
use crate::scalar::{one, Scalar};

/// Which anyons condense on the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    /// White boundary: fluxes (`m`) condense, charges (`e`) survive.
    Smooth,
    /// Blue boundary: charges (`e`) condense, fluxes (`m`) survive.
    Rough,
}

impl std::str::FromStr for BoundaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smooth" => Ok(BoundaryKind::Smooth),
            "rough" => Ok(BoundaryKind::Rough),
            other => Err(Error::InvalidArgument(format!(
                "unknown boundary {other:?}; expected smooth or rough"
            ))),
        }
    }
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryKind::Smooth => "smooth",
            BoundaryKind::Rough => "rough",
        })
    }
}

/// Labelling and group structure of `Z(Rep(Z_N))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCenter {
    n: u32,
    labels: Vec<String>,
    parts: Vec<(u32, u32)>,
}

impl CyclicCenter {
    /// Labels run `1`, the pure charges, the pure fluxes, then the dyons by
    /// flux and charge. For `N = 2` they are `1, e, m, ε`.
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        let mut parts = vec![(0, 0)];
        parts.extend((1..n).map(|q| (0, q)));
        parts.extend((1..n).map(|f| (f, 0)));
        for f in 1..n {
            parts.extend((1..n).map(|q| (f, q)));
        }
        let labels = parts.iter().map(|&(f, q)| Self::name(n, f, q)).collect();
        Ok(CyclicCenter { n, labels, parts })
    }

    fn name(n: u32, flux: u32, charge: u32) -> String {
        if n == 2 {
            return ["1", "e", "m", "ε"][(flux * 2 + charge) as usize].to_string();
        }
        match (flux, charge) {
            (0, 0) => "1".to_string(),
            (0, q) => format!("e{q}"),
            (f, 0) => format!("m{f}"),
            (f, q) => format!("e{q}m{f}"),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `(flux, charge)` of a label index.
    pub fn parts(&self, index: usize) -> (u32, u32) {
        self.parts[index]
    }

    pub fn index(&self, flux: u32, charge: u32) -> usize {
        let key = (flux % self.n, charge % self.n);
        self.parts.iter().position(|p| *p == key).expect("all pairs are labelled")
    }

    pub fn fuse(&self, a: usize, b: usize) -> usize {
        let (fa, qa) = self.parts[a];
        let (fb, qb) = self.parts[b];
        self.index(fa + fb, qa + qb)
    }

    /// `R_{(a,b),(a',b')} = ω^{a b'}`: flux of the left anyon around the charge of the right.
    pub fn braiding(&self) -> BraidingTable {
        BraidingTable::from_fn(self.labels.clone(), |x, y| {
            let (fx, _) = self.parts[x];
            let (_, qy) = self.parts[y];
            Phase::root_of_unity(i64::from(fx) * i64::from(qy), self.n)
        })
    }

    /// Model on this fusion ring with the given braidings, F ≡ 1.
    pub fn model_with<T: Scalar>(&self, braiding: &BraidingTable) -> Result<AnyonModel<T>> {
        if braiding.labels() != self.labels.as_slice() {
            return Err(Error::InvalidArgument("braiding labels do not match the center".into()));
        }
        braiding.to_model(|a, b| self.fuse(a, b))
    }

    pub fn model<T: Scalar>(&self) -> AnyonModel<T> {
        self.model_with(&self.braiding()).expect("center data is consistent")
    }
}

/// `Z(Rep(Z_N))` as an anyon model.
pub fn center_of_cyclic<T: Scalar>(n: u32) -> Result<AnyonModel<T>> {
    Ok(CyclicCenter::new(n)?.model())
}

/// A bulk anyon seen from the boundary: the boundary excitation it becomes and
/// its half braidings around each boundary excitation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BulkAnyonTriple {
    pub bulk_label: String,
    pub boundary_label: String,
    /// Position of `boundary_label` in the cyclic boundary theory.
    pub boundary_index: usize,
    /// Half braiding around each boundary excitation, in boundary order; entry 0
    /// is the boundary vacuum.
    pub half_braiding: Vec<(String, Phase)>,
}

impl BulkAnyonTriple {
    pub fn half_braiding_at(&self, boundary_label: &str) -> Option<Phase> {
        self.half_braiding
            .iter()
            .find(|(l, _)| l == boundary_label)
            .map(|(_, p)| *p)
    }

    /// Trivial on the vacuum and multiplicative in the boundary excitation.
    pub fn is_character(&self) -> bool {
        let n = self.half_braiding.len();
        n > 0
            && self.half_braiding[0].1.is_one()
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    self.half_braiding[(x + y) % n].1 == self.half_braiding[x].1 * self.half_braiding[y].1
                })
            })
    }
}

/// Enumerates the bulk anyons of `D(Z_N)` as boundary excitations equipped
/// with half braidings: every surviving excitation paired with every character
/// of the boundary fusion group.
pub fn reconstruct_bulk(n: u32, boundary: BoundaryKind) -> Result<Vec<BulkAnyonTriple>> {
    let center = CyclicCenter::new(n)?;
    // boundary excitation k lifts to the pure charge (Smooth) or flux (Rough)
    let boundary_labels: Vec<String> = (0..n)
        .map(|k| match boundary {
            BoundaryKind::Smooth => center.labels[center.index(0, k)].clone(),
            BoundaryKind::Rough => center.labels[center.index(k, 0)].clone(),
        })
        .collect();
    let triples = center
        .parts
        .iter()
        .zip(&center.labels)
        .map(|(&(flux, charge), label)| {
            let (survivor, character) = match boundary {
                BoundaryKind::Smooth => (charge, flux),
                BoundaryKind::Rough => (flux, charge),
            };
            BulkAnyonTriple {
                bulk_label: label.clone(),
                boundary_label: boundary_labels[survivor as usize].clone(),
                boundary_index: survivor as usize,
                half_braiding: (0..n)
                    .map(|k| {
                        let phase = Phase::root_of_unity(i64::from(character) * i64::from(k), n);
                        (boundary_labels[k as usize].clone(), phase)
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(triples)
}

/// Bulk braidings from half braidings: `R_{ab}` is the half braiding of the
/// moving anyon `a` evaluated at the boundary image of `b`.
pub fn braidings_from_half_braidings(triples: &[BulkAnyonTriple]) -> Result<BraidingTable> {
    let Some(first) = triples.first() else {
        return Err(Error::InvalidArgument("no triples supplied".into()));
    };
    let boundary: Vec<&String> = first.half_braiding.iter().map(|(l, _)| l).collect();
    let m = boundary.len();
    for t in triples {
        let labels: Vec<&String> = t.half_braiding.iter().map(|(l, _)| l).collect();
        if labels != boundary || t.boundary_index >= m || boundary[t.boundary_index] != &t.boundary_label {
            return Err(Error::InvalidArgument(format!(
                "triple {} does not share the boundary theory",
                t.bulk_label
            )));
        }
        if !t.is_character() {
            return Err(Error::InvalidArgument(format!(
                "half braiding of {} is not a character of the boundary fusion group",
                t.bulk_label
            )));
        }
    }
    // closure: componentwise products must be present
    for a in triples {
        for b in triples {
            let index = (a.boundary_index + b.boundary_index) % m;
            let found = triples.iter().any(|t| {
                t.boundary_index == index
                    && t.half_braiding
                        .iter()
                        .zip(a.half_braiding.iter().zip(&b.half_braiding))
                        .all(|((_, p), ((_, x), (_, y)))| *p == *x * *y)
            });
            if !found {
                return Err(Error::InvalidArgument(format!(
                    "fusion of {} and {} leaves the triple set",
                    a.bulk_label, b.bulk_label
                )));
            }
        }
    }
    let labels = triples.iter().map(|t| t.bulk_label.clone()).collect();
    Ok(BraidingTable::from_fn(labels, |a, b| {
        triples[a].half_braiding[triples[b].boundary_index].1
    }))
}

/// Bulk-to-boundary map produced by condensing a set of bosons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CondensationMap {
    pub condensed: Vec<String>,
    pub bulk_to_boundary: BTreeMap<String, String>,
    pub boundary_labels: Vec<String>,
}

impl CondensationMap {
    pub fn image(&self, bulk: &str) -> Option<&str> {
        self.bulk_to_boundary.get(bulk).map(String::as_str)
    }
}

fn require_abelian<T: Scalar>(model: &AnyonModel<T>) -> Result<()> {
    if model.is_abelian() {
        Ok(())
    } else {
        Err(Error::UnsupportedModel("only Abelian models are supported".into()))
    }
}

fn indices<T: Scalar>(model: &AnyonModel<T>, labels: &[&str]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| model.index_of(l).map_err(|_| Error::InvalidArgument(format!("unknown label {l:?}"))))
        .collect()
}

/// Condenses `condensed` (which must contain the vacuum, be closed under fusion
/// and consist of mutually local bosons) and returns the quotient map. Each
/// boundary excitation is named by the first bulk label of its class.
pub fn condense<T: Scalar>(model: &AnyonModel<T>, condensed: &[&str]) -> Result<CondensationMap> {
    require_abelian(model)?;
    let set = indices(model, condensed)?;
    if !set.contains(&0) {
        return Err(Error::CondensationRejected {
            a: "1".into(),
            b: "1".into(),
            reason: "condensed set must contain the vacuum".into(),
        });
    }
    let name = |i: usize| model.label(i).to_string();
    let theta = spins(model)?;
    let tol = T::tolerance();
    for &a in &set {
        if (theta[a] - one()).norm() > tol {
            return Err(Error::CondensationRejected {
                a: name(a),
                b: name(a),
                reason: format!("topological spin {:.6} is not 1 (not a boson)", theta[a]),
            });
        }
        for &b in &set {
            let c = model.unique_outcome(a, b).expect("abelian");
            if !set.contains(&c) {
                return Err(Error::CondensationRejected {
                    a: name(a),
                    b: name(b),
                    reason: format!("fusion outcome {} is not condensed", name(c)),
                });
            }
            let mono = monodromy_by_index(model, a, b)?;
            if (mono - one()).norm() > tol {
                return Err(Error::CondensationRejected {
                    a: name(a),
                    b: name(b),
                    reason: format!("monodromy {mono:.6} is not 1"),
                });
            }
        }
    }
    let mut class_of: Vec<Option<usize>> = vec![None; model.len()];
    let mut boundary_labels = Vec::new();
    for x in 0..model.len() {
        if class_of[x].is_some() {
            continue;
        }
        for &a in &set {
            let y = model.unique_outcome(x, a).expect("abelian");
            class_of[y] = Some(x);
        }
        boundary_labels.push(name(x));
    }
    let bulk_to_boundary = (0..model.len())
        .map(|x| (name(x), name(class_of[x].expect("every label is in a class"))))
        .collect();
    Ok(CondensationMap {
        condensed: set.iter().map(|&i| name(i)).collect(),
        bulk_to_boundary,
        boundary_labels,
    })
}

/// Every label written uniquely as `a_i ⊗ b_k` with `a_i` condensed and `b_k`
/// a boundary excitation. Both lists start with the vacuum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QdmDecomposition {
    pub condensed: Vec<usize>,
    pub boundary: Vec<usize>,
    /// `(i, k)` for each model label.
    pub parts: Vec<(usize, usize)>,
}

impl QdmDecomposition {
    pub fn new<T: Scalar>(model: &AnyonModel<T>, condensed: &[&str], boundary: &[&str]) -> Result<Self> {
        require_abelian(model)?;
        let order = |labels: &[&str]| -> Result<Vec<usize>> {
            let mut idx = indices(model, labels)?;
            idx.retain(|&i| i != 0);
            idx.dedup();
            idx.insert(0, 0);
            Ok(idx)
        };
        let condensed = order(condensed)?;
        let boundary = order(boundary)?;
        let mut parts: Vec<Option<(usize, usize)>> = vec![None; model.len()];
        for (i, &a) in condensed.iter().enumerate() {
            for (k, &b) in boundary.iter().enumerate() {
                let x = model.unique_outcome(a, b).expect("abelian");
                if let Some((i0, k0)) = parts[x] {
                    return Err(Error::InvalidDecomposition(format!(
                        "{} is both {}⊗{} and {}⊗{}",
                        model.label(x),
                        model.label(condensed[i0]),
                        model.label(boundary[k0]),
                        model.label(a),
                        model.label(b)
                    )));
                }
                parts[x] = Some((i, k));
            }
        }
        let parts = parts
            .into_iter()
            .enumerate()
            .map(|(x, p)| {
                p.ok_or_else(|| {
                    Error::InvalidDecomposition(format!(
                        "{} is not a product of a condensed anyon and a boundary excitation",
                        model.label(x)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QdmDecomposition {
            condensed,
            boundary,
            parts,
        })
    }

    /// Pairs `(a_i, b_k)` with `i, k >= 1`: the phases that must be measured.
    pub fn nontrivial_pairs(&self) -> Vec<(usize, usize)> {
        self.condensed[1..]
            .iter()
            .flat_map(|&a| self.boundary[1..].iter().map(move |&b| (a, b)))
            .collect()
    }

    /// Full `R_{xy}` table from the nontrivial phases:
    /// `R_{(a_i b_k)(a_j b_l)} = θ_{il}`, with `θ` trivial when either index is the vacuum.
    pub fn assemble<T: Scalar>(&self, theta: impl Fn(usize, usize) -> Complex<T>) -> CMatrix<T> {
        let n = self.parts.len();
        CMatrix::from_fn(n, n, |x, y| {
            let (i, _) = self.parts[x];
            let (_, l) = self.parts[y];
            if i == 0 || l == 0 {
                one()
            } else {
                theta(i, l)
            }
        })
    }
}

/// Table of nontrivial phases `R_{a_i b_k}` and the full R table rebuilt from it.
#[derive(Debug, Clone, PartialEq)]
pub struct QdmPhaseTable<T: Scalar> {
    pub condensed: Vec<String>,
    pub boundary: Vec<String>,
    /// `(|condensed| - 1) x (|boundary| - 1)`.
    pub phases: CMatrix<T>,
    pub assembled: CMatrix<T>,
    /// Largest deviation of `assembled` from the model's R data.
    pub max_deviation: T,
}

impl<T: Scalar> QdmPhaseTable<T> {
    pub fn matches_model(&self) -> bool {
        self.max_deviation <= T::tolerance()
    }
}

/// The model's R data restricted to one ordered pair, over its unique channel.
pub(crate) fn abelian_r<T: Scalar>(model: &AnyonModel<T>, a: usize, b: usize) -> Result<Complex<T>> {
    let c = model
        .unique_outcome(a, b)
        .ok_or_else(|| Error::UnsupportedModel("non-Abelian fusion".into()))?;
    model.r(a, b, c).ok_or_else(|| {
        Error::IncompleteModel(format!("R^{}_{{{}{}}}", model.label(c), model.label(a), model.label(b)))
    })
}

pub(crate) fn max_deviation_from_model<T: Scalar>(model: &AnyonModel<T>, table: &CMatrix<T>) -> Result<T> {
    let mut worst = T::zero();
    for x in 0..model.len() {
        for y in 0..model.len() {
            worst = worst.max((table[(x, y)] - abelian_r(model, x, y)?).norm());
        }
    }
    Ok(worst)
}

pub fn qdm_phase_table<T: Scalar>(
    model: &AnyonModel<T>,
    condensed: &[&str],
    boundary: &[&str],
) -> Result<QdmPhaseTable<T>> {
    let dec = QdmDecomposition::new(model, condensed, boundary)?;
    let rows = dec.condensed.len() - 1;
    let cols = dec.boundary.len() - 1;
    let mut phases = CMatrix::zeros(rows, cols);
    for i in 0..rows {
        for k in 0..cols {
            phases[(i, k)] = abelian_r(model, dec.condensed[i + 1], dec.boundary[k + 1])?;
        }
    }
    let assembled = dec.assemble(|i, l| phases[(i - 1, l - 1)]);
    let max_deviation = max_deviation_from_model(model, &assembled)?;
    Ok(QdmPhaseTable {
        condensed: dec.condensed.iter().map(|&i| model.label(i).to_string()).collect(),
        boundary: dec.boundary.iter().map(|&i| model.label(i).to_string()).collect(),
        phases,
        assembled,
        max_deviation,
    })
}

#[cfg(test)]
mod tests;
