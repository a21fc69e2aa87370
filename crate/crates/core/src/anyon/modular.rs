//! Gauge-invariant data derived from R and F: quantum dimensions, topological
//! spins, the modular S and T matrices, monodromies and the Verlinde check.

use num_complex::Complex;
use serde::Serialize;

use super::model::AnyonModel;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{c, zero, Scalar};

/// Iteration cap for the Perron eigenvalue search.
pub const MAX_POWER_ITERATIONS: usize = 100_000;

/// Deviation from an integer tolerated by the Verlinde round trip.
pub const VERLINDE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumDimensions<T> {
    pub dims: Vec<T>,
    pub total: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModularData<T: Scalar> {
    pub labels: Vec<String>,
    pub dims: Vec<T>,
    pub total_dim: T,
    pub spins: Vec<Complex<T>>,
    pub s_matrix: CMatrix<T>,
    pub t_matrix: CMatrix<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerlindeReport {
    /// Rounded `N_ab^c`, indexed `[a][b][c]`.
    pub fusion: Vec<Vec<Vec<i64>>>,
    pub max_deviation: f64,
    /// Whether the rounded tensor equals the model's fusion tensor.
    pub matches_model: bool,
}

/// Largest eigenvalue of a non-negative matrix by power iteration on `M + I`.
///
/// The shift keeps permutation-like matrices from cycling.
pub(crate) fn perron_eigenvalue<T: Scalar>(matrix: &[Vec<T>]) -> Result<T> {
    let n = matrix.len();
    let mut v = vec![T::one(); n];
    let mut estimate = T::zero();
    let tol = T::iteration_tolerance();
    for _ in 0..MAX_POWER_ITERATIONS {
        let w: Vec<T> = (0..n)
            .map(|i| v[i] + (0..n).map(|j| matrix[i][j] * v[j]).sum::<T>())
            .collect();
        let norm_v = v.iter().map(|x| *x * *x).sum::<T>().sqrt();
        let norm_w = w.iter().map(|x| *x * *x).sum::<T>().sqrt();
        let next = norm_w / norm_v - T::one();
        v = w.iter().map(|x| *x / norm_w).collect();
        if (next - estimate).abs() < tol {
            return Ok(next);
        }
        estimate = next;
    }
    Err(Error::NumericalFailure(format!(
        "power iteration did not converge within {MAX_POWER_ITERATIONS} iterations"
    )))
}

/// Perron-Frobenius dimensions `d_a` of the fusion matrices `(N_a)_{bc}` and the
/// total dimension. Abelian models return all ones without iterating.
pub fn quantum_dimensions<T: Scalar>(model: &AnyonModel<T>) -> Result<QuantumDimensions<T>> {
    let n = model.len();
    let dims = if model.is_abelian() {
        vec![T::one(); n]
    } else {
        (0..n)
            .map(|a| {
                let m: Vec<Vec<T>> = (0..n)
                    .map(|b| {
                        (0..n)
                            .map(|c| T::from_u32(model.fusion(a, b, c)).unwrap_or_else(T::zero))
                            .collect()
                    })
                    .collect();
                perron_eigenvalue(&m)
            })
            .collect::<Result<Vec<_>>>()?
    };
    let total = dims.iter().map(|d| *d * *d).sum::<T>().sqrt();
    Ok(QuantumDimensions { dims, total })
}

fn spin_with_dims<T: Scalar>(model: &AnyonModel<T>, a: usize, dims: &[T]) -> Result<Complex<T>> {
    let a_dual = model
        .dual_of(a)
        .ok_or_else(|| Error::IncompleteModel(format!("dual of {}", model.label(a))))?;
    let r = model.r(a, a_dual, 0).ok_or_else(|| {
        Error::IncompleteModel(format!("R^1_{{{}{}}}", model.label(a), model.label(a_dual)))
    })?;
    let f = model.f(a, a_dual, a, a).ok_or_else(|| {
        Error::IncompleteModel(format!(
            "F^{a}_{{{a}{d}{a}}}",
            a = model.label(a),
            d = model.label(a_dual)
        ))
    })?;
    Ok(r / (f * dims[a]))
}

/// `θ_a = R^1_{aa*} / (d_a F^a_{aa*a})`.
pub fn topological_spin<T: Scalar>(model: &AnyonModel<T>, a: &str) -> Result<Complex<T>> {
    let a = model.index_of(a)?;
    let dims = quantum_dimensions(model)?;
    spin_with_dims(model, a, &dims.dims)
}

/// Spins of every label in declaration order.
pub fn spins<T: Scalar>(model: &AnyonModel<T>) -> Result<Vec<Complex<T>>> {
    let dims = quantum_dimensions(model)?;
    (0..model.len())
        .map(|a| spin_with_dims(model, a, &dims.dims))
        .collect()
}

fn r_or_missing<T: Scalar>(model: &AnyonModel<T>, a: usize, b: usize, ch: usize) -> Result<Complex<T>> {
    model.r(a, b, ch).ok_or_else(|| {
        Error::IncompleteModel(format!(
            "R^{}_{{{}{}}}",
            model.label(ch),
            model.label(a),
            model.label(b)
        ))
    })
}

/// `S_ab = (1/D) Σ_c N_ab^c R^c_{ba} R^c_{ab} d_c`, the trace reducing to a
/// product for multiplicity-free channels.
pub fn s_matrix<T: Scalar>(model: &AnyonModel<T>) -> Result<CMatrix<T>> {
    let n = model.len();
    let qd = quantum_dimensions(model)?;
    let mut s = CMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let mut acc = zero();
            for ch in model.fusion_outcomes(a, b) {
                let mult = T::from_u32(model.fusion(a, b, ch)).unwrap_or_else(T::one);
                let double = r_or_missing(model, b, a, ch)? * r_or_missing(model, a, b, ch)?;
                acc = acc + double * (mult * qd.dims[ch]);
            }
            s[(a, b)] = acc / qd.total;
        }
    }
    Ok(s)
}

/// `S_ab = (1/D) Σ_c N_ab^c (θ_a θ_b / θ_c) d_c`.
pub fn s_matrix_from_spins<T: Scalar>(model: &AnyonModel<T>) -> Result<CMatrix<T>> {
    let n = model.len();
    let qd = quantum_dimensions(model)?;
    let theta = (0..n)
        .map(|a| spin_with_dims(model, a, &qd.dims))
        .collect::<Result<Vec<_>>>()?;
    Ok(CMatrix::from_fn(n, n, |a, b| {
        model
            .fusion_outcomes(a, b)
            .map(|ch| {
                let mult = T::from_u32(model.fusion(a, b, ch)).unwrap_or_else(T::one);
                theta[a] * theta[b] / theta[ch] * (mult * qd.dims[ch])
            })
            .sum::<Complex<T>>()
            / qd.total
    }))
}

/// `T_ab = θ_a δ_ab`.
pub fn t_matrix<T: Scalar>(model: &AnyonModel<T>) -> Result<CMatrix<T>> {
    Ok(CMatrix::diagonal(&spins(model)?))
}

/// Double braiding `R_{ba} R_{ab}` over the unique channel of `a ⊗ b`, checked
/// against `θ_a θ_b / θ_c`.
pub fn monodromy<T: Scalar>(model: &AnyonModel<T>, a: &str, b: &str) -> Result<Complex<T>> {
    let (ai, bi) = (model.index_of(a)?, model.index_of(b)?);
    monodromy_by_index(model, ai, bi)
}

pub(crate) fn monodromy_by_index<T: Scalar>(model: &AnyonModel<T>, a: usize, b: usize) -> Result<Complex<T>> {
    let ch = model.unique_outcome(a, b).ok_or_else(|| {
        Error::UnsupportedModel(format!(
            "{} ⊗ {} has more than one fusion channel",
            model.label(a),
            model.label(b)
        ))
    })?;
    let value = r_or_missing(model, b, a, ch)? * r_or_missing(model, a, b, ch)?;
    let qd = quantum_dimensions(model)?;
    let twist = spin_with_dims(model, a, &qd.dims)? * spin_with_dims(model, b, &qd.dims)?
        / spin_with_dims(model, ch, &qd.dims)?;
    let deviation = (value - twist).norm();
    if deviation > T::tolerance() {
        return Err(Error::ConsistencyFailure {
            a: model.label(a).into(),
            b: model.label(b).into(),
            c: model.label(ch).into(),
            deviation: deviation.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(value)
}

/// Evaluates `N_ab^c = Σ_d S_ad S_bd S*_cd / S_1d` from [`s_matrix`] and rounds.
pub fn verlinde_check<T: Scalar>(model: &AnyonModel<T>) -> Result<VerlindeReport> {
    let s = s_matrix(model)?;
    let n = model.len();
    let mut fusion = vec![vec![vec![0i64; n]; n]; n];
    let mut max_deviation = 0.0f64;
    let mut matches_model = true;
    let limit = T::from_f64_lossy(VERLINDE_TOLERANCE);
    for a in 0..n {
        for b in 0..n {
            for ch in 0..n {
                let value: Complex<T> = (0..n)
                    .map(|d| s[(a, d)] * s[(b, d)] * s[(ch, d)].conj() / s[(0, d)])
                    .sum();
                let rounded = value.re.round();
                let deviation = (value - c(rounded, T::zero())).norm();
                if deviation > limit {
                    return Err(Error::ConsistencyFailure {
                        a: model.label(a).into(),
                        b: model.label(b).into(),
                        c: model.label(ch).into(),
                        deviation: deviation.to_f64().unwrap_or(f64::NAN),
                    });
                }
                max_deviation = max_deviation.max(deviation.to_f64().unwrap_or(f64::NAN));
                let rounded = rounded.to_i64().unwrap_or(i64::MIN);
                matches_model &= rounded == i64::from(model.fusion(a, b, ch));
                fusion[a][b][ch] = rounded;
            }
        }
    }
    Ok(VerlindeReport {
        fusion,
        max_deviation,
        matches_model,
    })
}

pub fn modular_data<T: Scalar>(model: &AnyonModel<T>) -> Result<ModularData<T>> {
    let qd = quantum_dimensions(model)?;
    let spins = spins(model)?;
    Ok(ModularData {
        labels: model.labels().to_vec(),
        dims: qd.dims,
        total_dim: qd.total,
        t_matrix: CMatrix::diagonal(&spins),
        spins,
        s_matrix: s_matrix(model)?,
    })
}
