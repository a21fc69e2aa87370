//! Dense reference implementations used only by tests: Kronecker-product
//! Pauli matrices, dense gates, and exact diagonalization.
//!
//! Nothing here depends on the bit-packed simulator it is used to check.
//! Basis ordering is little-endian: qubit 0 is the least significant bit,
//! so an `n`-qubit operator is `M_{n-1} ⊗ … ⊗ M_0`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

pub type Mat = DMatrix<Complex64>;
pub type Vector = DVector<Complex64>;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `i^k`.
pub fn i_pow(k: u8) -> Complex64 {
    [cx(1.0, 0.0), cx(0.0, 1.0), cx(-1.0, 0.0), cx(0.0, -1.0)][(k % 4) as usize]
}

/// 2×2 matrix for `I`, `X`, `Y` or `Z`.
pub fn single(letter: char) -> Mat {
    let (o, z) = (cx(1.0, 0.0), cx(0.0, 0.0));
    let entries = match letter {
        'I' => [o, z, z, o],
        'X' => [z, o, o, z],
        'Y' => [z, cx(0.0, -1.0), cx(0.0, 1.0), z],
        'Z' => [o, z, z, -o],
        other => panic!("not a Pauli letter: {other:?}"),
    };
    Mat::from_row_slice(2, 2, &entries)
}

/// `i^k` times the Kronecker product; character `q` of `letters` acts on qubit `q`.
pub fn pauli(letters: &str, k: u8) -> Mat {
    let mut m = Mat::identity(1, 1);
    for ch in letters.chars() {
        m = single(ch).kronecker(&m);
    }
    m * i_pow(k)
}

/// A single-qubit gate on qubit `q` of `n`.
pub fn embed_single(n: usize, q: usize, gate: &Mat) -> Mat {
    let mut m = Mat::identity(1, 1);
    for j in 0..n {
        let factor = if j == q { gate.clone() } else { Mat::identity(2, 2) };
        m = factor.kronecker(&m);
    }
    m
}

pub fn hadamard(n: usize, q: usize) -> Mat {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    embed_single(n, q, &Mat::from_row_slice(2, 2, &[cx(h, 0.0), cx(h, 0.0), cx(h, 0.0), cx(-h, 0.0)]))
}

/// `|0⟩⟨0|_c ⊗ 1 + |1⟩⟨1|_c ⊗ U`, with `u` an `n`-qubit matrix acting trivially on `control`.
pub fn controlled(n: usize, control: usize, u: &Mat) -> Mat {
    let dim = 1usize << n;
    // U commutes with the control projectors, so column j is e_j or U e_j
    Mat::from_fn(dim, dim, |i, j| match ((j >> control) & 1, i == j) {
        (0, true) => cx(1.0, 0.0),
        (0, false) => cx(0.0, 0.0),
        _ => u[(i, j)],
    })
}

/// `M v`.
pub fn apply(m: &Mat, v: &Vector) -> Vector {
    m * v
}

/// `M N`.
pub fn multiply(m: &Mat, n: &Mat) -> Mat {
    m * n
}

/// Largest entrywise modulus of `a - b` for vectors.
pub fn max_vec_diff(a: &Vector, b: &Vector) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `|v⟩⟨v|`.
pub fn outer(v: &Vector) -> Mat {
    v * v.adjoint()
}

/// Largest entrywise modulus of `a - b`.
pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `⟨ψ|M|ψ⟩`.
pub fn expectation(m: &Mat, psi: &Vector) -> Complex64 {
    psi.dotc(&(m * psi))
}

/// Lowest eigenpair of a hermitian matrix, plus the gap to the next level.
pub fn lowest_eigenvector(h: &Mat) -> (f64, Vector, f64) {
    let eig = SymmetricEigen::new(h.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let e0 = eig.eigenvalues[order[0]];
    let gap = order.get(1).map_or(f64::INFINITY, |&i| eig.eigenvalues[i] - e0);
    (e0, eig.eigenvectors.column(order[0]).into_owned(), gap)
}

/// `H = -Σ S_i` for Pauli strings given as letter strings with a `±1` sign.
pub fn stabilizer_hamiltonian(terms: &[(&str, f64)]) -> Mat {
    let n = terms[0].0.len();
    let mut h = Mat::zeros(1 << n, 1 << n);
    for (letters, sign) in terms {
        h -= pauli(letters, 0) * cx(*sign, 0.0);
    }
    h
}

/// `|⟨a|b⟩|²` for normalized vectors.
pub fn fidelity(a: &Vector, b: &Vector) -> f64 {
    a.dotc(b).norm_sqr()
}
