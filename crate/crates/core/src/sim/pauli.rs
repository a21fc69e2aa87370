use std::fmt;
use std::ops::Mul;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{i_pow, Scalar};

/// Largest register a Pauli string may act on.
pub const MAX_PAULI_QUBITS: usize = 64;

/// An n-qubit Pauli string `i^k · σ_0 ⊗ σ_1 ⊗ ...` stored as X/Z bit masks.
///
/// Qubit `q` carries `X` if only bit `q` of `x_mask` is set, `Z` if only bit `q`
/// of `z_mask` is set, and `Y = i·X·Z` if both are. The phase is `i^k` on top
/// of those letters, so a string is hermitian exactly when `k` is even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PauliOperator {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliOperator {
    fn mask_for(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_PAULI_QUBITS, "at most {MAX_PAULI_QUBITS} qubits");
        PauliOperator { n, x: 0, z: 0, phase: 0 }
    }

    /// `i^phase` times the letters given by the masks.
    pub fn from_masks(n: usize, x: u64, z: u64, phase: u8) -> Result<Self> {
        if n > MAX_PAULI_QUBITS {
            return Err(Error::ResourceLimit(format!("Pauli strings support at most {MAX_PAULI_QUBITS} qubits")));
        }
        let mask = Self::mask_for(n);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::InvalidArgument(format!("mask has bits beyond qubit {}", n.saturating_sub(1))));
        }
        Ok(PauliOperator { n, x, z, phase: phase % 4 })
    }

    fn single(n: usize, q: usize, x: bool, z: bool) -> Result<Self> {
        if q >= n {
            return Err(Error::InvalidArgument(format!("qubit {q} out of range for {n} qubits")));
        }
        Self::from_masks(n, u64::from(x) << q, u64::from(z) << q, 0)
    }

    pub fn x(n: usize, q: usize) -> Result<Self> {
        Self::single(n, q, true, false)
    }

    pub fn y(n: usize, q: usize) -> Result<Self> {
        Self::single(n, q, true, true)
    }

    pub fn z(n: usize, q: usize) -> Result<Self> {
        Self::single(n, q, false, true)
    }

    /// Product of `X` over `qubits`.
    pub fn x_string(n: usize, qubits: &[usize]) -> Result<Self> {
        qubits.iter().try_fold(Self::identity(n), |acc, &q| Ok(acc * Self::x(n, q)?))
    }

    /// Product of `Z` over `qubits`.
    pub fn z_string(n: usize, qubits: &[usize]) -> Result<Self> {
        qubits.iter().try_fold(Self::identity(n), |acc, &q| Ok(acc * Self::z(n, q)?))
    }

    /// Parses labels such as `"XIZ"`, `"-iYY"` or `"+XZ"`; character `q` acts on qubit `q`.
    pub fn from_label(label: &str) -> Result<Self> {
        let (phase, letters) = if let Some(rest) = label.strip_prefix("+i") {
            (1, rest)
        } else if let Some(rest) = label.strip_prefix("-i") {
            (3, rest)
        } else if let Some(rest) = label.strip_prefix('i') {
            (1, rest)
        } else if let Some(rest) = label.strip_prefix('-') {
            (2, rest)
        } else if let Some(rest) = label.strip_prefix('+') {
            (0, rest)
        } else {
            (0, label)
        };
        let n = letters.chars().count();
        let (mut x, mut z) = (0u64, 0u64);
        for (q, ch) in letters.chars().enumerate() {
            let (bx, bz) = match ch {
                'I' => (0, 0),
                'X' => (1, 0),
                'Y' => (1, 1),
                'Z' => (0, 1),
                other => return Err(Error::Parse(format!("invalid Pauli letter {other:?} in {label:?}"))),
            };
            x |= bx << q;
            z |= bz << q;
        }
        Self::from_masks(n, x, z, phase)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    /// Exponent `k` of the `i^k` prefactor.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn support(&self) -> u64 {
        self.x | self.z
    }

    pub fn acts_on(&self, q: usize) -> bool {
        q < self.n && (self.support() >> q) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.support().count_ones()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.support() == 0
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones().is_multiple_of(2)
    }

    pub fn adjoint(&self) -> Self {
        PauliOperator {
            phase: (4 - self.phase) % 4,
            ..*self
        }
    }

    /// Multiplies the operator by `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Self {
        PauliOperator {
            phase: (self.phase + k) % 4,
            ..*self
        }
    }

    pub fn neg(&self) -> Self {
        self.times_i_pow(2)
    }

    /// Exponent `k'` with `P = i^{k'} X^x Z^z`.
    pub(crate) fn xz_phase(&self) -> u8 {
        ((u32::from(self.phase) + (self.x & self.z).count_ones()) % 4) as u8
    }

    /// Scalar `i^{k'} (-1)^{|z & b|}` with which `P` maps `|b>` to `|b ^ x>`.
    pub(crate) fn basis_factor<T: Scalar>(&self, xz_phase: u8, b: u64) -> Complex<T> {
        let sign = ((self.z & b).count_ones() % 2) as u8 * 2;
        i_pow((xz_phase + sign) % 4)
    }

    /// The same string on a larger register.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidArgument(format!("cannot shrink a {}-qubit string to {n}", self.n)));
        }
        Self::from_masks(n, self.x, self.z, self.phase)
    }

    /// Operator product `self · rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        let (x, z) = (self.x ^ rhs.x, self.z ^ rhs.z);
        // X^a Z^b X^c Z^d = (-1)^{|b & c|} X^{a^c} Z^{b^d}
        let xz = u32::from(self.xz_phase()) + u32::from(rhs.xz_phase()) + 2 * (self.z & rhs.x).count_ones();
        let phase = ((xz + 4 * 64 - (x & z).count_ones()) % 4) as u8;
        Ok(PauliOperator { n: self.n, x, z, phase })
    }

    /// Letters only, character `q` for qubit `q`.
    pub fn letters(&self) -> String {
        (0..self.n)
            .map(|q| match ((self.x >> q) & 1, (self.z >> q) & 1) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (1, 1) => 'Y',
                _ => 'Z',
            })
            .collect()
    }

    /// Label with a phase prefix: `+`, `+i`, `-` or `-i`.
    pub fn label(&self) -> String {
        let prefix = ["+", "+i", "-", "-i"][self.phase as usize];
        format!("{prefix}{}", self.letters())
    }
}

impl Mul for PauliOperator {
    type Output = PauliOperator;

    fn mul(self, rhs: PauliOperator) -> PauliOperator {
        self.compose(&rhs).expect("Pauli strings act on the same register")
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({})", self.label())
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// GF(2) rank of the symplectic vectors `(x | z)` of `ops`.
pub fn symplectic_rank(ops: &[PauliOperator]) -> usize {
    let mut rows: Vec<u128> = ops
        .iter()
        .map(|p| u128::from(p.x_mask()) | (u128::from(p.z_mask()) << 64))
        .collect();
    let mut rank = 0;
    for bit in 0..128 {
        let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> bit) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(label: &str) -> PauliOperator {
        PauliOperator::from_label(label).unwrap()
    }

    #[test]
    fn single_qubit_products() {
        assert_eq!(p("X") * p("Z"), p("-iY"));
        assert_eq!(p("Z") * p("X"), p("iY"));
        assert_eq!(p("X") * p("Y"), p("iZ"));
        assert_eq!(p("Y") * p("X"), p("-iZ"));
        assert_eq!(p("Y") * p("Y"), p("I"));
        assert_eq!(p("iX") * p("iX"), p("-I"));
    }

    #[test]
    fn inverse_is_adjoint() {
        for label in ["XYZ", "iXXI", "-iYZY", "-ZZI"] {
            let op = p(label);
            assert_eq!(op * op.adjoint(), PauliOperator::identity(3));
        }
    }

    #[test]
    fn hermiticity_and_commutation() {
        assert!(p("Y").is_hermitian());
        assert!(!p("iZ").is_hermitian());
        assert!(p("XX").commutes_with(&p("ZZ")));
        assert!(!p("XI").commutes_with(&p("ZI")));
    }

    #[test]
    fn labels_round_trip() {
        for label in ["+XIZ", "+iYY", "-ZI", "-iIII"] {
            assert_eq!(p(label).label(), label);
        }
        assert!(matches!(PauliOperator::from_label("XQ"), Err(Error::Parse(_))));
    }

    #[test]
    fn strings_and_masks() {
        let xx = PauliOperator::x_string(3, &[0, 1]).unwrap();
        assert_eq!(xx.letters(), "XXI");
        assert_eq!(PauliOperator::z_string(3, &[]).unwrap(), PauliOperator::identity(3));
        assert!(PauliOperator::x(3, 3).is_err());
        assert!(PauliOperator::from_masks(2, 0b100, 0, 0).is_err());
        assert!(xx.acts_on(1) && !xx.acts_on(2));
    }

    #[test]
    fn compose_rejects_mismatched_registers() {
        assert!(matches!(p("X").compose(&p("XX")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rank() {
        let ops = [p("XXI"), p("XIX"), p("IXX"), p("ZZZ")];
        assert_eq!(symplectic_rank(&ops), 3);
        assert_eq!(symplectic_rank(&ops[..2]), 2);
    }
}
