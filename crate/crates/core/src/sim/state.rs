use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::pauli::PauliOperator;
use crate::error::{Error, Result};
use crate::scalar::{c, one, zero, Scalar};

/// Hard cap on the simulated register.
pub const MAX_QUBITS: usize = 24;

/// Projected norm below which a trial state counts as annihilated.
pub const ANNIHILATION_THRESHOLD: f64 = 1e-8;

/// Basis states tried after `|0...0>` before falling back to seeded random states.
const BASIS_RETRIES: u64 = 64;
const RANDOM_RETRIES: u64 = 4;

/// Dense pure state on `n` qubits, little-endian: qubit 0 is the least
/// significant bit of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    n: usize,
    amplitudes: Vec<Complex<T>>,
}

fn check_register(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        Err(Error::ResourceLimit(format!("{n} qubits exceeds the cap of {MAX_QUBITS}")))
    } else {
        Ok(())
    }
}

impl<T: Scalar> StateVector<T> {
    pub fn basis_state(n: usize, index: u64) -> Result<Self> {
        check_register(n)?;
        if index >> n != 0 {
            return Err(Error::InvalidArgument(format!("basis index {index} out of range for {n} qubits")));
        }
        let mut amplitudes = vec![zero(); 1 << n];
        amplitudes[index as usize] = one();
        Ok(StateVector { n, amplitudes })
    }

    pub fn zero_state(n: usize) -> Result<Self> {
        Self::basis_state(n, 0)
    }

    /// Normalizes `amplitudes`; fails on a wrong length or a zero vector.
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let len = amplitudes.len();
        if !len.is_power_of_two() {
            return Err(Error::InvalidArgument(format!("{len} amplitudes is not a power of two")));
        }
        let n = len.trailing_zeros() as usize;
        check_register(n)?;
        let mut state = StateVector { n, amplitudes };
        let norm = state.norm();
        if norm <= T::from_f64_lossy(ANNIHILATION_THRESHOLD) {
            return Err(Error::InvalidArgument("zero state vector".into()));
        }
        state.scale(T::one() / norm);
        Ok(state)
    }

    /// Normalized state whose amplitude components are drawn uniformly from a fixed seed.
    pub fn seeded_random(n: usize, seed: u64) -> Result<Self> {
        use rand::Rng;
        check_register(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let amps = (0..1usize << n)
            .map(|_| {
                c(
                    T::from_f64_lossy(rng.gen_range(-1.0..1.0)),
                    T::from_f64_lossy(rng.gen_range(-1.0..1.0)),
                )
            })
            .collect();
        Self::from_amplitudes(amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: u64) -> Complex<T> {
        self.amplitudes[index as usize]
    }

    pub fn norm(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt()
    }

    fn scale(&mut self, factor: T) {
        for a in &mut self.amplitudes {
            *a = *a * factor;
        }
    }

    fn check_same_register(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            })
        }
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q < self.n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("qubit {q} out of range for {} qubits", self.n)))
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        self.check_same_register(other.n)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * *b)
            .sum())
    }

    /// `P|ψ⟩`, applied in place.
    pub fn apply_pauli(&mut self, op: &PauliOperator) -> Result<()> {
        self.check_same_register(op.n())?;
        let k = op.xz_phase();
        let x = op.x_mask() as usize;
        let mut out = vec![zero(); self.amplitudes.len()];
        for (b, amp) in self.amplitudes.iter().enumerate() {
            out[b ^ x] = op.basis_factor::<T>(k, b as u64) * *amp;
        }
        self.amplitudes = out;
        Ok(())
    }

    /// Applies `op` (phase included) on the `control = 1` subspace only.
    pub fn apply_controlled_pauli(&mut self, control: usize, op: &PauliOperator) -> Result<()> {
        self.check_same_register(op.n())?;
        self.check_qubit(control)?;
        if op.acts_on(control) {
            return Err(Error::InvalidArgument(format!("control qubit {control} lies in the operator's support")));
        }
        let k = op.xz_phase();
        let x = op.x_mask() as usize;
        let cbit = 1usize << control;
        let mut out = self.amplitudes.clone();
        for b in (0..self.amplitudes.len()).filter(|b| b & cbit != 0) {
            out[b ^ x] = op.basis_factor::<T>(k, b as u64) * self.amplitudes[b];
        }
        self.amplitudes = out;
        Ok(())
    }

    fn apply_single(&mut self, q: usize, m: [[Complex<T>; 2]; 2]) -> Result<()> {
        self.check_qubit(q)?;
        let bit = 1usize << q;
        for b in (0..self.amplitudes.len()).filter(|b| b & bit == 0) {
            let (a0, a1) = (self.amplitudes[b], self.amplitudes[b | bit]);
            self.amplitudes[b] = m[0][0] * a0 + m[0][1] * a1;
            self.amplitudes[b | bit] = m[1][0] * a0 + m[1][1] * a1;
        }
        Ok(())
    }

    pub fn apply_hadamard(&mut self, q: usize) -> Result<()> {
        let h = T::FRAC_1_SQRT_2();
        let (p, m) = (c(h, T::zero()), c(-h, T::zero()));
        self.apply_single(q, [[p, p], [p, m]])
    }

    /// `diag(1, e^{iα})` on qubit `q`.
    pub fn apply_phase(&mut self, q: usize, angle: T) -> Result<()> {
        self.apply_single(q, [[one(), zero()], [zero(), c(angle.cos(), angle.sin())]])
    }

    /// `S = diag(1, i)`.
    pub fn apply_s(&mut self, q: usize) -> Result<()> {
        self.apply_single(q, [[one(), zero()], [zero(), c(T::zero(), T::one())]])
    }

    /// `⟨ψ|P|ψ⟩` without any hermiticity requirement.
    pub fn matrix_element(&self, op: &PauliOperator) -> Result<Complex<T>> {
        let mut moved = self.clone();
        moved.apply_pauli(op)?;
        self.inner(&moved)
    }

    /// Real expectation of a hermitian Pauli string.
    pub fn expectation(&self, op: &PauliOperator) -> Result<T> {
        if !op.is_hermitian() {
            return Err(Error::InvalidArgument(format!("{op} is not hermitian")));
        }
        let value = self.matrix_element(op)?;
        if value.im.abs() > T::tolerance() {
            return Err(Error::NumericalFailure(format!("expectation of {op} has imaginary part {}", value.im)));
        }
        Ok(value.re)
    }

    /// Appends a qubit in `|0>` as the new highest-index qubit.
    pub fn with_ancilla(&self) -> Result<Self> {
        check_register(self.n + 1)?;
        let mut amplitudes = self.amplitudes.clone();
        amplitudes.resize(amplitudes.len() * 2, zero());
        Ok(StateVector {
            n: self.n + 1,
            amplitudes,
        })
    }

    /// `(a|self⟩ + b|other⟩)` renormalized.
    pub fn superpose(&self, a: Complex<T>, other: &Self, b: Complex<T>) -> Result<Self> {
        self.check_same_register(other.n)?;
        let amps = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(x, y)| a * *x + b * *y)
            .collect();
        Self::from_amplitudes(amps)
    }

    pub fn to_export(&self) -> StateExport {
        StateExport {
            n: self.n,
            amplitudes: self
                .amplitudes
                .iter()
                .map(|a| [a.re.to_f64().unwrap_or(f64::NAN), a.im.to_f64().unwrap_or(f64::NAN)])
                .collect(),
        }
    }

    pub fn from_export(export: &StateExport) -> Result<Self> {
        check_register(export.n)?;
        if export.amplitudes.len() != 1usize << export.n {
            return Err(Error::DimensionMismatch {
                expected: 1usize << export.n,
                found: export.amplitudes.len(),
            });
        }
        Ok(StateVector {
            n: export.n,
            amplitudes: export
                .amplitudes
                .iter()
                .map(|[re, im]| c(T::from_f64_lossy(*re), T::from_f64_lossy(*im)))
                .collect(),
        })
    }
}

/// Serialized state: `n` plus `[re, im]` pairs in basis order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateExport {
    pub n: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

/// Free-function form of [`StateVector::apply_pauli`].
pub fn apply_pauli<T: Scalar>(state: &StateVector<T>, op: &PauliOperator) -> Result<StateVector<T>> {
    let mut out = state.clone();
    out.apply_pauli(op)?;
    Ok(out)
}

pub fn apply_controlled_pauli<T: Scalar>(
    state: &StateVector<T>,
    control: usize,
    op: &PauliOperator,
) -> Result<StateVector<T>> {
    let mut out = state.clone();
    out.apply_controlled_pauli(control, op)?;
    Ok(out)
}

pub fn expectation<T: Scalar>(state: &StateVector<T>, op: &PauliOperator) -> Result<T> {
    state.expectation(op)
}

/// `|⟨a|b⟩|²`.
pub fn fidelity<T: Scalar>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    Ok(a.inner(b)?.norm_sqr())
}

fn project<T: Scalar>(gens: &[PauliOperator], start: StateVector<T>) -> Result<(StateVector<T>, T)> {
    let half = T::from_f64_lossy(0.5);
    let mut state = start;
    for g in gens {
        let mut moved = state.clone();
        moved.apply_pauli(g)?;
        for (a, b) in state.amplitudes.iter_mut().zip(&moved.amplitudes) {
            *a = (*a + *b) * half;
        }
    }
    let norm = state.norm();
    Ok((state, norm))
}

/// Common +1 eigenstate of commuting hermitian generators, obtained by
/// projecting `|0...0>` with `Π (1 + S_i)/2`. If that trial state is
/// annihilated, further basis states and then seeded random states are tried.
pub fn ground_state_from_stabilizers<T: Scalar>(gens: &[PauliOperator]) -> Result<StateVector<T>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidStabilizerSet("no generators".into()));
    };
    let n = first.n();
    check_register(n)?;
    for (i, g) in gens.iter().enumerate() {
        if g.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.n() });
        }
        if !g.is_hermitian() {
            return Err(Error::InvalidStabilizerSet(format!("{g} is not hermitian")));
        }
        if let Some(h) = gens[..i].iter().find(|h| !h.commutes_with(g)) {
            return Err(Error::InvalidStabilizerSet(format!("{h} and {g} anticommute")));
        }
    }
    let threshold = T::from_f64_lossy(ANNIHILATION_THRESHOLD);
    let basis = (0..BASIS_RETRIES.min(1u64 << n)).map(|b| StateVector::basis_state(n, b));
    let random = (0..RANDOM_RETRIES).map(|seed| StateVector::seeded_random(n, seed));
    for trial in basis.chain(random) {
        let (state, norm) = project(gens, trial?)?;
        if norm > threshold {
            let mut state = state;
            state.scale(T::one() / norm);
            return Ok(state);
        }
    }
    Err(Error::FrustratedProjector)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = StateVector<f64>;

    fn p(label: &str) -> PauliOperator {
        PauliOperator::from_label(label).unwrap()
    }

    fn close(a: &S, b: &S) -> bool {
        a.amplitudes().iter().zip(b.amplitudes()).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    fn plus() -> S {
        S::from_amplitudes(vec![one(), one()]).unwrap()
    }

    fn minus() -> S {
        S::from_amplitudes(vec![one(), c(-1.0, 0.0)]).unwrap()
    }

    #[test]
    fn x_flips_and_z_signs() {
        let one_state = apply_pauli(&S::zero_state(1).unwrap(), &p("X")).unwrap();
        assert_eq!(one_state, S::basis_state(1, 1).unwrap());
        assert!(close(&apply_pauli(&plus(), &p("Z")).unwrap(), &minus()));
    }

    #[test]
    fn x_on_two_qubits_flips_their_bits() {
        // qubits 1 and 2 of 3, basis index 0b011 -> 0b101
        let s = S::basis_state(3, 0b011).unwrap();
        let out = apply_pauli(&s, &p("IXX")).unwrap();
        assert_eq!(out, S::basis_state(3, 0b101).unwrap());
    }

    #[test]
    fn y_matches_i_x_z() {
        let s = S::zero_state(1).unwrap();
        let out = apply_pauli(&s, &p("Y")).unwrap();
        assert_eq!(out.amplitude(1), c(0.0, 1.0));
    }

    #[test]
    fn controlled_pauli_examples() {
        let op = p("ZI");
        // control |0>: untouched
        let state = S::zero_state(2).unwrap();
        assert_eq!(apply_controlled_pauli(&state, 1, &op).unwrap(), state);
        // control |+>, target eigenvalue -1: control becomes |->
        let mut s = S::basis_state(2, 0b01).unwrap();
        s.apply_hadamard(1).unwrap();
        let out = apply_controlled_pauli(&s, 1, &op).unwrap();
        let expected = S::from_amplitudes(vec![zero(), one(), zero(), c(-1.0, 0.0)]).unwrap();
        assert!(close(&out, &expected));
    }

    #[test]
    fn controlled_pauli_rejects_overlap() {
        let s = S::zero_state(2).unwrap();
        assert!(matches!(apply_controlled_pauli(&s, 0, &p("XI")), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn dimension_mismatch() {
        let s = S::zero_state(2).unwrap();
        assert!(matches!(apply_pauli(&s, &p("X")), Err(Error::DimensionMismatch { .. })));
        assert!(fidelity(&s, &S::zero_state(1).unwrap()).is_err());
    }

    #[test]
    fn expectations() {
        assert_eq!(expectation(&plus(), &p("Z")).unwrap().abs(), 0.0);
        assert_eq!(expectation(&S::zero_state(1).unwrap(), &p("Z")).unwrap(), 1.0);
        assert!(matches!(expectation(&plus(), &p("iZ")), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn fidelities() {
        let z0 = S::zero_state(1).unwrap();
        let z1 = S::basis_state(1, 1).unwrap();
        assert_eq!(fidelity(&z0, &z0).unwrap(), 1.0);
        assert_eq!(fidelity(&z0, &z1).unwrap(), 0.0);
        assert!(fidelity(&plus(), &minus()).unwrap() < 1e-30);
    }

    #[test]
    fn stabilizer_ground_states() {
        let g = ground_state_from_stabilizers::<f64>(&[p("Z")]).unwrap();
        assert_eq!(g, S::zero_state(1).unwrap());
        let bell = ground_state_from_stabilizers::<f64>(&[p("XX"), p("ZZ")]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = S::from_amplitudes(vec![c(h, 0.0), zero(), zero(), c(h, 0.0)]).unwrap();
        assert!(close(&bell, &expected));
        let cell3 = ground_state_from_stabilizers::<f64>(&[p("XXI"), p("XIX"), p("ZZZ")]).unwrap();
        for b in 0..8u64 {
            let expect = if b.count_ones() % 2 == 0 { 0.5 } else { 0.0 };
            assert!((cell3.amplitude(b) - c(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn fallback_trial_states() {
        let g = ground_state_from_stabilizers::<f64>(&[p("-Z")]).unwrap();
        assert_eq!(g, S::basis_state(1, 1).unwrap());
        let g = ground_state_from_stabilizers::<f64>(&[p("-X")]).unwrap();
        assert!(close(&g, &minus()));
        assert!((expectation(&g, &p("X")).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn stabilizer_errors() {
        assert!(matches!(
            ground_state_from_stabilizers::<f64>(&[p("X"), p("Z")]),
            Err(Error::InvalidStabilizerSet(_))
        ));
        assert!(matches!(
            ground_state_from_stabilizers::<f64>(&[p("Z"), p("-Z")]),
            Err(Error::FrustratedProjector)
        ));
        assert!(matches!(ground_state_from_stabilizers::<f64>(&[p("iZ")]), Err(Error::InvalidStabilizerSet(_))));
    }

    #[test]
    fn register_cap() {
        assert!(matches!(S::zero_state(25), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn export_round_trip_is_bit_exact() {
        let s = S::seeded_random(3, 7).unwrap();
        let text = serde_json::to_string(&s.to_export()).unwrap();
        let back: StateExport = serde_json::from_str(&text).unwrap();
        assert_eq!(S::from_export(&back).unwrap(), s);
    }
}
