use serde::Serialize;

use super::pauli::PauliOperator;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Gate<T> {
    Pauli(PauliOperator),
    Hadamard(usize),
    ControlledPauli { control: usize, op: PauliOperator },
    S(usize),
    /// `diag(1, e^{iα})`.
    Phase { qubit: usize, angle: T },
}

/// Ordered gate list on a fixed register.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circuit<T> {
    n: usize,
    gates: Vec<Gate<T>>,
}

impl<T: Scalar> Circuit<T> {
    pub fn new(n: usize) -> Self {
        Circuit { n, gates: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q < self.n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("qubit {q} out of range for {} qubits", self.n)))
        }
    }

    fn check_op(&self, op: &PauliOperator) -> Result<()> {
        if op.n() == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: op.n(),
            })
        }
    }

    pub fn push(&mut self, gate: Gate<T>) -> Result<&mut Self> {
        match &gate {
            Gate::Pauli(op) => self.check_op(op)?,
            Gate::Hadamard(q) | Gate::S(q) | Gate::Phase { qubit: q, .. } => self.check_qubit(*q)?,
            Gate::ControlledPauli { control, op } => {
                self.check_qubit(*control)?;
                self.check_op(op)?;
                if op.acts_on(*control) {
                    return Err(Error::InvalidArgument(format!(
                        "control qubit {control} lies in the support of {op}"
                    )));
                }
            }
        }
        self.gates.push(gate);
        Ok(self)
    }

    pub fn pauli(&mut self, op: PauliOperator) -> Result<&mut Self> {
        self.push(Gate::Pauli(op))
    }

    pub fn hadamard(&mut self, q: usize) -> Result<&mut Self> {
        self.push(Gate::Hadamard(q))
    }

    pub fn controlled_pauli(&mut self, control: usize, op: PauliOperator) -> Result<&mut Self> {
        self.push(Gate::ControlledPauli { control, op })
    }

    pub fn s(&mut self, q: usize) -> Result<&mut Self> {
        self.push(Gate::S(q))
    }

    pub fn phase(&mut self, qubit: usize, angle: T) -> Result<&mut Self> {
        self.push(Gate::Phase { qubit, angle })
    }

    /// Applies every gate in order to a copy of `state`.
    pub fn run(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        if state.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: state.n(),
            });
        }
        let mut out = state.clone();
        for gate in &self.gates {
            match gate {
                Gate::Pauli(op) => out.apply_pauli(op)?,
                Gate::Hadamard(q) => out.apply_hadamard(*q)?,
                Gate::ControlledPauli { control, op } => out.apply_controlled_pauli(*control, op)?,
                Gate::S(q) => out.apply_s(*q)?,
                Gate::Phase { qubit, angle } => out.apply_phase(*qubit, *angle)?,
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn rejects_bad_gates() {
        let mut c = Circuit::<f64>::new(2);
        assert!(c.hadamard(2).is_err());
        assert!(c.pauli(PauliOperator::identity(3)).is_err());
        let x0 = PauliOperator::x(2, 0).unwrap();
        assert!(c.controlled_pauli(0, x0).is_err());
        assert!(c.controlled_pauli(1, x0).is_ok());
        assert_eq!(c.gates().len(), 1);
    }

    #[test]
    fn s_squared_is_z() {
        let mut c = Circuit::<f64>::new(1);
        c.hadamard(0).unwrap().s(0).unwrap().s(0).unwrap().hadamard(0).unwrap();
        let out = c.run(&StateVector::zero_state(1).unwrap()).unwrap();
        assert!((out.amplitude(1) - Complex::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn norm_is_preserved() {
        let mut c = Circuit::<f64>::new(3);
        let op = PauliOperator::from_label("XYI").unwrap();
        c.hadamard(2).unwrap().controlled_pauli(2, op).unwrap().phase(0, 0.3).unwrap().s(1).unwrap();
        let out = c.run(&StateVector::seeded_random(3, 1).unwrap()).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }
}
