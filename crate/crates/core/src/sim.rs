//! Exact classical simulation on computational basis states.
//!
//! Every gate in the set is a permutation of basis states, so tracking one
//! bit per qubit is the whole simulation.

use thiserror::Error;

use crate::circuit::{Circuit, Gate, QubitId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("state has {state} bits but the circuit has {circuit} qubits")]
    LengthMismatch { state: usize, circuit: usize },
    #[error("value {value} does not fit in {width} bits")]
    ValueOutOfRange { value: u64, width: usize },
}

/// One bit per qubit, packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    words: Vec<u64>,
    len: usize,
}

impl BasisState {
    /// All-zero state on `len` qubits.
    pub fn zeros(len: usize) -> Self {
        BasisState {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut s = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            s.set(QubitId(i), b);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, q: QubitId) -> bool {
        let i = q.index();
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, q: QubitId, v: bool) {
        let i = q.index();
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, q: QubitId) {
        let i = q.index();
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(QubitId(i)))
    }

    /// Writes `value` little-endian onto `positions`.
    pub fn encode(&mut self, positions: &[QubitId], value: u64) -> Result<(), SimError> {
        let width = positions.len();
        if width < 64 && value >> width != 0 {
            return Err(SimError::ValueOutOfRange { value, width });
        }
        for (i, &q) in positions.iter().enumerate() {
            self.set(q, i < 64 && (value >> i) & 1 == 1);
        }
        Ok(())
    }

    /// Reads `positions` as a little-endian integer. At most 64 positions.
    pub fn decode(&self, positions: &[QubitId]) -> u64 {
        assert!(positions.len() <= 64, "register wider than 64 bits");
        positions
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &q)| acc | (u64::from(self.get(q)) << i))
    }

    #[inline]
    fn apply_gate(&mut self, g: &Gate) {
        match *g {
            Gate::Not(t) => self.flip(t),
            Gate::Cnot(c, t) => {
                if self.get(c) {
                    self.flip(t)
                }
            }
            Gate::Toffoli(a, b, t) => {
                if self.get(a) && self.get(b) {
                    self.flip(t)
                }
            }
        }
    }
}

/// Runs `circuit` on `state` in place.
pub fn run(circuit: &Circuit, state: &mut BasisState) -> Result<(), SimError> {
    if state.len != circuit.qubit_count() {
        return Err(SimError::LengthMismatch {
            state: state.len,
            circuit: circuit.qubit_count(),
        });
    }
    for g in circuit.gates() {
        state.apply_gate(g);
    }
    Ok(())
}

/// Pure form of [`run`].
pub fn apply(circuit: &Circuit, state: &BasisState) -> Result<BasisState, SimError> {
    let mut out = state.clone();
    run(circuit, &mut out)?;
    Ok(out)
}
