//! Reversible circuit IR over the {NOT, CNOT, Toffoli} gate set.
//!
//! A [`Circuit`] owns a number of qubits partitioned into named registers and an
//! ordered gate list. Registers are allocated as contiguous blocks in
//! declaration order, which keeps the textual form an exact structural
//! round-trip (see [`crate::qasm`]).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of one wire within a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QubitId(pub usize);

impl QubitId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for QubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for QubitId {
    fn from(i: usize) -> Self {
        QubitId(i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Not(QubitId),
    /// `Cnot(control, target)`
    Cnot(QubitId, QubitId),
    /// `Toffoli(control, control, target)`
    Toffoli(QubitId, QubitId, QubitId),
}

impl Gate {
    pub fn not(t: usize) -> Self {
        Gate::Not(QubitId(t))
    }

    pub fn cnot(c: usize, t: usize) -> Self {
        Gate::Cnot(QubitId(c), QubitId(t))
    }

    pub fn toffoli(c1: usize, c2: usize, t: usize) -> Self {
        Gate::Toffoli(QubitId(c1), QubitId(c2), QubitId(t))
    }

    /// Operands in slot order, target last.
    pub fn qubits(&self) -> impl Iterator<Item = QubitId> {
        let (ops, len) = match *self {
            Gate::Not(t) => ([t, t, t], 1),
            Gate::Cnot(c, t) => ([c, t, t], 2),
            Gate::Toffoli(a, b, t) => ([a, b, t], 3),
        };
        ops.into_iter().take(len)
    }

    pub fn target(&self) -> QubitId {
        match *self {
            Gate::Not(t) | Gate::Cnot(_, t) | Gate::Toffoli(_, _, t) => t,
        }
    }

    pub fn is_toffoli(&self) -> bool {
        matches!(self, Gate::Toffoli(..))
    }

    /// Same gate with every operand sent through `f`.
    pub fn map_qubits(&self, mut f: impl FnMut(QubitId) -> QubitId) -> Gate {
        match *self {
            Gate::Not(t) => Gate::Not(f(t)),
            Gate::Cnot(c, t) => Gate::Cnot(f(c), f(t)),
            Gate::Toffoli(a, b, t) => Gate::Toffoli(f(a), f(b), f(t)),
        }
    }

    fn has_duplicate_operands(&self) -> bool {
        match *self {
            Gate::Not(_) => false,
            Gate::Cnot(c, t) => c == t,
            Gate::Toffoli(a, b, t) => a == b || a == t || b == t,
        }
    }
}

/// A named, ordered group of qubits. Index 0 is the least significant bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Register {
    name: String,
    qubits: Vec<QubitId>,
}

impl Register {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn qubits(&self) -> &[QubitId] {
        &self.qubits
    }

    pub fn len(&self) -> usize {
        self.qubits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qubits.is_empty()
    }

    /// The qubit holding bit `i`.
    pub fn bit(&self, i: usize) -> QubitId {
        self.qubits[i]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("qubit {index} out of range for a {qubit_count}-qubit circuit")]
    OperandOutOfRange { index: usize, qubit_count: usize },
    #[error("gate {0:?} uses the same qubit more than once")]
    DuplicateOperand(Gate),
    #[error("mapping has {got} entries but the fragment has {expected} qubits")]
    MappingLength { expected: usize, got: usize },
    #[error("mapping sends two fragment qubits to host qubit {0}")]
    DuplicateMapping(QubitId),
    #[error("register name `{0}` is not a valid identifier")]
    InvalidRegisterName(String),
    #[error("register `{0}` is already declared")]
    DuplicateRegister(String),
}

/// Toffoli metrics of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ResourceReport {
    pub toffoli_depth: usize,
    pub toffoli_count: usize,
    pub qubit_count: usize,
    pub gate_total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    qubit_count: usize,
    registers: Vec<Register>,
    gates: Vec<Gate>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Circuit {
    /// A circuit with no qubits.
    pub fn new() -> Self {
        Self::default()
    }

    /// A circuit with a single register `q` of `n` qubits.
    pub fn with_qubits(n: usize) -> Self {
        let mut c = Self::new();
        if n > 0 {
            c.add_register("q", n).expect("`q` is a valid fresh name");
        }
        c
    }

    /// Allocates `width` fresh qubits at the end of the wire list under `name`.
    pub fn add_register(&mut self, name: &str, width: usize) -> Result<Register, CircuitError> {
        if !is_identifier(name) {
            return Err(CircuitError::InvalidRegisterName(name.to_string()));
        }
        if self.register(name).is_some() {
            return Err(CircuitError::DuplicateRegister(name.to_string()));
        }
        let start = self.qubit_count;
        let reg = Register {
            name: name.to_string(),
            qubits: (start..start + width).map(QubitId).collect(),
        };
        self.qubit_count += width;
        self.registers.push(reg.clone());
        Ok(reg)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn register(&self, name: &str) -> Option<&Register> {
        self.registers.iter().find(|r| r.name == name)
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn check_gate(&self, gate: &Gate) -> Result<(), CircuitError> {
        if let Some(q) = gate.qubits().find(|q| q.0 >= self.qubit_count) {
            return Err(CircuitError::OperandOutOfRange {
                index: q.0,
                qubit_count: self.qubit_count,
            });
        }
        if gate.has_duplicate_operands() {
            return Err(CircuitError::DuplicateOperand(*gate));
        }
        Ok(())
    }

    /// Appends one gate at the end of the sequence.
    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        self.check_gate(&gate)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Copies every gate of `fragment` onto this circuit, sending fragment
    /// qubit `i` to `mapping[i]`.
    pub fn append(&mut self, fragment: &Circuit, mapping: &[QubitId]) -> Result<(), CircuitError> {
        if mapping.len() != fragment.qubit_count {
            return Err(CircuitError::MappingLength {
                expected: fragment.qubit_count,
                got: mapping.len(),
            });
        }
        let mut seen = vec![false; self.qubit_count];
        for &q in mapping {
            if q.0 >= self.qubit_count {
                return Err(CircuitError::OperandOutOfRange {
                    index: q.0,
                    qubit_count: self.qubit_count,
                });
            }
            if std::mem::replace(&mut seen[q.0], true) {
                return Err(CircuitError::DuplicateMapping(q));
            }
        }
        // mapping is injective and in range, so remapped gates stay valid
        self.gates.extend(
            fragment
                .gates
                .iter()
                .map(|g| g.map_qubits(|q| mapping[q.0])),
        );
        Ok(())
    }

    /// The gate list run backwards. Every gate in the set is self-inverse.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            qubit_count: self.qubit_count,
            registers: self.registers.clone(),
            gates: self.gates.iter().rev().copied().collect(),
        }
    }

    pub fn toffoli_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_toffoli()).count()
    }

    /// Longest chain of Toffoli gates in the qubit-overlap dependency order.
    ///
    /// Clifford gates carry the level of the wires they touch forward but do
    /// not add to it.
    pub fn toffoli_depth(&self) -> usize {
        let mut level = vec![0usize; self.qubit_count];
        let mut depth = 0;
        for g in &self.gates {
            let base = g.qubits().map(|q| level[q.0]).max().unwrap_or(0);
            let lvl = base + usize::from(g.is_toffoli());
            for q in g.qubits() {
                level[q.0] = lvl;
            }
            depth = depth.max(lvl);
        }
        depth
    }

    pub fn measure(&self) -> ResourceReport {
        ResourceReport {
            toffoli_depth: self.toffoli_depth(),
            toffoli_count: self.toffoli_count(),
            qubit_count: self.qubit_count,
            gate_total: self.gates.len(),
        }
    }
}
