//! Gate-level in-place adders and the sub-circuits built on top of them.
//!
//! Every builder returns an [`AdderFragment`]: a standalone circuit whose
//! wires are tagged by role (operands, carry-in, carry-out, control,
//! ancillas). Hosts splice fragments in with [`AdderFragment::mapping`] and
//! [`Circuit::append`].
//!
//! Operand convention for all fragments: register `a` is the addend (the
//! divisor inside a divider) and is restored; register `b` receives the
//! result. Subtraction therefore computes `b - a`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Gate, QubitId, Register};
use crate::cost::AdderRow;
use crate::sim::{run, BasisState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdderError {
    #[error("operand width must be at least 1")]
    ZeroWidth,
    #[error("binding for `{role}` has {got} qubits, expected {expected}")]
    BindingWidth {
        role: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("binding is missing a host qubit for `{0}`")]
    MissingBinding(&'static str),
    #[error("fragment qubit {0} is bound twice or not at all")]
    BadBinding(QubitId),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

/// What a fragment computes on `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FragmentKind {
    /// `b <- a + b + cin`, overflow into carry-out.
    Adder,
    /// `b <- b - a`; carry-out set when no borrow occurs (`b >= a`).
    Subtractor,
    /// Control doubles as carry-in: `b - a` when set, `a + b` when clear.
    AddSub,
    /// `b <- a + b + cin` when the control is set, identity otherwise.
    CondAdd,
}

#[derive(Debug, Clone)]
pub struct AdderFragment {
    pub kind: FragmentKind,
    pub circuit: Circuit,
    pub a: Register,
    pub b: Register,
    pub carry_in: QubitId,
    pub carry_out: Option<QubitId>,
    pub control: Option<QubitId>,
    /// Internal work qubits, zero on entry and on exit.
    pub ancillas: Vec<QubitId>,
}

/// Host qubits for each role of a fragment.
#[derive(Debug, Clone, Copy)]
pub struct Binding<'a> {
    pub a: &'a [QubitId],
    pub b: &'a [QubitId],
    pub carry_in: QubitId,
    pub carry_out: Option<QubitId>,
    pub control: Option<QubitId>,
    pub ancillas: &'a [QubitId],
}

impl AdderFragment {
    pub fn width(&self) -> usize {
        self.a.len()
    }

    /// Qubits the fragment needs beyond its operands and carry-in: the
    /// carry-out (if any) plus internal ancillas.
    pub fn ancilla_footprint(&self) -> usize {
        self.ancillas.len() + usize::from(self.carry_out.is_some())
    }

    /// Builds the `append` mapping for this fragment from role bindings.
    pub fn mapping(&self, bind: &Binding<'_>) -> Result<Vec<QubitId>, AdderError> {
        fn check(role: &'static str, expected: usize, got: usize) -> Result<(), AdderError> {
            if expected == got {
                Ok(())
            } else {
                Err(AdderError::BindingWidth { role, expected, got })
            }
        }
        check("a", self.a.len(), bind.a.len())?;
        check("b", self.b.len(), bind.b.len())?;
        check("ancillas", self.ancillas.len(), bind.ancillas.len())?;

        let mut map: Vec<Option<QubitId>> = vec![None; self.circuit.qubit_count()];
        let mut put = |frag: QubitId, host: QubitId| -> Result<(), AdderError> {
            match map[frag.index()] {
                Some(prev) if prev != host => Err(AdderError::BadBinding(frag)),
                _ => {
                    map[frag.index()] = Some(host);
                    Ok(())
                }
            }
        };
        for (f, h) in self.a.qubits().iter().zip(bind.a) {
            put(*f, *h)?;
        }
        for (f, h) in self.b.qubits().iter().zip(bind.b) {
            put(*f, *h)?;
        }
        put(self.carry_in, bind.carry_in)?;
        if let Some(co) = self.carry_out {
            put(co, bind.carry_out.ok_or(AdderError::MissingBinding("carry_out"))?)?;
        }
        if let Some(ctrl) = self.control {
            put(ctrl, bind.control.ok_or(AdderError::MissingBinding("control"))?)?;
        }
        for (f, h) in self.ancillas.iter().zip(bind.ancillas) {
            put(*f, *h)?;
        }
        map.iter()
            .enumerate()
            .map(|(i, m)| m.ok_or(AdderError::BadBinding(QubitId(i))))
            .collect()
    }
}

/// Produces in-place adder fragments of a requested operand width.
pub trait AdderBuilder: Send + Sync {
    fn name(&self) -> &str;

    fn build(&self, width: usize) -> Result<AdderFragment, AdderError>;

    /// Matching analytic cost row, if there is one.
    fn cost_row(&self) -> Option<AdderRow> {
        None
    }
}

/// The adders with a gate-level construction in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateLevelAdder {
    Cuccaro,
    Vbe,
}

impl GateLevelAdder {
    pub const ALL: [GateLevelAdder; 2] = [GateLevelAdder::Cuccaro, GateLevelAdder::Vbe];
}

impl AdderBuilder for GateLevelAdder {
    fn name(&self) -> &str {
        match self {
            GateLevelAdder::Cuccaro => "cuccaro",
            GateLevelAdder::Vbe => "vbe",
        }
    }

    fn build(&self, width: usize) -> Result<AdderFragment, AdderError> {
        match self {
            GateLevelAdder::Cuccaro => cuccaro(width),
            GateLevelAdder::Vbe => vbe(width),
        }
    }

    fn cost_row(&self) -> Option<AdderRow> {
        Some(match self {
            GateLevelAdder::Cuccaro => AdderRow::Cuccaro,
            GateLevelAdder::Vbe => AdderRow::Vbe,
        })
    }
}

impl fmt::Display for GateLevelAdder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateLevelAdder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cuccaro" => Ok(GateLevelAdder::Cuccaro),
            "vbe" => Ok(GateLevelAdder::Vbe),
            other => Err(format!("unknown gate-level adder `{other}` (expected cuccaro or vbe)")),
        }
    }
}

fn push_all(c: &mut Circuit, gates: Vec<Gate>) -> Result<(), CircuitError> {
    gates.into_iter().try_for_each(|g| c.push(g))
}

fn maj(g: &mut Vec<Gate>, c: QubitId, b: QubitId, a: QubitId) {
    g.push(Gate::Cnot(a, b));
    g.push(Gate::Cnot(a, c));
    g.push(Gate::Toffoli(c, b, a));
}

fn uma(g: &mut Vec<Gate>, c: QubitId, b: QubitId, a: QubitId) {
    g.push(Gate::Toffoli(c, b, a));
    g.push(Gate::Cnot(a, c));
    g.push(Gate::Cnot(c, b));
}

/// Cuccaro MAJ/UMA ripple-carry adder: 2m-1 Toffolis, no ancillas beyond
/// carry-in and carry-out.
///
/// The top bit skips its MAJ/UMA pair and writes the carry-out directly as
/// `a ^ (a^c)(a^b)`.
pub fn cuccaro(m: usize) -> Result<AdderFragment, AdderError> {
    if m == 0 {
        return Err(AdderError::ZeroWidth);
    }
    let mut c = Circuit::new();
    let a = c.add_register("a", m)?;
    let b = c.add_register("b", m)?;
    let cin = c.add_register("cin", 1)?.bit(0);
    let cout = c.add_register("cout", 1)?.bit(0);
    // a[i-1] carries c_i once MAJ(i-1) has run
    let carry = |i: usize| if i == 0 { cin } else { a.bit(i - 1) };

    let mut g = Vec::new();
    for i in 0..m - 1 {
        maj(&mut g, carry(i), b.bit(i), a.bit(i));
    }
    let t = m - 1;
    let k = carry(t);
    g.extend([
        Gate::Cnot(a.bit(t), b.bit(t)),
        Gate::Cnot(a.bit(t), k),
        Gate::Toffoli(k, b.bit(t), cout),
        Gate::Cnot(a.bit(t), cout),
        Gate::Cnot(a.bit(t), k),
        Gate::Cnot(k, b.bit(t)),
    ]);
    for i in (0..m - 1).rev() {
        uma(&mut g, carry(i), b.bit(i), a.bit(i));
    }
    push_all(&mut c, g)?;

    Ok(AdderFragment {
        kind: FragmentKind::Adder,
        circuit: c,
        a,
        b,
        carry_in: cin,
        carry_out: Some(cout),
        control: None,
        ancillas: Vec::new(),
    })
}

/// VBE ripple-carry adder: carry chain into m-1 ancillas, sum, then carry
/// uncompute. 4m-2 Toffolis.
pub fn vbe(m: usize) -> Result<AdderFragment, AdderError> {
    if m == 0 {
        return Err(AdderError::ZeroWidth);
    }
    let mut c = Circuit::new();
    let a = c.add_register("a", m)?;
    let b = c.add_register("b", m)?;
    let cin = c.add_register("cin", 1)?.bit(0);
    let cout = c.add_register("cout", 1)?.bit(0);
    let anc = c.add_register("anc", m - 1)?;
    let carry = |i: usize| match i {
        0 => cin,
        i if i == m => cout,
        i => anc.bit(i - 1),
    };

    let mut g = Vec::new();
    for i in 0..m {
        g.push(Gate::Toffoli(a.bit(i), b.bit(i), carry(i + 1)));
        g.push(Gate::Cnot(a.bit(i), b.bit(i)));
        g.push(Gate::Toffoli(carry(i), b.bit(i), carry(i + 1)));
    }
    // top bit already holds a^b; only the incoming carry is missing
    let t = m - 1;
    g.push(Gate::Cnot(carry(t), b.bit(t)));
    for i in (0..m - 1).rev() {
        g.push(Gate::Toffoli(carry(i), b.bit(i), carry(i + 1)));
        g.push(Gate::Cnot(a.bit(i), b.bit(i)));
        g.push(Gate::Toffoli(a.bit(i), b.bit(i), carry(i + 1)));
        g.push(Gate::Cnot(a.bit(i), b.bit(i)));
        g.push(Gate::Cnot(carry(i), b.bit(i)));
    }
    push_all(&mut c, g)?;

    Ok(AdderFragment {
        kind: FragmentKind::Adder,
        circuit: c,
        a,
        b,
        carry_in: cin,
        carry_out: Some(cout),
        control: None,
        ancillas: anc.qubits().to_vec(),
    })
}

/// Same registers as `c`, no gates.
fn blank_like(c: &Circuit) -> Result<Circuit, CircuitError> {
    let mut out = Circuit::new();
    for r in c.registers() {
        out.add_register(r.name(), r.len())?;
    }
    Ok(out)
}

fn identity(n: usize) -> Vec<QubitId> {
    (0..n).map(QubitId).collect()
}

/// `b <- b - a` as `b + !a + 1`: NOTs bracket `a` and the carry-in, which
/// must enter at 0.
pub fn subtractor(adder: &dyn AdderBuilder, m: usize) -> Result<AdderFragment, AdderError> {
    let base = adder.build(m)?;
    let mut c = blank_like(&base.circuit)?;
    let bracket: Vec<Gate> = base
        .a
        .qubits()
        .iter()
        .chain(std::iter::once(&base.carry_in))
        .map(|&q| Gate::Not(q))
        .collect();
    push_all(&mut c, bracket.clone())?;
    c.append(&base.circuit, &identity(base.circuit.qubit_count()))?;
    push_all(&mut c, bracket.into_iter().rev().collect())?;
    Ok(AdderFragment {
        kind: FragmentKind::Subtractor,
        circuit: c,
        ..base
    })
}

/// Controlled adder-subtractor: the carry-in wire is also the control.
/// CNOTs from it complement `a`, so a set control gives `b + !a + 1`.
pub fn add_sub(adder: &dyn AdderBuilder, m: usize) -> Result<AdderFragment, AdderError> {
    let base = adder.build(m)?;
    let mut c = blank_like(&base.circuit)?;
    let fan: Vec<Gate> = base
        .a
        .qubits()
        .iter()
        .map(|&q| Gate::Cnot(base.carry_in, q))
        .collect();
    push_all(&mut c, fan.clone())?;
    c.append(&base.circuit, &identity(base.circuit.qubit_count()))?;
    push_all(&mut c, fan)?;
    Ok(AdderFragment {
        kind: FragmentKind::AddSub,
        circuit: c,
        control: Some(base.carry_in),
        ..base
    })
}

/// Controlled in-place adder `b <- b + ctrl*(a + cin)` mod 2^m, 3m-2 Toffolis.
///
/// Carries are computed with uncontrolled MAJ blocks; only the sum writes
/// `b ^= ctrl*(a ^ c)` are controlled, and they are interleaved with the
/// carry uncompute. There is no carry-out.
pub fn cond_add(m: usize) -> Result<AdderFragment, AdderError> {
    if m == 0 {
        return Err(AdderError::ZeroWidth);
    }
    let mut c = Circuit::new();
    let a = c.add_register("a", m)?;
    let b = c.add_register("b", m)?;
    let cin = c.add_register("cin", 1)?.bit(0);
    let ctrl = c.add_register("ctrl", 1)?.bit(0);
    let carry = |i: usize| if i == 0 { cin } else { a.bit(i - 1) };

    let mut g = Vec::new();
    for i in 0..m - 1 {
        maj(&mut g, carry(i), b.bit(i), a.bit(i));
    }
    let t = m - 1;
    let k = carry(t);
    g.extend([
        Gate::Cnot(a.bit(t), k),
        Gate::Toffoli(ctrl, k, b.bit(t)),
        Gate::Cnot(a.bit(t), k),
    ]);
    for i in (0..m - 1).rev() {
        let (k, bi, ai) = (carry(i), b.bit(i), a.bit(i));
        // k = c^a, bi = a^b, ai = carry out of bit i
        g.extend([
            Gate::Toffoli(k, bi, ai),
            Gate::Toffoli(ctrl, k, bi),
            Gate::Cnot(ai, k),
            Gate::Cnot(ai, bi),
        ]);
    }
    push_all(&mut c, g)?;

    Ok(AdderFragment {
        kind: FragmentKind::CondAdd,
        circuit: c,
        a,
        b,
        carry_in: cin,
        carry_out: None,
        control: Some(ctrl),
        ancillas: Vec::new(),
    })
}

/// First input on which a fragment disagrees with its arithmetic contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentMismatch {
    pub a: u64,
    pub b: u64,
    pub carry_in: bool,
    pub control: bool,
    pub detail: String,
}

impl fmt::Display for FragmentMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} cin={} ctrl={}: {}",
            self.a, self.b, self.carry_in as u8, self.control as u8, self.detail
        )
    }
}

/// Simulates `frag` on every input and checks it against its [`FragmentKind`]
/// contract, including restoration of `a`, carry-in, control and ancillas.
/// Intended for widths up to about 8.
pub fn check_fragment(frag: &AdderFragment) -> Result<(), FragmentMismatch> {
    let m = frag.width();
    let modulus = 1u64 << m;
    let mask = modulus - 1;
    // carry-in values to try: subtractor and add-sub drive it internally
    let cins: &[bool] = match frag.kind {
        FragmentKind::Adder | FragmentKind::CondAdd => &[false, true],
        FragmentKind::Subtractor | FragmentKind::AddSub => &[false],
    };
    let ctrls: &[bool] = match frag.kind {
        FragmentKind::AddSub | FragmentKind::CondAdd => &[false, true],
        _ => &[false],
    };

    for a in 0..modulus {
        for b in 0..modulus {
            for &cin in cins {
                for &ctrl in ctrls {
                    let fail = |detail: String| FragmentMismatch {
                        a,
                        b,
                        carry_in: cin,
                        control: ctrl,
                        detail,
                    };
                    let mut s = BasisState::zeros(frag.circuit.qubit_count());
                    s.encode(frag.a.qubits(), a).unwrap();
                    s.encode(frag.b.qubits(), b).unwrap();
                    s.set(frag.carry_in, cin);
                    if let Some(q) = frag.control {
                        s.set(q, ctrl);
                    }
                    run(&frag.circuit, &mut s).unwrap();

                    let add = a + b + u64::from(cin);
                    let (sum, carry) = match frag.kind {
                        FragmentKind::Adder => (add & mask, Some(add >> m == 1)),
                        FragmentKind::Subtractor => (b.wrapping_sub(a) & mask, Some(b >= a)),
                        FragmentKind::AddSub if ctrl => (b.wrapping_sub(a) & mask, Some(b >= a)),
                        FragmentKind::AddSub => ((a + b) & mask, Some((a + b) >> m == 1)),
                        FragmentKind::CondAdd if ctrl => (add & mask, None),
                        FragmentKind::CondAdd => (b, None),
                    };
                    let got = s.decode(frag.b.qubits());
                    if got != sum {
                        return Err(fail(format!("result {got}, expected {sum}")));
                    }
                    if s.decode(frag.a.qubits()) != a {
                        return Err(fail("operand a not restored".into()));
                    }
                    if let (Some(q), Some(expect)) = (frag.carry_out, carry) {
                        if s.get(q) != expect {
                            return Err(fail(format!("carry-out {}, expected {}", s.get(q), expect)));
                        }
                    }
                    let ctrl_is_cin = frag.control == Some(frag.carry_in);
                    if !ctrl_is_cin && s.get(frag.carry_in) != cin {
                        return Err(fail("carry-in not restored".into()));
                    }
                    if let Some(q) = frag.control {
                        if s.get(q) != ctrl {
                            return Err(fail("control not restored".into()));
                        }
                    }
                    if let Some(q) = frag.ancillas.iter().find(|&&q| s.get(q)) {
                        return Err(fail(format!("ancilla {q} left dirty")));
                    }
                }
            }
        }
    }
    Ok(())
}
