//! Adder-based restoring and non-restoring integer dividers.
//!
//! # Layout
//!
//! The dividend `q` (n wires) and the zero-initialised high half `r` (n
//! wires) form one array `P = q ++ r` of 2n wires. Iteration `i` (1-based)
//! works on the (n+1)-wide window `P[n-i ..= 2n-i]`. Sliding the window down
//! one wire per iteration is the left shift of `(R, Q)`: the next dividend
//! bit enters at the bottom and the previous sign bit falls off the top, so
//! no swaps are emitted and `R` starts out only n wires wide.
//!
//! The divisor lives in `d` (n+1 wires, top wire a constant-zero pad). Each
//! iteration's adder gets a fresh carry-out wire in `quot`. With the
//! remainder kept in `[-D, D)` the carry-out of `window ± D` is exactly "the
//! new partial remainder is non-negative", i.e. the quotient bit, which also
//! serves as the next iteration's control and carry-in. The stale sign bit
//! left above the next window equals its complement and is reset with a
//! CNOT and a NOT.
//!
//! Non-restoring: a plain subtractor for the first iteration, n-1
//! controlled adder-subtractors, then one conditional adder that fixes a
//! negative final remainder. Restoring: every iteration subtracts and then
//! conditionally adds the divisor back.
//!
//! Final state: `q` holds the remainder, `quot` the quotient, `d` the
//! divisor, every other wire is 0.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::adders::{add_sub, cond_add, subtractor, AdderBuilder, AdderError, AdderFragment, Binding};
use crate::circuit::{Circuit, CircuitError, Gate, QubitId, ResourceReport};
use crate::sim::{run, BasisState, SimError};

/// Exhaustive verification is refused above this width unless the caller
/// raises the limit.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DividerKind {
    NonRestoring,
    Restoring,
}

impl DividerKind {
    pub const ALL: [DividerKind; 2] = [DividerKind::NonRestoring, DividerKind::Restoring];

    pub fn label(self) -> &'static str {
        match self {
            DividerKind::NonRestoring => "Non-restoring",
            DividerKind::Restoring => "Restoring",
        }
    }
}

impl fmt::Display for DividerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DividerKind::NonRestoring => "nonrestoring",
            DividerKind::Restoring => "restoring",
        })
    }
}

impl FromStr for DividerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nonrestoring" | "non_restoring" | "non-restoring" => Ok(DividerKind::NonRestoring),
            "restoring" => Ok(DividerKind::Restoring),
            other => Err(format!("unknown divider kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DividerError {
    #[error("n must be ≥ 1")]
    ZeroWidth,
    #[error("n = {n} is wider than the supported 63 bits")]
    TooWide { n: usize },
    #[error("divisor must be non-zero")]
    DivisorZero,
    #[error("operand {value} does not fit in {n} bits")]
    OperandOutOfRange { value: u64, n: usize },
    #[error("n = {n} exceeds the exhaustive verification limit {limit}")]
    ExhaustiveLimit { n: usize, limit: usize },
    #[error("circuit is not a divider: {0}")]
    NotADivider(String),
    #[error(transparent)]
    Adder(#[from] AdderError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

#[derive(Clone, Copy)]
pub struct DividerParams<'a> {
    pub n: usize,
    pub adder: &'a dyn AdderBuilder,
    pub kind: DividerKind,
}

impl fmt::Debug for DividerParams<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DividerParams")
            .field("n", &self.n)
            .field("adder", &self.adder.name())
            .field("kind", &self.kind)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    Subtractor,
    AddSub,
    CondAdd,
}

/// One spliced sub-circuit and the gate range it occupies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleInstance {
    pub kind: ModuleKind,
    pub iteration: usize,
    pub gates: Range<usize>,
}

/// Where the operands and results of a divider circuit live.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividerPorts {
    pub n: usize,
    pub dividend: Vec<QubitId>,
    pub divisor: Vec<QubitId>,
    pub quotient: Vec<QubitId>,
    pub remainder: Vec<QubitId>,
}

impl DividerPorts {
    /// Recovers the ports from the register names a built divider carries
    /// (`q`, `r`, `d`, `quot`), e.g. after a round-trip through text.
    pub fn from_circuit(circuit: &Circuit) -> Result<Self, DividerError> {
        let reg = |name: &str| {
            circuit
                .register(name)
                .ok_or_else(|| DividerError::NotADivider(format!("missing register `{name}`")))
        };
        let q = reg("q")?;
        let n = q.len();
        let r = reg("r")?;
        let d = reg("d")?;
        let quot = reg("quot")?;
        if n == 0 || r.len() != n || d.len() != n + 1 || quot.len() != n {
            return Err(DividerError::NotADivider(format!(
                "register widths q={} r={} d={} quot={} do not fit one n",
                n,
                r.len(),
                d.len(),
                quot.len()
            )));
        }
        Ok(DividerPorts {
            n,
            dividend: q.qubits().to_vec(),
            divisor: d.qubits()[..n].to_vec(),
            quotient: quot.qubits().to_vec(),
            remainder: q.qubits().to_vec(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividerLayout {
    pub n: usize,
    pub kind: DividerKind,
    pub ports: DividerPorts,
    /// Constant-zero top wire of the divisor register.
    pub divisor_pad: QubitId,
    /// Window of iteration `i` at index `i - 1`, LSB first.
    pub iteration_windows: Vec<Vec<QubitId>>,
    /// Top wire of each iteration's window; all end at 0.
    pub sign_qubits: Vec<QubitId>,
    /// Carry-in driven high for the leading subtractor(s).
    pub subtract_carry: QubitId,
    /// Zero carry-in of the conditional adder. Shares the wire with
    /// `subtract_carry` in the restoring divider.
    pub restore_carry: QubitId,
    /// Internal work wires of the chosen adder.
    pub adder_ancillas: Vec<QubitId>,
    /// Carry-out plus internal ancillas of the adder at width n+1.
    pub adder_ancilla_footprint: usize,
    pub modules: Vec<ModuleInstance>,
}

impl DividerLayout {
    /// `4n + 2 + Anc_add` (non-restoring) or `4n + 1 + Anc_add` (restoring).
    pub fn expected_qubit_count(&self) -> usize {
        let base = match self.kind {
            DividerKind::NonRestoring => 4 * self.n + 2,
            DividerKind::Restoring => 4 * self.n + 1,
        };
        base + self.adder_ancilla_footprint
    }

    pub fn count_modules(&self, kind: ModuleKind) -> usize {
        self.modules.iter().filter(|m| m.kind == kind).count()
    }

    /// The full basis state the divider must end in for `(dividend, divisor)`.
    pub fn expected_final_state(&self, qubit_count: usize, dividend: u64, divisor: u64) -> BasisState {
        let mut s = BasisState::zeros(qubit_count);
        s.encode(&self.ports.remainder, dividend % divisor).unwrap();
        s.encode(&self.ports.quotient, dividend / divisor).unwrap();
        s.encode(&self.ports.divisor, divisor).unwrap();
        s
    }
}

fn splice(
    c: &mut Circuit,
    modules: &mut Vec<ModuleInstance>,
    kind: ModuleKind,
    iteration: usize,
    frag: &AdderFragment,
    bind: Binding<'_>,
) -> Result<(), DividerError> {
    let start = c.len();
    c.append(&frag.circuit, &frag.mapping(&bind)?)?;
    modules.push(ModuleInstance {
        kind,
        iteration,
        gates: start..c.len(),
    });
    Ok(())
}

/// Synthesises a divider for `params`.
pub fn build_divider(params: DividerParams<'_>) -> Result<(Circuit, DividerLayout), DividerError> {
    let DividerParams { n, adder, kind } = params;
    if n == 0 {
        return Err(DividerError::ZeroWidth);
    }
    if n > 63 {
        return Err(DividerError::TooWide { n });
    }
    let m = n + 1;
    let sub = subtractor(adder, m)?;
    let cond = cond_add(m)?;
    let addsub = match kind {
        DividerKind::NonRestoring if n > 1 => Some(add_sub(adder, m)?),
        _ => None,
    };
    let internal = sub.ancillas.len();

    let mut c = Circuit::new();
    let q = c.add_register("q", n)?;
    let r = c.add_register("r", n)?;
    let d = c.add_register("d", m)?;
    let quot = c.add_register("quot", n)?;
    let shared = usize::from(kind == DividerKind::NonRestoring);
    let anc = c.add_register("anc", 1 + shared + internal)?;

    let subtract_carry = anc.bit(0);
    let restore_carry = anc.bit(shared);
    let adder_ancillas = anc.qubits()[1 + shared..].to_vec();

    let p: Vec<QubitId> = q.qubits().iter().chain(r.qubits()).copied().collect();
    let window = |i: usize| p[n - i..=2 * n - i].to_vec();
    // quotient bit produced by iteration i
    let qbit = |i: usize| quot.bit(n - i);

    let mut modules = Vec::new();
    let mut windows = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);

    for i in 1..=n {
        let w = window(i);
        let (frag, module, carry_in) = match kind {
            DividerKind::NonRestoring if i > 1 => (
                addsub.as_ref().expect("built for n > 1"),
                ModuleKind::AddSub,
                qbit(i - 1),
            ),
            _ => (&sub, ModuleKind::Subtractor, subtract_carry),
        };
        splice(
            &mut c,
            &mut modules,
            module,
            i,
            frag,
            Binding {
                a: d.qubits(),
                b: &w,
                carry_in,
                carry_out: Some(qbit(i)),
                control: frag.control.map(|_| carry_in),
                ancillas: &adder_ancillas,
            },
        )?;

        let sign = w[n];
        match kind {
            DividerKind::NonRestoring if i < n => {
                // sign == !quotient bit; clear it before it leaves the window
                c.push(Gate::Cnot(qbit(i), sign))?;
                c.push(Gate::Not(sign))?;
            }
            DividerKind::NonRestoring => {}
            DividerKind::Restoring => {
                c.push(Gate::Not(qbit(i)))?;
                splice(
                    &mut c,
                    &mut modules,
                    ModuleKind::CondAdd,
                    i,
                    &cond,
                    Binding {
                        a: d.qubits(),
                        b: &w,
                        carry_in: restore_carry,
                        carry_out: None,
                        control: Some(qbit(i)),
                        ancillas: &[],
                    },
                )?;
                c.push(Gate::Not(qbit(i)))?;
            }
        }
        windows.push(w);
        signs.push(sign);
    }

    if kind == DividerKind::NonRestoring {
        // add D back when the final remainder is negative (quotient bit 0)
        let last = qbit(n);
        c.push(Gate::Not(last))?;
        splice(
            &mut c,
            &mut modules,
            ModuleKind::CondAdd,
            n + 1,
            &cond,
            Binding {
                a: d.qubits(),
                b: &windows[n - 1],
                carry_in: restore_carry,
                carry_out: None,
                control: Some(last),
                ancillas: &[],
            },
        )?;
        c.push(Gate::Not(last))?;
    }

    let layout = DividerLayout {
        n,
        kind,
        ports: DividerPorts {
            n,
            dividend: q.qubits().to_vec(),
            divisor: d.qubits()[..n].to_vec(),
            quotient: quot.qubits().to_vec(),
            remainder: q.qubits().to_vec(),
        },
        divisor_pad: d.bit(n),
        iteration_windows: windows,
        sign_qubits: signs,
        subtract_carry,
        restore_carry,
        adder_ancillas,
        adder_ancilla_footprint: sub.ancilla_footprint(),
        modules,
    };
    Ok((c, layout))
}

fn check_operands(n: usize, dividend: u64, divisor: u64) -> Result<(), DividerError> {
    if divisor == 0 {
        return Err(DividerError::DivisorZero);
    }
    for v in [dividend, divisor] {
        if v >> n != 0 {
            return Err(DividerError::OperandOutOfRange { value: v, n });
        }
    }
    Ok(())
}

fn simulate(
    circuit: &Circuit,
    ports: &DividerPorts,
    dividend: u64,
    divisor: u64,
) -> Result<BasisState, DividerError> {
    check_operands(ports.n, dividend, divisor)?;
    let mut s = BasisState::zeros(circuit.qubit_count());
    s.encode(&ports.dividend, dividend)?;
    s.encode(&ports.divisor, divisor)?;
    run(circuit, &mut s)?;
    Ok(s)
}

/// Runs a divider on one input pair and reads back `(quotient, remainder)`.
pub fn run_division(
    circuit: &Circuit,
    ports: &DividerPorts,
    dividend: u64,
    divisor: u64,
) -> Result<(u64, u64), DividerError> {
    let s = simulate(circuit, ports, dividend, divisor)?;
    Ok((s.decode(&ports.quotient), s.decode(&ports.remainder)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub dividend: u64,
    pub divisor: u64,
    pub expected: (u64, u64),
    pub got: (u64, u64),
    /// Wires whose final value differs from the expected state.
    pub wrong_wires: Vec<QubitId>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} / {}: expected q={} r={}, got q={} r={}; wrong wires {:?}",
            self.dividend,
            self.divisor,
            self.expected.0,
            self.expected.1,
            self.got.0,
            self.got.1,
            self.wrong_wires.iter().map(|q| q.index()).collect::<Vec<_>>()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub kind: DividerKind,
    pub cases: usize,
    pub passed: usize,
    pub first_failure: Option<Counterexample>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases
    }
}

/// Checks the full final state (quotient, remainder, restored divisor, clean
/// ancillas and sign wires) for every listed input pair.
pub fn verify_cases(
    circuit: &Circuit,
    layout: &DividerLayout,
    cases: impl IntoIterator<Item = (u64, u64)>,
) -> Result<VerificationReport, DividerError> {
    let mut report = VerificationReport {
        n: layout.n,
        kind: layout.kind,
        cases: 0,
        passed: 0,
        first_failure: None,
    };
    for (a, b) in cases {
        report.cases += 1;
        let got = simulate(circuit, &layout.ports, a, b)?;
        let want = layout.expected_final_state(circuit.qubit_count(), a, b);
        if got == want {
            report.passed += 1;
        } else if report.first_failure.is_none() {
            let wrong_wires = (0..circuit.qubit_count())
                .map(QubitId)
                .filter(|&w| got.get(w) != want.get(w))
                .collect();
            report.first_failure = Some(Counterexample {
                dividend: a,
                divisor: b,
                expected: (a / b, a % b),
                got: (got.decode(&layout.ports.quotient), got.decode(&layout.ports.remainder)),
                wrong_wires,
            });
        }
    }
    Ok(report)
}

/// Every `(dividend, divisor)` with `divisor >= 1`, dividend-major.
pub fn all_cases(n: usize) -> impl Iterator<Item = (u64, u64)> {
    let top = 1u64 << n;
    (0..top).flat_map(move |a| (1..top).map(move |b| (a, b)))
}

/// Builds the divider and checks it on every input. Refuses `n > limit`.
pub fn verify_exhaustive(params: DividerParams<'_>, limit: usize) -> Result<VerificationReport, DividerError> {
    if params.n > limit {
        return Err(DividerError::ExhaustiveLimit { n: params.n, limit });
    }
    let (c, layout) = build_divider(params)?;
    verify_cases(&c, &layout, all_cases(params.n))
}

/// Measured divider cost next to the closed forms, instantiated with the
/// measured cost of the chosen adder at width n+1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub n: usize,
    pub kind: DividerKind,
    pub adder: String,
    pub adder_width: usize,
    pub td_add: usize,
    pub tc_add: usize,
    pub anc_add: usize,
    /// Toffolis in one conditional adder at width n+1.
    pub condadd_tc: usize,
    /// Per-restoration Toffoli budget, 3n+1.
    pub condadd_target: usize,
    /// `condadd_tc - condadd_target`.
    pub condadd_offset: i64,
    /// Toffolis of the same construction at width n, for the reading where
    /// the restoration step acts on n bits.
    pub condadd_tc_width_n: usize,
    pub measured: ResourceReport,
    pub td_formula: usize,
    pub tc_formula: usize,
    pub qc_formula: usize,
    /// `n·TC_add` plus the measured conditional adders.
    pub tc_composed: usize,
    pub tc_matches: bool,
    pub td_within: bool,
    pub qc_matches: bool,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.tc_matches && self.td_within && self.qc_matches
    }
}

pub fn crosscheck_counts(params: DividerParams<'_>) -> Result<CrossCheck, DividerError> {
    let n = params.n;
    let (c, layout) = build_divider(params)?;
    let adder = params.adder.build(n + 1)?;
    let add = adder.circuit.measure();
    let condadd_tc = cond_add(n + 1)?.circuit.toffoli_count();
    let condadd_tc_width_n = cond_add(n)?.circuit.toffoli_count();
    let measured = c.measure();

    let (extra, restorations) = match params.kind {
        DividerKind::NonRestoring => (3 * n + 1, 1),
        DividerKind::Restoring => (3 * n * n + n, n),
    };
    let td_formula = n * add.toffoli_depth + extra;
    let tc_formula = n * add.toffoli_count + extra;
    let qc_formula = layout.expected_qubit_count();
    let tc_composed = n * add.toffoli_count + restorations * condadd_tc;
    let condadd_target = 3 * n + 1;

    Ok(CrossCheck {
        n,
        kind: params.kind,
        adder: params.adder.name().to_string(),
        adder_width: n + 1,
        td_add: add.toffoli_depth,
        tc_add: add.toffoli_count,
        anc_add: adder.ancilla_footprint(),
        condadd_tc,
        condadd_target,
        condadd_offset: condadd_tc as i64 - condadd_target as i64,
        condadd_tc_width_n,
        measured,
        td_formula,
        tc_formula,
        qc_formula,
        tc_composed,
        tc_matches: measured.toffoli_count == tc_composed,
        td_within: measured.toffoli_depth <= td_formula,
        qc_matches: measured.qubit_count == qc_formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adders::GateLevelAdder::{self, Cuccaro, Vbe};

    fn params(n: usize, adder: &GateLevelAdder, kind: DividerKind) -> DividerParams<'_> {
        DividerParams { n, adder, kind }
    }

    #[test]
    fn three_bit_structure() {
        let (_, layout) = build_divider(params(3, &Cuccaro, DividerKind::NonRestoring)).unwrap();
        assert_eq!(layout.count_modules(ModuleKind::Subtractor), 1);
        assert_eq!(layout.count_modules(ModuleKind::AddSub), 2);
        assert_eq!(layout.count_modules(ModuleKind::CondAdd), 1);
        let kinds: Vec<_> = layout.modules.iter().map(|m| m.kind).collect();
        assert_eq!(
            kinds,
            [ModuleKind::Subtractor, ModuleKind::AddSub, ModuleKind::AddSub, ModuleKind::CondAdd]
        );
    }

    #[test]
    fn restoring_structure() {
        for n in 1..=5 {
            let (_, layout) = build_divider(params(n, &Vbe, DividerKind::Restoring)).unwrap();
            assert_eq!(layout.count_modules(ModuleKind::Subtractor), n);
            assert_eq!(layout.count_modules(ModuleKind::CondAdd), n);
            assert_eq!(layout.count_modules(ModuleKind::AddSub), 0);
        }
    }

    #[test]
    fn small_examples() {
        let (c, l) = build_divider(params(3, &Cuccaro, DividerKind::NonRestoring)).unwrap();
        assert_eq!(run_division(&c, &l.ports, 7, 2).unwrap(), (3, 1));
        assert_eq!(run_division(&c, &l.ports, 5, 5).unwrap(), (1, 0));
        let (c, l) = build_divider(params(4, &Vbe, DividerKind::NonRestoring)).unwrap();
        assert_eq!(run_division(&c, &l.ports, 13, 3).unwrap(), (4, 1));
        assert_eq!(run_division(&c, &l.ports, 0, 7).unwrap(), (0, 0));
    }

    #[test]
    fn operand_errors() {
        let (c, l) = build_divider(params(4, &Cuccaro, DividerKind::NonRestoring)).unwrap();
        assert_eq!(
            run_division(&c, &l.ports, 9, 16),
            Err(DividerError::OperandOutOfRange { value: 16, n: 4 })
        );
        assert_eq!(run_division(&c, &l.ports, 9, 0), Err(DividerError::DivisorZero));
        assert_eq!(
            build_divider(params(0, &Cuccaro, DividerKind::Restoring)).unwrap_err(),
            DividerError::ZeroWidth
        );
    }

    #[test]
    fn exhaustive_small() {
        let r = verify_exhaustive(params(2, &Cuccaro, DividerKind::NonRestoring), 6).unwrap();
        assert_eq!((r.cases, r.passed), (12, 12));
        let r = verify_exhaustive(params(3, &Vbe, DividerKind::Restoring), 6).unwrap();
        assert_eq!((r.cases, r.passed), (56, 56));
        assert!(matches!(
            verify_exhaustive(params(7, &Vbe, DividerKind::Restoring), 6),
            Err(DividerError::ExhaustiveLimit { n: 7, limit: 6 })
        ));
    }

    #[test]
    fn corrupted_gate_is_reported() {
        let (c, layout) = build_divider(params(2, &Cuccaro, DividerKind::NonRestoring)).unwrap();
        // replace the first Toffoli with a NOT on its target
        let pos = c.gates().iter().position(|g| g.is_toffoli()).unwrap();
        let mut bad = Circuit::new();
        for reg in c.registers() {
            bad.add_register(reg.name(), reg.len()).unwrap();
        }
        for (i, g) in c.gates().iter().enumerate() {
            bad.push(if i == pos { Gate::Not(g.target()) } else { *g }).unwrap();
        }
        let r = verify_cases(&bad, &layout, all_cases(2)).unwrap();
        assert!(!r.all_passed());
        let first = r.first_failure.unwrap();
        // (0, 1) is the first case in dividend-major order
        assert_eq!((first.dividend, first.divisor), (0, 1));
        assert!(!first.wrong_wires.is_empty());
    }

    #[test]
    fn qubit_budget() {
        for adder in GateLevelAdder::ALL {
            for kind in DividerKind::ALL {
                for n in 1..=8 {
                    let (c, l) = build_divider(params(n, &adder, kind)).unwrap();
                    assert_eq!(c.qubit_count(), l.expected_qubit_count(), "{adder} {kind} n={n}");
                }
            }
        }
    }

    #[test]
    fn crosscheck_cuccaro_4() {
        let x = crosscheck_counts(params(4, &Cuccaro, DividerKind::NonRestoring)).unwrap();
        assert_eq!(x.tc_formula, 49);
        assert_eq!(x.measured.toffoli_count, 49);
        assert_eq!(x.condadd_offset, 0);
        assert_eq!(x.measured.qubit_count, 4 * 4 + 2 + x.anc_add);
        assert!(x.passed(), "{x:?}");
    }

    #[test]
    fn ports_from_circuit() {
        let (c, l) = build_divider(params(3, &Vbe, DividerKind::Restoring)).unwrap();
        assert_eq!(DividerPorts::from_circuit(&c).unwrap(), l.ports);
        assert!(DividerPorts::from_circuit(&Circuit::with_qubits(4)).is_err());
    }

    #[test]
    fn kind_parse() {
        assert_eq!("nonrestoring".parse::<DividerKind>().unwrap(), DividerKind::NonRestoring);
        assert_eq!("restoring".parse::<DividerKind>().unwrap(), DividerKind::Restoring);
        assert!("fast".parse::<DividerKind>().is_err());
    }
}
