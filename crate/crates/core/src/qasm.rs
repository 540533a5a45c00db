//! OpenQASM 3 subset: `qubit[N] name;` declarations and `x` / `cx` / `ccx`
//! gate statements over register elements.
//!
//! Export is deterministic. Import accepts `//` line comments and blank
//! lines, and rebuilds registers in declaration order, so
//! `parse(&to_qasm(c)) == c` for every circuit.

use std::fmt::Write as _;

use thiserror::Error;

use crate::circuit::{is_identifier, Circuit, CircuitError, Gate, QubitId};

const HEADER: &str = "OPENQASM 3.0;";
const INCLUDE: &str = "include \"stdgates.inc\";";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing declarations: document is empty")]
    Empty,
    #[error("expected `{HEADER}` header")]
    MissingHeader,
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("undeclared register `{0}`")]
    UndeclaredRegister(String),
    #[error("index {index} out of range for register `{register}`")]
    IndexOutOfRange { register: String, index: usize },
    #[error("gate `{gate}` takes {expected} operands, found {found}")]
    Arity {
        gate: String,
        expected: usize,
        found: usize,
    },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Renders a circuit as OpenQASM text.
pub fn to_qasm(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(INCLUDE);
    out.push('\n');

    // owner[q] = (register name, bit index)
    let mut owner = vec![("", 0usize); circuit.qubit_count()];
    for reg in circuit.registers() {
        let _ = writeln!(out, "qubit[{}] {};", reg.len(), reg.name());
        for (i, q) in reg.qubits().iter().enumerate() {
            owner[q.index()] = (reg.name(), i);
        }
    }
    let name = |q: QubitId| {
        let (r, i) = owner[q.index()];
        format!("{r}[{i}]")
    };
    for g in circuit.gates() {
        let _ = match *g {
            Gate::Not(t) => writeln!(out, "x {};", name(t)),
            Gate::Cnot(c, t) => writeln!(out, "cx {}, {};", name(c), name(t)),
            Gate::Toffoli(a, b, t) => writeln!(out, "ccx {}, {}, {};", name(a), name(b), name(t)),
        };
    }
    out
}

fn syntax(msg: impl Into<String>) -> ParseErrorKind {
    ParseErrorKind::Syntax(msg.into())
}

/// `name[index]`
fn parse_operand(circuit: &Circuit, s: &str) -> Result<QubitId, ParseErrorKind> {
    let s = s.trim();
    let open = s.find('[').ok_or_else(|| syntax(format!("expected `reg[i]`, found `{s}`")))?;
    let inner = s[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| syntax(format!("unclosed index in `{s}`")))?;
    let reg_name = s[..open].trim();
    let index: usize = inner
        .trim()
        .parse()
        .map_err(|_| syntax(format!("bad index `{inner}`")))?;
    let reg = circuit
        .register(reg_name)
        .ok_or_else(|| ParseErrorKind::UndeclaredRegister(reg_name.to_string()))?;
    reg.qubits()
        .get(index)
        .copied()
        .ok_or_else(|| ParseErrorKind::IndexOutOfRange {
            register: reg_name.to_string(),
            index,
        })
}

fn parse_declaration(circuit: &mut Circuit, rest: &str) -> Result<(), ParseErrorKind> {
    // rest = "[N] name"
    let rest = rest
        .strip_prefix('[')
        .ok_or_else(|| syntax("expected `qubit[N] name;`"))?;
    let close = rest.find(']').ok_or_else(|| syntax("unclosed `[` in declaration"))?;
    let width: usize = rest[..close]
        .trim()
        .parse()
        .map_err(|_| syntax(format!("bad register width `{}`", &rest[..close])))?;
    let name = rest[close + 1..].trim();
    if !is_identifier(name) {
        return Err(syntax(format!("bad register name `{name}`")));
    }
    circuit.add_register(name, width)?;
    Ok(())
}

fn parse_gate(circuit: &Circuit, stmt: &str) -> Result<Gate, ParseErrorKind> {
    let (name, args) = match stmt.find(char::is_whitespace) {
        Some(i) => (&stmt[..i], stmt[i..].trim()),
        None => (stmt, ""),
    };
    let expected = match name {
        "x" => 1,
        "cx" => 2,
        "ccx" => 3,
        other => return Err(ParseErrorKind::UnknownGate(other.to_string())),
    };
    let ops = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| parse_operand(circuit, a))
            .collect::<Result<Vec<_>, _>>()?
    };
    if ops.len() != expected {
        return Err(ParseErrorKind::Arity {
            gate: name.to_string(),
            expected,
            found: ops.len(),
        });
    }
    Ok(match *ops.as_slice() {
        [t] => Gate::Not(t),
        [c, t] => Gate::Cnot(c, t),
        [a, b, t] => Gate::Toffoli(a, b, t),
        _ => unreachable!("arity checked above"),
    })
}

/// Parses text produced by [`to_qasm`] (or any text in the same subset).
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit = Circuit::new();
    let mut seen_header = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |kind| ParseError { line, kind };
        let content = raw.split("//").next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let stmt = content
            .strip_suffix(';')
            .ok_or_else(|| err(syntax("missing `;`")))?
            .trim();

        if !seen_header {
            let words: Vec<&str> = stmt.split_whitespace().collect();
            if words != ["OPENQASM", "3.0"] && words != ["OPENQASM", "3"] {
                return Err(err(ParseErrorKind::MissingHeader));
            }
            seen_header = true;
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("include") {
            if rest.trim() != "\"stdgates.inc\"" {
                return Err(err(syntax(format!("unsupported include {}", rest.trim()))));
            }
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("qubit") {
            parse_declaration(&mut circuit, rest.trim_start()).map_err(err)?;
            continue;
        }
        let gate = parse_gate(&circuit, stmt).map_err(err)?;
        circuit
            .push(gate)
            .map_err(|e| err(ParseErrorKind::Circuit(e)))?;
    }

    if !seen_header {
        return Err(ParseError {
            line: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    Ok(circuit)
}
