use proptest::prelude::*;

use qdiv::adders::{check_fragment, cuccaro, AdderError, AdderFragment, FragmentKind};
use qdiv::circuit::{Circuit, Gate, QubitId};
use qdiv::divider::{
    build_divider, run_division, verify_cases, verify_exhaustive, DividerError, DividerPorts,
};
use qdiv::sim::{apply, BasisState};
use qdiv::{AdderBuilder, DividerKind, DividerParams, GateLevelAdder};

fn params(n: usize, adder: &dyn AdderBuilder, kind: DividerKind) -> DividerParams<'_> {
    DividerParams { n, adder, kind }
}

/// Cuccaro with its wires shuffled into a different register order and one
/// extra work qubit that is borrowed and returned.
struct Shuffled;

impl AdderBuilder for Shuffled {
    fn name(&self) -> &str {
        "shuffled"
    }

    fn build(&self, width: usize) -> Result<AdderFragment, AdderError> {
        let inner = cuccaro(width)?;
        let mut c = Circuit::new();
        let scratch = c.add_register("scratch", 1)?;
        let cout = c.add_register("cout", 1)?;
        let b = c.add_register("b", width)?;
        let cin = c.add_register("cin", 1)?;
        let a = c.add_register("a", width)?;

        let mut mapping = Vec::new();
        mapping.extend_from_slice(a.qubits());
        mapping.extend_from_slice(b.qubits());
        mapping.push(cin.bit(0));
        mapping.push(cout.bit(0));
        assert_eq!(mapping.len(), inner.circuit.qubit_count());

        c.push(Gate::Cnot(a.bit(0), scratch.bit(0)))?;
        c.append(&inner.circuit, &mapping)?;
        c.push(Gate::Toffoli(a.bit(0), cin.bit(0), scratch.bit(0)))?;
        c.push(Gate::Toffoli(a.bit(0), cin.bit(0), scratch.bit(0)))?;
        c.push(Gate::Cnot(a.bit(0), scratch.bit(0)))?;
        Ok(AdderFragment {
            kind: FragmentKind::Adder,
            circuit: c,
            a,
            b,
            carry_in: cin.bit(0),
            carry_out: Some(cout.bit(0)),
            control: None,
            ancillas: vec![scratch.bit(0)],
        })
    }
}

#[test]
fn custom_builder_plugs_in() {
    for w in 1..=5 {
        let f = Shuffled.build(w).unwrap();
        check_fragment(&f).unwrap();
        assert_eq!(f.ancilla_footprint(), 2);
    }
    for kind in DividerKind::ALL {
        for n in 1..=4 {
            let report = verify_exhaustive(params(n, &Shuffled, kind), 6).unwrap();
            assert!(report.all_passed(), "{kind} n={n}: {:?}", report.first_failure);
            let (c, _) = build_divider(params(n, &Shuffled, kind)).unwrap();
            let base = if kind == DividerKind::NonRestoring { 4 * n + 2 } else { 4 * n + 1 };
            assert_eq!(c.qubit_count(), base + 2);
        }
    }
}

#[test]
fn exhaustive_at_default_limit() {
    let report = verify_exhaustive(params(6, &GateLevelAdder::Cuccaro, DividerKind::NonRestoring), 6).unwrap();
    assert_eq!((report.passed, report.cases), (64 * 63, 64 * 63));
    assert!(matches!(
        verify_exhaustive(params(7, &GateLevelAdder::Cuccaro, DividerKind::NonRestoring), 6),
        Err(DividerError::ExhaustiveLimit { n: 7, limit: 6 })
    ));
}

#[test]
fn wider_dividers_on_edge_cases() {
    for n in 6..=12usize {
        let top = (1u64 << n) - 1;
        let cases = [
            (0, 1),
            (top, 1),
            (top, top),
            (top - 1, top),
            (1, top),
            (top, 2),
            (top / 2, 3),
            (1 << (n - 1), (1 << (n - 1)) + 1),
        ];
        for adder in GateLevelAdder::ALL {
            for kind in DividerKind::ALL {
                let (c, layout) = build_divider(params(n, &adder, kind)).unwrap();
                let r = verify_cases(&c, &layout, cases).unwrap();
                assert!(r.all_passed(), "{adder} {kind} n={n}: {}", r.first_failure.unwrap());
            }
        }
    }
}

#[test]
fn operands_must_fit() {
    let (c, layout) = build_divider(params(3, &GateLevelAdder::Vbe, DividerKind::Restoring)).unwrap();
    assert!(matches!(
        run_division(&c, &layout.ports, 8, 1),
        Err(DividerError::OperandOutOfRange { value: 8, n: 3 })
    ));
    assert!(matches!(run_division(&c, &layout.ports, 5, 0), Err(DividerError::DivisorZero)));
}

#[test]
fn ports_survive_text_round_trip() {
    let (c, layout) = build_divider(params(4, &GateLevelAdder::Vbe, DividerKind::NonRestoring)).unwrap();
    let back = qdiv::qasm::parse(&qdiv::qasm::to_qasm(&c)).unwrap();
    let ports = DividerPorts::from_circuit(&back).unwrap();
    assert_eq!(ports, layout.ports);
    assert_eq!(run_division(&back, &ports, 13, 4).unwrap(), (3, 1));
}

/// Exhaustive permutation check for a circuit on at most 12 qubits.
fn is_bijection(c: &Circuit) -> bool {
    let n = c.qubit_count();
    let all: Vec<QubitId> = (0..n).map(QubitId).collect();
    let mut seen = vec![false; 1 << n];
    for x in 0..1u64 << n {
        let mut s = BasisState::zeros(n);
        s.encode(&all, x).unwrap();
        let y = apply(c, &s).unwrap().decode(&all) as usize;
        if std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    true
}

#[test]
fn small_dividers_are_permutations() {
    for adder in GateLevelAdder::ALL {
        for kind in DividerKind::ALL {
            let (c, _) = build_divider(params(1, &adder, kind)).unwrap();
            if c.qubit_count() <= 12 {
                assert!(is_bijection(&c), "{adder} {kind}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_circuits_are_permutations(
        n in 3usize..=8,
        raw in proptest::collection::vec((0u8..3, 0usize..64, 0usize..64, 0usize..64), 0..40),
    ) {
        let mut c = Circuit::with_qubits(n);
        for (k, a, b, t) in raw {
            let g = match k {
                0 => Gate::not(t % n),
                1 => Gate::cnot(a % n, t % n),
                _ => Gate::toffoli(a % n, b % n, t % n),
            };
            let _ = c.push(g);
        }
        prop_assert!(is_bijection(&c));
    }

    #[test]
    fn kinds_and_adders_agree(n in 1usize..=7, a in any::<u64>(), b in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let (a, b) = (a & mask, (b & mask).max(1));
        let mut answers = Vec::new();
        for adder in GateLevelAdder::ALL {
            for kind in DividerKind::ALL {
                let (c, layout) = build_divider(params(n, &adder, kind)).unwrap();
                let r = verify_cases(&c, &layout, [(a, b)]).unwrap();
                prop_assert!(r.all_passed(), "{} {} {:?}", adder, kind, r.first_failure);
                answers.push(run_division(&c, &layout.ports, a, b).unwrap());
            }
        }
        prop_assert!(answers.iter().all(|&x| x == (a / b, a % b)));
    }

    #[test]
    fn restoring_uses_one_fewer_qubit(n in 1usize..=16) {
        for adder in GateLevelAdder::ALL {
            let (nr, _) = build_divider(params(n, &adder, DividerKind::NonRestoring)).unwrap();
            let (re, _) = build_divider(params(n, &adder, DividerKind::Restoring)).unwrap();
            prop_assert_eq!(nr.qubit_count(), re.qubit_count() + 1);
            prop_assert!(nr.toffoli_count() < re.toffoli_count() || n == 1);
        }
    }
}
