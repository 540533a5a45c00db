//! Acceptance criteria. Runs as a plain binary (`harness = false`) so every
//! criterion prints exactly one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdiv::adders::{add_sub, cond_add, subtractor, AdderBuilder, GateLevelAdder};
use qdiv::circuit::{Circuit, Gate, QubitId};
use qdiv::cost::{
    self, compose, comparison_table, evaluate_row, omega, rounding_audit, AdderCosts, AdderRow, Costs,
    Percent, Rounding, PUBLISHED_ENTRIES,
};
use qdiv::divider::{
    all_cases, build_divider, crosscheck_counts, verify_cases, DividerKind, DividerParams,
};
use qdiv::qasm::{parse, to_qasm};
use qdiv::sim::{apply, BasisState};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn params(n: usize, adder: &GateLevelAdder, kind: DividerKind) -> DividerParams<'_> {
    DividerParams { n, adder, kind }
}

fn c1_exhaustive_division() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for kind in DividerKind::ALL {
        for adder in GateLevelAdder::ALL {
            for n in 1..=5 {
                let (c, layout) = build_divider(params(n, &adder, kind)).map_err(|e| e.to_string())?;
                let r = verify_cases(&c, &layout, all_cases(n)).map_err(|e| e.to_string())?;
                ensure!(
                    r.all_passed() && r.cases == (1 << n) * ((1 << n) - 1),
                    "{kind} {adder} n={n}: {}/{} ({})",
                    r.passed,
                    r.cases,
                    r.first_failure.map(|f| f.to_string()).unwrap_or_default()
                );
                total += r.cases;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{total} cases exact in {elapsed:.2?}"))
}

fn c2_qubit_budget() -> Outcome {
    for kind in DividerKind::ALL {
        for adder in GateLevelAdder::ALL {
            for n in 1..=8 {
                let (c, layout) = build_divider(params(n, &adder, kind)).map_err(|e| e.to_string())?;
                let anc = adder.build(n + 1).map_err(|e| e.to_string())?.ancilla_footprint();
                let base = match kind {
                    DividerKind::NonRestoring => 4 * n + 2,
                    DividerKind::Restoring => 4 * n + 1,
                };
                ensure!(
                    c.qubit_count() == base + anc && layout.expected_qubit_count() == base + anc,
                    "{kind} {adder} n={n}: {} qubits, expected {}",
                    c.qubit_count(),
                    base + anc
                );
            }
        }
    }
    Ok("QC = 4n+2+Anc_add / 4n+1+Anc_add for n=1..8 (Anc_add: cuccaro 1, vbe n+1)".into())
}

fn c3_toffoli_composition() -> Outcome {
    let mut offsets = Vec::new();
    for adder in GateLevelAdder::ALL {
        for n in 1..=12 {
            let x = crosscheck_counts(params(n, &adder, DividerKind::NonRestoring)).map_err(|e| e.to_string())?;
            let m = n + 1;
            let tc_add = match adder {
                GateLevelAdder::Cuccaro => 2 * m - 1,
                GateLevelAdder::Vbe => 4 * m - 2,
            };
            ensure!(x.tc_add == tc_add, "{adder} TC_add at {m} = {}, expected {tc_add}", x.tc_add);
            ensure!(
                x.measured.toffoli_count == n * x.tc_add + x.condadd_tc,
                "{adder} n={n}: TC {} != {}·{} + {}",
                x.measured.toffoli_count,
                n,
                x.tc_add,
                x.condadd_tc
            );
            ensure!(x.tc_matches, "{adder} n={n}: tc mismatch");
            ensure!(
                x.measured.toffoli_depth <= x.td_formula,
                "{adder} n={n}: TD {} > {}",
                x.measured.toffoli_depth,
                x.td_formula
            );
            ensure!(x.qc_matches, "{adder} n={n}: qubit count mismatch");
            offsets.push(x.condadd_offset);
        }
    }
    let offset = offsets[0];
    ensure!(offsets.iter().all(|&o| o == offset), "cond-add offset varies: {offsets:?}");
    ensure!(offset.abs() <= 3, "cond-add offset {offset} is not a small constant");
    Ok(format!(
        "TC = n·TC_add + TC_condadd exact, TD <= n·TD_add+3n+1, cond-add offset vs 3n+1 = {offset}"
    ))
}

fn c4_published_table() -> Outcome {
    let start = Instant::now();
    let rows = comparison_table(32, &PUBLISHED_ENTRIES, None, Rounding::CeilRealLog).map_err(|e| e.to_string())?;
    let want: [(&str, Costs, [&str; 3]); 4] = [
        ("Restoring+Ling", Costs::new(3809, 15224, 415), ["71.80", "83.70", "98.27"]),
        ("Restoring+Takahashi C", Costs::new(6010, 10496, 151), ["55.50", "88.76", "99.37"]),
        ("Non-restoring+Ling", Costs::new(802, 12217, 416), ["94.06", "86.92", "98.27"]),
        ("Non-restoring+Takahashi C", Costs::new(3003, 7489, 152), ["77.77", "91.98", "99.37"]),
    ];
    ensure!(rows.len() == 6, "expected 2 baselines + 4 rows, got {}", rows.len());
    ensure!(rows[0].costs == cost::GOLDSCHMIDT.costs && rows[1].costs == cost::NEWTON_RAPHSON.costs, "baselines");
    for (row, (label, costs, pct)) in rows[2..].iter().zip(want) {
        ensure!(row.divider == label, "label {} != {label}", row.divider);
        ensure!(row.costs == costs, "{label}: {:?} != {costs:?}", row.costs);
        let imp = row.improvement.ok_or(format!("{label}: no improvement"))?;
        let got = [imp.toffoli_depth, imp.toffoli_count, imp.qubit_count].map(|p| p.to_string());
        ensure!(got == pct, "{label}: percentages {got:?} != {pct:?}");
    }
    // individual cells
    ensure!(Percent::improvement(13506, 802).to_string() == "94.06", "94.06");
    ensure!(Percent::improvement(93376, 7489).to_string() == "91.98", "91.98");
    ensure!(Percent::improvement(23996, 152).to_string() == "99.37", "99.37");

    let audit = rounding_audit(32, Some(4)).map_err(|e| e.to_string())?;
    let listed: Vec<&str> = audit.iter().map(|a| a.divider.as_str()).collect();
    for must in ["Non-restoring+Ling", "Restoring+Ling"] {
        ensure!(listed.contains(&must), "audit misses {must}: {listed:?}");
    }
    ensure!(
        !listed.iter().any(|l| l.contains("Takahashi")),
        "Takahashi rows have no floor brackets, audit lists {listed:?}"
    );
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_millis(500), "took {elapsed:?}");
    Ok(format!(
        "4 rows exact, 12 percentages match, audit lists {} disagreeing rows, {elapsed:.2?}",
        audit.len()
    ))
}

fn c5_cross_model() -> Outcome {
    for adder in GateLevelAdder::ALL {
        let row = adder.cost_row().expect("gate-level adders have rows");
        for n in 1..=16u64 {
            let frag = adder.build(n as usize + 1).map_err(|e| e.to_string())?;
            let m = frag.circuit.measure();
            let composed = compose(
                AdderCosts {
                    toffoli_depth: m.toffoli_depth as u64,
                    toffoli_count: m.toffoli_count as u64,
                    ancillas: frag.ancilla_footprint() as u64,
                },
                n,
                DividerKind::NonRestoring,
            );
            let analytic = evaluate_row(row, n, None, DividerKind::NonRestoring, Rounding::CeilRealLog)
                .map_err(|e| e.to_string())?;
            ensure!(
                analytic.toffoli_count == composed.toffoli_count,
                "{adder} n={n}: row TC {} != composed {}",
                analytic.toffoli_count,
                composed.toffoli_count
            );
        }
    }
    let mut checked = 0;
    for n in [4u64, 8, 16, 32] {
        for row in AdderRow::ALL {
            let radixes: Vec<Option<u64>> = if row.needs_radix() { vec![Some(3), Some(4)] } else { vec![None] };
            for radix in radixes {
                for rounding in [Rounding::CeilRealLog, Rounding::StrictFloor] {
                    let nr = evaluate_row(row, n, radix, DividerKind::NonRestoring, rounding).map_err(|e| e.to_string())?;
                    let re = evaluate_row(row, n, radix, DividerKind::Restoring, rounding).map_err(|e| e.to_string())?;
                    let delta = 3 * n * n + n - (3 * n + 1);
                    ensure!(
                        re.toffoli_count - nr.toffoli_count == delta && re.toffoli_depth - nr.toffoli_depth == delta,
                        "{row} n={n}: TC/TD delta {} / {} != {delta}",
                        re.toffoli_count - nr.toffoli_count,
                        re.toffoli_depth - nr.toffoli_depth
                    );
                    ensure!(re.qubit_count + 1 == nr.qubit_count, "{row} n={n}: QC delta");
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("cuccaro/vbe rows == composition for n=1..16; {checked} restoring/non-restoring deltas exact"))
}

fn c6_omega() -> Outcome {
    let start = Instant::now();
    for n in 0..=1_000_000u64 {
        ensure!(omega(n) == u64::from(n.count_ones()), "omega({n})");
    }
    for n in 0..=100_000u64 {
        ensure!(omega(2 * n) == omega(n), "omega(2·{n})");
        ensure!(omega(2 * n + 1) == omega(n) + 1, "omega(2·{n}+1)");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("popcount to 10^6, recurrences to 10^5 in {elapsed:.2?}"))
}

/// A circuit derived from one of the builders, chosen at random.
fn random_builder_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let adder = GateLevelAdder::ALL[rng.gen_range(0..2)];
    let m = rng.gen_range(1..=7);
    match rng.gen_range(0..6) {
        0 => adder.build(m).unwrap().circuit,
        1 => subtractor(&adder, m).unwrap().circuit,
        2 => add_sub(&adder, m).unwrap().circuit,
        3 => cond_add(m).unwrap().circuit,
        4 => {
            let kind = DividerKind::ALL[rng.gen_range(0..2)];
            build_divider(params(rng.gen_range(1..=4), &adder, kind)).unwrap().0
        }
        _ => {
            // several fragments spliced onto a host at random positions
            let width = rng.gen_range(12..20);
            let mut host = Circuit::with_qubits(width);
            for _ in 0..rng.gen_range(1..4) {
                let f = add_sub(&adder, rng.gen_range(1..=3)).unwrap().circuit;
                let mut wires: Vec<usize> = (0..width).collect();
                for i in 0..f.qubit_count() {
                    let j = rng.gen_range(i..width);
                    wires.swap(i, j);
                }
                let mapping: Vec<QubitId> = wires[..f.qubit_count()].iter().map(|&w| QubitId(w)).collect();
                host.append(&f, &mapping).unwrap();
            }
            host
        }
    }
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> BasisState {
    let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    BasisState::from_bits(&bits)
}

fn c7_simulator() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let c = random_builder_circuit(&mut rng);
        let s = random_state(&mut rng, c.qubit_count());
        let forward = apply(&c, &s).map_err(|e| e.to_string())?;
        let back = apply(&c.inverse(), &forward).map_err(|e| e.to_string())?;
        ensure!(back == s, "circuit #{i} not undone by its reverse");
    }
    let mk = |n: usize, gates: &[Gate]| {
        let mut c = Circuit::with_qubits(n);
        gates.iter().for_each(|g| c.push(*g).unwrap());
        c.measure()
    };
    let par = mk(6, &[Gate::toffoli(0, 1, 2), Gate::toffoli(3, 4, 5)]);
    let chain = mk(5, &[Gate::toffoli(0, 1, 2), Gate::toffoli(2, 3, 4)]);
    let cliff = mk(2, &[Gate::not(0), Gate::cnot(0, 1), Gate::not(1)]);
    ensure!(par.toffoli_depth == 1 && par.toffoli_count == 2, "disjoint: {par:?}");
    ensure!(chain.toffoli_depth == 2 && chain.toffoli_count == 2, "chained: {chain:?}");
    ensure!(cliff.toffoli_depth == 0 && cliff.toffoli_count == 0, "clifford: {cliff:?}");
    Ok("1000 random builder circuits reversed to identity; depth truths 1/2/0".into())
}

fn random_gate_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let mut c = Circuit::new();
    for r in 0..rng.gen_range(0..5) {
        c.add_register(&format!("reg{r}"), rng.gen_range(1..5)).unwrap();
    }
    let n = c.qubit_count();
    if n >= 3 {
        for _ in 0..rng.gen_range(0..60) {
            let kind = rng.gen_range(0..3);
            let [a, b, t] = [0; 3].map(|_| QubitId(rng.gen_range(0..n)));
            let g = match kind {
                0 => Gate::Not(t),
                1 => Gate::Cnot(a, t),
                _ => Gate::Toffoli(a, b, t),
            };
            let _ = c.push(g);
        }
    }
    c
}

fn c8_round_trip() -> Outcome {
    let mut circuits = Vec::new();
    for kind in DividerKind::ALL {
        for adder in GateLevelAdder::ALL {
            for n in 1..=5 {
                circuits.push(build_divider(params(n, &adder, kind)).unwrap().0);
            }
        }
    }
    let dividers = circuits.len();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    while circuits.len() < 500 {
        let c = if rng.gen_bool(0.5) {
            random_gate_circuit(&mut rng)
        } else {
            random_builder_circuit(&mut rng)
        };
        circuits.push(c);
    }
    for (i, c) in circuits.iter().enumerate() {
        let text = to_qasm(c);
        let back = parse(&text).map_err(|e| format!("circuit #{i}: {e}"))?;
        ensure!(&back == c, "circuit #{i} changed on round-trip");
        ensure!(to_qasm(&back) == text, "circuit #{i} text not stable");
    }
    Ok(format!("{} circuits ({dividers} dividers) round-trip exactly", circuits.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 exhaustive division", c1_exhaustive_division),
        ("2 qubit budget", c2_qubit_budget),
        ("3 Toffoli-count composition", c3_toffoli_composition),
        ("4 published 32-bit table", c4_published_table),
        ("5 cross-model consistency", c5_cross_model),
        ("6 omega properties", c6_omega),
        ("7 simulator soundness", c7_simulator),
        ("8 text round-trip", c8_round_trip),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
