use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qdiv::cost::{self, compose, evaluate_row, AdderCosts, AdderRow, Rounding, TableRow};
use qdiv::divider::{build_divider, run_division, verify_exhaustive, DividerPorts, DEFAULT_EXHAUSTIVE_LIMIT};
use qdiv::{qasm, DividerKind, DividerParams, GateLevelAdder};

#[derive(Parser)]
#[command(name = "qdiv", version, about = "Reversible integer divider synthesis and cost estimation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a divider, write it as OpenQASM and print its resource report.
    Build {
        #[command(flatten)]
        divider: DividerArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a closed-form cost row.
    Estimate(EstimateArgs),
    /// Exhaustively check a divider against integer division.
    Verify {
        #[command(flatten)]
        divider: DividerArgs,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a divider circuit from a file on one input pair.
    Simulate {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        dividend: u64,
        #[arg(long)]
        divisor: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the divider comparison table.
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Every adder row instead of the four headline entries.
        #[arg(long)]
        all: bool,
        /// List the rows whose value depends on the rounding convention.
        #[arg(long)]
        audit: bool,
        /// Radix for the higher-radix row (only used with --all or --audit).
        #[arg(long)]
        radix: Option<u64>,
        #[arg(long, default_value = "ceil-real-log")]
        rounding: Rounding,
    },
}

#[derive(Args)]
struct DividerArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "cuccaro")]
    adder: GateLevelAdder,
    #[arg(long, default_value = "nonrestoring")]
    kind: DividerKind,
}

impl DividerArgs {
    fn params(&self) -> DividerParams<'_> {
        DividerParams {
            n: self.n,
            adder: &self.adder,
            kind: self.kind,
        }
    }
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, required_unless_present = "tc_add")]
    row: Option<AdderRow>,
    #[arg(long)]
    radix: Option<u64>,
    #[arg(long, default_value = "nonrestoring")]
    kind: DividerKind,
    #[arg(long, default_value = "ceil-real-log")]
    rounding: Rounding,
    /// Adder depth for a custom row (with --tc-add and --anc-add).
    #[arg(long, requires_all = ["tc_add", "anc_add"], conflicts_with = "row")]
    td_add: Option<u64>,
    #[arg(long, requires_all = ["td_add", "anc_add"])]
    tc_add: Option<u64>,
    #[arg(long, requires_all = ["td_add", "tc_add"])]
    anc_add: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn cmd_build(divider: &DividerArgs, out: &PathBuf) -> Result<()> {
    let (circuit, _) = build_divider(divider.params())?;
    fs::write(out, qasm::to_qasm(&circuit)).with_context(|| format!("writing {}", out.display()))?;
    println!("{}", serde_json::to_string_pretty(&circuit.measure())?);
    Ok(())
}

fn cmd_estimate(args: &EstimateArgs) -> Result<()> {
    let costs = match (args.row, args.td_add, args.tc_add, args.anc_add) {
        (Some(row), ..) => {
            let costs = evaluate_row(row, args.n, args.radix, args.kind, args.rounding)?;
            let other = match args.rounding {
                Rounding::CeilRealLog => Rounding::StrictFloor,
                Rounding::StrictFloor => Rounding::CeilRealLog,
            };
            let alt = evaluate_row(row, args.n, args.radix, args.kind, other)?;
            if alt != costs {
                eprintln!(
                    "note: under {other} this row gives TD={} TC={} QC={}",
                    alt.toffoli_depth, alt.toffoli_count, alt.qubit_count
                );
            }
            costs
        }
        (None, Some(toffoli_depth), Some(toffoli_count), Some(ancillas)) => {
            if args.n == 0 {
                bail!("n must be ≥ 1");
            }
            let adder = AdderCosts {
                toffoli_depth,
                toffoli_count,
                ancillas,
            };
            compose(adder, args.n, args.kind)
        }
        _ => bail!("give either --row or all of --td-add, --tc-add, --anc-add"),
    };
    println!("{}", serde_json::to_string_pretty(&costs)?);
    Ok(())
}

fn cmd_verify(divider: &DividerArgs, limit: usize, json: bool) -> Result<bool> {
    let report = verify_exhaustive(divider.params(), limit)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{}/{} pass", report.passed, report.cases);
        if let Some(f) = &report.first_failure {
            println!("first counterexample: {f}");
        }
    }
    Ok(report.all_passed())
}

fn cmd_simulate(path: &PathBuf, dividend: u64, divisor: u64, json: bool) -> Result<()> {
    if divisor == 0 {
        bail!("divisor must be non-zero");
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let circuit = qasm::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let ports = DividerPorts::from_circuit(&circuit)?;
    let (q, r) = run_division(&circuit, &ports, dividend, divisor)?;
    if json {
        println!("{}", serde_json::json!({ "quotient": q, "remainder": r }));
    } else {
        println!("q={q} r={r}");
    }
    Ok(())
}

fn csv_table(rows: &[TableRow]) -> String {
    let mut out = String::from("divider,TD,TC,QC,TD_impr,TC_impr,QC_impr\n");
    for row in rows {
        let c = row.costs;
        let impr = match row.improvement {
            Some(i) => format!("{},{},{}", i.toffoli_depth, i.toffoli_count, i.qubit_count),
            None => ",,".to_string(),
        };
        out.push_str(&format!(
            "{},{},{},{},{impr}\n",
            row.divider, c.toffoli_depth, c.toffoli_count, c.qubit_count
        ));
    }
    out
}

fn cmd_table(n: u64, format: Format, all: bool, audit: bool, radix: Option<u64>, rounding: Rounding) -> Result<()> {
    if audit {
        let entries = cost::rounding_audit(n, radix)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&entries)?),
            Format::Csv => {
                println!("divider,TD_ceil,TC_ceil,QC_ceil,TD_floor,TC_floor,QC_floor");
                for e in entries {
                    let (a, b) = (e.ceil_real_log, e.strict_floor);
                    println!(
                        "{},{},{},{},{},{},{}",
                        e.divider,
                        a.toffoli_depth,
                        a.toffoli_count,
                        a.qubit_count,
                        b.toffoli_depth,
                        b.toffoli_count,
                        b.qubit_count
                    );
                }
            }
        }
        return Ok(());
    }
    let entries = if all {
        cost::all_entries(radix)
    } else {
        cost::PUBLISHED_ENTRIES.to_vec()
    };
    let rows = cost::comparison_table(n, &entries, radix, rounding)?;
    match format {
        Format::Csv => print!("{}", csv_table(&rows)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build { divider, out } => cmd_build(&divider, &out)?,
        Command::Estimate(args) => cmd_estimate(&args)?,
        Command::Verify { divider, limit, json } => return cmd_verify(&divider, limit, json),
        Command::Simulate {
            circuit,
            dividend,
            divisor,
            json,
        } => cmd_simulate(&circuit, dividend, divisor, json)?,
        Command::Table {
            n,
            format,
            all,
            audit,
            radix,
            rounding,
        } => cmd_table(n, format, all, audit, radix, rounding)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
