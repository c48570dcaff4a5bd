//! Command-line front end: synthesize minimum-NOT formulas, audit arbitrary
//! formulas against the NOT-count lower bound, and sweep whole arities.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use notmin::{
    check_drop_lemma, check_monotone_lemma, circuit_inversion_complexity, decrease,
    first_counterexample, formula_inversion_complexity, lower_bound_certificate, sweep, synthesize,
    witness_chain, Certificate, Formula, LemmaReport, TruthTable,
};

const FORMAT_HELP: &str = "\
Truth tables are written as hex strings, most significant digit first: bit i \
(counted from the least significant end) is the output on the input whose \
variable x<j> equals bit j-1 of i, so x1 is the least significant bit of the \
input index. Table files hold two lines: `vars=<n>` and the bits, either hex \
or a raw binary string of length 2^n with bit 0 rightmost. Input vectors \
print as binary numbers the same way: x1 is the rightmost bit.

Formulas use `~` (NOT), `&` (AND), `|` (OR) with that precedence, variables \
x1, x2, ..., constants 0 and 1, and parentheses.

Exit codes: 0 success, 1 semantic failure (mismatch or sweep violation), \
2 usage or parse error.";

#[derive(Parser)]
#[command(
    name = "notmin",
    version,
    about = "Synthesize and audit Boolean formulas that use the fewest possible NOT operators",
    after_long_help = FORMAT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the decrease d(f), the stable set, and a witness chain
    Decrease {
        #[command(flatten)]
        table: TableInput,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build a formula for f with the minimum number of NOT operators
    Synth {
        #[command(flatten)]
        table: TableInput,
        /// Also emit a Graphviz DOT rendering of the formula tree
        #[arg(long)]
        dot: bool,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Check that a formula computes a truth table (exit 0 iff it does)
    Verify {
        #[command(flatten)]
        formula: FormulaInput,
        #[command(flatten)]
        table: TableInput,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Audit a formula: lower-bound certificate and down-count checks
    Audit {
        #[command(flatten)]
        formula: FormulaInput,
        /// Number of variables (default: the largest index in the formula)
        #[arg(long)]
        vars: Option<usize>,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Validate synthesis over every function on n variables (1 <= n <= 4)
    Sweep {
        /// Number of variables to sweep
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        vars: u8,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Compare minimum NOT counts: formulas versus unrestricted circuits
    CompareBounds {
        #[command(flatten)]
        table: TableInput,
        /// Emit a single JSON document instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TableInput {
    /// Number of variables (with --hex)
    #[arg(long)]
    vars: Option<usize>,
    /// Truth table bits as a hex string, most significant digit first
    #[arg(long)]
    hex: Option<String>,
    /// Read the table from a file: line 1 `vars=<n>`, line 2 hex or binary bits
    #[arg(long, conflicts_with_all = ["vars", "hex"])]
    file: Option<PathBuf>,
}

impl TableInput {
    fn load(&self) -> Result<TruthTable, String> {
        match (&self.file, &self.vars, &self.hex) {
            (Some(path), None, None) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                TruthTable::from_text(&text).map_err(|e| e.to_string())
            }
            (None, Some(vars), Some(hex)) => {
                TruthTable::from_hex(*vars, hex).map_err(|e| e.to_string())
            }
            _ => Err("provide either --vars with --hex, or --file".into()),
        }
    }
}

#[derive(Args)]
struct FormulaInput {
    /// Formula text, e.g. "(x1 | x2) & ~(x1 & x2)"
    formula: Option<String>,
    /// Read the formula from a file instead
    #[arg(long, conflicts_with = "formula")]
    formula_file: Option<PathBuf>,
}

impl FormulaInput {
    fn parse(&self) -> Result<Formula, String> {
        let text = match (&self.formula, &self.formula_file) {
            (Some(text), None) => text.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
            _ => return Err("provide a formula argument or --formula-file".into()),
        };
        Formula::parse(text.trim()).map_err(|e| e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Decrease { table, json } => cmd_decrease(&table, json),
        Command::Synth { table, dot, json } => cmd_synth(&table, dot, json),
        Command::Verify {
            formula,
            table,
            json,
        } => cmd_verify(&formula, &table, json),
        Command::Audit {
            formula,
            vars,
            json,
        } => cmd_audit(&formula, vars, json),
        Command::Sweep { vars, json } => cmd_sweep(usize::from(vars), json),
        Command::CompareBounds { table, json } => cmd_compare_bounds(&table, json),
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("report serialization cannot fail")
    );
}

fn cmd_decrease(table: &TableInput, json: bool) -> Result<ExitCode, String> {
    let tt = table.load()?;
    let profile = decrease(&tt);
    let chain = witness_chain(&tt);
    let stable: Vec<String> = profile
        .stable_vectors()
        .iter()
        .map(ToString::to_string)
        .collect();
    if json {
        #[derive(Serialize)]
        struct Out {
            vars: usize,
            d: u32,
            stable: Vec<String>,
            witness_chain: Vec<String>,
        }
        emit_json(&Out {
            vars: tt.arity(),
            d: profile.d(),
            stable,
            witness_chain: chain.vectors().iter().map(ToString::to_string).collect(),
        });
    } else {
        println!("vars = {}", tt.arity());
        println!("d = {}", profile.d());
        println!("S = {{{}}}", stable.join(","));
        println!("witness chain = {chain}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_synth(table: &TableInput, dot: bool, json: bool) -> Result<ExitCode, String> {
    let tt = table.load()?;
    let formula = synthesize(&tt);
    let metrics = formula.metrics();
    let d = decrease(&tt).d();
    if json {
        #[derive(Serialize)]
        struct Out {
            vars: usize,
            formula: String,
            nots: u32,
            d: u32,
            leaves: u32,
            #[serde(skip_serializing_if = "Option::is_none")]
            dot: Option<String>,
        }
        emit_json(&Out {
            vars: tt.arity(),
            formula: formula.to_string(),
            nots: metrics.nots,
            d,
            leaves: metrics.leaves,
            dot: dot.then(|| formula.to_dot()),
        });
    } else {
        println!("formula = {formula}");
        println!("nots = {}", metrics.nots);
        println!("d = {d}");
        println!("leaves = {}", metrics.leaves);
        if dot {
            print!("{}", formula.to_dot());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(formula: &FormulaInput, table: &TableInput, json: bool) -> Result<ExitCode, String> {
    let formula = formula.parse()?;
    let tt = table.load()?;
    let counterexample = first_counterexample(&formula, &tt).map_err(|e| e.to_string())?;
    if json {
        #[derive(Serialize)]
        struct Out {
            ok: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            counterexample: Option<String>,
        }
        emit_json(&Out {
            ok: counterexample.is_none(),
            counterexample: counterexample.map(|x| x.to_string()),
        });
    } else {
        match counterexample {
            None => println!("ok"),
            Some(x) => println!("counterexample = {x}"),
        }
    }
    Ok(match counterexample {
        None => ExitCode::SUCCESS,
        Some(_) => ExitCode::from(1),
    })
}

fn cmd_audit(formula: &FormulaInput, vars: Option<usize>, json: bool) -> Result<ExitCode, String> {
    let formula = formula.parse()?;
    let arity = vars.unwrap_or_else(|| formula.max_var().max(1));
    let certificate = lower_bound_certificate(&formula, arity).map_err(|e| e.to_string())?;
    let drop_lemma = check_drop_lemma(&formula, arity).map_err(|e| e.to_string())?;
    let monotone_lemma = check_monotone_lemma(&formula, arity).map_err(|e| e.to_string())?;
    let all_passed = drop_lemma.passed() && monotone_lemma.passed();
    if json {
        #[derive(Serialize)]
        struct Out {
            vars: usize,
            certificate: Certificate,
            drop_lemma: LemmaReport,
            monotone_lemma: LemmaReport,
        }
        emit_json(&Out {
            vars: arity,
            certificate,
            drop_lemma,
            monotone_lemma,
        });
    } else {
        println!("vars = {arity}");
        println!("d = {}", certificate.d);
        println!("nots = {}", certificate.not_count);
        println!("witness chain = {}", certificate.chain);
        println!(
            "down counts = {}",
            certificate
                .down_counts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        if certificate.tight {
            println!("slack = 0 (tight)");
        } else {
            println!("slack = {}", certificate.slack());
        }
        print_lemma("drop lemma", &drop_lemma);
        print_lemma("monotone lemma", &monotone_lemma);
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_lemma(name: &str, report: &LemmaReport) {
    println!(
        "{name}: {} violations, {} pairs checked",
        report.violations.len(),
        report.pairs_checked
    );
    for v in &report.violations {
        println!(
            "  {} -> {}: down count {} -> {}",
            v.lower, v.upper, v.lower_count, v.upper_count
        );
    }
}

fn cmd_sweep(vars: usize, json: bool) -> Result<ExitCode, String> {
    let summary = sweep::run(vars).map_err(|e| e.to_string())?;
    if json {
        emit_json(&summary);
    } else {
        println!("{}/{} pass", summary.passed, summary.total);
        let histogram: Vec<String> = summary
            .d_histogram
            .iter()
            .map(|(d, count)| format!("{d}: {count}"))
            .collect();
        println!("d histogram: {{{}}}", histogram.join(", "));
        if !summary.all_passed() {
            println!("failures:");
            for failure in &summary.failures {
                println!("  index {}: {}", failure.index, failure.reason);
            }
        }
    }
    Ok(if summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_compare_bounds(table: &TableInput, json: bool) -> Result<ExitCode, String> {
    let tt = table.load()?;
    let formula_nots = formula_inversion_complexity(&tt);
    let circuit_nots = circuit_inversion_complexity(&tt);
    if json {
        #[derive(Serialize)]
        struct Out {
            vars: usize,
            d: u32,
            formula_nots: u32,
            circuit_nots: u32,
            gap: u32,
        }
        emit_json(&Out {
            vars: tt.arity(),
            d: formula_nots,
            formula_nots,
            circuit_nots,
            gap: formula_nots - circuit_nots,
        });
    } else {
        println!("d = {formula_nots}");
        println!("formula nots = {formula_nots}");
        println!("circuit nots = {circuit_nots}");
        println!("gap = {}", formula_nots - circuit_nots);
    }
    Ok(ExitCode::SUCCESS)
}
