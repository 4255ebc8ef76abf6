//! `abelsq`: run the counting and alternation checks, print witnesses,
//! classify single decompositions, and sweep decompositions of `z_n`.
//!
//! Exit status: 0 when every check passes, 1 when a counterexample or an
//! unrefuted decomposition turns up, 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;

use abelsq_core::ogden::{
    cond_a, cond_b, prescribed_i, Examination, MarkedWitness, Refuter, SearchConfig, VerifyConfig,
};
use abelsq_core::witness::MAX_ORDER;
use abelsq_core::words::check_power_alt;
use abelsq_core::{lemma3_report, verify_theorem_instance, Decomposition, Strategy, WitnessSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "abelsq",
    version,
    about = "Finite-instance checks for the binary non-abelian-square language"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// 1-counts of z_n against their closed forms, and z_n ∈ T.
    Lemma3 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=MAX_ORDER))]
        n: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// alt(w^k) >= k - 1 for every uneven w up to a length bound.
    Lemma8 {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print z_n as ASCII (text) or as a run-length JSON array (json).
    Witness {
        #[arg(long, value_parser = order)]
        n: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Classify one decomposition z = uvwxy of z_n and search for a refuting pump.
    Classify {
        #[arg(long, value_parser = order)]
        n: u64,
        /// Cut indices i1 <= i2 <= i3 <= i4.
        #[arg(num_args = 4, required = true, value_names = ["I1", "I2", "I3", "I4"])]
        cuts: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        max_small_i: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Refute every enumerated decomposition of z_n satisfying A and B.
    OgdenVerify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = order)]
    n: u64,
    /// Exhaustive stratum: all cuts with i4 - i1 <= WINDOW.
    #[arg(long)]
    window: Option<usize>,
    /// Seeded random stratum of this many decompositions.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    case_targeted: bool,
    #[arg(long, default_value_t = 8)]
    max_small_i: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256u64))]
    workers: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    #[value(alias = "ascii")]
    Text,
    Json,
}

fn order(s: &str) -> Result<u64, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_ORDER).contains(&n) {
        Ok(n)
    } else {
        Err(format!("n must be in 1..={MAX_ORDER}"))
    }
}

/// What a command produced: its output and whether every check passed.
struct Outcome {
    output: String,
    passed: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<abelsq_core::Error> for Failure {
    fn from(e: abelsq_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = writeln!(stdout, "{}", outcome.output);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Lemma3 { n, format } => lemma3(n, format.unwrap_or(Format::Json)),
        Command::Lemma8 {
            max_len,
            max_k,
            format,
        } => Ok(lemma8(max_len, max_k, format.unwrap_or(Format::Json))),
        Command::Witness { n, format } => witness(n, format.unwrap_or(Format::Text)),
        Command::Classify {
            n,
            cuts,
            max_small_i,
            format,
        } => {
            let cuts: [usize; 4] = cuts.try_into().expect("clap enforces four cuts");
            classify(n, cuts, max_small_i, format.unwrap_or(Format::Json))
        }
        Command::OgdenVerify(args) => ogden_verify(args),
    }
}

fn lemma3(n: u64, format: Format) -> Result<Outcome, Failure> {
    let report = lemma3_report(n)?;
    if report.sub_threshold_warning {
        eprintln!("warning: n = {n} is below the proof threshold 5");
    }
    let output = match format {
        Format::Json => json(&report),
        Format::Text => format!(
            "n = {}\ntotal ones = {} (closed form {})\nsecond half ones = {} (closed form {})\nabelian square = {}\nin T = {}",
            report.n,
            report.total_ones,
            report.formula_total_ones,
            report.second_half_ones,
            report.formula_second_half_ones,
            report.is_abelian_square,
            report.in_t,
        ),
    };
    Ok(Outcome {
        output,
        passed: report.holds(),
    })
}

fn lemma8(max_len: usize, max_k: usize, format: Format) -> Outcome {
    let report = check_power_alt(max_len, max_k);
    let output = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = format!(
                "uneven words up to length {}: {}\npairs (w, k) with k <= {}: {}\nviolations: {}",
                max_len,
                report.uneven_words,
                max_k,
                report.checked,
                report.violations.len()
            );
            for v in &report.violations {
                out.push_str(&format!("\n  w = {} k = {} alt = {}", v.word, v.k, v.alt));
            }
            out
        }
    };
    Outcome {
        passed: report.holds(),
        output,
    }
}

fn witness(n: u64, format: Format) -> Result<Outcome, Failure> {
    let z = WitnessSpec::new(n)?.build()?;
    let output = match format {
        Format::Text => z.to_string(),
        Format::Json => serde_json::to_string(&z.bit_runs()).expect("runs serialize"),
    };
    Ok(Outcome {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassifyReport {
    n: u64,
    cuts: [usize; 4],
    condition_a: bool,
    condition_b: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    examination: Option<Examination>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prescribed_i: Option<u64>,
}

fn classify(
    n: u64,
    cuts: [usize; 4],
    max_small_i: u64,
    format: Format,
) -> Result<Outcome, Failure> {
    let witness = MarkedWitness::new(n)?;
    let d = Decomposition::new(cuts, witness.len())?;
    if d.pumps_nothing() {
        return Err(Failure::Usage("v and x are both empty".into()));
    }
    let condition_a = cond_a(&witness.coloring, &d);
    let condition_b = cond_b(&witness.coloring, n, &d);
    let refuter = Refuter::new(&witness, SearchConfig { max_small_i });
    let examination = if condition_a && condition_b {
        Some(refuter.examine(&d)?)
    } else {
        None
    };
    let report = ClassifyReport {
        n,
        cuts,
        condition_a,
        condition_b,
        prescribed_i: examination.as_ref().and_then(|e| prescribed_i(&e.label, n)),
        examination,
    };
    let passed = report
        .examination
        .as_ref()
        .is_none_or(|e| e.refutation.is_some());

    let output = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out =
                format!("cuts {cuts:?}\ncondition A: {condition_a}\ncondition B: {condition_b}");
            match &report.examination {
                None => out.push_str("\nconditions fail; nothing to refute"),
                Some(exam) => {
                    out.push_str(&format!("\ncase: {}", exam.label));
                    match report.prescribed_i {
                        Some(i) => out.push_str(&format!("\nprescribed i: {i}")),
                        None => out.push_str("\nprescribed i: none"),
                    }
                    match exam.refutation {
                        Some(r) => out.push_str(&format!(
                            "\nrefuted: i = {} ({}), pumped length {}{}",
                            r.pump_exponent,
                            r.reason.as_str(),
                            r.pumped_length,
                            if r.via_prescribed {
                                ""
                            } else {
                                ", found by fallback search"
                            }
                        )),
                        None => out.push_str("\nNOT REFUTED"),
                    }
                }
            }
            out
        }
    };
    Ok(Outcome { output, passed })
}

fn strategies(args: &VerifyArgs) -> Vec<Strategy> {
    let mut out = Vec::new();
    if let Some(window) = args.window {
        out.push(Strategy::ExhaustiveWindow { window });
    }
    if let Some(count) = args.samples {
        out.push(Strategy::Random {
            seed: args.seed,
            count,
        });
    }
    if args.case_targeted {
        out.push(Strategy::CaseTargeted);
    }
    if out.is_empty() {
        out = vec![
            Strategy::ExhaustiveWindow { window: 40 },
            Strategy::CaseTargeted,
        ];
    }
    out
}

fn ogden_verify(args: VerifyArgs) -> Result<Outcome, Failure> {
    let config = VerifyConfig {
        search: SearchConfig {
            max_small_i: args.max_small_i,
        },
        workers: args.workers as usize,
    };
    let report = verify_theorem_instance(args.n, &strategies(&args), &config)?;
    if report.sub_threshold_warning {
        eprintln!("warning: n = {} is below the proof threshold 5", args.n);
    }
    if report.alt_bound.discrepancy {
        eprintln!(
            "note: computed max alt over R is {}, stated value {}",
            report.alt_bound.computed_max, report.alt_bound.claimed
        );
    }
    let output = match args.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = format!(
                "n = {}\nchecked {} decompositions, skipped {} violating A or B\nprescribed success rate {:.4}\n",
                report.n, report.checked, report.skipped_violating_ab, report.prescribed_success_rate
            );
            for (leaf, stats) in &report.per_leaf {
                out.push_str(&format!(
                    "  {leaf:<32} {:>8}  prescribed {:>8}  fallback {:>6}\n",
                    stats.count, stats.prescribed_success, stats.fallback_success
                ));
            }
            for (reason, count) in &report.reason_histogram {
                out.push_str(&format!("reason {reason}: {count}\n"));
            }
            out.push_str(&format!("unrefuted: {}", report.unrefuted.len()));
            for cuts in &report.unrefuted {
                out.push_str(&format!("\n  {cuts:?}"));
            }
            out
        }
    };
    Ok(Outcome {
        passed: report.all_refuted(),
        output,
    })
}
