use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use dilated_floor::beatty::{beatty_window, reduced_common_element, reduced_disjoint, thm27_criterion, BeattyParam};
use dilated_floor::classify::{classify_with_report, find_witness, Verdict};
use dilated_floor::exact::{rational_grid, Rat};
use dilated_floor::exec::Execution;
use dilated_floor::floorfn::{oracle_verify, DilationPair, OracleReport};
use dilated_floor::plot::{plot_svg, PlotSpec};
use dilated_floor::preorder::PreorderMatrix;
use dilated_floor::semigroup::{frobenius_report, SemigroupPair};
use dilated_floor::sweep::{run_sweep, write_csv, Quadrant, SweepSpec};

const MEMBER: u8 = 0;
const NOT_MEMBER: u8 = 1;
const USAGE: u8 = 2;

/// Classify dilation pairs (α, β) by whether ⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋ for all real x.
///
/// Rationals are written `p` or `p/q`, optionally with a leading minus.
#[derive(Parser)]
#[command(name = "dilated-floor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// JSON output (default).
    #[arg(long, conflicts_with = "plain")]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    plain: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one pair and cross-check it with the oracle.
    Classify {
        #[arg(allow_hyphen_values = true)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true)]
        beta: Rat,
        /// Skip the oracle; non-members then carry no counterexample.
        #[arg(long)]
        no_oracle: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Run the one-period oracle on a pair.
    Verify {
        #[arg(allow_hyphen_values = true)]
        alpha: Rat,
        #[arg(allow_hyphen_values = true)]
        beta: Rat,
        #[command(flatten)]
        format: Format,
    },
    /// Classify every pair on a grid and compare with the oracle.
    Sweep {
        /// Largest |numerator|.
        #[arg(short = 'P', long = "max-num", default_value_t = 4)]
        max_num: u64,
        /// Largest denominator.
        #[arg(short = 'Q', long = "max-den", default_value_t = 4)]
        max_den: u64,
        /// all, ++, +-, -+ or -- (signs of α, β).
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        quadrant: Quadrant,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Beatty sequences of u (and v) and reduced disjointness.
    Beatty {
        #[arg(allow_hyphen_values = true)]
        u: Rat,
        #[arg(allow_hyphen_values = true)]
        v: Option<Rat>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 30, allow_hyphen_values = true)]
        hi: i64,
        #[command(flatten)]
        format: Format,
    },
    /// Frobenius number, non-realizing set and duality check of S(a, b).
    Frobenius {
        a: u64,
        b: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Pairwise preorder matrix and transitivity audit on a grid.
    Preorder {
        #[arg(short = 'P', long = "max-num", default_value_t = 3)]
        max_num: u64,
        #[arg(short = 'Q', long = "max-den", default_value_t = 3)]
        max_den: u64,
        /// Explicit comma-separated values instead of the grid.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<Rat>>,
        /// Emit CSV rows alpha,beta,precedes instead of JSON.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// SVG map of the solution set.
    Plot {
        #[arg(long, default_value = "-3", allow_hyphen_values = true)]
        alpha_min: Rat,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        alpha_max: Rat,
        #[arg(long, default_value = "-3", allow_hyphen_values = true)]
        beta_min: Rat,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        beta_max: Rat,
        /// Largest m, n on the curve families; 0 draws no families.
        #[arg(short = 'M', default_value_t = 3)]
        m: u64,
        /// Largest denominator p, q for vertical segments and sporadic points.
        #[arg(short = 'D', default_value_t = 3)]
        d: u64,
        /// Largest r for sporadic points.
        #[arg(short = 'R', default_value_t = 3)]
        r: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Classify { alpha, beta, no_oracle, format } => cmd_classify(alpha, beta, no_oracle, format),
        Command::Verify { alpha, beta, format } => cmd_verify(alpha, beta, format),
        Command::Sweep { max_num, max_den, quadrant, json, out, sequential } => {
            cmd_sweep(SweepSpec::new(max_num, max_den, quadrant)?, json, &out, execution(sequential))
        }
        Command::Beatty { u, v, lo, hi, format } => cmd_beatty(u, v, lo, hi, format),
        Command::Frobenius { a, b, format } => cmd_frobenius(a, b, format),
        Command::Preorder { max_num, max_den, values, csv, out, sequential } => {
            let values = values.unwrap_or_else(|| rational_grid(max_num, max_den, false));
            cmd_preorder(&values, csv, &out, execution(sequential))
        }
        Command::Plot { alpha_min, alpha_max, beta_min, beta_max, m, d, r, out } => {
            let spec = PlotSpec::new([alpha_min, alpha_max, beta_min, beta_max], m, d, r)?;
            let mut w = sink(&out)?;
            w.write_all(plot_svg(&spec).as_bytes())?;
            w.flush()?;
            Ok(MEMBER)
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    #[serde(flatten)]
    verdict: &'a Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn cmd_classify(alpha: Rat, beta: Rat, no_oracle: bool, format: Format) -> CmdResult {
    let pair = DilationPair::new(alpha, beta);
    let (verdict, report) = if no_oracle {
        let witness = find_witness(&pair);
        let verdict =
            Verdict { pair: pair.clone(), member: witness.is_some(), witness, counterexample: None };
        (verdict, None)
    } else {
        let report = oracle_verify(&pair);
        (classify_with_report(&pair, &report), Some(report))
    };
    let agree = report.as_ref().map(|r| r.is_member() == verdict.member);

    if format.plain {
        let detail = match (&verdict.witness, &verdict.counterexample) {
            (Some(w), _) => format!("witness={w}"),
            (None, Some(x)) => format!("counterexample={x}"),
            (None, None) => "witness=none".to_string(),
        };
        println!("alpha={} beta={} member={} {detail}", pair.alpha, pair.beta, verdict.member);
        if let (Some(r), Some(a)) = (&report, agree) {
            println!("oracle period={} min_value={} argmin={} agree={a}", r.period, r.min_value, r.argmin);
        }
    } else {
        print_json(&ClassifyOutput { verdict: &verdict, oracle: report.as_ref(), agree })?;
    }
    if agree == Some(false) {
        eprintln!("warning: classifier and oracle disagree on {pair}");
        return Ok(NOT_MEMBER);
    }
    Ok(if verdict.member { MEMBER } else { NOT_MEMBER })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    pair: &'a DilationPair,
    #[serde(flatten)]
    report: &'a OracleReport,
    member: bool,
    classifier_member: bool,
    agree: bool,
}

fn cmd_verify(alpha: Rat, beta: Rat, format: Format) -> CmdResult {
    let pair = DilationPair::new(alpha, beta);
    let report = oracle_verify(&pair);
    let classifier_member = find_witness(&pair).is_some();
    let out = VerifyOutput {
        pair: &pair,
        report: &report,
        member: report.is_member(),
        classifier_member,
        agree: classifier_member == report.is_member(),
    };
    if format.plain {
        println!(
            "alpha={} beta={} period={} min_value={} argmin={} breakpoints={} samples={} agree={}",
            pair.alpha,
            pair.beta,
            report.period,
            report.min_value,
            report.argmin,
            report.breakpoints_checked,
            report.samples_checked,
            out.agree
        );
    } else {
        print_json(&out)?;
    }
    Ok(if out.member && out.agree { MEMBER } else { NOT_MEMBER })
}

fn cmd_sweep(spec: SweepSpec, json: bool, out: &Option<PathBuf>, exec: Execution) -> CmdResult {
    let result = run_sweep(&spec, exec);
    let mut w = sink(out)?;
    if json {
        serde_json::to_writer_pretty(&mut w, &result)?;
        writeln!(w)?;
    } else {
        write_csv(&result.rows, &mut w)?;
        eprintln!("summary: {}", result.summary);
    }
    w.flush()?;
    Ok(if result.summary.disagreements == 0 { MEMBER } else { NOT_MEMBER })
}

#[derive(Serialize)]
struct Criterion {
    m: i64,
    n: i64,
}

#[derive(Serialize)]
struct BeattyOutput {
    u: dilated_floor::beatty::BeattyWindow,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<dilated_floor::beatty::BeattyWindow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_disjoint: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    common_element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    criterion: Option<Option<Criterion>>,
}

fn cmd_beatty(u: Rat, v: Option<Rat>, lo: i64, hi: i64, format: Format) -> CmdResult {
    if lo > hi {
        return Err(Failure(format!("empty window [{lo}, {hi}]")));
    }
    let u = BeattyParam::new(u)?;
    let v = v.map(BeattyParam::new).transpose()?;
    let mut out = BeattyOutput {
        u: beatty_window(&u, lo, hi),
        v: None,
        reduced_disjoint: None,
        common_element: None,
        criterion: None,
    };
    if let Some(v) = &v {
        out.v = Some(beatty_window(v, lo, hi));
        out.reduced_disjoint = Some(reduced_disjoint(&u, v));
        out.common_element = reduced_common_element(&u, v, Execution::default()).map(|m| m.to_string());
        let crit = thm27_criterion(&u, v).map(|(m, n)| -> Result<Criterion, Failure> {
            Ok(Criterion { m: i64::try_from(m)?, n: i64::try_from(n)? })
        });
        out.criterion = Some(crit.transpose()?);
    }
    if format.plain {
        let list = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        for w in std::iter::once(&out.u).chain(out.v.as_ref()) {
            println!("u={} B+=[{}] B=[{}] B0=[{}]", w.u, list(&w.positive), list(&w.full), list(&w.reduced));
        }
        if let Some(d) = out.reduced_disjoint {
            let crit = match &out.criterion {
                Some(Some(c)) => format!("m={},n={}", c.m, c.n),
                _ => "none".to_string(),
            };
            println!("reduced_disjoint={d} criterion={crit}");
        }
    } else {
        print_json(&out)?;
    }
    Ok(MEMBER)
}

fn cmd_frobenius(a: u64, b: u64, format: Format) -> CmdResult {
    let report = frobenius_report(SemigroupPair::new(a, b)?)?;
    if format.plain {
        let nr: Vec<String> = report.nonrealizing_set.iter().map(u64::to_string).collect();
        println!(
            "a={} b={} frobenius={} nonrealizing=[{}] duality={}",
            report.a,
            report.b,
            report.frobenius_number,
            nr.join(" "),
            report.sylvester_duality
        );
    } else {
        print_json(&report)?;
    }
    Ok(if report.sylvester_duality { MEMBER } else { NOT_MEMBER })
}

#[derive(Serialize)]
struct PreorderOutput<'a> {
    values: &'a [Rat],
    matrix: Vec<Vec<bool>>,
    violation: Option<[Rat; 3]>,
    classes: Vec<Vec<Rat>>,
}

#[derive(Serialize)]
struct PreorderRow<'a> {
    alpha: &'a Rat,
    beta: &'a Rat,
    precedes: bool,
}

fn cmd_preorder(values: &[Rat], csv_out: bool, out: &Option<PathBuf>, exec: Execution) -> CmdResult {
    let matrix = PreorderMatrix::new(values, exec)?;
    let violation = matrix
        .transitivity_violation(exec)
        .map(|(i, j, k)| [values[i].clone(), values[j].clone(), values[k].clone()]);
    let mut w = sink(out)?;
    if csv_out {
        let mut cw = csv::Writer::from_writer(&mut w);
        for (i, a) in values.iter().enumerate() {
            for (j, b) in values.iter().enumerate() {
                cw.serialize(PreorderRow { alpha: a, beta: b, precedes: matrix.get(i, j) })?;
            }
        }
        cw.flush()?;
    } else {
        let report = PreorderOutput {
            values,
            matrix: matrix.rows(),
            violation: violation.clone(),
            classes: matrix.equivalence_classes(),
        };
        serde_json::to_writer_pretty(&mut w, &report)?;
        writeln!(w)?;
    }
    w.flush()?;
    if let Some([a, b, c]) = &violation {
        eprintln!("transitivity violated: {a} ⪯ {b} ⪯ {c}");
        return Ok(NOT_MEMBER);
    }
    Ok(MEMBER)
}
