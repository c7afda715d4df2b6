//! `schubert` — analyze Schubert determinantal ideals from the command line.
//!
//! Subcommands: `analyze`, `survey`, `witness`, `groebner`. Exit codes:
//! 0 pass, 2 parse, 3 io, 4 invalid certificate request, 5 order gating,
//! 6 limits, 1 internal invariant violation (a verified claim failing, which
//! is never expected).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use schubert_core::report::{CoverEntry, GroebnerReport, SurveySummary, WitnessReport};
use schubert_core::{
    all_permutations, analyze, ascii_render, buchberger_check, buchberger_run, elusive_minors,
    minimality_certificate, minor_polynomial, reduce, to_sorted_json, try_initial_term_cover,
    BuchbergerLimits, Coeff, Error, GroebnerOutcome, Minor, Permutation, Poly, TermOrder,
};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Minimal generators, certificates and Gröbner checks for Schubert determinantal ideals"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Worker threads for surveys (default: all cores). Output order is
    /// fixed regardless.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    /// Safety bound on the ambient size n.
    #[arg(long, global = true, default_value_t = 8, value_name = "N")]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one permutation: diagram, essential set, minimal
    /// generators, complete-intersection verdict.
    Analyze {
        /// One-line notation: "3142", or comma-separated "6,1,9,7,2,3,4,5,8".
        perm: String,
        /// Include a checked minimality certificate per generator.
        #[arg(long)]
        certificates: bool,
    },
    /// One JSONL analysis record per permutation of {1..n}, then a summary
    /// line with the complete-intersection count.
    Survey { n: usize },
    /// Minimality certificate for one elusive minor: witness point, value,
    /// and vanishing checks for every other essential minor.
    Witness {
        perm: String,
        /// Row index set, e.g. --I 2,3
        #[arg(long = "I", value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        /// Column index set, e.g. --J 1,2
        #[arg(long = "J", value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Verify that the minimal generators are a Gröbner basis.
    Groebner {
        perm: String,
        /// Term order: antidiagonal (any w) or diagonal (vexillary w).
        #[arg(long, value_enum)]
        order: OrderArg,
        /// cover: initial-term divisibility map; buchberger: S-pair reduction.
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Run the diagonal order on non-vexillary input anyway (exploratory;
        /// no verified claim covers that combination).
        #[arg(long)]
        force: bool,
        /// Bound on the number of basis elements.
        #[arg(long, default_value_t = 256, value_name = "B")]
        max_basis: usize,
        /// In cover mode, include a reduction trace for every non-elusive
        /// essential minor (can be large; implies --json for the traces).
        #[arg(long)]
        traces: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Antidiag,
    Diag,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Cover,
    Buchberger,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } => 2,
            Error::NotEssential { .. }
            | Error::NotElusive { .. }
            | Error::NotInDiagram { .. }
            | Error::InvalidShift { .. } => 4,
            Error::DiagonalOrderRequiresVexillary { .. } => 5,
            Error::LimitsExceeded { .. } => 6,
            Error::InvariantViolation { .. } => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(3, format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut sink = open_sink(&cli.out)?;
    match &cli.command {
        Command::Analyze { perm, certificates } => {
            let w: Permutation = perm.parse().map_err(Failure::from)?;
            let report = analyze(&w, *certificates)?;
            if cli.json {
                writeln!(sink, "{}", report.to_json())?;
            } else {
                write!(sink, "{}", report.render_text())?;
            }
        }
        Command::Survey { n } => {
            run_survey(&cli, *n, &mut sink)?;
        }
        Command::Witness { perm, rows, cols } => {
            let w: Permutation = perm.parse().map_err(Failure::from)?;
            let minor = Minor::new(rows.clone(), cols.clone())
                .map_err(|e| Failure::new(4, format!("invalid minor request: {e}")))?;
            let certificate = minimality_certificate(&minor, &w)?;
            if cli.json {
                let report = WitnessReport { w, certificate };
                writeln!(sink, "{}", to_sorted_json(&report))?;
            } else {
                writeln!(sink, "witness point for {} of w = {w}:", certificate.minor)?;
                writeln!(sink, "{}", certificate.point.render())?;
                writeln!(sink, "value at point: {}", certificate.value_at_point)?;
                writeln!(
                    sink,
                    "vanishing checks: {} other essential minors all evaluate to 0",
                    certificate.vanishing_checked
                )?;
            }
        }
        Command::Groebner {
            perm,
            order,
            mode,
            force,
            max_basis,
            traces,
        } => {
            run_groebner(
                &cli, perm, *order, *mode, *force, *max_basis, *traces, &mut sink,
            )?;
        }
    }
    sink.flush()?;
    Ok(())
}

/// Parse for the exhaustive paths, which honor the `--max-n` safety bound.
fn parse_perm(text: &str, max_n: usize) -> Result<Permutation, Failure> {
    let w: Permutation = text.parse().map_err(Failure::from)?;
    if w.n() > max_n {
        return Err(Failure::new(
            6,
            format!("n = {} exceeds --max-n {max_n}", w.n()),
        ));
    }
    Ok(w)
}

fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run_survey(cli: &Cli, n: usize, sink: &mut Box<dyn Write>) -> Result<(), Failure> {
    if n < 1 || n > cli.max_n {
        return Err(Failure::new(
            6,
            format!("survey size {n} outside 1..={}", cli.max_n),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .map_err(|e| Failure::new(1, format!("thread pool: {e}")))?;
    let words: Vec<Permutation> = all_permutations(n).collect();
    let records: Vec<(String, bool)> = pool.install(|| {
        words
            .par_iter()
            .map(|w| {
                let report = analyze(w, false)?;
                Ok((report.to_json(), report.ci.by_count))
            })
            .collect::<Result<Vec<_>, Error>>()
    })?;
    let mut ci_count = 0usize;
    for (line, ci) in &records {
        writeln!(sink, "{line}")?;
        ci_count += usize::from(*ci);
    }
    let summary = SurveySummary {
        n,
        total: records.len(),
        ci_count,
    };
    writeln!(sink, "{}", to_sorted_json(&summary))?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_groebner(
    cli: &Cli,
    perm: &str,
    order: OrderArg,
    mode: ModeArg,
    force: bool,
    max_basis: usize,
    traces: bool,
    sink: &mut Box<dyn Write>,
) -> Result<(), Failure> {
    let w = parse_perm(perm, cli.max_n)?;
    let term_order = match order {
        OrderArg::Antidiag => TermOrder::antidiagonal(w.n()),
        OrderArg::Diag => TermOrder::diagonal(w.n()),
    };
    if !force {
        schubert_core::verify::order_admissible(&w, &term_order)?;
    }
    let limits = BuchbergerLimits {
        max_n: cli.max_n,
        max_basis,
    };
    let mut report = GroebnerReport {
        w: w.clone(),
        order: term_order.name().to_string(),
        mode: match mode {
            ModeArg::Cover => "cover".to_string(),
            ModeArg::Buchberger => "buchberger".to_string(),
        },
        pass: false,
        forced: force,
        pairs_checked: None,
        pairs_skipped: None,
        cover: None,
        uncovered: None,
        failure: None,
        traces: None,
    };
    match mode {
        ModeArg::Cover => {
            let (cover, uncovered) = try_initial_term_cover(&w, &term_order);
            report.pass = uncovered.is_empty();
            report.cover = Some(
                cover
                    .into_iter()
                    .map(|(minor, by)| CoverEntry { minor, by })
                    .collect(),
            );
            if !uncovered.is_empty() {
                report.uncovered = Some(uncovered);
            }
            if traces {
                report.traces = Some(membership_traces(&w, &term_order));
            }
        }
        ModeArg::Buchberger => {
            if traces {
                eprintln!("note: --traces applies to cover mode only, ignoring");
            }
            let outcome = if force {
                buchberger_run::<Coeff>(&w, &term_order, &limits)?
            } else {
                buchberger_check::<Coeff>(&w, &term_order, &limits)?
            };
            match outcome {
                GroebnerOutcome::Pass {
                    pairs_checked,
                    pairs_skipped,
                } => {
                    report.pass = true;
                    report.pairs_checked = Some(pairs_checked);
                    report.pairs_skipped = Some(pairs_skipped);
                }
                GroebnerOutcome::Fail {
                    first,
                    second,
                    remainder,
                } => {
                    report.failure = Some(format!(
                        "S-polynomial of {first} and {second} leaves remainder {remainder}"
                    ));
                }
            }
        }
    }
    if cli.json {
        writeln!(sink, "{}", to_sorted_json(&report))?;
    } else {
        render_groebner_text(&report, &w, sink)?;
    }
    sink.flush()?;
    if report.pass {
        Ok(())
    } else if force {
        Err(Failure::new(
            1,
            format!(
                "{} check failed under the {} order (exploratory run; no verified claim covers this combination)",
                report.mode, report.order
            ),
        ))
    } else {
        Err(Error::InvariantViolation {
            msg: format!(
                "{} check failed for w = {w} under the {} order: {}",
                report.mode,
                report.order,
                report
                    .failure
                    .clone()
                    .or_else(|| report
                        .uncovered
                        .as_ref()
                        .map(|u| format!("{} essential minors uncovered", u.len())))
                    .unwrap_or_default()
            ),
        }
        .into())
    }
}

/// Ideal-membership certificates: a reduction trace of every non-elusive
/// essential minor against the elusive basis.
fn membership_traces(w: &Permutation, order: &TermOrder) -> Vec<serde_json::Value> {
    let gens = elusive_minors(w);
    let basis: Vec<Poly> = gens.elusive.iter().map(minor_polynomial).collect();
    gens.essential
        .iter()
        .filter(|em| gens.elusive.binary_search(&em.minor).is_err())
        .map(|em| {
            let trace = reduce(&minor_polynomial::<Coeff>(&em.minor), &basis, order);
            serde_json::json!({
                "minor": serde_json::to_value(&em.minor).expect("minor serialization"),
                "trace": trace.to_json(order),
            })
        })
        .collect()
}

fn render_groebner_text(
    report: &GroebnerReport,
    w: &Permutation,
    sink: &mut Box<dyn Write>,
) -> Result<(), Failure> {
    writeln!(
        sink,
        "w = {w}  order = {}  mode = {}{}",
        report.order,
        report.mode,
        if report.forced { "  (forced)" } else { "" }
    )?;
    writeln!(sink, "{}", ascii_render(w))?;
    if let Some(cover) = &report.cover {
        writeln!(sink, "initial-term cover ({} assignments):", cover.len())?;
        for entry in cover {
            writeln!(sink, "  {}  covered by  {}", entry.minor, entry.by)?;
        }
        if let Some(uncovered) = &report.uncovered {
            writeln!(sink, "uncovered: {}", uncovered.len())?;
            for m in uncovered {
                writeln!(sink, "  {m}")?;
            }
        }
    }
    if let (Some(checked), Some(skipped)) = (report.pairs_checked, report.pairs_skipped) {
        writeln!(
            sink,
            "S-pairs: {checked} reduced to 0, {skipped} skipped by the coprimality criterion"
        )?;
    }
    if let Some(failure) = &report.failure {
        writeln!(sink, "failure: {failure}")?;
    }
    writeln!(
        sink,
        "result: {}",
        if report.pass { "pass" } else { "fail" }
    )?;
    Ok(())
}
