//! `logtan`: invariants of logarithmic tangent sheaves from the command line.
//!
//! Exit codes: 0 success, 1 corpus mismatch or internal error, 2 usage error or
//! non-normal/dependent input, 3 Bourbaki extraction failure, 4 constraint violation
//! under `--validate`.

mod schema;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use logtan::corpus::{fixtures, run_corpus};
use logtan::logtan::{analyze, bourbaki, validate_theorems, AnalysisOptions, InvariantReport, Sequence};
use logtan::search::{run_search, SearchConfig, SearchOutcome};
use logtan::{AlgebraError, Field, LogtanError, DEFAULT_PRIME};
use schema::*;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOURBAKI: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "logtan", version, about = "Invariants of logarithmic tangent sheaves of pairs of surfaces in P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one pair (f, g) of homogeneous polynomials in x0..x3.
    Analyze(AnalyzeArgs),
    /// Check every built-in worked example against its expected invariants.
    Corpus(CorpusArgs),
    /// Sample random pairs over a prime field and tabulate their invariants.
    Search(SearchArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    /// Coefficient field: `rational` or `fp:P`.
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    field: Field,
    /// Also compute the Bourbaki curve of a minimal-degree section.
    #[arg(long)]
    bourbaki: bool,
    /// Check the invariants against the known bounds; exit 4 on a violation.
    #[arg(long)]
    validate: bool,
    /// Include the graded Betti table of the tangent module.
    #[arg(long)]
    betti: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    field: Field,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    df: u32,
    #[arg(long)]
    dg: u32,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    fp: u32,
    /// Write one CSV row per kept sample to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse_tag(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Corpus(c) => cmd_corpus(&c),
        Command::Search(s) => cmd_search(&s),
    }
}

fn error_output(err: &LogtanError) -> (ErrorOutput, u8) {
    let (kind, code) = match err {
        LogtanError::Parse(_) => ("parse", EXIT_USAGE),
        LogtanError::InvalidSequence(_) => ("invalid_sequence", EXIT_USAGE),
        LogtanError::InvalidRequest(_) => ("invalid_request", EXIT_USAGE),
        LogtanError::NotNormal { .. } => ("not_normal", EXIT_USAGE),
        LogtanError::Dependent => ("dependent", EXIT_USAGE),
        LogtanError::Algebra(AlgebraError::InvalidPrime(_) | AlgebraError::InvalidFieldTag(_)) => {
            ("invalid_request", EXIT_USAGE)
        }
        LogtanError::BourbakiFailed(_) => ("bourbaki", EXIT_BOURBAKI),
        _ => ("internal", EXIT_FAILURE),
    };
    let (dimension, divisor_degree) = match err {
        LogtanError::NotNormal { dimension, divisor_degree } => (Some(*dimension), Some(*divisor_degree)),
        _ => (None, None),
    };
    (ErrorOutput { kind: kind.into(), message: err.to_string(), dimension, divisor_degree }, code)
}

fn cmd_analyze(args: &AnalyzeArgs) -> ExitCode {
    let start = Instant::now();
    let mut out = AnalyzeOutput {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").into(),
        input: AnalyzeInput { f: args.f.clone(), g: args.g.clone(), swapped: false },
        field: args.field.to_string(),
        report: None,
        bourbaki: None,
        betti: None,
        violations: None,
        timing_ms: 0,
        error: None,
    };
    let code = match run_analyze(args, &mut out) {
        Ok(()) if out.violations.as_ref().is_some_and(|v| !v.is_empty()) => EXIT_VIOLATION,
        Ok(()) => 0,
        Err(err) => {
            let (e, code) = error_output(&err);
            out.error = Some(e);
            code
        }
    };
    out.timing_ms = start.elapsed().as_millis() as u64;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        print!("{}", analyze_text(&out));
        if let Some(e) = &out.error {
            eprintln!("error: {}", e.message);
        }
    }
    ExitCode::from(code)
}

fn run_analyze(args: &AnalyzeArgs, out: &mut AnalyzeOutput) -> Result<(), LogtanError> {
    let seq = Sequence::parse(&args.f, &args.g, args.field)?;
    out.input.swapped = seq.swapped();
    let analysis = analyze(&seq, &AnalysisOptions::default())?;
    if args.betti {
        out.betti = Some((&analysis.betti).into());
    }
    if args.validate {
        out.violations = Some(validate_theorems(&analysis.report));
    }
    let b = if args.bourbaki { bourbaki(&analysis) } else { Ok(None) };
    out.report = Some(analysis.report.clone());
    out.bourbaki = b?;
    Ok(())
}

fn report_text(s: &mut String, r: &InvariantReport) {
    let _ = writeln!(s, "degrees      d_f = {}, d_g = {}, d = {}, m0 = {}", r.d_f, r.d_g, r.d, r.m0);
    let _ = writeln!(s, "exponents    {:?} (e = {})", r.exponents, r.e);
    let _ = writeln!(s, "m            {}", r.m);
    let _ = writeln!(s, "Bour         {}", r.bour);
    let _ = writeln!(s, "chern        c1 = {}, c2 = {}, c3 = {}", r.c1, r.c2, r.c3);
    let _ = writeln!(s, "h0(T)        {}", r.h0_t);
    let _ = writeln!(s, "gpdim        {} ({} generators)", r.gpdim, r.generator_count);
    let _ = writeln!(s, "flags        {}", r.flag_string());
    if let Some(sc) = &r.schemes {
        let _ = writeln!(
            s,
            "schemes      V(Fitt0): dim {} deg {}; V(Ann): dim {} deg {}; coincide: {}",
            sc.fitting.dimension, sc.fitting.degree, sc.annihilator.dimension, sc.annihilator.degree, sc.coincide
        );
    }
}

fn analyze_text(out: &AnalyzeOutput) -> String {
    let mut s = String::new();
    if let Some(r) = &out.report {
        report_text(&mut s, r);
    }
    if let Some(b) = &out.betti {
        let _ = writeln!(s, "betti\n{}", b.grid);
    }
    if let Some(b) = &out.bourbaki {
        let _ = writeln!(s, "bourbaki     nu = ({}) of degree {}", b.nu.join(", "), b.nu_degree);
        let _ = writeln!(s, "             I_B = ({})", b.ideal.join(", "));
        let _ = writeln!(
            s,
            "             deg = {}, p_a = {}, complete intersection: {}",
            b.deg_b, b.p_a, b.complete_intersection
        );
    }
    if let Some(v) = &out.violations {
        if v.is_empty() {
            let _ = writeln!(s, "constraints  all satisfied");
        }
        for x in v {
            let _ = writeln!(s, "violation    {}: {}", x.rule, x.detail);
        }
    }
    s
}

fn cmd_corpus(args: &CorpusArgs) -> ExitCode {
    let outcomes = run_corpus(&fixtures(), args.field);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let failed = outcomes.len() - passed;
    if args.json {
        let doc = CorpusOutput {
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").into(),
            field: args.field.to_string(),
            passed,
            failed,
            fixtures: &outcomes,
        };
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        for o in &outcomes {
            let verdict = if o.passed { "pass" } else { "FAIL" };
            let line = format!("{verdict}  {:width$}  {}", o.name, o.mismatches.join("; "));
            println!("{}", line.trim_end());
        }
        println!("{passed} passed, {failed} failed over {}", args.field);
    }
    ExitCode::from(if failed == 0 { 0 } else { EXIT_FAILURE })
}

fn search_summary(outcome: &SearchOutcome) -> SearchSummary {
    SearchSummary {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").into(),
        config: outcome.config.clone(),
        draws: outcome.draws,
        kept: outcome.samples.len(),
        non_normal: outcome.non_normal,
        dependent: outcome.dependent,
        histogram: outcome
            .histogram()
            .into_iter()
            .map(|((m, e, bour, c3), count)| HistogramRow { m, e, bour, c3, count })
            .collect(),
        anomalies: outcome.anomalies.clone(),
    }
}

fn cmd_search(args: &SearchArgs) -> ExitCode {
    let cfg = SearchConfig { d_f: args.df, d_g: args.dg, count: args.count, seed: args.seed, prime: args.fp };
    let outcome = match run_search(&cfg) {
        Ok(o) => o,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(error_output(&err).1);
        }
    };
    if let Some(path) = &args.out {
        if let Err(err) = std::fs::write(path, outcome.to_csv()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    let summary = search_summary(&outcome);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
    } else {
        println!(
            "{} samples kept from {} draws ({} non-normal, {} dependent) over F_{}",
            summary.kept, summary.draws, summary.non_normal, summary.dependent, cfg.prime
        );
        println!("{:>4} {:>4} {:>5} {:>5} {:>7} {:>7}", "m", "e", "Bour", "c3", "count", "rate");
        for row in &summary.histogram {
            let rate = row.count as f64 / summary.kept as f64;
            println!("{:>4} {:>4} {:>5} {:>5} {:>7} {:>7.3}", row.m, row.e, row.bour, row.c3, row.count, rate);
        }
        for a in &summary.anomalies {
            println!("anomaly {:?} at draw {}: {} | f = {} | g = {}", a.kind, a.index, a.detail, a.f, a.g);
        }
    }
    ExitCode::SUCCESS
}
