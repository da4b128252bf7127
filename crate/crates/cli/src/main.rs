//! Command-line front end for the decomposition engine.
//!
//! Every number printed is exact: rationals appear as `p/q`, integers bare.
//! Output is deterministic — identical invocations produce identical bytes —
//! so runs can be diffed or committed as golden files. Strata enumerate in
//! the engine's canonical order.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use semismall_core::{
    ade_intersection_matrix, check_orthogonality, check_semismall, decompose_hilbert,
    decompose_nested, decompose_parabolic, decompose_wreath, decomposition_to_json,
    fibre_product_dim_bound, goettsche_motive_series, goettsche_series, literal_monomial_count,
    mumford_projector, parabolic_motive_series, parabolic_series, realization_to_json,
    realize_in_mode, realize_rank, records_to_csv, run_selfcheck, wreath_class_count, AdeKind,
    Atom, Context, Decomposition, Error, GradedPoly, HodgeDatum, MapDescriptor, MotiveSeries,
    RealizationMode, TruncatedSeries, Verdict,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "semismall",
    version,
    about = "Exact motivic decompositions of semismall maps attached to surfaces"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Hodge datum JSON (repeatable). The first 2-dimensional atom becomes
    /// the surface X, the first 1-dimensional one the divisor D; anything
    /// not supplied falls back to P2 and P1.
    #[arg(long = "input", global = true, value_name = "hodge.json")]
    inputs: Vec<PathBuf>,

    /// Truncation bound for the point-count variable t.
    #[arg(long, global = true, value_name = "N", default_value_t = 8)]
    trunc_t: u32,

    /// Truncation bound for the flag variable s.
    #[arg(long, global = true, value_name = "N", default_value_t = 4)]
    trunc_s: u32,

    /// Realization applied to each motive.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Poincare)]
    mode: ModeArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,

    /// Report the literal monomial labeling of wreath strata alongside the
    /// stratum count (documentation-only: the labeling undercounts).
    #[arg(long, global = true)]
    literal_monomials: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Poincare,
    Hodge,
    Euler,
    /// Symbolic: print the motive itself instead of a realization.
    Motive,
}

impl ModeArg {
    fn graded(self) -> Option<RealizationMode> {
        match self {
            ModeArg::Poincare => Some(RealizationMode::Poincare),
            ModeArg::Hodge => Some(RealizationMode::Hodge),
            ModeArg::Euler => Some(RealizationMode::Euler),
            ModeArg::Motive => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFamily {
    /// Hilbert-scheme product over X: Π (1 - z^{2m-2+i} t^m)^{-(-1)^i b_i(X)}.
    Goettsche,
    /// Two-variable parabolic product over (X, D) with one flag weight column.
    Parabolic,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    A,
    D,
    E,
}

impl From<KindArg> for AdeKind {
    fn from(k: KindArg) -> AdeKind {
        match k {
            KindArg::A => AdeKind::A,
            KindArg::D => AdeKind::D,
            KindArg::E => AdeKind::E,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the Hilbert-Chow morphism X^[n] -> X^(n).
    Hilbert { n: u32 },
    /// Decompose the nested Hilbert scheme X^[n,n+1] -> X^(n) x X.
    Nested { n: u32 },
    /// Decompose the parabolic Hilbert-Chow morphism for n free points and
    /// h flag weights l1..lh along the divisor D.
    Parabolic {
        n: u32,
        h: usize,
        #[arg(num_args = 0..)]
        l: Vec<u32>,
    },
    /// Enumerate the wreath strata of Hilb^n of a resolution with r
    /// exceptional curves (conjugacy classes of Z/(r+1) wr S_n).
    Wreath { r: usize, n: u32 },
    /// Expand a closed-form generating function coefficient by coefficient.
    Series {
        #[arg(value_enum)]
        family: SeriesFamily,
    },
    /// Mumford projector for an ADE exceptional configuration.
    Projector {
        #[arg(value_enum, ignore_case = true)]
        kind: KindArg,
        rank: usize,
    },
    /// Classify a stratified map descriptor as small, semismall, or neither.
    Validate { descriptor: PathBuf },
    /// Run the full cross-check battery; exits 0 iff every check passes.
    Selfcheck,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let (x, d) = load_atoms(&cli.opts)?;
    match &cli.command {
        Command::Hilbert { n } => {
            let dec = decompose_hilbert(*n, &x);
            let title = format!("Hilbert-Chow for n = {n} over X = {}", x.name());
            print_decomposition(&title, &dec, &cli.opts)?;
        }
        Command::Nested { n } => {
            let dec = decompose_nested(*n, &x)?;
            let title = format!("nested Hilbert scheme [{n},{}] over X = {}", n + 1, x.name());
            print_decomposition(&title, &dec, &cli.opts)?;
        }
        Command::Parabolic { n, h, l } => {
            if l.len() != *h {
                bail!("parabolic expects h = {h} flag weights, got {}", l.len());
            }
            let dec = decompose_parabolic(*n, l, &x, &d)?;
            let weights: Vec<String> = l.iter().map(u32::to_string).collect();
            let title = format!(
                "parabolic Hilbert-Chow for n = {n}, l = ({}) over (X, D) = ({}, {})",
                weights.join(","),
                x.name(),
                d.name()
            );
            print_decomposition(&title, &dec, &cli.opts)?;
        }
        Command::Wreath { r, n } => return run_wreath(*r, *n, &cli.opts),
        Command::Series { family } => run_series(*family, &x, &d, &cli.opts)?,
        Command::Projector { kind, rank } => return run_projector((*kind).into(), *rank, &cli.opts),
        Command::Validate { descriptor } => return run_validate(descriptor, &cli.opts),
        Command::Selfcheck => return run_selfcheck_cmd(&cli.opts),
    }
    Ok(ExitCode::SUCCESS)
}

/// First 2-dimensional input is X, first 1-dimensional is D; defaults P2, P1.
fn load_atoms(opts: &GlobalOpts) -> Result<(Atom, Atom)> {
    let mut surface: Option<Atom> = None;
    let mut curve: Option<Atom> = None;
    for path in &opts.inputs {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let datum = HodgeDatum::from_json_str(&text, &path.display().to_string())?;
        let atom: Atom = Arc::new(datum);
        match atom.dim() {
            2 if surface.is_none() => surface = Some(atom),
            1 if curve.is_none() => curve = Some(atom),
            _ => {}
        }
    }
    Ok((
        surface.unwrap_or_else(HodgeDatum::projective_plane),
        curve.unwrap_or_else(HodgeDatum::projective_line),
    ))
}

/// Realize a motive, translating the rank-only failure into advice.
fn realize_graded(
    dec: &Decomposition,
    mode: RealizationMode,
) -> Result<GradedPoly> {
    realize_in_mode(&dec.sum, mode).map_err(|e| match e {
        Error::RankOnly { atom } => anyhow!(
            "no graded {mode} realization: {atom} is not proper, so its summands \
             carry a rank but no grading; rerun with --mode motive for the \
             symbolic decomposition"
        ),
        other => other.into(),
    })
}

fn stratum_table(dec: &Decomposition) -> String {
    let header = ["index", "stratum_dim", "fiber_dim", "codim", "twist", "relevant"];
    let mut rows: Vec<[String; 6]> = vec![header.map(str::to_string)];
    for r in &dec.records {
        rows.push([
            r.index.to_string(),
            r.stratum_dim.to_string(),
            r.fiber_dim.to_string(),
            r.codim.to_string(),
            r.twist.to_string(),
            r.relevant.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..6)
        .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn print_decomposition(title: &str, dec: &Decomposition, opts: &GlobalOpts) -> Result<()> {
    match opts.format {
        FormatArg::Csv => print!("{}", records_to_csv(&dec.records)),
        FormatArg::Json => {
            let mut value = decomposition_to_json(dec);
            if let Some(mode) = opts.mode.graded() {
                let poly = realize_graded(dec, mode)?;
                value["realization"] = realization_to_json(&poly, mode);
            }
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            println!("{title} (ambient dim {})", dec.ambient_dim);
            println!("{}", stratum_table(dec));
            println!("motive: {}", dec.sum);
            if let Some(mode) = opts.mode.graded() {
                let poly = realize_graded(dec, mode)?;
                println!("{mode}: {poly}");
            }
        }
    }
    Ok(())
}

/// Wreath covers are affine quotients: rank-only, so the realization column
/// is the twist histogram rather than a Poincaré polynomial.
fn run_wreath(r: usize, n: u32, opts: &GlobalOpts) -> Result<ExitCode> {
    let dec = decompose_wreath(r, n);
    let rank = realize_rank(&dec.sum);
    let oracle = wreath_class_count(r, n);
    let histogram = twist_histogram(&dec);
    let literal = opts
        .literal_monomials
        .then(|| literal_monomial_count(r, n));
    match opts.format {
        FormatArg::Csv => print!("{}", records_to_csv(&dec.records)),
        FormatArg::Json => {
            let mut value = decomposition_to_json(&dec);
            value["rank"] = json!(rank.to_string());
            value["class_count"] = json!(oracle.to_string());
            value["twist_histogram"] = json!(histogram.to_string());
            if let Some(count) = &literal {
                value["literal_monomial_count"] = json!(count.to_string());
                value["literal_monomial_note"] =
                    json!("documentation-only labeling; undercounts the strata");
            }
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            println!(
                "wreath strata for r = {r} exceptional curves, n = {n} (ambient dim {})",
                dec.ambient_dim
            );
            println!("{}", stratum_table(&dec));
            if opts.mode == ModeArg::Motive {
                println!("motive: {}", dec.sum);
            }
            println!("rank: {rank}");
            println!("conjugacy classes: {oracle}");
            println!("twist histogram: {histogram}");
            if let Some(count) = &literal {
                println!("literal monomial labels: {count} (documentation-only; undercounts)");
            }
        }
    }
    if rank != oracle {
        bail!("cross-check failed: decomposition rank {rank} != class count {oracle}");
    }
    Ok(ExitCode::SUCCESS)
}

fn twist_histogram(dec: &Decomposition) -> GradedPoly {
    let mut acc = GradedPoly::zero();
    for r in &dec.records {
        acc = acc.add(&GradedPoly::z_monomial(
            2 * r.twist,
            semismall_core::rat(1),
        ));
    }
    acc
}

fn run_series(family: SeriesFamily, x: &Atom, d: &Atom, opts: &GlobalOpts) -> Result<()> {
    let family_name = match family {
        SeriesFamily::Goettsche => "goettsche",
        SeriesFamily::Parabolic => "parabolic",
    };
    // Exponent grid and stringified coefficients, shared by every format.
    let (bounds, entries): (Vec<u32>, Vec<(Vec<u32>, Value, String)>) = match opts.mode.graded() {
        Some(mode) => {
            let series = match family {
                SeriesFamily::Goettsche => goettsche_series(x, opts.trunc_t, mode)?,
                SeriesFamily::Parabolic => {
                    parabolic_series(x, d, opts.trunc_t, &[opts.trunc_s], mode)?
                }
            };
            collect_graded(&series, mode)?
        }
        None => {
            let series = match family {
                SeriesFamily::Goettsche => goettsche_motive_series(x, opts.trunc_t),
                SeriesFamily::Parabolic => {
                    parabolic_motive_series(x, d, opts.trunc_t, &[opts.trunc_s])?
                }
            };
            collect_motives(&series)?
        }
    };
    match opts.format {
        FormatArg::Csv => {
            let vars = if bounds.len() == 1 { "t" } else { "t,s" };
            println!("{vars},coefficient");
            for (exps, _, text) in &entries {
                let cells: Vec<String> = exps.iter().map(u32::to_string).collect();
                println!("{},\"{}\"", cells.join(","), text.replace('"', "\"\""));
            }
        }
        FormatArg::Json => {
            let coefficients: Vec<Value> = entries
                .iter()
                .map(|(exps, value, _)| json!({"exps": exps, "value": value}))
                .collect();
            let value = json!({
                "family": family_name,
                "mode": mode_name(opts.mode),
                "bounds": bounds,
                "coefficients": coefficients,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            println!(
                "{family_name} series, mode {}, bounds {:?}",
                mode_name(opts.mode),
                bounds
            );
            for (exps, _, text) in &entries {
                let label = match exps.as_slice() {
                    [n] => format!("t^{n}"),
                    [n, l] => format!("t^{n} s^{l}"),
                    other => format!("{other:?}"),
                };
                println!("{label}: {text}");
            }
        }
    }
    Ok(())
}

fn mode_name(mode: ModeArg) -> &'static str {
    match mode {
        ModeArg::Poincare => "poincare",
        ModeArg::Hodge => "hodge",
        ModeArg::Euler => "euler",
        ModeArg::Motive => "motive",
    }
}

fn lattice(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut grid = vec![Vec::new()];
    for &b in bounds {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    grid
}

type SeriesEntries = (Vec<u32>, Vec<(Vec<u32>, Value, String)>);

fn collect_graded(series: &TruncatedSeries, mode: RealizationMode) -> Result<SeriesEntries> {
    let bounds = series.bounds().to_vec();
    let mut entries = Vec::new();
    for exps in lattice(&bounds) {
        let coeff = series.coefficient(&exps)?;
        let value = realization_to_json(&coeff, mode)["coefficients"].clone();
        entries.push((exps, value, coeff.render()));
    }
    Ok((bounds, entries))
}

fn collect_motives(series: &MotiveSeries) -> Result<SeriesEntries> {
    let bounds = series.bounds().to_vec();
    let mut entries = Vec::new();
    for exps in lattice(&bounds) {
        let sum = series.coefficient(&exps)?;
        let text = sum.to_string();
        entries.push((exps, json!(text), text));
    }
    Ok((bounds, entries))
}

fn run_projector(kind: AdeKind, rank: usize, opts: &GlobalOpts) -> Result<ExitCode> {
    let matrix = ade_intersection_matrix(kind, rank)?;
    let ctx: Context = Arc::new(matrix);
    let projector = mumford_projector(&ctx)?;
    let lambda = ctx.invert()?;
    let idempotent = projector.is_idempotent();
    let orthogonal = check_orthogonality(&lambda, &ctx);
    let rows = lambda.to_string_rows();
    match opts.format {
        FormatArg::Csv => {
            for row in &rows {
                println!("{}", row.join(","));
            }
        }
        FormatArg::Json => {
            let value = json!({
                "kind": format!("{kind}{rank}"),
                "labels": ctx.labels(),
                "lambda": rows,
                "idempotent": idempotent,
                "orthogonal": orthogonal,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            println!("configuration: {kind}{rank}");
            println!("labels: {}", ctx.labels().join(", "));
            println!("lambda (inverse intersection matrix):");
            for row in &rows {
                println!("  {}", row.join("  "));
            }
            println!("projector idempotent: {idempotent}");
            println!("lambda * M == I: {orthogonal}");
        }
    }
    if !idempotent || !orthogonal {
        bail!("cross-check failed: the projector algebra identities do not hold");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_validate(path: &PathBuf, opts: &GlobalOpts) -> Result<ExitCode> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let descriptor = MapDescriptor::from_json_str(&text)?;
    let verdict = check_semismall(&descriptor);
    let self_bound = verdict
        .is_semismall()
        .then(|| fibre_product_dim_bound(&descriptor, &descriptor))
        .transpose()?;
    match opts.format {
        FormatArg::Csv => {
            println!("source_dim,verdict,fibre_product_self_bound");
            println!(
                "{},{verdict},{}",
                descriptor.source_dim(),
                self_bound.map_or(String::new(), |b| b.to_string())
            );
        }
        FormatArg::Json => {
            let value = json!({
                "source_dim": descriptor.source_dim(),
                "verdict": verdict.to_string(),
                "fibre_product_self_bound": self_bound,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            println!("source dim: {}", descriptor.source_dim());
            println!("verdict: {verdict}");
            if let Some(bound) = self_bound {
                println!("fibre product bound (against itself): {bound}");
            }
        }
    }
    Ok(if verdict == Verdict::Neither {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn run_selfcheck_cmd(opts: &GlobalOpts) -> Result<ExitCode> {
    let results = run_selfcheck();
    let passed = results.iter().filter(|r| r.passed).count();
    match opts.format {
        FormatArg::Csv => {
            println!("name,passed");
            for r in &results {
                println!("{},{}", r.name, r.passed);
            }
        }
        FormatArg::Json => {
            let value: Vec<Value> = results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        FormatArg::Plain => {
            for r in &results {
                if r.passed {
                    println!("ok {}", r.name);
                } else {
                    println!("FAIL {}: {}", r.name, r.detail);
                }
            }
            println!("selfcheck: {passed}/{} passed", results.len());
        }
    }
    Ok(if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
