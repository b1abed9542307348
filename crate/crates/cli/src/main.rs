use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use godeaux_core::arith::{Cyc3, Cyc4, Cyc5, Field, Rational};
use godeaux_core::quotient::{GradedPresentation, HilbertTable};
use godeaux_core::scenarios::{
    self, render_census, run_sc, run_z3, run_z4, run_z5, z3_data, z4_presentation, z5_invariant_presentation,
    Mode, VerificationReport,
};

/// Exit code for failing checks.
const EXIT_FAIL: u8 = 1;
/// Exit code for usage, input and I/O errors.
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "godeaux", version, about = "Exact graded-ring computations and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report each check.
    Verify(VerifyArgs),
    /// Print the (degree, weight) dimension table of a graded quotient.
    Hilbert(HilbertArgs),
    /// Compute generators and relations of the glued subring of k[a,b,c].
    ScBuild(ScBuildArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scenario {
    Z3,
    Z4,
    Z5,
    Sc,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct ParamArgs {
    /// Value of alpha for the Z/3 ring.
    #[arg(long, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    beta: Rational,
    #[arg(long, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    gamma: Rational,
}

impl ParamArgs {
    fn triple(&self) -> [Rational; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    scenario: Scenario,
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    #[command(flatten)]
    params: ParamArgs,
    /// Seed for random parameter samples and coefficients.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report timing_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Z3,
    Z4,
    #[value(name = "z5-invariants")]
    Z5Invariants,
    Sc,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long, value_enum, conflicts_with = "ring", required_unless_present = "ring")]
    preset: Option<Preset>,
    /// Ring file: descriptor lines plus `name = polynomial` relations.
    #[arg(long)]
    ring: Option<PathBuf>,
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct ScBuildArgs {
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Directory for generators.txt, census.txt and comparison.txt.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("'{s}' is not a rational number: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_ERROR);
    }
    let outcome = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Hilbert(args) => hilbert(args).map(|()| true),
        Command::ScBuild(args) => sc_build(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

/// Honours `GODEAUX_THREADS` as a cap on worker threads.
fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("GODEAUX_THREADS") {
        let n: usize = v.parse().with_context(|| format!("GODEAUX_THREADS must be a positive integer, got '{v}'"))?;
        if n == 0 {
            bail!("GODEAUX_THREADS must be a positive integer, got '{v}'");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let mode = match args.mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Numeric => Mode::Numeric,
        ModeArg::Both => Mode::Both,
    };
    let params = args.params.triple();
    let d = args.max_degree;
    let seed = args.seed;
    let run = |s: Scenario| -> Result<VerificationReport> {
        let report = match s {
            Scenario::Z3 => run_z3(&params, mode, d, seed)?,
            Scenario::Z4 => run_z4(seed, d)?,
            Scenario::Z5 => run_z5(d)?,
            Scenario::Sc => run_sc(d)?,
            Scenario::All => unreachable!("expanded before running"),
        };
        report.validate().map_err(|e| anyhow!(e))?;
        Ok(report)
    };
    let suites = match args.scenario {
        Scenario::All => vec![Scenario::Z3, Scenario::Z4, Scenario::Z5, Scenario::Sc],
        s => vec![s],
    };
    let mut reports: Vec<VerificationReport> = {
        use rayon::prelude::*;
        suites.par_iter().map(|&s| run(s)).collect::<Result<_>>()?
    };
    if args.no_timing {
        reports.iter_mut().for_each(|r| r.timing_ms = 0);
    }
    let text = match (args.format, args.scenario) {
        (Format::Json, Scenario::All) => serde_json::to_string_pretty(&reports)? + "\n",
        (Format::Json, _) => serde_json::to_string_pretty(&reports[0])? + "\n",
        (Format::Table, _) => reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
    };
    emit(&text, args.report.as_deref())?;
    Ok(reports.iter().all(VerificationReport::passed))
}

fn table_of<F: Field>(pres: &GradedPresentation<F>, d: u32) -> Result<HilbertTable> {
    Ok(pres.hilbert(d)?)
}

fn hilbert(args: HilbertArgs) -> Result<()> {
    let d = args.max_degree;
    let table = match (args.preset, &args.ring) {
        (Some(Preset::Z3), _) => {
            let data = z3_data()?;
            table_of(&data.specialize(&args.params.triple())?, d)?
        }
        (Some(Preset::Z4), _) => table_of(&z4_presentation(args.seed, d)?.presentation, d)?,
        (Some(Preset::Z5Invariants), _) => {
            let full = table_of(&z5_invariant_presentation()?, d)?;
            HilbertTable::new(1, full.rows().iter().map(|r| vec![r[0]]).collect())
        }
        (Some(Preset::Sc), _) => {
            let pred = scenarios::sc_predicate(&scenarios::sc_data()?)?;
            let dims = pred.subspaces(d)?.iter().map(|v| vec![v.dim() as u64]).collect();
            HilbertTable::new(1, dims)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            ring_file_table(&text, d).with_context(|| format!("in {}", path.display()))?
        }
        (None, None) => bail!("either --preset or --ring is required"),
    };
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&table)? + "\n",
        Format::Table => table.to_string(),
    };
    emit(&text, None)
}

/// Dispatches on the file's `field` line.
fn ring_file_table(text: &str, d: u32) -> Result<HilbertTable> {
    let field = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .find_map(|l| l.strip_prefix("field").map(str::trim))
        .unwrap_or("Q");
    match field {
        "Q" => table_of(&GradedPresentation::<Rational>::parse(text)?, d),
        "Q(z3)" => table_of(&GradedPresentation::<Cyc3>::parse(text)?, d),
        "Q(z4)" => table_of(&GradedPresentation::<Cyc4>::parse(text)?, d),
        "Q(z5)" => table_of(&GradedPresentation::<Cyc5>::parse(text)?, d),
        other => bail!("unsupported field '{other}'"),
    }
}

fn sc_build(args: ScBuildArgs) -> Result<bool> {
    let build = scenarios::sc_build(args.max_degree)?;
    let pres = &build.presentation;
    fs::create_dir_all(&args.out_dir).with_context(|| format!("creating {}", args.out_dir.display()))?;
    let write = |name: &str, body: String| -> Result<()> {
        let path = args.out_dir.join(name);
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))
    };

    let generators: String = pres.generators.iter().map(|(g, _)| format!("{g}\n")).collect();
    write("generators.txt", generators)?;

    let mut census = format!("max_degree {}\n", pres.max_degree);
    census += &format!("generators {}\n", render_census(&pres.generator_census()));
    census += &format!("relations {}\n", render_census(&pres.relation_census));
    census += &format!("total {}\n", pres.total_relations());
    if let Some(w) = &pres.warning {
        census += &format!("warning: {w}\n");
    }
    write("census.txt", census.clone())?;

    let mut comparison = String::new();
    for (check, (name, g)) in build.comparison.membership.iter().zip(&build.data.claimed) {
        comparison += &format!("{name} = {g}: in computed subring: {}\n", check.member);
    }
    for f in &build.comparison.generation_failures {
        comparison += &format!(
            "degree {}: listed generators span {} of {} dimensions{}\n",
            f.degree,
            f.generated_dim,
            f.expected_dim,
            if f.contained { "" } else { " and leave the subring" }
        );
    }
    comparison += &format!("listed generators generate up to degree {}: {}\n", pres.max_degree, build.comparison.passed());
    write("comparison.txt", comparison)?;

    print!("{census}");
    Ok(build.comparison.membership.iter().all(|c| c.member))
}
