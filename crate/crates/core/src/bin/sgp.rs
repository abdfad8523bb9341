//! `sgp`: command-line front end for the semigroup toolkit.
//!
//! Machine output goes to stdout; diagnostics (timings, stream counts when
//! records occupy stdout) go to stderr. Exit codes: 0 success or pass, 1
//! verification found violations, 2 usage or input errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use sgp::classify::{construct_delta_fm, construct_delta_minus, construct_half_line};
use sgp::enumerate::{
    enumerate_by_genus, theorem_ids, verify_with_cap, EnumerationQuery, Predicate,
    VerificationReport, DEFAULT_GENUS_CAP,
};
use sgp::record::SemigroupRecord;
use sgp::{Error, IntSet, NumericalSemigroup};

#[derive(Parser)]
#[command(name = "sgp", version, about = "Exact-arithmetic toolkit for numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full invariant record of one semigroup
    Info(InfoArgs),
    /// Stream every semigroup up to a genus bound, one record per line
    Enumerate(EnumerateArgs),
    /// Check a registered claim (or `all`) over the enumerated universe
    Verify(VerifyArgs),
    /// Build a member of a named family and print its record
    Construct(ConstructArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[command(group(ArgGroup::new("spec").required(true)))]
struct InfoArgs {
    /// Generators, comma separated (need not be minimal)
    #[arg(long, group = "spec", value_name = "A,B,...")]
    gens: Option<String>,

    /// Gaps, comma separated
    #[arg(long, group = "spec", value_name = "G1,G2,...")]
    gaps: Option<String>,

    /// Parameters m,t of the half-line with 2m-t removed
    #[arg(long, group = "spec", value_name = "M,T")]
    delta_minus: Option<String>,

    /// Parameters F,m of the multiples-of-m family
    #[arg(long, group = "spec", value_name = "F,M")]
    delta_fm: Option<String>,

    /// Multiplicity of a half-line
    #[arg(long, group = "spec", value_name = "M")]
    half_line: Option<i64>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest genus to visit
    #[arg(long)]
    max_genus: u32,

    /// none | symmetric | almost_symmetric | med | max_reduced_type
    #[arg(long, default_value = "none")]
    filter: String,

    /// Write records to this file; the count then goes to stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registry id, or `all` for the whole registry
    theorem: String,

    /// Largest genus to check
    #[arg(long)]
    max_genus: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Half-line of multiplicity m with 2m-t removed
    DeltaMinus {
        multiplicity: i64,
        semigroup_type: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiples of m together with everything above F
    DeltaFm {
        frobenius: i64,
        multiplicity: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Half-line of multiplicity m
    HalfLine {
        multiplicity: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Info(args) => {
            let s = build_from_spec(&args)?;
            emit_record(&s, args.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => {
            let (s, format) = match args.family {
                Family::DeltaMinus {
                    multiplicity,
                    semigroup_type,
                    format,
                } => (construct_delta_minus(multiplicity, semigroup_type)?, format),
                Family::DeltaFm {
                    frobenius,
                    multiplicity,
                    format,
                } => (construct_delta_fm(frobenius, multiplicity)?, format),
                Family::HalfLine {
                    multiplicity,
                    format,
                } => (construct_half_line(multiplicity)?, format),
            };
            emit_record(&s, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_list(text: &str) -> sgp::Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| Error::BadParameters(format!("`{part}` is not an integer")))
        })
        .collect()
}

fn parse_pair(text: &str) -> sgp::Result<(i64, i64)> {
    match parse_list(text)?.as_slice() {
        &[a, b] => Ok((a, b)),
        other => Err(Error::BadParameters(format!(
            "expected two comma-separated integers, got {}",
            other.len()
        ))),
    }
}

fn build_from_spec(args: &InfoArgs) -> sgp::Result<NumericalSemigroup> {
    if let Some(text) = &args.gens {
        return NumericalSemigroup::from_generators(&parse_list(text)?);
    }
    if let Some(text) = &args.gaps {
        return NumericalSemigroup::from_gaps(&IntSet::from_vec(parse_list(text)?));
    }
    if let Some(text) = &args.delta_minus {
        let (multiplicity, semigroup_type) = parse_pair(text)?;
        return construct_delta_minus(multiplicity, semigroup_type);
    }
    if let Some(text) = &args.delta_fm {
        let (frobenius, multiplicity) = parse_pair(text)?;
        return construct_delta_fm(frobenius, multiplicity);
    }
    if let Some(multiplicity) = args.half_line {
        return construct_half_line(multiplicity);
    }
    unreachable!("the argument group requires one spec")
}

fn emit_record(s: &NumericalSemigroup, format: Format) {
    let record = SemigroupRecord::from_semigroup(s);
    match format {
        Format::Text => print!("{}", record.to_text()),
        Format::Json => println!("{}", record.to_json()),
    }
}

/// The genus cap, overridable through `SGP_GENUS_CAP`.
fn genus_cap() -> sgp::Result<u32> {
    match std::env::var("SGP_GENUS_CAP") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::BadParameters(format!(
                "SGP_GENUS_CAP must be a nonnegative integer, got `{text}`"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_GENUS_CAP),
        Err(e) => Err(Error::BadParameters(format!("SGP_GENUS_CAP: {e}"))),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let filter: Predicate = args.filter.parse()?;
    let query = EnumerationQuery::new(args.max_genus)
        .with_filter(filter)
        .with_cap(genus_cap()?);
    let stream = enumerate_by_genus(&query)?;
    let mut count = 0u64;
    match &args.out {
        Some(path) => {
            let mut sink = BufWriter::new(File::create(path)?);
            for s in stream {
                writeln!(sink, "{}", SemigroupRecord::from_semigroup(&s).to_json())?;
                count += 1;
            }
            sink.flush()?;
            println!("{count}");
        }
        None => {
            let mut sink = BufWriter::new(io::stdout().lock());
            for s in stream {
                writeln!(sink, "{}", SemigroupRecord::from_semigroup(&s).to_json())?;
                count += 1;
            }
            sink.flush()?;
            eprintln!("{count}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let cap = genus_cap()?;
    let ids: Vec<&str> = if args.theorem == "all" {
        theorem_ids()
    } else {
        vec![args.theorem.as_str()]
    };
    let mut all_passed = true;
    let mut sink = io::stdout().lock();
    for id in ids {
        let report = verify_with_cap(id, args.max_genus, cap)?;
        all_passed &= report.passed();
        match args.format {
            Format::Json => writeln!(sink, "{}", serde_json::to_string(&report)?)?,
            Format::Text => print_report(&mut sink, &report)?,
        }
        sink.flush()?;
        eprintln!(
            "{}: {} semigroups in {:.1?}",
            report.theorem_id, report.universe_size, report.elapsed
        );
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_report(sink: &mut impl Write, report: &VerificationReport) -> io::Result<()> {
    if report.passed() {
        writeln!(
            sink,
            "{}: pass ({} checked)",
            report.theorem_id, report.universe_size
        )
    } else {
        writeln!(
            sink,
            "{}: FAIL ({} violations, {} checked)",
            report.theorem_id,
            report.violations.len(),
            report.universe_size
        )?;
        for v in &report.violations {
            writeln!(
                sink,
                "  gaps {}: {} (lhs {}, rhs {})",
                v.gaps, v.claim, v.lhs, v.rhs
            )?;
        }
        Ok(())
    }
}
