//! Command-line front end: every library capability as a subcommand with
//! JSON or text reports, deterministic seeding, and exit codes
//! distinguishing validation errors (2) from certification failures (3).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use vinberg::error::Error;
use vinberg::grading::{CyclicGrading, GradedDims, QuiverPoint};
use vinberg::hitchin::{base_dimension, pointwise_hitchin, HitchinPair};
use vinberg::invariants::{
    cartan_candidate, quasi_split_classify, rank_of_theta, restriction_certificate, InvariantSystem,
};
use vinberg::matrix::Matrix;
use vinberg::report::SCHEMA_VERSION;
use vinberg::sampling::rng_from_seed;
use vinberg::scalar::{self, Scalar};
use vinberg::toledo::{
    am_check, enumerate_toledo_window, toledo_character, AmReport, BilinearFormSpec, HiggsType,
};
use vinberg::verify::{run_verify, Fault, VerifyOptions};
use vinberg::zgrading::ZGrading;

const EXIT_VALIDATION: u8 = 2;
const EXIT_CERTIFICATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "vinberg",
    version,
    about = "Exact certificates for cyclic gradings of sl(n), Toledo invariants, and Hitchin bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the cyclic grading of a profile and verify its soundness.
    Grade(ProfileArgs),
    /// Invariant system of a profile: degrees, Jacobian certificate, and
    /// the restriction to the Cartan candidate.
    Invariants(ProfileArgs),
    /// Rank of the pair, certified against the candidate centralizer.
    Rank(ProfileArgs),
    /// Quasi-split / split classification of a profile.
    Quasisplit(ProfileArgs),
    /// Toledo invariants and degree bounds of a Higgs type.
    Toledo(ToledoArgs),
    /// Admissible degree window for a two-block profile.
    Window(WindowArgs),
    /// Hitchin base dimensions over a genus-g curve.
    HitchinBase(HitchinBaseArgs),
    /// Evaluate the generating invariants on a Higgs field.
    PointHitchin(PointArgs),
    /// Run the full verification sweep.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ProfileArgs {
    /// Summand dimensions, comma separated, e.g. 2,2,3.
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Grading modulus; defaults to the number of summands.
    #[arg(long)]
    m: Option<usize>,
    /// JSON file holding {"m": ..., "dims": [...]}.
    #[arg(long, value_name = "FILE", conflicts_with = "dims")]
    r#in: Option<PathBuf>,
    /// Seed for all randomized certificates.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ToledoArgs {
    /// Block ranks, comma separated.
    #[arg(long, value_delimiter = ',')]
    ranks: Option<Vec<usize>>,
    /// Block degrees, comma separated, summing to zero.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    degrees: Option<Vec<i64>>,
    /// Genus of the underlying curve.
    #[arg(long)]
    genus: Option<usize>,
    /// JSON file holding a full Higgs type, including the generic map
    /// ranks; the flags above assume the maximal ones.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["ranks", "degrees", "genus"])]
    r#in: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WindowArgs {
    /// The two block ranks, comma separated.
    #[arg(long, value_delimiter = ',')]
    ranks: Vec<usize>,
    /// Genus of the underlying curve.
    #[arg(long)]
    genus: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct HitchinBaseArgs {
    /// Pair family; `sl` is the full algebra.
    #[arg(long = "type", value_parser = ["sl"])]
    family: Option<String>,
    /// Rank parameter for --type sl.
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Cyclic profile instead of --type sl.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["family", "n"])]
    dims: Option<Vec<usize>>,
    /// Grading modulus; defaults to the number of summands.
    #[arg(long, requires = "dims")]
    m: Option<usize>,
    /// Genus of the underlying curve.
    #[arg(long)]
    genus: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PointArgs {
    /// Profile for a seeded random Higgs field.
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Grading modulus; defaults to the number of summands.
    #[arg(long)]
    m: Option<usize>,
    /// JSON file holding {"dims": {...}, "maps": [[[...]]]} with rational
    /// entries as strings or integers.
    #[arg(long, value_name = "FILE", conflicts_with = "dims")]
    r#in: Option<PathBuf>,
    /// Seed for the random Higgs field.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for all randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Deliberately corrupt one intermediate to prove detection.
    #[arg(long, hide = true, value_parser = parse_fault)]
    inject_fault: Option<Fault>,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_fault(name: &str) -> Result<Fault, String> {
    Fault::from_name(name).ok_or_else(|| {
        let all: Vec<&str> = Fault::ALL.iter().map(Fault::name).collect();
        format!("unknown fault {name:?}; expected one of {}", all.join(", "))
    })
}

/// Envelope shared by every report: a schema version, the subcommand, and
/// the payload.
#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    report: T,
}

fn max_n_cap() -> Result<usize, Error> {
    match std::env::var("VINBERG_MAX_N") {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| Error::Invalid(format!("VINBERG_MAX_N must be an integer, got {raw:?}"))),
        Err(_) => Ok(8),
    }
}

fn profile_from(
    dims: Option<Vec<usize>>,
    m: Option<usize>,
    input: Option<&PathBuf>,
) -> Result<GradedDims, Error> {
    let profile = match (dims, input) {
        (Some(d), None) => {
            let m = m.unwrap_or(d.len());
            GradedDims::new(m, d)?
        }
        (None, Some(path)) => read_json(path)?,
        (None, None) => {
            return Err(Error::Invalid(
                "a profile is required: pass --dims or --in".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --dims with --in"),
    };
    let cap = max_n_cap()?;
    if profile.n() > cap {
        return Err(Error::Invalid(format!(
            "total dimension {} exceeds the cap {cap} (set VINBERG_MAX_N to raise it)",
            profile.n()
        )));
    }
    Ok(profile)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Error> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Error::Invalid(format!("malformed JSON in {}: {e}", path.display())))
}

fn emit<T: Serialize>(output: &OutputArgs, envelope: &Envelope<T>) -> Result<(), Error> {
    let body = match output.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(envelope)
                .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
            s.push('\n');
            s
        }
        Format::Text => render_text(envelope)?,
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Deterministic plain-text rendering: one `key: value` line per field,
/// nested objects indented.
fn render_text<T: Serialize>(envelope: &Envelope<T>) -> Result<String, Error> {
    let value = serde_json::to_value(envelope)
        .map_err(|e| Error::Invalid(format!("serialization failed: {e}")))?;
    let mut out = String::new();
    render_value(&value, 0, &mut out);
    Ok(out)
}

fn render_value(value: &serde_json::Value, indent: usize, out: &mut String) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, inner) in map {
                match inner {
                    serde_json::Value::Object(_) => {
                        out.push_str(&format!("{}{key}:\n", "  ".repeat(indent)));
                        render_value(inner, indent + 1, out);
                    }
                    serde_json::Value::Array(items)
                        if items.iter().any(serde_json::Value::is_object) =>
                    {
                        out.push_str(&format!("{}{key}:\n", "  ".repeat(indent)));
                        for item in items {
                            out.push_str(&format!("{}-\n", "  ".repeat(indent + 1)));
                            render_value(item, indent + 2, out);
                        }
                    }
                    _ => {
                        out.push_str(&format!(
                            "{}{key}: {}\n",
                            "  ".repeat(indent),
                            compact(inner)
                        ));
                    }
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", "  ".repeat(indent), compact(other))),
    }
}

fn compact(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn envelope<T: Serialize>(command: &'static str, seed: Option<u64>, report: T) -> Envelope<T> {
    Envelope {
        schema: SCHEMA_VERSION,
        command,
        seed,
        report,
    }
}

#[derive(Serialize)]
struct GradeReport {
    profile: GradedDims,
    #[serde(flatten)]
    verification: vinberg::grading::GradingReport,
}

fn cmd_grade(args: ProfileArgs) -> Result<(), Error> {
    let profile = profile_from(args.dims, args.m, args.r#in.as_ref())?;
    let grading = CyclicGrading::from_quiver(&profile);
    let verification = grading.verify();
    let pass = verification.pass;
    emit(
        &args.output,
        &envelope(
            "grade",
            None,
            GradeReport {
                profile: profile.clone(),
                verification,
            },
        ),
    )?;
    if pass {
        Ok(())
    } else {
        Err(Error::Certification(format!(
            "grading verification failed for {}",
            profile.label()
        )))
    }
}

#[derive(Serialize)]
struct InvariantsReport {
    profile: GradedDims,
    k: usize,
    degrees: Vec<usize>,
    jacobian: vinberg::invariants::JacobianCertificate,
    restriction: vinberg::invariants::RestrictionReport,
}

fn cmd_invariants(args: ProfileArgs) -> Result<(), Error> {
    let profile = profile_from(args.dims, args.m, args.r#in.as_ref())?;
    let sys = InvariantSystem::new(&profile)?;
    let jacobian = sys.certify_independence(args.seed)?;
    let candidate = cartan_candidate(&profile)?;
    let restriction = restriction_certificate(&sys, &candidate)?;
    let pass = restriction.pass && jacobian.full_rank;
    emit(
        &args.output,
        &envelope(
            "invariants",
            Some(args.seed),
            InvariantsReport {
                profile: profile.clone(),
                k: sys.k(),
                degrees: sys.degrees().to_vec(),
                jacobian,
                restriction,
            },
        ),
    )?;
    if pass {
        Ok(())
    } else {
        Err(Error::Certification(format!(
            "invariant certificates failed for {}",
            profile.label()
        )))
    }
}

#[derive(Serialize)]
struct RankReport {
    profile: GradedDims,
    rank: usize,
}

fn cmd_rank(args: ProfileArgs) -> Result<(), Error> {
    let profile = profile_from(args.dims, args.m, args.r#in.as_ref())?;
    let grading = CyclicGrading::from_quiver(&profile);
    let rank = rank_of_theta(&grading, args.seed)?;
    emit(
        &args.output,
        &envelope("rank", Some(args.seed), RankReport { profile, rank }),
    )
}

#[derive(Serialize)]
struct QuasisplitReportOut {
    profile: GradedDims,
    #[serde(flatten)]
    classification: vinberg::invariants::QuasiSplitReport,
}

fn cmd_quasisplit(args: ProfileArgs) -> Result<(), Error> {
    let profile = profile_from(args.dims, args.m, args.r#in.as_ref())?;
    let grading = CyclicGrading::from_quiver(&profile);
    let classification = quasi_split_classify(&grading)?;
    emit(
        &args.output,
        &envelope(
            "quasisplit",
            None,
            QuasisplitReportOut {
                profile,
                classification,
            },
        ),
    )
}

#[derive(Serialize)]
struct ToledoReport {
    higgs_type: HiggsType,
    #[serde(flatten)]
    bounds: AmReport,
}

fn cmd_toledo(args: ToledoArgs) -> Result<(), Error> {
    let higgs_type: HiggsType = match (&args.r#in, args.ranks, args.degrees, args.genus) {
        (Some(path), _, _, _) => read_json(path)?,
        (None, Some(ranks), Some(degrees), Some(genus)) => {
            let m = ranks.len();
            let k = ranks.iter().copied().min().unwrap_or(0);
            let wrap = ranks
                .first()
                .copied()
                .unwrap_or(0)
                .min(ranks.last().copied().unwrap_or(0));
            HiggsType::new(m, ranks, degrees, genus, k, wrap)?
        }
        _ => {
            return Err(Error::Invalid(
                "pass --ranks, --degrees, and --genus, or a JSON type via --in".into(),
            ))
        }
    };
    let profile = higgs_type.graded_dims()?;
    let cap = max_n_cap()?;
    if profile.n() > cap {
        return Err(Error::Invalid(format!(
            "total dimension {} exceeds the cap {cap} (set VINBERG_MAX_N to raise it)",
            profile.n()
        )));
    }
    let z = ZGrading::chain(&profile)?;
    let chi = toledo_character(&z, &BilinearFormSpec::trace_form())?;
    let bounds = am_check(&higgs_type, &chi, &z)?;
    emit(
        &args.output,
        &envelope("toledo", None, ToledoReport { higgs_type, bounds }),
    )
}

fn cmd_window(args: WindowArgs) -> Result<(), Error> {
    let report = enumerate_toledo_window(&args.ranks, args.genus)?;
    emit(&args.output, &envelope("window", None, report))
}

#[derive(Serialize)]
struct HitchinBaseReport {
    pair: String,
    degree_source: String,
    #[serde(flatten)]
    base: vinberg::hitchin::HitchinBase,
}

fn cmd_hitchin_base(args: HitchinBaseArgs) -> Result<(), Error> {
    let pair = match (args.family.as_deref(), args.n, args.dims) {
        (Some("sl"), Some(n), None) => {
            let cap = max_n_cap()?;
            if n > cap {
                return Err(Error::Invalid(format!(
                    "n = {n} exceeds the cap {cap} (set VINBERG_MAX_N to raise it)"
                )));
            }
            HitchinPair::full_sl(n)?
        }
        (Some("sl"), None, None) => {
            return Err(Error::Invalid("--type sl needs --n".into()));
        }
        (None, None, Some(dims)) => {
            let m = args.m.unwrap_or(dims.len());
            HitchinPair::cyclic(profile_from(Some(dims), Some(m), None)?)
        }
        _ => {
            return Err(Error::Invalid(
                "pass either --type sl --n N or --dims a,b,c".into(),
            ))
        }
    };
    let label = match &pair {
        HitchinPair::FullSl { n } => format!("sl({n})"),
        HitchinPair::Cyclic { dims } => dims.label(),
    };
    let base = base_dimension(&pair, args.genus)?;
    emit(
        &args.output,
        &envelope(
            "hitchin-base",
            None,
            HitchinBaseReport {
                pair: label,
                degree_source: base.degree_source().to_string(),
                base,
            },
        ),
    )
}

/// Higgs field input for `point-hitchin`: entries are strings such as
/// "-3/2" or plain integers.
#[derive(Deserialize)]
struct PointInput {
    dims: GradedDims,
    maps: Vec<Vec<Vec<serde_json::Value>>>,
}

fn parse_entry(value: &serde_json::Value) -> Result<Scalar, Error> {
    match value {
        serde_json::Value::Number(n) => {
            let as_int = n
                .as_i64()
                .ok_or_else(|| Error::Invalid(format!("entry {n} is not an exact integer")))?;
            Ok(scalar::int(as_int))
        }
        serde_json::Value::String(s) => scalar::parse(s),
        other => Err(Error::Invalid(format!(
            "matrix entries must be integers or rational strings, got {other}"
        ))),
    }
}

fn point_from_input(input: PointInput) -> Result<QuiverPoint, Error> {
    let mut maps = Vec::with_capacity(input.maps.len());
    for rows in &input.maps {
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            parsed.push(
                row.iter()
                    .map(parse_entry)
                    .collect::<Result<Vec<Scalar>, Error>>()?,
            );
        }
        maps.push(Matrix::from_rows(parsed)?);
    }
    QuiverPoint::new(input.dims, maps)
}

#[derive(Serialize)]
struct PointReport {
    profile: GradedDims,
    degrees: Vec<usize>,
    #[serde(with = "vinberg::report::scalar_vec_string")]
    values: Vec<Scalar>,
}

fn cmd_point_hitchin(args: PointArgs) -> Result<(), Error> {
    let (phi, seed) = match (&args.r#in, args.dims) {
        (Some(path), None) => (point_from_input(read_json(path)?)?, None),
        (None, Some(dims)) => {
            let profile = profile_from(Some(dims), args.m, None)?;
            let mut rng = rng_from_seed(args.seed);
            (QuiverPoint::random(&profile, &mut rng, 9), Some(args.seed))
        }
        (None, None) => {
            return Err(Error::Invalid(
                "a Higgs field is required: pass --dims or --in".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --dims with --in"),
    };
    let profile = phi.dims().clone();
    let cap = max_n_cap()?;
    if profile.n() > cap {
        return Err(Error::Invalid(format!(
            "total dimension {} exceeds the cap {cap} (set VINBERG_MAX_N to raise it)",
            profile.n()
        )));
    }
    let sys = InvariantSystem::new(&profile)?;
    let values = pointwise_hitchin(&sys, &phi)?;
    emit(
        &args.output,
        &envelope(
            "point-hitchin",
            seed,
            PointReport {
                profile,
                degrees: sys.degrees().to_vec(),
                values,
            },
        ),
    )
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Error> {
    let opts = VerifyOptions {
        seed: args.seed,
        max_n: max_n_cap()?,
        fault: args.inject_fault,
        ..VerifyOptions::default()
    };
    let report = run_verify(&opts);
    let pass = report.pass;
    emit(&args.output, &envelope("verify", Some(args.seed), report))?;
    if pass {
        Ok(())
    } else {
        Err(Error::Certification("verification sweep failed".into()))
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Grade(args) => cmd_grade(args),
        Command::Invariants(args) => cmd_invariants(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Quasisplit(args) => cmd_quasisplit(args),
        Command::Toledo(args) => cmd_toledo(args),
        Command::Window(args) => cmd_window(args),
        Command::HitchinBase(args) => cmd_hitchin_base(args),
        Command::PointHitchin(args) => cmd_point_hitchin(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vinberg: {e}");
            if e.is_certification() {
                ExitCode::from(EXIT_CERTIFICATION)
            } else {
                ExitCode::from(EXIT_VALIDATION)
            }
        }
    }
}
