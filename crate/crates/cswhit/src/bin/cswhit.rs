//! Command-line front end: exact queries against a chosen root-datum
//! fixture, JSON on stdout, plus the full verification matrix.
//!
//! Coweights are comma-separated integer coordinates in the fixture's
//! cocharacter basis; sequences separate entries with semicolons, and a
//! single comma-separated run whose length is a multiple of the rank is
//! chunked into rank-sized entries (so `--lambda-seq 1,1` on a rank-one
//! fixture means the two-entry sequence `[1];[1]`).
//!
//! Exit codes: 0 success, 1 verification found a failing check, 2 bad
//! usage (flag parsing, malformed coweights, unknown fixture), 3 a library
//! error surfaced by the requested computation.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cswhit::error::Error;
use cswhit::fixtures;
use cswhit::hecke::{self, HeckeElt, WhittakerElt};
use cswhit::mvgeom::{self, GradedSpace};
use cswhit::paths::{self, PathSpec};
use cswhit::repcombinat;
use cswhit::rootdata::{BuildOptions, Coweight, RootDatum};
use cswhit::verify::{self, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "cswhit",
    version,
    about = "Exact root-datum, path-counting, graded-cohomology, and Hecke queries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Fixture key (built-in: SL2, PGL2, A2adj, B2, C2, G2), resolved
    /// against $CSWHIT_FIXTURES first when that directory is set.
    #[arg(long)]
    fixture: String,
    /// Abort enumeration if the reflection group exceeds this order.
    #[arg(long)]
    weyl_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Weight support of the irreducible dual-group representation
    Omega {
        #[command(flatten)]
        common: Common,
        /// Dominant highest coweight
        #[arg(long)]
        lambda: String,
    },
    /// Decompose a tensor product of irreducibles
    Tensor {
        #[command(flatten)]
        common: Common,
        /// Sequence of dominant highest coweights
        #[arg(long)]
        lambda_seq: String,
    },
    /// Dominant-path queries over a sequence of minimal cocharacters
    Paths {
        #[command(subcommand)]
        action: PathsCmd,
    },
    /// Nonemptiness, dimension, and component count of an intersection cycle
    Mvdim {
        #[command(flatten)]
        common: Common,
        /// Dominant highest coweight
        #[arg(long)]
        lambda: String,
        /// Target coweight
        #[arg(long)]
        nu: String,
    },
    /// Graded-cohomology ledger queries
    Coh {
        #[command(subcommand)]
        action: CohCmd,
    },
    /// Spherical Hecke algebra and Whittaker module queries
    Hecke {
        #[command(subcommand)]
        action: HeckeCmd,
    },
    /// Run the verification matrix and report pass/fail per check
    Verify {
        /// Restrict to one fixture key (default: all built-in fixtures)
        #[arg(long)]
        fixture: Option<String>,
        /// Height bound driving every verification box
        #[arg(long, default_value_t = 4)]
        max_height: i64,
        /// Also write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Abort enumeration if the reflection group exceeds this order
        #[arg(long)]
        weyl_cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Number of dominant paths from the origin to the target
    Count {
        #[command(flatten)]
        common: Common,
        /// Sequence of minimal cocharacters
        #[arg(long)]
        lambda_seq: String,
        /// Dominant target coweight
        #[arg(long)]
        nu: String,
    },
    /// List the dominant paths with vertices and zero-step root choices
    List {
        #[command(flatten)]
        common: Common,
        /// Sequence of minimal cocharacters
        #[arg(long)]
        lambda_seq: String,
        /// Dominant target coweight
        #[arg(long)]
        nu: String,
    },
    /// Validate one path and report whether it is dominant
    Check {
        #[command(flatten)]
        common: Common,
        /// Sequence of minimal cocharacters
        #[arg(long)]
        lambda_seq: String,
        /// Steps of the path, one weight per factor
        #[arg(long)]
        steps: String,
        /// Root choices at zero steps, as `position:index` pairs
        /// (1-based position, 1-based simple-root index), comma-separated
        #[arg(long)]
        roots: Option<String>,
    },
}

#[derive(Subcommand)]
enum CohCmd {
    /// Cohomology of the Whittaker intersection at a dominant pair
    Main {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
    },
    /// The conjectured twisted cohomology at a possibly non-dominant twist
    Conj {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        mu: String,
    },
    /// Convolution cohomology assembled over a minimal sequence
    Breakdown {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda_seq: String,
        #[arg(long)]
        nu: String,
    },
    /// Zero-orbit stratum cohomology at a quasi-minuscule cocharacter
    Zero {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Cohomology of the cell closure attached to a quasi-minuscule cocharacter
    Poincare {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
    },
    /// Zero-orbit strata bookkeeping: total, complement, difference
    Strata {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Product of two Satake basis elements
    Mult {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Action of a basis Hecke element on a basis Whittaker vector
    Act {
        #[command(flatten)]
        common: Common,
        /// Whittaker basis index
        #[arg(long)]
        nu: String,
        /// Hecke basis index
        #[arg(long)]
        lambda: String,
        /// Compute through the graded trace pipeline instead of
        /// representation-theoretic multiplicities
        #[arg(long)]
        geometric: bool,
    },
    /// Check the Casselman-Shalika identity at one dominant coweight
    Cs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
    },
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownFixture(_) => CliError::Usage(e.to_string()),
            other => CliError::Lib(other),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn load(common: &Common) -> CliResult<RootDatum> {
    load_fixture(&common.fixture, common.weyl_cap)
}

fn load_fixture(key: &str, weyl_cap: Option<usize>) -> CliResult<RootDatum> {
    let mut opts = BuildOptions::default();
    if let Some(cap) = weyl_cap {
        opts.weyl_cap = cap;
    }
    Ok(fixtures::fixture_with_options(key, &opts)?)
}

fn parse_coweight(text: &str, rank: usize) -> CliResult<Coweight> {
    let coords = parse_coords(text)?;
    if coords.len() != rank {
        return Err(CliError::Usage(format!(
            "coweight `{text}` has {} coordinates, fixture rank is {rank}",
            coords.len()
        )));
    }
    Ok(Coweight(coords))
}

fn parse_sequence(text: &str, rank: usize) -> CliResult<Vec<Coweight>> {
    let mut out = Vec::new();
    for segment in text.split(';') {
        let coords = parse_coords(segment)?;
        if coords.len() == rank {
            out.push(Coweight(coords));
        } else if !coords.is_empty() && coords.len() % rank == 0 {
            for chunk in coords.chunks(rank) {
                out.push(Coweight(chunk.to_vec()));
            }
        } else {
            return Err(CliError::Usage(format!(
                "segment `{segment}` has {} coordinates, expected a multiple of rank {rank}",
                coords.len()
            )));
        }
    }
    Ok(out)
}

fn parse_coords(text: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("`{s}` is not an integer coordinate")))
        })
        .collect()
}

/// `position:index` pairs with 1-based simple-root indices, e.g. `2:1`.
fn parse_root_choices(text: &str, num_simple: usize) -> CliResult<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for piece in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (pos, idx) = piece.split_once(':').ok_or_else(|| {
            CliError::Usage(format!("root choice `{piece}` is not `position:index`"))
        })?;
        let pos: usize = pos
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("`{pos}` is not a position")))?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("`{idx}` is not a root index")))?;
        if idx == 0 || idx > num_simple {
            return Err(CliError::Usage(format!(
                "root index {idx} out of range 1..={num_simple}"
            )));
        }
        out.insert(pos, idx - 1);
    }
    Ok(out)
}

/// Write to stdout, treating a closed pipe (`cswhit ... | head`) as a normal
/// end of output rather than a crash.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = outcome {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

fn print_json<T: Serialize>(value: &T) {
    let rendered =
        serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    emit(&format!("{rendered}\n"));
}

/// Degree-keyed object form of a graded space, ascending degrees:
/// `{"2": {"dim": 1, "half_twists": -2}}`.
fn graded_json(space: &GradedSpace) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (degree, e) in space.entries() {
        map.insert(
            degree.to_string(),
            serde_json::json!({"dim": e.dim, "half_twists": e.half_twists}),
        );
    }
    serde_json::Value::Object(map)
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Omega { common, lambda } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let support = repcombinat::omega_set(&rd, &lambda)?;
            print_json(&support);
        }
        Command::Tensor { common, lambda_seq } => {
            let rd = load(&common)?;
            let seq = parse_sequence(&lambda_seq, rd.rank())?;
            let table = repcombinat::tensor_decomposition(&rd, &seq)?;
            #[derive(Serialize)]
            struct Row<'a> {
                coweight: &'a Coweight,
                multiplicity: u64,
            }
            let rows: Vec<Row<'_>> = table
                .iter()
                .map(|(coweight, &multiplicity)| Row {
                    coweight,
                    multiplicity,
                })
                .collect();
            print_json(&rows);
        }
        Command::Paths { action } => return run_paths(action),
        Command::Mvdim { common, lambda, nu } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            if mvgeom::mv_nonempty(&rd, &lambda, &nu)? {
                print_json(&serde_json::json!({
                    "nonempty": true,
                    "dim": mvgeom::mv_dimension(&rd, &lambda, &nu)?,
                    "components": mvgeom::mv_component_count(&rd, &lambda, &nu)?,
                }));
            } else {
                print_json(&serde_json::json!({ "nonempty": false }));
            }
        }
        Command::Coh { action } => return run_coh(action),
        Command::Hecke { action } => return run_hecke(action),
        Command::Verify {
            fixture,
            max_height,
            json,
            weyl_cap,
        } => return run_verify(fixture, max_height, json, weyl_cap),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_paths(action: PathsCmd) -> CliResult<ExitCode> {
    match action {
        PathsCmd::Count {
            common,
            lambda_seq,
            nu,
        } => {
            let rd = load(&common)?;
            let seq = parse_sequence(&lambda_seq, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            emit(&format!("{}\n", paths::count_dominant_paths(&rd, &seq, &nu)?));
        }
        PathsCmd::List {
            common,
            lambda_seq,
            nu,
        } => {
            let rd = load(&common)?;
            let seq = parse_sequence(&lambda_seq, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            print_json(&paths::enumerate_dominant_paths(&rd, &seq, &nu)?);
        }
        PathsCmd::Check {
            common,
            lambda_seq,
            steps,
            roots,
        } => {
            let rd = load(&common)?;
            let seq = parse_sequence(&lambda_seq, rd.rank())?;
            let steps = parse_sequence(&steps, rd.rank())?;
            let zero_step_roots = match roots {
                Some(text) => parse_root_choices(&text, rd.num_simple())?,
                None => BTreeMap::new(),
            };
            let spec = PathSpec {
                steps,
                zero_step_roots,
            };
            let path = paths::validate(&rd, &seq, &spec)?;
            print_json(&serde_json::json!({
                "valid": true,
                "dominant": paths::is_dominant_path(&rd, &path),
                "vertices": path.vertices,
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_coh(action: CohCmd) -> CliResult<ExitCode> {
    match action {
        CohCmd::Main { common, lambda, nu } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            print_json(&graded_json(&mvgeom::whittaker_cohomology(&rd, &lambda, &nu)?));
        }
        CohCmd::Conj {
            common,
            lambda,
            nu,
            mu,
        } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            let mu = parse_coweight(&mu, rd.rank())?;
            print_json(&graded_json(&mvgeom::conjectural_cohomology(
                &rd, &lambda, &nu, &mu,
            )?));
        }
        CohCmd::Breakdown {
            common,
            lambda_seq,
            nu,
        } => {
            let rd = load(&common)?;
            let seq = parse_sequence(&lambda_seq, rd.rank())?;
            let nu = parse_coweight(&nu, rd.rank())?;
            print_json(&graded_json(&mvgeom::convolution_breakdown(&rd, &seq, &nu)?));
        }
        CohCmd::Zero { common, lambda, mu } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let mu = parse_coweight(&mu, rd.rank())?;
            print_json(&graded_json(&mvgeom::coh_zero_orbit(&rd, &lambda, &mu)?));
        }
        CohCmd::Poincare { common, lambda } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            print_json(&graded_json(&mvgeom::poincare_gp(&rd, &lambda)?));
        }
        CohCmd::Strata { common, lambda, mu } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let mu = parse_coweight(&mu, rd.rank())?;
            print_json(&mvgeom::zero_orbit_strata_report(&rd, &lambda, &mu)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_hecke(action: HeckeCmd) -> CliResult<ExitCode> {
    match action {
        HeckeCmd::Mult { common, lambda, mu } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let mu = parse_coweight(&mu, rd.rank())?;
            let product = hecke::hecke_mult(
                &rd,
                &HeckeElt::basis(&rd, &lambda)?,
                &HeckeElt::basis(&rd, &mu)?,
            )?;
            print_json(&product);
        }
        HeckeCmd::Act {
            common,
            nu,
            lambda,
            geometric,
        } => {
            let rd = load(&common)?;
            let nu = parse_coweight(&nu, rd.rank())?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let result = if geometric {
                hecke::whittaker_action_geometric(&rd, &nu, &lambda)?
            } else {
                hecke::whittaker_action(
                    &rd,
                    &WhittakerElt::basis(&rd, &nu)?,
                    &HeckeElt::basis(&rd, &lambda)?,
                )?
            };
            print_json(&result);
        }
        HeckeCmd::Cs { common, lambda } => {
            let rd = load(&common)?;
            let lambda = parse_coweight(&lambda, rd.rank())?;
            let holds = hecke::verify_cs(&rd, &lambda)?;
            print_json(&serde_json::json!({
                "lambda": lambda,
                "holds": holds,
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyDocument {
    reports: Vec<verify::VerificationReport>,
    passed: usize,
    failed: usize,
}

fn run_verify(
    fixture: Option<String>,
    max_height: i64,
    json: Option<PathBuf>,
    weyl_cap: Option<usize>,
) -> CliResult<ExitCode> {
    if max_height < 1 {
        return Err(CliError::Usage(
            "--max-height must be at least 1".to_string(),
        ));
    }
    let keys: Vec<String> = match fixture {
        Some(key) => vec![key],
        None => fixtures::FIXTURE_KEYS.iter().map(|s| s.to_string()).collect(),
    };
    let config = VerifyConfig { max_height };
    let mut reports = Vec::new();
    for key in &keys {
        let rd = load_fixture(key, weyl_cap)?;
        reports.push(verify::run(&rd, &config)?);
    }
    let passed: usize = reports.iter().map(|r| r.passed).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    emit(&verify::render_text(&reports));
    if let Some(path) = json {
        let document = VerifyDocument {
            reports,
            passed,
            failed,
        };
        let text = serde_json::to_string_pretty(&document)
            .expect("report serialization cannot fail");
        std::fs::write(&path, text + "\n").map_err(|e| {
            CliError::Usage(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
