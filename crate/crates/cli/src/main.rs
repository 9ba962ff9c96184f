//! Command-line front end: parse root-system / parabolic / query
//! specifications, run the computations and verification suites, and emit
//! JSON or human-readable reports.
//!
//! Exit codes: 0 on success, 1 for domain errors (and verify failures),
//! 2 for usage errors. Set `FROBSUM_LOG=debug` for progress logging.

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobsum::json::{ReportJson, StableJson, VerifyJson};
use frobsum::verify::{self, Suite, VerifyOptions, VerifyReport};
use frobsum::{
    decompose, enumerate_summands, gros_kaneda_multiplicity, multiplicity_of_trivial, parse_levi,
    parse_weight, stable_line_summands_of_structure_sheaf, Characteristic, Error, FrobeniusQuery,
    ParabolicData, RootSystemData, StableRange, StableSummands,
};
use log::{debug, info};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "frobsum",
    version,
    about = "Rank-one summands of Frobenius pushforwards of line bundles on G/P, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a root system and parabolic: Cartan matrix, roots, 2 rho_P, dim G/P
    Info {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate all weights lambda with L(lambda) a summand of F^r_* L(mu)
    Summands {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Multiplicity of the trivial summand O in F^r_* L(mu)
    Multiplicity {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Dimension of H^0 of a dominant weight (Weyl's formula)
    WeylDim {
        /// Root system, e.g. A2 or B3xA1
        #[arg(long = "type")]
        type_spec: String,
        /// Weight in fundamental-weight coordinates, e.g. 1,0,2
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Line-bundle summands of F^r_* O, for a fixed r or the stable limit
    Stable {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[command(flatten)]
        characteristic: CharacteristicArgs,
        /// Frobenius power: a positive integer or `limit`
        #[arg(long, default_value = "limit")]
        r: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multiplicity of L(-rho) in F^r_* O on the full flag variety
    GrosKaneda {
        /// Root system, e.g. A2 or B3xA1
        #[arg(long = "type")]
        type_spec: String,
        #[command(flatten)]
        characteristic: CharacteristicArgs,
        /// Frobenius power
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full rank-one decomposition report with the known multiplicities
    Decompose {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Run the self-verification suites
    Verify {
        /// Which suite to run
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        /// Projective-space dimension bound for the oracle suite
        #[arg(long, default_value_t = VerifyOptions::default().max_n)]
        max_n: u32,
        /// Rank bound for the type sweeps
        #[arg(long, default_value_t = VerifyOptions::default().max_rank)]
        max_rank: usize,
        /// Primes to sweep, comma-separated
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        /// Largest Frobenius power in the sweeps
        #[arg(long, default_value_t = VerifyOptions::default().max_r)]
        max_r: u32,
        /// Sample count for the randomized suites
        #[arg(long, default_value_t = VerifyOptions::default().samples)]
        samples: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct GeometryArgs {
    /// Root system, e.g. A2 or B3xA1 (case-insensitive)
    #[arg(long = "type")]
    type_spec: String,
    /// Levi subset: `none` or comma-separated 1-based simple-root indices
    #[arg(long, default_value = "none")]
    levi: String,
    /// Interpret --levi as the marked (crossed-out) nodes, i.e. the complement of the Levi
    #[arg(long)]
    marked: bool,
}

#[derive(Args)]
struct CharacteristicArgs {
    /// The characteristic p (prime unless --allow-composite-p)
    #[arg(long)]
    p: u64,
    /// Explore composite "p" (the summand inequalities are pure arithmetic)
    #[arg(long)]
    allow_composite_p: bool,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    geometry: GeometryArgs,
    #[command(flatten)]
    characteristic: CharacteristicArgs,
    /// Frobenius power
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Weight mu in fundamental-weight coordinates, e.g. 0,0 or 3,-1
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FROBSUM_LOG")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum CliError {
    Domain(Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Info { geometry, output } => {
            let pd = geometry.parabolic()?;
            emit(&output, info_report(&pd, output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Summands { query } => {
            let (fq, output) = query.build()?;
            let weights = enumerate_summands(&fq);
            let text = match output.format {
                Format::Table => {
                    let mut lines = vec![format!(
                        "{} line-bundle summands of F^{}_* L({}) on {}:",
                        weights.len(),
                        fq.r(),
                        fq.mu(),
                        geometry_name(&fq)
                    )];
                    lines.extend(weights.iter().map(|w| format!("  lambda = {w}")));
                    lines.join("\n")
                }
                Format::Json => {
                    let report = decompose(&fq)?;
                    ReportJson::from(&report).to_json_string()
                }
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiplicity { query } => {
            let (fq, output) = query.build()?;
            let multiplicity = multiplicity_of_trivial(&fq)?;
            let text = match output.format {
                Format::Table => format!(
                    "multiplicity of O in F^{}_* L({}) on {}: {multiplicity}",
                    fq.r(),
                    fq.mu(),
                    geometry_name(&fq)
                ),
                Format::Json => format!(
                    "{{\n  \"multiplicity\": \"{multiplicity}\"\n}}"
                ),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::WeylDim {
            type_spec,
            mu,
            output,
        } => {
            let rs = RootSystemData::parse(&type_spec)?;
            let mu = parse_weight(&mu)?;
            let dim = rs.weyl_dimension(&mu)?;
            let text = match output.format {
                Format::Table => format!("dim H^0({mu}) on {} = {dim}", rs.type_string()),
                Format::Json => format!("{{\n  \"dimension\": \"{dim}\"\n}}"),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Stable {
            geometry,
            characteristic,
            r,
            output,
        } => {
            let pd = geometry.parabolic()?;
            let ch = characteristic.build()?;
            let range = if r.eq_ignore_ascii_case("limit") {
                StableRange::Limit
            } else {
                let r: u32 = r
                    .parse()
                    .map_err(|_| CliError::Usage(format!("--r must be a power or `limit`, got `{r}`")))?;
                StableRange::Finite(r)
            };
            let stable = stable_line_summands_of_structure_sheaf(&pd, ch, range)?;
            let text = match output.format {
                Format::Table => stable_table(&pd, ch, &r_label(range), &stable),
                Format::Json => StableJson::new(
                    pd.root_system().type_string(),
                    pd.levi().iter().map(|&i| i + 1).collect(),
                    ch.get(),
                    r_label(range),
                    &stable,
                )
                .to_json_string(),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GrosKaneda {
            type_spec,
            characteristic,
            r,
            output,
        } => {
            let rs = RootSystemData::parse(&type_spec)?;
            let ch = characteristic.build()?;
            let multiplicity = gros_kaneda_multiplicity(&rs, ch, r)?;
            let text = match output.format {
                Format::Table => format!(
                    "multiplicity of L(-rho) in F^{r}_* O on {}/B at p = {}: {multiplicity}",
                    rs.type_string(),
                    ch.get()
                ),
                Format::Json => format!("{{\n  \"multiplicity\": \"{multiplicity}\"\n}}"),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { query } => {
            let (fq, output) = query.build()?;
            let report = decompose(&fq)?;
            let text = match output.format {
                Format::Table => decompose_table(&report),
                Format::Json => ReportJson::from(&report).to_json_string(),
            };
            emit(&output, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            seed,
            max_n,
            max_rank,
            primes,
            max_r,
            samples,
            output,
        } => {
            let suite: Suite = suite
                .parse()
                .map_err(CliError::Usage)?;
            let primes = primes
                .split(',')
                .map(|tok| tok.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage(format!("cannot parse --primes `{primes}`")))?;
            let opts = VerifyOptions {
                seed,
                max_rank,
                max_n,
                primes,
                max_r,
                samples,
            };
            info!("running verify suite `{}`", suite.name());
            let report = verify::run(suite, &opts)?;
            let text = match output.format {
                Format::Table => verify_table(&report),
                Format::Json => VerifyJson::from(&report).to_json_string(),
            };
            emit(&output, text)?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

impl GeometryArgs {
    fn parabolic(&self) -> CliResult<Arc<ParabolicData>> {
        let rs = Arc::new(RootSystemData::parse(&self.type_spec)?);
        let mut levi = parse_levi(&self.levi, rs.rank())?;
        if self.marked {
            levi = (0..rs.rank()).filter(|i| !levi.contains(i)).collect();
        }
        debug!(
            "parsed geometry: type={} levi={:?} (0-based)",
            rs.type_string(),
            levi
        );
        Ok(Arc::new(ParabolicData::new(rs, levi)?))
    }
}

impl CharacteristicArgs {
    fn build(&self) -> CliResult<Characteristic> {
        let ch = if self.allow_composite_p {
            Characteristic::composite_allowed(self.p)?
        } else {
            Characteristic::prime(self.p)?
        };
        Ok(ch)
    }
}

impl QueryArgs {
    fn build(self) -> CliResult<(FrobeniusQuery, OutputArgs)> {
        let pd = self.geometry.parabolic()?;
        let ch = self.characteristic.build()?;
        let mu = parse_weight(&self.mu)?;
        let fq = FrobeniusQuery::new(pd, ch, self.r, mu)?;
        debug!(
            "query: type={} p={} r={} mu={}",
            fq.root_system().type_string(),
            fq.p(),
            fq.r(),
            fq.mu()
        );
        Ok((fq, self.output))
    }
}

fn geometry_name(fq: &FrobeniusQuery) -> String {
    let levi: Vec<usize> = fq.parabolic().levi().iter().map(|&i| i + 1).collect();
    if levi.is_empty() {
        format!("{}/B (p = {})", fq.root_system().type_string(), fq.p())
    } else {
        format!(
            "{}/P(levi {:?}) (p = {})",
            fq.root_system().type_string(),
            levi,
            fq.p()
        )
    }
}

fn r_label(range: StableRange) -> String {
    match range {
        StableRange::Finite(r) => r.to_string(),
        StableRange::Limit => "limit".to_string(),
    }
}

fn info_report(pd: &ParabolicData, format: Format) -> String {
    let rs = pd.root_system();
    match format {
        Format::Table => {
            let mut lines = Vec::new();
            lines.push(format!("type:            {}", rs.type_string()));
            lines.push(format!("rank:            {}", rs.rank()));
            lines.push(format!("positive roots:  {}", rs.positive_roots().len()));
            let levi: Vec<usize> = pd.levi().iter().map(|&i| i + 1).collect();
            lines.push(format!("levi subset:     {levi:?} (1-based)"));
            lines.push(format!("dim G/P:         {}", pd.dim_gp()));
            lines.push(format!("2 rho_P:         {}", pd.two_rho_p()));
            lines.push("cartan matrix (A[i][j] = <alpha_j, alpha_i^vee>):".to_string());
            for row in rs.cartan() {
                lines.push(format!("  {row:?}"));
            }
            lines.join("\n")
        }
        Format::Json => {
            let levi: Vec<usize> = pd.levi().iter().map(|&i| i + 1).collect();
            let cartan: Vec<String> = rs
                .cartan()
                .iter()
                .map(|row| {
                    format!(
                        "[{}]",
                        row.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            format!(
                "{{\n  \"type\": \"{}\",\n  \"rank\": {},\n  \"positive_roots\": {},\n  \"levi\": {:?},\n  \"dim_gp\": {},\n  \"two_rho_p\": {:?},\n  \"cartan\": [{}]\n}}",
                rs.type_string(),
                rs.rank(),
                rs.positive_roots().len(),
                levi,
                pd.dim_gp(),
                pd.two_rho_p().coords(),
                cartan.join(",")
            )
        }
    }
}

fn stable_table(
    pd: &ParabolicData,
    ch: Characteristic,
    r: &str,
    stable: &StableSummands,
) -> String {
    let levi: Vec<usize> = pd.levi().iter().map(|&i| i + 1).collect();
    let place = if levi.is_empty() {
        format!("{}/B", pd.root_system().type_string())
    } else {
        format!("{}/P(levi {:?})", pd.root_system().type_string(), levi)
    };
    let mut lines = vec![if r == "limit" {
        format!(
            "line-bundle summands of F^r_* O on {place} at p = {}, union over all r:",
            ch.get()
        )
    } else {
        format!(
            "line-bundle summands of F^{r}_* O on {place} at p = {}:",
            ch.get()
        )
    }];
    lines.extend(stable.weights.iter().map(|w| format!("  lambda = {w}")));
    if let Some(r_star) = stable.stabilizes_at {
        lines.push(format!("stabilizes at r* = {r_star}"));
    }
    lines.join("\n")
}

fn decompose_table(report: &frobsum::DecompositionReport) -> String {
    let fq = &report.query;
    let mut lines = Vec::new();
    lines.push(format!(
        "F^{}_* L({}) on {}:",
        fq.r(),
        fq.mu(),
        geometry_name(fq)
    ));
    lines.push(format!("total rank: {}", report.total_rank));
    for entry in &report.summands {
        lines.push(format!(
            "  lambda = {:<12} multiplicity = {}",
            entry.lambda.to_string(),
            entry.multiplicity
        ));
    }
    lines.push(format!(
        "accounted rank: {} of {}",
        report.accounted_rank, report.total_rank
    ));
    lines.join("\n")
}

fn verify_table(report: &VerifyReport) -> String {
    let mut lines = vec![format!(
        "verify suite `{}` (seed {}):",
        report.suite, report.seed
    )];
    for outcome in &report.outcomes {
        lines.push(format!(
            "  {:<45} checks = {:<6} failed = {}",
            outcome.name, outcome.checks, outcome.failed
        ));
        for failure in &outcome.failures {
            lines.push(format!("    FAIL {failure}"));
        }
    }
    lines.push(format!(
        "passed = {}, failed = {}",
        report.passed(),
        report.failed()
    ));
    lines.join("\n")
}

fn emit(output: &OutputArgs, text: String) -> CliResult<()> {
    match &output.output {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}
