//! Command-line driver for the verification suites: pick an algebra and a
//! swap set (or a registered case id), run the checks at configurable degree
//! caps, and emit the reports as text lines or as a JSON array.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use liepoly_core::{
    all_pass, bracket_report, case_for_context, render_json, render_text, run_all, run_case,
    singular_report, AlgebraFamily, AlgebraSpec, CheckReport, Error, RepresentationContext,
    RunOptions, CASES, DEFAULT_MONOMIAL_CAP,
};

#[derive(Parser)]
#[command(
    name = "liepoly",
    version,
    about = "Exact checks for swap-variable polynomial realizations of the classical matrix algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification battery: one case, one algebra/swap context, or everything
    Verify(VerifyArgs),
    /// Search a graded slice for singular vectors and compare with the catalog
    Singular(SingularArgs),
    /// Print the case registry with catalog anchors
    ListCases(ListCasesArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Case id from `list-cases`, or `all` for the whole registry
    #[arg(long, conflicts_with = "algebra")]
    case: Option<String>,

    /// Algebra string: concrete like `sp:2` (rank 2, four variables), `so:6`,
    /// `sl:3`, or a pattern `sp:2n`, `so:2n`, `so:2n+1`, `sl:n`, `gl:n`
    /// instantiated with --n
    #[arg(long)]
    algebra: Option<String>,

    /// Rank parameter for pattern algebras and n-parametric cases
    #[arg(long, default_value_t = 3)]
    n: usize,

    /// Comma-separated 1-based indices of the swapped variables (empty for none)
    #[arg(long, requires = "algebra")]
    swap: Option<String>,

    /// Degree cap for single-family slices
    #[arg(long, default_value_t = 5)]
    max_degree: i64,

    /// Cap on |l1| + l2 for two-family slices
    #[arg(long, default_value_t = 6)]
    b_cap: i64,

    /// Emit a JSON array instead of text lines
    #[arg(long)]
    json: bool,

    /// Worker threads for whole-registry runs (0 keeps the default pool)
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Abort any slice whose monomial basis would exceed this count
    #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
    cap_monomials: usize,
}

#[derive(Args)]
struct SingularArgs {
    /// Algebra string, concrete or pattern form (see `verify --help`)
    #[arg(long)]
    algebra: String,

    /// Rank parameter for pattern algebras
    #[arg(long, default_value_t = 3)]
    n: usize,

    /// Comma-separated 1-based indices of the swapped variables (empty for none)
    #[arg(long)]
    swap: Option<String>,

    /// Single grade to search; omitted, every grade in -3..=3 is searched
    #[arg(long, allow_hyphen_values = true)]
    grade: Option<i64>,

    /// Degree cap for the searched slices
    #[arg(long, default_value_t = 5)]
    max_degree: i64,

    /// Emit a JSON array instead of text lines
    #[arg(long)]
    json: bool,

    /// Abort any slice whose monomial basis would exceed this count
    #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
    cap_monomials: usize,
}

#[derive(Args)]
struct ListCasesArgs {
    /// Emit the registry as a JSON array instead of a table
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Singular(args) => cmd_singular(args),
        Command::ListCases(args) => {
            cmd_list_cases(args);
            Ok(ExitCode::SUCCESS)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

/// A run that could not produce reports: bad flags exit 2, blown resource
/// caps exit 3.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } | Error::NonTermination { .. } => 3,
            _ => 2,
        };
        Failure { code, message: err.to_string() }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let opts = RunOptions {
        max_degree: args.max_degree,
        b_cap: args.b_cap,
        n: args.n,
        cap_monomials: args.cap_monomials,
    };
    let reports = if let Some(case) = &args.case {
        if case == "all" {
            run_all(&opts, args.jobs)?
        } else {
            run_case(case, &opts)?
        }
    } else if let Some(raw) = &args.algebra {
        let spec = resolve_algebra(raw, args.n)?;
        let swap = parse_swap(args.swap.as_deref().unwrap_or(""))?;
        let ctx = build_context(spec, &swap)?;
        let opts = RunOptions { n: spec.n, ..opts };
        match case_for_context(&ctx) {
            Some(info) => run_case(info.id, &opts)?,
            // no registered claims for this context: bracket fidelity is
            // still decidable for any algebra/swap combination
            None => vec![bracket_report(&ctx, "ad_hoc")?],
        }
    } else {
        run_all(&opts, args.jobs)?
    };
    Ok(emit(&reports, args.json))
}

fn cmd_singular(args: SingularArgs) -> Result<ExitCode, Failure> {
    let spec = resolve_algebra(&args.algebra, args.n)?;
    let swap = parse_swap(args.swap.as_deref().unwrap_or(""))?;
    let ctx = build_context(spec, &swap)?;
    let grades: Vec<i64> = match args.grade {
        Some(g) => vec![g],
        None => (-3..=3).collect(),
    };
    let mut reports = Vec::new();
    for grade in grades {
        reports.push(singular_report(&ctx, grade, args.max_degree, args.cap_monomials)?);
    }
    Ok(emit(&reports, args.json))
}

fn cmd_list_cases(args: ListCasesArgs) {
    if args.json {
        let rows: Vec<serde_json::Value> = CASES
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "description": c.description,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("registry serializes"));
    } else {
        let id_width = CASES.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let anchor_width = CASES.iter().map(|c| c.anchor.len()).max().unwrap_or(0);
        for c in CASES {
            println!(
                "{:<id_width$}  {:<anchor_width$}  {}",
                c.id, c.anchor, c.description
            );
        }
    }
}

fn emit(reports: &[CheckReport], json: bool) -> ExitCode {
    if json {
        println!("{}", render_json(reports));
    } else {
        print!("{}", render_text(reports));
    }
    if all_pass(reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Map the command-line algebra grammar onto a concrete spec. Concrete `sp:k`
/// names the rank (so `sp:2` acts on four variables); concrete `so`, `sl`,
/// `gl` sizes name the matrix size; pattern forms substitute --n.
fn resolve_algebra(raw: &str, n: usize) -> Result<AlgebraSpec, Failure> {
    let text = raw.trim();
    let (family, size) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("algebra `{text}` is missing a `:<size>` part")))?;
    let family = family.trim();
    let size = size.trim();
    let core_form = if size.contains('n') {
        match (family, size) {
            ("sl", "n") => format!("sl:{n}"),
            ("gl", "n") => format!("gl:{n}"),
            ("sp", "2n") => format!("sp:{}", 2 * n),
            ("so", "2n") => format!("so:{}", 2 * n),
            ("so", "2n+1") => format!("so:{}", 2 * n + 1),
            _ => {
                return Err(usage(format!(
                    "unrecognized algebra pattern `{text}` (expected sl:n, gl:n, sp:2n, so:2n, so:2n+1)"
                )))
            }
        }
    } else {
        let k: usize = size
            .parse()
            .map_err(|_| usage(format!("algebra size `{size}` is not a number")))?;
        match family {
            "sp" => format!("sp:{}", 2 * k),
            "so" | "sl" | "gl" => format!("{family}:{k}"),
            _ => {
                return Err(usage(format!(
                    "unknown algebra family `{family}` (expected sp, so, sl, gl)"
                )))
            }
        }
    };
    Ok(AlgebraSpec::parse(&core_form)?)
}

fn parse_swap(raw: &str) -> Result<Vec<usize>, Failure> {
    let mut indices = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let index: usize = token
            .parse()
            .map_err(|_| usage(format!("swap index `{token}` is not a positive integer")))?;
        if index == 0 {
            return Err(usage("swap indices are 1-based; 0 is not a variable"));
        }
        if !indices.contains(&index) {
            indices.push(index);
        }
    }
    indices.sort_unstable();
    Ok(indices)
}

/// sl acts on the two-family ring whenever variables are swapped; everything
/// else (and the canonical sl representation) lives on the single ring.
fn build_context(
    spec: AlgebraSpec,
    swap: &[usize],
) -> Result<RepresentationContext, Failure> {
    let ctx = if spec.family == AlgebraFamily::Sl && !swap.is_empty() {
        RepresentationContext::double(spec, swap.iter().copied())
    } else {
        RepresentationContext::single(spec, swap.iter().copied())
    };
    Ok(ctx?)
}
