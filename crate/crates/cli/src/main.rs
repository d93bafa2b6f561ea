use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use crflag::involution::parse_matrix;
use crflag::survey::{run_survey, InvolutionSource, SurveyConfig, SurveyRow};
use crflag::{AnalysisReport, Error, Family, InvolutionData, NondegeneracyOrder, Root, RootSystem};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Above this rank `analyze` only runs the Chevalley oracle when asked.
const AUTO_ORACLE_MAX_RANK: usize = 4;

#[derive(Parser)]
#[command(
    name = "crflag",
    version,
    about = "Nondegeneracy of homogeneous CR orbits in flag manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one (root system, parabolic, involution) case.
    #[command(group(ArgGroup::new("involution").required(true).args(["cayley", "sigma_matrix", "split"])))]
    Analyze {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Simple roots kept in the parabolic, 1-based, comma separated.
        #[arg(long, default_value = "")]
        parabolic: String,
        /// Cayley chain applied left to right, e.g. `0,1,0|1,1,1`.
        #[arg(long)]
        cayley: Option<String>,
        /// Involution matrix acting on coefficient columns, rows split by `|`.
        #[arg(long, allow_hyphen_values = true)]
        sigma_matrix: Option<String>,
        /// Use the identity involution.
        #[arg(long)]
        split: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Run the Chevalley cross-check at any rank.
        #[arg(long)]
        oracle: bool,
    },
    /// Check the built-in B3 example against its known filtration.
    ExampleSo7,
    /// Sweep families and ranks, checking the hypersurface theorems.
    Survey {
        #[arg(long, default_value = "A,B,C,D,G")]
        families: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_cayley_chain: usize,
        #[arg(long)]
        hypersurface_only: bool,
        #[arg(long, default_value_t = 4)]
        oracle_max_rank: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(flag: &str, e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("--{flag}: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::TheoremViolation { .. } => EXIT_VIOLATION,
            Error::CaseFailed { source, .. }
                if matches!(**source, Error::TheoremViolation { .. }) =>
            {
                EXIT_VIOLATION
            }
            Error::Internal(_) | Error::CaseFailed { .. } => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            family,
            rank,
            parabolic,
            cayley,
            sigma_matrix,
            split,
            format,
            oracle,
        } => cmd_analyze(
            &family,
            rank,
            &parabolic,
            cayley,
            sigma_matrix,
            split,
            format,
            oracle,
        ),
        Command::ExampleSo7 => cmd_example_so7(),
        Command::Survey {
            families,
            max_rank,
            max_cayley_chain,
            hypersurface_only,
            oracle_max_rank,
            format,
        } => cmd_survey(
            &families,
            max_rank,
            max_cayley_chain,
            hypersurface_only,
            oracle_max_rank,
            format,
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    s.parse().map_err(|e| Failure::usage("family", e))
}

fn parse_index_list(flag: &str, s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|e| Failure::usage(flag, format!("'{p}': {e}")))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    family: &str,
    rank: usize,
    parabolic: &str,
    cayley: Option<String>,
    sigma_matrix: Option<String>,
    split: bool,
    format: Format,
    oracle: bool,
) -> Result<u8, Failure> {
    let family = parse_family(family)?;
    let rs = RootSystem::new(family, rank).map_err(|e| Failure::usage("rank", e))?;
    let qr = parse_index_list("parabolic", parabolic)?;
    for &i in &qr {
        if i == 0 || i > rank {
            return Err(Failure::usage(
                "parabolic",
                Error::IndexOutOfRange { index: i, rank },
            ));
        }
    }

    let sigma = if let Some(chain) = cayley {
        let roots = chain
            .split('|')
            .map(|r| r.parse::<Root>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::usage("cayley", e))?;
        InvolutionData::from_cayley_chain(&rs, &roots).map_err(|e| Failure::usage("cayley", e))?
    } else if let Some(m) = sigma_matrix {
        let m = parse_matrix(&m).map_err(|e| Failure::usage("sigma-matrix", e))?;
        InvolutionData::from_matrix(&rs, m).map_err(|e| Failure::usage("sigma-matrix", e))?
    } else {
        debug_assert!(split);
        InvolutionData::identity(&rs)
    };

    let run_oracle = oracle || rank <= AUTO_ORACLE_MAX_RANK;
    let report = AnalysisReport::build(&rs, &qr, sigma, run_oracle)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(0)
}

/// Filtration of the B3 example, `q(0)` first.
fn so7_expected() -> Vec<BTreeSet<String>> {
    let q3: Vec<&str> = vec!["100", "-112", "-001", "-011", "-012"];
    let mut q2 = q3.clone();
    q2.push("-122");
    let mut q1 = q2.clone();
    q1.extend(["-010", "-111"]);
    let mut q0 = q1.clone();
    q0.extend(["-100", "-110", "001"]);
    [q0, q1, q2, q3]
        .into_iter()
        .map(|l| l.into_iter().map(String::from).collect())
        .collect()
}

/// Per-level differences as `(level, missing, extra)`; empty iff equal.
fn level_diffs(
    expected: &[BTreeSet<String>],
    computed: &[BTreeSet<String>],
) -> Vec<(usize, Vec<String>, Vec<String>)> {
    let empty = BTreeSet::new();
    (0..expected.len().max(computed.len()))
        .filter_map(|k| {
            let e = expected.get(k).unwrap_or(&empty);
            let c = computed.get(k).unwrap_or(&empty);
            let missing: Vec<String> = e.difference(c).cloned().collect();
            let extra: Vec<String> = c.difference(e).cloned().collect();
            (!missing.is_empty() || !extra.is_empty()).then_some((k, missing, extra))
        })
        .collect()
}

fn cmd_example_so7() -> Result<u8, Failure> {
    let rs = RootSystem::new(Family::B, 3)?;
    let chain = [Root::new(vec![0, 1, 0]), Root::new(vec![1, 1, 1])];
    let sigma = InvolutionData::from_cayley_chain(&rs, &chain)?;
    let report = AnalysisReport::build(&rs, &[1, 3], sigma, true)?;
    let computed: Vec<BTreeSet<String>> = report
        .filtration
        .clone()
        .unwrap_or_default()
        .into_iter()
        .map(|l| l.into_iter().collect())
        .collect();
    let expected = so7_expected();

    println!("B3, parabolic {{1,3}}, cayley(010,111)");
    for (k, level) in computed.iter().enumerate() {
        let roots: Vec<&str> = level.iter().map(String::as_str).collect();
        println!("  q({k}): {{{}}}", roots.join(", "));
    }
    let diffs = level_diffs(&expected, &computed);
    for (k, missing, extra) in &diffs {
        println!(
            "  q({k}) differs: missing {{{}}}, extra {{{}}}",
            missing.join(", "),
            extra.join(", ")
        );
    }
    let order = report.nondegeneracy();
    if diffs.is_empty() && order == NondegeneracyOrder::Finite(3) {
        println!("match: {order}");
        Ok(0)
    } else {
        println!("MISMATCH: got {order}, expected 3-nondegenerate");
        Ok(EXIT_VIOLATION)
    }
}

fn order_cell(row: &SurveyRow) -> String {
    match row.order {
        NondegeneracyOrder::Finite(k) => k.to_string(),
        NondegeneracyOrder::Degenerate => "degenerate".into(),
        NondegeneracyOrder::TotallyReal | NondegeneracyOrder::Open => "-".into(),
    }
}

fn cmd_survey(
    families: &str,
    max_rank: usize,
    max_cayley_chain: usize,
    hypersurface_only: bool,
    oracle_max_rank: usize,
    format: Format,
) -> Result<u8, Failure> {
    let families: Vec<Family> = families
        .split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| f.parse().map_err(|e| Failure::usage("families", e)))
        .collect::<Result<_, _>>()?;
    if families.is_empty() {
        return Err(Failure::usage("families", "no families given"));
    }
    let config = SurveyConfig {
        families,
        max_rank,
        involutions: InvolutionSource::CayleyDepth(max_cayley_chain),
        hypersurface_only,
        oracle_max_rank,
    };
    let rows = run_survey(&config)?;
    let max_order = rows.iter().filter_map(|r| r.order.finite()).max();

    match format {
        Format::Json => {
            let out = serde_json::json!({ "rows": rows, "max_order": max_order });
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("rows serialize")
            );
        }
        Format::Text => {
            println!(
                "{:<5} {:<12} {:<12} {:<24} {:>5} {:>10} {:>4} {:>5} {:>7} {:>6}",
                "type",
                "qr",
                "orbit",
                "chain",
                "codim",
                "order",
                "c(q)",
                "bound",
                "minimal",
                "oracle"
            );
            for r in &rows {
                let qr: Vec<String> = r.qr.iter().map(usize::to_string).collect();
                let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                println!(
                    "{:<5} {:<12} {:<12} {:<24} {:>5} {:>10} {:>4} {:>5} {:>7} {:>6}",
                    format!("{}{}", r.family, r.rank),
                    format!("{{{}}}", qr.join(",")),
                    r.orbit_type.to_string(),
                    r.provenance.to_string(),
                    r.cr_codim,
                    order_cell(r),
                    opt(r.c_of_q.map(|c| c.to_string())),
                    opt(r.bound_satisfied.map(|b| b.to_string())),
                    r.minimal,
                    r.oracle_checked
                );
            }
            let checked = rows.iter().filter(|r| r.oracle_checked).count();
            println!(
                "rows: {}, oracle-checked: {checked}, max order: {}",
                rows.len(),
                max_order.map_or("-".into(), |k| k.to_string())
            );
        }
    }
    Ok(0)
}
