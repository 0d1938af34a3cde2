use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use casimir_core::algebra::{cartan_type, vogel_point};
use casimir_core::casimir::casimir_defining;
use casimir_core::projectors::{
    dimensions, projector5_closed, projector6_closed, so8_system, so8_tensors,
};
use casimir_core::tensorspace::to_sparse_string;
use casimir_core::verify::{run_suite_with, SuiteOptions, ORACLE_MAX_N};
use casimir_core::vogel::{
    c_hat, correspondence, piece_c2, piece_dim, vogel_exception, Piece, SO8_CORRESPONDENCE,
};
use casimir_core::{
    make_spec_with, projector_system, AlgebraSpec, CasimirBundle, Error, Family, Level, Limits,
    SparseOperator,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Split Casimir operators of so(N) and sp(N) on ad ⊗ ad.
#[derive(Debug, Parser)]
#[command(name = "casimir", version)]
struct Cli {
    /// Largest defining dimension accepted.
    #[arg(long, global = true, env = "CASIMIR_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Defining dimension N.
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the verification suite and print its report.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest n for which the brute-force oracles run at level full.
        #[arg(long, default_value_t = ORACLE_MAX_N)]
        oracle_max_n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the dimensions of the projectors on ad ⊗ ad.
    Dims {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write one operator in the sparse format.
    Export {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// c_f, c_ad, c_plus, c_minus, I, P, K, proj1..proj6, A4, E4 or so8:<label>.
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, default_value_t = Format::SparseOp)]
        format: Format,
        /// Defaults to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print Vogel parameters, piece data and the projector correspondence.
    Vogel {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    So,
    Sp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    SparseOp,
}

/// Bad arguments that clap cannot see, e.g. `sp` with odd `n`.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            if is_usage(&err) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_usage(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        err.downcast_ref::<Error>(),
        Some(
            Error::SymplecticOddDimension(_)
                | Error::DimensionTooSmall { .. }
                | Error::DimensionTooLarge { .. }
                | Error::UnknownProjector(_)
                | Error::WrongAlgebra(_)
                | Error::UnsupportedFamily(_)
        )
    )
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let limits = match cli.max_n {
        Some(max_n) => Limits { max_n },
        None => Limits::default(),
    };
    match cli.command {
        Command::Verify {
            algebra,
            level,
            format,
            oracle_max_n,
            output,
        } => {
            let spec = resolve(&algebra, &limits)?;
            cmd_verify(&spec, level, format, oracle_max_n, output.as_deref())
        }
        Command::Dims { algebra, format } => {
            let spec = resolve(&algebra, &limits)?;
            cmd_dims(&spec, format)
        }
        Command::Export {
            algebra,
            op,
            format,
            output,
        } => {
            let spec = resolve(&algebra, &limits)?;
            cmd_export(&spec, &op, format, output.as_deref())
        }
        Command::Vogel { algebra, format } => {
            let spec = resolve(&algebra, &limits)?;
            cmd_vogel(&spec, format)
        }
    }
}

fn resolve(args: &AlgebraArgs, limits: &Limits) -> anyhow::Result<AlgebraSpec> {
    let family = match args.family {
        FamilyArg::So => Family::Orthogonal,
        FamilyArg::Sp => Family::Symplectic,
    };
    Ok(make_spec_with(family, args.n, limits)?)
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn structured(value: &serde_json::Value) -> anyhow::Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn cmd_verify(
    spec: &AlgebraSpec,
    level: LevelArg,
    format: Format,
    oracle_max_n: usize,
    output: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let level = match level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let options = SuiteOptions {
        level,
        oracle_max_n,
    };
    let record = run_suite_with(spec, &options);
    let text = match format {
        Format::Text => record.to_text(),
        Format::Structured => structured(&serde_json::to_value(&record)?)?,
        Format::SparseOp => return Err(usage("verify reports as text or structured")),
    };
    emit(output, &text)?;
    Ok(if record.passed() {
        Outcome::Ok
    } else {
        Outcome::ChecksFailed
    })
}

fn cmd_dims(spec: &AlgebraSpec, format: Format) -> anyhow::Result<Outcome> {
    let bundle = CasimirBundle::new(spec)?;
    let system = projector_system(&bundle)?;
    let dims = dimensions(&system)?;
    let labels = system.labels();
    let text = match format {
        Format::Text => format!(
            "# {spec} dimensions\n{}\n{}\n",
            labels.join(" "),
            dims.iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ),
        Format::Structured => structured(&json!({
            "algebra": spec.to_string(),
            "labels": labels,
            "dims": dims,
        }))?,
        Format::SparseOp => return Err(usage("dims prints text or structured")),
    };
    emit(None, &text)?;
    Ok(Outcome::Ok)
}

const PLAIN_OPERATORS: [&str; 13] = [
    "c_f", "c_ad", "c_plus", "c_minus", "I", "P", "K", "proj1", "proj2", "proj3", "proj4", "proj5",
    "proj6",
];

fn cmd_export(
    spec: &AlgebraSpec,
    name: &str,
    format: Format,
    output: Option<&Path>,
) -> anyhow::Result<Outcome> {
    if format == Format::Structured {
        return Err(usage("export writes the sparse-op format only"));
    }
    let op = export_operator(spec, name)?;
    emit(output, &to_sparse_string(&op))?;
    Ok(Outcome::Ok)
}

fn export_operator(spec: &AlgebraSpec, name: &str) -> anyhow::Result<SparseOperator> {
    if let Some(label) = name.strip_prefix("so8:") {
        if !spec.is_so8() {
            return Err(usage(format!("`{name}` needs so(8), got {spec}")));
        }
        let system = so8_system(&CasimirBundle::new(spec)?)?;
        return Ok(system.operator(label)?.clone());
    }
    if name == "A4" || name == "E4" {
        let (a4, e4) = so8_tensors(spec)?;
        return Ok(if name == "A4" { a4 } else { e4 });
    }
    if !PLAIN_OPERATORS.contains(&name) {
        return Err(usage(format!(
            "unknown operator `{name}`; expected one of {}, A4, E4, so8:<label>",
            PLAIN_OPERATORS.join(", ")
        )));
    }
    if name == "c_f" {
        return Ok(casimir_defining(spec)?);
    }
    // At so(8) the generic proj5 and proj6 share a root, so they come from
    // their closed forms; the other four coincide with refined projectors.
    if spec.is_so8() {
        match name {
            "proj5" => return Ok(projector5_closed(spec)?),
            "proj6" => return Ok(projector6_closed(spec)?),
            _ => {}
        }
    }
    let bundle = CasimirBundle::new(spec)?;
    let op = match name {
        "c_ad" => bundle.c_ad,
        "c_plus" => bundle.c_plus,
        "c_minus" => bundle.c_minus,
        "I" => bundle.op_i,
        "P" => bundle.op_p,
        "K" => bundle.op_k,
        proj if spec.is_so8() => {
            let refined = match proj {
                "proj1" => "proj1p",
                "proj2" => "proj2p",
                "proj3" => "proj3p",
                _ => "proj5p",
            };
            so8_system(&bundle)?.operator(refined)?.clone()
        }
        proj => projector_system(&bundle)?.operator(proj)?.clone(),
    };
    Ok(op)
}

fn show(value: Option<casimir_core::Rational>) -> String {
    value.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

fn cmd_vogel(spec: &AlgebraSpec, format: Format) -> anyhow::Result<Outcome> {
    let point = vogel_point(spec);
    let kind = cartan_type(spec);
    let pieces: Vec<_> = Piece::ALL
        .iter()
        .map(|&piece| {
            let c2 = piece_c2(&point, piece);
            (piece, piece_dim(&point, piece), c2, c2.map(c_hat))
        })
        .collect();
    let generic = correspondence(spec)?;
    let refined: &[(&str, Piece)] = if spec.is_so8() {
        &SO8_CORRESPONDENCE
    } else {
        &[]
    };
    let exception = vogel_exception(spec);

    let text = match format {
        Format::Text => {
            let mut s = format!(
                "# {spec} {kind}\nalpha={} beta={} gamma={} t={}\npiece\tdim\tc2\tc_hat\n",
                point.alpha, point.beta, point.gamma, point.t
            );
            for (piece, dim, c2, ch) in &pieces {
                s += &format!(
                    "{}\t{}\t{}\t{}\n",
                    piece.label(),
                    show(*dim),
                    show(*c2),
                    show(*ch)
                );
            }
            s += "# correspondence\n";
            for (label, piece) in generic {
                s += &format!("{label}\t{}\n", piece.label());
            }
            if !refined.is_empty() {
                s += "# so(8) correspondence\n";
                for (label, piece) in refined {
                    s += &format!("{label}\t{}\n", piece.label());
                }
            }
            if let Some(why) = exception {
                s += &format!("# exception: {why}\n");
            }
            s
        }
        Format::Structured => {
            let text_of = |v: Option<casimir_core::Rational>| v.map(|v| v.to_string());
            let pieces: Vec<_> = pieces
                .iter()
                .map(|(piece, dim, c2, ch)| {
                    json!({
                        "piece": piece.label(),
                        "dim": text_of(*dim),
                        "c2": text_of(*c2),
                        "c_hat": text_of(*ch),
                    })
                })
                .collect();
            let pairs = |map: &[(&str, Piece)]| -> Vec<serde_json::Value> {
                map.iter()
                    .map(|(label, piece)| json!({"projector": label, "piece": piece.label()}))
                    .collect()
            };
            structured(&json!({
                "algebra": spec.to_string(),
                "cartan_type": kind.to_string(),
                "alpha": point.alpha.to_string(),
                "beta": point.beta.to_string(),
                "gamma": point.gamma.to_string(),
                "t": point.t.to_string(),
                "pieces": pieces,
                "correspondence": pairs(&generic),
                "so8_correspondence": pairs(refined),
                "exception": exception,
            }))?
        }
        Format::SparseOp => return Err(usage("vogel prints text or structured")),
    };
    emit(None, &text)?;
    Ok(Outcome::Ok)
}
