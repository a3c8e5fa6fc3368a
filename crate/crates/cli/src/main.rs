//! `leibniz` — exact computations with finite-dimensional right Leibniz
//! algebras given by structure constants.
//!
//! Exit codes: 0 success, 1 mathematical failure (identity violation,
//! verification failure, reproduction mismatch, bad input file), 2 command
//! line misuse.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leibniz_core::dynamic::AnyAlgebra;
use leibniz_core::expect::run_reproduce;
use leibniz_core::fileio;
use leibniz_core::holomorph::{
    bider_semidirect, classical_holomorph, lie_holomorph, misra_holomorph, HolomorphResult,
};
use leibniz_core::iso::{find_isomorphism, fingerprint, verify_homomorphism};
use leibniz_core::spaces::{
    antiderivation_space, biderivation_space, derivation_space, inner_derivations,
    lie_derivation_space,
};
use leibniz_core::with_algebra;
use leibniz_core::{catalog, FieldDesc, Scalar};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact Leibniz-algebra computations over Q and F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identities of an algebra file; exit 0 iff the
    /// right identity holds.
    Check { file: PathBuf },
    /// Print the isomorphism-invariant fingerprint as a table and as JSON.
    Invariants { file: PathBuf },
    /// Print canonical bases of derivation-type spaces.
    Spaces {
        file: PathBuf,
        #[command(flatten)]
        which: SpaceFlags,
    },
    /// Build a holomorph-style algebra and emit it as an algebra file
    /// (identity flags of the result go to stderr).
    Holomorph {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: HolKind,
        /// Build on the opposite algebra (for right-presented input to the
        /// misra construction).
        #[arg(long)]
        op: bool,
    },
    /// Verify an explicit map between two algebras, or search for an
    /// isomorphism over a prime field.
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        #[command(flatten)]
        mode: IsoMode,
    },
    /// Built-in catalog of low-dimensional right Leibniz algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Recompute the published classification tables for the catalog and
    /// report match/mismatch/flagged per expectation. Worker count is read
    /// from LEIBNIZ_WORKERS (default 1; the report is byte-deterministic
    /// for any worker count).
    Reproduce {
        /// Also write the machine-readable report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct IsoMode {
    /// Verify this explicit map (columns = images of source basis vectors).
    #[arg(long)]
    map: Option<PathBuf>,
    /// Exhaustive search over a prime field.
    #[arg(long)]
    search: bool,
}

#[derive(Args)]
#[group(multiple = true)]
struct SpaceFlags {
    /// Derivations.
    #[arg(long)]
    der: bool,
    /// Anti-derivations.
    #[arg(long)]
    ader: bool,
    /// Biderivation pairs.
    #[arg(long)]
    bider: bool,
    /// Lie-derivations.
    #[arg(long)]
    lieder: bool,
    /// Inner derivations.
    #[arg(long)]
    inn: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum HolKind {
    Lie,
    Classical,
    Misra,
    Bider,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List catalog entries.
    List,
    /// Emit one entry as an algebra file.
    Emit {
        name: String,
        /// Parameter assignment, e.g. --param alpha=2 (repeatable).
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        /// Coefficient field: Q (default) or F<p>, e.g. F5.
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((k.to_string(), v.to_string())),
        _ => Err("expected key=value".to_string()),
    }
}

fn parse_field(s: &str) -> Result<FieldDesc, String> {
    if s == "Q" {
        return Ok(FieldDesc::Rationals);
    }
    if let Some(digits) = s.strip_prefix('F') {
        let p: u32 = digits
            .parse()
            .map_err(|_| format!("invalid field `{s}`: expected Q or F<p>"))?;
        return FieldDesc::prime(p).map_err(|e| e.to_string());
    }
    Err(format!("invalid field `{s}`: expected Q or F<p>"))
}

fn read_algebra(path: &PathBuf) -> Result<AnyAlgebra, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    fileio::parse_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check { file } => {
            let alg = read_algebra(&file)?;
            let flags = with_algebra!(&alg, |a| a.identity_flags());
            println!("field:          {}", alg.field());
            println!("dim:            {}", alg.dim());
            println!("right Leibniz:  {}", flags.right_leibniz);
            println!("left Leibniz:   {}", flags.left_leibniz);
            println!("symmetric:      {}", flags.symmetric);
            println!("antisymmetric:  {}", flags.antisymmetric);
            println!("Lie:            {}", flags.lie);
            Ok(if flags.right_leibniz {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Invariants { file } => {
            let alg = read_algebra(&file)?;
            let fp = with_algebra!(&alg, |a| fingerprint(a)).map_err(|e| e.to_string())?;
            print!("{}", fingerprint_table(&fp));
            println!();
            println!(
                "{}",
                serde_json::to_string_pretty(&fp).expect("serializable")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Spaces { file, which } => {
            let alg = read_algebra(&file)?;
            let all = !(which.der || which.ader || which.bider || which.lieder || which.inn);
            with_algebra!(&alg, |a| {
                if which.der || all {
                    let s = derivation_space(a);
                    print_operators("Der", s.dim(), &s.basis_matrices());
                }
                if which.ader || all {
                    let s = antiderivation_space(a);
                    print_operators("ADer", s.dim(), &s.basis_matrices());
                }
                if which.lieder || all {
                    let s = lie_derivation_space(a).map_err(|e| e.to_string())?;
                    print_operators("Der_Lie", s.dim(), &s.basis_matrices());
                }
                if which.inn || all {
                    let s = inner_derivations(a).map_err(|e| e.to_string())?;
                    print_operators("Inn", s.dim(), &s.basis_matrices());
                }
                if which.bider || all {
                    let s = biderivation_space(a);
                    println!("Bider: dim {}", s.dim());
                    for (i, (d, dd)) in s.basis_pairs().iter().enumerate() {
                        println!("  pair {}:", i + 1);
                        print_matrix("    d: ", d);
                        print_matrix("    D: ", dd);
                    }
                }
                Ok::<_, String>(())
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Holomorph { file, kind, op } => {
            let alg = read_algebra(&file)?;
            let constructed = with_algebra!(&alg, |a| {
                let base = if op { a.opposite() } else { a.clone() };
                let hol: HolomorphResult<_> = match kind {
                    HolKind::Lie => lie_holomorph(&base),
                    HolKind::Classical => classical_holomorph(&base),
                    HolKind::Misra => misra_holomorph(&base),
                    HolKind::Bider => bider_semidirect(&base),
                }
                .map_err(|e| e.to_string())?;
                let flags = hol.algebra.identity_flags();
                eprintln!(
                    "constructed {} holomorph: dim {} = {} + {}; right Leibniz: {}, \
                     left Leibniz: {}, Lie: {}",
                    hol.kind,
                    hol.algebra.dim(),
                    hol.base_dim,
                    hol.acting_dim,
                    flags.right_leibniz,
                    flags.left_leibniz,
                    flags.lie
                );
                Ok::<AnyAlgebra, String>(hol.algebra.into())
            })?;
            print!("{}", fileio::emit_algebra(&constructed));
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { file_a, file_b, mode } => {
            let a = read_algebra(&file_a)?;
            let b = read_algebra(&file_b)?;
            a.field()
                .check_same(&b.field())
                .map_err(|e| e.to_string())?;
            if let Some(map_path) = mode.map {
                let text = std::fs::read_to_string(&map_path)
                    .map_err(|e| format!("cannot read {}: {e}", map_path.display()))?;
                let verified = match (&a, &b) {
                    (AnyAlgebra::Q(x), AnyAlgebra::Q(y)) => {
                        let f = fileio::parse_map(&text, &x.field()).map_err(|e| e.to_string())?;
                        verify_homomorphism(x, y, &f).map_err(|e| e.to_string())?
                    }
                    (AnyAlgebra::P(x), AnyAlgebra::P(y)) => {
                        let f = fileio::parse_map(&text, &x.field()).map_err(|e| e.to_string())?;
                        verify_homomorphism(x, y, &f).map_err(|e| e.to_string())?
                    }
                    _ => unreachable!("fields already checked equal"),
                };
                return Ok(if verified.is_iso {
                    println!("isomorphism verified");
                    ExitCode::SUCCESS
                } else if verified.is_hom {
                    println!("homomorphism but not an isomorphism");
                    ExitCode::from(1)
                } else {
                    println!("not a homomorphism");
                    ExitCode::from(1)
                });
            }
            match (&a, &b) {
                (AnyAlgebra::P(x), AnyAlgebra::P(y)) => {
                    match find_isomorphism(x, y).map_err(|e| e.to_string())? {
                        Some(witness) => {
                            print!("{}", fileio::emit_map(&witness));
                            eprintln!("isomorphism found (witness verified)");
                            Ok(ExitCode::SUCCESS)
                        }
                        None => {
                            println!("none (exhausted)");
                            Ok(ExitCode::from(1))
                        }
                    }
                }
                _ => {
                    println!("unknown (field infinite)");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                for e in catalog::ENTRIES {
                    let params = if e.params.is_empty() {
                        String::new()
                    } else {
                        let ps: Vec<String> = e
                            .params
                            .iter()
                            .map(|(n, c)| format!("{n}: {c}"))
                            .collect();
                        format!("  [{}]", ps.join("; "))
                    };
                    println!("{:<12} dim {}  {}{}", e.name, e.dim, e.brackets, params);
                }
                Ok(ExitCode::SUCCESS)
            }
            CatalogCommand::Emit { name, params, field } => {
                let field = parse_field(&field).map_err(|e| e)?;
                let params: BTreeMap<String, String> = params.into_iter().collect();
                let alg = leibniz_core::dynamic::catalog_get(&name, &params, &field)
                    .map_err(|e| e.to_string())?;
                print!("{}", fileio::emit_algebra(&alg));
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Reproduce { report } => {
            let workers = std::env::var("LEIBNIZ_WORKERS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .filter(|&w| w >= 1)
                .unwrap_or(1);
            let result = run_reproduce(workers);
            print!("{}", result.to_table());
            if let Some(path) = report {
                std::fs::write(&path, result.to_json())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(ExitCode::from(result.exit_code() as u8))
        }
    }
}

fn print_operators<K: Scalar>(name: &str, dim: usize, mats: &[leibniz_core::Matrix<K>]) {
    println!("{name}: dim {dim}");
    for (i, m) in mats.iter().enumerate() {
        print_matrix(&format!("  basis {}: ", i + 1), m);
    }
}

fn print_matrix<K: Scalar>(prefix: &str, m: &leibniz_core::Matrix<K>) {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = (0..m.cols()).map(|c| m.at(r, c).literal()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    println!("{prefix}{}", rows.join(" "));
}

fn fingerprint_table(fp: &leibniz_core::iso::Fingerprint) -> String {
    let series = |dims: &[usize]| -> String {
        dims.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let class = |c: Option<usize>| c.map_or("-".to_string(), |v| v.to_string());
    let mut out = String::new();
    out.push_str(&format!("{:<26}{}\n", "dim", fp.dim));
    out.push_str(&format!(
        "{:<26}right={} left={} symmetric={} antisymmetric={} lie={}\n",
        "identities",
        fp.flags.right_leibniz,
        fp.flags.left_leibniz,
        fp.flags.symmetric,
        fp.flags.antisymmetric,
        fp.flags.lie
    ));
    out.push_str(&format!("{:<26}{}\n", "dim Leibniz kernel", fp.leibniz_kernel_dim));
    out.push_str(&format!("{:<26}{}\n", "dim left center", fp.left_center_dim));
    out.push_str(&format!("{:<26}{}\n", "dim right center", fp.right_center_dim));
    out.push_str(&format!("{:<26}{}\n", "dim center", fp.center_dim));
    out.push_str(&format!("{:<26}{}\n", "dim Lie-center", fp.lie_center_dim));
    out.push_str(&format!(
        "{:<26}{}\n",
        "derived series dims",
        series(&fp.derived_series_dims)
    ));
    out.push_str(&format!(
        "{:<26}{}\n",
        "lower central dims",
        series(&fp.lower_central_dims)
    ));
    out.push_str(&format!("{:<26}{}\n", "nilpotency class", class(fp.nilpotency_class)));
    out.push_str(&format!("{:<26}{}\n", "solvability class", class(fp.solvability_class)));
    out.push_str(&format!("{:<26}{}\n", "dim Der", fp.der_dim));
    out.push_str(&format!("{:<26}{}\n", "dim ADer", fp.ader_dim));
    out.push_str(&format!("{:<26}{}\n", "dim Bider", fp.bider_dim));
    out.push_str(&format!("{:<26}{}\n", "dim Der_Lie", fp.der_lie_dim));
    out.push_str(&format!("{:<26}{}\n", "dim Inn", fp.inn_dim));
    out
}
