//! `cliffordlab` — generation, evaluation, and verification for the
//! Clifford-Appell / Fueter-Sce toolkit.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage or configuration errors. All randomness sits behind explicit
//! seeds and reports serialize deterministically, so identical invocations
//! produce byte-identical stdout.

use clap::{Args, Parser, Subcommand};
use cliffordlab_core::appell::{appell_polynomial, require_odd_dimension};
use cliffordlab_core::elementary::{eval_elementary, ElementaryKind};
use cliffordlab_core::fueter::{fueter_sce_monomial, WeightSequence};
use cliffordlab_core::json::{
    self, multivector_to_dto, polynomial_to_dto, MultivectorDto, PolynomialDto,
};
use cliffordlab_core::polynomial::{paravector_power, set_degree_cap, CliffordPolynomial};
use cliffordlab_core::polyanalytic::{appell_poly, c_map_monomial};
use cliffordlab_core::rkhs::{kernel_eval, SpaceConfig};
use cliffordlab_core::scalar::ScalarKind;
use cliffordlab_core::verify::{
    run_polyanalytic_relation, run_rkhs_operators, run_suite, Suite, VerificationReport,
    VerifyConfig,
};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cliffordlab", version, about = "Clifford-Appell polynomials, the Fueter-Sce map, and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clifford-Appell polynomial generation.
    Appell {
        #[command(subcommand)]
        cmd: AppellCmd,
    },
    /// The Fueter-Sce map: monomial images, the commuting diagram, weights.
    Fueter {
        #[command(subcommand)]
        cmd: FueterCmd,
    },
    /// Evaluate a monogenic elementary function at a point.
    Eval(EvalArgs),
    /// Reproducing-kernel evaluation.
    Kernel {
        #[command(subcommand)]
        cmd: KernelCmd,
    },
    /// Hilbert-module operator checks.
    Rkhs {
        #[command(subcommand)]
        cmd: RkhsCmd,
    },
    /// Polyanalytic maps and generalized Appell polynomials.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Run an invariant suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum AppellCmd {
    /// Emit P_k^n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FueterCmd {
    /// Emit Δ^{(n-1)/2} x^power in closed form.
    Apply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        power: usize,
        /// Re-derive the result by iterated Laplacian and compare exactly.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Check the Fueter-Sce/GCK commuting diagram on seeded random data.
    Diagram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Tabulate c_k and the transported b_k for a built-in space.
    Weights {
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        upto: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
}

#[derive(Args)]
struct EvalArgs {
    /// One of exp|sin|cos|sinh|cosh.
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    n: usize,
    /// Comma-separated coordinates x0,x1,...,xn.
    #[arg(long)]
    point: String,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum KernelCmd {
    /// Truncated kernel value with a certified tail bound.
    Eval {
        /// fock or hardy.
        #[arg(long)]
        space: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 64)]
        trunc: usize,
    },
}

#[derive(Subcommand)]
enum RkhsCmd {
    /// Run the operator-algebra checks (adjoints, commutator, shifts).
    Verify {
        #[arg(long, default_value = "operators")]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Emit C_{m+1}(x̄^k x^j).
    Cmap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Emit the generalized Appell polynomial A_{k,s}^n = x0^k P_s^n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Check ∂^m C_{m+1} = 2^{-m} τ_{m+1} on seeded random data.
    Verify {
        #[arg(long)]
        relation: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 7)]
        degree: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// algebra|appell|fueter|elementary|rkhs|polyanalytic|all.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "max-k", default_value_t = 12)]
    max_k: usize,
    #[arg(long = "max-degree", default_value_t = 7)]
    max_degree: usize,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Serialize)]
struct EvalDoc {
    schema: String,
    #[serde(rename = "fn")]
    function: String,
    n: usize,
    point: Vec<f64>,
    value: MultivectorDto,
    truncation: usize,
    tail_bound: f64,
}

#[derive(Serialize)]
struct KernelDoc {
    schema: String,
    space: String,
    n: usize,
    x: Vec<f64>,
    y: Vec<f64>,
    value: MultivectorDto,
    truncation: usize,
    tail_bound: f64,
}

#[derive(Serialize)]
struct WeightRow {
    k: usize,
    c: String,
    b: String,
}

#[derive(Serialize)]
struct WeightsDoc {
    schema: String,
    space: String,
    n: usize,
    weights: Vec<WeightRow>,
}

#[derive(Serialize)]
struct ApplyDoc {
    schema: String,
    n: usize,
    power: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    check_passed: Option<bool>,
    polynomial: PolynomialDto,
}

fn main() -> ExitCode {
    if let Ok(cap) = std::env::var("CLIFFORDLAB_DEGREE_CAP") {
        match cap.parse::<usize>() {
            Ok(v) => set_degree_cap(v),
            Err(_) => {
                eprintln!("error: CLIFFORDLAB_DEGREE_CAP must be an integer, got '{cap}'");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn default_tolerance() -> Result<f64, String> {
    match std::env::var("CLIFFORDLAB_TOL") {
        Ok(raw) => raw
            .parse::<f64>()
            .map_err(|_| format!("CLIFFORDLAB_TOL must be a float, got '{raw}'")),
        Err(_) => Ok(1e-10),
    }
}

fn parse_point(raw: &str, n: usize) -> Result<Vec<f64>, String> {
    let coords: Result<Vec<f64>, _> =
        raw.split(',').map(|c| c.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|e| format!("malformed point '{raw}': {e}"))?;
    if coords.len() != n + 1 {
        return Err(format!(
            "point has {} coordinates, expected n+1 = {}",
            coords.len(),
            n + 1
        ));
    }
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(format!("point '{raw}' has non-finite coordinates"));
    }
    Ok(coords)
}

fn emit_polynomial(p: &CliffordPolynomial, format: Format) -> Result<(), String> {
    match format {
        Format::Json => {
            let mut dto = polynomial_to_dto(p);
            dto.schema = Some(json::SCHEMA.to_string());
            println!("{}", serde_json::to_string_pretty(&dto).map_err(|e| e.to_string())?);
        }
        Format::Text => println!("{p}"),
        Format::Csv => return Err("csv output is not defined for polynomials".into()),
    }
    Ok(())
}

fn report_exit(report: &VerificationReport) -> Result<u8, String> {
    println!(
        "{}",
        serde_json::to_string_pretty(report).map_err(|e| e.to_string())?
    );
    eprintln!(
        "suite {}: {} cases, {} failures in {} ms",
        report.suite,
        report.cases,
        report.failures.len(),
        report.wall_ms
    );
    Ok(if report.passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Appell { cmd } => match cmd {
            AppellCmd::Gen { n, k, format } => {
                let p = appell_polynomial(n, k).map_err(|e| e.to_string())?;
                emit_polynomial(&p, format)?;
                Ok(0)
            }
        },
        Command::Fueter { cmd } => match cmd {
            FueterCmd::Apply { n, power, check, format } => {
                let p = fueter_sce_monomial(n, power).map_err(|e| e.to_string())?;
                let check_passed = if check {
                    let brute = paravector_power(n, power, ScalarKind::Exact)
                        .laplacian_power((n - 1) / 2);
                    Some(p == brute)
                } else {
                    None
                };
                match format {
                    Format::Json => {
                        let doc = ApplyDoc {
                            schema: json::SCHEMA.to_string(),
                            n,
                            power,
                            check_passed,
                            polynomial: polynomial_to_dto(&p),
                        };
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?
                        );
                    }
                    Format::Text => {
                        println!("{p}");
                        if let Some(ok) = check_passed {
                            println!("brute-force check: {}", if ok { "match" } else { "MISMATCH" });
                        }
                    }
                    Format::Csv => return Err("csv output is not defined here".into()),
                }
                Ok(if check_passed == Some(false) { 1 } else { 0 })
            }
            FueterCmd::Diagram { n, degree, seed, trials } => {
                let config = VerifyConfig {
                    n: Some(n),
                    max_degree: degree,
                    trials: Some(trials),
                    seed,
                    ..VerifyConfig::default()
                };
                let mut rng = cliffordlab_core::rng::SplitMix64::new(config.seed);
                let mut failures = 0usize;
                for _ in 0..trials {
                    let f = rng.taylor_series(n, degree, 5);
                    if !cliffordlab_core::fueter::diagram_check(n, &f)
                        .map_err(|e| e.to_string())?
                    {
                        failures += 1;
                    }
                }
                #[derive(Serialize)]
                struct DiagramDoc {
                    schema: String,
                    n: usize,
                    degree: usize,
                    seed: u64,
                    trials: usize,
                    failures: usize,
                }
                let doc = DiagramDoc {
                    schema: json::SCHEMA.to_string(),
                    n,
                    degree,
                    seed,
                    trials,
                    failures,
                };
                println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
                Ok(if failures == 0 { 0 } else { 1 })
            }
            FueterCmd::Weights { space, n, upto, format } => {
                require_odd_dimension(n).map_err(|e| e.to_string())?;
                let c = WeightSequence::by_name(&space).map_err(|e| e.to_string())?;
                let b = c.transport(n).map_err(|e| e.to_string())?;
                let rows: Vec<WeightRow> = (0..=upto)
                    .map(|k| WeightRow {
                        k,
                        c: c.weight(k).to_string(),
                        b: b.weight(k).to_string(),
                    })
                    .collect();
                match format {
                    Format::Csv => {
                        println!("k,c_k,b_k");
                        for row in &rows {
                            println!("{},{},{}", row.k, row.c, row.b);
                        }
                    }
                    Format::Json => {
                        let doc = WeightsDoc {
                            schema: json::SCHEMA.to_string(),
                            space: space.clone(),
                            n,
                            weights: rows,
                        };
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?
                        );
                    }
                    Format::Text => {
                        for row in &rows {
                            println!("k={}  c_k={}  b_k={}", row.k, row.c, row.b);
                        }
                    }
                }
                Ok(0)
            }
        },
        Command::Eval(args) => {
            let kind = ElementaryKind::by_name(&args.function).map_err(|e| e.to_string())?;
            let point = parse_point(&args.point, args.n)?;
            let tol = match args.tol {
                Some(t) => t,
                None => default_tolerance()?,
            };
            let value =
                eval_elementary(kind, args.n, &point, tol).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => {
                    let doc = EvalDoc {
                        schema: json::SCHEMA.to_string(),
                        function: kind.name().to_string(),
                        n: args.n,
                        point,
                        value: multivector_to_dto(&value.value),
                        truncation: value.truncation,
                        tail_bound: value.tail_bound,
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
                }
                Format::Text => {
                    println!("{}", value.value);
                    println!("truncation: {}", value.truncation);
                    println!("tail bound: {:e}", value.tail_bound);
                }
                Format::Csv => return Err("csv output is not defined here".into()),
            }
            Ok(0)
        }
        Command::Kernel { cmd } => match cmd {
            KernelCmd::Eval { space, n, x, y, trunc } => {
                let config = match space.as_str() {
                    "fock" => SpaceConfig::fock(n),
                    "hardy" => SpaceConfig::hardy(n),
                    other => return Err(format!("unknown space '{other}', expected fock|hardy")),
                };
                let x = parse_point(&x, n)?;
                let y = parse_point(&y, n)?;
                let kv = kernel_eval(&config, &x, &y, trunc).map_err(|e| e.to_string())?;
                let doc = KernelDoc {
                    schema: json::SCHEMA.to_string(),
                    space,
                    n,
                    x,
                    y,
                    value: multivector_to_dto(&kv.value),
                    truncation: kv.truncation,
                    tail_bound: kv.tail_bound,
                };
                println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
                Ok(0)
            }
        },
        Command::Rkhs { cmd } => match cmd {
            RkhsCmd::Verify { suite, n, trials, seed } => {
                let config = VerifyConfig { n, trials, seed, ..VerifyConfig::default() };
                let report = match suite.as_str() {
                    "operators" => run_rkhs_operators(&config).map_err(|e| e.to_string())?,
                    "rkhs" => run_suite(Suite::Rkhs, &config).map_err(|e| e.to_string())?,
                    other => {
                        return Err(format!("unknown rkhs suite '{other}', expected operators|rkhs"))
                    }
                };
                report_exit(&report)
            }
        },
        Command::Poly { cmd } => match cmd {
            PolyCmd::Cmap { n, m, k, j, format } => {
                let p = c_map_monomial(n, m, k, j).map_err(|e| e.to_string())?;
                emit_polynomial(&p, format)?;
                Ok(0)
            }
            PolyCmd::Gen { n, k, s, format } => {
                let p = appell_poly(n, k, s).map_err(|e| e.to_string())?;
                emit_polynomial(&p, format)?;
                Ok(0)
            }
            PolyCmd::Verify { relation, n, m, degree, seed, trials } => {
                if !relation {
                    return Err("pass --relation to select the implemented check".into());
                }
                let config = VerifyConfig {
                    n,
                    max_degree: degree,
                    trials,
                    seed,
                    ..VerifyConfig::default()
                };
                let report = run_polyanalytic_relation(&config, m.unwrap_or(2))
                    .map_err(|e| e.to_string())?;
                report_exit(&report)
            }
        },
        Command::Verify(args) => {
            let suite = Suite::by_name(&args.suite).map_err(|e| e.to_string())?;
            let tolerance = match args.tol {
                Some(t) => t,
                None => default_tolerance()?,
            };
            let config = VerifyConfig {
                n: args.n,
                max_k: args.max_k,
                max_degree: args.max_degree,
                trials: args.trials,
                seed: args.seed,
                tolerance,
            };
            let report = run_suite(suite, &config).map_err(|e| e.to_string())?;
            report_exit(&report)
        }
    }
}
