//! Command-line front end for the quantum dilogarithm library.

mod complexlit;
mod config;
mod report;
mod suites;

use clap::{Args, Parser, Subcommand};
use complexlit::parse_complex;
use config::FileConfig;
use qdilog::identities::CheckConfig;
use qdilog::numerics::QuadConfig;
use qdilog::qdilog::{g_small, gb_with_err, sb};
use qdilog::representation::{
    casimir_apply, check_serre_relations, eval_phi, phi_eigen_residual, plancherel_density,
};
use qdilog::special::{eval_fb_diag, FbArgs};
use qdilog::wfun::WFunction;
use qdilog::{c64, BParams, Error, C64};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qdilog",
    about = "Evaluate the non-compact quantum dilogarithm family and verify its integral identities",
    long_about = None,
    after_help = "Complex literals follow the grammar [-]ddd[.ddd][+|-ddd[.ddd]i], no spaces \
                  (examples: 1.5, -0.3+0.25i, 2i). Config files hold 'key = value' lines \
                  (keys: b, tol, seed, suite, out, format, report); flags override the file. \
                  QDILOG_THREADS caps the verification worker threads."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Deformation parameter, in (0, 1).
    #[arg(long)]
    b: Option<f64>,
    /// Pass tolerance for identity checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for the pseudo-random parameter grids.
    #[arg(long)]
    seed: Option<u64>,
    /// Config file with 'key = value' lines; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[command(flatten)]
        common: Common,
        /// Function: gb | sb | g_small | phi | fb | plancherel.
        function: String,
        /// Complex argument for gb/sb/g_small (grammar: re+imi).
        #[arg(long)]
        z: Option<String>,
        /// Spectral label for phi/plancherel.
        #[arg(long)]
        lambda: Option<f64>,
        /// Real argument for phi.
        #[arg(long)]
        x: Option<f64>,
        /// First upper argument of fb.
        #[arg(long)]
        alpha: Option<String>,
        /// Second upper argument of fb.
        #[arg(long)]
        beta: Option<String>,
        /// Lower argument of fb.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Run verification suites and emit a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suite names, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here (stdout otherwise).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Report format (json only).
        #[arg(long, default_value = "json")]
        format: String,
        /// List available suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Scan a function over a complex grid and emit CSV (re,im,abs,arg).
    Scan {
        #[command(flatten)]
        common: Common,
        /// Function: gb | sb | g_small | phi | plancherel.
        function: String,
        /// Real-axis grid "start:end:step".
        #[arg(long)]
        re: String,
        /// Imaginary-axis grid "start:end:step".
        #[arg(long)]
        im: String,
        /// Output CSV path (stdout otherwise).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Spectral label when scanning phi in x.
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Run the principal-series and Casimir probes.
    Casimir {
        #[command(flatten)]
        common: Common,
        /// Spectral label.
        #[arg(long, default_value_t = 0.4)]
        lambda: f64,
        /// Determinant character.
        #[arg(long, default_value_t = 0.0)]
        t: f64,
    },
}

struct Resolved {
    b: f64,
    tol: f64,
    seed: u64,
}

fn resolve(common: &Common) -> Result<Resolved, String> {
    let file = match &common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let b = common.b.or(file.get_f64("b")?).unwrap_or(0.775);
    let tol = common.tol.or(file.get_f64("tol")?).unwrap_or(1e-6);
    let seed = common.seed.or(file.get_u64("seed")?).unwrap_or(7);
    if !(tol > 0.0) {
        return Err("tol must be positive".into());
    }
    Ok(Resolved { b, tol, seed })
}

fn domain_exit(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_DOMAIN)
}

fn print_value(v: C64, err: f64) {
    println!("value: {:.15e} {:+.15e} i", v.re, v.im);
    println!("abs:   {:.15e}", v.norm());
    println!("arg:   {:.15e}", v.arg());
    println!("quadrature err estimate: {err:.3e}");
}

fn cmd_eval(
    common: &Common,
    function: &str,
    z: Option<&str>,
    lambda: Option<f64>,
    x: Option<f64>,
    alpha: Option<&str>,
    beta: Option<&str>,
    gamma: Option<&str>,
) -> ExitCode {
    let resolved = match resolve(common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let p = match BParams::new(resolved.b) {
        Ok((p, warn)) => {
            if let Some(w) = warn {
                eprintln!("warning: {w}");
            }
            p
        }
        Err(e) => return domain_exit(&e),
    };
    let quad = QuadConfig::default();
    let need_z = || -> Result<C64, ExitCode> {
        match z {
            Some(s) => parse_complex(s).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_PARSE)
            }),
            None => {
                eprintln!("error: --z is required for this function");
                Err(ExitCode::from(EXIT_PARSE))
            }
        }
    };
    match function {
        "gb" => match need_z() {
            Ok(zv) => match gb_with_err(zv, &p, &quad) {
                Ok((v, err)) => {
                    print_value(v, err);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            },
            Err(code) => code,
        },
        "sb" => match need_z() {
            Ok(zv) => match sb(zv, &p, &quad) {
                Ok(v) => {
                    print_value(v, quad.abs_tol);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            },
            Err(code) => code,
        },
        "g_small" => match need_z() {
            Ok(zv) => match g_small(zv, &p, &quad) {
                Ok(v) => {
                    print_value(v, quad.abs_tol);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            },
            Err(code) => code,
        },
        "phi" => {
            let (Some(l), Some(xv)) = (lambda, x) else {
                eprintln!("error: phi needs --lambda and --x");
                return ExitCode::from(EXIT_PARSE);
            };
            match eval_phi(l, c64(xv, 0.0), &p, &quad) {
                Ok(v) => {
                    print_value(v, quad.abs_tol);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            }
        }
        "plancherel" => {
            let Some(l) = lambda else {
                eprintln!("error: plancherel needs --lambda");
                return ExitCode::from(EXIT_PARSE);
            };
            match plancherel_density(l, &p) {
                Ok(v) => {
                    print_value(c64(v, 0.0), 0.0);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            }
        }
        "fb" => {
            let parse3 = |s: Option<&str>, name: &str| -> Result<C64, ExitCode> {
                match s {
                    Some(v) => parse_complex(v).map_err(|e| {
                        eprintln!("error: {e}");
                        ExitCode::from(EXIT_PARSE)
                    }),
                    None => {
                        eprintln!("error: fb needs --{name}");
                        Err(ExitCode::from(EXIT_PARSE))
                    }
                }
            };
            let args = match (parse3(alpha, "alpha"), parse3(beta, "beta"), parse3(gamma, "gamma"), need_z()) {
                (Ok(a), Ok(bb), Ok(g), Ok(zz)) => FbArgs {
                    alpha: a,
                    beta: bb,
                    gamma: g,
                    z: zz,
                },
                (Err(c), ..) | (_, Err(c), ..) | (_, _, Err(c), _) | (_, _, _, Err(c)) => return c,
            };
            match eval_fb_diag(&args, &p, &quad) {
                Ok((v, diag)) => {
                    print_value(v, diag.err_estimate);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => domain_exit(&e),
            }
        }
        other => {
            eprintln!("error: unknown function '{other}' (expected gb|sb|g_small|phi|fb|plancherel)");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

fn cmd_verify(common: &Common, suite: &str, report_path: Option<&PathBuf>, format: &str, list: bool) -> ExitCode {
    if list {
        for name in suites::suite_names() {
            println!("{name}");
        }
        return ExitCode::from(EXIT_OK);
    }
    if format != "json" {
        eprintln!("error: only json reports are supported");
        return ExitCode::from(EXIT_PARSE);
    }
    let resolved = match resolve(common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let p = match BParams::new(resolved.b) {
        Ok((p, warn)) => {
            if let Some(w) = warn {
                eprintln!("warning: {w}");
            }
            p
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let names: Vec<&str> = if suite == "all" {
        suites::suite_names()
    } else {
        suite.split(',').map(str::trim).collect()
    };
    let ctx = suites::SuiteContext {
        p,
        cfg: CheckConfig {
            quad: QuadConfig {
                abs_tol: (resolved.tol * 1e-3).max(1e-12),
                rel_tol: (resolved.tol * 1e-3).max(1e-12),
                ..Default::default()
            },
            tol: resolved.tol,
        },
        seed: resolved.seed,
    };
    let reports = match suites::run_suites(&names, &ctx) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let json = report::render_sorted(&reports);
    let all_pass = reports.iter().all(|r| r.pass);
    match report_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => println!("{json}"),
    }
    let (npass, ntot) = (reports.iter().filter(|r| r.pass).count(), reports.len());
    eprintln!("{npass}/{ntot} checks passed");
    if all_pass {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("bad grid spec '{spec}': expected start:end:step"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start '{}'", parts[0]))?;
    let end: f64 = parts[1].parse().map_err(|_| format!("bad grid end '{}'", parts[1]))?;
    let step: f64 = parts[2].parse().map_err(|_| format!("bad grid step '{}'", parts[2]))?;
    if !(step > 0.0) || end < start {
        return Err(format!("bad grid spec '{spec}': need start <= end and step > 0"));
    }
    let mut out = Vec::new();
    let n = ((end - start) / step).round() as usize;
    for k in 0..=n {
        let v = start + step * k as f64;
        if v <= end + 1e-12 {
            out.push(v);
        }
    }
    Ok(out)
}

fn cmd_scan(
    common: &Common,
    function: &str,
    re: &str,
    im: &str,
    out: Option<&PathBuf>,
    lambda: Option<f64>,
) -> ExitCode {
    let resolved = match resolve(common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let (res, ims) = match (parse_grid(re), parse_grid(im)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let p = match BParams::make(resolved.b) {
        Ok(p) => p,
        Err(e) => return domain_exit(&e),
    };
    let quad = QuadConfig::default();
    let mut csv = String::from("re,im,abs,arg\n");
    for &ri in &res {
        for &ii in &ims {
            let z = c64(ri, ii);
            let value = match function {
                "gb" => gb_with_err(z, &p, &quad).map(|(v, _)| v),
                "sb" => sb(z, &p, &quad),
                "g_small" => g_small(z, &p, &quad),
                "phi" => eval_phi(lambda.unwrap_or(0.5), z, &p, &quad),
                "plancherel" => plancherel_density(ri, &p).map(|v| c64(v, 0.0)),
                other => {
                    eprintln!("error: unknown scan function '{other}'");
                    return ExitCode::from(EXIT_PARSE);
                }
            };
            match value {
                Ok(v) => csv.push_str(&format!("{ri},{ii},{},{}\n", v.norm(), v.arg())),
                Err(_) => csv.push_str(&format!("{ri},{ii},,\n")),
            }
        }
    }
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &csv) {
                eprintln!("error: cannot write CSV: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => print!("{csv}"),
    }
    ExitCode::from(EXIT_OK)
}

fn cmd_casimir(common: &Common, lambda: f64, t: f64) -> ExitCode {
    let resolved = match resolve(common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let p = match BParams::make(resolved.b) {
        Ok(p) => p,
        Err(e) => return domain_exit(&e),
    };
    let quad = QuadConfig::default();
    let f = WFunction::gaussian(c64(1.0, 0.0), c64(0.0, 0.0)).unwrap();
    let pts = [-1.5, -0.6, 0.0, 0.7, 1.4, 2.1];
    let mut ok = true;
    match check_serre_relations(lambda, t, &f, &pts, &p, 1e-10) {
        Ok(rep) => {
            println!("[{}] EF-FE commutation residual: {:.3e}", if rep.pass { "PASS" } else { "FAIL" }, rep.abs_err);
            ok &= rep.pass;
        }
        Err(e) => return domain_exit(&e),
    }
    match casimir_apply(lambda, t, &f, &pts, &p) {
        Ok((mean, var)) => {
            let pass = var < 1e-10;
            println!(
                "[{}] Casimir scalar {:.12} {:+.12} i (variance {:.3e})",
                if pass { "PASS" } else { "FAIL" },
                mean.re,
                mean.im,
                var
            );
            ok &= pass;
        }
        Err(e) => return domain_exit(&e),
    }
    let mut worst = 0.0f64;
    for k in 0..6 {
        let x = c64(-1.0 + 0.4 * k as f64, 0.0);
        match phi_eigen_residual(lambda.max(0.05), x, &p, &quad) {
            Ok(r) => worst = worst.max(r),
            Err(e) => return domain_exit(&e),
        }
    }
    let pass = worst < 1e-8;
    println!("[{}] eigenfunction residual (max over x-grid): {worst:.3e}", if pass { "PASS" } else { "FAIL" });
    ok &= pass;
    if ok {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Eval {
            common,
            function,
            z,
            lambda,
            x,
            alpha,
            beta,
            gamma,
        } => cmd_eval(
            common,
            function,
            z.as_deref(),
            *lambda,
            *x,
            alpha.as_deref(),
            beta.as_deref(),
            gamma.as_deref(),
        ),
        Command::Verify {
            common,
            suite,
            report,
            format,
            list,
        } => cmd_verify(common, suite, report.as_ref(), format, *list),
        Command::Scan {
            common,
            function,
            re,
            im,
            out,
            lambda,
        } => cmd_scan(common, function, re, im, out.as_ref(), *lambda),
        Command::Casimir { common, lambda, t } => cmd_casimir(common, *lambda, *t),
    }
}
