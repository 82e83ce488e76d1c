//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage or configuration error, 3 numerical failure.

mod args;
pub mod output;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::specfun::{kummer_m, log_gamma, riemann_siegel_theta, whittaker_paper, WhittakerParams};
use crate::spectrum::{
    calibrate_u0, eigenvalues, validate_u0, Calibration, CalibrationOptions, Condition,
    EigenvalueRecord, SpectralConfig,
};
use crate::verify::{run_verification, VerificationReport, VerifyOptions};
use crate::zeta::{
    bundled_zero_table, compare_counting, load_zero_table_file, CountingSample, CountingSummary,
    LoadOptions,
};
use crate::ComplexValue;

pub use args::{
    Cli, Command, CompareArgs, EigenvaluesArgs, Format, SpecfunCommand, TextFormat, Variant,
    VerifyArgs,
};
use output::{counting_csv, eigenvalues_csv, emit_csv, emit_json, fmt_f64, RunManifest};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start {} worker threads: {e}", cli.threads);
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error that aborted a command.
pub fn exit_code(err: &Error) -> u8 {
    if err.is_configuration() {
        EXIT_USAGE
    } else {
        EXIT_NUMERICAL
    }
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Eigenvalues(a) => cmd_eigenvalues(a, cli),
        Command::Compare(a) => cmd_compare(a, cli),
        Command::Verify(a) => cmd_verify(a, cli),
        Command::Specfun { function } => cmd_specfun(function),
    }
}

fn base_manifest(command: &str, cli: &Cli) -> RunManifest {
    RunManifest::new(command)
        .param("threads", cli.threads)
        .param("seed", cli.seed)
}

#[derive(Serialize)]
struct EigenvaluesDocument<'a> {
    manifest: &'a RunManifest,
    records: &'a [EigenvalueRecord],
}

pub fn cmd_eigenvalues(a: &EigenvaluesArgs, cli: &Cli) -> Result<u8> {
    let condition: Condition = a.variant.into();
    let config = SpectralConfig::new(a.u0, a.e_max)
        .with_condition(condition)
        .with_tol(a.tol);
    config.validate()?;
    let records = eigenvalues(&config)?;

    let manifest = base_manifest("eigenvalues", cli)
        .param("u0", fmt_f64(a.u0))
        .param("e_max", fmt_f64(a.e_max))
        .param("variant", condition)
        .param("tol", fmt_f64(a.tol))
        .param("format", format_name(a.format))
        .param("scan_step", fmt_f64(config.scan_step));
    match a.format {
        Format::Csv => emit_csv(&eigenvalues_csv(&records)?, &manifest, a.out.as_deref())?,
        Format::Json => emit_json(
            &EigenvaluesDocument {
                manifest: &manifest,
                records: &records,
            },
            a.out.as_deref(),
        )?,
    }
    Ok(EXIT_OK)
}

/// Parses `start:stop:step` into `start, start + step, …` up to `stop`
/// inclusive.
pub fn parse_energy_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = |why: &str| Error::Config(format!("invalid --e-grid {spec:?}: {why}"));
    if parts.len() != 3 {
        return Err(bad("expected start:stop:step"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .trim()
            .parse::<f64>()
            .map_err(|_| bad(&format!("{p:?} is not a number")))?;
        if !slot.is_finite() {
            return Err(bad("values must be finite"));
        }
    }
    let [start, stop, step] = v;
    if step <= 0.0 {
        return Err(bad("step must be positive"));
    }
    if stop < start {
        return Err(bad("stop is below start"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(bad("more than a million grid points"));
    }
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

#[derive(Serialize)]
struct CompareDocument<'a> {
    manifest: &'a RunManifest,
    calibration: Option<&'a Calibration>,
    summary: &'a CountingSummary,
    samples: &'a [CountingSample],
}

pub fn cmd_compare(a: &CompareArgs, cli: &Cli) -> Result<u8> {
    let grid = parse_energy_grid(&a.e_grid)?;
    let condition: Condition = a.variant.into();
    let table = match &a.zeros {
        Some(path) => load_zero_table_file(path, LoadOptions::default())?,
        None => bundled_zero_table(),
    };

    let mut manifest = base_manifest("compare", cli)
        .param("zeros", table.source())
        .param("e_grid", &a.e_grid)
        .param("u0", fmt_f64(a.u0))
        .param("variant", condition)
        .param("format", format_name(a.format))
        .param(
            "calibrate",
            a.calibrate
                .map_or_else(|| "none".to_string(), |k| k.to_string()),
        );

    let calibration = match a.calibrate {
        Some(k) => {
            let options = CalibrationOptions {
                condition,
                ..CalibrationOptions::default()
            };
            let cal = calibrate_u0(&table, k, &options)?;
            if let Some(w) = &cal.warning {
                eprintln!("warning: {w}");
            }
            manifest.derive("calibrated_u0", fmt_f64(cal.u0));
            manifest.derive("calibration_rms_residual", fmt_f64(cal.rms_residual));
            Some(cal)
        }
        None => None,
    };
    let u0 = calibration.as_ref().map_or(a.u0, |c| c.u0);
    validate_u0(u0)?;
    manifest.derive("u0_used", fmt_f64(u0));

    let e_max = grid.iter().cloned().fold(1.0, f64::max);
    let config = SpectralConfig::new(u0, e_max).with_condition(condition);
    let samples = compare_counting(&config, &table, &grid)?;
    let summary = CountingSummary::from_samples(&samples);
    manifest.derive("points", summary.points);
    manifest.derive(
        "rms_model_minus_table",
        fmt_f64(summary.rms_model_minus_table),
    );
    manifest.derive(
        "rms_formula_minus_table",
        fmt_f64(summary.rms_formula_minus_table),
    );
    manifest.derive("formula_mismatches", summary.formula_mismatches);

    if let Some(cal) = &calibration {
        eprintln!(
            "calibrated u0 = {} on {} ordinate(s), rms eigenvalue residual = {}",
            fmt_f64(cal.u0),
            cal.targets.len(),
            fmt_f64(cal.rms_residual)
        );
    }
    eprintln!(
        "points = {}, rms_model_minus_table = {}, rms_formula_minus_table = {}, formula_mismatches = {}",
        summary.points,
        fmt_f64(summary.rms_model_minus_table),
        fmt_f64(summary.rms_formula_minus_table),
        summary.formula_mismatches
    );

    match a.format {
        Format::Csv => emit_csv(&counting_csv(&samples)?, &manifest, a.out.as_deref())?,
        Format::Json => emit_json(
            &CompareDocument {
                manifest: &manifest,
                calibration: calibration.as_ref(),
                summary: &summary,
                samples: &samples,
            },
            a.out.as_deref(),
        )?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    manifest: &'a RunManifest,
    passed: bool,
    report: &'a VerificationReport,
}

pub fn cmd_verify(a: &VerifyArgs, cli: &Cli) -> Result<u8> {
    validate_u0(a.u0)?;
    if a.n_eigen == 0 {
        return Err(Error::Config("--n-eigen must be at least 1".into()));
    }
    if let Some(t) = a.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::Config(format!(
                "--tolerance must be positive, got {t}"
            )));
        }
    }
    let report = run_verification(&VerifyOptions {
        u0: a.u0,
        n_eigen: a.n_eigen,
        tolerance_override: a.tolerance,
        ..VerifyOptions::default()
    });
    let manifest = base_manifest("verify", cli)
        .param("u0", fmt_f64(a.u0))
        .param("n_eigen", a.n_eigen)
        .param(
            "tolerance",
            a.tolerance.map_or_else(|| "default".to_string(), fmt_f64),
        );
    let doc = VerifyDocument {
        manifest: &manifest,
        passed: report.passed(),
        report: &report,
    };

    match a.format {
        TextFormat::Text => print!("{}", render_report(&report)),
        TextFormat::Json => emit_json(&doc, None)?,
    }
    if let Some(path) = &a.out {
        emit_json(&doc, Some(path))?;
    }
    if report.passed() {
        Ok(EXIT_OK)
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        eprintln!("verification failed: {}", names.join(", "));
        Ok(EXIT_VERIFY_FAILED)
    }
}

/// Human-readable verification report, one line per check.
pub fn render_report(report: &VerificationReport) -> String {
    let width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    let mut out = format!(
        "verification at u0 = {}, n_eigen = {}\n",
        report.u0, report.n_eigen
    );
    for c in &report.checks {
        out.push_str(&format!(
            "[{}] {:width$}  value = {:.3e}  threshold = {:.1e}  ({})\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.value,
            c.threshold,
            c.detail,
        ));
    }
    let failed = report.failures().count();
    out.push_str(&format!(
        "{} of {} checks passed\n",
        report.checks.len() - failed,
        report.checks.len()
    ));
    out
}

fn cmd_specfun(function: &SpecfunCommand) -> Result<u8> {
    match *function {
        SpecfunCommand::Theta { e, format } => {
            if !e.is_finite() {
                return Err(Error::Domain(format!(
                    "theta needs a finite energy, got {e}"
                )));
            }
            print_real("theta", json!({ "e": e }), riemann_siegel_theta(e), format)
        }
        SpecfunCommand::Loggamma { re, im, format } => {
            let v = log_gamma(ComplexValue::new(re, im))?;
            print_complex("loggamma", json!({ "re": re, "im": im }), v, format)
        }
        SpecfunCommand::Whittaker {
            k,
            k_im,
            m_re,
            m_im,
            u,
            format,
        } => {
            let p =
                WhittakerParams::new(ComplexValue::new(k, k_im), ComplexValue::new(m_re, m_im), u)?;
            let v = whittaker_paper(&p)?;
            let args = json!({ "k": k, "k_im": k_im, "m_re": m_re, "m_im": m_im, "u": u });
            print_complex("whittaker", args, v, format)
        }
        SpecfunCommand::Kummer {
            a_re,
            a_im,
            b_re,
            b_im,
            u,
            format,
        } => {
            let v = kummer_m(
                ComplexValue::new(a_re, a_im),
                ComplexValue::new(b_re, b_im),
                u,
            )?;
            let args = json!({ "a_re": a_re, "a_im": a_im, "b_re": b_re, "b_im": b_im, "u": u });
            print_complex("kummer", args, v, format)
        }
    }
}

fn print_real(name: &str, args: serde_json::Value, v: f64, format: TextFormat) -> Result<u8> {
    match format {
        TextFormat::Text => println!("{v}"),
        TextFormat::Json => emit_json(
            &json!({ "function": name, "arguments": args, "value": v }),
            None,
        )?,
    }
    Ok(EXIT_OK)
}

fn print_complex(
    name: &str,
    args: serde_json::Value,
    v: ComplexValue,
    format: TextFormat,
) -> Result<u8> {
    match format {
        TextFormat::Text => {
            let sign = if v.im.is_sign_negative() { '-' } else { '+' };
            println!("{}{sign}{}i", v.re, v.im.abs());
        }
        TextFormat::Json => emit_json(
            &json!({
                "function": name,
                "arguments": args,
                "re": v.re,
                "im": v.im,
                "abs": v.norm(),
            }),
            None,
        )?,
    }
    Ok(EXIT_OK)
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}
