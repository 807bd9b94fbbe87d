//! Subcommand execution.
//!
//! Each workflow resolves its [`Settings`], loads inputs, calls into the
//! library and writes outputs under an [`OutputGuard`] so that a failure
//! halfway through never leaves partial files behind.

use std::fs;
use std::path::{Path, PathBuf};

use nir_dehaze::MetricReport;

use crate::cli::{Cli, ColorizeArgs, Command, ConfigOpts, DehazeArgs, EvaluateArgs, SynthesizeArgs};
use crate::config::Settings;
use crate::{io, CliError};

/// Executes a parsed invocation. The caller maps the error onto an exit
/// code and message.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Dehaze(args) => run_dehaze(&args),
        Command::Colorize(args) => run_colorize(&args),
        Command::Synthesize(args) => run_synthesize(&args),
        Command::Evaluate(args) => run_evaluate(&args),
    }
}

/// Builds the effective settings: defaults, then the configuration file,
/// then `--set` overrides, validated once everything is applied.
fn resolve_settings(opts: &ConfigOpts) -> Result<Settings, CliError> {
    let mut settings = Settings::default();
    if let Some(path) = &opts.config {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::runtime(format!("cannot read {}: {e}", path.display())))?;
        settings.apply_file(&text, &path.display().to_string())?;
    }
    for spec in &opts.set {
        settings.apply_override(spec)?;
    }
    settings.validate()?;
    Ok(settings)
}

fn write_error(path: &Path, err: impl std::fmt::Display) -> CliError {
    CliError::runtime(format!("cannot write {}: {err}", path.display()))
}

/// Removes tracked output files on drop unless the run committed.
///
/// Paths are registered before the corresponding write starts, so a
/// failure at any point erases everything produced so far and the tool
/// either delivers all outputs or none.
struct OutputGuard {
    paths: Vec<PathBuf>,
    committed: bool,
}

impl OutputGuard {
    fn new() -> Self {
        OutputGuard { paths: Vec::new(), committed: false }
    }

    fn track(&mut self, path: &Path) {
        self.paths.push(path.to_path_buf());
    }

    fn commit(mut self) {
        self.committed = true;
    }
}

impl Drop for OutputGuard {
    fn drop(&mut self) {
        if !self.committed {
            for path in &self.paths {
                let _ = fs::remove_file(path);
            }
        }
    }
}

fn run_dehaze(args: &DehazeArgs) -> Result<(), CliError> {
    let mut settings = resolve_settings(&args.config)?;
    if let Some(mode) = args.mode {
        settings.solver.mode = mode.into();
    }
    let vis = io::load_image_expecting(&args.visible, 3, "visible image")?;
    let nir = io::load_image_expecting(&args.nir, 1, "NIR image")?;
    let (restored, estimate, diagnostics) =
        nir_dehaze::dehaze(&vis, &nir, &settings.coloring, &settings.dark, &settings.solver)?;

    let mut guard = OutputGuard::new();
    guard.track(&args.out);
    io::save_image(&args.out, &restored)?;
    if let Some(dir) = &args.diagnostics {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::runtime(format!("cannot create {}: {e}", dir.display())))?;
        let transmission = dir.join("transmission.png");
        guard.track(&transmission);
        io::save_image(&transmission, &estimate.transmission)?;
        let colored = dir.join("colored_nir.png");
        guard.track(&colored);
        io::save_image(&colored, &diagnostics.colored_nir)?;
        let objective = dir.join("objective.txt");
        guard.track(&objective);
        fs::write(&objective, objective_log(&diagnostics.objectives))
            .map_err(|e| write_error(&objective, e))?;
    }
    guard.commit();
    Ok(())
}

fn run_colorize(args: &ColorizeArgs) -> Result<(), CliError> {
    let settings = resolve_settings(&args.config)?;
    let vis = io::load_image_expecting(&args.visible, 3, "visible image")?;
    let nir = io::load_image_expecting(&args.nir, 1, "NIR image")?;
    let colored = nir_dehaze::colorize(&vis, &nir, &settings.coloring)?;

    let mut guard = OutputGuard::new();
    guard.track(&args.out);
    io::save_image(&args.out, &colored)?;
    guard.commit();
    Ok(())
}

fn run_synthesize(args: &SynthesizeArgs) -> Result<(), CliError> {
    let settings = resolve_settings(&args.config)?;
    if !(args.eta.is_finite() && args.eta > 0.0) {
        return Err(CliError::usage(format!(
            "--eta must be positive and finite, got {}",
            args.eta
        )));
    }
    let clean = io::load_image_expecting(&args.clean, 3, "clean image")?;
    let depth = io::load_depth(&args.depth, settings.depth_max)?;
    let hazy = nir_dehaze::synthesize_haze(&clean, &depth, &args.airlight.0, args.eta)?;

    let mut guard = OutputGuard::new();
    guard.track(&args.out);
    io::save_image(&args.out, &hazy)?;
    guard.commit();
    Ok(())
}

fn run_evaluate(args: &EvaluateArgs) -> Result<(), CliError> {
    resolve_settings(&args.config)?;
    let test = io::load_image_expecting(&args.test, 3, "test image")?;
    let vis = io::load_image_expecting(&args.visible, 3, "visible image")?;
    let nir = io::load_image_expecting(&args.nir, 1, "NIR image")?;
    let mask = io::load_mask(&args.mask)?;
    let report = nir_dehaze::evaluate(&test, &vis, &nir, &mask)?;

    let text = format_report(&report);
    let mut guard = OutputGuard::new();
    guard.track(&args.out);
    fs::write(&args.out, &text).map_err(|e| write_error(&args.out, e))?;
    guard.commit();
    print!("{text}");
    Ok(())
}

/// Renders the per-iteration objective values, one `channel iteration
/// value` row per line. Values keep full float precision so the log can
/// back a monotonicity check.
fn objective_log(objectives: &[Vec<f64>]) -> String {
    let mut text = String::from("# channel iteration objective\n");
    for (channel, per_iteration) in objectives.iter().enumerate() {
        for (iteration, value) in per_iteration.iter().enumerate() {
            text.push_str(&format!("{channel} {} {value:e}\n", iteration + 1));
        }
    }
    text
}

/// Renders a metric report as `key = value` lines with six significant
/// digits, the diff-stable format written by `evaluate`.
fn format_report(report: &MetricReport) -> String {
    format!(
        "iss = {}\ncd = {}\ncf = {}\nhaze_pixel_count = {}\nnonhaze_pixel_count = {}\n",
        format_sig(report.iss, 6),
        format_sig(report.cd, 6),
        format_sig(report.cf, 6),
        report.haze_pixel_count,
        report.nonhaze_pixel_count,
    )
}

/// Formats `value` with `digits` significant digits in plain decimal
/// notation.
fn format_sig(value: f64, digits: i32) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value:.*}", (digits - 1) as usize);
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = digits - 1 - exponent;
    if decimals >= 0 {
        format!("{value:.*}", decimals as usize)
    } else {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (value / scale).round() * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.9388, 6), "0.938800");
        assert_eq!(format_sig(12.96753, 6), "12.9675");
        assert_eq!(format_sig(-4.2215, 6), "-4.22150");
        assert_eq!(format_sig(0.0, 6), "0.00000");
        assert_eq!(format_sig(1234567.0, 6), "1234570");
        assert_eq!(format_sig(0.000012345678, 6), "0.0000123457");
        assert_eq!(format_sig(1.0, 6), "1.00000");
    }

    #[test]
    fn report_format_is_key_value_lines() {
        let report = MetricReport {
            iss: 0.93881234,
            cd: 4.2215,
            cf: 12.9675,
            haze_pixel_count: 1690,
            nonhaze_pixel_count: 310,
        };
        let text = format_report(&report);
        assert_eq!(
            text,
            "iss = 0.938812\ncd = 4.22150\ncf = 12.9675\n\
             haze_pixel_count = 1690\nnonhaze_pixel_count = 310\n"
        );
    }

    #[test]
    fn objective_log_lists_every_iteration() {
        let log = objective_log(&[vec![3.0, 2.0], vec![1.5, 1.25]]);
        let lines: Vec<&str> = log.lines().collect();
        assert_eq!(lines[0], "# channel iteration objective");
        assert_eq!(lines[1], "0 1 3e0");
        assert_eq!(lines[4], "1 2 1.25e0");
        assert_eq!(lines.len(), 5);
    }

    #[test]
    fn guard_removes_outputs_unless_committed() {
        let dir = tempfile::tempdir().unwrap();
        let kept = dir.path().join("kept.txt");
        let dropped = dir.path().join("dropped.txt");

        let mut guard = OutputGuard::new();
        guard.track(&kept);
        fs::write(&kept, "done").unwrap();
        guard.commit();
        assert!(kept.exists());

        let mut guard = OutputGuard::new();
        guard.track(&dropped);
        fs::write(&dropped, "partial").unwrap();
        drop(guard);
        assert!(!dropped.exists());
    }

    #[test]
    fn guard_ignores_never_written_paths() {
        let dir = tempfile::tempdir().unwrap();
        let mut guard = OutputGuard::new();
        guard.track(&dir.path().join("never-written.png"));
        drop(guard); // must not panic on the missing file
    }
}
