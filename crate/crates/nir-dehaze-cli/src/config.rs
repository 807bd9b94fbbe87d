//! Flat `key = value` configuration shared by all subcommands.
//!
//! A configuration file is a sequence of `key = value` lines; blank
//! lines and `#` comments are ignored. The same keys are accepted on the
//! command line through repeated `--set KEY=VALUE` flags, which are
//! applied after the file; dedicated flags such as `--mode` are applied
//! last and therefore win.

use nir_dehaze::{ColoringConfig, DarkChannelConfig, RegularizerMode, SolverConfig};

use crate::CliError;

/// Every tunable of a run: the three library config blocks plus the
/// depth-map scale used when reading and writing depth PNGs.
#[derive(Debug, Clone)]
pub struct Settings {
    pub coloring: ColoringConfig,
    pub dark: DarkChannelConfig,
    pub solver: SolverConfig,
    /// Scene depth represented by a full-scale sample in a depth PNG.
    pub depth_max: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            coloring: ColoringConfig::default(),
            dark: DarkChannelConfig::default(),
            solver: SolverConfig::default(),
            depth_max: 1.0,
        }
    }
}

/// Recognized configuration keys, one per tunable field.
pub const KNOWN_KEYS: &[&str] = &[
    "coloring.patch_size",
    "coloring.mu_c",
    "coloring.eps_sigma",
    "coloring.eps_div",
    "dark.patch_size",
    "dark.airlight_fraction",
    "dark.t_min",
    "dark.eps_log",
    "solver.lambda0",
    "solver.w1",
    "solver.w2",
    "solver.lambda3",
    "solver.t_max",
    "solver.beta0",
    "solver.beta_factor",
    "solver.inner_iters",
    "solver.mode",
    "solver.linear_solve_tol",
    "depth_max",
];

fn parse_f64(key: &str, value: &str) -> Result<f64, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("{key}: expected a number, got {value:?}")))
}

fn parse_usize(key: &str, value: &str) -> Result<usize, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("{key}: expected a non-negative integer, got {value:?}")))
}

/// Parses the regularizer-mode names shared by `--mode` and
/// `solver.mode`: `color`, `gradient` or `graddiff`.
pub fn parse_mode(value: &str) -> Result<RegularizerMode, CliError> {
    match value.trim() {
        "color" => Ok(RegularizerMode::ColorReg),
        "gradient" => Ok(RegularizerMode::GradientOnly),
        "graddiff" => Ok(RegularizerMode::GradientDiff),
        other => Err(CliError::usage(format!(
            "solver.mode: expected color, gradient or graddiff, got {other:?}"
        ))),
    }
}

impl Settings {
    /// Sets a single key. Unknown keys and malformed values are usage
    /// errors; range checks are deferred to [`Settings::validate`] so a
    /// file may set `solver.w1` and `solver.w2` in any order.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let key = key.trim();
        match key {
            "coloring.patch_size" => self.coloring.patch_size = parse_usize(key, value)?,
            "coloring.mu_c" => self.coloring.mu_c = parse_f64(key, value)?,
            "coloring.eps_sigma" => self.coloring.eps_sigma = parse_f64(key, value)?,
            "coloring.eps_div" => self.coloring.eps_div = parse_f64(key, value)?,
            "dark.patch_size" => self.dark.patch_size = parse_usize(key, value)?,
            "dark.airlight_fraction" => self.dark.airlight_fraction = parse_f64(key, value)?,
            "dark.t_min" => self.dark.t_min = parse_f64(key, value)?,
            "dark.eps_log" => self.dark.eps_log = parse_f64(key, value)?,
            "solver.lambda0" => self.solver.lambda0 = parse_f64(key, value)?,
            "solver.w1" => self.solver.w1 = parse_f64(key, value)?,
            "solver.w2" => self.solver.w2 = parse_f64(key, value)?,
            "solver.lambda3" => self.solver.lambda3 = parse_f64(key, value)?,
            "solver.t_max" => self.solver.t_max = parse_usize(key, value)?,
            "solver.beta0" => self.solver.beta0 = parse_f64(key, value)?,
            "solver.beta_factor" => self.solver.beta_factor = parse_f64(key, value)?,
            "solver.inner_iters" => self.solver.inner_iters = parse_usize(key, value)?,
            "solver.mode" => self.solver.mode = parse_mode(value)?,
            "solver.linear_solve_tol" => self.solver.linear_solve_tol = parse_f64(key, value)?,
            "depth_max" => self.depth_max = parse_f64(key, value)?,
            other => {
                return Err(CliError::usage(format!(
                    "unknown configuration key {other:?}; known keys: {}",
                    KNOWN_KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies a whole configuration file. `origin` names the file in
    /// error messages.
    pub fn apply_file(&mut self, text: &str, origin: &str) -> Result<(), CliError> {
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::usage(format!(
                    "{origin}:{}: expected `key = value`, got {line:?}",
                    idx + 1
                ))
            })?;
            self.apply(key, value)
                .map_err(|e| CliError::usage(format!("{origin}:{}: {e}", idx + 1)))?;
        }
        Ok(())
    }

    /// Applies one `KEY=VALUE` override from the command line.
    pub fn apply_override(&mut self, spec: &str) -> Result<(), CliError> {
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("--set expects KEY=VALUE, got {spec:?}")))?;
        self.apply(key, value)
    }

    /// Checks every block's invariants after all sources are applied.
    pub fn validate(&self) -> Result<(), CliError> {
        self.coloring.validate().map_err(|e| CliError::usage(e.to_string()))?;
        self.dark.validate().map_err(|e| CliError::usage(e.to_string()))?;
        self.solver.validate().map_err(|e| CliError::usage(e.to_string()))?;
        if !(self.depth_max.is_finite() && self.depth_max > 0.0) {
            return Err(CliError::usage(format!(
                "depth_max must be positive and finite, got {}",
                self.depth_max
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_documented_values() {
        let s = Settings::default();
        assert_eq!(s.solver.lambda0, 1e5);
        assert_eq!(s.solver.w1, 0.8);
        assert_eq!(s.solver.w2, 0.2);
        assert_eq!(s.solver.lambda3, 1.0);
        assert_eq!(s.solver.t_max, 7);
        assert_eq!(s.coloring.patch_size, 5);
        assert_eq!(s.dark.patch_size, 15);
        assert_eq!(s.depth_max, 1.0);
        s.validate().unwrap();
    }

    #[test]
    fn file_lines_comments_and_blanks() {
        let mut s = Settings::default();
        s.apply_file(
            "# tuning for the smoke fixture\n\nsolver.lambda0 = 2e4\ndark.t_min=0.2\n  coloring.mu_c   =   0.25  \n",
            "test.cfg",
        )
        .unwrap();
        assert_eq!(s.solver.lambda0, 2e4);
        assert_eq!(s.dark.t_min, 0.2);
        assert_eq!(s.coloring.mu_c, 0.25);
    }

    #[test]
    fn later_assignments_win() {
        let mut s = Settings::default();
        s.apply_file("solver.lambda3 = 5\nsolver.lambda3 = 7\n", "c").unwrap();
        assert_eq!(s.solver.lambda3, 7.0);
        s.apply_override("solver.lambda3=9").unwrap();
        assert_eq!(s.solver.lambda3, 9.0);
    }

    #[test]
    fn weights_may_be_set_in_any_order() {
        let mut s = Settings::default();
        // Intermediate states violate w1 + w2 == 1; only the final
        // validate call judges them.
        s.apply_file("solver.w1 = 0.3\nsolver.w2 = 0.7\n", "c").unwrap();
        s.validate().unwrap();
    }

    #[test]
    fn unknown_key_is_a_usage_error() {
        let mut s = Settings::default();
        let err = s.apply("solver.lambda9", "1").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("solver.lambda9"));
    }

    #[test]
    fn malformed_line_reports_location() {
        let mut s = Settings::default();
        let err = s.apply_file("solver.lambda0 = 1e5\nnonsense\n", "run.cfg").unwrap_err();
        assert!(err.to_string().contains("run.cfg:2"), "{err}");
    }

    #[test]
    fn bad_number_is_a_usage_error() {
        let mut s = Settings::default();
        let err = s.apply("solver.beta0", "fast").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        let err = s.apply("solver.t_max", "-3").unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn mode_names_round_trip() {
        assert!(matches!(parse_mode("color").unwrap(), RegularizerMode::ColorReg));
        assert!(matches!(parse_mode("gradient").unwrap(), RegularizerMode::GradientOnly));
        assert!(matches!(parse_mode("graddiff").unwrap(), RegularizerMode::GradientDiff));
        assert!(parse_mode("colour").is_err());
    }

    #[test]
    fn set_override_requires_equals() {
        let mut s = Settings::default();
        let err = s.apply_override("solver.lambda0").unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn out_of_range_value_fails_validation() {
        let mut s = Settings::default();
        s.apply("dark.t_min", "1.5").unwrap();
        let err = s.validate().unwrap_err();
        assert_eq!(err.exit_code(), 1);

        let mut s = Settings::default();
        s.apply("depth_max", "0").unwrap();
        assert!(s.validate().is_err());
    }

    #[test]
    fn every_known_key_is_settable() {
        let mut s = Settings::default();
        for key in KNOWN_KEYS {
            let value = if *key == "solver.mode" { "graddiff" } else { "1" };
            s.apply(key, value).unwrap_or_else(|e| panic!("{key}: {e}"));
        }
    }
}
