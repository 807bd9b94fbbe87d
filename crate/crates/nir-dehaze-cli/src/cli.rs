//! Command-line argument definitions.
//!
//! The mapping from flags onto [`crate::Settings`] lives in
//! [`crate::run`]; this module is purely declarative so the whole
//! interface is visible in one place.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nir_dehaze::RegularizerMode;

/// NIR-guided haze removal for visible/near-infrared image pairs.
#[derive(Debug, Parser)]
#[command(name = "nir-dehaze", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Restore a hazy visible image guided by its NIR capture.
    Dehaze(DehazeArgs),
    /// Transfer the visible palette onto the NIR image.
    Colorize(ColorizeArgs),
    /// Add synthetic haze to a clean image using a depth map.
    Synthesize(SynthesizeArgs),
    /// Score a restored image against its references.
    Evaluate(EvaluateArgs),
}

/// Configuration sources accepted by every subcommand.
#[derive(Debug, Args, Default)]
pub struct ConfigOpts {
    /// Configuration file of `key = value` lines
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Single setting override; may be repeated
    #[arg(long, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
}

#[derive(Debug, Args)]
pub struct DehazeArgs {
    /// Hazy visible image (RGB PNG)
    #[arg(long, value_name = "PNG")]
    pub visible: PathBuf,
    /// Paired NIR image (grayscale PNG)
    #[arg(long, value_name = "PNG")]
    pub nir: PathBuf,
    /// Restored output image
    #[arg(long, value_name = "PNG")]
    pub out: PathBuf,
    /// Directory for the transmission map, colored NIR image and
    /// objective log
    #[arg(long, value_name = "DIR")]
    pub diagnostics: Option<PathBuf>,
    /// Regularizer choice; wins over `solver.mode` from the config
    #[arg(long, value_enum, value_name = "MODE")]
    pub mode: Option<ModeArg>,
    #[command(flatten)]
    pub config: ConfigOpts,
}

#[derive(Debug, Args)]
pub struct ColorizeArgs {
    /// Visible image providing the palette (RGB PNG)
    #[arg(long, value_name = "PNG")]
    pub visible: PathBuf,
    /// NIR image to be colored (grayscale PNG)
    #[arg(long, value_name = "PNG")]
    pub nir: PathBuf,
    /// Colored output image
    #[arg(long, value_name = "PNG")]
    pub out: PathBuf,
    #[command(flatten)]
    pub config: ConfigOpts,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    /// Haze-free input image (RGB PNG)
    #[arg(long, value_name = "PNG")]
    pub clean: PathBuf,
    /// Scene depth (16-bit grayscale PNG, full scale = depth_max)
    #[arg(long, value_name = "PNG")]
    pub depth: PathBuf,
    /// Airlight color as comma-separated red,green,blue in [0, 1]
    #[arg(long, value_name = "R,G,B")]
    pub airlight: Airlight,
    /// Scattering coefficient
    #[arg(long, value_name = "F", default_value_t = 1.0)]
    pub eta: f64,
    /// Hazy output image
    #[arg(long, value_name = "PNG")]
    pub out: PathBuf,
    #[command(flatten)]
    pub config: ConfigOpts,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Restored image under test (RGB PNG)
    #[arg(long, value_name = "PNG")]
    pub test: PathBuf,
    /// Hazy visible reference (RGB PNG)
    #[arg(long, value_name = "PNG")]
    pub visible: PathBuf,
    /// NIR reference (grayscale PNG)
    #[arg(long, value_name = "PNG")]
    pub nir: PathBuf,
    /// Region mask: dark = haze, bright = haze-free reference
    #[arg(long, value_name = "PNG")]
    pub mask: PathBuf,
    /// Metric report destination (`key = value` lines)
    #[arg(long, value_name = "TXT")]
    pub out: PathBuf,
    #[command(flatten)]
    pub config: ConfigOpts,
}

/// `--mode` values, mirroring the `solver.mode` configuration key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Data + colored-NIR quadratic terms with plain TV
    Color,
    /// Plain TV only
    Gradient,
    /// TV on the gradient difference to the NIR image
    Graddiff,
}

impl From<ModeArg> for RegularizerMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Color => RegularizerMode::ColorReg,
            ModeArg::Gradient => RegularizerMode::GradientOnly,
            ModeArg::Graddiff => RegularizerMode::GradientDiff,
        }
    }
}

/// Airlight triple parsed from `r,g,b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Airlight(pub [f64; 3]);

impl FromStr for Airlight {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("expected r,g,b with three components, got {s:?}"));
        }
        let mut rgb = [0.0; 3];
        for (slot, part) in rgb.iter_mut().zip(&parts) {
            let v: f64 = part
                .trim()
                .parse()
                .map_err(|_| format!("invalid airlight component {part:?}"))?;
            if !(v.is_finite() && (0.0..=1.0).contains(&v)) {
                return Err(format!("airlight component {v} outside [0, 1]"));
            }
            *slot = v;
        }
        Ok(Airlight(rgb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_cli() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_a_full_dehaze_invocation() {
        let cli = Cli::try_parse_from([
            "nir-dehaze",
            "dehaze",
            "--visible",
            "v.png",
            "--nir",
            "n.png",
            "--out",
            "o.png",
            "--mode",
            "graddiff",
            "--set",
            "solver.t_max=3",
            "--set",
            "dark.t_min=0.2",
        ])
        .unwrap();
        match cli.command {
            Command::Dehaze(args) => {
                assert_eq!(args.mode, Some(ModeArg::Graddiff));
                assert_eq!(args.config.set.len(), 2);
            }
            other => panic!("parsed wrong command: {other:?}"),
        }
    }

    #[test]
    fn missing_required_flag_is_a_parse_error() {
        let err = Cli::try_parse_from(["nir-dehaze", "dehaze", "--visible", "v.png"]).unwrap_err();
        assert!(err.to_string().contains("--nir"));
    }

    #[test]
    fn airlight_parses_and_validates() {
        let a: Airlight = "0.9,0.8,0.85".parse().unwrap();
        assert_eq!(a, Airlight([0.9, 0.8, 0.85]));
        assert!(" 1 , 0 , 0.5 ".parse::<Airlight>().is_ok());
        assert!("0.9,0.8".parse::<Airlight>().is_err());
        assert!("0.9,0.8,1.5".parse::<Airlight>().is_err());
        assert!("0.9,0.8,abc".parse::<Airlight>().is_err());
    }

    #[test]
    fn eta_defaults_to_one() {
        let cli = Cli::try_parse_from([
            "nir-dehaze",
            "synthesize",
            "--clean",
            "c.png",
            "--depth",
            "d.png",
            "--airlight",
            "0.9,0.9,0.9",
            "--out",
            "o.png",
        ])
        .unwrap();
        match cli.command {
            Command::Synthesize(args) => assert_eq!(args.eta, 1.0),
            other => panic!("parsed wrong command: {other:?}"),
        }
    }
}
