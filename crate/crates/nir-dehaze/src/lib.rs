//! Haze removal for visible color images guided by a paired near-infrared
//! (NIR) gray image.
//!
//! Near-infrared light penetrates haze far better than visible light, so a
//! NIR exposure of a hazy scene keeps structure that the color image has
//! lost — but it is gray, and its brightness disagrees with the visible
//! channels. This crate restores the color image by combining both:
//!
//! 1. [`coloring`] renders the NIR image in the visible image's colors via
//!    per-pixel contrast-preserving affine regression in a decorrelated
//!    opponent space ([`color`]).
//! 2. [`haze`] initializes airlight, transmission, and depth with the dark
//!    channel prior and lifts images into the log domain, where haze
//!    becomes additive: `u^v = u^s - u^d`.
//! 3. [`solver`] alternately refines the haze-free image (a total-variation
//!    problem regularized toward the colored NIR image, solved by
//!    half-quadratic splitting with FFT quadratic steps) and the depth map
//!    (a closed-form proximal average).
//! 4. [`metrics`] scores results with region-masked ISS / CD / CF measures.
//!
//! # Quick start
//!
//! ```
//! use nir_dehaze::{
//!     ColoringConfig, DarkChannelConfig, Domain, PlanarImage, SolverConfig,
//! };
//!
//! // A tiny synthetic scene: textured clean image, constant depth.
//! let clean = PlanarImage::from_fn(32, 32, 3, Domain::UnitInterval, |x, y, c| {
//!     if (x + y) % 7 == 0 && c == 1 { 0.02 } else { 0.2 + 0.05 * ((x * y) % 9) as f64 }
//! })?;
//! let depth = PlanarImage::constant(32, 32, 1, Domain::Unbounded, 0.8)?;
//! let hazy = nir_dehaze::haze::synthesize_haze(&clean, &depth, &[0.9, 0.9, 0.9], 1.0)?;
//! // Stand-in for a real NIR capture: the clean image's average channel.
//! let nir = PlanarImage::from_fn(32, 32, 1, Domain::UnitInterval, |x, y, _| {
//!     (clean.get(x, y, 0) + clean.get(x, y, 1) + clean.get(x, y, 2)) / 3.0
//! })?;
//!
//! let (restored, estimate, diagnostics) = nir_dehaze::dehaze(
//!     &hazy,
//!     &nir,
//!     &ColoringConfig::default(),
//!     &DarkChannelConfig::default(),
//!     &SolverConfig::default(),
//! )?;
//! assert_eq!(restored.channels(), 3);
//! assert!(estimate.airlight.iter().all(|a| *a > 0.0));
//! assert_eq!(diagnostics.objectives[0].len(), SolverConfig::default().t_max);
//! # Ok::<(), nir_dehaze::Error>(())
//! ```

pub mod color;
pub mod coloring;
mod error;
mod fft;
pub mod haze;
pub mod image;
pub mod metrics;
pub mod solver;

pub use error::{Error, Result};

pub use coloring::{colorize, ColoringConfig, MappingField};
pub use haze::{synthesize_haze, DarkChannelConfig, HazeEstimate};
pub use image::{Direction, Domain, PlanarImage, RegionMask};
pub use metrics::{evaluate, MetricReport};
pub use solver::{
    dehaze, dehaze_with_channel_order, DehazeDiagnostics, RegularizerMode, SolverConfig,
    SolverState,
};

// Keep the guide's code blocks compiling; each chapter runs as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/haze-model.md")]
    mod haze_model {}
    #[doc = include_str!("../../../book/src/coloring.md")]
    mod coloring {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/metrics.md")]
    mod metrics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
