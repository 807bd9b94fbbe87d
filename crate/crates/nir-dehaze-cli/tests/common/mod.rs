//! Shared synthetic fixtures for the integration suites.
//!
//! The generator builds scenes with known clean ground truth, a paired
//! NIR image and a haze/non-haze mask, laid out so that every stage of
//! the pipeline is exercised:
//!
//! * four vertical depth bands (piecewise-constant depth),
//! * block-colored texture with fine gray jitter, so both the coloring
//!   fit and the structure metrics see local variance,
//! * two shallow bands of bright pastel texture *without* dark content
//!   — the classic failure case of the dark-channel prior, which badly
//!   overestimates their haze; this is the regime the colored-NIR
//!   regularizer is meant to fix, and the color-difference metric is
//!   scored there,
//! * two deep bands with dark dots on a grid, keeping the prior
//!   accurate, where the structure metric is scored,
//! * on large scenes, a bright anchor block whose hazy appearance
//!   equals the airlight, pinning the airlight estimate.

// Each integration test target compiles its own copy of this module and
// uses a different slice of it.
#![allow(dead_code)]

use nir_dehaze::{synthesize_haze, Domain, PlanarImage, RegionMask};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Airlight used by every synthetic scene: bright neutral gray.
pub const AIRLIGHT: [f64; 3] = [0.9, 0.9, 0.9];

/// Depth of each vertical band, left to right.
pub const BAND_DEPTHS: [f64; 4] = [0.8, 1.0, 1.2, 2.0];

/// A synthetic test scene with ground truth.
pub struct Scene {
    /// Haze-free ground truth (RGB).
    pub clean: PlanarImage,
    /// Piecewise-constant scene depth.
    pub depth: PlanarImage,
    /// Paired NIR image: the clean luminance, untouched by haze.
    pub nir: PlanarImage,
    /// Hazy visible input.
    pub hazy: PlanarImage,
    /// Region mask: `true` (haze) on the two deep bands, `false` on
    /// the shallow pastel bands (less an 8-pixel transition strip).
    pub mask: RegionMask,
}

/// Builds the standard 128x128 acceptance scene.
pub fn scene(seed: u64) -> Scene {
    scene_sized(seed, 128, 128)
}

/// Builds a scene of the given size. `width` must be a multiple of 32
/// (bands stay aligned to the 8-pixel texture blocks) and `height` a
/// multiple of 8.
pub fn scene_sized(seed: u64, width: usize, height: usize) -> Scene {
    assert!(width % 32 == 0 && height % 8 == 0, "unsupported scene size");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let band_w = width / 4;
    let blocks_x = width / 8;
    let blocks_y = height / 8;

    // Per-block palettes. Bands 0-1: bright pastel blocks whose minimum
    // channel stays >= 0.58, so no patch contains dark content and the
    // dark-channel prior overestimates the haze there. Bands 2-3:
    // near-gray blocks with strong luminance variation for the
    // structure metrics.
    let mut palette = vec![[0.0f64; 3]; blocks_x * blocks_y];
    for by in 0..blocks_y {
        for bx in 0..blocks_x {
            let band = (bx * 8) / band_w;
            let p = &mut palette[by * blocks_x + bx];
            if band < 2 {
                // Slight saturation only: strong chroma would push the
                // colored-NIR prior over the airlight log floor, and
                // the three channels restore at slightly different
                // rates, which would leave a chroma residual. The
                // brightness floor rises with band depth so the haze
                // overestimate matches what the colored prior corrects.
                let (lo, span, min) = if band == 0 {
                    (0.60, 0.18, 0.58)
                } else {
                    (0.68, 0.12, 0.66)
                };
                let g = lo + span * rng.gen::<f64>();
                for ch in p.iter_mut() {
                    *ch = (g + 0.02 * (rng.gen::<f64>() * 2.0 - 1.0)).clamp(min, 0.86);
                }
            } else {
                let g = 0.12 + 0.50 * rng.gen::<f64>();
                for ch in p.iter_mut() {
                    *ch = (g + 0.03 * (rng.gen::<f64>() * 2.0 - 1.0)).clamp(0.02, 0.85);
                }
            }
        }
    }

    // Bright anchor block at depth 2.0 whose clean value matches the
    // airlight; hazed, it stays at the airlight for any depth, so the
    // brightest dark-channel pixels recover it almost exactly. Only
    // present when the deepest band is wide enough to hold it.
    let anchor = (width >= 128 && height >= 32).then(|| (3 * band_w + 4, 4, 21_usize));

    let mut clean = PlanarImage::zeros(width, height, 3, Domain::UnitInterval);
    for y in 0..height {
        for x in 0..width {
            let band = x / band_w;
            let block = &palette[(y / 8) * blocks_x + (x / 8)];
            let jitter = 0.02 * (rng.gen::<f64>() * 2.0 - 1.0);
            let in_anchor = anchor
                .map(|(ax, ay, s)| x >= ax && x < ax + s && y >= ay && y < ay + s)
                .unwrap_or(false);
            // Dark dots every 8 pixels in the deep bands (never in the
            // pastel bands or the anchor); every 15x15 patch in those
            // bands sees one.
            let on_dot = band >= 2 && !in_anchor && x % 8 == 3 && y % 8 == 3;
            for c in 0..3 {
                let v = if in_anchor {
                    AIRLIGHT[c] + 0.002 * jitter / 0.02
                } else if on_dot {
                    0.01
                } else {
                    (block[c] + jitter).clamp(0.01, 0.90)
                };
                clean.set(x, y, c, v);
            }
        }
    }

    let depth = PlanarImage::from_fn(width, height, 1, Domain::Unbounded, |x, _, _| {
        BAND_DEPTHS[x / band_w]
    })
    .unwrap();
    let nir = PlanarImage::from_fn(width, height, 1, Domain::UnitInterval, |x, y, _| {
        (clean.get(x, y, 0) + clean.get(x, y, 1) + clean.get(x, y, 2)) / 3.0
    })
    .unwrap();
    let hazy = synthesize_haze(&clean, &depth, &AIRLIGHT, 1.0).unwrap();
    // The color-difference region stops 8 pixels short of the deep
    // half: patches there already overlap the dotted bands, so the
    // haze estimate changes character mid-strip.
    let mask = RegionMask::from_fn(width, height, |x, _| x + 8 >= width / 2);

    Scene { clean, depth, nir, hazy, mask }
}
