//! Color space conversions.
//!
//! Two distinct spaces are used and deliberately kept apart:
//!
//! * the **decorrelated opponent space** (log-LMS lαβ) that the coloring stage
//!   works in — one near-luminance axis and two chrominance axes with very low
//!   mutual correlation on natural images, and
//! * **CIELAB** (sRGB primaries, D65 white), used only by the quality metrics.

use crate::error::{Error, Result};
use crate::image::{Domain, PlanarImage};

/// Floor applied before taking logarithms so zero samples stay finite.
/// Sits below the quantization step of 8-bit input (1/255 ≈ 3.9e-3).
pub const LOG_FLOOR: f64 = 1e-4;

/// Smallest representable opponent-space luminance, `sqrt(3) * log10(LOG_FLOOR)`.
pub const OPPONENT_LUM_MIN: f64 = -6.928203230275509;

/// Largest opponent-space luminance reachable from the RGB cube (up to
/// rounding of the forward matrix row sums).
pub const OPPONENT_LUM_MAX: f64 = 0.0;

/// RGB -> LMS cone response matrix, row-major.
const RGB_TO_LMS: [[f64; 3]; 3] = [
    [0.3811, 0.5783, 0.0402],
    [0.1967, 0.7244, 0.0782],
    [0.0241, 0.1288, 0.8444],
];

/// Decorrelating opponent rotation applied to log-LMS, row-major:
/// `diag(1/sqrt(3), 1/sqrt(6), 1/sqrt(2)) * [[1,1,1],[1,1,-2],[1,-1,0]]`.
fn log_lms_to_opponent() -> [[f64; 3]; 3] {
    let s3 = 3.0f64.sqrt().recip();
    let s6 = 6.0f64.sqrt().recip();
    let s2 = 2.0f64.sqrt().recip();
    [[s3, s3, s3], [s6, s6, -2.0 * s6], [s2, -s2, 0.0]]
}

/// Linear-sRGB -> XYZ matrix (D65), row-major.
const RGB_TO_XYZ: [[f64; 3]; 3] = [
    [0.4124564, 0.3575761, 0.1804375],
    [0.2126729, 0.7151522, 0.0721750],
    [0.0193339, 0.1191920, 0.9503041],
];

/// D65 reference white, taken from the matrix itself (its rows do not sum
/// to the textbook white exactly; using the row sums keeps achromatic
/// inputs at exactly zero `a*`/`b*`).
fn white_xyz() -> [f64; 3] {
    mat_vec(&RGB_TO_XYZ, [1.0, 1.0, 1.0])
}

fn mat_vec(m: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

/// Inverse of a 3x3 matrix by cofactor expansion.
///
/// The published inverse matrices are only 4-digit roundings of the true
/// inverses; inverting the forward matrices keeps round trips at f64
/// precision.
fn invert3(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let inv_det = det.recip();
    [
        [
            (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * inv_det,
            (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv_det,
            (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv_det,
        ],
        [
            (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * inv_det,
            (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv_det,
            (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv_det,
        ],
        [
            (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * inv_det,
            (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv_det,
            (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv_det,
        ],
    ]
}

/// Image in the decorrelated opponent space: one luminance plane and two
/// chrominance planes, each stored as a single-channel [`PlanarImage`].
#[derive(Debug, Clone)]
pub struct OpponentImage {
    pub lum: PlanarImage,
    pub chroma_a: PlanarImage,
    pub chroma_b: PlanarImage,
}

impl OpponentImage {
    pub fn width(&self) -> usize {
        self.lum.width()
    }

    pub fn height(&self) -> usize {
        self.lum.height()
    }
}

/// Converts a 3-channel unit-interval RGB image to the decorrelated opponent
/// space: fixed RGB->LMS matrix, elementwise base-10 logarithm (floored at
/// [`LOG_FLOOR`]), then the decorrelating rotation.
pub fn rgb_to_decorrelated(img: &PlanarImage) -> Result<OpponentImage> {
    if img.channels() != 3 {
        return Err(Error::InvalidArgument(format!(
            "expected a 3-channel RGB image, got {} channels",
            img.channels()
        )));
    }
    let opp = log_lms_to_opponent();
    let (w, h) = (img.width(), img.height());
    let n = img.pixel_count();
    let (r, g, b) = (img.plane(0), img.plane(1), img.plane(2));
    let mut lum = vec![0.0; n];
    let mut ca = vec![0.0; n];
    let mut cb = vec![0.0; n];
    for i in 0..n {
        let lms = mat_vec(&RGB_TO_LMS, [r[i], g[i], b[i]]);
        let log_lms = [
            lms[0].max(LOG_FLOOR).log10(),
            lms[1].max(LOG_FLOOR).log10(),
            lms[2].max(LOG_FLOOR).log10(),
        ];
        let o = mat_vec(&opp, log_lms);
        lum[i] = o[0];
        ca[i] = o[1];
        cb[i] = o[2];
    }
    Ok(OpponentImage {
        lum: PlanarImage::from_plane(w, h, Domain::Unbounded, lum)?,
        chroma_a: PlanarImage::from_plane(w, h, Domain::Unbounded, ca)?,
        chroma_b: PlanarImage::from_plane(w, h, Domain::Unbounded, cb)?,
    })
}

/// Exact inverse of [`rgb_to_decorrelated`] followed by a clamp to `[0, 1]`.
pub fn decorrelated_to_rgb(img: &OpponentImage) -> Result<PlanarImage> {
    if !img.lum.same_size(&img.chroma_a) || !img.lum.same_size(&img.chroma_b) {
        return Err(Error::DimensionMismatch(
            "opponent planes disagree in size".into(),
        ));
    }
    let opp_inv = invert3(&log_lms_to_opponent());
    let lms_inv = invert3(&RGB_TO_LMS);
    let (w, h) = (img.width(), img.height());
    let n = w * h;
    let (lum, ca, cb) = (img.lum.plane(0), img.chroma_a.plane(0), img.chroma_b.plane(0));
    let mut out = vec![0.0; 3 * n];
    for i in 0..n {
        let log_lms = mat_vec(&opp_inv, [lum[i], ca[i], cb[i]]);
        let lms = [
            10f64.powf(log_lms[0]),
            10f64.powf(log_lms[1]),
            10f64.powf(log_lms[2]),
        ];
        let rgb = mat_vec(&lms_inv, lms);
        out[i] = rgb[0].clamp(0.0, 1.0);
        out[n + i] = rgb[1].clamp(0.0, 1.0);
        out[2 * n + i] = rgb[2].clamp(0.0, 1.0);
    }
    PlanarImage::new(w, h, 3, Domain::UnitInterval, out)
}

fn srgb_to_linear(c: f64) -> f64 {
    if c <= 0.04045 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn lab_f(t: f64) -> f64 {
    const DELTA: f64 = 6.0 / 29.0;
    if t > DELTA * DELTA * DELTA {
        t.cbrt()
    } else {
        t / (3.0 * DELTA * DELTA) + 4.0 / 29.0
    }
}

/// Converts one sRGB triple to CIELAB (D65).
pub fn srgb_pixel_to_lab(rgb: [f64; 3]) -> [f64; 3] {
    let lin = [
        srgb_to_linear(rgb[0]),
        srgb_to_linear(rgb[1]),
        srgb_to_linear(rgb[2]),
    ];
    let xyz = mat_vec(&RGB_TO_XYZ, lin);
    let white = white_xyz();
    let fx = lab_f(xyz[0] / white[0]);
    let fy = lab_f(xyz[1] / white[1]);
    let fz = lab_f(xyz[2] / white[2]);
    [116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)]
}

/// Converts a unit-interval RGB image (interpreted as sRGB) to CIELAB planes
/// `L*`, `a*`, `b*`.
pub fn rgb_to_lab(img: &PlanarImage) -> Result<PlanarImage> {
    if img.channels() != 3 {
        return Err(Error::InvalidArgument(format!(
            "expected a 3-channel RGB image, got {} channels",
            img.channels()
        )));
    }
    let (w, h) = (img.width(), img.height());
    let n = img.pixel_count();
    let (r, g, b) = (img.plane(0), img.plane(1), img.plane(2));
    let mut out = vec![0.0; 3 * n];
    for i in 0..n {
        let lab = srgb_pixel_to_lab([r[i], g[i], b[i]]);
        out[i] = lab[0];
        out[n + i] = lab[1];
        out[2 * n + i] = lab[2];
    }
    PlanarImage::new(w, h, 3, Domain::Unbounded, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn neutral_gray_has_near_zero_chroma() {
        let img = PlanarImage::constant(3, 2, 3, Domain::UnitInterval, 0.42).unwrap();
        let opp = rgb_to_decorrelated(&img).unwrap();
        // The forward matrix rows do not sum exactly to one, so "zero" chroma
        // for achromatic input is only as good as the published coefficients.
        for v in opp.chroma_a.data().iter().chain(opp.chroma_b.data()) {
            assert!(v.abs() < 5e-3, "chroma {v}");
        }
    }

    #[test]
    fn round_trip_is_identity_away_from_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let img = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |_, _, _| {
            rng.gen_range(0.05..1.0)
        })
        .unwrap();
        let back = decorrelated_to_rgb(&rgb_to_decorrelated(&img).unwrap()).unwrap();
        for (a, b) in img.data().iter().zip(back.data()) {
            assert!((a - b).abs() < 1e-6, "{a} vs {b}");
        }
    }

    #[test]
    fn reverse_round_trip_is_identity() {
        // opponent -> RGB -> opponent on values that stay inside the gamut.
        let img = PlanarImage::from_fn(4, 4, 3, Domain::UnitInterval, |x, y, c| {
            0.2 + 0.08 * c as f64 + 0.03 * x as f64 + 0.02 * y as f64
        })
        .unwrap();
        let opp = rgb_to_decorrelated(&img).unwrap();
        let opp2 = rgb_to_decorrelated(&decorrelated_to_rgb(&opp).unwrap()).unwrap();
        for (a, b) in opp.lum.data().iter().zip(opp2.lum.data()) {
            assert!((a - b).abs() < 1e-6);
        }
        for (a, b) in opp.chroma_a.data().iter().zip(opp2.chroma_a.data()) {
            assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn fixed_triple_matches_matrix_oracle() {
        let (r, g, b) = (0.8, 0.4, 0.2);
        let img = PlanarImage::new(1, 1, 3, Domain::UnitInterval, vec![r, g, b]).unwrap();
        let opp = rgb_to_decorrelated(&img).unwrap();

        // Oracle: direct arithmetic with the published coefficients.
        let l = 0.3811 * r + 0.5783 * g + 0.0402 * b;
        let m = 0.1967 * r + 0.7244 * g + 0.0782 * b;
        let s = 0.0241 * r + 0.1288 * g + 0.8444 * b;
        let (ll, lm, ls) = (l.log10(), m.log10(), s.log10());
        let expect_lum = (ll + lm + ls) / 3.0f64.sqrt();
        let expect_ca = (ll + lm - 2.0 * ls) / 6.0f64.sqrt();
        let expect_cb = (ll - lm) / 2.0f64.sqrt();

        assert!((opp.lum.data()[0] - expect_lum).abs() < 1e-12);
        assert!((opp.chroma_a.data()[0] - expect_ca).abs() < 1e-12);
        assert!((opp.chroma_b.data()[0] - expect_cb).abs() < 1e-12);
    }

    #[test]
    fn zero_chroma_maps_to_gray_pixel() {
        let w = 2;
        let lum = PlanarImage::constant(w, 1, 1, Domain::Unbounded, -0.8).unwrap();
        let zero = PlanarImage::zeros(w, 1, 1, Domain::Unbounded);
        let rgb = decorrelated_to_rgb(&OpponentImage {
            lum,
            chroma_a: zero.clone(),
            chroma_b: zero,
        })
        .unwrap();
        let (r, g, b) = (rgb.get(0, 0, 0), rgb.get(0, 0, 1), rgb.get(0, 0, 2));
        assert!((r - g).abs() < 1e-2 && (g - b).abs() < 1e-2, "({r}, {g}, {b})");
    }

    #[test]
    fn out_of_gamut_is_clamped() {
        let lum = PlanarImage::constant(1, 1, 1, Domain::Unbounded, 0.5).unwrap();
        let big = PlanarImage::constant(1, 1, 1, Domain::Unbounded, 3.0).unwrap();
        let rgb = decorrelated_to_rgb(&OpponentImage {
            lum,
            chroma_a: big.clone(),
            chroma_b: big,
        })
        .unwrap();
        assert!(rgb.data().iter().all(|v| (0.0..=1.0).contains(v)));
    }

    #[test]
    fn lab_white_and_black() {
        let white = srgb_pixel_to_lab([1.0, 1.0, 1.0]);
        assert!((white[0] - 100.0).abs() < 1e-3, "L* = {}", white[0]);
        assert!(white[1].abs() < 1e-2 && white[2].abs() < 1e-2);

        let black = srgb_pixel_to_lab([0.0, 0.0, 0.0]);
        assert!(black[0].abs() < 1e-12);
    }

    #[test]
    fn lab_mid_gray_matches_reference_conversion() {
        let lab = srgb_pixel_to_lab([0.5, 0.5, 0.5]);
        assert!(lab[1].abs() < 1e-6 && lab[2].abs() < 1e-6);

        // Independent reference path, written out from the sRGB and CIELAB
        // defining equations.
        let lin = ((0.5f64 + 0.055) / 1.055).powf(2.4);
        let y = lin; // gray: Y equals the linear value, Yn = 1
        let fy = y.cbrt();
        let expect_l = 116.0 * fy - 16.0;
        assert!((lab[0] - expect_l).abs() < 1e-9, "{} vs {expect_l}", lab[0]);
        // Frozen from the reference path.
        assert!((lab[0] - 53.38896474).abs() < 1e-6);
    }

    #[test]
    fn achromatic_inputs_have_zero_lab_chroma() {
        for v in [0.01, 0.2, 0.5, 0.77, 1.0] {
            let lab = srgb_pixel_to_lab([v, v, v]);
            assert!(lab[1].abs() < 1e-6 && lab[2].abs() < 1e-6, "value {v}");
        }
    }
}
