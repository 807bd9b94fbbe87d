//! Colorizing the near-infrared gray image.
//!
//! The NIR image carries haze-free structure but no color and its brightness
//! disagrees with the visible image. A per-pixel affine regression from NIR
//! luminance patches to visible luminance patches, regularized toward a
//! local-contrast prior, gives a slope/bias field. The slope scales the NIR
//! luminance onto the visible luminance scale and its reciprocal re-saturates
//! the visible chrominance, yielding a colored NIR image that later acts as
//! the color prior of the dehazing objective.

use crate::color::{self, OpponentImage};
use crate::error::{Error, Result};
use crate::image::{extract_patch, Domain, PlanarImage};

/// Parameters of the coloring stage.
#[derive(Debug, Clone)]
pub struct ColoringConfig {
    /// Odd patch size for the local regression.
    pub patch_size: usize,
    /// Weight pulling the affine fit toward the local-contrast prior.
    pub mu_c: f64,
    /// Variance floor protecting the contrast ratio when a patch is flat.
    pub eps_sigma: f64,
    /// Floor on the slope when dividing chrominance.
    pub eps_div: f64,
}

impl Default for ColoringConfig {
    fn default() -> Self {
        Self {
            patch_size: 5,
            mu_c: 0.5,
            eps_sigma: 1e-6,
            eps_div: 1e-3,
        }
    }
}

impl ColoringConfig {
    pub fn validate(&self) -> Result<()> {
        if self.patch_size % 2 == 0 || self.patch_size < 3 {
            return Err(Error::InvalidConfig(format!(
                "patch_size must be odd and >= 3, got {}",
                self.patch_size
            )));
        }
        for (name, v) in [
            ("mu_c", self.mu_c),
            ("eps_sigma", self.eps_sigma),
            ("eps_div", self.eps_div),
        ] {
            if !(v >= 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be >= 0, got {v}")));
            }
        }
        Ok(())
    }
}

/// Per-pixel affine mapping: a slope plane and a bias plane.
#[derive(Debug, Clone)]
pub struct MappingField {
    pub slope: PlanarImage,
    pub bias: PlanarImage,
}

impl MappingField {
    pub fn width(&self) -> usize {
        self.slope.width()
    }

    pub fn height(&self) -> usize {
        self.slope.height()
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn std_dev(v: &[f64]) -> f64 {
    let m = mean(v);
    (v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / v.len() as f64).sqrt()
}

/// Local-contrast prior for the affine fit: the ratio of patch standard
/// deviations gives the slope, and the bias matches the patch means.
pub fn local_contrast_prior(p: &[f64], q: &[f64], eps_sigma: f64) -> (f64, f64) {
    debug_assert_eq!(p.len(), q.len());
    let slope = std_dev(p) / (std_dev(q) + eps_sigma);
    let bias = mean(p) - slope * mean(q);
    (slope, bias)
}

/// Solves the regularized weighted least squares
/// `min ||W^(1/2) (p - [q 1] a)||^2 + mu_c ||a - a0||^2`
/// through its 2x2 normal equations.
pub fn fit_mapping(
    p: &[f64],
    q: &[f64],
    weights: &[f64],
    mu_c: f64,
    alpha0: (f64, f64),
) -> Result<(f64, f64)> {
    if p.len() != q.len() || p.len() != weights.len() {
        return Err(Error::DimensionMismatch(format!(
            "patch lengths disagree: p={}, q={}, w={}",
            p.len(),
            q.len(),
            weights.len()
        )));
    }
    if weights.iter().any(|&w| w < 0.0) {
        return Err(Error::InvalidArgument("negative regression weight".into()));
    }
    let mut s_qq = 0.0;
    let mut s_q = 0.0;
    let mut s_w = 0.0;
    let mut s_pq = 0.0;
    let mut s_p = 0.0;
    for i in 0..p.len() {
        let w = weights[i];
        s_qq += w * q[i] * q[i];
        s_q += w * q[i];
        s_w += w;
        s_pq += w * p[i] * q[i];
        s_p += w * p[i];
    }
    // (A^T W A + mu_c I) a = A^T W p + mu_c a0, A = [q 1]
    let a11 = s_qq + mu_c;
    let a12 = s_q;
    let a22 = s_w + mu_c;
    let b1 = s_pq + mu_c * alpha0.0;
    let b2 = s_p + mu_c * alpha0.1;
    let det = a11 * a22 - a12 * a12;
    if det.abs() < 1e-14 * (a11.abs() + a22.abs() + 1.0) {
        return Err(Error::DegenerateSystem(
            "2x2 normal matrix is singular (mu_c = 0 with a constant patch)".into(),
        ));
    }
    Ok(((b1 * a22 - b2 * a12) / det, (a11 * b2 - a12 * b1) / det))
}

/// Regression weights for one patch: inversely proportional to the Euclidean
/// distance from the patch center, normalized to sum one. Weights depend on
/// the nominal patch offsets only, so border pixels keep the same profile.
pub fn patch_weights(size: usize) -> Vec<f64> {
    let half = (size / 2) as isize;
    let mut w = Vec::with_capacity(size * size);
    for dy in -half..=half {
        for dx in -half..=half {
            let d = ((dx * dx + dy * dy) as f64).sqrt();
            w.push(1.0 / (1.0 + d));
        }
    }
    let total: f64 = w.iter().sum();
    for v in &mut w {
        *v /= total;
    }
    w
}

/// Runs the patch regression at every pixel of the pair of luminance planes.
pub fn build_mapping_field(
    vis_lum: &PlanarImage,
    nir_lum: &PlanarImage,
    cfg: &ColoringConfig,
) -> Result<MappingField> {
    cfg.validate()?;
    if vis_lum.channels() != 1 || nir_lum.channels() != 1 {
        return Err(Error::InvalidArgument(
            "mapping field expects single-channel luminance planes".into(),
        ));
    }
    if !vis_lum.same_size(nir_lum) {
        return Err(Error::DimensionMismatch(format!(
            "visible {}x{} vs NIR {}x{}",
            vis_lum.width(),
            vis_lum.height(),
            nir_lum.width(),
            nir_lum.height()
        )));
    }
    let (w, h) = (vis_lum.width(), vis_lum.height());
    let weights = patch_weights(cfg.patch_size);
    let mut slope = vec![0.0; w * h];
    let mut bias = vec![0.0; w * h];
    for y in 0..h {
        for x in 0..w {
            let p = extract_patch(vis_lum, 0, (x, y), cfg.patch_size)?;
            let q = extract_patch(nir_lum, 0, (x, y), cfg.patch_size)?;
            let alpha0 = local_contrast_prior(&p, &q, cfg.eps_sigma);
            let (a1, a2) = fit_mapping(&p, &q, &weights, cfg.mu_c, alpha0)?;
            slope[y * w + x] = a1;
            bias[y * w + x] = a2;
        }
    }
    Ok(MappingField {
        slope: PlanarImage::from_plane(w, h, Domain::Unbounded, slope)?,
        bias: PlanarImage::from_plane(w, h, Domain::Unbounded, bias)?,
    })
}

/// Applies the affine field to the NIR plane: `out = nir * slope + bias`,
/// clamped to the representable opponent-space luminance range.
pub fn apply_luminance_mapping(
    nir_lum: &PlanarImage,
    field: &MappingField,
) -> Result<PlanarImage> {
    if !nir_lum.same_size(&field.slope) {
        return Err(Error::DimensionMismatch(
            "mapping field size disagrees with the NIR plane".into(),
        ));
    }
    let (w, h) = (nir_lum.width(), nir_lum.height());
    let n = w * h;
    let (src, a1, a2) = (nir_lum.plane(0), field.slope.plane(0), field.bias.plane(0));
    let mut out = vec![0.0; n];
    for i in 0..n {
        out[i] = (src[i] * a1[i] + a2[i]).clamp(color::OPPONENT_LUM_MIN, color::OPPONENT_LUM_MAX);
    }
    PlanarImage::from_plane(w, h, Domain::Unbounded, out)
}

/// Divides both visible chrominance planes by the slope (floored at
/// `eps_div`), the contrast-enhancing color transfer.
pub fn transfer_chrominance(
    vis_chroma: (&PlanarImage, &PlanarImage),
    field: &MappingField,
    eps_div: f64,
) -> Result<(PlanarImage, PlanarImage)> {
    let (ca, cb) = vis_chroma;
    if !ca.same_size(&field.slope) || !cb.same_size(&field.slope) {
        return Err(Error::DimensionMismatch(
            "chrominance planes disagree with the mapping field".into(),
        ));
    }
    let (w, h) = (ca.width(), ca.height());
    let n = w * h;
    let a1 = field.slope.plane(0);
    let mut out_a = vec![0.0; n];
    let mut out_b = vec![0.0; n];
    for i in 0..n {
        let div = a1[i].max(eps_div);
        out_a[i] = ca.plane(0)[i] / div;
        out_b[i] = cb.plane(0)[i] / div;
    }
    Ok((
        PlanarImage::from_plane(w, h, Domain::Unbounded, out_a)?,
        PlanarImage::from_plane(w, h, Domain::Unbounded, out_b)?,
    ))
}

/// Produces the colored NIR image: maps the NIR luminance onto the visible
/// luminance scale, transfers re-saturated visible chrominance, and converts
/// back to RGB.
pub fn colorize(
    vis: &PlanarImage,
    nir: &PlanarImage,
    cfg: &ColoringConfig,
) -> Result<PlanarImage> {
    if vis.channels() != 3 || nir.channels() != 1 {
        return Err(Error::InvalidArgument(format!(
            "colorize expects 3-channel visible and 1-channel NIR, got {} and {}",
            vis.channels(),
            nir.channels()
        )));
    }
    if !vis.same_size(nir) {
        return Err(Error::DimensionMismatch(format!(
            "visible {}x{} vs NIR {}x{}",
            vis.width(),
            vis.height(),
            nir.width(),
            nir.height()
        )));
    }
    let opp = color::rgb_to_decorrelated(vis)?;
    let field = build_mapping_field(&opp.lum, nir, cfg)?;
    let lum = apply_luminance_mapping(nir, &field)?;
    let (chroma_a, chroma_b) =
        transfer_chrominance((&opp.chroma_a, &opp.chroma_b), &field, cfg.eps_div)?;
    color::decorrelated_to_rgb(&OpponentImage {
        lum,
        chroma_a,
        chroma_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::rgb_to_decorrelated;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn contrast_prior_recovers_affine_relation() {
        let q: Vec<f64> = (0..25).map(|i| 0.1 + 0.03 * i as f64).collect();
        let p: Vec<f64> = q.iter().map(|v| 2.0 * v + 1.0).collect();
        let (slope, bias) = local_contrast_prior(&p, &q, 0.0);
        assert!((slope - 2.0).abs() < 1e-9);
        assert!((bias - 1.0).abs() < 1e-9);
    }

    #[test]
    fn contrast_prior_flat_patches() {
        let p = vec![0.6; 9];
        let q = vec![0.2; 9];
        let (slope, bias) = local_contrast_prior(&p, &q, 1e-6);
        assert_eq!(slope, 0.0);
        assert!((bias - 0.6).abs() < 1e-12);
    }

    #[test]
    fn contrast_prior_matches_formula_oracle() {
        let mut r = rng(3);
        for _ in 0..50 {
            let p: Vec<f64> = (0..25).map(|_| r.gen::<f64>()).collect();
            let q: Vec<f64> = (0..25).map(|_| r.gen::<f64>()).collect();
            let (slope, bias) = local_contrast_prior(&p, &q, 1e-6);

            let mp = p.iter().sum::<f64>() / 25.0;
            let mq = q.iter().sum::<f64>() / 25.0;
            let sp = (p.iter().map(|v| (v - mp).powi(2)).sum::<f64>() / 25.0).sqrt();
            let sq = (q.iter().map(|v| (v - mq).powi(2)).sum::<f64>() / 25.0).sqrt();
            let es = sp / (sq + 1e-6);
            assert!((slope - es).abs() < 1e-12);
            assert!((bias - (mp - es * mq)).abs() < 1e-12);
        }
    }

    #[test]
    fn fit_interpolates_exactly_without_regularization() {
        let q: Vec<f64> = (0..9).map(|i| i as f64 * 0.1).collect();
        let p: Vec<f64> = q.iter().map(|v| 2.0 * v + 1.0).collect();
        let w = vec![1.0; 9];
        let (a1, a2) = fit_mapping(&p, &q, &w, 0.0, (0.0, 0.0)).unwrap();
        assert!((a1 - 2.0).abs() < 1e-9);
        assert!((a2 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fit_follows_prior_when_regularizer_dominates() {
        let mut r = rng(9);
        let q: Vec<f64> = (0..9).map(|_| r.gen::<f64>()).collect();
        let p: Vec<f64> = (0..9).map(|_| r.gen::<f64>()).collect();
        let w = patch_weights(3);
        let (a1, a2) = fit_mapping(&p, &q, &w, 1e9, (1.5, 0.2)).unwrap();
        assert!((a1 - 1.5).abs() < 1e-6);
        assert!((a2 - 0.2).abs() < 1e-6);
    }

    #[test]
    fn fit_matches_dense_solve_oracle() {
        use nalgebra::{Matrix2, Vector2};
        let mut r = rng(17);
        for _ in 0..100 {
            let n = 25;
            let p: Vec<f64> = (0..n).map(|_| r.gen::<f64>()).collect();
            let q: Vec<f64> = (0..n).map(|_| r.gen::<f64>()).collect();
            let w: Vec<f64> = (0..n).map(|_| r.gen::<f64>()).collect();
            let alpha0 = (r.gen::<f64>(), r.gen::<f64>());
            let mu = 0.5;
            let (a1, a2) = fit_mapping(&p, &q, &w, mu, alpha0).unwrap();

            let mut ata = Matrix2::<f64>::zeros();
            let mut atb = Vector2::<f64>::zeros();
            for i in 0..n {
                ata[(0, 0)] += w[i] * q[i] * q[i];
                ata[(0, 1)] += w[i] * q[i];
                ata[(1, 0)] += w[i] * q[i];
                ata[(1, 1)] += w[i];
                atb[0] += w[i] * q[i] * p[i];
                atb[1] += w[i] * p[i];
            }
            ata[(0, 0)] += mu;
            ata[(1, 1)] += mu;
            atb[0] += mu * alpha0.0;
            atb[1] += mu * alpha0.1;
            let sol = ata.lu().solve(&atb).unwrap();
            assert!((a1 - sol[0]).abs() < 1e-10);
            assert!((a2 - sol[1]).abs() < 1e-10);
        }
    }

    #[test]
    fn fit_reports_degenerate_system() {
        let p = vec![0.5; 9];
        let q = vec![0.2; 9];
        let w = vec![1.0; 9];
        assert!(matches!(
            fit_mapping(&p, &q, &w, 0.0, (0.0, 0.0)),
            Err(Error::DegenerateSystem(_))
        ));
        // Any positive mu_c restores uniqueness.
        assert!(fit_mapping(&p, &q, &w, 0.5, (0.0, 0.0)).is_ok());
    }

    #[test]
    fn field_is_identity_for_identical_planes() {
        let mut r = rng(5);
        let img = PlanarImage::from_fn(10, 10, 1, Domain::UnitInterval, |_, _, _| r.gen())
            .unwrap();
        let cfg = ColoringConfig {
            mu_c: 1e-6,
            ..ColoringConfig::default()
        };
        let field = build_mapping_field(&img, &img, &cfg).unwrap();
        for i in 0..100 {
            assert!((field.slope.data()[i] - 1.0).abs() < 1e-3);
            assert!(field.bias.data()[i].abs() < 1e-3);
        }
    }

    #[test]
    fn field_recovers_global_scaling() {
        let mut r = rng(6);
        let nir = PlanarImage::from_fn(10, 10, 1, Domain::UnitInterval, |_, _, _| r.gen())
            .unwrap();
        let vis = PlanarImage::from_fn(10, 10, 1, Domain::UnitInterval, |x, y, _| {
            0.5 * nir.get(x, y, 0)
        })
        .unwrap();
        let cfg = ColoringConfig {
            mu_c: 1e-6,
            ..ColoringConfig::default()
        };
        let field = build_mapping_field(&vis, &nir, &cfg).unwrap();
        for v in field.slope.data() {
            assert!((v - 0.5).abs() < 1e-3, "slope {v}");
        }
    }

    #[test]
    fn field_matches_per_pixel_oracle() {
        let mut r = rng(7);
        let vis = PlanarImage::from_fn(8, 6, 1, Domain::UnitInterval, |_, _, _| r.gen())
            .unwrap();
        let nir = PlanarImage::from_fn(8, 6, 1, Domain::UnitInterval, |_, _, _| r.gen())
            .unwrap();
        let cfg = ColoringConfig::default();
        let field = build_mapping_field(&vis, &nir, &cfg).unwrap();
        let weights = patch_weights(cfg.patch_size);
        for y in 0..6 {
            for x in 0..8 {
                let p = extract_patch(&vis, 0, (x, y), cfg.patch_size).unwrap();
                let q = extract_patch(&nir, 0, (x, y), cfg.patch_size).unwrap();
                let a0 = local_contrast_prior(&p, &q, cfg.eps_sigma);
                let (a1, a2) = fit_mapping(&p, &q, &weights, cfg.mu_c, a0).unwrap();
                assert_eq!(field.slope.get(x, y, 0), a1);
                assert_eq!(field.bias.get(x, y, 0), a2);
            }
        }
    }

    #[test]
    fn luminance_mapping_identity_and_constant_fields() {
        let mut r = rng(8);
        let nir = PlanarImage::from_fn(5, 5, 1, Domain::Unbounded, |_, _, _| {
            -r.gen::<f64>() * 2.0
        })
        .unwrap();
        let ones = PlanarImage::constant(5, 5, 1, Domain::Unbounded, 1.0).unwrap();
        let zeros = PlanarImage::zeros(5, 5, 1, Domain::Unbounded);
        let identity = MappingField {
            slope: ones.clone(),
            bias: zeros.clone(),
        };
        let out = apply_luminance_mapping(&nir, &identity).unwrap();
        assert_eq!(out.data(), nir.data());

        let constant = MappingField {
            slope: zeros,
            bias: PlanarImage::constant(5, 5, 1, Domain::Unbounded, -0.25).unwrap(),
        };
        let out = apply_luminance_mapping(&nir, &constant).unwrap();
        assert!(out.data().iter().all(|&v| v == -0.25));
    }

    #[test]
    fn luminance_mapping_matches_elementwise_oracle() {
        let mut r = rng(10);
        let nir =
            PlanarImage::from_fn(6, 4, 1, Domain::UnitInterval, |_, _, _| r.gen()).unwrap();
        let field = MappingField {
            slope: PlanarImage::from_fn(6, 4, 1, Domain::Unbounded, |_, _, _| {
                r.gen::<f64>() * 2.0 - 1.0
            })
            .unwrap(),
            bias: PlanarImage::from_fn(6, 4, 1, Domain::Unbounded, |_, _, _| {
                -r.gen::<f64>()
            })
            .unwrap(),
        };
        let out = apply_luminance_mapping(&nir, &field).unwrap();
        for i in 0..24 {
            let expect = (nir.data()[i] * field.slope.data()[i] + field.bias.data()[i])
                .clamp(color::OPPONENT_LUM_MIN, color::OPPONENT_LUM_MAX);
            assert_eq!(out.data()[i], expect);
        }
    }

    #[test]
    fn chrominance_transfer_scales_by_slope() {
        let ca = PlanarImage::constant(3, 3, 1, Domain::Unbounded, 0.3).unwrap();
        let cb = PlanarImage::constant(3, 3, 1, Domain::Unbounded, -0.2).unwrap();
        let zeros = PlanarImage::zeros(3, 3, 1, Domain::Unbounded);

        let unit = MappingField {
            slope: PlanarImage::constant(3, 3, 1, Domain::Unbounded, 1.0).unwrap(),
            bias: zeros.clone(),
        };
        let (oa, ob) = transfer_chrominance((&ca, &cb), &unit, 1e-3).unwrap();
        assert_eq!(oa.data(), ca.data());
        assert_eq!(ob.data(), cb.data());

        let double = MappingField {
            slope: PlanarImage::constant(3, 3, 1, Domain::Unbounded, 2.0).unwrap(),
            bias: zeros.clone(),
        };
        let (oa, _) = transfer_chrominance((&ca, &cb), &double, 1e-3).unwrap();
        assert!(oa.data().iter().all(|&v| (v - 0.15).abs() < 1e-12));

        // Slopes below the floor divide by eps_div instead.
        let tiny = MappingField {
            slope: PlanarImage::constant(3, 3, 1, Domain::Unbounded, 1e-9).unwrap(),
            bias: zeros,
        };
        let (oa, _) = transfer_chrominance((&ca, &cb), &tiny, 1e-3).unwrap();
        assert!(oa.data().iter().all(|&v| (v - 300.0).abs() < 1e-9));
    }

    #[test]
    fn colorize_is_near_identity_when_nir_is_visible_luminance() {
        let vis = PlanarImage::from_fn(16, 16, 3, Domain::UnitInterval, |x, y, c| {
            let base = 0.3 + 0.25 * ((x as f64 * 0.7).sin() * (y as f64 * 0.45).cos());
            (base + 0.08 * c as f64).clamp(0.05, 0.95)
        })
        .unwrap();
        let nir = rgb_to_decorrelated(&vis).unwrap().lum;
        let out = colorize(&vis, &nir, &ColoringConfig::default()).unwrap();
        let max_err = vis
            .data()
            .iter()
            .zip(out.data())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        assert!(max_err < 1e-2, "max err {max_err}");
    }

    #[test]
    fn colorize_constant_visible_keeps_chroma_constant() {
        // A constant visible color with exactly zero opponent chroma: the
        // transferred chrominance stays (constant) zero and the luminance is
        // the affine image of the NIR plane.
        let lum0 = -0.9;
        let gray = crate::color::decorrelated_to_rgb(&OpponentImage {
            lum: PlanarImage::constant(12, 12, 1, Domain::Unbounded, lum0).unwrap(),
            chroma_a: PlanarImage::zeros(12, 12, 1, Domain::Unbounded),
            chroma_b: PlanarImage::zeros(12, 12, 1, Domain::Unbounded),
        })
        .unwrap();
        let mut r = rng(12);
        let nir = PlanarImage::from_fn(12, 12, 1, Domain::UnitInterval, |_, _, _| r.gen())
            .unwrap();
        let out = colorize(&gray, &nir, &ColoringConfig::default()).unwrap();
        let opp = rgb_to_decorrelated(&out).unwrap();
        let ca0 = opp.chroma_a.data()[0];
        for v in opp.chroma_a.data() {
            assert!((v - ca0).abs() < 1e-3, "chroma_a varies: {v} vs {ca0}");
        }
        // Luminance follows the per-pixel affine map of the NIR input.
        let field = build_mapping_field(
            &rgb_to_decorrelated(&gray).unwrap().lum,
            &nir,
            &ColoringConfig::default(),
        )
        .unwrap();
        let mapped = apply_luminance_mapping(&nir, &field).unwrap();
        for (a, b) in opp.lum.data().iter().zip(mapped.data()) {
            assert!((a - b).abs() < 2e-2, "{a} vs {b}");
        }
    }

    #[test]
    fn colorize_rejects_mismatched_inputs() {
        let vis = PlanarImage::zeros(4, 4, 3, Domain::UnitInterval);
        let nir = PlanarImage::zeros(5, 4, 1, Domain::UnitInterval);
        assert!(matches!(
            colorize(&vis, &nir, &ColoringConfig::default()),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
