//! Region-masked quality measures.
//!
//! Dehazing quality is judged differently inside and outside the haze: in
//! hazy regions the NIR image is the only structural reference, so a global
//! structure-similarity score (ISS) compares luminance against it; in clear
//! regions the visible image is trustworthy, so color difference (CD) and
//! colorfulness (CF) are computed there in CIELAB. The mask marks haze
//! pixels true, after the convention that haze regions are painted black.

use crate::color;
use crate::error::{Error, Result};
use crate::image::{Domain, PlanarImage, RegionMask};

/// Stabilizer of the ISS ratio on unit-interval data.
pub const ISS_C3: f64 = 0.03 * 0.03 / 2.0;

/// Weight of the mean-chroma term in CF.
pub const CF_CHROMA_WEIGHT: f64 = 0.94;

/// The three measures plus the region sizes they were computed over.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    /// Structure similarity over the haze region (1 is best).
    pub iss: f64,
    /// Mean CIELAB color difference over the non-haze region (0 is best).
    pub cd: f64,
    /// Colorfulness of the non-haze region (higher is more colorful).
    pub cf: f64,
    /// Pixels in the haze region.
    pub haze_pixel_count: usize,
    /// Pixels in the non-haze region.
    pub nonhaze_pixel_count: usize,
}

fn check_sizes(a: &PlanarImage, b: &PlanarImage) -> Result<()> {
    if !a.same_size(b) {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    Ok(())
}

fn check_mask(img: &PlanarImage, mask: &RegionMask) -> Result<()> {
    if !mask.same_size_as(img) {
        return Err(Error::DimensionMismatch(format!(
            "mask {}x{} vs image {}x{}",
            mask.width(),
            mask.height(),
            img.width(),
            img.height()
        )));
    }
    Ok(())
}

/// CIELAB lightness plane scaled to `[0, 1]` (`L*/100`), the luminance used
/// by [`iss`] inside [`evaluate`].
pub fn lab_luminance(img: &PlanarImage) -> Result<PlanarImage> {
    if img.channels() != 3 {
        return Err(Error::InvalidArgument(format!(
            "lab_luminance expects a 3-channel image, got {}",
            img.channels()
        )));
    }
    let n = img.pixel_count();
    let mut out = vec![0.0; n];
    for i in 0..n {
        let lab = color::srgb_pixel_to_lab([
            img.plane(0)[i],
            img.plane(1)[i],
            img.plane(2)[i],
        ]);
        out[i] = lab[0] / 100.0;
    }
    PlanarImage::from_plane(img.width(), img.height(), Domain::UnitInterval, out)
}

/// Global structure similarity `(σ_xy + c3) / (σ_x σ_y + c3)` over the haze
/// (true) pixels of the mask. Values near 1 mean the test image carries the
/// reference structure; anti-correlated inputs go negative.
pub fn iss(test: &PlanarImage, reference: &PlanarImage, mask: &RegionMask) -> Result<f64> {
    if test.channels() != 1 || reference.channels() != 1 {
        return Err(Error::InvalidArgument(
            "iss expects single-channel luminance planes".into(),
        ));
    }
    check_sizes(test, reference)?;
    check_mask(test, mask)?;
    let n = mask.count_true();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "iss needs at least 2 haze pixels, mask has {n}"
        )));
    }
    let (mut mx, mut my) = (0.0, 0.0);
    let (tw, th) = (test.width(), test.height());
    for y in 0..th {
        for x in 0..tw {
            if mask.get(x, y) {
                mx += test.get(x, y, 0);
                my += reference.get(x, y, 0);
            }
        }
    }
    mx /= n as f64;
    my /= n as f64;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for y in 0..th {
        for x in 0..tw {
            if mask.get(x, y) {
                let dx = test.get(x, y, 0) - mx;
                let dy = reference.get(x, y, 0) - my;
                sxx += dx * dx;
                syy += dy * dy;
                sxy += dx * dy;
            }
        }
    }
    sxx /= n as f64;
    syy /= n as f64;
    sxy /= n as f64;
    Ok((sxy + ISS_C3) / (sxx.sqrt() * syy.sqrt() + ISS_C3))
}

fn lab_at(img: &PlanarImage, i: usize) -> [f64; 3] {
    color::srgb_pixel_to_lab([img.plane(0)[i], img.plane(1)[i], img.plane(2)[i]])
}

/// Mean CIELAB distance over the non-haze (false) pixels of the mask.
pub fn cd(test: &PlanarImage, reference: &PlanarImage, mask: &RegionMask) -> Result<f64> {
    if test.channels() != 3 || reference.channels() != 3 {
        return Err(Error::InvalidArgument("cd expects 3-channel images".into()));
    }
    check_sizes(test, reference)?;
    check_mask(test, mask)?;
    let n = mask.count_false();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cd needs a non-empty non-haze region".into(),
        ));
    }
    let w = test.width();
    let mut total = 0.0;
    for y in 0..test.height() {
        for x in 0..w {
            if !mask.get(x, y) {
                let a = lab_at(test, y * w + x);
                let b = lab_at(reference, y * w + x);
                total += ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
                    + (a[2] - b[2]).powi(2))
                .sqrt();
            }
        }
    }
    Ok(total / n as f64)
}

/// Colorfulness over the non-haze pixels: the spread of the CIELAB
/// chrominance planes plus `0.94` times the mean chroma.
pub fn cf(test: &PlanarImage, mask: &RegionMask) -> Result<f64> {
    if test.channels() != 3 {
        return Err(Error::InvalidArgument("cf expects a 3-channel image".into()));
    }
    check_mask(test, mask)?;
    let n = mask.count_false();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cf needs a non-empty non-haze region".into(),
        ));
    }
    let w = test.width();
    let (mut ma, mut mb, mut mc) = (0.0, 0.0, 0.0);
    let mut labs = Vec::with_capacity(n);
    for y in 0..test.height() {
        for x in 0..w {
            if !mask.get(x, y) {
                let lab = lab_at(test, y * w + x);
                ma += lab[1];
                mb += lab[2];
                mc += (lab[1] * lab[1] + lab[2] * lab[2]).sqrt();
                labs.push((lab[1], lab[2]));
            }
        }
    }
    ma /= n as f64;
    mb /= n as f64;
    mc /= n as f64;
    let (mut va, mut vb) = (0.0, 0.0);
    for (a, b) in labs {
        va += (a - ma) * (a - ma);
        vb += (b - mb) * (b - mb);
    }
    va /= n as f64;
    vb /= n as f64;
    Ok((va + vb).sqrt() + CF_CHROMA_WEIGHT * mc)
}

/// Runs the full masked protocol: ISS of the test luminance against the NIR
/// reference over haze pixels, CD against the visible reference and CF over
/// the rest.
pub fn evaluate(
    test: &PlanarImage,
    vis_ref: &PlanarImage,
    nir_ref: &PlanarImage,
    mask: &RegionMask,
) -> Result<MetricReport> {
    check_sizes(test, vis_ref)?;
    check_sizes(test, nir_ref)?;
    check_mask(test, mask)?;
    let lum = lab_luminance(test)?;
    Ok(MetricReport {
        iss: iss(&lum, nir_ref, mask)?,
        cd: cd(test, vis_ref, mask)?,
        cf: cf(test, mask)?,
        haze_pixel_count: mask.count_true(),
        nonhaze_pixel_count: mask.count_false(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_gray(r: &mut ChaCha8Rng, w: usize, h: usize) -> PlanarImage {
        PlanarImage::from_fn(w, h, 1, Domain::UnitInterval, |_, _, _| r.gen()).unwrap()
    }

    fn random_rgb(r: &mut ChaCha8Rng, w: usize, h: usize) -> PlanarImage {
        PlanarImage::from_fn(w, h, 3, Domain::UnitInterval, |_, _, _| r.gen()).unwrap()
    }

    fn full_mask(w: usize, h: usize, value: bool) -> RegionMask {
        RegionMask::from_fn(w, h, |_, _| value)
    }

    #[test]
    fn iss_perfect_on_identical_planes() {
        let mut r = rng(61);
        let img = random_gray(&mut r, 12, 12);
        let v = iss(&img, &img, &full_mask(12, 12, true)).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn iss_affine_relation_scores_one() {
        let mut r = rng(62);
        let x = random_gray(&mut r, 12, 12);
        let y = PlanarImage::from_fn(12, 12, 1, Domain::Unbounded, |px, py, _| {
            1.7 * x.get(px, py, 0) + 0.1
        })
        .unwrap();
        let v = iss(&y, &x, &full_mask(12, 12, true)).unwrap();
        assert!((v - 1.0).abs() < 1e-6);
    }

    #[test]
    fn iss_anticorrelated_goes_negative() {
        let mut r = rng(63);
        let x = random_gray(&mut r, 12, 12);
        let y = PlanarImage::from_fn(12, 12, 1, Domain::UnitInterval, |px, py, _| {
            1.0 - x.get(px, py, 0)
        })
        .unwrap();
        assert!(iss(&y, &x, &full_mask(12, 12, true)).unwrap() < 0.0);
    }

    #[test]
    fn iss_matches_covariance_oracle() {
        let mut r = rng(64);
        for _ in 0..20 {
            let x = random_gray(&mut r, 9, 7);
            let y = random_gray(&mut r, 9, 7);
            let mask = RegionMask::from_fn(9, 7, |px, py| (px + py) % 3 != 0);
            let got = iss(&x, &y, &mask).unwrap();

            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for py in 0..7 {
                for px in 0..9 {
                    if mask.get(px, py) {
                        xs.push(x.get(px, py, 0));
                        ys.push(y.get(px, py, 0));
                    }
                }
            }
            let n = xs.len() as f64;
            let mx = xs.iter().sum::<f64>() / n;
            let my = ys.iter().sum::<f64>() / n;
            let sx = (xs.iter().map(|v| (v - mx).powi(2)).sum::<f64>() / n).sqrt();
            let sy = (ys.iter().map(|v| (v - my).powi(2)).sum::<f64>() / n).sqrt();
            let sxy = xs
                .iter()
                .zip(&ys)
                .map(|(a, b)| (a - mx) * (b - my))
                .sum::<f64>()
                / n;
            let want = (sxy + ISS_C3) / (sx * sy + ISS_C3);
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn iss_nearly_invariant_to_affine_rescaling() {
        // On well-correlated pairs the stabilizer perturbs the score by far
        // less than the stated 1e-4 budget.
        let mut r = rng(65);
        let x = random_gray(&mut r, 16, 16);
        let y = PlanarImage::from_fn(16, 16, 1, Domain::Unbounded, |px, py, _| {
            0.9 * x.get(px, py, 0) + 0.05 + 1e-3 * (r.gen::<f64>() - 0.5)
        })
        .unwrap();
        let mask = full_mask(16, 16, true);
        let base = iss(&x, &y, &mask).unwrap();
        for scale in [0.5, 1.3, 2.0] {
            let scaled = PlanarImage::from_fn(16, 16, 1, Domain::Unbounded, |px, py, _| {
                scale * x.get(px, py, 0) + 0.2
            })
            .unwrap();
            let v = iss(&scaled, &y, &mask).unwrap();
            assert!((v - base).abs() < 1e-4, "scale {scale}: {v} vs {base}");
            let v = iss(&x, &scale_plane(&y, scale, -0.1), &mask).unwrap();
            assert!((v - base).abs() < 1e-4, "ref scale {scale}: {v} vs {base}");
        }
    }

    fn scale_plane(img: &PlanarImage, a: f64, b: f64) -> PlanarImage {
        PlanarImage::from_fn(img.width(), img.height(), 1, Domain::Unbounded, |x, y, _| {
            a * img.get(x, y, 0) + b
        })
        .unwrap()
    }

    #[test]
    fn iss_rejects_degenerate_masks() {
        let img = PlanarImage::zeros(4, 4, 1, Domain::UnitInterval);
        let one = RegionMask::from_fn(4, 4, |x, y| x == 0 && y == 0);
        assert!(matches!(
            iss(&img, &img, &one),
            Err(Error::InvalidArgument(_))
        ));
        assert!(iss(&img, &img, &full_mask(4, 4, false)).is_err());
    }

    #[test]
    fn cd_zero_on_identical_images() {
        let mut r = rng(66);
        let img = random_rgb(&mut r, 8, 8);
        assert_eq!(cd(&img, &img, &full_mask(8, 8, false)).unwrap(), 0.0);
    }

    #[test]
    fn cd_single_pixel_difference() {
        let base = PlanarImage::constant(10, 10, 3, Domain::UnitInterval, 0.4).unwrap();
        let mut test = base.clone();
        test.set(3, 5, 0, 0.8);
        let got = cd(&test, &base, &full_mask(10, 10, false)).unwrap();
        let a = color::srgb_pixel_to_lab([0.8, 0.4, 0.4]);
        let b = color::srgb_pixel_to_lab([0.4, 0.4, 0.4]);
        let de = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
        // One differing pixel out of a hundred in the region.
        assert!((got - de / 100.0).abs() < 1e-12);
    }

    #[test]
    fn cd_is_symmetric_and_positive_definite() {
        let mut r = rng(67);
        let mask = RegionMask::from_fn(8, 8, |x, _| x < 2);
        for _ in 0..10 {
            let a = random_rgb(&mut r, 8, 8);
            let b = random_rgb(&mut r, 8, 8);
            let ab = cd(&a, &b, &mask).unwrap();
            let ba = cd(&b, &a, &mask).unwrap();
            assert!((ab - ba).abs() < 1e-12);
            assert!(ab > 0.0);
        }
    }

    #[test]
    fn cd_matches_summation_oracle() {
        let mut r = rng(68);
        let a = random_rgb(&mut r, 9, 6);
        let b = random_rgb(&mut r, 9, 6);
        let mask = RegionMask::from_fn(9, 6, |x, y| (x * y) % 4 == 0);
        let got = cd(&a, &b, &mask).unwrap();
        let mut total = 0.0;
        let mut count = 0;
        for y in 0..6 {
            for x in 0..9 {
                if !mask.get(x, y) {
                    let la =
                        color::srgb_pixel_to_lab([a.get(x, y, 0), a.get(x, y, 1), a.get(x, y, 2)]);
                    let lb =
                        color::srgb_pixel_to_lab([b.get(x, y, 0), b.get(x, y, 1), b.get(x, y, 2)]);
                    total += ((la[0] - lb[0]).powi(2)
                        + (la[1] - lb[1]).powi(2)
                        + (la[2] - lb[2]).powi(2))
                    .sqrt();
                    count += 1;
                }
            }
        }
        assert!((got - total / count as f64).abs() < 1e-12);
    }

    #[test]
    fn cd_rejects_empty_region() {
        let img = PlanarImage::zeros(4, 4, 3, Domain::UnitInterval);
        assert!(matches!(
            cd(&img, &img, &full_mask(4, 4, true)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn cf_achromatic_image_is_zero() {
        let gray = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |x, y, _| {
            (x + y) as f64 / 14.0
        })
        .unwrap();
        assert!(cf(&gray, &full_mask(8, 8, false)).unwrap() < 1e-6);
    }

    #[test]
    fn cf_constant_chroma_weighs_the_mean() {
        let img = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |_, _, c| {
            [0.7, 0.3, 0.2][c]
        })
        .unwrap();
        let lab = color::srgb_pixel_to_lab([0.7, 0.3, 0.2]);
        let chroma = (lab[1] * lab[1] + lab[2] * lab[2]).sqrt();
        let got = cf(&img, &full_mask(8, 8, false)).unwrap();
        assert!((got - CF_CHROMA_WEIGHT * chroma).abs() < 1e-9);
    }

    #[test]
    fn cf_matches_statistics_oracle() {
        let mut r = rng(69);
        let img = random_rgb(&mut r, 10, 10);
        let mask = RegionMask::from_fn(10, 10, |x, y| (x + 2 * y) % 5 == 0);
        let got = cf(&img, &mask).unwrap();

        let mut av = Vec::new();
        let mut bv = Vec::new();
        for y in 0..10 {
            for x in 0..10 {
                if !mask.get(x, y) {
                    let lab = color::srgb_pixel_to_lab([
                        img.get(x, y, 0),
                        img.get(x, y, 1),
                        img.get(x, y, 2),
                    ]);
                    av.push(lab[1]);
                    bv.push(lab[2]);
                }
            }
        }
        let n = av.len() as f64;
        let ma = av.iter().sum::<f64>() / n;
        let mb = bv.iter().sum::<f64>() / n;
        let va = av.iter().map(|v| (v - ma).powi(2)).sum::<f64>() / n;
        let vb = bv.iter().map(|v| (v - mb).powi(2)).sum::<f64>() / n;
        let uc = av
            .iter()
            .zip(&bv)
            .map(|(a, b)| (a * a + b * b).sqrt())
            .sum::<f64>()
            / n;
        assert!((got - ((va + vb).sqrt() + CF_CHROMA_WEIGHT * uc)).abs() < 1e-9);
    }

    #[test]
    fn cf_is_a_pure_region_statistic() {
        let mut r = rng(70);
        let img = random_rgb(&mut r, 6, 6);
        let mut perm: Vec<usize> = (0..36).collect();
        perm.shuffle(&mut r);
        let shuffled = PlanarImage::from_fn(6, 6, 3, Domain::UnitInterval, |x, y, c| {
            let src = perm[y * 6 + x];
            img.get(src % 6, src / 6, c)
        })
        .unwrap();
        let mask = full_mask(6, 6, false);
        let a = cf(&img, &mask).unwrap();
        let b = cf(&shuffled, &mask).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn evaluate_composes_the_three_measures() {
        let mut r = rng(71);
        let test = random_rgb(&mut r, 10, 8);
        let vis = random_rgb(&mut r, 10, 8);
        let nir = random_gray(&mut r, 10, 8);
        let mask = RegionMask::from_fn(10, 8, |x, _| x < 5);
        let report = evaluate(&test, &vis, &nir, &mask).unwrap();
        let lum = lab_luminance(&test).unwrap();
        assert_eq!(report.iss, iss(&lum, &nir, &mask).unwrap());
        assert_eq!(report.cd, cd(&test, &vis, &mask).unwrap());
        assert_eq!(report.cf, cf(&test, &mask).unwrap());
        assert_eq!(report.haze_pixel_count, 40);
        assert_eq!(report.nonhaze_pixel_count, 40);
        assert_eq!(
            report.haze_pixel_count + report.nonhaze_pixel_count,
            test.pixel_count()
        );
    }

    #[test]
    fn evaluate_ideal_restoration_scores_perfectly() {
        let mut r = rng(72);
        let test = random_rgb(&mut r, 8, 8);
        let nir = lab_luminance(&test).unwrap();
        let mask = RegionMask::from_fn(8, 8, |x, _| x >= 4);
        let report = evaluate(&test, &test, &nir, &mask).unwrap();
        assert!((report.iss - 1.0).abs() < 1e-9);
        assert_eq!(report.cd, 0.0);
    }

    #[test]
    fn evaluate_grayscale_test_has_no_colorfulness() {
        let gray = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |x, y, _| {
            0.2 + 0.08 * ((x + y) % 7) as f64
        })
        .unwrap();
        let nir = lab_luminance(&gray).unwrap();
        let mask = RegionMask::from_fn(8, 8, |_, y| y < 4);
        let report = evaluate(&gray, &gray, &nir, &mask).unwrap();
        assert!(report.cf < 1e-6);
    }
}
