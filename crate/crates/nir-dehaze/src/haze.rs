//! Haze formation model and its dark-channel initialization.
//!
//! A hazy sample is the transmission-weighted blend of the scene radiance
//! with a global airlight color, `x^v = t x^s + (1 - t) x^a`, where
//! `t = e^{-d}` for scene depth `d`. Subtracting from the airlight and taking
//! logs turns the blend into a sum: with `u = ln(a - x)` the hazy, clean, and
//! depth planes satisfy `u^v = u^s - u^d`, which is what the solver exploits.
//! The dark channel prior supplies the initial airlight and transmission.

use crate::error::{Error, Result};
use crate::image::{Domain, PlanarImage};

/// Parameters of the dark-channel initialization.
#[derive(Debug, Clone)]
pub struct DarkChannelConfig {
    /// Odd patch size of the local minimum filter.
    pub patch_size: usize,
    /// Fraction of brightest dark-channel pixels averaged into the airlight.
    pub airlight_fraction: f64,
    /// Lower clamp on transmission; bounds the amplification `1/t`.
    pub t_min: f64,
    /// Floor on `airlight - x` before taking logs.
    pub eps_log: f64,
}

impl Default for DarkChannelConfig {
    fn default() -> Self {
        Self {
            patch_size: 15,
            airlight_fraction: 0.001,
            t_min: 0.1,
            eps_log: 1.0 / 255.0,
        }
    }
}

impl DarkChannelConfig {
    pub fn validate(&self) -> Result<()> {
        if self.patch_size % 2 == 0 || self.patch_size == 0 {
            return Err(Error::InvalidConfig(format!(
                "patch_size must be odd, got {}",
                self.patch_size
            )));
        }
        if !(self.airlight_fraction > 0.0 && self.airlight_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "airlight_fraction must lie in (0, 1], got {}",
                self.airlight_fraction
            )));
        }
        if !(self.t_min > 0.0 && self.t_min < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "t_min must lie in (0, 1), got {}",
                self.t_min
            )));
        }
        if !(self.eps_log > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "eps_log must be positive, got {}",
                self.eps_log
            )));
        }
        Ok(())
    }
}

/// Airlight, transmission, and log-domain depth from the dark channel prior.
#[derive(Debug, Clone)]
pub struct HazeEstimate {
    /// Global atmospheric light color.
    pub airlight: [f64; 3],
    /// Per-pixel transmission in `[t_min, 1]`.
    pub transmission: PlanarImage,
    /// Per-pixel log-domain depth `-ln t >= 0`.
    pub depth_log: PlanarImage,
}

/// Sliding minimum over a clamped window, one axis at a time. Clamping the
/// window to the image is the same as replicate padding: repeated edge
/// samples never change a minimum.
fn min_filter_axis(src: &[f64], dst: &mut [f64], n: usize, stride: usize, count: usize, half: usize) {
    for line in 0..count {
        let base = if stride == 1 { line * n } else { line };
        for i in 0..n {
            let lo = i.saturating_sub(half);
            let hi = (i + half).min(n - 1);
            let mut m = f64::INFINITY;
            for k in lo..=hi {
                m = m.min(src[base + k * stride]);
            }
            dst[base + i * stride] = m;
        }
    }
}

fn patch_min(plane: &[f64], width: usize, height: usize, patch_size: usize) -> Vec<f64> {
    let half = patch_size / 2;
    let mut tmp = vec![0.0; plane.len()];
    let mut out = vec![0.0; plane.len()];
    min_filter_axis(plane, &mut tmp, width, 1, height, half);
    min_filter_axis(&tmp, &mut out, height, width, width, half);
    out
}

/// Per-pixel minimum over the three channels and the surrounding patch.
pub fn dark_channel(img: &PlanarImage, patch_size: usize) -> Result<PlanarImage> {
    if img.channels() != 3 {
        return Err(Error::InvalidArgument(format!(
            "dark channel expects a 3-channel image, got {}",
            img.channels()
        )));
    }
    if patch_size % 2 == 0 || patch_size == 0 {
        return Err(Error::InvalidArgument(format!(
            "patch_size must be odd, got {patch_size}"
        )));
    }
    let (w, h) = (img.width(), img.height());
    let n = w * h;
    let mut channel_min = vec![f64::INFINITY; n];
    for c in 0..3 {
        let plane = img.plane(c);
        for i in 0..n {
            channel_min[i] = channel_min[i].min(plane[i]);
        }
    }
    PlanarImage::from_plane(w, h, Domain::UnitInterval, patch_min(&channel_min, w, h, patch_size))
}

/// Averages the RGB values of the brightest dark-channel pixels. Ties are
/// broken by row-major index, lowest first, so the estimate is reproducible.
pub fn estimate_airlight(
    img: &PlanarImage,
    dark: &PlanarImage,
    fraction: f64,
) -> Result<[f64; 3]> {
    if img.channels() != 3 || dark.channels() != 1 {
        return Err(Error::InvalidArgument(
            "airlight expects a 3-channel image and its 1-channel dark channel".into(),
        ));
    }
    if !img.same_size(dark) {
        return Err(Error::DimensionMismatch(format!(
            "image {}x{} vs dark channel {}x{}",
            img.width(),
            img.height(),
            dark.width(),
            dark.height()
        )));
    }
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "fraction must lie in (0, 1], got {fraction}"
        )));
    }
    let n = img.pixel_count();
    let take = ((fraction * n as f64).ceil() as usize).clamp(1, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        dark.data()[b]
            .partial_cmp(&dark.data()[a])
            .expect("dark channel values are finite")
            .then(a.cmp(&b))
    });
    let mut airlight = [0.0; 3];
    for &i in &order[..take] {
        for c in 0..3 {
            airlight[c] += img.plane(c)[i];
        }
    }
    for v in &mut airlight {
        *v /= take as f64;
    }
    Ok(airlight)
}

/// Transmission map `t = 1 - min_{c, patch}(x / a_c)`, clamped to
/// `[t_min, 1]`.
pub fn estimate_transmission(
    img: &PlanarImage,
    airlight: &[f64; 3],
    cfg: &DarkChannelConfig,
) -> Result<PlanarImage> {
    cfg.validate()?;
    if img.channels() != 3 {
        return Err(Error::InvalidArgument(
            "transmission expects a 3-channel image".into(),
        ));
    }
    if airlight.iter().any(|&a| a <= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "airlight channels must be positive, got {airlight:?}"
        )));
    }
    let (w, h) = (img.width(), img.height());
    let n = w * h;
    let mut ratio_min = vec![f64::INFINITY; n];
    for c in 0..3 {
        let plane = img.plane(c);
        for i in 0..n {
            ratio_min[i] = ratio_min[i].min(plane[i] / airlight[c]);
        }
    }
    let patch = patch_min(&ratio_min, w, h, cfg.patch_size);
    let t: Vec<f64> = patch.iter().map(|&m| (1.0 - m).clamp(cfg.t_min, 1.0)).collect();
    PlanarImage::from_plane(w, h, Domain::Unbounded, t)
}

/// Full dark-channel initialization: airlight, transmission, and the
/// log-domain depth `-ln t`.
pub fn estimate(img: &PlanarImage, cfg: &DarkChannelConfig) -> Result<HazeEstimate> {
    cfg.validate()?;
    let dark = dark_channel(img, cfg.patch_size)?;
    let airlight = estimate_airlight(img, &dark, cfg.airlight_fraction)?;
    let transmission = estimate_transmission(img, &airlight, cfg)?;
    let depth: Vec<f64> = transmission.data().iter().map(|&t| -t.ln()).collect();
    let depth_log =
        PlanarImage::from_plane(img.width(), img.height(), Domain::Unbounded, depth)?;
    Ok(HazeEstimate {
        airlight,
        transmission,
        depth_log,
    })
}

/// Lifts one plane into the log domain against a single airlight channel.
pub(crate) fn log_lift_plane(plane: &[f64], airlight_c: f64, eps_log: f64) -> Vec<f64> {
    plane.iter().map(|&x| (airlight_c - x).max(eps_log).ln()).collect()
}

/// Converts to the log domain: `u = ln(max(a_c - x, eps_log))` per channel.
/// The sign convention makes depth additive, `u^s = u^v + u^d`, and the
/// recovery `x = a - e^u` exact.
pub fn to_log_domain(x: &PlanarImage, airlight: &[f64; 3], eps_log: f64) -> Result<PlanarImage> {
    if !(eps_log > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "eps_log must be positive, got {eps_log}"
        )));
    }
    let mut planes = Vec::with_capacity(x.channels());
    for c in 0..x.channels() {
        planes.push(log_lift_plane(x.plane(c), airlight[c], eps_log));
    }
    let data: Vec<f64> = planes.concat();
    PlanarImage::new(x.width(), x.height(), x.channels(), Domain::LogDomain, data)
}

/// Inverse of [`to_log_domain`]: `x = a_c - e^u`, clamped to `[0, 1]`.
pub fn from_log_domain(u: &PlanarImage, airlight: &[f64; 3]) -> Result<PlanarImage> {
    let mut data = Vec::with_capacity(u.data().len());
    for c in 0..u.channels() {
        for &v in u.plane(c) {
            data.push((airlight[c] - v.exp()).clamp(0.0, 1.0));
        }
    }
    PlanarImage::new(u.width(), u.height(), u.channels(), Domain::UnitInterval, data)
}

/// Forward haze model: blends a clean image toward the airlight with
/// `t = e^{-eta * depth}` per pixel.
pub fn synthesize_haze(
    clean: &PlanarImage,
    depth: &PlanarImage,
    airlight: &[f64; 3],
    eta: f64,
) -> Result<PlanarImage> {
    if clean.channels() != 3 || depth.channels() != 1 {
        return Err(Error::InvalidArgument(format!(
            "expected 3-channel clean and 1-channel depth, got {} and {}",
            clean.channels(),
            depth.channels()
        )));
    }
    if !clean.same_size(depth) {
        return Err(Error::DimensionMismatch(format!(
            "clean {}x{} vs depth {}x{}",
            clean.width(),
            clean.height(),
            depth.width(),
            depth.height()
        )));
    }
    if !(eta > 0.0) {
        return Err(Error::InvalidArgument(format!("eta must be positive, got {eta}")));
    }
    if depth.data().iter().any(|&d| d < 0.0) {
        return Err(Error::InvalidArgument("depth must be non-negative".into()));
    }
    let n = clean.pixel_count();
    let t: Vec<f64> = depth.data().iter().map(|&d| (-eta * d).exp()).collect();
    let mut data = Vec::with_capacity(3 * n);
    for c in 0..3 {
        let plane = clean.plane(c);
        for i in 0..n {
            data.push((t[i] * plane[i] + (1.0 - t[i]) * airlight[c]).clamp(0.0, 1.0));
        }
    }
    PlanarImage::new(clean.width(), clean.height(), 3, Domain::UnitInterval, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::extract_patch;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_rgb(r: &mut ChaCha8Rng, w: usize, h: usize) -> PlanarImage {
        PlanarImage::from_fn(w, h, 3, Domain::UnitInterval, |_, _, _| r.gen()).unwrap()
    }

    /// Nested-loop reference: min over channels and patch via extract_patch.
    fn dark_oracle(img: &PlanarImage, patch: usize) -> Vec<f64> {
        let mut out = Vec::new();
        for y in 0..img.height() {
            for x in 0..img.width() {
                let mut m = f64::INFINITY;
                for c in 0..3 {
                    for v in extract_patch(img, c, (x, y), patch).unwrap() {
                        m = m.min(v);
                    }
                }
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn dark_channel_constant_image() {
        let img = PlanarImage::constant(10, 8, 3, Domain::UnitInterval, 0.4).unwrap();
        let dark = dark_channel(&img, 15).unwrap();
        assert!(dark.data().iter().all(|&v| v == 0.4));
    }

    #[test]
    fn dark_channel_absorbs_zero_sample() {
        let mut img = PlanarImage::constant(9, 9, 3, Domain::UnitInterval, 0.7).unwrap();
        img.set(4, 4, 1, 0.0);
        let dark = dark_channel(&img, 3).unwrap();
        assert_eq!(dark.get(4, 4, 0), 0.0);
        assert_eq!(dark.get(3, 4, 0), 0.0);
        assert_eq!(dark.get(5, 5, 0), 0.0);
        // Outside the 3x3 reach of the zero.
        assert_eq!(dark.get(0, 0, 0), 0.7);
        assert_eq!(dark.get(6, 4, 0), 0.7);
    }

    #[test]
    fn dark_channel_matches_brute_force() {
        let mut r = rng(21);
        for patch in [3, 5, 15] {
            let img = random_rgb(&mut r, 8, 8);
            let dark = dark_channel(&img, patch).unwrap();
            assert_eq!(dark.data(), &dark_oracle(&img, patch)[..]);
        }
    }

    #[test]
    fn dark_channel_is_monotone_in_samples() {
        let mut r = rng(22);
        let img = random_rgb(&mut r, 8, 8);
        let before = dark_channel(&img, 5).unwrap();
        let mut raised = img.clone();
        for _ in 0..10 {
            let (x, y, c) = (r.gen_range(0..8), r.gen_range(0..8), r.gen_range(0..3));
            let v = raised.get(x, y, c);
            raised.set(x, y, c, (v + r.gen::<f64>() * (1.0 - v)).min(1.0));
        }
        let after = dark_channel(&raised, 5).unwrap();
        for (a, b) in before.data().iter().zip(after.data()) {
            assert!(b >= a);
        }
    }

    #[test]
    fn airlight_constant_image() {
        let img = PlanarImage::from_fn(6, 6, 3, Domain::UnitInterval, |_, _, c| {
            [0.2, 0.5, 0.8][c]
        })
        .unwrap();
        let dark = dark_channel(&img, 3).unwrap();
        let a = estimate_airlight(&img, &dark, 0.001).unwrap();
        assert_eq!(a, [0.2, 0.5, 0.8]);
    }

    #[test]
    fn airlight_single_brightest_pixel() {
        let mut img = PlanarImage::constant(10, 10, 3, Domain::UnitInterval, 0.3).unwrap();
        img.set(7, 2, 0, 0.9);
        img.set(7, 2, 1, 0.8);
        img.set(7, 2, 2, 0.7);
        let dark = PlanarImage::from_fn(10, 10, 1, Domain::UnitInterval, |x, y, _| {
            if (x, y) == (7, 2) {
                0.7
            } else {
                0.3
            }
        })
        .unwrap();
        let a = estimate_airlight(&img, &dark, 0.001).unwrap();
        assert_eq!(a, [0.9, 0.8, 0.7]);
    }

    #[test]
    fn airlight_ties_resolve_row_major() {
        // Four tied maxima; fraction selects two. Row-major order must pick
        // (1,0) then (3,0), ignoring the later ties.
        let mut img = PlanarImage::constant(4, 4, 3, Domain::UnitInterval, 0.1).unwrap();
        for (x, y, v) in [(1, 0, 0.6), (3, 0, 0.4), (0, 2, 0.2), (2, 3, 0.0)] {
            for c in 0..3 {
                img.set(x, y, c, v);
            }
        }
        let dark = PlanarImage::from_fn(4, 4, 1, Domain::UnitInterval, |x, y, _| {
            if [(1, 0), (3, 0), (0, 2), (2, 3)].contains(&(x, y)) {
                0.9
            } else {
                0.1
            }
        })
        .unwrap();
        let a = estimate_airlight(&img, &dark, 2.0 / 16.0).unwrap();
        for c in 0..3 {
            assert!((a[c] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn airlight_matches_sort_oracle() {
        let mut r = rng(23);
        for _ in 0..20 {
            let img = random_rgb(&mut r, 16, 16);
            let dark = dark_channel(&img, 3).unwrap();
            let frac = 0.05;
            let a = estimate_airlight(&img, &dark, frac).unwrap();

            let n = 256;
            let take = (frac * n as f64).ceil() as usize;
            let mut idx: Vec<usize> = (0..n).collect();
            idx.sort_by(|&i, &j| {
                dark.data()[j]
                    .partial_cmp(&dark.data()[i])
                    .unwrap()
                    .then(i.cmp(&j))
            });
            for c in 0..3 {
                let mean: f64 =
                    idx[..take].iter().map(|&i| img.plane(c)[i]).sum::<f64>() / take as f64;
                assert!((a[c] - mean).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn transmission_saturated_image_hits_floor() {
        let a = [0.8, 0.7, 0.9];
        let img = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |_, _, c| a[c]).unwrap();
        let t = estimate_transmission(&img, &a, &DarkChannelConfig::default()).unwrap();
        assert!(t.data().iter().all(|&v| v == 0.1));
    }

    #[test]
    fn transmission_black_image_is_one() {
        let img = PlanarImage::zeros(8, 8, 3, Domain::UnitInterval);
        let t = estimate_transmission(&img, &[0.8, 0.8, 0.8], &DarkChannelConfig::default())
            .unwrap();
        assert!(t.data().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn transmission_matches_brute_force() {
        let mut r = rng(24);
        let cfg = DarkChannelConfig {
            patch_size: 5,
            ..DarkChannelConfig::default()
        };
        let a = [0.9, 0.85, 0.95];
        for _ in 0..10 {
            let img = random_rgb(&mut r, 8, 8);
            let t = estimate_transmission(&img, &a, &cfg).unwrap();
            for y in 0..8 {
                for x in 0..8 {
                    let mut m = f64::INFINITY;
                    for c in 0..3 {
                        for v in extract_patch(&img, c, (x, y), 5).unwrap() {
                            m = m.min(v / a[c]);
                        }
                    }
                    let expect = (1.0 - m).clamp(cfg.t_min, 1.0);
                    assert!((t.get(x, y, 0) - expect).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn transmission_rejects_zero_airlight() {
        let img = PlanarImage::zeros(4, 4, 3, Domain::UnitInterval);
        assert!(matches!(
            estimate_transmission(&img, &[0.0, 0.5, 0.5], &DarkChannelConfig::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn estimate_ties_depth_to_transmission() {
        let mut r = rng(25);
        let img = random_rgb(&mut r, 16, 16);
        let est = estimate(&img, &DarkChannelConfig::default()).unwrap();
        for (t, d) in est.transmission.data().iter().zip(est.depth_log.data()) {
            assert!((*t >= 0.1) && (*t <= 1.0));
            assert!((d - (-t.ln())).abs() < 1e-12);
            assert!(*d >= 0.0);
        }
    }

    #[test]
    fn log_domain_boundary_values() {
        let eps = 1.0 / 255.0;
        let a = [1.0, 0.8, 0.6];
        let img = PlanarImage::from_fn(2, 1, 3, Domain::UnitInterval, |x, _, c| {
            if x == 0 {
                0.0
            } else {
                a[c] - eps
            }
        })
        .unwrap();
        let u = to_log_domain(&img, &a, eps).unwrap();
        // x = 0 with unit airlight gives ln 1 = 0.
        assert_eq!(u.get(0, 0, 0), 0.0);
        for c in 0..3 {
            assert!((u.get(1, 0, c) - eps.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn log_domain_round_trip() {
        let mut r = rng(26);
        let a = [0.9, 0.8, 0.95];
        let eps = 1.0 / 255.0;
        // Keep samples at least eps below the airlight so no clamp engages.
        let img = PlanarImage::from_fn(8, 8, 3, Domain::UnitInterval, |_, _, c| {
            r.gen::<f64>() * (a[c] - eps)
        })
        .unwrap();
        let u = to_log_domain(&img, &a, eps).unwrap();
        let back = from_log_domain(&u, &a).unwrap();
        for (x, y) in img.data().iter().zip(back.data()) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn from_log_domain_limits() {
        let a = [0.7, 0.7, 0.7];
        let u = PlanarImage::from_fn(2, 1, 3, Domain::LogDomain, |x, _, _| {
            if x == 0 {
                0.7f64.ln()
            } else {
                -40.0
            }
        })
        .unwrap();
        let img = from_log_domain(&u, &a).unwrap();
        for c in 0..3 {
            assert!(img.get(0, 0, c).abs() < 1e-15);
            assert!((img.get(1, 0, c) - 0.7).abs() < 1e-12);
        }
    }

    #[test]
    fn synthesize_depth_limits() {
        let mut r = rng(27);
        let clean = random_rgb(&mut r, 6, 6);
        let a = [0.9, 0.85, 0.8];
        let none = PlanarImage::zeros(6, 6, 1, Domain::Unbounded);
        let out = synthesize_haze(&clean, &none, &a, 1.0).unwrap();
        assert_eq!(out.data(), clean.data());

        let far = PlanarImage::constant(6, 6, 1, Domain::Unbounded, 100.0).unwrap();
        let out = synthesize_haze(&clean, &far, &a, 1.0).unwrap();
        for c in 0..3 {
            assert!(out.plane(c).iter().all(|&v| (v - a[c]).abs() < 1e-12));
        }
    }

    #[test]
    fn synthesize_matches_blend_oracle() {
        let mut r = rng(28);
        let clean = random_rgb(&mut r, 8, 8);
        let depth = PlanarImage::from_fn(8, 8, 1, Domain::Unbounded, |_, _, _| {
            r.gen::<f64>() * 2.0
        })
        .unwrap();
        let a = [0.9, 0.8, 0.7];
        let eta = 1.3;
        let out = synthesize_haze(&clean, &depth, &a, eta).unwrap();
        for c in 0..3 {
            for i in 0..64 {
                let t = (-eta * depth.data()[i]).exp();
                let expect = t * clean.plane(c)[i] + (1.0 - t) * a[c];
                assert!((out.plane(c)[i] - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn synthesize_rejects_negative_depth() {
        let clean = PlanarImage::zeros(4, 4, 3, Domain::UnitInterval);
        let mut depth = PlanarImage::zeros(4, 4, 1, Domain::Unbounded);
        depth.set(1, 1, 0, -0.5);
        assert!(synthesize_haze(&clean, &depth, &[0.9; 3], 1.0).is_err());
    }

    #[test]
    fn log_domain_consistency_chain() {
        // Hazing in the image domain is depth subtraction in the log domain:
        // u(hazy) = u(clean) - d, exactly, away from both clamps.
        let mut r = rng(29);
        let a = [0.9, 0.92, 0.88];
        let eps = 1.0 / 255.0;
        let d_max = 2.0f64;
        let margin: Vec<f64> = a.iter().map(|ac| ac - eps * d_max.exp()).collect();
        let clean = PlanarImage::from_fn(16, 16, 3, Domain::UnitInterval, |_, _, c| {
            r.gen::<f64>() * margin[c]
        })
        .unwrap();
        let depth = PlanarImage::from_fn(16, 16, 1, Domain::Unbounded, |_, _, _| {
            r.gen::<f64>() * d_max
        })
        .unwrap();
        let hazy = synthesize_haze(&clean, &depth, &a, 1.0).unwrap();
        let u_hazy = to_log_domain(&hazy, &a, eps).unwrap();
        let u_clean = to_log_domain(&clean, &a, eps).unwrap();
        for c in 0..3 {
            for i in 0..256 {
                let expect = u_clean.plane(c)[i] - depth.data()[i];
                assert!(
                    (u_hazy.plane(c)[i] - expect).abs() < 1e-9,
                    "channel {c}, pixel {i}"
                );
            }
        }
    }

    #[test]
    fn transmission_recovers_synthetic_depth() {
        // Piecewise-constant depth, clean patches that satisfy the dark
        // prior by construction: interior estimates land on the true t.
        let mut r = rng(30);
        let a = [0.9, 0.9, 0.9];
        let mut clean = PlanarImage::from_fn(64, 64, 3, Domain::UnitInterval, |_, _, _| {
            0.2 + 0.4 * r.gen::<f64>()
        })
        .unwrap();
        for y in (0..64).step_by(8) {
            for x in (0..64).step_by(8) {
                clean.set(x, y, 0, 0.0);
            }
        }
        let depth = PlanarImage::from_fn(64, 64, 1, Domain::Unbounded, |x, _, _| {
            if x < 32 {
                0.0
            } else {
                1.0
            }
        })
        .unwrap();
        let hazy = synthesize_haze(&clean, &depth, &a, 1.0).unwrap();
        let t = estimate_transmission(&hazy, &a, &DarkChannelConfig::default()).unwrap();
        for y in 7..57 {
            for x in (7..25).chain(39..57) {
                let expect = (-depth.get(x, y, 0)).exp();
                assert!(
                    (t.get(x, y, 0) - expect).abs() <= 0.1,
                    "({x},{y}): {} vs {}",
                    t.get(x, y, 0),
                    expect
                );
            }
        }
    }
}
