//! PNG input and output.
//!
//! Visible, NIR and restored images are exchanged as 8- or 16-bit PNG
//! (outputs are always written at 16 bits); depth maps as 16-bit
//! grayscale scaled by a declared maximum depth, so the full integer
//! range is usable regardless of scene scale. Loading normalizes every
//! sample to `[0, 1]` by the bit-depth maximum and strips alpha.

use std::path::Path;

use image::{DynamicImage, ImageBuffer, ImageFormat, Luma, Rgb};
use nir_dehaze::{Domain, PlanarImage, RegionMask};

use crate::CliError;

/// Largest sample value of the 16-bit outputs we write.
const MAX_16: f64 = 65535.0;

fn read_error(path: &Path, err: impl std::fmt::Display) -> CliError {
    CliError::runtime(format!("cannot read {}: {err}", path.display()))
}

fn write_error(path: &Path, err: impl std::fmt::Display) -> CliError {
    CliError::runtime(format!("cannot write {}: {err}", path.display()))
}

/// Loads a PNG as planar floating-point data in `[0, 1]`.
///
/// Grayscale files produce one channel and color files three; an alpha
/// channel, if present, is dropped. 8-bit samples are divided by 255 and
/// 16-bit samples by 65535.
pub fn load_image(path: &Path) -> Result<PlanarImage, CliError> {
    let dynimg = image::open(path).map_err(|e| read_error(path, e))?;
    let (w, h) = (dynimg.width() as usize, dynimg.height() as usize);
    // `to_rgb16`/`to_luma16` widen 8-bit samples by the exact factor
    // 257 = 65535/255, so dividing by 65535 afterwards reproduces the
    // 8-bit normalization v/255 without a special case.
    let img = if dynimg.color().has_color() {
        let buf = dynimg.to_rgb16();
        PlanarImage::from_fn(w, h, 3, Domain::UnitInterval, |x, y, c| {
            f64::from(buf.get_pixel(x as u32, y as u32).0[c]) / MAX_16
        })
    } else {
        let buf = dynimg.to_luma16();
        PlanarImage::from_fn(w, h, 1, Domain::UnitInterval, |x, y, _| {
            f64::from(buf.get_pixel(x as u32, y as u32).0[0]) / MAX_16
        })
    };
    img.map_err(|e| read_error(path, e))
}

/// Loads a PNG and checks it has exactly `channels` color channels.
///
/// `role` names the image in the error message ("visible image", ...).
pub fn load_image_expecting(
    path: &Path,
    channels: usize,
    role: &str,
) -> Result<PlanarImage, CliError> {
    let img = load_image(path)?;
    if img.channels() != channels {
        let want = if channels == 1 { "grayscale" } else { "RGB" };
        return Err(CliError::runtime(format!(
            "{role} {} must be {want}, got {} channel(s)",
            path.display(),
            img.channels()
        )));
    }
    Ok(img)
}

fn quantize(v: f64) -> u16 {
    (v.clamp(0.0, 1.0) * MAX_16).round() as u16
}

/// Writes a planar image as a 16-bit PNG.
///
/// Three-channel images become RGB files, single-channel ones grayscale.
/// Samples are clamped to `[0, 1]` and rounded to the nearest
/// representable value, so the round-trip error is at most `1/(2·65535)`
/// per sample.
pub fn save_image(path: &Path, img: &PlanarImage) -> Result<(), CliError> {
    let (w, h) = (img.width() as u32, img.height() as u32);
    let out = match img.channels() {
        1 => {
            let buf = ImageBuffer::<Luma<u16>, Vec<u16>>::from_fn(w, h, |x, y| {
                Luma([quantize(img.get(x as usize, y as usize, 0))])
            });
            DynamicImage::ImageLuma16(buf)
        }
        3 => {
            let buf = ImageBuffer::<Rgb<u16>, Vec<u16>>::from_fn(w, h, |x, y| {
                let p = |c| quantize(img.get(x as usize, y as usize, c));
                Rgb([p(0), p(1), p(2)])
            });
            DynamicImage::ImageRgb16(buf)
        }
        n => {
            return Err(CliError::runtime(format!(
                "can only save 1- or 3-channel images, got {n}"
            )))
        }
    };
    out.save_with_format(path, ImageFormat::Png)
        .map_err(|e| write_error(path, e))
}

/// Loads a grayscale depth map, mapping full scale onto `[0, depth_max]`.
pub fn load_depth(path: &Path, depth_max: f64) -> Result<PlanarImage, CliError> {
    let raw = load_image_expecting(path, 1, "depth map")?;
    PlanarImage::from_fn(raw.width(), raw.height(), 1, Domain::Unbounded, |x, y, _| {
        raw.get(x, y, 0) * depth_max
    })
    .map_err(|e| read_error(path, e))
}

/// Loads a region mask: pixels darker than mid-gray mark the hazy region
/// (`true`), lighter ones the haze-free reference region.
pub fn load_mask(path: &Path) -> Result<RegionMask, CliError> {
    let img = load_image(path)?;
    Ok(RegionMask::from_fn(img.width(), img.height(), |x, y| {
        let sum: f64 = (0..img.channels()).map(|c| img.get(x, y, c)).sum();
        sum / (img.channels() as f64) < 0.5
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn tmp() -> tempfile::TempDir {
        tempfile::tempdir().unwrap()
    }

    fn write_png_rgb8(path: &Path, w: u32, h: u32, f: impl Fn(u32, u32) -> [u8; 3]) {
        let buf = ImageBuffer::<image::Rgb<u8>, Vec<u8>>::from_fn(w, h, |x, y| image::Rgb(f(x, y)));
        buf.save(path).unwrap();
    }

    #[test]
    fn eight_bit_values_normalize_by_255() {
        let dir = tmp();
        let path = dir.path().join("img.png");
        write_png_rgb8(&path, 2, 1, |x, _| if x == 0 { [255, 0, 128] } else { [1, 2, 3] });
        let img = load_image(&path).unwrap();
        assert_eq!(img.channels(), 3);
        assert_eq!(img.get(0, 0, 0), 1.0);
        assert_eq!(img.get(0, 0, 1), 0.0);
        assert!((img.get(0, 0, 2) - 128.0 / 255.0).abs() < 1e-12);
        assert!((img.get(1, 0, 0) - 1.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn sixteen_bit_zero_loads_as_zero() {
        let dir = tmp();
        let path = dir.path().join("img.png");
        let buf = ImageBuffer::<Luma<u16>, Vec<u16>>::from_fn(3, 2, |x, y| {
            Luma([if (x, y) == (0, 0) { 0 } else { 40000 }])
        });
        buf.save(&path).unwrap();
        let img = load_image(&path).unwrap();
        assert_eq!(img.channels(), 1);
        assert_eq!(img.get(0, 0, 0), 0.0);
        assert!((img.get(1, 0, 0) - 40000.0 / 65535.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_is_stripped() {
        let dir = tmp();
        let path = dir.path().join("img.png");
        let buf = ImageBuffer::<image::Rgba<u8>, Vec<u8>>::from_fn(2, 2, |_, _| {
            image::Rgba([10, 20, 30, 77])
        });
        buf.save(&path).unwrap();
        let img = load_image(&path).unwrap();
        assert_eq!(img.channels(), 3);
        assert!((img.get(1, 1, 2) - 30.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn save_then_load_stays_within_quantization_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let dir = tmp();
        let path = dir.path().join("img.png");
        let img = PlanarImage::from_fn(17, 13, 3, Domain::UnitInterval, |_, _, _| rng.gen())
            .unwrap();
        save_image(&path, &img).unwrap();
        let back = load_image(&path).unwrap();
        let bound = 1.0 / (2.0 * MAX_16);
        for c in 0..3 {
            for y in 0..13 {
                for x in 0..17 {
                    assert!((img.get(x, y, c) - back.get(x, y, c)).abs() <= bound);
                }
            }
        }
    }

    #[test]
    fn save_clamps_out_of_range_samples() {
        let dir = tmp();
        let path = dir.path().join("img.png");
        let img = PlanarImage::from_fn(2, 1, 1, Domain::Unbounded, |x, _, _| {
            if x == 0 {
                -0.25
            } else {
                1.75
            }
        })
        .unwrap();
        save_image(&path, &img).unwrap();
        let back = load_image(&path).unwrap();
        assert_eq!(back.get(0, 0, 0), 0.0);
        assert_eq!(back.get(1, 0, 0), 1.0);
    }

    #[test]
    fn depth_scaling_uses_declared_maximum() {
        let dir = tmp();
        let path = dir.path().join("depth.png");
        let buf = ImageBuffer::<Luma<u16>, Vec<u16>>::from_fn(2, 1, |x, _| {
            Luma([if x == 0 { 0 } else { 65535 }])
        });
        buf.save(&path).unwrap();
        let depth = load_depth(&path, 2.5).unwrap();
        assert_eq!(depth.get(0, 0, 0), 0.0);
        assert_eq!(depth.get(1, 0, 0), 2.5);
    }

    #[test]
    fn depth_rejects_color_files() {
        let dir = tmp();
        let path = dir.path().join("depth.png");
        write_png_rgb8(&path, 2, 2, |_, _| [1, 2, 3]);
        let err = load_depth(&path, 1.0).unwrap_err();
        assert!(err.to_string().contains("grayscale"), "{err}");
    }

    #[test]
    fn mask_threshold_is_mid_gray() {
        let dir = tmp();
        let path = dir.path().join("mask.png");
        // 0.49 and 0.51 in 8-bit steps: 124/255 ≈ 0.486 < 0.5 ≤ 130/255.
        let buf = ImageBuffer::<Luma<u8>, Vec<u8>>::from_fn(2, 1, |x, _| {
            Luma([if x == 0 { 124 } else { 130 }])
        });
        buf.save(&path).unwrap();
        let mask = load_mask(&path).unwrap();
        assert!(mask.get(0, 0), "dark pixel marks haze");
        assert!(!mask.get(1, 0), "bright pixel marks the reference region");
    }

    #[test]
    fn checkerboard_mask_alternates() {
        let dir = tmp();
        let path = dir.path().join("mask.png");
        let buf = ImageBuffer::<Luma<u8>, Vec<u8>>::from_fn(4, 4, |x, y| {
            Luma([if (x + y) % 2 == 0 { 0 } else { 255 }])
        });
        buf.save(&path).unwrap();
        let mask = load_mask(&path).unwrap();
        for y in 0..4 {
            for x in 0..4 {
                assert_eq!(mask.get(x, y), (x + y) % 2 == 0);
            }
        }
        assert_eq!(mask.count_true(), 8);
    }

    #[test]
    fn missing_file_reports_path() {
        let err = load_image(Path::new("/nonexistent/img.png")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("/nonexistent/img.png"));
    }
}
