//! Planar floating-point image buffers and the discrete filters shared by the
//! rest of the crate.
//!
//! Images are stored channel-major ("planar"): all samples of channel 0, then
//! all samples of channel 1, and so on, each plane in row-major order. The
//! solver iterates over one channel at a time, so a plane is always a
//! contiguous slice.

use crate::error::{Error, Result};

/// Value domain carried by a [`PlanarImage`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Every sample lies in `[0, 1]`.
    UnitInterval,
    /// Samples are natural logarithms of airlight-relative radiance.
    LogDomain,
    /// No range constraint (gradients, opponent planes, CIELAB planes).
    Unbounded,
}

/// Gradient filter direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Forward difference along x (next column minus current).
    Horizontal,
    /// Forward difference along y (next row minus current).
    Vertical,
}

/// H x W x C buffer of `f64` samples in planar layout.
///
/// The universal carrier for visible, near-infrared, colored-NIR, dehazed,
/// transmission and depth images.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarImage {
    width: usize,
    height: usize,
    channels: usize,
    domain: Domain,
    data: Vec<f64>,
}

impl PlanarImage {
    /// Wraps an existing buffer. `data.len()` must equal
    /// `width * height * channels`, and `UnitInterval` data must lie in `[0, 1]`.
    pub fn new(
        width: usize,
        height: usize,
        channels: usize,
        domain: Domain,
        data: Vec<f64>,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidArgument(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidArgument(format!(
                "channel count must be 1 or 3, got {channels}"
            )));
        }
        if data.len() != width * height * channels {
            return Err(Error::DimensionMismatch(format!(
                "buffer has {} samples, expected {}x{}x{} = {}",
                data.len(),
                width,
                height,
                channels,
                width * height * channels
            )));
        }
        if domain == Domain::UnitInterval && !data.iter().all(|v| (0.0..=1.0).contains(v)) {
            return Err(Error::InvalidArgument(
                "unit-interval image contains samples outside [0, 1]".into(),
            ));
        }
        Ok(Self {
            width,
            height,
            channels,
            domain,
            data,
        })
    }

    /// All-zero image.
    pub fn zeros(width: usize, height: usize, channels: usize, domain: Domain) -> Self {
        Self::new(width, height, channels, domain, vec![0.0; width * height * channels])
            .expect("zero image is always valid")
    }

    /// Constant-valued image.
    pub fn constant(
        width: usize,
        height: usize,
        channels: usize,
        domain: Domain,
        value: f64,
    ) -> Result<Self> {
        Self::new(width, height, channels, domain, vec![value; width * height * channels])
    }

    /// Builds an image by evaluating `f(x, y, channel)` at every sample.
    pub fn from_fn<F>(
        width: usize,
        height: usize,
        channels: usize,
        domain: Domain,
        mut f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> f64,
    {
        let mut data = Vec::with_capacity(width * height * channels);
        for c in 0..channels {
            for y in 0..height {
                for x in 0..width {
                    data.push(f(x, y, c));
                }
            }
        }
        Self::new(width, height, channels, domain, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Number of pixels per plane.
    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Contiguous row-major slice of one channel plane.
    pub fn plane(&self, channel: usize) -> &[f64] {
        assert!(channel < self.channels, "channel {channel} out of range");
        let n = self.pixel_count();
        &self.data[channel * n..(channel + 1) * n]
    }

    pub fn plane_mut(&mut self, channel: usize) -> &mut [f64] {
        assert!(channel < self.channels, "channel {channel} out of range");
        let n = self.pixel_count();
        &mut self.data[channel * n..(channel + 1) * n]
    }

    /// Sample at `(x, y)` in `channel`.
    pub fn get(&self, x: usize, y: usize, channel: usize) -> f64 {
        self.plane(channel)[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, channel: usize, value: f64) {
        let w = self.width;
        self.plane_mut(channel)[y * w + x] = value;
    }

    /// Extracts one channel as a standalone single-channel image.
    pub fn extract_channel(&self, channel: usize) -> PlanarImage {
        PlanarImage::new(
            self.width,
            self.height,
            1,
            self.domain,
            self.plane(channel).to_vec(),
        )
        .expect("plane of a valid image is valid")
    }

    /// Builds a single-channel image from a raw plane.
    pub fn from_plane(width: usize, height: usize, domain: Domain, plane: Vec<f64>) -> Result<Self> {
        Self::new(width, height, 1, domain, plane)
    }

    /// Stacks single-channel images into one multi-channel image.
    pub fn from_planes(planes: &[PlanarImage], domain: Domain) -> Result<Self> {
        let first = planes
            .first()
            .ok_or_else(|| Error::InvalidArgument("no planes given".into()))?;
        let mut data = Vec::with_capacity(first.pixel_count() * planes.len());
        for p in planes {
            if p.channels != 1 {
                return Err(Error::InvalidArgument(
                    "from_planes expects single-channel inputs".into(),
                ));
            }
            if (p.width, p.height) != (first.width, first.height) {
                return Err(Error::DimensionMismatch(format!(
                    "plane is {}x{}, expected {}x{}",
                    p.width, p.height, first.width, first.height
                )));
            }
            data.extend_from_slice(&p.data);
        }
        Self::new(first.width, first.height, planes.len(), domain, data)
    }

    /// True when both images have the same width and height.
    pub fn same_size(&self, other: &PlanarImage) -> bool {
        self.width == other.width && self.height == other.height
    }
}

/// Binary haze / non-haze partition of an image (`true` = haze region).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl RegionMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != width * height {
            return Err(Error::DimensionMismatch(format!(
                "mask has {} bits, expected {}x{} = {}",
                bits.len(),
                width,
                height,
                width * height
            )));
        }
        Ok(Self { width, height, bits })
    }

    /// Builds a mask by evaluating `f(x, y)` at every pixel.
    pub fn from_fn<F>(width: usize, height: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut bits = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                bits.push(f(x, y));
            }
        }
        Self { width, height, bits }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    /// Number of haze pixels.
    pub fn count_true(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of non-haze pixels.
    pub fn count_false(&self) -> usize {
        self.bits.len() - self.count_true()
    }

    pub fn same_size_as(&self, img: &PlanarImage) -> bool {
        self.width == img.width() && self.height == img.height()
    }
}

/// Extracts the `size` x `size` neighborhood around `(cx, cy)` from one
/// channel, in row-major order. Out-of-bounds positions are filled by
/// replicate padding, so the patch never imports wrap-around content.
pub fn extract_patch(
    img: &PlanarImage,
    channel: usize,
    center: (usize, usize),
    size: usize,
) -> Result<Vec<f64>> {
    if size % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "patch size must be odd, got {size}"
        )));
    }
    if channel >= img.channels() {
        return Err(Error::InvalidArgument(format!(
            "channel {channel} out of range for {}-channel image",
            img.channels()
        )));
    }
    let (cx, cy) = center;
    if cx >= img.width() || cy >= img.height() {
        return Err(Error::InvalidArgument(format!(
            "center ({cx}, {cy}) outside {}x{} image",
            img.width(),
            img.height()
        )));
    }
    let half = (size / 2) as isize;
    let plane = img.plane(channel);
    let (w, h) = (img.width() as isize, img.height() as isize);
    let mut patch = Vec::with_capacity(size * size);
    for dy in -half..=half {
        let y = (cy as isize + dy).clamp(0, h - 1);
        for dx in -half..=half {
            let x = (cx as isize + dx).clamp(0, w - 1);
            patch.push(plane[(y * w + x) as usize]);
        }
    }
    Ok(patch)
}

/// Forward-difference gradient (next minus current) of a single-channel image
/// with periodic boundary, matching the frequency-domain quadratic solver.
pub fn gradient(img: &PlanarImage, direction: Direction) -> Result<PlanarImage> {
    if img.channels() != 1 {
        return Err(Error::InvalidArgument(format!(
            "gradient expects a single-channel image, got {} channels",
            img.channels()
        )));
    }
    let (w, h) = (img.width(), img.height());
    let src = img.plane(0);
    let mut out = vec![0.0; w * h];
    match direction {
        Direction::Horizontal => {
            for y in 0..h {
                let row = y * w;
                for x in 0..w {
                    let next = row + (x + 1) % w;
                    out[row + x] = src[next] - src[row + x];
                }
            }
        }
        Direction::Vertical => {
            for y in 0..h {
                let next_row = ((y + 1) % h) * w;
                let row = y * w;
                for x in 0..w {
                    out[row + x] = src[next_row + x] - src[row + x];
                }
            }
        }
    }
    PlanarImage::new(w, h, 1, Domain::Unbounded, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_image(w: usize, h: usize, c: usize, seed: u64) -> PlanarImage {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        PlanarImage::from_fn(w, h, c, Domain::UnitInterval, |_, _, _| rng.gen()).unwrap()
    }

    #[test]
    fn new_rejects_bad_lengths_and_ranges() {
        assert!(PlanarImage::new(2, 2, 1, Domain::UnitInterval, vec![0.0; 3]).is_err());
        assert!(PlanarImage::new(2, 2, 1, Domain::UnitInterval, vec![1.5; 4]).is_err());
        assert!(PlanarImage::new(0, 2, 1, Domain::UnitInterval, vec![]).is_err());
        assert!(PlanarImage::new(2, 2, 2, Domain::UnitInterval, vec![0.0; 8]).is_err());
        // Out-of-range samples are fine outside the unit-interval domain.
        assert!(PlanarImage::new(2, 2, 1, Domain::Unbounded, vec![1.5; 4]).is_ok());
    }

    #[test]
    fn extract_patch_constant_image() {
        let img = PlanarImage::constant(6, 5, 1, Domain::UnitInterval, 0.7).unwrap();
        let patch = extract_patch(&img, 0, (3, 2), 3).unwrap();
        assert_eq!(patch, vec![0.7; 9]);
    }

    #[test]
    fn extract_patch_replicates_at_corner() {
        // Horizontal ramp: value == x.
        let img =
            PlanarImage::from_fn(4, 4, 1, Domain::Unbounded, |x, _, _| x as f64).unwrap();
        let patch = extract_patch(&img, 0, (0, 0), 3).unwrap();
        // Every row of the patch replicates the x=0 column on the left.
        assert_eq!(patch, vec![0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn extract_patch_matches_bruteforce_at_all_centers() {
        let img = random_image(8, 8, 3, 11);
        for c in 0..3 {
            for cy in 0..8usize {
                for cx in 0..8usize {
                    for size in [3usize, 5] {
                        let patch = extract_patch(&img, c, (cx, cy), size).unwrap();
                        // Index-arithmetic oracle: clamp each coordinate.
                        let half = (size / 2) as isize;
                        let mut expect = Vec::new();
                        for dy in -half..=half {
                            for dx in -half..=half {
                                let x = (cx as isize + dx).clamp(0, 7) as usize;
                                let y = (cy as isize + dy).clamp(0, 7) as usize;
                                expect.push(img.get(x, y, c));
                            }
                        }
                        assert_eq!(patch, expect, "c={c} center=({cx},{cy}) size={size}");
                    }
                }
            }
        }
    }

    #[test]
    fn extract_patch_rejects_even_size() {
        let img = random_image(4, 4, 1, 1);
        assert!(matches!(
            extract_patch(&img, 0, (1, 1), 4),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn gradient_of_constant_is_zero() {
        let img = PlanarImage::constant(5, 4, 1, Domain::UnitInterval, 0.3).unwrap();
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let g = gradient(&img, dir).unwrap();
            assert!(g.data().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn gradient_of_ramp_is_step_with_wrap() {
        let step = 0.125;
        let img =
            PlanarImage::from_fn(8, 3, 1, Domain::UnitInterval, |x, _, _| x as f64 * step)
                .unwrap();
        let g = gradient(&img, Direction::Horizontal).unwrap();
        for y in 0..3 {
            for x in 0..7 {
                assert!((g.get(x, y, 0) - step).abs() < 1e-15);
            }
            // Last column wraps back to x = 0.
            assert!((g.get(7, y, 0) - (-7.0 * step)).abs() < 1e-15);
        }
    }

    #[test]
    fn gradient_matches_circular_shift_oracle() {
        let img = random_image(9, 7, 1, 23);
        let (w, h) = (9usize, 7usize);
        let gx = gradient(&img, Direction::Horizontal).unwrap();
        let gy = gradient(&img, Direction::Vertical).unwrap();
        for y in 0..h {
            for x in 0..w {
                let ox = img.get((x + 1) % w, y, 0) - img.get(x, y, 0);
                let oy = img.get(x, (y + 1) % h, 0) - img.get(x, y, 0);
                assert_eq!(gx.get(x, y, 0), ox);
                assert_eq!(gy.get(x, y, 0), oy);
            }
        }
    }

    #[test]
    fn gradient_rejects_multichannel() {
        let img = random_image(4, 4, 3, 3);
        assert!(matches!(
            gradient(&img, Direction::Horizontal),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn gradient_is_linear() {
        let a = random_image(8, 6, 1, 5);
        let b = random_image(8, 6, 1, 6);
        let (ca, cb) = (1.7, -0.4);
        let mix = PlanarImage::from_fn(8, 6, 1, Domain::Unbounded, |x, y, _| {
            ca * a.get(x, y, 0) + cb * b.get(x, y, 0)
        })
        .unwrap();
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let gm = gradient(&mix, dir).unwrap();
            let ga = gradient(&a, dir).unwrap();
            let gb = gradient(&b, dir).unwrap();
            for i in 0..48 {
                let expect = ca * ga.data()[i] + cb * gb.data()[i];
                assert!((gm.data()[i] - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn gradient_sums_to_zero_under_periodic_boundary() {
        // Telescoping: each sample appears once positive, once negative. The
        // identity is exact in real arithmetic; 1e-12 absorbs f64 rounding.
        let img = random_image(16, 11, 1, 7);
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let g = gradient(&img, dir).unwrap();
            let sum: f64 = g.data().iter().sum();
            assert!(sum.abs() < 1e-12, "sum = {sum}");
        }
    }

    #[test]
    fn mask_counts_partition_pixels() {
        let mask = RegionMask::from_fn(4, 3, |x, _| x < 2);
        assert_eq!(mask.count_true(), 6);
        assert_eq!(mask.count_false(), 6);
        assert_eq!(mask.count_true() + mask.count_false(), 12);
    }
}
