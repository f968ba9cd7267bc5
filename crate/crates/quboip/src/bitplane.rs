//! Bitplane slicing and recombination.
//!
//! A `B`-bit grayscale image decomposes into `B` Boolean planes, indexed
//! `0` (LSB) through `B − 1` (MSB). The decomposition is lossless:
//! [`recombine`] inverts [`slice()`] exactly. The MSB plane carries the
//! gross morphology of the image and is the plane the edge-detection
//! pipeline operates on.

use crate::error::{Error, Result};
use crate::image_io::{max_level, BoolImage, GrayImage};

/// Ordered stack of bitplanes, plane `b` holding bit `b` of every pixel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitplaneStack {
    rows: usize,
    cols: usize,
    depth_bits: u8,
    planes: Vec<BoolImage>,
}

impl BitplaneStack {
    /// Assemble a stack from planes ordered LSB first. All planes must share
    /// one shape; the plane count fixes the depth.
    pub fn from_planes(planes: Vec<BoolImage>) -> Result<Self> {
        let Some(first) = planes.first() else {
            return Err(Error::Structure(
                "a bitplane stack needs at least one plane".into(),
            ));
        };
        if planes.len() > 16 {
            return Err(Error::Structure(format!(
                "at most 16 planes supported, got {}",
                planes.len()
            )));
        }
        let (rows, cols) = (first.rows(), first.cols());
        if let Some((b, plane)) = planes
            .iter()
            .enumerate()
            .find(|(_, p)| p.rows() != rows || p.cols() != cols)
        {
            return Err(Error::Structure(format!(
                "plane {b} is {}x{}, expected {rows}x{cols}",
                plane.rows(),
                plane.cols()
            )));
        }
        Ok(Self {
            rows,
            cols,
            depth_bits: planes.len() as u8,
            planes,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn depth_bits(&self) -> u8 {
        self.depth_bits
    }

    pub fn planes(&self) -> &[BoolImage] {
        &self.planes
    }

    /// Plane `b`, where bit `b` has weight `2^b`.
    pub fn plane(&self, b: usize) -> &BoolImage {
        &self.planes[b]
    }
}

/// Binary expansion of one pixel, LSB first: bit `b` is `⌊p / 2^b⌋ mod 2`.
pub fn pixel_to_bits(pixel: u16, depth_bits: u8) -> Result<Vec<bool>> {
    if depth_bits == 0 || depth_bits > 16 {
        return Err(Error::Domain(format!(
            "bit depth must be in 1..=16, got {depth_bits}"
        )));
    }
    if pixel > max_level(depth_bits) {
        return Err(Error::Domain(format!(
            "pixel {pixel} does not fit in {depth_bits} bits"
        )));
    }
    Ok((0..depth_bits).map(|b| pixel >> b & 1 == 1).collect())
}

/// Decompose an image into its bitplanes.
pub fn slice(image: &GrayImage) -> BitplaneStack {
    let depth = image.depth_bits();
    let planes = (0..depth)
        .map(|b| {
            let bits = image.pixels().iter().map(|&p| p >> b & 1 == 1).collect();
            BoolImage::from_bits(image.rows(), image.cols(), bits)
                .expect("plane shape mirrors a valid image")
        })
        .collect();
    BitplaneStack {
        rows: image.rows(),
        cols: image.cols(),
        depth_bits: depth,
        planes,
    }
}

/// Reassemble the image: pixel `(r, c)` is `Σ_b plane_b(r, c) · 2^b`.
pub fn recombine(stack: &BitplaneStack) -> GrayImage {
    let mut pixels = vec![0u16; stack.rows * stack.cols];
    for (b, plane) in stack.planes.iter().enumerate() {
        for (pixel, &bit) in pixels.iter_mut().zip(plane.bits()) {
            *pixel |= (bit as u16) << b;
        }
    }
    GrayImage::from_pixels(stack.rows, stack.cols, stack.depth_bits, pixels)
        .expect("recombined pixels fit the stack depth")
}

/// The most significant bitplane (plane `B − 1`).
pub fn msb(stack: &BitplaneStack) -> BoolImage {
    stack.planes[stack.planes.len() - 1].clone()
}
