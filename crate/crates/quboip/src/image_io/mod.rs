//! Image containers and Netpbm interchange.
//!
//! Three pixel grids cover the whole pipeline: [`ColorImage`] (8-bit RGB),
//! [`GrayImage`] (integer levels in `[0, 2^B − 1]`), and [`BoolImage`] (one
//! bitplane). All grids are row-major with the origin at the top left.
//!
//! Interchange goes through the Netpbm family: PBM (P1/P4) for bitplanes,
//! PGM (P2/P5) for grayscale, PPM (P3/P6) for color. PGM/PPM files must use
//! maxval 255. Saving and re-loading an image reproduces it bit-exactly.

mod netpbm;

use std::path::Path;

use crate::error::{Error, Result};

pub use netpbm::NetpbmFormat;

/// Hard cap on decoded image size, to reject absurd headers early.
const MAX_PIXELS: usize = 1 << 28;

/// 8-bit RGB image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorImage {
    rows: usize,
    cols: usize,
    pixels: Vec<[u8; 3]>,
}

impl ColorImage {
    pub fn from_pixels(rows: usize, cols: usize, pixels: Vec<[u8; 3]>) -> Result<Self> {
        check_dims(rows, cols)?;
        if pixels.len() != rows * cols {
            return Err(Error::Structure(format!(
                "color pixel count {} does not match {}x{}",
                pixels.len(),
                rows,
                cols
            )));
        }
        Ok(Self { rows, cols, pixels })
    }

    pub fn filled(rows: usize, cols: usize, rgb: [u8; 3]) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(Self {
            rows,
            cols,
            pixels: vec![rgb; rows * cols],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> [u8; 3] {
        self.pixels[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, rgb: [u8; 3]) {
        self.pixels[row * self.cols + col] = rgb;
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }
}

/// Grayscale image with levels in `[0, 2^depth_bits − 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    rows: usize,
    cols: usize,
    depth_bits: u8,
    pixels: Vec<u16>,
}

impl GrayImage {
    pub fn from_pixels(rows: usize, cols: usize, depth_bits: u8, pixels: Vec<u16>) -> Result<Self> {
        check_dims(rows, cols)?;
        check_depth(depth_bits)?;
        if pixels.len() != rows * cols {
            return Err(Error::Structure(format!(
                "gray pixel count {} does not match {}x{}",
                pixels.len(),
                rows,
                cols
            )));
        }
        let max = max_level(depth_bits);
        if let Some(&bad) = pixels.iter().find(|&&p| p > max) {
            return Err(Error::Domain(format!(
                "gray level {bad} exceeds maximum {max} for depth {depth_bits}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            depth_bits,
            pixels,
        })
    }

    pub fn filled(rows: usize, cols: usize, depth_bits: u8, level: u16) -> Result<Self> {
        check_dims(rows, cols)?;
        check_depth(depth_bits)?;
        if level > max_level(depth_bits) {
            return Err(Error::Domain(format!(
                "gray level {level} exceeds maximum for depth {depth_bits}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            depth_bits,
            pixels: vec![level; rows * cols],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Bits per pixel (`B`); levels run over `[0, 2^B − 1]`.
    pub fn depth_bits(&self) -> u8 {
        self.depth_bits
    }

    pub fn max_level(&self) -> u16 {
        max_level(self.depth_bits)
    }

    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.pixels[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, level: u16) {
        debug_assert!(level <= self.max_level());
        self.pixels[row * self.cols + col] = level;
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }
}

/// One bitplane: a grid of bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolImage {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BoolImage {
    pub fn from_bits(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self> {
        check_dims(rows, cols)?;
        if bits.len() != rows * cols {
            return Err(Error::Structure(format!(
                "bit count {} does not match {}x{}",
                bits.len(),
                rows,
                cols
            )));
        }
        Ok(Self { rows, cols, bits })
    }

    pub fn filled(rows: usize, cols: usize, bit: bool) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(Self {
            rows,
            cols,
            bits: vec![bit; rows * cols],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        self.bits[row * self.cols + col] = bit;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// Result of decoding a file: the variant follows the Netpbm magic.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadedImage {
    Color(ColorImage),
    Gray(GrayImage),
    Bool(BoolImage),
}

/// Borrowed view used by the encoder, so one `save_image` covers all grids.
#[derive(Debug, Clone, Copy)]
pub enum ImageRef<'a> {
    Color(&'a ColorImage),
    Gray(&'a GrayImage),
    Bool(&'a BoolImage),
}

impl<'a> From<&'a ColorImage> for ImageRef<'a> {
    fn from(img: &'a ColorImage) -> Self {
        ImageRef::Color(img)
    }
}

impl<'a> From<&'a GrayImage> for ImageRef<'a> {
    fn from(img: &'a GrayImage) -> Self {
        ImageRef::Gray(img)
    }
}

impl<'a> From<&'a BoolImage> for ImageRef<'a> {
    fn from(img: &'a BoolImage) -> Self {
        ImageRef::Bool(img)
    }
}

/// Load any supported Netpbm file. The magic determines the variant:
/// P1/P4 → [`BoolImage`], P2/P5 → [`GrayImage`], P3/P6 → [`ColorImage`].
pub fn load_image(path: impl AsRef<Path>) -> Result<LoadedImage> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    netpbm::decode(&bytes, &path.display().to_string())
}

/// Decode an in-memory Netpbm byte stream.
pub fn decode_image(bytes: &[u8]) -> Result<LoadedImage> {
    netpbm::decode(bytes, "<memory>")
}

/// Encode an image to Netpbm bytes in the requested format.
pub fn encode_image<'a>(img: impl Into<ImageRef<'a>>, format: NetpbmFormat) -> Result<Vec<u8>> {
    netpbm::encode(img.into(), format)
}

/// Save an image to `path` in the requested Netpbm format.
///
/// Round trip is lossless: loading the written file reproduces the image.
pub fn save_image<'a>(
    img: impl Into<ImageRef<'a>>,
    path: impl AsRef<Path>,
    format: NetpbmFormat,
) -> Result<()> {
    let path = path.as_ref();
    let bytes = netpbm::encode(img.into(), format)?;
    std::fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// ITU-R BT.601 luma conversion with round-half-up, the conversion used by
/// the standard `rgb2gray` routine. Output depth is 8 bits.
pub fn to_gray(img: &ColorImage) -> GrayImage {
    let pixels = img
        .pixels
        .iter()
        .map(|&[r, g, b]| {
            let y = 0.2989 * f64::from(r) + 0.5870 * f64::from(g) + 0.1140 * f64::from(b);
            ((y + 0.5).floor() as u16).min(255)
        })
        .collect();
    GrayImage {
        rows: img.rows,
        cols: img.cols,
        depth_bits: 8,
        pixels,
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::Structure(format!(
            "image dimensions must be at least 1x1, got {rows}x{cols}"
        )));
    }
    match rows.checked_mul(cols) {
        Some(n) if n <= MAX_PIXELS => Ok(()),
        _ => Err(Error::Structure(format!(
            "image {rows}x{cols} exceeds the {MAX_PIXELS}-pixel limit"
        ))),
    }
}

fn check_depth(depth_bits: u8) -> Result<()> {
    if depth_bits == 0 || depth_bits > 16 {
        return Err(Error::Domain(format!(
            "bit depth must be in 1..=16, got {depth_bits}"
        )));
    }
    Ok(())
}

pub(crate) fn max_level(depth_bits: u8) -> u16 {
    ((1u32 << depth_bits) - 1) as u16
}
