//! Classical/quantum agreement metrics.
//!
//! OOIE ("only one is enough") is the binary verdict: 0 when two Boolean
//! images are pixelwise identical, 1 as soon as a single pixel differs. The
//! pixel-to-pixel error map and the differing-pixel count break the verdict
//! down.

use crate::error::{Error, Result};
use crate::image_io::BoolImage;

/// Result of comparing a classical and a quantum edge map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    /// 0 iff the images agree everywhere.
    pub ooie: bool,
    /// Number of differing pixels.
    pub diff_count: usize,
    /// Pixelwise XOR of the two inputs.
    pub error_map: BoolImage,
}

impl ComparisonReport {
    pub fn compare(a: &BoolImage, b: &BoolImage) -> Result<Self> {
        let error_map = error_map(a, b)?;
        let diff_count = error_map.count_ones();
        Ok(Self {
            ooie: diff_count >= 1,
            diff_count,
            error_map,
        })
    }

    pub fn rows(&self) -> usize {
        self.error_map.rows()
    }

    pub fn cols(&self) -> usize {
        self.error_map.cols()
    }

    /// Flat key-value record, one pair per line.
    pub fn to_text(&self) -> String {
        format!(
            "ooie={}\ndiff_count={}\nrows={}\ncols={}\n",
            self.ooie as u8,
            self.diff_count,
            self.rows(),
            self.cols()
        )
    }
}

fn check_same_shape(a: &BoolImage, b: &BoolImage) -> Result<()> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Structure(format!(
            "cannot compare {}x{} against {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

/// OR over all pixels of the pixelwise XOR: 0 iff the images are equal.
pub fn ooie(a: &BoolImage, b: &BoolImage) -> Result<bool> {
    check_same_shape(a, b)?;
    Ok(a.bits().iter().zip(b.bits()).any(|(&x, &y)| x != y))
}

/// Pixelwise XOR of the two images.
pub fn error_map(a: &BoolImage, b: &BoolImage) -> Result<BoolImage> {
    check_same_shape(a, b)?;
    let bits = a
        .bits()
        .iter()
        .zip(b.bits())
        .map(|(&x, &y)| x != y)
        .collect();
    BoolImage::from_bits(a.rows(), a.cols(), bits)
}

/// Number of pixels at which the two images differ.
pub fn diff_count(a: &BoolImage, b: &BoolImage) -> Result<usize> {
    Ok(error_map(a, b)?.count_ones())
}
