//! Classical↔quantum bridges.
//!
//! The classical-to-quantum direction is the direct correspondence
//! `0 → |0⟩`, `1 → |1⟩`, per pixel. The quantum-to-classical direction comes
//! in two readout modes:
//!
//! - **Mode I** measures each cell, takes the z-projection as a level, and
//!   converts it to μ with the classical converter.
//! - **Mode II** reads μ directly off the quantum converter's first
//!   component after the measurement collapse; the second component is
//!   discarded by the switch.
//!
//! Both modes agree on CBS-pure lattices. Bilevel output (`B = 1`) needs no
//! equalizer or rounder; multilevel output goes through [`equalize_round`].
//!
//! [`iqs_prepare`] simulates the input-qubit-source feedback loop: draw a
//! candidate, compare its z-projection against the set-point, close the
//! switch once the projection is within tolerance.

use rand::RngCore;

use crate::error::{Error, Result};
use crate::image_io::{max_level, BoolImage, GrayImage};
use crate::measurement::{measure_cbs, measure_sampled};
use crate::pao::{classical_convert_multilevel, quantum_convert, Qubit};
use crate::seeding::{derive_seed, rng_from_seed};

/// 2-D grid of qubits, the quantum form of a Boolean image.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitLattice {
    rows: usize,
    cols: usize,
    cells: Vec<Qubit>,
}

impl QubitLattice {
    pub fn filled(rows: usize, cols: usize, q: Qubit) -> Result<Self> {
        Self::from_cells(rows, cols, vec![q; rows.saturating_mul(cols)])
    }

    pub fn from_cells(rows: usize, cols: usize, cells: Vec<Qubit>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Structure(format!(
                "lattice dimensions must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if cells.len() != rows * cols {
            return Err(Error::Structure(format!(
                "cell count {} does not match {rows}x{cols}",
                cells.len()
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Qubit {
        self.cells[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, q: Qubit) {
        self.cells[row * self.cols + col] = q;
    }

    pub fn cells(&self) -> &[Qubit] {
        &self.cells
    }

    /// True when every cell would pass a deterministic CBS measurement.
    pub fn is_cbs_pure(&self) -> bool {
        self.cells.iter().all(|q| measure_cbs(q).is_ok())
    }
}

/// Decoded lattice: bilevel for `B = 1`, multilevel otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum DecodedImage {
    Bool(BoolImage),
    Gray(GrayImage),
}

impl DecodedImage {
    pub fn into_bool(self) -> Result<BoolImage> {
        match self {
            DecodedImage::Bool(img) => Ok(img),
            DecodedImage::Gray(_) => Err(Error::Structure("expected a bilevel decode".into())),
        }
    }

    pub fn into_gray(self) -> Result<GrayImage> {
        match self {
            DecodedImage::Gray(img) => Ok(img),
            DecodedImage::Bool(_) => Err(Error::Structure("expected a multilevel decode".into())),
        }
    }
}

/// The direct bit correspondence: `0 → |0⟩`, `1 → |1⟩`.
pub fn c2q_bit(bit: bool) -> Qubit {
    if bit {
        Qubit::one()
    } else {
        Qubit::zero()
    }
}

/// Lift a Boolean image onto a CBS-pure lattice, pixel by pixel.
pub fn c2q_image(image: &BoolImage) -> QubitLattice {
    let cells = image.bits().iter().map(|&b| c2q_bit(b)).collect();
    QubitLattice {
        rows: image.rows(),
        cols: image.cols(),
        cells,
    }
}

/// Simulate the input-qubit-source feedback loop.
///
/// Candidates come from `source`, which may consult the seeded stream.
/// The set-point is the target pole's projection (1 for bit 0, 0 for bit 1);
/// the first candidate whose z-projection lands within `tolerance` of it is
/// accepted and snapped to the exact basis state. If `max_iters` candidates
/// all miss, preparation fails.
pub fn iqs_prepare<F>(
    target: bool,
    tolerance: f64,
    max_iters: usize,
    mut source: F,
    seed: u64,
) -> Result<Qubit>
where
    F: FnMut(&mut dyn RngCore) -> Qubit,
{
    if tolerance <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if max_iters == 0 {
        return Err(Error::Domain("max_iters must be at least 1".into()));
    }
    let set_point = if target { 0.0 } else { 1.0 };
    let mut rng = rng_from_seed(seed);
    for _ in 0..max_iters {
        let candidate = source(&mut rng);
        if (candidate.z_projection() - set_point).abs() <= tolerance {
            return Ok(c2q_bit(target));
        }
    }
    Err(Error::PreparationFailure { max_iters })
}

/// Mode I readout: measure, then convert the projection level to μ.
///
/// CBS-pure lattices decode deterministically with no seed. A seed switches
/// every cell to sampled measurement, each cell on its own derived stream.
pub fn q2c_mode1(
    lattice: &QubitLattice,
    depth_bits: u8,
    seed: Option<u64>,
) -> Result<DecodedImage> {
    decode_lattice(lattice, depth_bits, seed, ReadoutMode::ClassicalConverter)
}

/// Mode II readout: the quantum converter runs first and the measurement
/// recovers μ directly; only the vertical-axis component passes the switch.
///
/// Agrees with Mode I on every CBS-pure lattice.
pub fn q2c_mode2(
    lattice: &QubitLattice,
    depth_bits: u8,
    seed: Option<u64>,
) -> Result<DecodedImage> {
    decode_lattice(lattice, depth_bits, seed, ReadoutMode::QuantumConverter)
}

#[derive(Clone, Copy)]
enum ReadoutMode {
    ClassicalConverter,
    QuantumConverter,
}

fn decode_lattice(
    lattice: &QubitLattice,
    depth_bits: u8,
    seed: Option<u64>,
    mode: ReadoutMode,
) -> Result<DecodedImage> {
    if depth_bits == 0 || depth_bits > 16 {
        return Err(Error::Domain(format!(
            "bit depth must be in 1..=16, got {depth_bits}"
        )));
    }
    let max = f64::from(max_level(depth_bits));
    let mut mu_levels = Vec::with_capacity(lattice.cells.len());
    for (index, cell) in lattice.cells.iter().enumerate() {
        let collapsed = match seed {
            None => measure_cbs(cell)?.1,
            Some(base) => measure_sampled(cell, derive_seed(base, index as u64)).1,
        };
        let mu_unit = match mode {
            // Projection read as a level in [0, 2^B − 1], then converted.
            ReadoutMode::ClassicalConverter => {
                classical_convert_multilevel(collapsed.z_projection() * max, depth_bits)? / max
            }
            // μ recovered directly from the converter's first component.
            ReadoutMode::QuantumConverter => quantum_convert(collapsed).mu,
        };
        mu_levels.push(mu_unit * max);
    }
    if depth_bits == 1 {
        let bits = mu_levels.iter().map(|&m| m > 0.5).collect();
        Ok(DecodedImage::Bool(BoolImage::from_bits(
            lattice.rows,
            lattice.cols,
            bits,
        )?))
    } else {
        Ok(DecodedImage::Gray(equalize_round(
            lattice.rows,
            lattice.cols,
            &mu_levels,
            depth_bits,
        )?))
    }
}

/// Min-max stretch onto `[0, 2^B − 1]` followed by round-half-up.
///
/// Bilevel grids already in `{0, 1}` pass through untouched; a degenerate
/// (constant) grid maps to level 0.
pub fn equalize_round(
    rows: usize,
    cols: usize,
    values: &[f64],
    depth_bits: u8,
) -> Result<GrayImage> {
    if values.is_empty() || rows == 0 || cols == 0 {
        return Err(Error::Structure("equalizer input grid is empty".into()));
    }
    if values.len() != rows * cols {
        return Err(Error::Structure(format!(
            "value count {} does not match {rows}x{cols}",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("equalizer input must be finite".into()));
    }
    let max = f64::from(max_level(depth_bits));
    if depth_bits == 1 && values.iter().all(|&v| v == 0.0 || v == 1.0) {
        let pixels = values.iter().map(|&v| v as u16).collect();
        return GrayImage::from_pixels(rows, cols, depth_bits, pixels);
    }
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let pixels = if hi > lo {
        values
            .iter()
            .map(|&v| ((v - lo) / (hi - lo) * max + 0.5).floor() as u16)
            .collect()
    } else {
        vec![0u16; values.len()]
    };
    GrayImage::from_pixels(rows, cols, depth_bits, pixels)
}
