//! The OR/XOR convolutional edge detector, classical and quantum.
//!
//! Per output pixel the detector ORs the window elements around the center
//! and XORs that aggregate with the center itself, so any neighborhood that
//! agrees with its center annihilates to 0 and disagreements light up. The
//! image is zero-padded by half the window on all sides, the window slides
//! in a horizontal raster, and each pass writes a fresh buffer; multi-pass
//! runs feed one pass's output into the next.
//!
//! Two readings of "elements around the center" exist and both are kept:
//!
//! - [`WindowMode::Prose`]: every element except the center itself.
//! - [`WindowMode::Matlab`]: only elements off the center row *and* off the
//!   center column (the off-cross elements).
//!
//! The quantum detector is the same raster with |0⟩ padding and the PAO
//! gates substituted for the Boolean ones, so on CBS lattices it agrees with
//! the classical detector pixel for pixel.

use crate::error::{Error, Result};
use crate::image_io::BoolImage;
use crate::interfaces::QubitLattice;
use crate::pao::{pao_not, pao_or, pao_xor, Qubit};
use crate::seeding::{derive_seed, rng_from_seed};
use rand::Rng;

/// Which window elements feed the OR aggregate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowMode {
    /// All `w² − 1` elements except the center.
    Prose,
    /// The `(w − 1)²` elements off the center row and center column.
    Matlab,
}

/// Kernel geometry: an odd window width, a pass count, and the element rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelSpec {
    width: usize,
    passes: usize,
    mode: WindowMode,
}

impl KernelSpec {
    pub fn new(width: usize, passes: usize, mode: WindowMode) -> Result<Self> {
        if width < 3 || width.is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "kernel width must be odd and at least 3, got {width}"
            )));
        }
        if passes == 0 {
            return Err(Error::Domain("pass count must be at least 1".into()));
        }
        Ok(Self {
            width,
            passes,
            mode,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn passes(&self) -> usize {
        self.passes
    }

    pub fn mode(&self) -> WindowMode {
        self.mode
    }

    /// Padding margin, half the window.
    fn half(&self) -> usize {
        self.width / 2
    }
}

/// Whether window position `(r, c)` participates in the OR aggregate.
fn includes(mode: WindowMode, r: usize, c: usize, half: usize) -> bool {
    match mode {
        WindowMode::Prose => r != half || c != half,
        WindowMode::Matlab => r != half && c != half,
    }
}

/// Response of the detector on a single `w × w` window: OR of the selected
/// elements, XORed with the center.
pub fn bed_window(window: &BoolImage, mode: WindowMode) -> Result<bool> {
    let w = window.rows();
    if window.cols() != w || w.is_multiple_of(2) {
        return Err(Error::Structure(format!(
            "window must be odd and square, got {}x{}",
            window.rows(),
            window.cols()
        )));
    }
    let half = w / 2;
    let mut aux = false;
    for r in 0..w {
        for c in 0..w {
            if includes(mode, r, c, half) {
                aux |= window.get(r, c);
            }
        }
    }
    Ok(window.get(half, half) ^ aux)
}

/// Classical Boolean edge detection over a full image.
pub fn bed_classical(image: &BoolImage, kernel: &KernelSpec) -> BoolImage {
    let mut current = image.clone();
    for _ in 0..kernel.passes {
        current = classical_pass(&current, kernel);
    }
    current
}

fn classical_pass(image: &BoolImage, kernel: &KernelSpec) -> BoolImage {
    let (rows, cols) = (image.rows(), image.cols());
    let (w, half) = (kernel.width, kernel.half());
    let padded_cols = cols + 2 * half;
    let mut padded = vec![false; (rows + 2 * half) * padded_cols];
    for r in 0..rows {
        for c in 0..cols {
            padded[(r + half) * padded_cols + (c + half)] = image.get(r, c);
        }
    }
    let mut out = BoolImage::filled(rows, cols, false).expect("same shape as input");
    for r in 0..rows {
        for c in 0..cols {
            let mut aux = false;
            for wr in 0..w {
                for wc in 0..w {
                    if includes(kernel.mode, wr, wc, half) {
                        aux |= padded[(r + wr) * padded_cols + (c + wc)];
                    }
                }
            }
            let center = padded[(r + half) * padded_cols + (c + half)];
            out.set(r, c, center ^ aux);
        }
    }
    out
}

/// Quantum edge detection: the identical raster with |0⟩ padding and the
/// PAO OR/XOR gates, all comparisons going through μ.
pub fn bed_quantum(lattice: &QubitLattice, kernel: &KernelSpec) -> QubitLattice {
    let mut current = lattice.clone();
    for _ in 0..kernel.passes {
        current = quantum_pass(&current, kernel);
    }
    current
}

fn quantum_pass(lattice: &QubitLattice, kernel: &KernelSpec) -> QubitLattice {
    let (rows, cols) = (lattice.rows(), lattice.cols());
    let (w, half) = (kernel.width, kernel.half());
    let padded_cols = cols + 2 * half;
    let mut padded = vec![Qubit::zero(); (rows + 2 * half) * padded_cols];
    for r in 0..rows {
        for c in 0..cols {
            padded[(r + half) * padded_cols + (c + half)] = lattice.get(r, c);
        }
    }
    let mut out = QubitLattice::filled(rows, cols, Qubit::zero()).expect("same shape as input");
    for r in 0..rows {
        for c in 0..cols {
            let mut aux = Qubit::zero();
            for wr in 0..w {
                for wc in 0..w {
                    if includes(kernel.mode, wr, wc, half) {
                        aux = pao_or(aux, padded[(r + wr) * padded_cols + (c + wc)]);
                    }
                }
            }
            let center = padded[(r + half) * padded_cols + (c + half)];
            out.set(r, c, pao_xor(center, aux));
        }
    }
    out
}

/// Flip each cell independently with probability `flip_probability`,
/// emulating implementation error in an optical realization. Every cell
/// draws from its own stream derived from `seed`, so the outcome does not
/// depend on traversal order and is reproducible.
pub fn inject_noise(
    lattice: &QubitLattice,
    flip_probability: f64,
    seed: u64,
) -> Result<QubitLattice> {
    if !(0.0..=1.0).contains(&flip_probability) {
        return Err(Error::Domain(format!(
            "flip probability {flip_probability} outside [0, 1]"
        )));
    }
    let cells = lattice
        .cells()
        .iter()
        .enumerate()
        .map(|(index, &q)| {
            let draw: f64 = rng_from_seed(derive_seed(seed, index as u64)).random();
            if draw < flip_probability {
                pao_not(q)
            } else {
                q
            }
        })
        .collect();
    QubitLattice::from_cells(lattice.rows(), lattice.cols(), cells)
}
