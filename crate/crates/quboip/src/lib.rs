//! Quantum-Boolean image processing (QuBoIP).
//!
//! The crate decomposes grayscale images into bitplanes, runs a Boolean
//! OR/XOR edge detector over the most significant bitplane, and mirrors the
//! same computation on a lattice of simulated qubits whose logic is defined
//! purely by Bloch-sphere z-projections (the PAO criterion). Because every
//! lattice cell stays in a computational basis state, measurement is
//! deterministic and the quantum path can be checked pixel-for-pixel against
//! the classical one with the OOIE agreement metric.
//!
//! Modules map onto the pipeline stages:
//!
//! - [`image_io`]: Netpbm load/save plus color-to-gray conversion
//! - [`bitplane`]: bitplane slicing and lossless recombination
//! - [`pao`]: the qubit state model and min/max (fuzzy-style) logic over μ
//! - [`measurement`]: projective measurement, with the CBS fast path
//! - [`interfaces`]: classical↔quantum bridges (Mode I/II readout, IQS loop)
//! - [`edge`]: the OR/XOR convolutional edge detector, classical and quantum
//! - [`metrics`]: OOIE and pixel-to-pixel error maps
//! - [`pipeline`]: end-to-end orchestration used by the CLI

pub mod bitplane;
pub mod edge;
pub mod error;
pub mod image_io;
pub mod interfaces;
pub mod measurement;
pub mod metrics;
pub mod pao;
pub mod pipeline;

pub(crate) mod seeding;

pub use error::{Error, Result};
pub use image_io::{BoolImage, ColorImage, GrayImage, LoadedImage};
pub use pao::Qubit;
