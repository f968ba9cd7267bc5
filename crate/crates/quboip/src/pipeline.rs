//! End-to-end orchestration: load → gray → slice → select plane → detect
//! edges classically and/or quantumly → compare.
//!
//! The quantum branch lifts the selected bitplane onto a CBS lattice,
//! optionally injects seeded bit-flip noise, runs the PAO detector, and
//! measures the result back out through the Mode I interface. With zero
//! noise the two branches agree exactly and the report's OOIE is 0.
//!
//! Everything here is deterministic given the configuration and seed, so a
//! rerun reproduces every artifact byte for byte.

use std::path::{Path, PathBuf};

use crate::bitplane::{slice, BitplaneStack};
use crate::edge::{bed_classical, bed_quantum, inject_noise, KernelSpec, WindowMode};
use crate::error::{Error, Result};
use crate::image_io::{load_image, save_image, to_gray, BoolImage, LoadedImage, NetpbmFormat};
use crate::interfaces::{c2q_image, q2c_mode1};
use crate::metrics::ComparisonReport;

/// Which detector(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Classical,
    Quantum,
    Both,
}

/// Full experiment configuration.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub input: PathBuf,
    pub out_dir: PathBuf,
    /// Plane to process; defaults to the MSB (`B − 1`).
    pub bitplane: Option<usize>,
    pub kernel_width: usize,
    pub passes: usize,
    pub window_mode: WindowMode,
    pub backend: Backend,
    pub noise_flip_prob: f64,
    pub seed: u64,
    pub emit_bitplanes: bool,
    pub emit_error_map: bool,
}

impl PipelineConfig {
    /// Defaults: MSB plane, 3×3 kernel, one pass, prose window rule, both
    /// backends, no noise, seed 0.
    pub fn new(input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        Self {
            input: input.into(),
            out_dir: out_dir.into(),
            bitplane: None,
            kernel_width: 3,
            passes: 1,
            window_mode: WindowMode::Prose,
            backend: Backend::Both,
            noise_flip_prob: 0.0,
            seed: 0,
            emit_bitplanes: false,
            emit_error_map: false,
        }
    }

    fn kernel(&self) -> Result<KernelSpec> {
        KernelSpec::new(self.kernel_width, self.passes, self.window_mode).map_err(|e| match e {
            Error::Domain(msg) => Error::Config(msg),
            other => other,
        })
    }

    fn validate(&self) -> Result<()> {
        self.kernel()?;
        if !(0.0..=1.0).contains(&self.noise_flip_prob) {
            return Err(Error::Config(format!(
                "noise flip probability {} outside [0, 1]",
                self.noise_flip_prob
            )));
        }
        Ok(())
    }
}

/// What a pipeline run produced.
#[derive(Debug)]
pub struct PipelineOutcome {
    /// Agreement report; present only when both backends ran.
    pub report: Option<ComparisonReport>,
    pub classical_edges: Option<BoolImage>,
    pub quantum_edges: Option<BoolImage>,
    /// Files written, in emission order.
    pub written: Vec<PathBuf>,
}

fn load_stack(input: &Path) -> Result<BitplaneStack> {
    match load_image(input)? {
        LoadedImage::Color(c) => Ok(slice(&to_gray(&c))),
        LoadedImage::Gray(g) => Ok(slice(&g)),
        LoadedImage::Bool(b) => BitplaneStack::from_planes(vec![b]),
    }
}

fn select_plane(stack: &BitplaneStack, requested: Option<usize>) -> Result<BoolImage> {
    let depth = usize::from(stack.depth_bits());
    let index = requested.unwrap_or(depth - 1);
    if index >= depth {
        return Err(Error::Config(format!(
            "bitplane {index} out of range for a {depth}-bit image"
        )));
    }
    Ok(stack.plane(index).clone())
}

fn ensure_out_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Run the configured experiment and write its artifacts.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineOutcome> {
    config.validate()?;
    let kernel = config.kernel()?;
    let stack = load_stack(&config.input)?;
    let plane = select_plane(&stack, config.bitplane)?;

    ensure_out_dir(&config.out_dir)?;
    let mut written = Vec::new();

    if config.emit_bitplanes {
        for (b, plane) in stack.planes().iter().enumerate() {
            let path = config.out_dir.join(format!("plane{b}.pbm"));
            save_image(plane, &path, NetpbmFormat::PbmRaw)?;
            written.push(path);
        }
    }

    let classical = match config.backend {
        Backend::Classical | Backend::Both => Some(bed_classical(&plane, &kernel)),
        Backend::Quantum => None,
    };
    let quantum = match config.backend {
        Backend::Quantum | Backend::Both => {
            let lattice = c2q_image(&plane);
            let noisy = inject_noise(&lattice, config.noise_flip_prob, config.seed)?;
            let detected = bed_quantum(&noisy, &kernel);
            Some(q2c_mode1(&detected, 1, None)?.into_bool()?)
        }
        Backend::Classical => None,
    };

    if let Some(edges) = &classical {
        let path = config.out_dir.join("edge_classical.pbm");
        save_image(edges, &path, NetpbmFormat::PbmRaw)?;
        written.push(path);
    }
    if let Some(edges) = &quantum {
        let path = config.out_dir.join("edge_quantum.pbm");
        save_image(edges, &path, NetpbmFormat::PbmRaw)?;
        written.push(path);
    }

    let report = match (&classical, &quantum) {
        (Some(c), Some(q)) => {
            let report = ComparisonReport::compare(c, q)?;
            let path = config.out_dir.join("report.txt");
            write_text(&path, &report.to_text())?;
            written.push(path);
            if config.emit_error_map {
                let path = config.out_dir.join("error_map.pbm");
                save_image(&report.error_map, &path, NetpbmFormat::PbmRaw)?;
                written.push(path);
            }
            Some(report)
        }
        _ => None,
    };

    Ok(PipelineOutcome {
        report,
        classical_edges: classical,
        quantum_edges: quantum,
        written,
    })
}

/// Write every bitplane of the input as `plane0.pbm … plane{B−1}.pbm`.
pub fn run_slice(input: &Path, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let stack = load_stack(input)?;
    ensure_out_dir(out_dir)?;
    let mut written = Vec::new();
    for (b, plane) in stack.planes().iter().enumerate() {
        let path = out_dir.join(format!("plane{b}.pbm"));
        save_image(plane, &path, NetpbmFormat::PbmRaw)?;
        written.push(path);
    }
    Ok(written)
}

/// Compare two bitplane files and render the report; optionally write the
/// report and error map under `out_dir`.
pub fn run_compare(
    a_path: &Path,
    b_path: &Path,
    out_dir: Option<&Path>,
    emit_error_map: bool,
) -> Result<(ComparisonReport, Vec<PathBuf>)> {
    let a = load_bool(a_path)?;
    let b = load_bool(b_path)?;
    let report = ComparisonReport::compare(&a, &b)?;
    let mut written = Vec::new();
    if let Some(dir) = out_dir {
        ensure_out_dir(dir)?;
        let path = dir.join("report.txt");
        write_text(&path, &report.to_text())?;
        written.push(path);
        if emit_error_map {
            let path = dir.join("error_map.pbm");
            save_image(&report.error_map, &path, NetpbmFormat::PbmRaw)?;
            written.push(path);
        }
    }
    Ok((report, written))
}

fn load_bool(path: &Path) -> Result<BoolImage> {
    match load_image(path)? {
        LoadedImage::Bool(b) => Ok(b),
        _ => Err(Error::Config(format!(
            "{} is not a bitmap (PBM) image",
            path.display()
        ))),
    }
}
