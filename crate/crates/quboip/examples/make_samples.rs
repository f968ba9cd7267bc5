//! Regenerates the sample images under `samples/`.
//!
//! Run from the workspace root: `cargo run --example make_samples`.
//! Generation is pure arithmetic, so the corpus is reproducible.

use quboip::image_io::{save_image, BoolImage, ColorImage, GrayImage, NetpbmFormat};

fn main() -> quboip::Result<()> {
    let dir = std::path::Path::new("samples");
    std::fs::create_dir_all(dir).map_err(|source| quboip::Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;

    // Diagonal gradient with a bright disc, so the MSB plane has a clear
    // boundary for the detector to find.
    let size = 64usize;
    let mut gradient = GrayImage::filled(size, size, 8, 0)?;
    for r in 0..size {
        for c in 0..size {
            let ramp = ((r + c) * 255 / (2 * size - 2)) as i32;
            let dr = r as i32 - 20;
            let dc = c as i32 - 40;
            let level = if dr * dr + dc * dc < 144 { 230 } else { ramp };
            gradient.set(r, c, level as u16);
        }
    }
    save_image(&gradient, dir.join("gradient.pgm"), NetpbmFormat::PgmRaw)?;

    // Color blobs over a dark background, for the color → gray path.
    let mut blobs = ColorImage::filled(48, 48, [8, 8, 24])?;
    for r in 0..48usize {
        for c in 0..48usize {
            let in_disc = |cr: i32, cc: i32, radius: i32| {
                let dr = r as i32 - cr;
                let dc = c as i32 - cc;
                dr * dr + dc * dc < radius * radius
            };
            if in_disc(14, 14, 9) {
                blobs.set(r, c, [220, 40, 40]);
            } else if in_disc(30, 32, 11) {
                blobs.set(r, c, [40, 200, 80]);
            } else if r.abs_diff(40) < 3 {
                blobs.set(r, c, [230, 230, 60]);
            }
        }
    }
    save_image(&blobs, dir.join("blobs.ppm"), NetpbmFormat::PpmRaw)?;

    // A small checkerboard bitplane, handy for the compare subcommand.
    let mut checker = BoolImage::filled(8, 8, false)?;
    for r in 0..8usize {
        for c in 0..8usize {
            checker.set(r, c, (r / 2 + c / 2) % 2 == 0);
        }
    }
    save_image(&checker, dir.join("checker.pbm"), NetpbmFormat::PbmPlain)?;

    println!("wrote samples/gradient.pgm, samples/blobs.ppm, samples/checker.pbm");
    Ok(())
}
