//! Netpbm (PBM/PGM/PPM) decoding and encoding.
//!
//! Plain and raw variants of all three formats are supported. PGM and PPM
//! require maxval 255. Parse errors carry the byte offset at which decoding
//! stopped.

use crate::error::{Error, Result};
use crate::image_io::{BoolImage, ColorImage, GrayImage, ImageRef, LoadedImage, MAX_PIXELS};

/// Concrete on-disk encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetpbmFormat {
    /// P1 — plain (ASCII) bitmap.
    PbmPlain,
    /// P4 — raw (packed) bitmap.
    PbmRaw,
    /// P2 — plain graymap, maxval 255.
    PgmPlain,
    /// P5 — raw graymap, maxval 255.
    PgmRaw,
    /// P3 — plain pixmap, maxval 255.
    PpmPlain,
    /// P6 — raw pixmap, maxval 255.
    PpmRaw,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    origin: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(bytes: &'a [u8], origin: &'a str) -> Self {
        Self {
            bytes,
            pos: 0,
            origin,
        }
    }

    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            origin: self.origin.to_string(),
            offset: self.pos,
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    /// Skip whitespace and `#`-to-end-of-line comments.
    fn skip_separators(&mut self) {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => {
                    self.pos += 1;
                }
                Some(b'#') => {
                    while let Some(b) = self.bump() {
                        if b == b'\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    fn read_uint(&mut self, what: &str) -> Result<usize> {
        self.skip_separators();
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(usize::from(b - b'0')))
                .ok_or_else(|| self.error(format!("{what} overflows")))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected {what}")));
        }
        Ok(value)
    }

    /// Raw rasters begin after exactly one whitespace byte.
    fn expect_raster_separator(&mut self) -> Result<()> {
        match self.bump() {
            Some(b) if b.is_ascii_whitespace() => Ok(()),
            _ => Err(self.error("expected single whitespace before raster")),
        }
    }

    fn take(&mut self, n: usize, what: &str) -> Result<&'a [u8]> {
        if self.pos + n > self.bytes.len() {
            self.pos = self.bytes.len();
            return Err(self.error(format!("truncated {what}")));
        }
        let slice = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }
}

pub(crate) fn decode(bytes: &[u8], origin: &str) -> Result<LoadedImage> {
    let mut cur = Cursor::new(bytes, origin);
    let magic = match (cur.bump(), cur.bump()) {
        (Some(b'P'), Some(d @ b'1'..=b'6')) => d,
        _ => {
            cur.pos = 0;
            return Err(cur.error("unsupported magic (expected P1..P6)"));
        }
    };
    let cols = cur.read_uint("width")?;
    let rows = cur.read_uint("height")?;
    if rows == 0 || cols == 0 || rows.checked_mul(cols).is_none_or(|n| n > MAX_PIXELS) {
        return Err(cur.error(format!("unsupported dimensions {cols}x{rows}")));
    }
    match magic {
        b'1' => decode_pbm_plain(&mut cur, rows, cols),
        b'4' => decode_pbm_raw(&mut cur, rows, cols),
        b'2' | b'5' | b'3' | b'6' => {
            let maxval = cur.read_uint("maxval")?;
            if maxval != 255 {
                return Err(cur.error(format!("maxval must be 255, got {maxval}")));
            }
            match magic {
                b'2' => decode_gray_plain(&mut cur, rows, cols),
                b'5' => decode_gray_raw(&mut cur, rows, cols),
                b'3' => decode_color_plain(&mut cur, rows, cols),
                _ => decode_color_raw(&mut cur, rows, cols),
            }
        }
        _ => unreachable!(),
    }
}

fn decode_pbm_plain(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    let mut bits = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        cur.skip_separators();
        match cur.bump() {
            Some(b'0') => bits.push(false),
            Some(b'1') => bits.push(true),
            Some(b) => {
                cur.pos -= 1;
                return Err(cur.error(format!("expected bit digit, got {:?}", b as char)));
            }
            None => return Err(cur.error("truncated bit raster")),
        }
    }
    Ok(LoadedImage::Bool(BoolImage::from_bits(rows, cols, bits)?))
}

fn decode_pbm_raw(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    cur.expect_raster_separator()?;
    let row_bytes = cols.div_ceil(8);
    let mut bits = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let packed = cur.take(row_bytes, "packed bit row")?;
        for c in 0..cols {
            let byte = packed[c / 8];
            bits.push(byte & (0x80 >> (c % 8)) != 0);
        }
    }
    Ok(LoadedImage::Bool(BoolImage::from_bits(rows, cols, bits)?))
}

fn decode_gray_plain(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    let mut pixels = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let v = cur.read_uint("gray sample")?;
        if v > 255 {
            return Err(cur.error(format!("gray sample {v} exceeds maxval 255")));
        }
        pixels.push(v as u16);
    }
    Ok(LoadedImage::Gray(GrayImage::from_pixels(
        rows, cols, 8, pixels,
    )?))
}

fn decode_gray_raw(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    cur.expect_raster_separator()?;
    let raster = cur.take(rows * cols, "gray raster")?;
    let pixels = raster.iter().map(|&b| u16::from(b)).collect();
    Ok(LoadedImage::Gray(GrayImage::from_pixels(
        rows, cols, 8, pixels,
    )?))
}

fn decode_color_plain(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    let mut pixels = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let mut rgb = [0u8; 3];
        for channel in &mut rgb {
            let v = cur.read_uint("color sample")?;
            if v > 255 {
                return Err(cur.error(format!("color sample {v} exceeds maxval 255")));
            }
            *channel = v as u8;
        }
        pixels.push(rgb);
    }
    Ok(LoadedImage::Color(ColorImage::from_pixels(
        rows, cols, pixels,
    )?))
}

fn decode_color_raw(cur: &mut Cursor<'_>, rows: usize, cols: usize) -> Result<LoadedImage> {
    cur.expect_raster_separator()?;
    let raster = cur.take(rows * cols * 3, "color raster")?;
    let pixels = raster.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
    Ok(LoadedImage::Color(ColorImage::from_pixels(
        rows, cols, pixels,
    )?))
}

pub(crate) fn encode(img: ImageRef<'_>, format: NetpbmFormat) -> Result<Vec<u8>> {
    match (img, format) {
        (ImageRef::Bool(b), NetpbmFormat::PbmPlain) => Ok(encode_pbm_plain(b)),
        (ImageRef::Bool(b), NetpbmFormat::PbmRaw) => Ok(encode_pbm_raw(b)),
        (ImageRef::Gray(g), NetpbmFormat::PgmPlain) => encode_pgm(g, false),
        (ImageRef::Gray(g), NetpbmFormat::PgmRaw) => encode_pgm(g, true),
        (ImageRef::Color(c), NetpbmFormat::PpmPlain) => Ok(encode_ppm(c, false)),
        (ImageRef::Color(c), NetpbmFormat::PpmRaw) => Ok(encode_ppm(c, true)),
        _ => Err(Error::Structure(format!(
            "format {format:?} does not match the image kind"
        ))),
    }
}

fn encode_pbm_plain(img: &BoolImage) -> Vec<u8> {
    let mut out = format!("P1\n{} {}\n", img.cols(), img.rows()).into_bytes();
    for r in 0..img.rows() {
        for c in 0..img.cols() {
            if c > 0 {
                out.push(b' ');
            }
            out.push(if img.get(r, c) { b'1' } else { b'0' });
        }
        out.push(b'\n');
    }
    out
}

fn encode_pbm_raw(img: &BoolImage) -> Vec<u8> {
    let mut out = format!("P4\n{} {}\n", img.cols(), img.rows()).into_bytes();
    for r in 0..img.rows() {
        let mut byte = 0u8;
        for c in 0..img.cols() {
            if img.get(r, c) {
                byte |= 0x80 >> (c % 8);
            }
            if c % 8 == 7 {
                out.push(byte);
                byte = 0;
            }
        }
        if !img.cols().is_multiple_of(8) {
            out.push(byte);
        }
    }
    out
}

fn encode_pgm(img: &GrayImage, raw: bool) -> Result<Vec<u8>> {
    if img.depth_bits() > 8 {
        return Err(Error::Structure(format!(
            "PGM holds at most 8 bits per pixel, image has {}",
            img.depth_bits()
        )));
    }
    let magic = if raw { "P5" } else { "P2" };
    let mut out = format!("{magic}\n{} {}\n255\n", img.cols(), img.rows()).into_bytes();
    if raw {
        out.extend(img.pixels().iter().map(|&p| p as u8));
    } else {
        for r in 0..img.rows() {
            let line = (0..img.cols())
                .map(|c| img.get(r, c).to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.extend(line.into_bytes());
            out.push(b'\n');
        }
    }
    Ok(out)
}

fn encode_ppm(img: &ColorImage, raw: bool) -> Vec<u8> {
    let magic = if raw { "P6" } else { "P3" };
    let mut out = format!("{magic}\n{} {}\n255\n", img.cols(), img.rows()).into_bytes();
    if raw {
        for &[r, g, b] in img.pixels() {
            out.extend([r, g, b]);
        }
    } else {
        for row in 0..img.rows() {
            let line = (0..img.cols())
                .map(|col| {
                    let [r, g, b] = img.get(row, col);
                    format!("{r} {g} {b}")
                })
                .collect::<Vec<_>>()
                .join("  ");
            out.extend(line.into_bytes());
            out.push(b'\n');
        }
    }
    out
}
