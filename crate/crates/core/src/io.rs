//! Grid function dumps: a JSON header next to a flat CSV or binary body.
//!
//! The body holds the `K` interior values in storage order (row-major over
//! `(i2, i1)`, `i1` fastest). CSV bodies have one value per line; binary
//! bodies are little-endian `f64`.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridFunction, GridSpec};

pub const LAYOUT: &str = "row-major (i2, i1), i1 fastest, interior nodes only";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DumpFormat {
    Csv,
    Bin,
}

impl DumpFormat {
    fn extension(self) -> &'static str {
        match self {
            DumpFormat::Csv => "csv",
            DumpFormat::Bin => "bin",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DumpHeader {
    pub l1: f64,
    pub l2: f64,
    #[serde(rename = "N1")]
    pub n1: usize,
    #[serde(rename = "N2")]
    pub n2: usize,
    pub layout: String,
    pub format: DumpFormat,
    pub count: usize,
    /// Free-form run description supplied by the writer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl DumpHeader {
    pub fn for_grid(grid: &GridSpec, format: DumpFormat) -> Self {
        DumpHeader {
            l1: grid.l1,
            l2: grid.l2,
            n1: grid.n1,
            n2: grid.n2,
            layout: LAYOUT.to_string(),
            format,
            count: grid.len(),
            meta: None,
        }
    }

    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.l1, self.l2, self.n1, self.n2)
    }
}

pub fn write_csv_body<W: Write>(u: &GridFunction, mut out: W) -> Result<()> {
    for v in u.values() {
        writeln!(out, "{v:.17e}")?;
    }
    Ok(())
}

pub fn write_bin_body<W: Write>(u: &GridFunction, mut out: W) -> Result<()> {
    for v in u.values() {
        out.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_csv_body<R: BufRead>(grid: GridSpec, input: R) -> Result<GridFunction> {
    let mut values = Vec::with_capacity(grid.len());
    for line in input.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v = line
            .parse::<f64>()
            .map_err(|e| Error::config(format!("bad value '{line}' in grid dump: {e}")))?;
        values.push(v);
    }
    GridFunction::new(grid, values)
}

pub fn read_bin_body<R: Read>(grid: GridSpec, mut input: R) -> Result<GridFunction> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    if bytes.len() % 8 != 0 {
        return Err(Error::config("binary grid dump length is not a multiple of 8"));
    }
    let values = bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect();
    GridFunction::new(grid, values)
}

fn with_suffix(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Writes `<stem>.json` and `<stem>.csv` / `<stem>.bin`; returns both paths.
pub fn dump(u: &GridFunction, stem: &Path, format: DumpFormat) -> Result<(PathBuf, PathBuf)> {
    dump_with_meta(u, stem, format, None)
}

/// [`dump`] with a `meta` object stored in the header.
pub fn dump_with_meta(
    u: &GridFunction,
    stem: &Path,
    format: DumpFormat,
    meta: Option<serde_json::Value>,
) -> Result<(PathBuf, PathBuf)> {
    let header_path = with_suffix(stem, "json");
    let body_path = with_suffix(stem, format.extension());
    let header = DumpHeader {
        meta,
        ..DumpHeader::for_grid(u.grid(), format)
    };
    fs::write(&header_path, serde_json::to_string_pretty(&header)? + "\n")?;
    let mut body = BufWriter::new(fs::File::create(&body_path)?);
    match format {
        DumpFormat::Csv => write_csv_body(u, &mut body)?,
        DumpFormat::Bin => write_bin_body(u, &mut body)?,
    }
    body.flush()?;
    Ok((header_path, body_path))
}

/// Reads a dump written by [`dump`] from its header path.
pub fn load(header_path: &Path) -> Result<GridFunction> {
    let header: DumpHeader = serde_json::from_str(&fs::read_to_string(header_path)?)?;
    let grid = header.grid()?;
    let body_path = header_path.with_extension(header.format.extension());
    // `<stem>.json` -> `<stem>.csv`; the stem itself may contain dots.
    let file = BufReader::new(fs::File::open(body_path)?);
    let u = match header.format {
        DumpFormat::Csv => read_csv_body(grid, file)?,
        DumpFormat::Bin => read_bin_body(grid, file)?,
    };
    if u.len() != header.count {
        return Err(Error::DimensionMismatch {
            expected: header.count,
            found: u.len(),
        });
    }
    Ok(u)
}
