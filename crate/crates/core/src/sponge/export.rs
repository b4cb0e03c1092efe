use std::io::{self, Write};
use std::str::FromStr;

use super::SpongeLevel;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Ply,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "ply" => Ok(ExportFormat::Ply),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!(
                "unknown format {other:?} (expected csv, ply or json)"
            )),
        }
    }
}

pub fn export_points(level: &SpongeLevel, format: ExportFormat) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_points(level, format, &mut buf)?;
    Ok(buf)
}

/// Writes the level's points. PLY is ASCII with one vertex per point and is
/// only available for `n = 3`.
pub fn write_points<W: Write>(level: &SpongeLevel, format: ExportFormat, out: W) -> Result<()> {
    if format == ExportFormat::Ply && level.n() != 3 {
        return Err(Error::PlyDimension(level.n()));
    }
    let io_err = |e: io::Error| Error::InvalidSpec(format!("write failed: {e}"));
    match format {
        ExportFormat::Csv => write_csv(level, out).map_err(io_err),
        ExportFormat::Ply => write_ply(level, out).map_err(io_err),
        ExportFormat::Json => write_json(level, out).map_err(io_err),
    }
}

fn write_csv<W: Write>(level: &SpongeLevel, mut out: W) -> io::Result<()> {
    let header: Vec<String> = (1..=level.n()).map(|i| format!("x{i}")).collect();
    writeln!(out, "{}", header.join(","))?;
    for p in level.points() {
        let row: Vec<String> = p.iter().map(u64::to_string).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()
}

fn write_ply<W: Write>(level: &SpongeLevel, mut out: W) -> io::Result<()> {
    writeln!(out, "ply")?;
    writeln!(out, "format ascii 1.0")?;
    writeln!(out, "element vertex {}", level.len())?;
    for axis in ["x", "y", "z"] {
        writeln!(out, "property float {axis}")?;
    }
    writeln!(out, "end_header")?;
    for p in level.points() {
        writeln!(out, "{} {} {}", p[0], p[1], p[2])?;
    }
    out.flush()
}

fn write_json<W: Write>(level: &SpongeLevel, mut out: W) -> io::Result<()> {
    let body = serde_json::json!({
        "n": level.n(),
        "m": level.m(),
        "points": level.points(),
    });
    serde_json::to_writer(&mut out, &body)?;
    out.flush()
}
