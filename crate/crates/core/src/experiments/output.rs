use std::fs::File;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{KdError, Result};

/// Twelve significant digits in scientific notation; NaN marks a failed point.
pub fn format_number(v: f64) -> String {
    format!("{v:.11e}")
}

/// Writes `header` and `rows` as CSV, every row checked against the header width.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<f64>]) -> Result<()> {
    let file = File::create(path).map_err(|e| KdError::io(path, e))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(header)?;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != header.len() {
            return Err(KdError::config(
                "csv",
                format!("row {i} has {} fields, header has {}", row.len(), header.len()),
            ));
        }
        w.write_record(row.iter().map(|v| format_number(*v)))?;
    }
    w.flush().map_err(|e| KdError::io(path, e))?;
    Ok(())
}

/// Reads back a CSV written by [`write_csv`], returning the header and rows.
pub fn read_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let file = File::open(path).map_err(|e| KdError::io(path, e))?;
    let mut r = csv::Reader::from_reader(file);
    let header = r.headers()?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>().map_err(|e| KdError::config("csv", format!("bad number `{f}`: {e}"))))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    Ok((header, rows))
}

pub fn write_summary<T: Serialize>(summary: &T, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| KdError::io(path, e))?;
    serde_json::to_writer_pretty(&file, summary)?;
    Ok(())
}

pub fn read_summary<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path).map_err(|e| KdError::io(path, e))?;
    Ok(serde_json::from_reader(std::io::BufReader::new(file))?)
}
