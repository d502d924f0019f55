use std::path::Path;

use crate::coint::TimeSeriesMatrix;
use crate::error::{Error, Result};
use crate::numerics::Matrix;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CsvOptions {
    /// First line holds column names.
    pub header: bool,
    /// First column holds dates (or any label) and is dropped.
    pub date_col: bool,
    /// Apply the natural logarithm elementwise.
    pub log: bool,
}

/// Reads a rectangular numeric CSV, rows in ascending time order.
pub fn parse_timeseries_csv(path: &Path, opts: CsvOptions) -> Result<TimeSeriesMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_timeseries_str(&text, opts)
}

pub fn parse_timeseries_str(text: &str, opts: CsvOptions) -> Result<TimeSeriesMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(opts.header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let skip = usize::from(opts.date_col);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        let line = i + 1 + usize::from(opts.header);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .skip(skip)
            .map(|(j, cell)| {
                let v: f64 = cell.parse().map_err(|_| {
                    Error::Parse(format!("line {line}, column {}: {cell:?} is not a number", j + 1))
                })?;
                if !v.is_finite() {
                    return Err(Error::Parse(format!("line {line}, column {}: non-finite value", j + 1)));
                }
                if opts.log {
                    if v <= 0.0 {
                        return Err(Error::Domain(format!(
                            "line {line}, column {}: log of non-positive value {v}",
                            j + 1
                        )));
                    }
                    Ok(v.ln())
                } else {
                    Ok(v)
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse(format!(
                    "line {line}: expected {} numeric fields, found {}",
                    first.len(),
                    row.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.len() < 2 {
        return Err(Error::Parse(format!("need at least 2 data rows, found {}", rows.len())));
    }
    if rows[0].is_empty() {
        return Err(Error::Parse("no numeric columns".into()));
    }
    let data = Matrix::from_fn(rows.len(), rows[0].len(), |i, j| rows[i][j]);
    TimeSeriesMatrix::new(data)
}
