//! The one record type every subcommand emits, with its CSV and JSON forms.
//!
//! Rationals are canonical `a/b` strings (integers without `/1`). In JSON
//! the set and first points are arrays of objects; CSV flattens them to
//! `base|step;...` and `lattice:z;...`.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use gkdim_core::closedform::{FirstPoint, LatticeTag};
use gkdim_core::scalar::{format_rational, parse_rational};
use gkdim_core::{HalfLattice, Rational, ReducibilitySet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Algorithm,
    ClosedForm,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub base: String,
    pub step: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub lattice: String,
    pub z: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gkdim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_u: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reducible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_points: Option<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wallach: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<Component>>,
    pub source: Source,
}

/// Flat CSV row; field order is the column order.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    #[serde(rename = "type")]
    lie_type: String,
    n: usize,
    p: Option<usize>,
    branch: Option<String>,
    z: Option<String>,
    gkdim: Option<usize>,
    dim_u: Option<usize>,
    reducible: Option<bool>,
    first_points: Option<String>,
    wallach: Option<String>,
    set: Option<String>,
    source: Source,
}

pub fn components(set: &ReducibilitySet) -> Vec<Component> {
    set.components()
        .iter()
        .map(|c: &HalfLattice| Component {
            base: format_rational(&c.base),
            step: format_rational(&c.step),
        })
        .collect()
}

pub fn points(pts: &[FirstPoint<Rational>]) -> Vec<Point> {
    pts.iter()
        .map(|p| Point {
            lattice: p.lattice.as_str().to_string(),
            z: format_rational(&p.z),
        })
        .collect()
}

fn bad(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}

fn check_rational(s: &str) -> io::Result<()> {
    parse_rational::<Rational>(s)
        .map(drop)
        .map_err(|e| bad(e.to_string()))
}

fn join_set(set: &[Component]) -> String {
    let parts: Vec<String> = set
        .iter()
        .map(|c| format!("{}|{}", c.base, c.step))
        .collect();
    parts.join(";")
}

fn split_set(s: &str) -> io::Result<Vec<Component>> {
    s.split(';')
        .map(|item| {
            let (base, step) = item
                .split_once('|')
                .ok_or_else(|| bad(format!("malformed set component `{item}`")))?;
            check_rational(base)?;
            check_rational(step)?;
            Ok(Component {
                base: base.to_string(),
                step: step.to_string(),
            })
        })
        .collect()
}

fn join_points(pts: &[Point]) -> String {
    let parts: Vec<String> = pts
        .iter()
        .map(|p| format!("{}:{}", p.lattice, p.z))
        .collect();
    parts.join(";")
}

fn split_points(s: &str) -> io::Result<Vec<Point>> {
    s.split(';')
        .map(|item| {
            let (lattice, z) = item
                .split_once(':')
                .ok_or_else(|| bad(format!("malformed first point `{item}`")))?;
            if LatticeTag::parse(lattice).is_none() {
                return Err(bad(format!("unknown lattice `{lattice}`")));
            }
            check_rational(z)?;
            Ok(Point {
                lattice: lattice.to_string(),
                z: z.to_string(),
            })
        })
        .collect()
}

impl From<&OutputRecord> for CsvRow {
    fn from(r: &OutputRecord) -> Self {
        CsvRow {
            lie_type: r.lie_type.clone(),
            n: r.n,
            p: r.p,
            branch: r.branch.clone(),
            z: r.z.clone(),
            gkdim: r.gkdim,
            dim_u: r.dim_u,
            reducible: r.reducible,
            first_points: r.first_points.as_deref().map(join_points),
            wallach: r.wallach.clone(),
            set: r.set.as_deref().map(join_set),
            source: r.source,
        }
    }
}

impl CsvRow {
    fn into_record(self) -> io::Result<OutputRecord> {
        Ok(OutputRecord {
            lie_type: self.lie_type,
            n: self.n,
            p: self.p,
            branch: self.branch,
            z: self.z,
            gkdim: self.gkdim,
            dim_u: self.dim_u,
            reducible: self.reducible,
            first_points: self.first_points.as_deref().map(split_points).transpose()?,
            wallach: self.wallach,
            set: self.set.as_deref().map(split_set).transpose()?,
            source: self.source,
        })
    }
}

/// Writes `records` as CSV with a header row, or as one JSON object per line.
pub fn write_records<W: Write>(out: W, records: &[OutputRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow::from(r)).map_err(io::Error::other)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
    }
}

/// Inverse of [`write_records`].
pub fn read_records(input: &str, format: Format) -> io::Result<Vec<OutputRecord>> {
    match format {
        Format::Csv => csv::Reader::from_reader(input.as_bytes())
            .deserialize::<CsvRow>()
            .map(|row| row.map_err(io::Error::other)?.into_record())
            .collect(),
        Format::Json => input
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(io::Error::other))
            .collect(),
    }
}
