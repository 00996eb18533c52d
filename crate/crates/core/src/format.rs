//! On-disk JSON format for geometric types and the textual syntax of boundary labels.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "n": 1,
//!   "hv": [[2, 2]],
//!   "rho": [[1, 1], [1, 2]],
//!   "epsilon": [1, 1]
//! }
//! ```
//!
//! `rho` and `epsilon` are listed over horizontal labels `(i, j)` in lexicographic order.

use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryLabel;
use crate::error::{Error, Result};
use crate::geometric_type::{validate, GeometricType, RawType, Sign};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeoTypeFile {
    pub format_version: String,
    pub n: i64,
    pub hv: Vec<[i64; 2]>,
    pub rho: Vec<[i64; 2]>,
    pub epsilon: Vec<i64>,
}

impl GeoTypeFile {
    pub fn from_type(t: &GeometricType) -> Self {
        let raw = t.to_raw();
        GeoTypeFile {
            format_version: FORMAT_VERSION.to_string(),
            n: raw.n,
            hv: raw.hv.iter().map(|&(h, v)| [h, v]).collect(),
            rho: raw.rho.iter().map(|&(k, l)| [k, l]).collect(),
            epsilon: raw.eps,
        }
    }

    pub fn to_raw(&self) -> RawType {
        RawType {
            n: self.n,
            hv: self.hv.iter().map(|p| (p[0], p[1])).collect(),
            rho: self.rho.iter().map(|p| (p[0], p[1])).collect(),
            eps: self.epsilon.clone(),
        }
    }

    /// Canonical text: fixed key order, one line per table.
    pub fn to_json_string(&self) -> String {
        let pairs = |v: &[[i64; 2]]| {
            let items: Vec<String> = v.iter().map(|p| format!("[{}, {}]", p[0], p[1])).collect();
            format!("[{}]", items.join(", "))
        };
        let eps: Vec<String> = self.epsilon.iter().map(|e| e.to_string()).collect();
        format!(
            "{{\n  \"format_version\": \"{}\",\n  \"n\": {},\n  \"hv\": {},\n  \"rho\": {},\n  \"epsilon\": [{}]\n}}\n",
            self.format_version,
            self.n,
            pairs(&self.hv),
            pairs(&self.rho),
            eps.join(", ")
        )
    }
}

/// Parses the document without checking the geometric-type axioms.
pub fn read_raw(text: &str) -> Result<RawType> {
    let file: GeoTypeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported format_version {:?} (expected {FORMAT_VERSION:?})",
            file.format_version
        )));
    }
    Ok(file.to_raw())
}

/// Parses and validates a geometric type.
pub fn parse_type(text: &str) -> Result<GeometricType> {
    let raw = read_raw(text)?;
    let report = validate(&raw);
    if !report.ok {
        let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Invalid(msgs.join("; ")));
    }
    GeometricType::from_raw(&raw)
}

pub fn to_file_string(t: &GeometricType) -> String {
    GeoTypeFile::from_type(t).to_json_string()
}

/// Parses `s:+i`, `s:-i`, `u:+k` or `u:-k`.
pub fn parse_label(s: &str) -> Result<BoundaryLabel> {
    let bad = || {
        Error::Parse(format!(
            "bad boundary label {s:?}; expected e.g. s:+1 or u:-2"
        ))
    };
    let (flavor, rest) = s.trim().split_once(':').ok_or_else(bad)?;
    let mut chars = rest.chars();
    let sign = match chars.next() {
        Some('+') => Sign::Plus,
        Some('-') => Sign::Minus,
        _ => return Err(bad()),
    };
    let idx: usize = chars.as_str().parse().map_err(|_| bad())?;
    match flavor {
        "s" => Ok(BoundaryLabel::s(idx, sign)),
        "u" => Ok(BoundaryLabel::u(idx, sign)),
        _ => Err(bad()),
    }
}
