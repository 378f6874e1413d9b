//! CSV and JSON encodings of experiment results and sample files.
//!
//! Every CSV has a single header row and prints reals with 17 significant
//! digits.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::{ErrorPoint, KummerResult, KummerRow};
use crate::linalg::CVector;
use crate::scalar::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidInput(format!("unknown format '{other}'"))),
        }
    }
}

/// Scientific notation with 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer<W: Write>(w: W, header: &[&str]) -> Result<csv::Writer<W>> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    out.write_record(header)?;
    Ok(out)
}

/// `N,error` rows.
pub fn write_error_csv<W: Write>(w: W, rows: &[ErrorPoint]) -> Result<()> {
    let mut out = csv_writer(w, &["N", "error"])?;
    for r in rows {
        out.write_record([r.n.to_string(), fmt_real(r.error)])?;
    }
    out.flush()?;
    Ok(())
}

/// `k,Re z,Im z,Re f,Im f,Re M,Im M` rows.
pub fn write_kummer_csv<W: Write>(w: W, rows: &[KummerRow]) -> Result<()> {
    let mut out = csv_writer(w, &["k", "Re z", "Im z", "Re f", "Im f", "Re M", "Im M"])?;
    for r in rows {
        out.write_record([
            r.k.to_string(),
            fmt_real(r.z.re),
            fmt_real(r.z.im),
            fmt_real(r.f.re),
            fmt_real(r.f.im),
            fmt_real(r.m.re),
            fmt_real(r.m.im),
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DerivativeRow {
    pub k: usize,
    pub z: Complex64,
    pub df: Complex64,
}

pub fn derivative_rows(nodes: &[Complex64], df: &CVector) -> Vec<DerivativeRow> {
    nodes
        .iter()
        .zip(df.iter())
        .enumerate()
        .map(|(k, (&z, &df))| DerivativeRow { k: k + 1, z, df })
        .collect()
}

/// `k,Re z,Im z,Re df,Im df` rows.
pub fn write_derivative_csv<W: Write>(w: W, rows: &[DerivativeRow]) -> Result<()> {
    let mut out = csv_writer(w, &["k", "Re z", "Im z", "Re df", "Im df"])?;
    for r in rows {
        out.write_record([
            r.k.to_string(),
            fmt_real(r.z.re),
            fmt_real(r.z.im),
            fmt_real(r.df.re),
            fmt_real(r.df.im),
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct KummerSummary {
    pub lambda_m: [f64; 2],
    pub error: f64,
    pub residual: f64,
    pub iterations: usize,
    pub basis: String,
    pub near_singular: bool,
}

impl From<&KummerResult> for KummerSummary {
    fn from(r: &KummerResult) -> Self {
        KummerSummary {
            lambda_m: [r.lambda_m.re, r.lambda_m.im],
            error: r.error,
            residual: r.residual,
            iterations: r.iterations,
            basis: r.basis.name().to_string(),
            near_singular: r.near_singular,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SamplesDoc {
    samples: Vec<[f64; 2]>,
}

/// Parses `{"samples":[[re,im],...]}`.
pub fn samples_from_json(s: &str) -> Result<CVector> {
    let doc: SamplesDoc = serde_json::from_str(s)?;
    let v = CVector::new(doc.samples.iter().map(|&[re, im]| Complex64::new(re, im)).collect())?;
    if !v.is_finite() {
        return Err(Error::NonFinite("samples"));
    }
    Ok(v)
}

pub fn samples_to_json(v: &CVector) -> Result<String> {
    let doc = SamplesDoc {
        samples: v.iter().map(|z| [z.re, z.im]).collect(),
    };
    Ok(serde_json::to_string(&doc)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_csv_layout() {
        let mut buf = Vec::new();
        write_error_csv(&mut buf, &[ErrorPoint { n: 4, error: 0.5 }]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "N,error\n4,5.0000000000000000e-1\n");
    }

    #[test]
    fn real_format_round_trips() {
        for x in [0.1, -1.0 / 3.0, 6.02e23, 5e-324, 0.0] {
            assert_eq!(fmt_real(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn derivative_csv_header() {
        let mut buf = Vec::new();
        let df = CVector::new(vec![Complex64::new(1.0, 2.0)]).unwrap();
        write_derivative_csv(&mut buf, &derivative_rows(&[Complex64::new(0.5, 0.0)], &df)).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("k,Re z,Im z,Re df,Im df\n1,5.0000000000000000e-1,"));
    }

    #[test]
    fn samples_round_trip() {
        let v = CVector::new(vec![Complex64::new(0.1, -2.5), Complex64::new(3.0, 0.0)]).unwrap();
        assert_eq!(samples_from_json(&samples_to_json(&v).unwrap()).unwrap(), v);
        assert!(samples_from_json(r#"{"samples":[]}"#).is_err());
        assert!(samples_from_json(r#"{"nodes":[[1,2]]}"#).is_err());
    }
}
