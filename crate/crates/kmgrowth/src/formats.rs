//! JSON file formats and resolution of algebra / polynomial sources.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use kmgrowth_core::catalog::{self, FiniteType};
use kmgrowth_core::orbit::OrbitLevels;
use kmgrowth_core::{GeneralizedCartanMatrix, IntPolynomial, RationalFit, TruncatedSeries};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Algebra(#[from] kmgrowth_core::Error),
    #[error("series has {len} coefficients but declares order {order}")]
    OrderMismatch { len: usize, order: usize },
    #[error("series file has no coefficients")]
    EmptySeries,
    #[error("`{0}` is neither a built-in name nor a readable file")]
    UnknownSource(String),
    #[error("element dump requires collected words")]
    NoElements,
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

/// `{"name": string, "cartan": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub cartan: Vec<Vec<i64>>,
}

impl AlgebraSpec {
    pub fn from_gcm(a: &GeneralizedCartanMatrix) -> Self {
        Self {
            name: catalog::describe(a),
            cartan: a.to_rows(),
        }
    }

    pub fn to_gcm(&self) -> Result<GeneralizedCartanMatrix> {
        Ok(GeneralizedCartanMatrix::new(&self.cartan)?.with_name(self.name.clone()))
    }
}

/// `{"coeffs": [int], "order": int}`; polynomials omit `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFile {
    pub coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

impl SeriesFile {
    pub fn from_series(s: &TruncatedSeries) -> Self {
        Self {
            coeffs: s.coeffs().to_vec(),
            order: Some(s.order()),
        }
    }

    pub fn from_polynomial(p: &IntPolynomial) -> Self {
        Self {
            coeffs: p.coeffs().to_vec(),
            order: None,
        }
    }

    /// Reads either form as a series; a polynomial keeps its own length.
    pub fn to_series(&self) -> Result<TruncatedSeries> {
        if self.coeffs.is_empty() {
            return Err(FormatError::EmptySeries);
        }
        if let Some(order) = self.order {
            if order + 1 != self.coeffs.len() {
                return Err(FormatError::OrderMismatch {
                    len: self.coeffs.len(),
                    order,
                });
            }
        }
        Ok(TruncatedSeries::new(self.coeffs.clone()))
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }
}

/// `{"numerator": [int], "denominator": [int], "verified_to": int, "slack": int}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitReport {
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
    pub verified_to: usize,
    pub slack: usize,
}

impl From<&RationalFit> for FitReport {
    fn from(fit: &RationalFit) -> Self {
        Self {
            numerator: fit.numerator.coeffs().to_vec(),
            denominator: fit.denominator.coeffs().to_vec(),
            verified_to: fit.verified_to,
            slack: fit.slack,
        }
    }
}

/// One line of the element dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementLine {
    pub length: usize,
    pub image: Vec<i64>,
    pub word: Vec<usize>,
}

/// Writes every collected element as JSON Lines, by length then word.
pub fn write_elements(levels: &OrbitLevels, mut out: impl Write) -> std::io::Result<()> {
    let Some(elements) = &levels.elements else {
        return Err(std::io::Error::other(FormatError::NoElements));
    };
    for (length, level) in elements.iter().enumerate() {
        // records are already sorted by word
        for rec in level {
            let line = ElementLine {
                length,
                image: rec.image.0.clone(),
                word: rec.word.0.clone(),
            };
            serde_json::to_writer(&mut out, &line)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.into(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: path.into(),
        source,
    })
}

/// A built-in name, or else a path to an algebra spec file.
pub fn resolve_algebra(source: &str) -> Result<GeneralizedCartanMatrix> {
    if let Some(a) = catalog::builtin(source) {
        return Ok(a);
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(FormatError::UnknownSource(source.into()));
    }
    read_json::<AlgebraSpec>(path)?.to_gcm()
}

/// A finite type name (its Poincaré polynomial), or else a path to a
/// series/polynomial file.
pub fn resolve_polynomial(source: &str) -> Result<IntPolynomial> {
    if let Ok(t) = source.parse::<FiniteType>() {
        return Ok(t.poincare_polynomial());
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(FormatError::UnknownSource(source.into()));
    }
    Ok(read_json::<SeriesFile>(path)?.to_polynomial())
}

pub fn read_series(path: &Path) -> Result<TruncatedSeries> {
    read_json::<SeriesFile>(path)?.to_series()
}

#[cfg(test)]
mod tests {
    use super::*;
    use kmgrowth_core::orbit::{OrbitBfs, Strategy};
    use kmgrowth_core::lattice;

    #[test]
    fn algebra_spec_round_trip() {
        let h = catalog::hyperbolic_h();
        let spec = AlgebraSpec::from_gcm(&h);
        assert_eq!(spec.name, "paperH");
        let text = serde_json::to_string(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_gcm().unwrap(), h);
    }

    #[test]
    fn invalid_cartan_is_rejected() {
        let spec: AlgebraSpec = serde_json::from_str(r#"{"name":"bad","cartan":[[2,1],[-1,2]]}"#).unwrap();
        assert!(matches!(spec.to_gcm(), Err(FormatError::Algebra(_))));
    }

    #[test]
    fn series_format() {
        let s = TruncatedSeries::new(vec![1, 2, 0]);
        let json = serde_json::to_string(&SeriesFile::from_series(&s)).unwrap();
        assert_eq!(json, r#"{"coeffs":[1,2,0],"order":2}"#);
        let p = IntPolynomial::new(vec![1, 1]);
        assert_eq!(serde_json::to_string(&SeriesFile::from_polynomial(&p)).unwrap(), r#"{"coeffs":[1,1]}"#);
        let bad = SeriesFile { coeffs: vec![1, 2], order: Some(5) };
        assert!(matches!(bad.to_series(), Err(FormatError::OrderMismatch { len: 2, order: 5 })));
        let poly: SeriesFile = serde_json::from_str(r#"{"coeffs":[1,4,9]}"#).unwrap();
        assert_eq!(poly.to_series().unwrap().order(), 2);
    }

    #[test]
    fn element_dump_order() {
        let a = catalog::builtin("A2").unwrap();
        let levels = OrbitBfs::new(&a, lattice::weyl_vector(&a))
            .strategy(Strategy::FrontierSign)
            .collect_words(true)
            .run()
            .unwrap();
        let mut buf = Vec::new();
        write_elements(&levels, &mut buf).unwrap();
        let lines: Vec<ElementLine> = String::from_utf8(buf)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        let words: Vec<Vec<usize>> = lines.iter().map(|l| l.word.clone()).collect();
        assert_eq!(words, vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]]);
        assert!(lines.iter().all(|l| l.length == l.word.len()));
    }

    #[test]
    fn sources() {
        assert_eq!(resolve_algebra("A4").unwrap().rank(), 4);
        assert!(matches!(resolve_algebra("no/such/file.json"), Err(FormatError::UnknownSource(_))));
        assert_eq!(resolve_polynomial("B5").unwrap().degree(), Some(25));
    }
}
