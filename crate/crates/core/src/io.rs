//! The JSON configuration file format.
//!
//! ```json
//! { "geometry": "euclidean", "dim": 2, "points": [[0, 0], [1, 0], [0, 1]] }
//! ```
//!
//! `dim` may be omitted (it is then taken from the first point); for
//! hyperbolic files it must be absent or 2. Floats are written in their
//! shortest round-trip form, so reading a written file back reproduces every
//! coordinate bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{Configuration, Geometry};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub geometry: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Malformed JSON or a field that breaks the schema.
    #[error("schema error: {0}")]
    Schema(String),
    /// Well-formed input describing an invalid configuration.
    #[error("domain error: {0}")]
    Domain(#[from] Error),
}

impl ConfigFile {
    pub fn from_configuration(config: &Configuration) -> Self {
        ConfigFile {
            geometry: config.geometry().name().to_string(),
            dim: Some(config.dim()),
            points: config.to_point_vecs(),
        }
    }

    pub fn geometry(&self) -> Result<Geometry, InputError> {
        let first_len = self.points.first().map(Vec::len);
        match self.geometry.as_str() {
            "euclidean" => {
                let dim = self.dim.or(first_len).ok_or_else(|| {
                    InputError::Schema("field `points`: needs at least 3 points".into())
                })?;
                if dim < 2 {
                    return Err(InputError::Schema(format!(
                        "field `dim`: must be at least 2, got {dim}"
                    )));
                }
                Ok(Geometry::Euclidean { dim })
            }
            "hyperbolic" => match self.dim {
                None | Some(2) => Ok(Geometry::Hyperbolic),
                Some(d) => Err(InputError::Schema(format!(
                    "field `dim`: hyperbolic configurations are planar, got {d}"
                ))),
            },
            other => Err(InputError::Schema(format!(
                "field `geometry`: expected \"euclidean\" or \"hyperbolic\", got {other:?}"
            ))),
        }
    }

    pub fn to_configuration(&self) -> Result<Configuration, InputError> {
        let geometry = self.geometry()?;
        if self.points.len() < 3 {
            return Err(InputError::Schema(format!(
                "field `points`: needs at least 3 points, got {}",
                self.points.len()
            )));
        }
        let dim = geometry.dim();
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != dim {
                return Err(InputError::Schema(format!(
                    "field `points[{i}]`: expected {dim} coordinates, got {}",
                    p.len()
                )));
            }
        }
        Ok(Configuration::from_points(geometry, &self.points)?)
    }
}

pub fn parse_config(text: &str) -> Result<Configuration, InputError> {
    let file: ConfigFile = serde_json::from_str(text).map_err(|e| {
        InputError::Schema(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    file.to_configuration()
}

pub fn read_config(path: &Path) -> Result<Configuration, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}

pub fn config_to_json(config: &Configuration) -> String {
    serde_json::to_string_pretty(&ConfigFile::from_configuration(config))
        .expect("configuration serializes")
}

pub fn write_config(path: &Path, config: &Configuration) -> std::io::Result<()> {
    let mut text = config_to_json(config);
    text.push('\n');
    fs::write(path, text)
}
