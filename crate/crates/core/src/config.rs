use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{euclidean, hyperbolic};

/// Points closer than this (Euclidean distance, or hyperbolic distance in the
/// disk model) are treated as coincident.
pub const SEPARATION_TOLERANCE: f64 = 1e-9;

/// The space a configuration lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Geometry {
    /// Euclidean space of the given dimension (at least 2).
    Euclidean { dim: usize },
    /// Hyperbolic plane, points stored in Poincaré disk coordinates.
    Hyperbolic,
}

impl Geometry {
    pub const PLANE: Geometry = Geometry::Euclidean { dim: 2 };

    pub fn dim(self) -> usize {
        match self {
            Geometry::Euclidean { dim } => dim,
            Geometry::Hyperbolic => 2,
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, Geometry::Hyperbolic)
    }

    pub fn is_planar(self) -> bool {
        self.dim() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Geometry::Euclidean { .. } => "euclidean",
            Geometry::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Geometry::Euclidean { dim } => write!(f, "euclidean-{dim}"),
            Geometry::Hyperbolic => f.write_str("hyperbolic"),
        }
    }
}

/// An ordered list of at least three pairwise distinct points in one geometry.
///
/// Coordinates are stored flat, `dim` values per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    geometry: Geometry,
    coords: Vec<f64>,
}

impl Configuration {
    /// Builds a configuration from a flat coordinate buffer, validating every
    /// invariant (point count, finiteness, disk membership, separation).
    pub fn from_flat(geometry: Geometry, coords: Vec<f64>) -> Result<Self> {
        let dim = geometry.dim();
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                index: coords.len() / dim,
                expected: dim,
                found: coords.len() % dim,
            });
        }
        let config = Configuration { geometry, coords };
        config.validate()?;
        Ok(config)
    }

    pub fn from_points<P: AsRef<[f64]>>(geometry: Geometry, points: &[P]) -> Result<Self> {
        let dim = geometry.dim();
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let mut coords = Vec::with_capacity(points.len() * dim);
        for (index, p) in points.iter().enumerate() {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Self::from_flat(geometry, coords)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        if n < 3 {
            return Err(Error::TooFewPoints(n));
        }
        for (i, p) in self.points().enumerate() {
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFinite(i));
            }
            if self.geometry.is_hyperbolic() {
                hyperbolic::HyperbolicPoint::new(p[0], p[1])?;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.separation(i, j) < SEPARATION_TOLERANCE {
                    return Err(Error::CoincidentPoints(i, j));
                }
            }
        }
        Ok(())
    }

    /// Distance between points `i` and `j` in the configuration's own metric.
    pub fn separation(&self, i: usize, j: usize) -> f64 {
        match self.geometry {
            Geometry::Euclidean { .. } => euclidean::distance(self.point(i), self.point(j)),
            Geometry::Hyperbolic => hyperbolic::distance_raw(self.point2(i), self.point2(j)),
        }
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> f64 {
        let n = self.len();
        let mut best = 0.0_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                best = best.max(self.separation(i, j));
            }
        }
        best
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn dim(&self) -> usize {
        self.geometry.dim()
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let d = self.dim();
        &self.coords[i * d..(i + 1) * d]
    }

    /// Planar point `i` as a pair. Only meaningful for planar geometries.
    pub fn point2(&self, i: usize) -> [f64; 2] {
        let p = self.point(i);
        [p[0], p[1]]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim())
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn to_point_vecs(&self) -> Vec<Vec<f64>> {
        self.points().map(<[f64]>::to_vec).collect()
    }

    /// The angle at point `j` of the triangle `(i, j, k)`, in `[0, π]`.
    pub fn angle(&self, i: usize, j: usize, k: usize) -> Result<f64> {
        match self.geometry {
            Geometry::Euclidean { .. } => {
                euclidean::angle_at(self.point(i), self.point(j), self.point(k))
            }
            Geometry::Hyperbolic => {
                hyperbolic::angle_at_raw(self.point2(i), self.point2(j), self.point2(k))
            }
        }
    }
}
