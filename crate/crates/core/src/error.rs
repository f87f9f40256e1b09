use thiserror::Error;

use crate::config::Configuration;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration needs at least 3 points, got {0}")]
    TooFewPoints(usize),

    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("point {0} has a non-finite coordinate")]
    NonFinite(usize),

    #[error("points {0} and {1} coincide within the separation tolerance")]
    CoincidentPoints(usize, usize),

    #[error("angle vertex coincides with one of the other two points")]
    DegenerateVertex,

    #[error("triangle is degenerate (its vertices lie on one geodesic)")]
    DegenerateTriangle,

    #[error("point with norm {norm} is outside the disk interior")]
    BoundaryViolation { norm: f64 },

    #[error("all points are collinear")]
    AllCollinear,

    #[error("configuration is not a regular polygon (relative edge deviation {deviation:e})")]
    NotRegular { deviation: f64 },

    #[error("operation requires {expected} geometry")]
    WrongGeometry { expected: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("theorem violated on trial {trial}: min angle {min_angle} against bound {bound}")]
    TheoremViolation {
        trial: usize,
        min_angle: f64,
        bound: f64,
        config: Box<Configuration>,
    },
}
