use crate::family::Family;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("family mismatch: expected {expected}, got {got}")]
    FamilyMismatch { expected: Family, got: Family },

    #[error("mass must be positive, got m = {0}")]
    NonPositiveMass(f64),

    #[error("zero intensity: orbit angle undefined")]
    ZeroIntensity,

    #[error("DegenerateOrbitPoint: pivot {pivot:e} is below tolerance {tol:e}")]
    DegenerateOrbitPoint { pivot: f64, tol: f64 },

    #[error("time step must be positive, got dt = {0}")]
    NonPositiveStep(f64),

    #[error("end time must be non-negative, got t_end = {0}")]
    NegativeEndTime(f64),

    #[error("trajectory sampling is not uniform")]
    NonUniformSampling,

    #[error("newton check needs at least 3 uniformly spaced samples, got {0}")]
    InsufficientSamples(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn same_family(expected: Family, got: Family) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::FamilyMismatch { expected, got })
    }
}
