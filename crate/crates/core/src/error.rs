use thiserror::Error;

/// Errors raised by constructors and measurements.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("zero vector cannot be normalized onto the sphere")]
    ZeroVector,
    #[error("vector norm {norm} is not 1 within {tolerance}")]
    NotUnit { norm: f64, tolerance: f64 },
    #[error("angle undefined: a ray point coincides with the vertex or its antipode")]
    DegenerateAngle,
    #[error("degenerate lune: poles are equal or antipodal (distance {distance})")]
    DegenerateLune { distance: f64 },
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("no incircle certificate with the center in the hull of its contacts")]
    CertificateFailure,
    #[error("input set is empty or has no interior")]
    EmptyInput,
    #[error("input does not fit in an open hemisphere")]
    HemisphereViolation,
    #[error("width {w} outside admissible range {range}")]
    WidthOutOfRange { w: f64, range: &'static str },
    #[error("radius {r} outside admissible range {range}")]
    RadiusOutOfRange { r: f64, range: &'static str },
    #[error("eta {eta} outside [0, {max}]")]
    EtaOutOfRange { eta: f64, max: f64 },
    #[error("value {value} outside admissible range {range}")]
    OutOfRange { value: f64, range: &'static str },
    #[error("eps {eps} too large: measured width {measured} deviates from {w}")]
    EpsTooLarge { eps: f64, w: f64, measured: f64 },
    #[error("no admissible peak triple found: {0}")]
    NotFound(String),
    #[error("body is not of constant width (spread {spread})")]
    NotConstantWidth { spread: f64 },
    #[error("incircle has only two contacts; three are required")]
    TwoContactCase,
    #[error("pair is not a reduction pair: {0}")]
    NotAReductionPair(String),
    #[error("random body generation failed after {attempts} attempts")]
    GenerationFailure { attempts: usize },
}

pub type Result<T> = std::result::Result<T, GeometryError>;
