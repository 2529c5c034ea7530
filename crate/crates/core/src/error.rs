use thiserror::Error;

/// Errors surfaced by the numerical core. Every variant is a caller-visible
/// contract violation or a genuine numerical failure, never a panic path.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TqmError {
    #[error("division by zero energy: clock frequency undefined at E = 0")]
    ZeroEnergy,

    #[error("kernel at tau = 0 is a delta function; apply the identity instead")]
    DeltaLimit,

    #[error("mass (or mean energy) must be positive, got {0}")]
    NonPositiveMass(f64),

    #[error("operation needs a {expected}-domain packet, got {found}")]
    WrongDomain { expected: &'static str, found: &'static str },

    #[error("clock step must be positive, got {0}")]
    NonPositiveTau(f64),

    #[error("dispersion must be positive, got {0}")]
    DegeneratePacket(f64),

    #[error("variance must be nonnegative, got {0}")]
    NegativeVariance(f64),

    #[error("emission of {photon} from {current} would leave a negative variance")]
    EmissionUnderflow { current: f64, photon: f64 },

    #[error("unsupported unit conversion {from} -> {to}")]
    UnsupportedUnits { from: &'static str, to: &'static str },

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("principal quantum number must be >= 1, got {0}")]
    BadQuantumNumber(u32),

    #[error("relaxation rate must be positive, got {0}")]
    NonPositiveRate(f64),

    #[error("grid spans only {span} around the packet; need at least {needed}")]
    GridTooSmall { span: f64, needed: f64 },

    #[error("grid size {0} invalid: need a power of two >= 16")]
    BadGridSize(usize),

    #[error("grid step must be positive, got {0}")]
    BadGridStep(f64),

    #[error("step count list must be nonempty and strictly ascending")]
    BadStepList,

    #[error("quadrature failed to converge: estimated error {err:.3e} on {what}")]
    QuadratureNonConvergent { what: &'static str, err: f64 },

    #[error("contour evaluations at shrinking pole clearance disagree by {disagreement:.3e}")]
    ContourNonConvergent { disagreement: f64 },

    #[error("ledger replay mismatch at step {step}: expected {expected}, found {found}")]
    ReplayMismatch { step: usize, expected: f64, found: f64 },
}

pub type Result<T> = std::result::Result<T, TqmError>;
