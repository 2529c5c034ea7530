//! Numerical library for quantum wave packets that carry a dispersion in
//! *time* as well as in space: free-particle clock-time kernels, closed-form
//! Gaussian packet evolution, an FFT slice-propagation engine that doubles as
//! an independent oracle, photon Green functions, atomic time-dispersion
//! estimates, and scattering dispersion bookkeeping.
//!
//! Internal math is done in natural units (hbar = c = 1); the [`constants`]
//! module carries the eV / attosecond / picometer presentation conversions.

pub mod bessel;
pub mod bound;
pub mod constants;
pub mod error;
pub mod freeprop;
pub mod numgrid;
pub mod photon;
pub mod quad;
pub mod scatter;
pub mod wavepacket;

pub use bound::{AtomSpec, DispersionEstimate, EstimateMethod};
pub use error::TqmError;
pub use freeprop::{EvolvedPacket, FourMomentum, FstKernel};
pub use numgrid::{ConvergenceReport, GridSpec, GridState};
pub use photon::{PhotonGreens, ProtonSource};
pub use scatter::{DispersionLedger, RelaxMode, RelaxationPolicy, ScatterEvent};
pub use wavepacket::{Domain, EntropicConstraints, GaussianPacket};

/// Shorthand used throughout the crate.
pub type Complex = num_complex::Complex64;
