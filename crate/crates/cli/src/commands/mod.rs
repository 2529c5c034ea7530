pub mod constants;
pub mod estimate;
pub mod photon;
pub mod propagate;
pub mod scatter;
pub mod validate;
