//! Normalized 1D Gaussian packets in the four conjugate domains, their
//! Fourier pairs, uncertainties, and packet construction from energy
//! constraints by maximum entropy (a Gaussian, once mean and variance are
//! fixed).
//!
//! Sign conventions: a time-domain packet carries e^{-i E0 t}, its energy
//! pair carries e^{+i (E - E0) t0}; space/momentum use the opposite signs.
//! All four shapes share the normalization (1/(pi sigma^2))^{1/4}, so the
//! L2 norm is exactly one and the uncertainty is sigma / sqrt(2).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Result, TqmError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Time,
    Energy,
    Space,
    Momentum,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Time => "time",
            Domain::Energy => "energy",
            Domain::Space => "space",
            Domain::Momentum => "momentum",
        }
    }

    /// The domain reached by one Fourier transform.
    pub fn conjugate(self) -> Domain {
        match self {
            Domain::Time => Domain::Energy,
            Domain::Energy => Domain::Time,
            Domain::Space => Domain::Momentum,
            Domain::Momentum => Domain::Space,
        }
    }
}

/// A normalized Gaussian wave packet. `center` is always the time/space-like
/// parameter (t0 or x0) and `carrier` the energy/momentum-like one (E0 or
/// p0) regardless of domain; which of the two locates the Gaussian hump and
/// which sets the phase depends on the domain tag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianPacket {
    pub domain: Domain,
    pub center: f64,
    pub carrier: f64,
    pub sigma: f64,
}

impl GaussianPacket {
    pub fn new(domain: Domain, center: f64, carrier: f64, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(TqmError::DegeneratePacket(sigma));
        }
        Ok(Self { domain, center, carrier, sigma })
    }

    /// Complex amplitude at a point of the packet's own domain.
    pub fn amplitude(&self, u: f64) -> Complex64 {
        let norm = (PI * self.sigma * self.sigma).powf(-0.25);
        let (hump, phase) = match self.domain {
            Domain::Time => (self.center, -self.carrier * u),
            Domain::Energy => (self.carrier, (u - self.carrier) * self.center),
            Domain::Space => (self.center, self.carrier * u),
            Domain::Momentum => (self.carrier, -(u - self.carrier) * self.center),
        };
        let d = u - hump;
        let envelope = (-d * d / (2.0 * self.sigma * self.sigma)).exp();
        norm * envelope * Complex64::new(0.0, phase).exp()
    }

    /// |amplitude|^2.
    pub fn density(&self, u: f64) -> f64 {
        self.amplitude(u).norm_sqr()
    }

    /// Where the density hump sits in this domain.
    pub fn hump(&self) -> f64 {
        match self.domain {
            Domain::Time | Domain::Space => self.center,
            Domain::Energy | Domain::Momentum => self.carrier,
        }
    }

    /// Uncertainty of the packet's own variable: sigma / sqrt(2).
    pub fn uncertainty(&self) -> f64 {
        self.sigma * FRAC_1_SQRT_2
    }
}

/// The conjugate-domain packet: domain flips, sigma inverts, and the roles
/// of center and carrier swap while keeping their values. Applying twice
/// recovers the original parameters exactly.
pub fn fourier_pair(p: &GaussianPacket) -> GaussianPacket {
    GaussianPacket {
        domain: p.domain.conjugate(),
        center: p.center,
        carrier: p.carrier,
        sigma: 1.0 / p.sigma,
    }
}

/// sigma / sqrt(2), as a free function mirror of the method.
pub fn uncertainty(p: &GaussianPacket) -> f64 {
    p.uncertainty()
}

/// Variance addition under Gaussian convolution.
pub fn convolve_dispersions(sigma_a2: f64, sigma_b2: f64) -> Result<f64> {
    if sigma_a2 < 0.0 {
        return Err(TqmError::NegativeVariance(sigma_a2));
    }
    if sigma_b2 < 0.0 {
        return Err(TqmError::NegativeVariance(sigma_b2));
    }
    Ok(sigma_a2 + sigma_b2)
}

/// Energy-moment constraints that determine a packet by maximum entropy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropicConstraints {
    pub mean_energy: f64,
    pub energy_second_moment: f64,
}

impl EntropicConstraints {
    pub fn new(mean_energy: f64, energy_second_moment: f64) -> Result<Self> {
        if energy_second_moment < mean_energy * mean_energy {
            return Err(TqmError::NegativeVariance(
                energy_second_moment - mean_energy * mean_energy,
            ));
        }
        Ok(Self { mean_energy, energy_second_moment })
    }

    pub fn from_mean_and_delta(mean_energy: f64, delta_e: f64) -> Result<Self> {
        if delta_e < 0.0 {
            return Err(TqmError::NegativeVariance(delta_e));
        }
        Ok(Self {
            mean_energy,
            energy_second_moment: mean_energy * mean_energy + delta_e * delta_e,
        })
    }

    /// Energy uncertainty sqrt(<E^2> - <E>^2).
    pub fn delta_e(&self) -> f64 {
        (self.energy_second_moment - self.mean_energy * self.mean_energy)
            .max(0.0)
            .sqrt()
    }
}

/// The maximum-entropy packet for the given constraints: an energy-domain
/// Gaussian with carrier <E> and sigma = sqrt(2) * delta E (so that the
/// packet's uncertainty equals delta E exactly).
pub fn entropic_packet(c: &EntropicConstraints) -> Result<GaussianPacket> {
    let delta = c.delta_e();
    if delta <= 0.0 {
        return Err(TqmError::DegeneratePacket(delta));
    }
    GaussianPacket::new(Domain::Energy, 0.0, c.mean_energy, std::f64::consts::SQRT_2 * delta)
}
