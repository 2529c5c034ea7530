//! Photon Green functions and the proton source that launches them: the
//! ordinary retarded shell (delta regularized as a narrow Gaussian), a
//! closed-contour residue check of the frequency integral, the Bessel-form
//! amplitude with its widened support, the pseudo-Euclidean potential and
//! its quadratic expansion with a proven remainder bound, and the
//! quadratic-time Green function built on kappa_bar = mu / r.
//!
//! The residue contour keeps the poles exactly on the real axis and walks a
//! displaced closed path around them — the value is then independent of the
//! displacement, so halving it measures pure quadrature error.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_4, PI};

use crate::bessel::j0;
use crate::constants::{C_FM_PER_YS, HBAR_C_MEV_FM};
use crate::error::{Result, TqmError};
use crate::quad::integrate_complex;
use crate::wavepacket::{Domain, GaussianPacket};

pub const DEFAULT_MU: f64 = 1.0;

/// -(2 pi / kappa) sin(kappa tau): the closed-form value of the frequency
/// integral over the retarded contour.
pub fn residue_analytic(kappa: f64, tau: f64) -> Complex64 {
    Complex64::new(-(2.0 * PI / kappa) * (kappa * tau).sin(), 0.0)
}

fn contour_integral(kappa: f64, tau: f64, eps: f64, radius: f64) -> Result<Complex64> {
    let f = |w: Complex64| (Complex64::new(0.0, -tau) * w).exp() / (w * w - kappa * kappa);
    let tol = 1e-11;
    // Top line just above the axis, left to right.
    let top = integrate_complex(
        |x| f(Complex64::new(x, eps)),
        -radius,
        radius,
        tol,
        tol,
    )?;
    // Right edge down to the axis, then the lower semicircle (clockwise),
    // then the left edge back up.
    let right = -Complex64::i()
        * integrate_complex(|y| f(Complex64::new(radius, y)), 0.0, eps, tol, tol)?;
    let arc = -Complex64::i()
        * radius
        * integrate_complex(
            |phi| {
                let w = Complex64::from_polar(radius, -phi);
                f(w) * Complex64::from_polar(1.0, -phi)
            },
            0.0,
            PI,
            tol,
            tol,
        )?;
    let left = Complex64::i()
        * integrate_complex(|y| f(Complex64::new(-radius, y)), 0.0, eps, tol, tol)?;
    Ok(top + right + arc + left)
}

/// Numeric closed-contour evaluation next to the analytic residue value.
/// The displacement is halved once; disagreement beyond 1e-7 of the natural
/// scale 2 pi / kappa reports a contour failure.
pub fn residue_check(kappa: f64, tau: f64) -> Result<(Complex64, Complex64)> {
    if kappa <= 0.0 {
        return Err(TqmError::NonPositiveMass(kappa));
    }
    if !(tau > 0.0) {
        return Err(TqmError::NonPositiveTau(tau));
    }
    let radius = 2.0 * kappa + 5.0 / tau + 1.0;
    let eps = (0.5 * kappa).min(0.5 / tau);
    let coarse = contour_integral(kappa, tau, eps, radius)?;
    let fine = contour_integral(kappa, tau, 0.5 * eps, radius)?;
    let disagreement = (coarse - fine).norm();
    if disagreement > 1e-7 * (2.0 * PI / kappa) {
        return Err(TqmError::ContourNonConvergent { disagreement });
    }
    Ok((fine, residue_analytic(kappa, tau)))
}

/// The 20-point verification grid used by the validation CLI.
pub fn residue_grid() -> Vec<(f64, f64)> {
    let mut grid = Vec::new();
    for &kappa in &[0.5, 1.0, 2.0, 5.0] {
        for &tau in &[0.1, 0.5, 1.0, 2.0, 3.0] {
            grid.push((kappa, tau));
        }
    }
    grid
}

/// theta(tau) delta(tau - r) / (4 pi r), with the delta regularized as a
/// normal density of the given width.
pub fn retarded_shell_with_width(r: f64, tau: f64, width: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(TqmError::NonPositiveRadius(r));
    }
    if width <= 0.0 {
        return Err(TqmError::NonPositiveRadius(width));
    }
    if tau < 0.0 {
        return Ok(0.0);
    }
    let d = (tau - r) / width;
    Ok((-0.5 * d * d).exp() / (width * (2.0 * PI).sqrt() * 4.0 * PI * r))
}

/// Same with the default width r / 1000.
pub fn retarded_shell(r: f64, tau: f64) -> Result<f64> {
    retarded_shell_with_width(r, tau, r / 1000.0)
}

/// a J0(kappa b): a = -i sqrt(pi/2) theta(tau + 2 t_tau),
/// b = tau sqrt|1 + 2 t_tau / tau|, t_tau = t - tau. Support reaches back
/// to t = tau/2 rather than stopping at the light cone.
pub fn bessel_greens(t: f64, kappa: f64, tau: f64) -> Result<Complex64> {
    if !(tau > 0.0) {
        return Err(TqmError::NonPositiveTau(tau));
    }
    let t_tau = t - tau;
    if tau + 2.0 * t_tau < 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let b = tau * (1.0 + 2.0 * t_tau / tau).abs().sqrt();
    Ok(Complex64::new(0.0, -(PI / 2.0).sqrt()) * j0(kappa * b))
}

/// 1 / sqrt(t^2 + r^2): the static potential with the time separation kept
/// under the root with the *same* sign as space.
pub fn pseudo_euclidean_potential(t: f64, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(TqmError::NonPositiveRadius(r));
    }
    Ok(1.0 / (t * t + r * r).sqrt())
}

/// Quadratic expansion 1/r - t^2 / (2 r^3).
pub fn pseudo_euclidean_expansion(t: f64, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(TqmError::NonPositiveRadius(r));
    }
    Ok(1.0 / r - t * t / (2.0 * r * r * r))
}

/// |exact - quadratic|; bounded by (3/8) t^4 / r^5 for |t| <= r/2 (next
/// term of the alternating binomial series).
pub fn expansion_error(t: f64, r: f64) -> Result<f64> {
    Ok((pseudo_euclidean_potential(t, r)? - pseudo_euclidean_expansion(t, r)?).abs())
}

/// kappa_bar = mu / r; pass DEFAULT_MU when nothing better is known.
pub fn kappa_bar(r: f64, mu: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(TqmError::NonPositiveRadius(r));
    }
    Ok(mu / r)
}

/// The quadratic-time Green function evaluated at time offset `t_tau`:
/// e^{-i kappa_bar dt} sqrt(i / (2 pi sigma_bar^2)) e^{+i dt^2 / 2 sigma_bar^2}
/// with sigma_bar^2 = tau / kappa_bar. Its modulus is sqrt(kappa_bar / 2 pi tau)
/// for every offset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonGreens {
    pub t_tau: f64,
    pub r: f64,
    pub tau: f64,
    pub kappa_bar: f64,
    pub value: Complex64,
}

impl PhotonGreens {
    pub fn sigma_bar2(&self) -> f64 {
        self.tau / self.kappa_bar
    }
}

pub fn quadratic_greens(dt: f64, r: f64, tau: f64, mu: f64) -> Result<PhotonGreens> {
    if !(tau > 0.0) {
        return Err(TqmError::NonPositiveTau(tau));
    }
    if mu <= 0.0 {
        return Err(TqmError::NonPositiveMass(mu));
    }
    let kb = kappa_bar(r, mu)?;
    let sigma_bar2 = tau / kb;
    let value = Complex64::from_polar(
        (kb / (2.0 * PI * tau)).sqrt(),
        FRAC_PI_4 - kb * dt + dt * dt / (2.0 * sigma_bar2),
    );
    Ok(PhotonGreens { t_tau: dt, r, tau, kappa_bar: kb, value })
}

/// The proton as a photon source: charge radius fixes the momentum scale
/// hbar c / r and the light-crossing time r / c.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProtonSource {
    pub radius_fm: f64,
    pub sigma_q_mev: f64,
    pub sigma_t_ys: f64,
}

impl ProtonSource {
    pub fn new(radius_fm: f64) -> Result<Self> {
        if radius_fm <= 0.0 {
            return Err(TqmError::NonPositiveRadius(radius_fm));
        }
        Ok(Self {
            radius_fm,
            sigma_q_mev: HBAR_C_MEV_FM / radius_fm,
            sigma_t_ys: radius_fm / C_FM_PER_YS,
        })
    }

    /// hbar c / (2r): the conjugate-pair momentum uncertainty for a
    /// position uncertainty of one radius. Doubles as the source's energy
    /// dispersion scale.
    pub fn momentum_uncertainty_mev(&self) -> f64 {
        HBAR_C_MEV_FM / (2.0 * self.radius_fm)
    }
}

/// Normalized energy-domain packet emitted by the source: width
/// sqrt(2) * (energy dispersion), centered on zero frequency offset.
pub fn initial_photon_packet(src: &ProtonSource) -> Result<GaussianPacket> {
    let sigma_w = std::f64::consts::SQRT_2 * src.momentum_uncertainty_mev();
    GaussianPacket::new(Domain::Energy, 0.0, 0.0, sigma_w)
}

/// The same packet in its bare exponential form e^{-w^2 / (4 sigma_E^2)},
/// which is 1 at w = 0.
pub fn initial_photon_amplitude(src: &ProtonSource, w_mev: f64) -> f64 {
    let s = src.momentum_uncertainty_mev();
    (-w_mev * w_mev / (4.0 * s * s)).exp()
}
