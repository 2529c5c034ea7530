//! Free propagation in clock time: the clock frequency of an off-shell
//! four-momentum, the diagonal momentum-space kernel, coordinate-space
//! kernels (time-only, space-only, and their 4D product), closed-form
//! evolution of a time-domain Gaussian, and a quadratic-in-energy kernel
//! for well-collimated beams.
//!
//! The momentum kernel carries the exact frequency -(E^2-|p|^2-m^2)/(2E);
//! the coordinate kernels are its massive reduction, whose time factor has
//! Fourier multiplier e^{+i E^2 tau / 2m}. The time kernel's prefactor is
//! the principal branch sqrt(i m / 2 pi tau) = e^{i pi/4} sqrt(m / 2 pi tau):
//! that branch, and only that branch, reproduces the delta limit at tau -> 0,
//! the closed-form dilation 1 - i tau/(m sigma^2), and the 4D prefactor
//! -i m^2/(4 pi^2 tau^2) once three space factors are multiplied in.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Result, TqmError};
use crate::wavepacket::{Domain, GaussianPacket};

/// Coordinate energy and momentum, deliberately unconstrained: off-shell
/// values are first-class here.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourMomentum {
    pub e: f64,
    pub p: [f64; 3],
}

impl FourMomentum {
    pub fn new(e: f64, p: [f64; 3]) -> Self {
        Self { e, p }
    }

    /// E = sqrt(m^2 + |p|^2).
    pub fn on_shell(m: f64, p: [f64; 3]) -> Self {
        let p_sq: f64 = p.iter().map(|c| c * c).sum();
        Self { e: (m * m + p_sq).sqrt(), p }
    }

    pub fn p_sq(&self) -> f64 {
        self.p.iter().map(|c| c * c).sum()
    }

    /// E^2 - |p|^2 - m^2; zero exactly on shell.
    pub fn off_shellness(&self, m: f64) -> f64 {
        self.e * self.e - self.p_sq() - m * m
    }
}

/// -(E^2 - |p|^2 - m^2) / (2E): the rate at which an off-shell component
/// winds phase per unit clock time.
pub fn clock_frequency(k: &FourMomentum, m: f64) -> Result<f64> {
    if k.e == 0.0 {
        return Err(TqmError::ZeroEnergy);
    }
    Ok(-k.off_shellness(m) / (2.0 * k.e))
}

/// Diagonal momentum-space kernel e^{-i clock_frequency * tau}; zero for
/// tau < 0 (retarded), exactly 1 at tau = 0.
pub fn kernel_momentum(k: &FourMomentum, m: f64, tau: f64) -> Result<Complex64> {
    if tau < 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let w = clock_frequency(k, m)?;
    Ok(Complex64::from_polar(1.0, -w * tau))
}

/// Time-only coordinate kernel e^{i pi/4} sqrt(m/2 pi tau) e^{-i m dt^2 / 2 tau}.
/// Symmetric in its time arguments; delta limit at tau = 0 is refused.
pub fn kernel_time(t2: f64, t1: f64, m: f64, tau: f64) -> Result<Complex64> {
    if m <= 0.0 {
        return Err(TqmError::NonPositiveMass(m));
    }
    if tau == 0.0 {
        return Err(TqmError::DeltaLimit);
    }
    if tau < 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let d = t2 - t1;
    Ok(Complex64::from_polar(
        (m / (2.0 * PI * tau)).sqrt(),
        FRAC_PI_4 - m * d * d / (2.0 * tau),
    ))
}

/// One spatial axis of the ordinary free kernel,
/// e^{-i pi/4} sqrt(m/2 pi tau) e^{+i m dx^2 / 2 tau}.
pub fn kernel_space(x2: f64, x1: f64, m: f64, tau: f64) -> Result<Complex64> {
    if m <= 0.0 {
        return Err(TqmError::NonPositiveMass(m));
    }
    if tau == 0.0 {
        return Err(TqmError::DeltaLimit);
    }
    if tau < 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let d = x2 - x1;
    Ok(Complex64::from_polar(
        (m / (2.0 * PI * tau)).sqrt(),
        -FRAC_PI_4 + m * d * d / (2.0 * tau),
    ))
}

/// Full 4D coordinate kernel: time factor x three space factors x the rest
/// phase e^{-i m tau / 2}. Prefactor at zero separation is
/// -i m^2 / (4 pi^2 tau^2) e^{-i m tau / 2}.
pub fn kernel_spacetime(dt: f64, dr: [f64; 3], m: f64, tau: f64) -> Result<Complex64> {
    let mut k = kernel_time(dt, 0.0, m, tau)?;
    for &dx in &dr {
        k *= kernel_space(dx, 0.0, m, tau)?;
    }
    Ok(k * Complex64::from_polar(1.0, -m * tau / 2.0))
}

/// Parameter bundle for the coordinate kernels: a mass (or, for collimated
/// beams, the mean beam energy) and a clock interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FstKernel {
    pub mass_or_energy: f64,
    pub tau: f64,
}

impl FstKernel {
    pub fn new(mass_or_energy: f64, tau: f64) -> Result<Self> {
        if mass_or_energy <= 0.0 {
            return Err(TqmError::NonPositiveMass(mass_or_energy));
        }
        if tau < 0.0 {
            return Err(TqmError::NonPositiveTau(tau));
        }
        Ok(Self { mass_or_energy, tau })
    }

    pub fn momentum(&self, k: &FourMomentum) -> Result<Complex64> {
        kernel_momentum(k, self.mass_or_energy, self.tau)
    }

    pub fn time(&self, t2: f64, t1: f64) -> Result<Complex64> {
        kernel_time(t2, t1, self.mass_or_energy, self.tau)
    }

    pub fn evolve(&self, p: &GaussianPacket, e0: f64) -> Result<EvolvedPacket> {
        evolve_gtf(p, self.mass_or_energy, e0, self.tau)
    }
}

/// A Gaussian evolved for clock time tau: complex dilation f_tau, center
/// drift, and global phase. `base` keeps the initial-time parameters (with
/// the carrier set to the evolution's E0); the evolved center is
/// `base.center + drift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolvedPacket {
    pub base: GaussianPacket,
    pub f_tau: Complex64,
    pub drift: f64,
    pub phase: Complex64,
    pub tau: f64,
    mass: f64,
    inertia: f64,
}

impl EvolvedPacket {
    pub fn center(&self) -> f64 {
        self.base.center + self.drift
    }

    /// Density spread sigma_tau^2 = sigma^2 (1 + tau^2 / (inertia^2 sigma^4)).
    /// The density is (pi sigma_tau^2)^{-1/2} e^{-(t-c)^2 / sigma_tau^2}.
    pub fn spread_sigma2(&self) -> f64 {
        let s2 = self.base.sigma * self.base.sigma;
        s2 * (1.0 + self.tau * self.tau / (self.inertia * self.inertia * s2 * s2))
    }

    pub fn amplitude(&self, t: f64) -> Complex64 {
        let s2 = self.base.sigma * self.base.sigma;
        let norm = (PI * s2).powf(-0.25);
        let d = t - self.center();
        let carrier = Complex64::from_polar(1.0, -self.base.carrier * t);
        let envelope = (-(d * d) / (2.0 * s2 * self.f_tau)).exp();
        norm / self.f_tau.sqrt() * self.phase * carrier * envelope
    }

    pub fn density(&self, t: f64) -> f64 {
        self.amplitude(t).norm_sqr()
    }

    /// Extend the evolution by `extra_tau` through the composition law
    /// f_{a+b} = f_a + f_b - 1, with drifts and phases adding.
    pub fn then(&self, extra_tau: f64) -> Result<EvolvedPacket> {
        let fresh = evolve_gtf_with_inertia(
            &self.base,
            self.mass,
            self.base.carrier,
            extra_tau,
            self.inertia,
        )?;
        Ok(EvolvedPacket {
            base: self.base,
            f_tau: self.f_tau + fresh.f_tau - Complex64::new(1.0, 0.0),
            drift: self.drift + fresh.drift,
            phase: self.phase * fresh.phase,
            tau: self.tau + extra_tau,
            mass: self.mass,
            inertia: self.inertia,
        })
    }
}

/// Closed-form free evolution of a time-domain Gaussian:
/// f_tau = 1 - i tau/(m sigma^2), drift (E0/m) tau, phase e^{i E0^2 tau / 2m}.
/// The packet's carrier is taken from the explicit E0 argument.
pub fn evolve_gtf(p: &GaussianPacket, m: f64, e0: f64, tau: f64) -> Result<EvolvedPacket> {
    evolve_gtf_with_inertia(p, m, e0, tau, m)
}

/// Same, but with the spread-formula mass decoupled: nonrelativistically the
/// spread may be written with E0 in place of m, and the two agree to O(E0/m - 1).
pub fn evolve_gtf_with_inertia(
    p: &GaussianPacket,
    m: f64,
    e0: f64,
    tau: f64,
    inertia: f64,
) -> Result<EvolvedPacket> {
    if p.domain != Domain::Time {
        return Err(TqmError::WrongDomain { expected: Domain::Time.name(), found: p.domain.name() });
    }
    if m <= 0.0 {
        return Err(TqmError::NonPositiveMass(m));
    }
    if inertia <= 0.0 {
        return Err(TqmError::NonPositiveMass(inertia));
    }
    let s2 = p.sigma * p.sigma;
    let base = GaussianPacket { carrier: e0, ..*p };
    Ok(EvolvedPacket {
        base,
        f_tau: Complex64::new(1.0, -tau / (m * s2)),
        drift: e0 / m * tau,
        phase: Complex64::from_polar(1.0, e0 * e0 * tau / (2.0 * m)),
        tau,
        mass: m,
        inertia,
    })
}

/// Result of the collimated-beam kernel: a pure phase plus a flag raised
/// when |E - mean_E| >= 0.3 mean_E, outside the expansion's design band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollimatedKernel {
    pub value: Complex64,
    pub out_of_band: bool,
}

/// Quadratic-in-energy kernel for a beam of mean energy mean_E:
/// exp(i [A + B dE + C dE^2] tau) with dE = E - mean_E and
/// A = (Ebar^2 - m^2)/2Ebar, B = (Ebar^2 + m^2)/2Ebar^2, C = -m^2/2Ebar^3 —
/// the second-order expansion of (E^2 - m^2)/2E about Ebar.
pub fn collimated_kernel(
    k: &FourMomentum,
    m: f64,
    mean_e: f64,
    tau: f64,
) -> Result<CollimatedKernel> {
    if mean_e <= 0.0 {
        return Err(TqmError::NonPositiveMass(mean_e));
    }
    if tau < 0.0 {
        return Ok(CollimatedKernel { value: Complex64::new(0.0, 0.0), out_of_band: false });
    }
    let de = k.e - mean_e;
    let a = (mean_e * mean_e - m * m) / (2.0 * mean_e);
    let b = (mean_e * mean_e + m * m) / (2.0 * mean_e * mean_e);
    let c = -m * m / (2.0 * mean_e * mean_e * mean_e);
    let rate = a + b * de + c * de * de;
    Ok(CollimatedKernel {
        value: Complex64::from_polar(1.0, rate * tau),
        out_of_band: de.abs() >= 0.3 * mean_e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;

    #[test]
    fn clock_frequency_vanishes_on_shell() {
        for &(m, p) in &[
            (1.0, [0.0, 0.0, 0.0]),
            (0.5, [0.3, -0.2, 0.9]),
            (511e3, [1e3, 2e3, 3e3]),
        ] {
            let k = FourMomentum::on_shell(m, p);
            let w = clock_frequency(&k, m).unwrap();
            assert!(w.abs() < 1e-9 * m, "m={m}: {w}");
        }
        let rest = FourMomentum::new(2.5, [0.0; 3]);
        assert_eq!(clock_frequency(&rest, 2.5).unwrap(), 0.0);
    }

    #[test]
    fn clock_frequency_off_shell_arithmetic() {
        // m = 511 keV, E = m + 1 eV, p = 0:
        // w = -(2m + 1)/(2(m + 1)) with the shared factor delta = 1 eV.
        let m = 511_000.0;
        let k = FourMomentum::new(m + 1.0, [0.0; 3]);
        let w = clock_frequency(&k, m).unwrap();
        let expected = -(2.0 * m + 1.0) / (2.0 * (m + 1.0));
        assert!((w - expected).abs() < 1e-12, "{w} vs {expected}");
    }

    #[test]
    fn clock_frequency_zero_energy_errors() {
        let k = FourMomentum::new(0.0, [1.0, 0.0, 0.0]);
        assert!(matches!(clock_frequency(&k, 1.0), Err(TqmError::ZeroEnergy)));
    }

    #[test]
    fn momentum_kernel_is_unit_modulus() {
        let m = 1.0;
        let k0 = FourMomentum::new(1.7, [0.4, -1.1, 0.2]);
        assert_eq!(kernel_momentum(&k0, m, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        let on = FourMomentum::on_shell(m, [0.3, 0.1, -0.2]);
        for &tau in &[0.1, 1.0, 10.0] {
            let v = kernel_momentum(&on, m, tau).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
        for &(e, px) in &[(0.2, 0.9), (3.0, 0.1), (-1.5, 0.7)] {
            let k = FourMomentum::new(e, [px, 0.0, 0.0]);
            let v = kernel_momentum(&k, m, 2.3).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
        assert_eq!(
            kernel_momentum(&k0, m, -1.0).unwrap(),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn time_kernel_is_symmetric() {
        let k12 = kernel_time(1.3, -0.4, 2.0, 0.7).unwrap();
        let k21 = kernel_time(-0.4, 1.3, 2.0, 0.7).unwrap();
        assert_eq!(k12, k21);
    }

    #[test]
    fn time_kernel_delta_limit_refused() {
        assert!(matches!(kernel_time(1.0, 0.0, 1.0, 0.0), Err(TqmError::DeltaLimit)));
    }

    #[test]
    fn time_kernel_phase_is_classical_action() {
        // arg(K) + m d^2/2tau = pi/4: the stationary phase is the free
        // action in the time coordinate, the constant offset the Fresnel
        // prefactor's.
        for &(d, tau) in &[(0.5, 1.0), (2.0, 0.3), (0.0, 5.0)] {
            let m = 1.3;
            let k = kernel_time(d, 0.0, m, tau).unwrap();
            let residual = k * Complex64::from_polar(1.0, m * d * d / (2.0 * tau));
            assert!((residual.arg() - FRAC_PI_4).abs() < 1e-12);
            assert!((k.norm() - (m / (2.0 * PI * tau)).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn spacetime_kernel_prefactor() {
        // At zero separation the 4D kernel is -i m^2/(4 pi^2 tau^2) e^{-i m tau/2}.
        let (m, tau) = (1.4, 0.9);
        let k = kernel_spacetime(0.0, [0.0; 3], m, tau).unwrap();
        let mag = m * m / (4.0 * PI * PI * tau * tau);
        let expected =
            Complex64::new(0.0, -mag) * Complex64::from_polar(1.0, -m * tau / 2.0);
        assert!((k - expected).norm() < 1e-12 * mag);
    }

    #[test]
    fn evolve_identity_at_zero_tau() {
        let p = GaussianPacket::new(Domain::Time, 0.3, 0.0, 1.2).unwrap();
        let ev = evolve_gtf(&p, 1.0, 0.8, 0.0).unwrap();
        assert_eq!(ev.f_tau, Complex64::new(1.0, 0.0));
        assert_eq!(ev.drift, 0.0);
        assert_eq!(ev.phase, Complex64::new(1.0, 0.0));
        assert_eq!(ev.spread_sigma2(), p.sigma * p.sigma);
    }

    #[test]
    fn evolve_requires_time_domain() {
        let p = GaussianPacket::new(Domain::Energy, 0.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            evolve_gtf(&p, 1.0, 0.0, 1.0),
            Err(TqmError::WrongDomain { .. })
        ));
    }

    #[test]
    fn spread_grows_as_stated() {
        let (m, sigma) = (1.0, 0.8);
        let p = GaussianPacket::new(Domain::Time, 0.0, 0.0, sigma).unwrap();
        for &tau in &[0.0, 0.2, 1.0, 4.0] {
            let ev = evolve_gtf(&p, m, m, tau).unwrap();
            let s2 = sigma * sigma;
            let expected = s2 * (1.0 + tau * tau / (m * m * s2 * s2));
            assert!((ev.spread_sigma2() - expected).abs() < 1e-12);
            // |f_tau|^2 carries the same growth.
            assert!((ev.f_tau.norm_sqr() * s2 - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn spread_is_even_and_monotone_in_tau() {
        let p = GaussianPacket::new(Domain::Time, 0.0, 0.0, 1.1).unwrap();
        let spread = |tau: f64| evolve_gtf(&p, 0.9, 0.9, tau).unwrap().spread_sigma2();
        let mut last = spread(0.0);
        for &tau in &[0.1, 0.5, 1.0, 2.0, 8.0] {
            let s = spread(tau);
            assert!((s - spread(-tau)).abs() < 1e-15);
            assert!(s >= last);
            last = s;
        }
    }

    #[test]
    fn inertia_override_agrees_nonrelativistically() {
        let p = GaussianPacket::new(Domain::Time, 0.0, 0.0, 1.0).unwrap();
        let (m, tau) = (1.0, 2.0);
        let e0 = m * (1.0 + 1e-6);
        let with_m = evolve_gtf(&p, m, e0, tau).unwrap().spread_sigma2();
        let with_e0 = evolve_gtf_with_inertia(&p, m, e0, tau, e0).unwrap().spread_sigma2();
        assert!((with_m - with_e0).abs() / with_m < 1e-5);
    }

    #[test]
    fn evolved_density_matches_closed_form() {
        let p = GaussianPacket::new(Domain::Time, 0.2, 0.0, 1.0).unwrap();
        let ev = evolve_gtf(&p, 1.0, 0.7, 0.8).unwrap();
        let s_tau2 = ev.spread_sigma2();
        let c = ev.center();
        for &t in &[c - 2.0, c - 0.5, c, c + 1.0, c + 3.0] {
            let closed = (PI * s_tau2).sqrt().recip() * (-(t - c) * (t - c) / s_tau2).exp();
            assert!((ev.density(t) - closed).abs() < 1e-12);
        }
    }

    #[test]
    fn evolved_norm_is_one() {
        let p = GaussianPacket::new(Domain::Time, -0.4, 0.0, 0.7).unwrap();
        let ev = evolve_gtf(&p, 1.3, 2.0, 1.7).unwrap();
        let c = ev.center();
        let half = 12.0 * ev.spread_sigma2().sqrt();
        let norm = quad::integrate(|t| ev.density(t), c - half, c + half, 1e-12, 1e-12).unwrap();
        assert!((norm - 1.0).abs() < 1e-9, "norm {norm}");
    }

    #[test]
    fn composition_law_on_parameters() {
        // Two-step evolution equals one-step on (f_tau, drift, phase):
        // f_{a+b} = f_a + f_b - 1 since f is affine in tau.
        let p = GaussianPacket::new(Domain::Time, 0.1, 0.0, 1.4).unwrap();
        let (m, e0) = (0.8, 1.1);
        let (ta, tb) = (0.6, 1.9);
        let ev_a = evolve_gtf(&p, m, e0, ta).unwrap();
        let ev_b = evolve_gtf(&p, m, e0, tb).unwrap();
        let ev_ab = evolve_gtf(&p, m, e0, ta + tb).unwrap();
        let f_composed = ev_a.f_tau + ev_b.f_tau - Complex64::new(1.0, 0.0);
        assert!((f_composed - ev_ab.f_tau).norm() < 1e-12);
        assert!((ev_a.drift + ev_b.drift - ev_ab.drift).abs() < 1e-12);
        assert!((ev_a.phase * ev_b.phase - ev_ab.phase).norm() < 1e-12);
    }

    #[test]
    fn kernel_convolution_reproduces_evolution() {
        // Quadrature of K_tau(t, t') psi_0(t') against the closed form.
        let (m, e0, tau) = (1.0, 0.7, 0.8);
        let p = GaussianPacket::new(Domain::Time, 0.2, e0, 1.0).unwrap();
        let ev = evolve_gtf(&p, m, e0, tau).unwrap();
        let c = ev.center();
        let s_tau = ev.spread_sigma2().sqrt();
        let (lo, hi) = (p.center - 14.0, p.center + 14.0);
        let mut max_err: f64 = 0.0;
        for &t in &[c - 2.0 * s_tau, c - s_tau, c, c + 0.5 * s_tau, c + 2.0 * s_tau] {
            let numeric = quad::integrate_complex(
                |t1| kernel_time(t, t1, m, tau).unwrap() * p.amplitude(t1),
                lo,
                hi,
                1e-10,
                1e-10,
            )
            .unwrap();
            max_err = max_err.max((numeric - ev.amplitude(t)).norm());
        }
        assert!(max_err < 1e-6, "max error {max_err:.3e}");
    }

    #[test]
    fn collimated_leading_term_and_modulus() {
        let (m, mean_e, tau) = (1.0, 1.6, 0.9);
        let k = FourMomentum::new(mean_e, [0.0; 3]);
        let out = collimated_kernel(&k, m, mean_e, tau).unwrap();
        let a = (mean_e * mean_e - m * m) / (2.0 * mean_e);
        assert!((out.value - Complex64::from_polar(1.0, a * tau)).norm() < 1e-12);
        assert!(!out.out_of_band);
        for &de in &[-0.2, 0.05, 0.25] {
            let k = FourMomentum::new(mean_e + de, [0.0; 3]);
            let v = collimated_kernel(&k, m, mean_e, tau).unwrap();
            assert!((v.value.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn collimated_flags_wide_energies() {
        let mean_e = 2.0;
        let near = FourMomentum::new(mean_e * 1.29, [0.0; 3]);
        let wide = FourMomentum::new(mean_e * 1.31, [0.0; 3]);
        assert!(!collimated_kernel(&near, 1.0, mean_e, 1.0).unwrap().out_of_band);
        assert!(collimated_kernel(&wide, 1.0, mean_e, 1.0).unwrap().out_of_band);
    }

    #[test]
    fn collimated_error_shrinks_cubically() {
        // Against the exact rest-frame rate (E^2 - m^2)/2E: halving dE
        // divides the phase-rate error by about eight.
        let (m, mean_e) = (1.0, 1.001);
        let exact = |e: f64| (e * e - m * m) / (2.0 * e);
        let quadratic = |de: f64| {
            let a = (mean_e * mean_e - m * m) / (2.0 * mean_e);
            let b = (mean_e * mean_e + m * m) / (2.0 * mean_e * mean_e);
            let c = -m * m / (2.0 * mean_e * mean_e * mean_e);
            a + b * de + c * de * de
        };
        let err = |de: f64| (exact(mean_e + de) - quadratic(de)).abs();
        let ratio = err(1e-3) / err(5e-4);
        assert!((7.0..9.0).contains(&ratio), "ratio {ratio}");

        // And the kernel itself agrees with the exact p = 0 phase there.
        let tau = 1.0;
        let k = FourMomentum::new(mean_e + 1e-4, [0.0; 3]);
        let approx = collimated_kernel(&k, m, mean_e, tau).unwrap().value;
        let exact_phase = Complex64::from_polar(1.0, exact(mean_e + 1e-4) * tau);
        assert!((approx - exact_phase).norm() < 1e-11);
    }

    #[test]
    fn kernel_bundle_validates() {
        assert!(FstKernel::new(0.0, 1.0).is_err());
        assert!(FstKernel::new(1.0, -0.5).is_err());
        let k = FstKernel::new(1.0, 0.5).unwrap();
        let p = GaussianPacket::new(Domain::Time, 0.0, 0.0, 1.0).unwrap();
        let ev = k.evolve(&p, 1.0).unwrap();
        assert!((ev.drift - 0.5).abs() < 1e-15);
    }
}
