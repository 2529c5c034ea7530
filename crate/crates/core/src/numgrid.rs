//! Lattice oracle engine: packets sampled on a uniform time grid, stepped in
//! clock time by exact per-bin spectral phases (split-step with zero
//! potential), an O(n^2) real-space kernel convolution kept as a slow second
//! oracle, convergence sweeps, a pinned grid-vs-analytic test matrix, and the
//! off-shell suppression scale.
//!
//! Spectral conventions: analysis is the unscaled inverse DFT (e^{+iEt}),
//! synthesis the forward DFT over n; bin energies are 2 pi k / (n dt) with
//! signed k. The free-step multiplier e^{+i E^2 epsilon / 2m} is diagonal,
//! so the grid origin t_min never enters a step.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::constants::HBAR_EV_AS;
use crate::error::{Result, TqmError};
use crate::freeprop::{evolve_gtf, kernel_time};
use crate::wavepacket::{Domain, GaussianPacket};

/// Immutable sampled state on a uniform lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    pub samples: Vec<Complex64>,
    pub t_min: f64,
    pub dt: f64,
}

fn valid_grid_size(n: usize) -> bool {
    n >= 16 && n.is_power_of_two()
}

impl GridState {
    pub fn new(samples: Vec<Complex64>, t_min: f64, dt: f64) -> Result<Self> {
        if !valid_grid_size(samples.len()) {
            return Err(TqmError::BadGridSize(samples.len()));
        }
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(TqmError::BadGridStep(dt));
        }
        Ok(Self { samples, t_min, dt })
    }

    pub fn n(&self) -> usize {
        self.samples.len()
    }

    pub fn time(&self, i: usize) -> f64 {
        self.t_min + i as f64 * self.dt
    }

    /// Discrete L2 norm: sum |psi|^2 dt.
    pub fn norm(&self) -> f64 {
        self.samples.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.dt
    }

    /// Signed-bin energies matching the analysis convention.
    pub fn energy(&self, k: usize) -> f64 {
        let n = self.n();
        let k_signed = if k < n / 2 { k as isize } else { k as isize - n as isize };
        2.0 * PI * k_signed as f64 / (n as f64 * self.dt)
    }
}

/// Where and how finely to sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub center: f64,
    pub half_span: f64,
    pub n: usize,
}

impl GridSpec {
    /// Sizing rule: span covers 8 sigma plus 8x the drift and the evolved
    /// spread; n puts the carrier below a quarter of the Nyquist energy and
    /// resolves the packet bandwidth.
    pub fn auto(p: &GaussianPacket, m: f64, e0: f64, tau: f64) -> Result<GridSpec> {
        let ev = evolve_gtf(p, m, e0, tau)?;
        let half_span =
            8.0 * p.sigma + 8.0 * ev.drift.abs() + 8.0 * ev.spread_sigma2().sqrt();
        let e_max = (4.0 * e0.abs()).max(e0.abs() + 10.0 / p.sigma);
        let dt_max = PI / e_max;
        let mut n = ((2.0 * half_span / dt_max).ceil() as usize).next_power_of_two();
        if n < 16 {
            n = 16;
        }
        Ok(GridSpec { center: p.center, half_span, n })
    }
}

/// Pointwise evaluation of a packet on the lattice. The grid must cover
/// +/- 8 sigma around the packet's hump.
pub fn sample_packet(p: &GaussianPacket, spec: &GridSpec) -> Result<GridState> {
    if !valid_grid_size(spec.n) {
        return Err(TqmError::BadGridSize(spec.n));
    }
    let needed = (p.hump() - spec.center).abs() + 8.0 * p.sigma;
    if spec.half_span < needed {
        return Err(TqmError::GridTooSmall { span: spec.half_span, needed });
    }
    let dt = 2.0 * spec.half_span / spec.n as f64;
    let t_min = spec.center - spec.half_span;
    let samples = (0..spec.n)
        .map(|j| p.amplitude(t_min + j as f64 * dt))
        .collect();
    GridState::new(samples, t_min, dt)
}

/// One exact free step, plus a flag raised when spectral mass sits within
/// two bins of the Nyquist energy (fraction above 1e-6): the step itself is
/// still unitary, but densities can no longer be trusted to 1e-6.
#[derive(Debug, Clone, PartialEq)]
pub struct StepResult {
    pub state: GridState,
    pub aliased: bool,
}

/// Advance one clock tick of size epsilon: analysis FFT, per-bin phase
/// e^{+i E^2 epsilon / 2m}, synthesis FFT. Exact for the free case at any
/// epsilon; errors are purely sampling and aliasing.
pub fn step_once(s: &GridState, m: f64, epsilon: f64) -> Result<StepResult> {
    if m <= 0.0 {
        return Err(TqmError::NonPositiveMass(m));
    }
    if !(epsilon > 0.0) {
        return Err(TqmError::NonPositiveTau(epsilon));
    }
    let n = s.n();
    let mut planner = FftPlanner::new();
    let mut buf = s.samples.clone();
    planner.plan_fft_inverse(n).process(&mut buf);

    let total: f64 = buf.iter().map(|a| a.norm_sqr()).sum();
    let edge: f64 = (0..n)
        .filter(|&k| {
            let k_signed = if k < n / 2 { k as isize } else { k as isize - n as isize };
            k_signed.unsigned_abs() >= n / 2 - 2
        })
        .map(|k| buf[k].norm_sqr())
        .sum();
    let aliased = total > 0.0 && edge / total > 1e-6;

    for k in 0..n {
        let e = s.energy(k);
        buf[k] *= Complex64::from_polar(1.0, e * e * epsilon / (2.0 * m));
    }
    planner.plan_fft_forward(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    for a in buf.iter_mut() {
        *a *= scale;
    }
    Ok(StepResult {
        state: GridState { samples: buf, t_min: s.t_min, dt: s.dt },
        aliased,
    })
}

/// Slow second oracle: direct Riemann convolution with the coordinate-space
/// kernel. O(n^2); meant for small step counts to validate the Fresnel
/// normalization independently of the spectral path.
pub fn step_reference(s: &GridState, m: f64, epsilon: f64) -> Result<GridState> {
    if !(epsilon > 0.0) {
        return Err(TqmError::NonPositiveTau(epsilon));
    }
    let n = s.n();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    // Kernel depends only on the index difference; precompute both signs.
    let mut kern = vec![Complex64::new(0.0, 0.0); n];
    for (d, k) in kern.iter_mut().enumerate() {
        *k = kernel_time(d as f64 * s.dt, 0.0, m, epsilon)?;
    }
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &a) in s.samples.iter().enumerate() {
            acc += kern[i.abs_diff(j)] * a;
        }
        *o = acc * s.dt;
    }
    GridState::new(out, s.t_min, s.dt)
}

/// Lattice error against the closed form, per step count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub steps: Vec<(usize, f64)>,
    pub order_estimate: f64,
}

/// Propagate to tau in N slices for each N in the list and measure the max
/// pointwise density error against the closed form. The free step is exact
/// per slice, so the error is flat in N (order near zero) — that flatness
/// is the point of the sweep.
pub fn convergence_study(
    p: &GaussianPacket,
    m: f64,
    tau: f64,
    n_list: &[usize],
) -> Result<ConvergenceReport> {
    if n_list.is_empty() || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(TqmError::BadStepList);
    }
    let e0 = p.carrier;
    let spec = GridSpec::auto(p, m, e0, tau)?;
    let analytic = evolve_gtf(p, m, e0, tau)?;
    let mut steps = Vec::with_capacity(n_list.len());
    for &n_steps in n_list {
        let mut state = sample_packet(p, &spec)?;
        let eps = tau / n_steps as f64;
        for _ in 0..n_steps {
            state = step_once(&state, m, eps)?.state;
        }
        let mut err: f64 = 0.0;
        for i in 0..state.n() {
            let t = state.time(i);
            err = err.max((state.samples[i].norm_sqr() - analytic.density(t)).abs());
        }
        steps.push((n_steps, err));
    }
    // Log-log slope; order_estimate > 0 means error shrinking with N.
    let pts: Vec<(f64, f64)> = steps
        .iter()
        .map(|&(n, e)| ((n as f64).ln(), e.max(1e-300).ln()))
        .collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let cov: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let var: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let order_estimate = if var > 0.0 { -cov / var } else { 0.0 };
    Ok(ConvergenceReport { steps, order_estimate })
}

/// hbar / tau in eV for tau in attoseconds: energy offsets much beyond this
/// are wound through many radians per tick and cancel.
pub fn suppression_scale(tau_as: f64) -> Result<f64> {
    if !(tau_as > 0.0) {
        return Err(TqmError::NonPositiveTau(tau_as));
    }
    Ok(HBAR_EV_AS / tau_as)
}

/// e^{-i w tau / hbar} for a mode detuned by delta_w from the on-shell
/// frequency kappa: w = ((kappa + delta_w)^2 - kappa^2) / (2 kappa) exactly.
/// Energies in eV, tau in attoseconds.
pub fn suppression_factor(delta_w: f64, kappa: f64, tau_as: f64) -> Result<Complex64> {
    if kappa <= 0.0 {
        return Err(TqmError::NonPositiveMass(kappa));
    }
    let w = ((kappa + delta_w) * (kappa + delta_w) - kappa * kappa) / (2.0 * kappa);
    Ok(Complex64::from_polar(1.0, -w * tau_as / HBAR_EV_AS))
}

/// One pinned grid-vs-analytic case: sigma in natural time units, tau as a
/// multiple of the dispersion time m sigma^2, with m = E0 = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropagationCase {
    pub sigma: f64,
    pub tau_over_dispersion: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub grid_n: usize,
    pub steps: usize,
    pub max_error: f64,
    pub max_norm_drift: f64,
    pub passed: bool,
}

/// The pinned matrix: sigma in {0.5, 1, 2} x tau/(m sigma^2) in {0.1, 1, 5}.
pub fn propagation_cases() -> Vec<PropagationCase> {
    let mut cases = Vec::new();
    for &sigma in &[0.5, 1.0, 2.0] {
        for &f in &[0.1, 1.0, 5.0] {
            cases.push(PropagationCase { sigma, tau_over_dispersion: f });
        }
    }
    cases
}

pub fn run_propagation_case(case: &PropagationCase) -> Result<CaseReport> {
    let (m, e0) = (1.0, 1.0);
    let steps = 8usize;
    let tau = case.tau_over_dispersion * m * case.sigma * case.sigma;
    let p = GaussianPacket::new(Domain::Time, 0.0, e0, case.sigma)?;
    let spec = GridSpec::auto(&p, m, e0, tau)?;
    let analytic = evolve_gtf(&p, m, e0, tau)?;

    let mut state = sample_packet(&p, &spec)?;
    let mut norm = state.norm();
    let mut max_norm_drift: f64 = 0.0;
    let eps = tau / steps as f64;
    for _ in 0..steps {
        state = step_once(&state, m, eps)?.state;
        let next = state.norm();
        max_norm_drift = max_norm_drift.max((next - norm).abs());
        norm = next;
    }
    let mut max_error: f64 = 0.0;
    for i in 0..state.n() {
        let t = state.time(i);
        max_error = max_error.max((state.samples[i].norm_sqr() - analytic.density(t)).abs());
    }
    Ok(CaseReport {
        case: format!("sigma={} tau={}m*sigma^2", case.sigma, case.tau_over_dispersion),
        grid_n: state.n(),
        steps,
        max_error,
        max_norm_drift,
        passed: max_error < 1e-6 && max_norm_drift < 1e-9,
    })
}

/// Run the whole matrix in parallel; report order matches case order.
pub fn run_propagation_matrix() -> Result<Vec<CaseReport>> {
    propagation_cases()
        .par_iter()
        .map(run_propagation_case)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_packet(sigma: f64) -> GaussianPacket {
        GaussianPacket::new(Domain::Time, 0.0, 1.0, sigma).unwrap()
    }

    #[test]
    fn sampled_norm_is_one() {
        let p = unit_packet(1.0);
        let spec = GridSpec { center: 0.0, half_span: 12.0, n: 4096 };
        let s = sample_packet(&p, &spec).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-8, "norm {}", s.norm());
    }

    #[test]
    fn undersized_grid_rejected() {
        let p = unit_packet(1.0);
        let spec = GridSpec { center: 0.0, half_span: 4.0, n: 1024 };
        assert!(matches!(
            sample_packet(&p, &spec),
            Err(TqmError::GridTooSmall { .. })
        ));
        let degenerate = GridSpec { center: 0.0, half_span: 0.0, n: 1024 };
        assert!(sample_packet(&p, &degenerate).is_err());
    }

    #[test]
    fn bad_grid_sizes_rejected() {
        let p = unit_packet(1.0);
        for n in [0usize, 8, 100] {
            let spec = GridSpec { center: 0.0, half_span: 12.0, n };
            assert!(matches!(sample_packet(&p, &spec), Err(TqmError::BadGridSize(_))));
        }
    }

    #[test]
    fn moment_fit_recovers_parameters() {
        let p = GaussianPacket::new(Domain::Time, 0.7, 2.0, 1.3).unwrap();
        let spec = GridSpec { center: 0.7, half_span: 12.0 * 1.3, n: 4096 };
        let s = sample_packet(&p, &spec).unwrap();
        let w: Vec<f64> = s.samples.iter().map(|a| a.norm_sqr()).collect();
        let total: f64 = w.iter().sum::<f64>() * s.dt;
        let mean: f64 =
            w.iter().enumerate().map(|(i, wi)| s.time(i) * wi).sum::<f64>() * s.dt / total;
        let var: f64 = w
            .iter()
            .enumerate()
            .map(|(i, wi)| (s.time(i) - mean) * (s.time(i) - mean) * wi)
            .sum::<f64>()
            * s.dt
            / total;
        let sigma_fit = (2.0 * var).sqrt();
        assert!((mean - 0.7).abs() < 1e-6, "center {mean}");
        assert!((sigma_fit - 1.3).abs() < 1e-6, "sigma {sigma_fit}");
    }

    #[test]
    fn constant_state_is_fixed_point() {
        // Only the zero-energy bin is populated, and its phase is zero.
        let n = 64;
        let samples = vec![Complex64::new(0.25, -0.1); n];
        let s = GridState::new(samples, -1.0, 0.125).unwrap();
        let out = step_once(&s, 1.0, 0.7).unwrap();
        assert!(!out.aliased);
        let max_diff = s
            .samples
            .iter()
            .zip(&out.state.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(max_diff < 1e-12, "{max_diff}");
    }

    #[test]
    fn step_conserves_norm() {
        let p = unit_packet(1.0);
        let spec = GridSpec::auto(&p, 1.0, 1.0, 1.0).unwrap();
        let mut s = sample_packet(&p, &spec).unwrap();
        let norm0 = s.norm();
        for _ in 0..20 {
            s = step_once(&s, 1.0, 0.05).unwrap().state;
            assert!((s.norm() - norm0).abs() < 1e-9);
        }
    }

    #[test]
    fn grid_matches_closed_form_over_one_dispersion_time() {
        let (m, e0, sigma) = (1.0, 1.0, 1.0);
        let tau = m * sigma * sigma;
        let p = unit_packet(sigma);
        let spec = GridSpec::auto(&p, m, e0, tau).unwrap();
        let analytic = evolve_gtf(&p, m, e0, tau).unwrap();
        let mut state = sample_packet(&p, &spec).unwrap();
        let n_steps = 10;
        for _ in 0..n_steps {
            let out = step_once(&state, m, tau / n_steps as f64).unwrap();
            assert!(!out.aliased);
            state = out.state;
        }
        let mut max_err: f64 = 0.0;
        for i in 0..state.n() {
            let t = state.time(i);
            max_err = max_err.max((state.samples[i].norm_sqr() - analytic.density(t)).abs());
        }
        assert!(max_err < 1e-6, "max density error {max_err:.3e}");
    }

    #[test]
    fn spectral_step_matches_real_space_kernel() {
        // Fresnel-normalization oracle: one slow O(n^2) convolution step
        // against the spectral step, amplitudes pointwise.
        let p = unit_packet(1.0);
        let spec = GridSpec { center: 0.0, half_span: 16.0, n: 1024 };
        let s = sample_packet(&p, &spec).unwrap();
        let eps = 0.3;
        let fast = step_once(&s, 1.0, eps).unwrap().state;
        let slow = step_reference(&s, 1.0, eps).unwrap();
        let max_diff = fast
            .samples
            .iter()
            .zip(&slow.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(max_diff < 1e-6, "spectral vs real-space {max_diff:.3e}");
    }

    #[test]
    fn convergence_study_is_flat_in_step_count() {
        let p = unit_packet(1.0);
        let rep = convergence_study(&p, 1.0, 1.0, &[1, 4, 16, 64]).unwrap();
        assert_eq!(rep.steps.len(), 4);
        for &(_, err) in &rep.steps {
            assert!(err >= 0.0 && err < 1e-6);
        }
        // Exact per-step phases: N = 1 and N = 64 agree up to grid error.
        let e1 = rep.steps[0].1;
        let e64 = rep.steps[3].1;
        assert!((e1 - e64).abs() < 1e-8, "{e1} vs {e64}");
        assert!(rep.order_estimate.abs() < 0.5);
    }

    #[test]
    fn convergence_study_validates_step_list() {
        let p = unit_packet(1.0);
        assert!(matches!(
            convergence_study(&p, 1.0, 1.0, &[]),
            Err(TqmError::BadStepList)
        ));
        assert!(matches!(
            convergence_study(&p, 1.0, 1.0, &[4, 4]),
            Err(TqmError::BadStepList)
        ));
        assert!(matches!(
            convergence_study(&p, 1.0, 1.0, &[8, 2]),
            Err(TqmError::BadStepList)
        ));
    }

    #[test]
    fn denser_grid_reduces_error() {
        // Carrier at 3 with n = 32 over +/-10 puts the spectrum's upper
        // tail past Nyquist; doubling n twice resolves it.
        let (m, e0, sigma, tau) = (1.0, 3.0, 1.0, 1.0);
        let p = GaussianPacket::new(Domain::Time, 0.0, e0, sigma).unwrap();
        let analytic = evolve_gtf(&p, m, e0, tau).unwrap();
        let err_for = |n: usize| {
            let spec = GridSpec { center: 0.0, half_span: 10.0, n };
            let mut state = sample_packet(&p, &spec).unwrap();
            state = step_once(&state, m, tau).unwrap().state;
            let mut err: f64 = 0.0;
            for i in 0..state.n() {
                let t = state.time(i);
                err = err.max((state.samples[i].norm_sqr() - analytic.density(t)).abs());
            }
            err
        };
        let coarse = err_for(32);
        let fine = err_for(128);
        assert!(coarse > 1e-9, "coarse grid unexpectedly converged: {coarse:.3e}");
        assert!(fine < coarse / 10.0, "fine {fine:.3e} vs coarse {coarse:.3e}");
    }

    #[test]
    fn aliasing_is_flagged() {
        // A carrier near Nyquist parks the spectrum at the grid edge.
        let n = 64;
        let dt = 1.0;
        let nyquist = PI / dt;
        let p = GaussianPacket::new(Domain::Time, 0.0, nyquist * 0.98, 4.0).unwrap();
        let samples = (0..n).map(|j| p.amplitude(-32.0 + j as f64 * dt)).collect();
        let s = GridState::new(samples, -32.0, dt).unwrap();
        assert!(step_once(&s, 1.0, 0.1).unwrap().aliased);
    }

    #[test]
    fn pinned_matrix_passes() {
        for report in run_propagation_matrix().unwrap() {
            assert!(
                report.passed,
                "{}: max_error {:.3e}, norm drift {:.3e}",
                report.case, report.max_error, report.max_norm_drift
            );
        }
    }

    #[test]
    fn matrix_is_deterministic_under_parallelism() {
        let serial: Vec<CaseReport> = propagation_cases()
            .iter()
            .map(|c| run_propagation_case(c).unwrap())
            .collect();
        let parallel = run_propagation_matrix().unwrap();
        assert_eq!(serial.len(), parallel.len());
        for (a, b) in serial.iter().zip(&parallel) {
            assert_eq!(a.case, b.case);
            assert_eq!(a.max_error.to_bits(), b.max_error.to_bits());
            assert_eq!(a.max_norm_drift.to_bits(), b.max_norm_drift.to_bits());
        }
    }

    #[test]
    fn suppression_scale_values() {
        let v = suppression_scale(0.177).unwrap();
        assert!((3533.0..4066.0).contains(&v), "{v}");
        let one = suppression_scale(HBAR_EV_AS).unwrap();
        assert_eq!(one, 1.0);
        let half = suppression_scale(2.0 * 0.177).unwrap();
        assert!((half - v / 2.0).abs() < 1e-12);
        assert!(suppression_scale(0.0).is_err());
    }

    #[test]
    fn suppression_factor_properties() {
        let kappa = 100.0;
        let tau = 1.0;
        assert_eq!(
            suppression_factor(0.0, kappa, tau).unwrap(),
            Complex64::new(1.0, 0.0)
        );
        for &dw in &[-40.0, -1.0, 0.3, 25.0] {
            let f = suppression_factor(dw, kappa, tau).unwrap();
            assert!((f.norm() - 1.0).abs() < 1e-12);
        }
        // Exact phase vs the linear approximation delta_w * tau: within 1%
        // for |delta_w| < kappa / 50.
        for &dw in &[-1.9, -0.5, 0.5, 1.9] {
            let exact = suppression_factor(dw, kappa, tau).unwrap().arg();
            let approx = -dw * tau / HBAR_EV_AS;
            assert!(
                ((exact - approx) / approx).abs() < 0.01,
                "dw={dw}: {exact} vs {approx}"
            );
        }
        assert!(suppression_factor(1.0, 0.0, tau).is_err());
    }
}
