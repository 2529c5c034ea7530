//! Dispersion bookkeeping through absorption, emission, relaxation, and
//! resonant scattering, kept as a replayable ledger. Absorption adds the
//! photon's variance, emission subtracts it (and refuses to go negative),
//! relaxation moves the current value toward a target. The relaxation
//! dynamics are a phenomenological stand-in — exponential decay at a
//! configurable rate — since no mechanism is being modeled.

use serde::{Deserialize, Serialize};

use crate::error::{Result, TqmError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScatterEvent {
    Absorb,
    Emit,
    Relax,
    Resonant,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub event: ScatterEvent,
    pub sigma2_in: f64,
    pub sigma2_out: f64,
    pub photon_sigma2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelaxMode {
    Instant,
    Exponential { rate: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelaxationPolicy {
    pub target_sigma2: f64,
    pub mode: RelaxMode,
}

impl RelaxationPolicy {
    pub fn new(target_sigma2: f64, mode: RelaxMode) -> Result<Self> {
        if target_sigma2 < 0.0 {
            return Err(TqmError::NegativeVariance(target_sigma2));
        }
        if let RelaxMode::Exponential { rate } = mode {
            if rate <= 0.0 {
                return Err(TqmError::NonPositiveRate(rate));
            }
        }
        Ok(Self { target_sigma2, mode })
    }

    pub fn instant(target_sigma2: f64) -> Result<Self> {
        Self::new(target_sigma2, RelaxMode::Instant)
    }

    pub fn exponential(target_sigma2: f64, rate: f64) -> Result<Self> {
        Self::new(target_sigma2, RelaxMode::Exponential { rate })
    }

    fn apply(&self, current: f64, elapsed: f64) -> f64 {
        match self.mode {
            RelaxMode::Instant => self.target_sigma2,
            RelaxMode::Exponential { rate } => {
                self.target_sigma2 + (current - self.target_sigma2) * (-rate * elapsed).exp()
            }
        }
    }
}

/// Ordered event history plus the running time variance. Transitions
/// consume and return the ledger; cloning gives an independent branch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispersionLedger {
    pub initial_sigma2: f64,
    pub entries: Vec<LedgerEntry>,
    pub current: f64,
}

impl DispersionLedger {
    pub fn new(initial_sigma2: f64) -> Result<Self> {
        if initial_sigma2 < 0.0 {
            return Err(TqmError::NegativeVariance(initial_sigma2));
        }
        Ok(Self { initial_sigma2, entries: Vec::new(), current: initial_sigma2 })
    }

    fn push(mut self, event: ScatterEvent, out: f64, photon: Option<f64>) -> Self {
        self.entries.push(LedgerEntry {
            event,
            sigma2_in: self.current,
            sigma2_out: out,
            photon_sigma2: photon,
        });
        self.current = out;
        self
    }

    /// Convolution with an incoming photon: variances add.
    pub fn absorb(self, photon_sigma2: f64) -> Result<Self> {
        if photon_sigma2 < 0.0 {
            return Err(TqmError::NegativeVariance(photon_sigma2));
        }
        let out = self.current + photon_sigma2;
        Ok(self.push(ScatterEvent::Absorb, out, Some(photon_sigma2)))
    }

    /// Emission carries variance away — the minus sign is the point. More
    /// than is present is a physical impossibility, reported as an error
    /// rather than clamped.
    pub fn emit(self, photon_sigma2: f64) -> Result<Self> {
        if photon_sigma2 < 0.0 {
            return Err(TqmError::NegativeVariance(photon_sigma2));
        }
        if photon_sigma2 > self.current {
            return Err(TqmError::EmissionUnderflow {
                current: self.current,
                photon: photon_sigma2,
            });
        }
        let out = self.current - photon_sigma2;
        Ok(self.push(ScatterEvent::Emit, out, Some(photon_sigma2)))
    }

    pub fn relax(self, policy: &RelaxationPolicy, elapsed: f64) -> Result<Self> {
        if elapsed < 0.0 {
            return Err(TqmError::NonPositiveTau(elapsed));
        }
        let out = policy.apply(self.current, elapsed);
        Ok(self.push(ScatterEvent::Relax, out, None))
    }

    /// Absorb, dwell (relaxing only if there is a dwell), then emit —
    /// recorded as a single entry. With dwell = 0 this is the plain
    /// two-line composition in + gamma_in - gamma_out.
    pub fn resonant(
        self,
        sigma_gamma_in2: f64,
        sigma_gamma_out2: f64,
        dwell: f64,
        policy: &RelaxationPolicy,
    ) -> Result<Self> {
        if dwell < 0.0 {
            return Err(TqmError::NonPositiveTau(dwell));
        }
        let mut scratch = DispersionLedger::new(self.current)?;
        scratch = scratch.absorb(sigma_gamma_in2)?;
        if dwell > 0.0 {
            scratch = scratch.relax(policy, dwell)?;
        }
        scratch = scratch.emit(sigma_gamma_out2)?;
        let out = scratch.current;
        Ok(self.push(ScatterEvent::Resonant, out, None))
    }

    /// Re-derive the final variance from the entry list, checking every
    /// link: each entry must start where the previous ended, and absorb /
    /// emit outputs must recompute exactly. Relax and resonant replay from
    /// their recorded outputs.
    pub fn replay(&self) -> Result<f64> {
        let mut running = self.initial_sigma2;
        for (step, e) in self.entries.iter().enumerate() {
            if e.sigma2_in != running {
                return Err(TqmError::ReplayMismatch {
                    step,
                    expected: running,
                    found: e.sigma2_in,
                });
            }
            let out = match (e.event, e.photon_sigma2) {
                (ScatterEvent::Absorb, Some(g)) => e.sigma2_in + g,
                (ScatterEvent::Emit, Some(g)) => e.sigma2_in - g,
                _ => e.sigma2_out,
            };
            if out != e.sigma2_out {
                return Err(TqmError::ReplayMismatch {
                    step,
                    expected: out,
                    found: e.sigma2_out,
                });
            }
            running = out;
        }
        Ok(running)
    }
}
