//! Physical constants and the unit conversions used by the presentation
//! layer. Internal computations are in natural units (hbar = c = 1); these
//! helpers move values between eV, attoseconds, picometers, femtometers and
//! yoctoseconds at the boundaries.

use serde::{Deserialize, Serialize};

use crate::error::{Result, TqmError};

/// Inverse fine-structure constant.
pub const ALPHA_INV: f64 = 137.035_999;
/// Fine-structure constant.
pub const ALPHA: f64 = 1.0 / ALPHA_INV;
/// Electron mass in eV.
pub const M_E_EV: f64 = 510_998.95;
/// hbar in eV * attoseconds.
pub const HBAR_EV_AS: f64 = 658.211_956_9;
/// hbar in MeV * yoctoseconds — numerically identical to eV * as.
pub const HBAR_MEV_YS: f64 = HBAR_EV_AS;
/// Speed of light in picometers per attosecond (numerically equal to
/// femtometers per 10 yoctoseconds: 0.299792458 fm/ys).
pub const C_PM_PER_AS: f64 = 299.792_458;
/// Speed of light in femtometers per yoctosecond.
pub const C_FM_PER_YS: f64 = 0.299_792_458;
/// hbar * c in eV * picometers.
pub const HBAR_C_EV_PM: f64 = HBAR_EV_AS * C_PM_PER_AS;
/// hbar * c in MeV * femtometers (1 eV*pm = 1e-3 MeV*fm).
pub const HBAR_C_MEV_FM: f64 = HBAR_C_EV_PM * 1e-3;
/// Bohr radius in picometers, derived from alpha and the electron mass.
pub const A0_PM: f64 = HBAR_C_EV_PM / (ALPHA * M_E_EV);
/// Bohr time (light travel time across the Bohr radius) in attoseconds.
pub const A0_AS: f64 = A0_PM / C_PM_PER_AS;
/// Proton charge radius in femtometers.
pub const PROTON_RADIUS_FM: f64 = 0.841;

/// Light travel time across the Bohr radius, in attoseconds.
pub fn bohr_time_as() -> f64 {
    HBAR_EV_AS / (ALPHA * M_E_EV)
}

/// The constant set as one value, convenient for tabular output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub m_e: f64,
    pub hbar_ev_as: f64,
    pub a0_pm: f64,
    pub a0_as: f64,
    pub proton_radius_fm: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            alpha: ALPHA,
            m_e: M_E_EV,
            hbar_ev_as: HBAR_EV_AS,
            a0_pm: A0_PM,
            a0_as: A0_AS,
            proton_radius_fm: PROTON_RADIUS_FM,
        }
    }
}

impl PhysicalConstants {
    /// (name, value, unit) rows in a fixed order.
    pub fn table(&self) -> Vec<(&'static str, f64, &'static str)> {
        vec![
            ("alpha", self.alpha, "dimensionless"),
            ("m_e", self.m_e, "eV"),
            ("hbar_eV_as", self.hbar_ev_as, "eV*as"),
            ("a0_pm", self.a0_pm, "pm"),
            ("a0_as", self.a0_as, "as"),
            ("proton_radius_fm", self.proton_radius_fm, "fm"),
        ]
    }
}

/// Units supported by [`convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Ev,
    As,
    Pm,
    Fm,
    Ys,
}

impl Unit {
    pub fn label(self) -> &'static str {
        match self {
            Unit::Ev => "eV",
            Unit::As => "as",
            Unit::Pm => "pm",
            Unit::Fm => "fm",
            Unit::Ys => "ys",
        }
    }
}

/// Convert between the supported unit pairs. Each pair is an involution, so
/// converting back recovers the input exactly up to rounding:
///
/// * eV <-> as: conjugate uncertainty pair, t = hbar / (2 E) — the duration
///   whose energy uncertainty is E.
/// * pm <-> as and fm <-> ys: light travel time, t = l / c.
/// * eV <-> pm: reciprocal length scale, l = hbar c / E.
pub fn convert(value: f64, from: Unit, to: Unit) -> Result<f64> {
    use Unit::*;
    match (from, to) {
        (Ev, As) | (As, Ev) => Ok(HBAR_EV_AS / (2.0 * value)),
        (Pm, As) => Ok(value / C_PM_PER_AS),
        (As, Pm) => Ok(value * C_PM_PER_AS),
        (Fm, Ys) => Ok(value / C_FM_PER_YS),
        (Ys, Fm) => Ok(value * C_FM_PER_YS),
        (Ev, Pm) | (Pm, Ev) => Ok(HBAR_C_EV_PM / value),
        (from, to) => Err(TqmError::UnsupportedUnits {
            from: from.label(),
            to: to.label(),
        }),
    }
}
