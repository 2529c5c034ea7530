//! Bessel function of the first kind, order zero.
//! Power series below the crossover, Hankel asymptotic expansion above;
//! the crossover at |x| = 16 keeps both branches under ~1e-11 absolute error.

use std::f64::consts::{FRAC_PI_4, PI};

const CROSSOVER: f64 = 16.0;

/// J0(x) for any finite real x.
pub fn j0(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= CROSSOVER {
        j0_series(ax)
    } else {
        j0_asymptotic(ax)
    }
}

/// First positive zero of J0, to double precision.
pub const J0_FIRST_ZERO: f64 = 2.404_825_557_695_773;

fn j0_series(x: f64) -> f64 {
    // sum_k (-q)^k / (k!)^2 with q = x^2/4; terms alternate and shrink once
    // k exceeds x/2, so a tail cutoff at machine epsilon is safe.
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= -q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn j0_asymptotic(x: f64) -> f64 {
    // J0(x) ~ sqrt(2/(pi x)) [P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)]
    let inv2 = 1.0 / (x * x);
    let p = 1.0
        + inv2
            * (-0.070_312_5
                + inv2
                    * (0.112_152_099_609_375
                        + inv2 * (-0.572_501_420_974_731_45 + inv2 * 6.074_042_001_273_483)));
    let q = (1.0 / x)
        * (-0.125
            + inv2
                * (0.073_242_187_5
                    + inv2 * (-0.227_108_001_708_984_38 + inv2 * 1.727_727_502_584_457_4)));
    let chi = x - FRAC_PI_4;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}
