//! Adaptive Gauss-Kronrod quadrature over real and complex integrands.
//! G7/K15 rule with QUADPACK-style error rescaling; intervals are bisected
//! worst-first until the summed error estimate meets the tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::{Result, TqmError};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Integrand value: what the rule needs beyond ordinary arithmetic.
pub trait QuadValue: Copy + Add<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn modulus(self) -> f64;
    fn sub(self, rhs: Self) -> Self;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One G7/K15 evaluation on [a, b]: (kronrod value, error estimate).
fn qk15<T: QuadValue, F: Fn(f64) -> T>(f: &F, a: f64, b: f64) -> (T, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);

    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = fc.modulus() * WGK[7];
    let mut fv = [(T::zero(), T::zero()); 7];
    for i in 0..7 {
        let x = half * XGK[i];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[i] = (f1, f2);
        kron = kron + (f1 + f2) * WGK[i];
        if i % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[i / 2];
        }
        res_abs += (f1.modulus() + f2.modulus()) * WGK[i];
    }

    let mean = kron * 0.5;
    let mut res_asc = fc.sub(mean).modulus() * WGK[7];
    for (i, &(f1, f2)) in fv.iter().enumerate() {
        res_asc += (f1.sub(mean).modulus() + f2.sub(mean).modulus()) * WGK[i];
    }
    let err = rescale_error(
        kron.sub(gauss).modulus() * half.abs(),
        res_abs * half.abs(),
        res_asc * half.abs(),
    );
    (kron * half, err)
}

struct Interval<T> {
    err: f64,
    a: f64,
    b: f64,
    val: T,
}

impl<T> PartialEq for Interval<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Interval<T> {}
impl<T> PartialOrd for Interval<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Interval<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

const MAX_INTERVALS: usize = 4096;

/// Adaptive integral of `f` over [a, b]; converges when the summed error
/// estimate drops below `max(eps_abs, eps_rel * |value|)`.
pub fn integrate_value<T: QuadValue, F: Fn(f64) -> T>(
    f: F,
    a: f64,
    b: f64,
    eps_abs: f64,
    eps_rel: f64,
) -> Result<(T, f64)> {
    let (val, err) = qk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Interval { err, a, b, val });

    loop {
        let mut total = T::zero();
        let mut total_err = 0.0;
        for iv in heap.iter() {
            total = total + iv.val;
            total_err += iv.err;
        }
        if total_err <= eps_abs.max(eps_rel * total.modulus()) {
            return Ok((total, total_err));
        }
        if heap.len() >= MAX_INTERVALS {
            return Err(TqmError::QuadratureNonConvergent {
                what: "adaptive G7/K15",
                err: total_err,
            });
        }
        let worst = heap.pop().expect("heap nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(TqmError::QuadratureNonConvergent {
                what: "interval underflow",
                err: worst.err,
            });
        }
        let (lv, le) = qk15(&f, worst.a, mid);
        let (rv, re) = qk15(&f, mid, worst.b);
        heap.push(Interval { err: le, a: worst.a, b: mid, val: lv });
        heap.push(Interval { err: re, a: mid, b: worst.b, val: rv });
    }
}

/// Real-valued adaptive integral over [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, eps_abs: f64, eps_rel: f64) -> Result<f64> {
    integrate_value(f, a, b, eps_abs, eps_rel).map(|(v, _)| v)
}

/// Complex-valued adaptive integral over [a, b].
pub fn integrate_complex<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    eps_abs: f64,
    eps_rel: f64,
) -> Result<Complex64> {
    integrate_value(f, a, b, eps_abs, eps_rel).map(|(v, _)| v)
}

/// Integral of `f` over [0, inf) via the substitution p = u/(1-u).
/// Requires decay at least as fast as p^-2 for the transformed integrand to
/// stay bounded; the rule never samples the endpoints themselves.
pub fn integrate_half_line<F: Fn(f64) -> f64>(f: F, eps_abs: f64, eps_rel: f64) -> Result<f64> {
    integrate(
        |u| {
            let w = 1.0 - u;
            f(u / w) / (w * w)
        },
        0.0,
        1.0,
        eps_abs,
        eps_rel,
    )
}
