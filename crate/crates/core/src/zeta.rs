//! Nontrivial zeros of ζ on the critical line, at desk scale.
//!
//! Hardy's function `Z(t) = e^{iθ(t)} ζ(½ + it)` is real for real `t`, so
//! zeros on the critical line show up as sign changes of `Z`. ζ itself is
//! evaluated by Euler–Maclaurin summation and θ through the complex
//! log-gamma function, which keeps both valid all the way down to `t = 0`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Upper end of the window in which [`hardy_z`] is trusted.
pub const MAX_T: f64 = 500.0;
/// Largest zero count [`find_zeros`] will attempt.
pub const MAX_COMPUTED_ZEROS: usize = 100;
/// Sign-change scan step; below the smallest gap among the low zeros.
pub const SCAN_STEP: f64 = 0.1;
/// Where the scan starts; the first zero sits near 14.13.
pub const SCAN_START: f64 = 1.0;
/// Bisection stopping width for computed zeros.
pub const BISECTION_TOLERANCE: f64 = 1e-8;

/// One nontrivial zero ½ + iσ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaZero {
    /// 1-based position in ascending order of σ.
    pub index: usize,
    /// Imaginary part σ.
    pub sigma: f64,
    /// Absolute uncertainty bound on `sigma`.
    pub tolerance: f64,
}

impl ZetaZero {
    pub fn new(index: usize, sigma: f64, tolerance: f64) -> Self {
        ZetaZero {
            index,
            sigma,
            tolerance,
        }
    }
}

// B_{2k} / (2k)!, k = 1..=10
const EM_COEFFS: [f64; 10] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
];

// B_{2k} / (2k (2k − 1)), k = 1..=8, for Stirling's series
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `ζ(s)` for `Re s > 0`, `s ≠ 1`, by Euler–Maclaurin with ten Bernoulli
/// corrections. The head length grows with `|Im s|` so the tail stays below
/// f64 resolution in the desk-scale window.
pub fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n = 20 + libm::ceil(libm::fabs(s.im) / 2.0) as u64;
    let mut head = Complex64::new(0.0, 0.0);
    for k in 1..n {
        head += (-s * libm::log(k as f64)).exp();
    }
    let ln_n = libm::log(n as f64);
    let n_pow_neg_s = (-s * ln_n).exp();
    let nf = n as f64;
    let mut total = head + n_pow_neg_s * nf / (s - 1.0) + n_pow_neg_s * 0.5;

    // T_k = B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s;
    let mut n_pow = n_pow_neg_s / nf;
    for (k, coeff) in EM_COEFFS.iter().enumerate() {
        total += rising * n_pow * *coeff;
        let j = 2.0 * (k as f64 + 1.0);
        rising *= (s + (j - 1.0)) * (s + j);
        n_pow /= nf * nf;
    }
    total
}

/// Principal-branch `ln Γ(z)` for `Re z > 0`, via Stirling after shifting
/// the argument past 10.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 10.0 {
        shift += w.ln();
        w += 1.0;
    }
    let mut series = (w - 0.5) * w.ln() - w + 0.5 * libm::log(2.0 * PI);
    let w_inv = w.inv();
    let w_inv2 = w_inv * w_inv;
    let mut power = w_inv;
    for c in STIRLING_COEFFS {
        series += power * c;
        power *= w_inv2;
    }
    series - shift
}

/// Riemann–Siegel θ(t) = Im ln Γ(¼ + it/2) − (t/2) ln π.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * libm::log(PI)
}

/// Hardy's `Z(t)` for `0 <= t <= 500`.
pub fn hardy_z(t: f64) -> Result<f64> {
    if !(0.0..=MAX_T).contains(&t) {
        return Err(Error::domain(format!(
            "hardy_z is evaluated on [0, {MAX_T}], got t = {t}"
        )));
    }
    Ok(hardy_z_unchecked(t))
}

fn hardy_z_unchecked(t: f64) -> f64 {
    let zeta = zeta_euler_maclaurin(Complex64::new(0.5, t));
    let (sin, cos) = libm::sincos(riemann_siegel_theta(t));
    zeta.re * cos - zeta.im * sin
}

/// The first `count` zeros: scan Z from `t = 1` in steps of 0.1 and bisect
/// each sign change down to 1e-8.
pub fn find_zeros(count: usize) -> Result<Vec<ZetaZero>> {
    if count > MAX_COMPUTED_ZEROS {
        return Err(Error::invalid(format!(
            "at most {MAX_COMPUTED_ZEROS} zeros can be computed, {count} requested"
        )));
    }
    let zeros = zeros_in_window(SCAN_START, MAX_T, count)?;
    if zeros.len() < count {
        return Err(Error::ScanExhausted {
            max_t: MAX_T,
            found: zeros.len(),
            requested: count,
        });
    }
    Ok(zeros)
}

/// Every zero detected by the scan in `[0, t_max]`.
pub fn zeros_up_to(t_max: f64) -> Result<Vec<ZetaZero>> {
    if !(0.0..=MAX_T).contains(&t_max) {
        return Err(Error::domain(format!(
            "zero scan limited to [0, {MAX_T}], got {t_max}"
        )));
    }
    zeros_in_window(SCAN_START, t_max, usize::MAX)
}

fn zeros_in_window(start: f64, end: f64, limit: usize) -> Result<Vec<ZetaZero>> {
    let mut zeros = Vec::new();
    if limit == 0 {
        return Ok(zeros);
    }
    let steps = libm::floor((end - start) / SCAN_STEP) as usize;
    let mut lo_t = start;
    let mut lo_z = hardy_z_unchecked(lo_t);
    for i in 1..=steps {
        let hi_t = start + i as f64 * SCAN_STEP;
        let hi_z = hardy_z_unchecked(hi_t);
        if lo_z == 0.0 || lo_z.signum() != hi_z.signum() {
            let sigma = if lo_z == 0.0 {
                lo_t
            } else {
                bisect(lo_t, hi_t, lo_z)
            };
            zeros.push(ZetaZero::new(zeros.len() + 1, sigma, BISECTION_TOLERANCE));
            if zeros.len() == limit {
                break;
            }
        }
        lo_t = hi_t;
        lo_z = hi_z;
    }
    Ok(zeros)
}

fn bisect(mut lo: f64, mut hi: f64, lo_z: f64) -> f64 {
    let lo_sign = lo_z.signum();
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        let z = hardy_z_unchecked(mid);
        if z == 0.0 {
            return mid;
        }
        if z.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Riemann–von Mangoldt main term for the zero count in `(0, T]`:
/// `(T/2π) ln(T/2π) − T/2π + 7/8`.
pub fn riemann_von_mangoldt_estimate(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * libm::log(x) - x + 0.875
}

/// Parses the zero-list format: one σ per line in ascending order, blank
/// lines and `#` comments ignored. Each zero's tolerance is `10^-d` where `d`
/// is the number of decimals written.
pub fn parse_zero_list(text: &str) -> Result<Vec<ZetaZero>> {
    let mut zeros: Vec<ZetaZero> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let sigma: f64 = line
            .parse()
            .map_err(|_| parse_err(format!("not a number: {line:?}")))?;
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(parse_err(format!("zero ordinate must be positive, got {line}")));
        }
        if let Some(prev) = zeros.last() {
            if sigma <= prev.sigma {
                return Err(parse_err(format!(
                    "not ascending: {sigma} follows {}",
                    prev.sigma
                )));
            }
        }
        let decimals = line
            .split_once('.')
            .map_or(0, |(_, frac)| frac.chars().take_while(char::is_ascii_digit).count());
        zeros.push(ZetaZero::new(
            zeros.len() + 1,
            sigma,
            libm::pow(10.0, -(decimals as f64)),
        ));
    }
    Ok(zeros)
}

/// Writes zeros in the same format [`parse_zero_list`] reads, with as many
/// decimals as the loosest tolerance supports.
pub fn format_zero_list(zeros: &[ZetaZero]) -> String {
    let worst = zeros.iter().map(|z| z.tolerance).fold(0.0, f64::max);
    let decimals = if worst > 0.0 {
        (libm::ceil(-libm::log10(worst)) as i64).clamp(0, 17) as usize
    } else {
        12
    };
    let mut out = String::new();
    for z in zeros {
        let _ = writeln!(out, "{:.*}", decimals, z.sigma);
    }
    out
}
