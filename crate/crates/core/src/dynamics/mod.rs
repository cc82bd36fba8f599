//! Chaotic-dynamics constants feeding the correspondence.
//!
//! The OM-space micro-structure is modelled on the Rössler attractor
//! `ẋ = −y − z, ẏ = x + a·y, ż = b + z·(x − c)`. From it we measure the
//! Lyapunov spectrum (Benettin tangent evolution with Gram–Schmidt) and the
//! Kaplan–Yorke dimension. The correspondence itself consumes the Feigenbaum
//! δ of the logistic map, computed in [`feigenbaum`], and a fractal
//! dimension `D` that is configured rather than measured: the classic
//! Rössler parameters give `D_KY ≈ 2.01`, well below the 2.974 the OM
//! formulas are calibrated with.

pub mod feigenbaum;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use feigenbaum::{feigenbaum_delta, FeigenbaumResult};

pub type Vec3 = [f64; 3];

/// Coordinates beyond this magnitude count as a blown-up trajectory.
pub const DIVERGENCE_BOUND: f64 = 1e6;
pub const MAX_DT: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RosslerParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl RosslerParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::invalid(format!("Rössler c must be positive, got {c}")));
        }
        Ok(RosslerParams { a, b, c })
    }

    /// `a = b = 0.2`, `c = 5.7`.
    pub fn classic() -> Self {
        RosslerParams {
            a: 0.2,
            b: 0.2,
            c: 5.7,
        }
    }

    pub fn velocity(&self, [x, y, z]: Vec3) -> Vec3 {
        [-y - z, x + self.a * y, self.b + z * (x - self.c)]
    }

    /// Trace of the Jacobian, i.e. the local phase-space contraction rate.
    pub fn divergence(&self, [x, _, _]: Vec3) -> f64 {
        self.a + x - self.c
    }

    fn jacobian_apply(&self, [x, _, z]: Vec3, [u, v, w]: Vec3) -> Vec3 {
        [-v - w, u + self.a * v, z * u + (x - self.c) * w]
    }
}

fn axpy(s: f64, x: &Vec3, y: &Vec3) -> Vec3 {
    [y[0] + s * x[0], y[1] + s * x[1], y[2] + s * x[2]]
}

fn check_step(dt: f64) -> Result<()> {
    if !(dt > 0.0 && dt <= MAX_DT) {
        return Err(Error::invalid(format!("dt must lie in (0, {MAX_DT}], got {dt}")));
    }
    Ok(())
}

fn diverged(p: &Vec3) -> bool {
    p.iter().any(|v| !v.is_finite() || v.abs() > DIVERGENCE_BOUND)
}

/// One classical RK4 step of the flow.
pub fn rk4_step(params: &RosslerParams, p: Vec3, dt: f64) -> Vec3 {
    let k1 = params.velocity(p);
    let k2 = params.velocity(axpy(0.5 * dt, &k1, &p));
    let k3 = params.velocity(axpy(0.5 * dt, &k2, &p));
    let k4 = params.velocity(axpy(dt, &k3, &p));
    core::array::from_fn(|i| p[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Fixed-step RK4 trajectory of `steps + 1` points starting at `initial`.
pub fn integrate_rossler(
    params: &RosslerParams,
    initial: Vec3,
    dt: f64,
    steps: usize,
) -> Result<Vec<Vec3>> {
    check_step(dt)?;
    if steps == 0 {
        return Err(Error::invalid("at least one integration step is required"));
    }
    let mut out = Vec::with_capacity(steps + 1);
    let mut p = initial;
    out.push(p);
    for step in 1..=steps {
        p = rk4_step(params, p, dt);
        if diverged(&p) {
            return Err(Error::Divergence { step });
        }
        out.push(p);
    }
    Ok(out)
}

/// Lyapunov exponents of a 3-D flow with the derived Kaplan–Yorke dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovSpectrum {
    /// Sorted descending, in inverse time units.
    pub exponents: [f64; 3],
    pub ky_dimension: f64,
    /// Time average of the Jacobian trace over the same span; equals the
    /// exponent sum for an exact integration.
    pub mean_divergence: f64,
}

impl LyapunovSpectrum {
    pub fn sum(&self) -> f64 {
        self.exponents.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovConfig {
    pub dt: f64,
    /// Transient steps discarded before averaging.
    pub settle: usize,
    /// Steps over which the exponents are averaged.
    pub span: usize,
    /// Gram–Schmidt cadence, in steps.
    pub reorthonormalize_every: usize,
    pub initial: Vec3,
}

pub const MIN_SETTLE: usize = 10_000;
pub const MIN_SPAN: usize = 1_000_000;

impl Default for LyapunovConfig {
    fn default() -> Self {
        LyapunovConfig {
            dt: 0.01,
            settle: MIN_SETTLE,
            span: MIN_SPAN,
            reorthonormalize_every: 5,
            initial: [1.0, 1.0, 1.0],
        }
    }
}

/// Kaplan–Yorke dimension `j + S_j / |λ_{j+1}|`, where `j` is the largest
/// count of leading exponents whose partial sum `S_j` is nonnegative.
/// `exponents` must be sorted descending.
pub fn kaplan_yorke_dimension(exponents: &[f64]) -> f64 {
    let mut partial = 0.0;
    for (j, &lambda) in exponents.iter().enumerate() {
        if partial + lambda < 0.0 {
            return j as f64 + partial / lambda.abs();
        }
        partial += lambda;
    }
    exponents.len() as f64
}

/// Benettin spectrum with the default step (0.01) and cadence.
pub fn lyapunov_spectrum(
    params: &RosslerParams,
    settle: usize,
    span: usize,
) -> Result<LyapunovSpectrum> {
    lyapunov_spectrum_with(
        params,
        &LyapunovConfig {
            settle,
            span,
            ..LyapunovConfig::default()
        },
    )
}

/// Benettin-style estimate: the flow and three tangent vectors advance
/// together under RK4, and every `reorthonormalize_every` steps the tangents
/// are Gram–Schmidt orthonormalized with the log stretch factors recorded.
pub fn lyapunov_spectrum_with(
    params: &RosslerParams,
    config: &LyapunovConfig,
) -> Result<LyapunovSpectrum> {
    check_step(config.dt)?;
    if config.settle < MIN_SETTLE {
        return Err(Error::invalid(format!(
            "settle must be at least {MIN_SETTLE} steps, got {}",
            config.settle
        )));
    }
    if config.span < MIN_SPAN {
        return Err(Error::invalid(format!(
            "span must be at least {MIN_SPAN} steps, got {}",
            config.span
        )));
    }
    if !(1..=10).contains(&config.reorthonormalize_every) {
        return Err(Error::invalid(
            "reorthonormalization cadence must be between 1 and 10 steps",
        ));
    }

    let dt = config.dt;
    let mut state = config.initial;
    let mut tangents: [Vec3; 3] = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut log_stretch = [0.0f64; 3];
    let mut divergence_sum = 0.0;

    let total = config.settle + config.span;
    for step in 1..=total {
        tangent_rk4_step(params, &mut state, &mut tangents, dt);
        if diverged(&state) {
            return Err(Error::Divergence { step });
        }
        let averaging = step > config.settle;
        if averaging {
            divergence_sum += params.divergence(state);
        }
        if step % config.reorthonormalize_every == 0 || step == config.settle || step == total {
            let norms = gram_schmidt(&mut tangents);
            if averaging {
                for (acc, n) in log_stretch.iter_mut().zip(norms) {
                    *acc += libm::log(n);
                }
            }
        }
    }
    let time = config.span as f64 * dt;
    let mut exponents = log_stretch.map(|s| s / time);
    exponents.sort_by(|a, b| b.total_cmp(a));
    Ok(LyapunovSpectrum {
        exponents,
        ky_dimension: kaplan_yorke_dimension(&exponents),
        mean_divergence: divergence_sum / config.span as f64,
    })
}

fn tangent_rk4_step(params: &RosslerParams, state: &mut Vec3, tangents: &mut [Vec3; 3], dt: f64) {
    let eval = |p: &Vec3, q: &[Vec3; 3]| -> (Vec3, [Vec3; 3]) {
        (
            params.velocity(*p),
            q.map(|v| params.jacobian_apply(*p, v)),
        )
    };
    let shift = |p: &Vec3, q: &[Vec3; 3], dp: &Vec3, dq: &[Vec3; 3], h: f64| {
        (
            axpy(h, dp, p),
            core::array::from_fn::<Vec3, 3, _>(|i| axpy(h, &dq[i], &q[i])),
        )
    };

    let (k1p, k1q) = eval(state, tangents);
    let (p2, q2) = shift(state, tangents, &k1p, &k1q, 0.5 * dt);
    let (k2p, k2q) = eval(&p2, &q2);
    let (p3, q3) = shift(state, tangents, &k2p, &k2q, 0.5 * dt);
    let (k3p, k3q) = eval(&p3, &q3);
    let (p4, q4) = shift(state, tangents, &k3p, &k3q, dt);
    let (k4p, k4q) = eval(&p4, &q4);

    let combine = |y: f64, a: f64, b: f64, c: f64, d: f64| y + dt / 6.0 * (a + 2.0 * b + 2.0 * c + d);
    for i in 0..3 {
        state[i] = combine(state[i], k1p[i], k2p[i], k3p[i], k4p[i]);
        for (j, t) in tangents.iter_mut().enumerate() {
            t[i] = combine(t[i], k1q[j][i], k2q[j][i], k3q[j][i], k4q[j][i]);
        }
    }
}

fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Modified Gram–Schmidt in place; returns the norms removed from each vector.
fn gram_schmidt(vectors: &mut [Vec3; 3]) -> [f64; 3] {
    let mut norms = [0.0; 3];
    for i in 0..3 {
        for j in 0..i {
            let (done, rest) = vectors.split_at_mut(i);
            let proj = dot(&rest[0], &done[j]);
            rest[0] = axpy(-proj, &done[j], &rest[0]);
        }
        let n = libm::sqrt(dot(&vectors[i], &vectors[i]));
        norms[i] = n;
        vectors[i] = vectors[i].map(|v| v / n);
    }
    norms
}

/// `D² · exp(√(π·λ))`, the scale-change factor with Lyapunov-type
/// coefficient `λ` and fractal dimension `D`. Both arguments are expected to
/// be positive; `λ = 0` gives `D²`.
pub fn scaling_factor(lambda: f64, dimension: f64) -> f64 {
    dimension * dimension * libm::exp(libm::sqrt(core::f64::consts::PI * lambda))
}
