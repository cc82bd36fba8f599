//! The OM calculator: correspondence constants and every derived quantity.
//!
//! Conventions used throughout:
//!
//! * Dirac deltas `δ(N − q)` are unit samples, so sums over prime powers `q`
//!   select the single term `q = N`.
//! * The i-th zeta zero is paired with the i-th prime power (2, 3, 4, 5, 7,
//!   8, 9, …) unless another [`ZeroPairing`] is supplied.
//! * Square roots of negative or complex quantities take the principal
//!   branch; reports carry a flag whenever that happened on a real negative.
//! * `α̃⁻¹ = D·A` with `A = exp(√(π·δ))`, which makes the reference values
//!   46.0615… (D = 1), 138.184538 (D = 3) and ≈137 mutually consistent. No
//!   further square root is taken of `A`.
//! * `G̃` has a derived mode (`2^{3/2}` in the denominator, following the
//!   `√2` it is solved from) and a literal mode (`2^{2/3}`).

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};
use core::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numtheory::{decompose_prime_power, first_prime_powers, mangoldt, prime_powers_up_to, PrimePower};
use crate::zeta::ZetaZero;

/// Feigenbaum δ to the digits quoted alongside the correspondence.
pub const DEFAULT_DELTA: f64 = 4.669201609102990;
/// Fractal dimension the fine-structure value is calibrated with.
pub const DEFAULT_DIMENSION: f64 = 2.974283562752;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Which of the two OM spin values `±(i − 1)` is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpinSign {
    #[default]
    Positive,
    Negative,
}

impl SpinSign {
    pub fn from_i8(sign: i8) -> Result<Self> {
        match sign {
            1 => Ok(SpinSign::Positive),
            -1 => Ok(SpinSign::Negative),
            other => Err(Error::invalid(format!("spin sign must be +1 or -1, got {other}"))),
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            SpinSign::Positive => 1.0,
            SpinSign::Negative => -1.0,
        }
    }
}

/// Fixed numbers of the correspondence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OMConstants {
    delta: f64,
    dimension: f64,
    spin_sign: SpinSign,
    scaling: f64,
}

impl Default for OMConstants {
    fn default() -> Self {
        OMConstants::standard()
    }
}

impl OMConstants {
    /// `delta` must be finite and nonnegative, `dimension` finite and positive.
    pub fn new(delta: f64, dimension: f64, spin_sign: SpinSign) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::invalid(format!("delta must be finite and >= 0, got {delta}")));
        }
        if !(dimension.is_finite() && dimension > 0.0) {
            return Err(Error::invalid(format!("D must be finite and > 0, got {dimension}")));
        }
        Ok(OMConstants {
            delta,
            dimension,
            spin_sign,
            scaling: libm::exp(libm::sqrt(PI * delta)),
        })
    }

    /// δ = 4.669201609102990, D = 2.974283562752, s̃ = i − 1.
    pub fn standard() -> Self {
        OMConstants {
            delta: DEFAULT_DELTA,
            dimension: DEFAULT_DIMENSION,
            spin_sign: SpinSign::Positive,
            scaling: libm::exp(libm::sqrt(PI * DEFAULT_DELTA)),
        }
    }

    pub fn with_dimension(self, dimension: f64) -> Result<Self> {
        OMConstants::new(self.delta, dimension, self.spin_sign)
    }

    pub fn with_delta(self, delta: f64) -> Result<Self> {
        OMConstants::new(delta, self.dimension, self.spin_sign)
    }

    pub fn with_spin_sign(self, spin_sign: SpinSign) -> Self {
        OMConstants { spin_sign, ..self }
    }

    /// P̃₀ = 4π², the number standing in for the Planck momentum.
    pub fn p_tilde0(&self) -> f64 {
        4.0 * PI * PI
    }

    /// c̃ = −2πi.
    pub fn c_tilde(&self) -> Complex64 {
        Complex64::new(0.0, -2.0 * PI)
    }

    /// ẽ = 2π.
    pub fn e_tilde(&self) -> f64 {
        2.0 * PI
    }

    /// s̃ = ±(i − 1).
    pub fn s_tilde(&self) -> Complex64 {
        Complex64::new(-1.0, 1.0) * self.spin_sign.as_f64()
    }

    pub fn spin_sign(&self) -> SpinSign {
        self.spin_sign
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn dimension(&self) -> f64 {
        self.dimension
    }

    /// A = exp(√(π·δ)).
    pub fn scaling(&self) -> f64 {
        self.scaling
    }

    /// ζ̃₀, the Planck length in its own units.
    pub fn zeta0_tilde(&self) -> f64 {
        1.0
    }

    /// |r| = N·ζ̃₀ / 2π, the radial (time-like) coordinate at scale N.
    pub fn r_tilde(&self, n: u64) -> f64 {
        n as f64 * self.zeta0_tilde() / (2.0 * PI)
    }
}

/// Assigns a zeta-zero ordinate to the prime power of a given rank.
pub trait ZeroPairing {
    /// Zeros needed before the prime power of 1-based `rank` can be served.
    fn required_zeros(&self, rank: usize) -> usize;

    fn sigma(&self, rank: usize, zeros: &[ZetaZero]) -> Option<f64>;
}

/// The i-th prime power takes the i-th zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct RankPairing;

impl ZeroPairing for RankPairing {
    fn required_zeros(&self, rank: usize) -> usize {
        rank
    }

    fn sigma(&self, rank: usize, zeros: &[ZetaZero]) -> Option<f64> {
        rank.checked_sub(1).and_then(|i| zeros.get(i)).map(|z| z.sigma)
    }
}

fn paired_sigma(pairing: &dyn ZeroPairing, rank: usize, zeros: &[ZetaZero]) -> Result<f64> {
    pairing.sigma(rank, zeros).ok_or(Error::InsufficientZeros {
        required: pairing.required_zeros(rank),
        available: zeros.len(),
    })
}

/// 1-based position of `n` among the prime powers; `None` if `n` is not one.
pub fn prime_power_rank(n: u64) -> Option<usize> {
    decompose_prime_power(n)
        .is_prime_power()
        .then(|| prime_powers_up_to(n).len())
}

/// m̃(N): s̃/N on prime powers, 0 elsewhere.
pub fn om_mass(n: u64, c: &OMConstants) -> Complex64 {
    if decompose_prime_power(n).is_prime_power() {
        c.s_tilde() / n as f64
    } else {
        Complex64::new(0.0, 0.0)
    }
}

/// The von Mangoldt form of the mass, s̃·Λ(N).
pub fn om_mass_mangoldt(n: u64, c: &OMConstants) -> Complex64 {
    c.s_tilde() * mangoldt(n)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature {
    pub value: Complex64,
    /// False when `N` carries no mass and the zero value is a placeholder.
    pub supported: bool,
}

/// R̃(N) = m̃/s̃, i.e. 1/N on prime powers.
pub fn om_curvature(n: u64) -> Curvature {
    if decompose_prime_power(n).is_prime_power() {
        Curvature {
            value: Complex64::new(1.0 / n as f64, 0.0),
            supported: true,
        }
    } else {
        Curvature {
            value: Complex64::new(0.0, 0.0),
            supported: false,
        }
    }
}

/// `σ·q·ln q`, the zero-weighted term the energy selects at `q = N`.
fn zero_term(sigma: f64, q: u64) -> f64 {
    sigma * q as f64 * libm::log(q as f64)
}

/// Ẽ² at a prime power `q` whose paired ordinate is `sigma`:
/// `P̃₀²·(s̃²·σ·q·ln q + s̃·R̃ + 2·s̃²·R̃²)` with `R̃ = 1/q`.
pub fn energy_squared_at(q: u64, sigma: f64, c: &OMConstants) -> Complex64 {
    let s = c.s_tilde();
    let r = 1.0 / q as f64;
    let p0 = c.p_tilde0();
    (s * s * zero_term(sigma, q) + s * r + s * s * (2.0 * r * r)) * (p0 * p0)
}

/// Ẽ²(N) under rank pairing: 0 off prime powers.
pub fn om_energy_squared(n: u64, zeros: &[ZetaZero], c: &OMConstants) -> Result<Complex64> {
    om_energy_squared_with(n, zeros, c, &RankPairing)
}

pub fn om_energy_squared_with(
    n: u64,
    zeros: &[ZetaZero],
    c: &OMConstants,
    pairing: &dyn ZeroPairing,
) -> Result<Complex64> {
    match prime_power_rank(n) {
        None => Ok(Complex64::new(0.0, 0.0)),
        Some(rank) => Ok(energy_squared_at(n, paired_sigma(pairing, rank, zeros)?, c)),
    }
}

/// One row of the OM spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OMSpectrumRow {
    pub n: u64,
    pub is_prime_power: bool,
    pub m_tilde: Complex64,
    pub r_tilde: Complex64,
    pub e_squared: Complex64,
    pub sigma_used: Option<f64>,
}

/// Zeros needed for a spectrum over `1..=nmax` under rank pairing.
pub fn zeros_required_for(nmax: u64) -> usize {
    prime_powers_up_to(nmax).len()
}

/// Spectrum rows for every `N` in `range` (which must start at 1 or more).
///
/// Fails up front with the total zero count the range needs when `zeros` is
/// too short, rather than part way through.
pub fn spectrum_rows(
    range: RangeInclusive<u64>,
    zeros: &[ZetaZero],
    c: &OMConstants,
    pairing: &dyn ZeroPairing,
) -> Result<Vec<OMSpectrumRow>> {
    let (start, end) = (*range.start(), *range.end());
    if start == 0 {
        return Err(Error::invalid("spectrum rows start at N = 1"));
    }
    if start > end {
        return Ok(Vec::new());
    }
    let powers = prime_powers_up_to(end);
    let last_rank = powers.len();
    if last_rank > 0 && pairing.sigma(last_rank, zeros).is_none() {
        return Err(Error::InsufficientZeros {
            required: pairing.required_zeros(last_rank),
            available: zeros.len(),
        });
    }
    let mut rank = powers.partition_point(|pp| pp.value() < start);
    let mut next = powers.get(rank).map(PrimePower::value);
    let s = c.s_tilde();
    let mut rows = Vec::with_capacity((end - start + 1) as usize);
    for n in start..=end {
        if next == Some(n) {
            rank += 1;
            next = powers.get(rank).map(PrimePower::value);
            let sigma = paired_sigma(pairing, rank, zeros)?;
            let m = s / n as f64;
            rows.push(OMSpectrumRow {
                n,
                is_prime_power: true,
                m_tilde: m,
                r_tilde: m / s,
                e_squared: energy_squared_at(n, sigma, c),
                sigma_used: Some(sigma),
            });
        } else {
            rows.push(OMSpectrumRow {
                n,
                is_prime_power: false,
                m_tilde: Complex64::new(0.0, 0.0),
                r_tilde: Complex64::new(0.0, 0.0),
                e_squared: Complex64::new(0.0, 0.0),
                sigma_used: None,
            });
        }
    }
    Ok(rows)
}

/// The bracketed ratio of consecutive `x·ln x` differences,
/// `((N−1)ln(N−1) − (N−2)ln(N−2)) / (N ln N − (N−1)ln(N−1))`, for `N >= 4`.
/// Tends to 1 as N grows.
pub fn alpha_limit_ratio(n: u64) -> Result<f64> {
    if n < 4 {
        return Err(Error::invalid(format!("alpha limit ratio needs N >= 4, got {n}")));
    }
    // m ln m − (m−1) ln(m−1) = ln m − (m−1)·ln(1 − 1/m), cancellation-free.
    let step = |m: f64| libm::log(m) - (m - 1.0) * libm::log1p(-1.0 / m);
    let n = n as f64;
    Ok(step(n - 1.0) / step(n))
}

/// α̃⁻¹ = D·A.
pub fn alpha_inverse(c: &OMConstants) -> f64 {
    c.dimension() * c.scaling()
}

/// ε̃ = α̃⁻¹ / 2.
pub fn epsilon_tilde(c: &OMConstants) -> f64 {
    alpha_inverse(c) / 2.0
}

/// Two consecutive paired prime powers `q_i < q_{i+1}` (1-based `i`) and
/// their ordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
struct ConsecutivePair {
    q: [u64; 2],
    sigma: [f64; 2],
}

impl ConsecutivePair {
    fn resolve(i: usize, zeros: &[ZetaZero], pairing: &dyn ZeroPairing) -> Result<Self> {
        if i == 0 {
            return Err(Error::invalid("prime-power index is 1-based"));
        }
        let powers = first_prime_powers(i + 1);
        let q = [powers[i - 1].value(), powers[i].value()];
        if q[0] == q[1] {
            return Err(Error::invalid("consecutive prime powers coincide"));
        }
        let sigma = [
            paired_sigma(pairing, i, zeros)?,
            paired_sigma(pairing, i + 1, zeros)?,
        ];
        Ok(ConsecutivePair { q, sigma })
    }

    /// ΔR̃ = 1/q_{i+1} − 1/q_i.
    fn delta_curvature(&self) -> f64 {
        1.0 / self.q[1] as f64 - 1.0 / self.q[0] as f64
    }

    /// Δ(σ·q·ln q) between the two.
    fn delta_zero_term(&self) -> f64 {
        zero_term(self.sigma[1], self.q[1]) - zero_term(self.sigma[0], self.q[0])
    }
}

/// Principal square root of a real, flagging negative arguments.
fn principal_sqrt(x: f64) -> (Complex64, bool) {
    if x >= 0.0 {
        (Complex64::new(libm::sqrt(x), 0.0), false)
    } else {
        (Complex64::new(0.0, libm::sqrt(-x)), true)
    }
}

/// Energy–frequency uncertainty analog evaluated at the i-th zero gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisenbergReport {
    pub i: usize,
    /// σ_{i+1} − σ_i.
    pub sigma_gap: f64,
    /// (ΔẼ)² = P̃₀²·s̃²·D²·A·Δσ.
    pub delta_energy_squared: Complex64,
    /// ΔẼ·α̃/√Δσ.
    pub lhs: Complex64,
    /// P̃₀·s̃.
    pub rhs: Complex64,
    pub ratio: Complex64,
}

/// Evaluates both sides of the uncertainty analog at the gap between zeros
/// `i` and `i + 1` (1-based). The ratio is reported, not asserted.
pub fn heisenberg_product(i: usize, zeros: &[ZetaZero], c: &OMConstants) -> Result<HeisenbergReport> {
    if i == 0 {
        return Err(Error::invalid("zero index is 1-based"));
    }
    if zeros.len() < i + 1 {
        return Err(Error::InsufficientZeros {
            required: i + 1,
            available: zeros.len(),
        });
    }
    let gap = zeros[i].sigma - zeros[i - 1].sigma;
    if !(gap > 0.0) {
        return Err(Error::invalid(format!(
            "zero ordinates must increase, got gap {gap} at index {i}"
        )));
    }
    let s = c.s_tilde();
    let p0 = c.p_tilde0();
    let d = c.dimension();
    let delta_energy_squared = s * s * (p0 * p0 * d * d * c.scaling() * gap);
    let alpha = 1.0 / alpha_inverse(c);
    let lhs = delta_energy_squared.sqrt() * (alpha / libm::sqrt(gap));
    let rhs = s * p0;
    Ok(HeisenbergReport {
        i,
        sigma_gap: gap,
        delta_energy_squared,
        lhs,
        rhs,
        ratio: lhs / rhs,
    })
}

/// First-order (Dirac-like) factorization between consecutive prime powers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EinsteinReport {
    pub i: usize,
    pub prime_powers: [u64; 2],
    pub sigmas: [f64; 2],
    pub delta_curvature: f64,
    pub delta_zero_term: f64,
    /// `2·ΔR̃² + Δ(σ·q·ln q)`, the radicand of the second-order form.
    pub radicand: f64,
    /// `P̃₀·s̃·(√2·ΔR̃ + i·√Δ(σ·q·ln q))`.
    pub first_order: Complex64,
    /// `|first·conj(first) − radicand·(P̃₀·s̃)²|`.
    pub second_order_residual: f64,
    /// The inner square root was taken of a negative number.
    pub negative_branch: bool,
}

pub fn einstein_factorization(i: usize, zeros: &[ZetaZero], c: &OMConstants) -> Result<EinsteinReport> {
    einstein_factorization_with(i, zeros, c, &RankPairing)
}

pub fn einstein_factorization_with(
    i: usize,
    zeros: &[ZetaZero],
    c: &OMConstants,
    pairing: &dyn ZeroPairing,
) -> Result<EinsteinReport> {
    let pair = ConsecutivePair::resolve(i, zeros, pairing)?;
    let dr = pair.delta_curvature();
    let dz = pair.delta_zero_term();
    let (root, negative_branch) = principal_sqrt(dz);
    let prefactor = c.s_tilde() * c.p_tilde0();
    let first_order = prefactor * (I * root + SQRT_2 * dr);
    let radicand = 2.0 * dr * dr + dz;
    let residual = (first_order * first_order.conj() - prefactor * prefactor * radicand).norm();
    Ok(EinsteinReport {
        i,
        prime_powers: pair.q,
        sigmas: pair.sigma,
        delta_curvature: dr,
        delta_zero_term: dz,
        radicand,
        first_order,
        second_order_residual: residual,
        negative_branch,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GravityMode {
    /// `2^{3/2}` in the denominator, consistent with the `√2` it is solved from.
    #[default]
    Derived,
    /// `2^{2/3}`.
    Literal,
}

/// G̃ = π(1 − D/2) / (2^k · s̃) with `k = 3/2` (derived) or `2/3` (literal).
pub fn gravitational_constant(c: &OMConstants, mode: GravityMode) -> Complex64 {
    let power = match mode {
        GravityMode::Derived => libm::pow(2.0, 1.5),
        GravityMode::Literal => libm::pow(2.0, 2.0 / 3.0),
    };
    Complex64::new(PI * (1.0 - c.dimension() / 2.0) / power, 0.0) / c.s_tilde()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosmologicalReport {
    pub i: usize,
    pub prime_powers: [u64; 2],
    pub delta_zero_term: f64,
    pub value: Complex64,
    pub negative_branch: bool,
}

/// Λ̃ = (iπ/√2)·((1 − D/2)/D)·√Δ(σ·q·ln q) between prime powers `i`, `i + 1`.
pub fn cosmological_constant(i: usize, zeros: &[ZetaZero], c: &OMConstants) -> Result<CosmologicalReport> {
    cosmological_constant_with(i, zeros, c, &RankPairing)
}

pub fn cosmological_constant_with(
    i: usize,
    zeros: &[ZetaZero],
    c: &OMConstants,
    pairing: &dyn ZeroPairing,
) -> Result<CosmologicalReport> {
    let pair = ConsecutivePair::resolve(i, zeros, pairing)?;
    let dz = pair.delta_zero_term();
    let (root, negative_branch) = principal_sqrt(dz);
    let d = c.dimension();
    let value = I * (PI / SQRT_2) * ((1.0 - d / 2.0) / d) * root;
    Ok(CosmologicalReport {
        i,
        prime_powers: pair.q,
        delta_zero_term: dz,
        value,
        negative_branch,
    })
}

/// Curvature split between the hidden direction (`R̃_H = s̃`) and the
/// observable ones (`R̃_L = m̃/R̃_H`), with the area and entropy bookkeeping
/// built on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolographySplit {
    pub n: u64,
    pub m_tilde: Complex64,
    pub r_h: Complex64,
    pub r_l: Complex64,
    /// R̃ = R̃_H + R̃_L.
    pub r_total: Complex64,
    /// ΔÃ_L = R̃_L².
    pub area_l: Complex64,
    /// ΔÃ_H chosen so that ΔÃ_L = −ΔÃ_H + 2m̃ holds exactly.
    pub area_h: Complex64,
    /// ΔÃ_H as R̃² − R̃_H² straight from the squared total curvature. Differs
    /// from `area_h` by −2·R̃_L²: the two area relations disagree in sign.
    pub area_h_direct: Complex64,
    pub g_mode: GravityMode,
    pub g_tilde: Complex64,
    /// ΔS̃_L = ΔÃ_H/(4G̃) − m̃/(2G̃); `None` when G̃ vanishes (D = 2).
    pub entropy_l: Option<Complex64>,
}

impl HolographySplit {
    /// |R̃_H·R̃_L − m̃|.
    pub fn product_residual(&self) -> f64 {
        (self.r_h * self.r_l - self.m_tilde).norm()
    }

    /// |R̃² − R̃_H² − R̃_L² − 2m̃|.
    pub fn square_residual(&self) -> f64 {
        (self.r_total * self.r_total - self.r_h * self.r_h - self.r_l * self.r_l - self.m_tilde * 2.0).norm()
    }

    /// |ΔÃ_L + ΔÃ_H − 2m̃|.
    pub fn area_residual(&self) -> f64 {
        (self.area_l + self.area_h - self.m_tilde * 2.0).norm()
    }
}

/// Holographic split with `G̃` in derived mode.
pub fn holography_split(n: u64, c: &OMConstants) -> Result<HolographySplit> {
    holography_split_with(n, c, GravityMode::Derived)
}

pub fn holography_split_with(n: u64, c: &OMConstants, g_mode: GravityMode) -> Result<HolographySplit> {
    if !decompose_prime_power(n).is_prime_power() {
        return Err(Error::domain(format!("{n} is not a prime power and carries no mass")));
    }
    let m = om_mass(n, c);
    let r_h = c.s_tilde();
    let r_l = m / r_h;
    let r_total = r_h + r_l;
    let area_l = r_l * r_l;
    let area_h = m * 2.0 - area_l;
    let area_h_direct = r_total * r_total - r_h * r_h;
    let g = gravitational_constant(c, g_mode);
    let entropy_l = (g.norm() != 0.0).then(|| area_h / (g * 4.0) - m / (g * 2.0));
    Ok(HolographySplit {
        n,
        m_tilde: m,
        r_h,
        r_l,
        r_total,
        area_l,
        area_h,
        area_h_direct,
        g_mode,
        g_tilde: g,
        entropy_l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    // Odlyzko's table, independent of the zero finder.
    const SIGMA: [f64; 4] = [14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513];

    fn zeros(n: usize) -> Vec<ZetaZero> {
        SIGMA[..n]
            .iter()
            .enumerate()
            .map(|(i, &s)| ZetaZero::new(i + 1, s, 1e-15))
            .collect()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn constants() {
        let k = OMConstants::standard();
        assert_abs_diff_eq!(k.p_tilde0(), k.c_tilde().norm_sqr(), epsilon = 1e-12);
        assert_eq!(k.s_tilde(), c(-1.0, 1.0));
        assert_eq!(k.s_tilde() * k.s_tilde(), c(0.0, -2.0));
        let neg = k.with_spin_sign(SpinSign::Negative);
        assert_eq!(neg.s_tilde(), c(1.0, -1.0));
        assert_eq!(neg.s_tilde() * neg.s_tilde(), c(0.0, -2.0));
        assert_abs_diff_eq!(k.scaling(), libm::exp(libm::sqrt(PI * DEFAULT_DELTA)), epsilon = 0.0);
        assert_abs_diff_eq!(k.r_tilde(10), 10.0 / (2.0 * PI), epsilon = 1e-15);
        assert!(OMConstants::new(-1.0, 3.0, SpinSign::Positive).is_err());
        assert!(OMConstants::new(4.0, 0.0, SpinSign::Positive).is_err());
        assert!(SpinSign::from_i8(0).is_err());
    }

    #[test]
    fn mass_examples() {
        let k = OMConstants::standard();
        assert_eq!(om_mass(12, &k), c(0.0, 0.0));
        assert_eq!(om_mass(9, &k), c(-1.0, 1.0) / 9.0);
        assert_eq!(om_mass(2, &k), c(-0.5, 0.5));
        assert!(close(om_mass_mangoldt(8, &k), c(-1.0, 1.0) * libm::log(2.0), 1e-15));
        assert_eq!(om_mass_mangoldt(6, &k), c(0.0, 0.0));
        assert!(close(om_mass_mangoldt(3, &k), c(-1.0, 1.0) * libm::log(3.0), 1e-15));
    }

    #[test]
    fn curvature_examples() {
        assert_eq!(om_curvature(4).value, c(0.25, 0.0));
        assert_eq!(om_curvature(5).value, c(0.2, 0.0));
        let six = om_curvature(6);
        assert!(!six.supported);
        assert_eq!(six.value, c(0.0, 0.0));
    }

    #[test]
    fn energy_examples() {
        let k = OMConstants::standard();
        let z = zeros(2);
        assert_eq!(om_energy_squared(6, &z, &k).unwrap(), c(0.0, 0.0));

        // Direct evaluation at N = 2 with σ₁.
        let p4 = 16.0 * PI.powi(4);
        let inner = c(0.0, -2.0) * (SIGMA[0] * 2.0 * libm::log(2.0)) + c(-1.0, 1.0) / 2.0 + c(0.0, -2.0) * (2.0 / 4.0);
        let e2 = om_energy_squared(2, &z, &k).unwrap();
        assert!(close(e2, inner * p4, 1e-9 * e2.norm()));
        assert_abs_diff_eq!(e2.re / p4, -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(e2.im / p4, -39.690, epsilon = 1e-3);

        // N = 3 pairs with σ₂.
        let inner3 = c(0.0, -2.0) * (SIGMA[1] * 3.0 * libm::log(3.0)) + c(-1.0, 1.0) / 3.0 + c(0.0, -2.0) * (2.0 / 9.0);
        assert!(close(om_energy_squared(3, &z, &k).unwrap(), inner3 * p4, 1e-6));

        match om_energy_squared(4, &z, &k) {
            Err(Error::InsufficientZeros { required: 3, available: 2 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spectrum_structure() {
        let k = OMConstants::standard();
        let z: Vec<ZetaZero> = (1..=7).map(|i| ZetaZero::new(i, 10.0 + i as f64, 1e-9)).collect();
        let rows = spectrum_rows(1..=10, &z, &k, &RankPairing).unwrap();
        let support: Vec<u64> = rows.iter().filter(|r| r.e_squared.norm() != 0.0).map(|r| r.n).collect();
        assert_eq!(support, vec![2, 3, 4, 5, 7, 8, 9]);
        for r in &rows {
            if r.is_prime_power {
                assert_eq!(r.r_tilde, r.m_tilde / k.s_tilde());
                assert_eq!(Some(r.e_squared), om_energy_squared(r.n, &z, &k).ok());
            }
        }
        let tail = spectrum_rows(6..=9, &z, &k, &RankPairing).unwrap();
        assert_eq!(tail[..], rows[5..9]);
        match spectrum_rows(1..=10, &[], &k, &RankPairing) {
            Err(Error::InsufficientZeros { required: 7, available: 0 }) => {}
            other => panic!("{other:?}"),
        }
        assert_eq!(spectrum_rows(1..=2, &z[..1], &k, &RankPairing).unwrap()[1].sigma_used, Some(11.0));
        assert_eq!(zeros_required_for(10), 7);
    }

    #[test]
    fn alpha_ratio_values() {
        let direct = |n: f64| {
            let f = |x: f64| x * libm::log(x);
            (f(n - 1.0) - f(n - 2.0)) / (f(n) - f(n - 1.0))
        };
        assert_abs_diff_eq!(alpha_limit_ratio(10).unwrap(), direct(10.0), epsilon = 1e-13);
        assert_abs_diff_eq!(alpha_limit_ratio(10).unwrap(), 0.96575, epsilon = 1e-5);
        assert_abs_diff_eq!(alpha_limit_ratio(4).unwrap(), direct(4.0), epsilon = 1e-13);
        assert_abs_diff_eq!(alpha_limit_ratio(4).unwrap(), 0.848934, epsilon = 1e-6);
        assert!((alpha_limit_ratio(1_000_000).unwrap() - 1.0).abs() < 1e-5);
        assert!(alpha_limit_ratio(3).is_err());
    }

    #[test]
    fn fine_structure_chain() {
        let k = OMConstants::standard();
        assert_abs_diff_eq!(alpha_inverse(&k), 137.0, epsilon = 0.005);
        let d3 = k.with_dimension(3.0).unwrap();
        assert_abs_diff_eq!(alpha_inverse(&d3), 138.184538, epsilon = 1e-4);
        let d1 = k.with_dimension(1.0).unwrap();
        assert_abs_diff_eq!(alpha_inverse(&d1), 46.0615127, epsilon = 1e-6);
        assert_abs_diff_eq!(alpha_inverse(&d3) / alpha_inverse(&d1), 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(epsilon_tilde(&d3), 69.092269, epsilon = 1e-6);
        assert_abs_diff_eq!(epsilon_tilde(&k), 68.5, epsilon = 0.003);
        let zero_delta = k.with_delta(0.0).unwrap();
        assert_eq!(zero_delta.scaling(), 1.0);
        assert_eq!(alpha_inverse(&zero_delta), DEFAULT_DIMENSION);
    }

    #[test]
    fn charge_identity() {
        let k = OMConstants::standard();
        let lhs = k.e_tilde() * k.e_tilde() / epsilon_tilde(&k);
        let rhs = 8.0 * PI * PI / (k.dimension() * k.scaling());
        assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * rhs);
    }

    #[test]
    fn heisenberg() {
        let k = OMConstants::standard();
        let z = zeros(2);
        let h = heisenberg_product(1, &z, &k).unwrap();
        assert!(close(h.rhs, c(-1.0, 1.0) * (4.0 * PI * PI), 1e-12));
        assert!(h.lhs.re.is_finite() && h.lhs.im.is_finite());
        assert!(close(h.ratio, h.lhs / h.rhs, 1e-15));
        assert_abs_diff_eq!(h.sigma_gap, SIGMA[1] - SIGMA[0], epsilon = 1e-14);
        // |lhs| = P̃₀·|s̃|/√A regardless of Δσ.
        assert_abs_diff_eq!(h.lhs.norm(), 4.0 * PI * PI * SQRT_2 / libm::sqrt(k.scaling()), epsilon = 1e-10);

        let flat = [ZetaZero::new(1, 14.0, 1e-9), ZetaZero::new(2, 14.0, 1e-9)];
        assert!(matches!(heisenberg_product(1, &flat, &k), Err(Error::InvalidInput(_))));
        assert!(heisenberg_product(0, &z, &k).is_err());
        assert!(matches!(heisenberg_product(2, &z, &k), Err(Error::InsufficientZeros { .. })));
    }

    #[test]
    fn einstein() {
        let k = OMConstants::standard();
        let z = zeros(2);
        let e = einstein_factorization(1, &z, &k).unwrap();
        assert_eq!(e.prime_powers, [2, 3]);
        let dr = 1.0 / 3.0 - 0.5;
        let dz = SIGMA[1] * 3.0 * libm::log(3.0) - SIGMA[0] * 2.0 * libm::log(2.0);
        assert_abs_diff_eq!(e.delta_curvature, dr, epsilon = 1e-15);
        assert_abs_diff_eq!(e.delta_zero_term, dz, epsilon = 1e-12);
        let s = c(-1.0, 1.0);
        let p0 = 4.0 * PI * PI;
        let expected = s * p0 * (c(SQRT_2 * dr, 0.0) + c(0.0, libm::sqrt(dz)));
        assert!(close(e.first_order, expected, 1e-10));
        assert!(!e.negative_branch);
        // conj-product oracle: |first|² − radicand·(P̃₀s̃)²
        let oracle = (c(expected.norm_sqr(), 0.0) - s * s * (p0 * p0) * (2.0 * dr * dr + dz)).norm();
        assert_abs_diff_eq!(e.second_order_residual, oracle, epsilon = 1e-8 * oracle);
        assert!(e.second_order_residual > 0.0);
        assert!(einstein_factorization(0, &z, &k).is_err());
        assert!(matches!(einstein_factorization(2, &z, &k), Err(Error::InsufficientZeros { .. })));
    }

    #[test]
    fn gravity() {
        let k = OMConstants::standard();
        let g = gravitational_constant(&k, GravityMode::Derived);
        assert!(close(g, c(0.270539, 0.270539), 1e-6), "{g}");
        let d2 = k.with_dimension(2.0).unwrap();
        assert_eq!(gravitational_constant(&d2, GravityMode::Derived).norm(), 0.0);
        assert_eq!(gravitational_constant(&d2, GravityMode::Literal).norm(), 0.0);
        let lit = gravitational_constant(&k, GravityMode::Literal);
        let ratio = g / lit;
        assert_abs_diff_eq!(ratio.re, libm::pow(2.0, 2.0 / 3.0 - 1.5), epsilon = 1e-14);
        assert_abs_diff_eq!(ratio.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn cosmological() {
        let k = OMConstants::standard();
        let z = zeros(2);
        let l = cosmological_constant(1, &z, &k).unwrap();
        let d = DEFAULT_DIMENSION;
        let dz = SIGMA[1] * 3.0 * libm::log(3.0) - SIGMA[0] * 2.0 * libm::log(2.0);
        assert_abs_diff_eq!(l.value.im, PI / SQRT_2 * (1.0 - d / 2.0) / d * libm::sqrt(dz), epsilon = 1e-12);
        assert_eq!(l.value.re, 0.0);
        assert!(!l.negative_branch);

        let d2 = k.with_dimension(2.0).unwrap();
        assert_eq!(cosmological_constant(1, &z, &d2).unwrap().value.norm(), 0.0);

        // A custom pairing that shrinks σ fast enough makes the zero term
        // decrease, forcing the principal branch of a negative root.
        let shrink = [ZetaZero::new(1, 40.0, 1e-9), ZetaZero::new(2, 40.01, 1e-9)];
        struct Reverse;
        impl ZeroPairing for Reverse {
            fn required_zeros(&self, rank: usize) -> usize {
                rank
            }
            fn sigma(&self, rank: usize, zeros: &[ZetaZero]) -> Option<f64> {
                zeros.get(rank - 1).map(|z| 1000.0 / z.sigma / (rank * rank) as f64)
            }
        }
        let r = cosmological_constant_with(1, &shrink, &k, &Reverse).unwrap();
        assert!(r.negative_branch);
        assert_eq!(r.value.im, 0.0);
        let e = einstein_factorization_with(1, &shrink, &k, &Reverse).unwrap();
        assert!(e.negative_branch);
    }

    #[test]
    fn holography_examples() {
        let k = OMConstants::standard();
        let h = holography_split(2, &k).unwrap();
        assert_eq!(h.r_h * h.r_l, om_mass(2, &k));
        assert_eq!(h.product_residual(), 0.0);
        assert!(h.square_residual() < 1e-15);
        assert_eq!(holography_split(9, &k).unwrap().area_l, c(1.0 / 81.0, 0.0));
        assert!(h.area_residual() < 1e-15);
        assert!(close(h.area_h - h.area_h_direct, -(h.r_l * h.r_l) * 2.0, 1e-15));
        assert!(h.entropy_l.is_some());
        assert!(matches!(holography_split(6, &k), Err(Error::Domain(_))));
        let d2 = k.with_dimension(2.0).unwrap();
        assert!(holography_split(2, &d2).unwrap().entropy_l.is_none());
    }

    proptest! {
        #[test]
        fn sign_flip_is_consistent(n in 2u64..5000) {
            let pos = OMConstants::standard();
            let neg = pos.with_spin_sign(SpinSign::Negative);
            prop_assert_eq!(om_mass(n, &pos), -om_mass(n, &neg));
            prop_assert_eq!(om_mass(n, &pos).norm(), om_mass(n, &neg).norm());
            if let (Ok(a), Ok(b)) = (holography_split(n, &pos), holography_split(n, &neg)) {
                prop_assert_eq!(a.r_l, b.r_l);
                prop_assert_eq!(a.r_h, -b.r_h);
                prop_assert!((a.square_residual()).max(b.square_residual()) < 1e-14);
            }
            let gp = gravitational_constant(&pos, GravityMode::Derived);
            let gn = gravitational_constant(&neg, GravityMode::Derived);
            prop_assert_eq!(gp, -gn);
        }

        #[test]
        fn alpha_linear_in_dimension(d in 0.1f64..10.0) {
            let k = OMConstants::standard().with_dimension(d).unwrap();
            let one = OMConstants::standard().with_dimension(1.0).unwrap();
            prop_assert!((alpha_inverse(&k) / alpha_inverse(&one) - d).abs() <= 4.0 * f64::EPSILON * d);
        }
    }
}
