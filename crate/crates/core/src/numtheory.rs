//! Primes, prime powers and the arithmetic functions built on them.
//!
//! Λ (von Mangoldt) is the backbone of every OM spectrum: it is nonzero
//! exactly on prime powers `p^k`, where it equals `ln p`. Chebyshev's ψ is
//! available by two independent routes, the Λ-sum used in production and the
//! logarithm of the exact big-integer `lcm(1, …, N)` kept as an oracle.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::zeta::ZetaZero;

/// `n = p^k` with `p` prime and `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn mangoldt(&self) -> f64 {
        libm::log(self.p as f64)
    }
}

/// An integer together with its prime-power decomposition (if any) and Λ(n).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimePowerEntry {
    pub n: u64,
    pub prime_power: Option<PrimePower>,
    /// Λ(n) in natural-log units.
    pub mangoldt: f64,
}

impl PrimePowerEntry {
    pub fn is_prime_power(&self) -> bool {
        self.prime_power.is_some()
    }
}

/// Both routes to ψ(n) side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiValue {
    pub n: u64,
    pub psi_sum: f64,
    pub psi_lcm: f64,
}

impl PsiValue {
    pub fn discrepancy(&self) -> f64 {
        libm::fabs(self.psi_sum - self.psi_lcm)
    }
}

/// Which route [`chebyshev_psi`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiRoute {
    #[default]
    MangoldtSum,
    ExactLcm,
}

/// Sieve of Eratosthenes. Returns the primes `<= limit` in ascending order;
/// empty when `limit < 2`.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Deterministic trial division by 2, 3 and `6m ± 1`; adequate up to ~10^12.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Decomposes `n` as `p^k` when possible and evaluates Λ(n).
///
/// `n = 0` and `n = 1` are not prime powers.
pub fn decompose_prime_power(n: u64) -> PrimePowerEntry {
    let prime_power = if n < 2 {
        None
    } else {
        let p = smallest_prime_factor(n);
        let mut rest = n;
        let mut k = 0u32;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        (rest == 1).then_some(PrimePower { p, k })
    };
    PrimePowerEntry {
        n,
        prime_power,
        mangoldt: prime_power.map_or(0.0, |pp| pp.mangoldt()),
    }
}

/// Λ(n).
pub fn mangoldt(n: u64) -> f64 {
    decompose_prime_power(n).mangoldt
}

/// All prime powers `<= limit`, ascending: 2, 3, 4, 5, 7, 8, 9, 11, ...
pub fn prime_powers_up_to(limit: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    for p in sieve_primes(limit) {
        let mut value = p;
        let mut k = 1u32;
        loop {
            out.push(PrimePower { p, k });
            match value.checked_mul(p) {
                Some(next) if next <= limit => {
                    value = next;
                    k += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_by_key(PrimePower::value);
    out
}

/// The first `count` prime powers in ascending order.
pub fn first_prime_powers(count: usize) -> Vec<PrimePower> {
    if count == 0 {
        return Vec::new();
    }
    let mut limit = 16u64.max(2 * count as u64);
    loop {
        let mut powers = prime_powers_up_to(limit);
        if powers.len() >= count {
            powers.truncate(count);
            return powers;
        }
        limit *= 2;
    }
}

/// Neumaier-compensated accumulator; keeps ψ sums of ~10^4 terms well inside 1e-12.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// ψ(N) = Σ_{n ≤ N} Λ(n).
pub fn chebyshev_psi_sum(n: u64) -> f64 {
    let mut acc = CompensatedSum::default();
    for pp in prime_powers_up_to(n) {
        acc.add(pp.mangoldt());
    }
    acc.value()
}

/// `table[n] = ψ(n)` for `0 <= n <= nmax` by the Λ-sum route.
pub fn chebyshev_psi_sum_table(nmax: u64) -> Vec<f64> {
    let mut lambda = vec![0.0f64; nmax as usize + 1];
    for pp in prime_powers_up_to(nmax) {
        lambda[pp.value() as usize] = pp.mangoldt();
    }
    let mut acc = CompensatedSum::default();
    lambda
        .into_iter()
        .map(|l| {
            acc.add(l);
            acc.value()
        })
        .collect()
}

/// Natural log of a big integer, accurate to f64 rounding.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return libm::log(x.to_u64().unwrap_or(0) as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap_or(u64::MAX);
    libm::log(top as f64) + shift as f64 * LN_2
}

fn lcm_step(acc: &BigUint, k: u64) -> BigUint {
    let rem = (acc % k).to_u64().unwrap_or(0);
    let g = if rem == 0 { k } else { k.gcd(&rem) };
    acc * (k / g)
}

/// Exact `lcm(1, …, n)` by iterated gcd; `lcm() = 1` for `n = 0`.
pub fn lcm_up_to(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| lcm_step(&acc, k))
}

/// ψ(N) = ln lcm(1, …, N) via the exact big integer.
pub fn chebyshev_psi_lcm(n: u64) -> f64 {
    ln_biguint(&lcm_up_to(n))
}

/// `table[n] = ln lcm(1..n)` for `0 <= n <= nmax`, one running lcm.
pub fn chebyshev_psi_lcm_table(nmax: u64) -> Vec<f64> {
    let mut acc = BigUint::from(1u32);
    let mut out = Vec::with_capacity(nmax as usize + 1);
    out.push(0.0);
    for k in 1..=nmax {
        acc = lcm_step(&acc, k);
        out.push(ln_biguint(&acc));
    }
    out
}

pub fn chebyshev_psi(n: u64, route: PsiRoute) -> f64 {
    match route {
        PsiRoute::MangoldtSum => chebyshev_psi_sum(n),
        PsiRoute::ExactLcm => chebyshev_psi_lcm(n),
    }
}

pub fn psi_value(n: u64) -> PsiValue {
    PsiValue {
        n,
        psi_sum: chebyshev_psi_sum(n),
        psi_lcm: chebyshev_psi_lcm(n),
    }
}

/// Mazur's dictionary entry `vol(K) = ln p` for the knot attached to prime `p`.
pub fn om_knot_volume(p: u64) -> Result<f64> {
    if !is_prime(p) {
        return Err(Error::domain(alloc::format!("{p} is not prime")));
    }
    Ok(libm::log(p as f64))
}

/// Exponent of the OM wave function Ψ̃(N) with Dirac deltas taken as unit
/// samples; identically Λ(N).
pub fn om_wave_exponent(n: u64) -> f64 {
    mangoldt(n)
}

/// Ψ̃(N) = exp(Λ(N)): `p` on `p^k`, 1 elsewhere.
pub fn om_wave_function(n: u64) -> f64 {
    libm::exp(om_wave_exponent(n))
}

/// Truncated explicit formula
///
/// ψ(x) ≈ x − Σ_ρ x^ρ/ρ − ln 2π − ½ ln(1 − x⁻²)
///
/// with ρ = ½ ± iσ, so each listed zero contributes `2·Re(x^ρ/ρ)`.
/// `zeros` must be sorted by σ.
pub fn explicit_formula_psi(x: f64, zeros: &[ZetaZero]) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::domain(alloc::format!(
            "explicit formula needs x > 1, got {x}"
        )));
    }
    if zeros.windows(2).any(|w| w[1].sigma <= w[0].sigma) {
        return Err(Error::invalid("zeros must be sorted by ascending sigma"));
    }
    let ln_x = libm::log(x);
    let sqrt_x = libm::sqrt(x);
    let mut oscillation = CompensatedSum::default();
    for z in zeros {
        // x^ρ/ρ with ρ = ½ + iσ
        let (sin, cos) = libm::sincos(z.sigma * ln_x);
        let (num_re, num_im) = (sqrt_x * cos, sqrt_x * sin);
        let denom = 0.25 + z.sigma * z.sigma;
        let re = (num_re * 0.5 + num_im * z.sigma) / denom;
        oscillation.add(2.0 * re);
    }
    Ok(x - oscillation.value() - libm::log(2.0 * PI) - 0.5 * libm::log(1.0 - 1.0 / (x * x)))
}
