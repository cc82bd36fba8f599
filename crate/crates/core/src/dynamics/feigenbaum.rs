//! Feigenbaum's δ from the superstable cascade of the logistic map
//! `x ↦ a·x·(1 − x)`.
//!
//! The superstable parameter `a_n` is where the critical point ½ lies on the
//! period-`2^n` orbit, i.e. the root of `g_n(a) = f_a^{2^n}(½) − ½`. Newton
//! on `g_n` converges quadratically once seeded close enough, and the gaps
//! shrink geometrically:
//!
//! ```text
//! δ_n = (a_{n−1} − a_{n−2}) / (a_n − a_{n−1})  →  δ = 4.6692016091029906…
//! ```
//!
//! δ_n approaches δ only like `δ^{-n}`, so digits past the eighth need
//! periods in the thousands, and the orbit arithmetic has to run well beyond
//! f64. Everything here uses [`Fixed`].

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::precision::{bits_for_digits, Fixed};

pub const MIN_LEVELS: usize = 6;
pub const MAX_LEVELS: usize = 20;
pub const MIN_PRECISION_DIGITS: u32 = 30;

const MAX_NEWTON_ITERATIONS: usize = 200;
const MAX_DAMPING_HALVINGS: u32 = 80;

#[derive(Debug, Clone, PartialEq)]
pub struct FeigenbaumResult {
    /// The last ratio estimate.
    pub delta: Fixed,
    /// `δ_2, δ_3, …`: one entry per level.
    pub ratios: Vec<Fixed>,
    /// Superstable parameters `a_0 = 2, a_1 = 1 + √5, …`.
    pub superstable: Vec<Fixed>,
    /// Decimal digits on which the last two ratios agree.
    pub achieved_digits: u32,
}

impl FeigenbaumResult {
    pub fn delta_f64(&self) -> f64 {
        self.delta.to_f64()
    }
}

/// `g(a) = f_a^{period}(½) − ½` and `g'(a)`.
fn orbit_residual(a: &Fixed, period: u64) -> (Fixed, Fixed) {
    let bits = a.frac_bits();
    let one = Fixed::from_int(1, bits);
    let half = Fixed::from_ratio(1, 2, bits);
    let mut x = half.clone();
    let mut dx = Fixed::zero(bits);
    for _ in 0..period {
        let one_minus_x = &one - &x;
        let x_one_minus_x = &x * &one_minus_x;
        // d/da [a·x(1−x)] = x(1−x) + a·(1 − 2x)·dx
        let slope = &one_minus_x - &x;
        dx = &x_one_minus_x + &(a * &(&slope * &dx));
        x = a * &x_one_minus_x;
    }
    (&x - &half, dx)
}

/// Damped Newton for the period-`2^level` superstable parameter, starting
/// at `seed` and confined to the open interval `(lower, upper)` when given.
fn superstable_parameter(
    level: usize,
    seed: Fixed,
    bounds: Option<(&Fixed, &Fixed)>,
    tolerance: &Fixed,
) -> Result<Fixed> {
    let period = 1u64 << level;
    let mut a = seed;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let (g, dg) = orbit_residual(&a, period);
        if dg.is_zero() {
            return Err(Error::NonConvergence { level });
        }
        let step = &g / &dg;
        let mut next = &a - &step;
        if let Some((lower, upper)) = bounds {
            let mut halvings = 0;
            while next <= *lower || next >= *upper {
                halvings += 1;
                if halvings > MAX_DAMPING_HALVINGS {
                    return Err(Error::NonConvergence { level });
                }
                next = &a - &step.half_pow(halvings);
            }
        }
        let moved = (&next - &a).abs();
        a = next;
        if moved <= *tolerance {
            return Ok(a);
        }
    }
    Err(Error::NonConvergence { level })
}

/// Runs the cascade far enough to produce `levels` ratio estimates, i.e.
/// superstable parameters up to period `2^(levels + 1)`, in fixed point
/// carrying `precision_digits` decimals plus guard bits.
pub fn feigenbaum_delta(levels: usize, precision_digits: u32) -> Result<FeigenbaumResult> {
    if !(MIN_LEVELS..=MAX_LEVELS).contains(&levels) {
        return Err(Error::invalid(format!(
            "levels must lie in {MIN_LEVELS}..={MAX_LEVELS}, got {levels}"
        )));
    }
    if precision_digits < MIN_PRECISION_DIGITS {
        return Err(Error::invalid(format!(
            "at least {MIN_PRECISION_DIGITS} digits of precision are required, got {precision_digits}"
        )));
    }
    let bits = bits_for_digits(precision_digits);
    // Stop Newton 40 bits above the resolution floor.
    let tolerance = Fixed::from_int(1, bits).half_pow(bits - 40);

    let mut superstable: Vec<Fixed> = Vec::with_capacity(levels + 2);
    let mut ratios: Vec<Fixed> = Vec::with_capacity(levels);
    // Coarse seeds for the first two levels; from then on each level is
    // seeded by geometric extrapolation from the previous two.
    superstable.push(superstable_parameter(0, Fixed::from_int(2, bits), None, &tolerance)?);
    let seed = Fixed::from_ratio(32, 10, bits);
    superstable.push(superstable_parameter(1, seed, None, &tolerance)?);

    let mut ratio_guess = Fixed::from_int(4, bits);
    for level in 2..=levels + 1 {
        let prev = &superstable[level - 1];
        let gap = prev - &superstable[level - 2];
        let seed = prev + &(&gap / &ratio_guess);
        let upper = prev + &gap;
        let a = superstable_parameter(level, seed, Some((prev, &upper)), &tolerance)?;
        let ratio = &gap / &(&a - prev);
        superstable.push(a);
        ratio_guess = ratio.clone();
        ratios.push(ratio);
    }

    let delta = ratios.last().cloned().unwrap_or_else(|| Fixed::zero(bits));
    let achieved_digits = agreement_digits(&ratios, precision_digits);
    Ok(FeigenbaumResult {
        delta,
        ratios,
        superstable,
        achieved_digits,
    })
}

fn agreement_digits(ratios: &[Fixed], cap: u32) -> u32 {
    let [.., a, b] = ratios else {
        return 0;
    };
    let diff = (a - b).abs().to_f64();
    let scale = b.to_f64().abs();
    if diff == 0.0 {
        return cap;
    }
    let digits = -libm::log10(diff / scale);
    if digits <= 0.0 {
        0
    } else {
        (libm::floor(digits) as u32).min(cap)
    }
}
