//! Binary fixed-point reals on top of `BigInt`, for iterations that need more
//! than f64's 16 digits.
//!
//! A [`Fixed`] stores `mantissa / 2^frac_bits`. Operands of a binary
//! operation must share `frac_bits`; mixing precisions is a logic error and
//! panics.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::float::FloatCore;
use num_traits::{Signed, ToPrimitive, Zero};

/// Fractional bits needed for `digits` significant decimals after the point,
/// plus a 64-bit guard band.
pub fn bits_for_digits(digits: u32) -> u32 {
    libm::ceil(digits as f64 * core::f64::consts::LOG2_10) as u32 + 64
}

#[derive(Clone, PartialEq, Eq)]
pub struct Fixed {
    mantissa: BigInt,
    frac_bits: u32,
}

impl Fixed {
    pub fn zero(frac_bits: u32) -> Self {
        Fixed {
            mantissa: BigInt::zero(),
            frac_bits,
        }
    }

    pub fn from_int(value: i64, frac_bits: u32) -> Self {
        Fixed {
            mantissa: BigInt::from(value) << frac_bits,
            frac_bits,
        }
    }

    /// `num / den`, truncated toward zero.
    pub fn from_ratio(num: i64, den: i64, frac_bits: u32) -> Self {
        assert!(den != 0, "zero denominator");
        Fixed {
            mantissa: (BigInt::from(num) << frac_bits) / BigInt::from(den),
            frac_bits,
        }
    }

    /// Exact conversion of a finite f64 (rounded only if `frac_bits` is
    /// too small to hold every bit).
    pub fn from_f64(value: f64, frac_bits: u32) -> Self {
        assert!(value.is_finite(), "non-finite value");
        let (mant, exp, sign) = FloatCore::integer_decode(value);
        let mut m = BigInt::from(mant);
        let shift = exp as i64 + frac_bits as i64;
        if shift >= 0 {
            m <<= shift as usize;
        } else {
            m >>= (-shift) as usize;
        }
        if sign < 0 {
            m = -m;
        }
        Fixed {
            mantissa: m,
            frac_bits,
        }
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.sign() == Sign::Minus
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn abs(&self) -> Self {
        Fixed {
            mantissa: self.mantissa.abs(),
            frac_bits: self.frac_bits,
        }
    }

    /// Multiplies by `2^-k`.
    pub fn half_pow(&self, k: u32) -> Self {
        Fixed {
            mantissa: &self.mantissa >> k,
            frac_bits: self.frac_bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Keep the leading ~60 bits so the integer-to-float step never overflows.
        let bits = self.mantissa.bits() as i64;
        let drop = (bits - 60).max(0);
        let top = (&self.mantissa >> drop as usize).to_f64().unwrap_or(f64::NAN);
        libm::ldexp(top, (drop - self.frac_bits as i64) as i32)
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let mut out = String::new();
        if self.is_negative() {
            out.push('-');
        }
        let m = self.mantissa.abs();
        let int_part = &m >> self.frac_bits;
        let mask = (BigInt::from(1u8) << self.frac_bits) - 1;
        let mut frac = m & mask;
        out.push_str(&alloc::format!("{int_part}"));
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                frac *= 10u8;
                let digit: BigInt = &frac >> self.frac_bits;
                out.push(char::from(b'0' + digit.to_u8().unwrap_or(0)));
                frac -= digit << self.frac_bits;
            }
        }
        out
    }

    fn check(&self, other: &Fixed) {
        assert_eq!(self.frac_bits, other.frac_bits, "mixed fixed-point precisions");
    }
}

impl fmt::Debug for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixed({})", self.to_decimal_string(24))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fixed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check(other);
        self.mantissa.cmp(&other.mantissa)
    }
}

impl<'a> Add<&'a Fixed> for &'a Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        self.check(rhs);
        Fixed {
            mantissa: &self.mantissa + &rhs.mantissa,
            frac_bits: self.frac_bits,
        }
    }
}

impl<'a> Sub<&'a Fixed> for &'a Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        self.check(rhs);
        Fixed {
            mantissa: &self.mantissa - &rhs.mantissa,
            frac_bits: self.frac_bits,
        }
    }
}

impl<'a> Mul<&'a Fixed> for &'a Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        self.check(rhs);
        Fixed {
            mantissa: (&self.mantissa * &rhs.mantissa) >> self.frac_bits,
            frac_bits: self.frac_bits,
        }
    }
}

impl<'a> Div<&'a Fixed> for &'a Fixed {
    type Output = Fixed;
    fn div(self, rhs: &Fixed) -> Fixed {
        self.check(rhs);
        assert!(!rhs.is_zero(), "fixed-point division by zero");
        Fixed {
            mantissa: (&self.mantissa << self.frac_bits) / &rhs.mantissa,
            frac_bits: self.frac_bits,
        }
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed {
            mantissa: -&self.mantissa,
            frac_bits: self.frac_bits,
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Fixed> for Fixed {
            type Output = Fixed;
            fn $method(self, rhs: Fixed) -> Fixed {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);
