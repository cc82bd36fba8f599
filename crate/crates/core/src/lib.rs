//! Numerical kernels for observation-modular quantum mechanics (OM-QM).
//!
//! The crate is `no_std` (it needs `alloc`) and carries no IO. Everything here
//! is a pure function of its arguments:
//!
//! * [`numtheory`]: primes, prime powers, von Mangoldt Λ, Chebyshev ψ by two
//!   routes, and the explicit formula rebuilt from zeta zeros.
//! * [`zeta`]: Hardy's Z on the critical line and a sign-change zero finder.
//! * [`dynamics`]: Rössler flow, its Lyapunov spectrum, the Kaplan–Yorke
//!   dimension, and an extended-precision Feigenbaum δ.
//! * [`moduli`]: winding number and scale of planar loops.
//! * [`omqm`]: the correspondence constants and every derived OM quantity.
//!
//! The companion `omqm` crate adds file formats, reports and the CLI.
#![no_std]

extern crate alloc;

pub mod dynamics;
pub mod error;
pub mod moduli;
pub mod numtheory;
pub mod omqm;
pub mod precision;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
