//! Exact invariants of the Lehmer quintic fields `K_n = Q(θ_n)`, where `θ_n` is a
//! root of
//!
//! ```text
//! f_n(x) = x^5 + n^2 x^4 - (2n^3 + 6n^2 + 10n + 10) x^3
//!        + (n^4 + 5n^3 + 11n^2 + 15n + 5) x^2 + (n^3 + 4n^2 + 10n + 10) x + 1
//! ```
//!
//! The crate computes the Pólya group order and rank, the Pólya/non-Pólya
//! verdict, conductor and discriminants, the genus number and the Pólya-number
//! bound, and the index of `θ_n`. The [`analytics`] module holds the
//! supporting sweeps: the integral-point search on `Y^2 = m(X)`, cube-free
//! densities of `g(k) = m_{5k} / 25`, and `ω(m_{5p})` statistics over primes.
//!
//! Everything is `no_std` and needs only `alloc`. Machine-word arithmetic is
//! checked; values that outgrow `u128`/`i128` surface as
//! [`Error::Magnitude`] rather than wrapping.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytics;
pub mod arith;
mod error;
pub mod lehmer;
pub mod polya;
pub mod polyring;
#[cfg(feature = "serde")]
pub mod serde_decimal;

pub use error::{Error, Result};
