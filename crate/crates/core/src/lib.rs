//! Numerics and exact algebra for the non-compact quantum dilogarithm.
//!
//! The crate evaluates the Barnes-type double-gamma variants `G_b`, `S_b`
//! and `g_b` anywhere in the complex plane, verifies the contour-integral
//! identities they satisfy (Fourier, tau-beta, 4-5, 6-9, 3-2 and their
//! Gamma-function degenerations), and implements the harmonic analysis
//! built on top of them: the principal series of `U_q(gl(2,R))` acting on
//! a dense class of Gaussian test functions, the Casimir eigenfunctions
//! with their Plancherel density, and an exact normal-ordering engine for
//! the q-commuting generators of the quantum Minkowski spacetime together
//! with its Hopf pairing.
//!
//! The crate is `no_std`-compatible (`alloc` required): disable default
//! features and enable `libm` to build without the standard library. The
//! companion CLI crate carries all IO, file formats and the suite runner.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("either the `std` or the `libm` feature must be enabled");

extern crate alloc;

pub mod error;
pub mod gamma;
pub mod identities;
pub mod numerics;
pub mod params;
pub mod qalgebra;
pub mod qdilog;
pub mod representation;
pub mod special;
pub mod wfun;

pub use error::{Error, Result};
pub use numerics::{IndentedContour, QuadConfig, QuadResult};
pub use params::BParams;

/// Complex double used throughout.
pub type C64 = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
