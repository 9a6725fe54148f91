//! Exact and numerical machinery for quartic polynomial algebras.
//!
//! The crate is `no_std` and only needs `alloc`. Symbolic work is done over
//! arbitrary-precision rationals; matrix checks and the Schrödinger solver use
//! `f64` through `libm`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod example;
pub mod oscillator;
pub mod poisson;
pub mod ratcore;
pub mod schrodinger;
pub mod spectra;

pub use error::{Error, Result};
pub use ratcore::{MultiPoly, Rational, RationalFunction, UniPoly};
