//! Exact-arithmetic construction of algebraic-geometry codes over the
//! rational function field `F_q(x)` and of their conorm codes over explicit
//! curve extensions (Kummer, Artin-Schreier, constant-field), together with
//! hull-dimension computation by two independent linear-algebra oracles.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `agchull` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod agcodes;
pub mod conormcodes;
pub mod divisors;
pub mod error;
pub mod extensions;
pub mod fflinalg;
pub mod galois;
pub mod rational;
pub mod riemannroch;

pub use error::{Error, Result};
pub use rational::Ratio;
