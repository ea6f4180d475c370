//! Exact univariate polynomial arithmetic (including brute-force
//! factorization over tiny fields) and exact matrix algebra over `GF(q)`:
//! reduction, rank, kernels, row-space intersection and equality.

mod matrix;
mod poly;

pub use matrix::Matrix;
pub use poly::{factor_univariate, Poly};
