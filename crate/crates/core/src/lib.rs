//! Jacobi and continuous Hahn polynomials, their special cases (Bateman,
//! Pasternack), and machine checks of the identities that connect them:
//! exact checks over Gaussian rationals and quadrature checks of the
//! gamma-weighted orthogonality relations.

pub mod error;
pub mod exact;
pub mod identities;
pub mod numerics;
pub mod operator;
pub mod orthogonality;
pub mod parallel;
pub mod parse;
pub mod polynomials;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod suite;
pub mod tolerances;
pub mod transforms;

pub use error::{Error, Result};
