//! Pinned pass criteria of the verification suites.
//!
//! Every tolerance used by `verify` and by the acceptance harness is named
//! here. Relative tolerances apply to nonzero closed-form values; absolute
//! tolerances apply to entries that must vanish.

/// Diagonal of the Bateman, Pasternack and continuous Hahn Gram matrices.
pub const GRAM_DIAG_REL: f64 = 1e-8;

/// Off-diagonal Bateman and Pasternack entries, absolute.
pub const GRAM_OFFDIAG_ABS: f64 = 1e-10;

/// Off-diagonal continuous Hahn entries, relative to `sqrt(|h_n h_m|)`.
/// The norms span many decades at `N = 8`, so a raw absolute bound would
/// be meaningless for some parameter sets and trivial for others.
pub const CHAHN_OFFDIAG_NORMALIZED: f64 = 1e-10;

/// Barnes' first lemma against its gamma closed form.
pub const BARNES_REL: f64 = 1e-9;

/// Fourier and Mellin transform pairs.
pub const TRANSFORM_REL: f64 = 1e-8;

/// Both sides of the Parseval identity.
pub const PARSEVAL_REL: f64 = 1e-8;
pub const PARSEVAL_ABS: f64 = 1e-10;

/// Jacobi orthogonality: diagonal relative, off-diagonal relative to
/// `sqrt(|h_n h_m|)`.
pub const JACOBI_REL: f64 = 1e-9;

/// Agreement of two closed forms evaluated in floating point.
pub const CLOSED_FORM_REL: f64 = 1e-12;

/// Seed of the random Barnes parameter tuples.
pub const BARNES_SEED: u64 = 0x4a61_636f_6269;

/// Number of random Barnes parameter tuples.
pub const BARNES_TUPLES: usize = 10;

/// Largest degree of the Bateman Gram matrix.
pub const BATEMAN_MAX_N: usize = 10;

/// Largest degree of the Pasternack and biorthogonality Gram matrices.
pub const PASTERNACK_MAX_N: usize = 8;

/// Size of the continuous Hahn Gram matrices.
pub const CHAHN_GRAM_SIZE: usize = 8;

/// Largest degree in the transform grids.
pub const TRANSFORM_MAX_N: usize = 8;

/// Largest degree of the Jacobi Gram matrices.
pub const JACOBI_MAX_N: usize = 8;

/// Stand-in for `m → 0` that exercises the series branch of `mπ/sin(mπ)`.
pub const SMALL_M: f64 = 1e-8;

/// Series order of the generating-function checks.
pub const GENFUN_ORDER: usize = 12;
