//! Floating-point geometry of `SL_n(C)/SU(n)` and the numerical side of the
//! Mostow fibration.

pub mod counterexample;
pub mod exhaustion;
pub mod jacobi;
pub mod linalg;
pub mod lm;
pub mod minor;
pub mod mostow;
pub mod quadrature;
pub mod spd;

/// Hermitian symmetry tolerance.
pub const TAU_HERM: f64 = 1e-10;
/// Unitarity tolerance.
pub const TAU_UNIT: f64 = 1e-10;
/// Determinant-one tolerance.
pub const TAU_DET: f64 = 1e-8;
/// Relative tolerance for closed-form against direct cross-checks.
pub const TAU_XCHECK: f64 = 1e-8;
/// Absolute tolerance of the adaptive quadrature.
pub const QUAD_TOL: f64 = 1e-10;
/// Largest accepted condition number.
pub const COND_MAX: f64 = 1e12;
