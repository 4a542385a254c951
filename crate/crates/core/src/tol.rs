//! Centralized numeric tolerances.
//!
//! Every certificate records the tolerance it was checked at; the constants
//! here are the defaults used when a caller does not override them.

/// Default certificate tolerance for eigenvalue bound comparisons.
pub const DEFAULT_CERT_TOL: f64 = 1e-8;

/// Relative tolerance for self-adjointness of operator matrices.
pub const HERMITIAN_REL_TOL: f64 = 1e-10;

/// Relative slack allowed below zero for eigenvalues of nominally positive
/// semidefinite matrices (rounding of the eigensolver itself).
pub const PSD_REL_SLACK: f64 = 1e-10;

/// Tolerance for identities that hold exactly up to floating-point
/// reassociation (no analytic error term at all).
pub const EXACT_IDENTITY_TOL: f64 = 1e-12;

/// Relative rank cutoff for singular values when extracting span bases.
pub const RANK_REL_TOL: f64 = 1e-12;
