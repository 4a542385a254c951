//! Finite frame primitives.
//!
//! A frame for an n-dimensional space is a finite family of vectors `x_j`
//! (optionally carrying positive weights `w_j`) such that the quadratic form
//! `x -> sum_j w_j |<x, x_j>|^2` is bounded above and below by positive
//! multiples of `||x||^2`. The two extreme multipliers are the frame bounds;
//! they are the extreme eigenvalues of the frame operator
//! `T = sum_j w_j x_j x_j^*`.
//!
//! This crate provides the `Frame` container, the frame operator, eigenvalue
//! bound certificates, Parseval normalization by `T^{-1/2}`, randomized
//! Rayleigh-quotient probes, and a deterministic JSON interchange format.

pub mod bounds;
pub mod error;
pub mod frame;
pub mod json;
pub mod operator;
pub mod parseval;
pub mod probe;
pub mod subspace;
pub mod tol;

pub use bounds::{frame_bounds, frame_bounds_with_tol, transformed_bounds, BoundsMethod, FrameBounds};
pub use error::FrameError;
pub use frame::{Field, Frame};
pub use operator::{frame_operator, FrameOperatorMatrix, HermitianEigen};
pub use parseval::{parseval_normalize, ParsevalNormalization};
pub use probe::rayleigh_probe;

/// Complex scalar used for all internal storage. Real-field frames keep the
/// imaginary parts identically zero.
pub type C64 = nalgebra::Complex<f64>;
pub type CVector = nalgebra::DVector<C64>;
pub type CMatrix = nalgebra::DMatrix<C64>;
