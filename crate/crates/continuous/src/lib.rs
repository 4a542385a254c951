//! Continuous frames and their certified discretization.
//!
//! A continuous frame assigns a vector `Psi(t)` to every point of a measure
//! space so that `x -> integral |<x, Psi(t)>|^2 dmu(t)` is bounded above and
//! below by positive multiples of `||x||^2`. This crate models such systems
//! over finite unions of boxes (with a density) and atom lists, evaluates
//! their frame operators by Richardson-extrapolated midpoint quadrature,
//! splits the domain into small-oscillation cells, and reduces sampling to
//! the finite scalable-frame pipeline: a near-Parseval model with samples in
//! the unit ball turns into a finite list of domain points with integer
//! multiplicities whose family is eigen-verified against the model's bounds.
//! A bounded frame that is not Parseval is normalized by the inverse square
//! root of its operator first and the samples are mapped back. The reverse
//! direction wraps any sampled multiset as an atomic model under the
//! counting measure.
//!
//! Models carry explicit analytic metadata - a norm bound, an optional
//! modulus of continuity, and a truncation defect where the idealized system
//! lives on an unbounded domain - and every pipeline stage records the
//! inequalities it checked as certificates.

pub mod discretize;
pub mod error;
pub mod generators;
pub mod json;
pub mod model;
pub mod net;
pub mod quadrature;

pub use discretize::{
    discretize_general, discretize_general_with, discretize_parseval, discretize_parseval_with,
    discretize_to_weighted_frame, reverse_direction_measure, DiscretizeConfig,
    SampledContinuousFrame, WeightedDiscretization,
};
pub use error::ContinuousError;
pub use generators::{
    atomic_from_frame, exponential_on_box, exponential_on_set, gabor_stft,
    unbounded_counterexample,
};
pub use json::{model_from_json, model_to_json, sampled_to_json};
pub use model::{ContinuousFrameModel, DomainRegion, Evaluator, GaborWindow, Point};
pub use net::{epsilon_net_discretize, net_l1_defect, DomainPartitionCell};
pub use quadrature::{
    check_continuous_bounds, check_continuous_bounds_with, quadrature_frame_operator,
    quadrature_frame_operator_with, QuadratureConfig,
};
