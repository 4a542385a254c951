//! Sampling a scalable frame down to a certified weighted sub-multiset.
//!
//! A scalable frame carries rational squared scalars snapping `(a_j x_j)` to
//! bounds `1 ± eps`. The pipeline decomposes its span into orthogonal blocks
//! with controlled leakage ([`build_block_decomposition`]), patches window
//! families into near-tight unions ([`orthogonal_patch`]), duplicates them
//! into integer multisets, and keeps one partition part per block
//! ([`sample_scalable`]). Every inequality along the way is recorded as a
//! [`Certificate`]; a failing certificate aborts with the block and
//! inequality name instead of returning an uncertified multiset.
//! [`quantize_scaling`] is the standalone scalar quantizer onto the grid
//! `sqrt(m)/N`.

mod blocks;
mod envelope;
mod error;
mod patch;
mod quantize;
mod rational;
mod sample;
mod types;
mod window;

pub use blocks::{block_defect, build_block_decomposition, verify_block_decomposition};
pub use envelope::{cross_term_envelope, CrossTermEnvelope};
pub use error::SamplerError;
pub use patch::{orthogonal_patch, patch_defect, OrthogonalPatch};
pub use quantize::{quantize_scaling, QuantizeConfig, QuantizedScaling};
pub use rational::{approx_ratio, gcd_u128, lcm_capped};
pub use sample::{
    sample_report_to_json, sample_scalable, selection_defect, SampleConfig, SampleReport,
    SequenceChoice,
};
pub use types::{
    BlockDecomposition, Certificate, DuplicationMap, ScalableFrame, DEFAULT_DENOMINATOR_CAP,
};
pub use window::{find_low_energy_pair, find_low_energy_window};
