//! Certified partitioning of frames with controlled bounds.
//!
//! The centerpiece is [`reduce_tight_frame`]: a tight frame of unit-ball
//! vectors with bound above 1 is recursively split in two until every part
//! is a frame with lower bound at least 1 and upper bound at most a global
//! constant (about 4.1e3, computed in [`consts`]). Around it sit the
//! exhaustive and heuristic two-way splitters, the subset extraction for
//! frames of short vectors, the extension to non-tight frames, low-trace
//! part selection, a complement-duality checker, and a finite-section
//! stability report. Every returned bound is eigen-verified; when a search
//! cannot certify its target it reports failure rather than an optimistic
//! estimate.

pub mod consts;
mod duality;
mod error;
mod general;
mod mss;
mod reduce;
mod scratch;
mod sections;
mod select;
mod subset;

pub use duality::{complement_duality_check, DualityReport};
pub use error::PartitionError;
pub use general::{partition_general_frame, partition_general_frame_with};
pub use mss::{
    exact_two_partition, exact_two_partition_with_limit, heuristic_two_partition,
    HeuristicOutcome, TwoPartition, DEFAULT_EXHAUSTIVE_LIMIT,
};
pub use reduce::{
    partition_result_to_json, reduce_tight_frame, reduce_tight_frame_with, PartitionResult,
    PartitionStep, ReduceConfig, SplitMethod,
};
pub use sections::{finite_section_partition, finite_section_partition_with, SectionPartition};
pub use select::{multi_level_select, select_low_trace_parts, MultiLevelSelection, SelectedParts};
pub use subset::{subset_tight_frame, subset_tight_frame_with, SubsetSelection};
