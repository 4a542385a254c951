//! Partition stability across growing finite sections of a frame.
//!
//! Each section is completed to a K-tight frame of the ambient space by
//! appending unit-ball copies of the deficit operator's eigenvectors, then
//! partitioned by the tight reduction. Because every part has lower bound at
//! least 1 and the parts' operators sum to K·I, a section never produces
//! more than floor(K) parts. The report records the part assignment of each
//! original vector per section and whether consecutive sections agree (up to
//! relabeling) on their shared prefix.

use crate::error::PartitionError;
use crate::reduce::{reduce_tight_frame_with, PartitionResult, ReduceConfig};
use frameforge_core::operator::hermitian_eigen;
use frameforge_core::{frame_operator, C64, CVector, Field, Frame};

#[derive(Clone, Debug)]
pub struct SectionPartition {
    /// Per-section partition of the completed frame.
    pub results: Vec<PartitionResult>,
    /// How many completion vectors each section needed.
    pub completions: Vec<usize>,
    /// Per section: part index of each of its original vectors.
    pub assignments: Vec<Vec<usize>>,
    /// `stabilized[s]`: section s groups the previous section's vectors the
    /// same way the previous section did. Index 0 is vacuously true.
    pub stabilized: Vec<bool>,
    /// First section from which every later comparison holds.
    pub stabilized_at: Option<usize>,
}

pub fn finite_section_partition(
    sections: &[Frame],
    k: f64,
) -> Result<SectionPartition, PartitionError> {
    finite_section_partition_with(sections, k, &ReduceConfig::default())
}

pub fn finite_section_partition_with(
    sections: &[Frame],
    k: f64,
    cfg: &ReduceConfig,
) -> Result<SectionPartition, PartitionError> {
    if sections.is_empty() {
        return Err(PartitionError::InvalidInput("need at least one section".into()));
    }
    if !(k > 1.0) || !k.is_finite() {
        return Err(PartitionError::InvalidInput(format!(
            "tight completion bound must exceed 1, got {k}"
        )));
    }
    validate_nesting(sections)?;

    let tol = cfg.tolerance;
    let max_parts = (k + tol).floor() as usize;
    let mut results = Vec::with_capacity(sections.len());
    let mut completions = Vec::with_capacity(sections.len());
    let mut assignments = Vec::with_capacity(sections.len());

    for (s, section) in sections.iter().enumerate() {
        let max_sq = (0..section.len()).map(|j| section.weighted_sq_norm(j)).fold(0.0, f64::max);
        if max_sq > 1.0 + tol {
            return Err(PartitionError::InvalidInput(format!(
                "section {s}: vectors must lie in the unit ball, largest weighted squared norm is {max_sq:.9}"
            )));
        }
        let completed = complete_to_tight(section, k, tol)?;
        completions.push(completed.len() - section.len());

        let result = reduce_tight_frame_with(&completed, cfg)?;
        if result.parts.len() > max_parts {
            return Err(PartitionError::Numerical(format!(
                "section {s}: {} parts exceeds the cap floor({k}) = {max_parts}",
                result.parts.len()
            )));
        }
        let mut assign = vec![usize::MAX; section.len()];
        for (pi, part) in result.parts.iter().enumerate() {
            for &j in part {
                if j < section.len() {
                    assign[j] = pi;
                }
            }
        }
        assignments.push(assign);
        results.push(result);
    }

    let mut stabilized = vec![true];
    for s in 1..sections.len() {
        let prefix = sections[s - 1].len();
        stabilized.push(same_grouping(&assignments[s - 1], &assignments[s], prefix));
    }
    let stabilized_at = (0..stabilized.len())
        .find(|&s| stabilized.iter().skip(s.max(1)).all(|&ok| ok));

    Ok(SectionPartition { results, completions, assignments, stabilized, stabilized_at })
}

fn validate_nesting(sections: &[Frame]) -> Result<(), PartitionError> {
    let dim = sections[0].dim();
    let field = sections[0].field();
    for (s, sec) in sections.iter().enumerate() {
        if sec.dim() != dim || sec.field() != field {
            return Err(PartitionError::InvalidInput(format!(
                "section {s} does not share the ambient space of section 0"
            )));
        }
        if s == 0 {
            continue;
        }
        let prev = &sections[s - 1];
        if sec.len() < prev.len() {
            return Err(PartitionError::InvalidInput(format!(
                "section {s} is shorter than section {}",
                s - 1
            )));
        }
        for j in 0..prev.len() {
            if sec.vector(j) != prev.vector(j) || sec.weight(j) != prev.weight(j) {
                return Err(PartitionError::InvalidInput(format!(
                    "section {s} does not extend section {}: vector {j} differs",
                    s - 1
                )));
            }
        }
    }
    Ok(())
}

/// Appends eigenvectors of K·I − T, each split into ceil(λ) unit-ball copies
/// of amplitude sqrt(λ/ceil(λ)), so that the result is K-tight.
fn complete_to_tight(section: &Frame, k: f64, tol: f64) -> Result<Frame, PartitionError> {
    let t = frame_operator(section);
    let dim = section.dim();
    let mut deficit = -t.entries().clone();
    for i in 0..dim {
        deficit[(i, i)] += C64::new(k, 0.0);
    }
    let eig = hermitian_eigen(&deficit);
    if let Some(&low) = eig.values.first() {
        if low < -tol * k.max(1.0) {
            return Err(PartitionError::InvalidInput(format!(
                "section exceeds the completion bound: operator eigenvalue {:.9} > {k}",
                k - low
            )));
        }
    }

    let mut vectors: Vec<CVector> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for (i, &lam) in eig.values.iter().enumerate() {
        if lam <= tol {
            continue;
        }
        let copies = lam.ceil() as usize;
        let amp = (lam / copies as f64).sqrt();
        let mut v: CVector = eig.vectors.column(i).into_owned() * C64::new(amp, 0.0);
        if section.field() == Field::Real {
            realign(&mut v)?;
        }
        for _ in 0..copies {
            vectors.push(v.clone());
            weights.push(1.0);
        }
    }
    if vectors.is_empty() {
        return Ok(section.clone());
    }
    let tail = Frame::new(section.field(), dim, vectors, Some(weights))
        .map_err(PartitionError::Frame)?;
    section.concat(&tail).map_err(PartitionError::Frame)
}

/// Rotates a complex eigenvector of a real symmetric matrix onto the real
/// axis; the imaginary residue must vanish.
fn realign(v: &mut CVector) -> Result<(), PartitionError> {
    let lead = v.iter().cloned().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap_or_default();
    if lead.norm() > 0.0 {
        let phase = lead / lead.norm();
        for z in v.iter_mut() {
            *z /= phase;
        }
    }
    let scale = v.norm().max(1.0);
    if v.iter().any(|z| z.im.abs() > 1e-10 * scale) {
        return Err(PartitionError::Numerical(
            "completion eigenvector of a real section is not real".into(),
        ));
    }
    for z in v.iter_mut() {
        z.im = 0.0;
    }
    Ok(())
}

/// True when two assignments induce the same grouping of `0..prefix`.
fn same_grouping(a: &[usize], b: &[usize], prefix: usize) -> bool {
    for i in 0..prefix {
        for j in (i + 1)..prefix {
            if (a[i] == a[j]) != (b[i] == b[j]) {
                return false;
            }
        }
    }
    true
}
