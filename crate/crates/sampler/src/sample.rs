//! End-to-end sampling of a scalable frame into a weighted index multiset.
//!
//! Each sampling block covers a window of attached vectors. The window's
//! weighted family is patched up to a near-tight union, duplicated into an
//! integer multiset, partitioned with the general engine, and one part
//! survives a multi-level head screening. Selected duplicates accumulate
//! multiplicities per original index; the union over blocks is certified
//! against explicit lower and upper envelopes.

use crate::blocks::{build_block_decomposition, verify_block_decomposition};
use crate::error::SamplerError;
use crate::patch::orthogonal_patch;
use crate::rational::lcm_capped;
use crate::types::{BlockDecomposition, Certificate, DuplicationMap, ScalableFrame};
use frameforge_core::operator::{accumulate_outer, hermitian_eigen_range};
use frameforge_core::tol::DEFAULT_CERT_TOL;
use frameforge_core::{
    frame_bounds, frame_operator, C64, CMatrix, CVector, Field, Frame, FrameBounds,
};
use frameforge_partition::consts::global_upper_bound;
use frameforge_partition::{multi_level_select, partition_general_frame_with, ReduceConfig};

/// Bound defect accumulated by selecting one part per block:
/// `(1+e)(1-e)^{-1} - 1 + e + 2 sqrt(B (1+e)(1-e)^{-1} e)` for the per-block
/// defect `e` and part upper bound `B`.
pub fn selection_defect(epsilon_prime: f64, upper: f64) -> f64 {
    let ratio = (1.0 + epsilon_prime) / (1.0 - epsilon_prime);
    ratio - 1.0 + epsilon_prime + 2.0 * (upper * ratio * epsilon_prime).sqrt()
}

#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// block budget for the orthogonal decomposition
    pub truncation: usize,
    /// largest duplicate family a single block may build
    pub duplicate_cap: usize,
    /// certificate tolerance (scaled by each certificate's magnitude)
    pub tolerance: f64,
    pub partition: ReduceConfig,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            truncation: 64,
            duplicate_cap: 1_000_000,
            tolerance: DEFAULT_CERT_TOL,
            partition: ReduceConfig::default(),
        }
    }
}

/// Deterministic interleaved odd index sequences: smallest values satisfying
/// the ordering `M_1 < M_2 - 2 < M_2 < N_1 < N_1 + 1 < M_3 - 2 < ...`, the
/// spacing `N_r - M_{r+1} - 4 > 2 delta_r^{-2}`, and `sum delta_r^2 < eps^2`
/// via `delta_r = eps 2^{-(r+1)/2}`. At `eps = 0` the spacing defaults to the
/// vector count, which saturates every cut.
#[derive(Clone, Debug)]
pub struct SequenceChoice {
    pub m: Vec<u128>,
    pub n: Vec<u128>,
    pub q: Vec<u128>,
    pub p: Vec<u128>,
    pub delta: Vec<f64>,
}

fn choose_sequences(
    epsilon: f64,
    rounds: usize,
    total: usize,
) -> Result<SequenceChoice, SamplerError> {
    let mut m: Vec<u128> = vec![1, 5];
    let mut n: Vec<u128> = Vec::with_capacity(rounds);
    let mut q: Vec<u128> = vec![0];
    let mut p: Vec<u128> = Vec::with_capacity(rounds);
    let mut delta = Vec::with_capacity(rounds);
    for r in 1..=rounds {
        let d = epsilon * 2f64.powf(-((r + 1) as f64) / 2.0);
        delta.push(d);
        let gap: u128 = if epsilon == 0.0 {
            total as u128
        } else {
            let g = (2.0 / (d * d)).ceil() + 1.0;
            if !g.is_finite() || g >= 1e36 {
                return Err(SamplerError::ResourceLimit(format!(
                    "index-sequence gap at round {r} overflows"
                )));
            }
            g as u128
        };
        // smallest odd integer strictly past M_{r+1} + 4 + gap
        let mut cand = m[r] + 5 + gap;
        if cand % 2 == 0 {
            cand += 1;
        }
        n.push(cand);
        m.push(cand + 6);
        if r >= 2 {
            q.push(n[r - 2] + 2);
        }
        p.push(m[r] + 1);
    }
    Ok(SequenceChoice { m, n, q, p, delta })
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    /// selected original indices, ascending
    pub indices: Vec<usize>,
    /// sampling multiplicity per selected index
    pub multiplicities: Vec<usize>,
    /// eigen bounds of the sampled multiset
    pub bounds: FrameBounds,
    pub epsilon: f64,
    pub epsilon_prime: f64,
    pub epsilon_two: f64,
    /// certified floor `1 - eps' - eps2^2 - eps2 - 4B(1+eps2) eps2`
    pub lower_envelope: f64,
    /// alternate floor `1 - 3 eps2 - 4B(1+eps2) sqrt(eps2)`; the smaller of
    /// the two is the certified one
    pub lower_envelope_alt: f64,
    /// certified ceiling `2B(1+eps2)`
    pub upper_envelope: f64,
    pub sequences: SequenceChoice,
    pub certificates: Vec<Certificate>,
    pub decomposition: BlockDecomposition,
}

fn scaled_cert(name: String, block: usize, lhs: f64, rhs: f64, tol: f64) -> Certificate {
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    Certificate::for_block(name, block, lhs, rhs, tol * scale)
}

pub fn sample_scalable(
    scalable: &ScalableFrame,
    cfg: &SampleConfig,
) -> Result<SampleReport, SamplerError> {
    let eps = scalable.epsilon();
    let base = scalable.base();
    let dim = base.dim();
    let total = base.len();

    let decomp = build_block_decomposition(scalable, cfg.truncation)?;
    let mut certs = verify_block_decomposition(scalable, &decomp, cfg.tolerance)?;
    let mut checked = certs.len(); // the builder already gated these
    let ep = decomp.epsilon_prime;
    let nb = decomp.blocks();
    let seqs = choose_sequences(eps, 9, total)?;
    let b_star = global_upper_bound();
    let part_upper_cap = b_star * (1.0 + ep) / (1.0 - ep);

    let mut multiplicity = vec![0usize; total];

    for r in 1..=8usize {
        let m_r = seqs.m[r - 1].min(nb as u128 + 2) as usize;
        let n_r = seqs.n[r - 1].min(nb as u128) as usize;
        let lo = decomp.cut(m_r as i64 - 2).max(0) as usize;
        let hi = decomp.cut(seqs.n[r - 1].min(i64::MAX as u128) as i64) as usize;
        if lo >= hi {
            // window past every attached vector: sampling is complete
            break;
        }
        if r == 8 {
            return Err(SamplerError::ResourceLimit(
                "sampling did not terminate within 8 blocks".into(),
            ));
        }

        // weighted window family; weights are the snapped squared scalars
        let widx: Vec<usize> = (lo..hi).collect();
        let wvecs: Vec<CVector> = widx.iter().map(|&j| base.vector(j).clone()).collect();
        let wts: Vec<f64> = widx
            .iter()
            .map(|&j| {
                let s = scalable.scalar_sq(j);
                *s.numer() as f64 / *s.denom() as f64
            })
            .collect();
        let wframe = Frame::new(base.field(), dim, wvecs, Some(wts))?;

        // patch the window span before choosing any duplication factor: the
        // union's lower bound decides how many copies are enough
        let u1 = decomp.span_basis(m_r, n_r);
        let patch = orthogonal_patch(&wframe, &u1, 2.0 * eps, cfg.tolerance)?;
        certs.push(scaled_cert(
            format!("block {r} patch union lower"),
            r,
            1.0 - ep,
            patch.union_bounds.lower,
            cfg.tolerance,
        ));
        certs.push(scaled_cert(
            format!("block {r} patch union upper"),
            r,
            patch.union_bounds.upper,
            1.0 + ep,
            cfg.tolerance,
        ));

        // duplication factor: a multiple of the window denominators' lcm
        // clearing both the measured union floor and the analytic one
        let mut l: u128 = 1;
        for &j in &widx {
            l = lcm_capped(l, *scalable.scalar_sq(j).denom() as u128, 1_000_000_000).ok_or_else(
                || SamplerError::ResourceLimit("window denominator lcm exceeds 1e9".into()),
            )?;
        }
        let ell = patch.union_bounds.lower.min(1.0 - ep);
        if ell <= 0.0 {
            return Err(SamplerError::Numerical(format!(
                "block {r} union lower bound {ell} leaves no duplication target"
            )));
        }
        let x = 1.0 / (l as f64 * ell);
        let k_mult = ((x * (1.0 - 1e-12) - 1e-12).ceil()).max(1.0) as u128;
        let d = l
            .checked_mul(k_mult)
            .ok_or_else(|| SamplerError::ResourceLimit("duplication factor overflows".into()))?;
        let df = d as f64;
        certs.push(scaled_cert(
            format!("block {r} duplication floor"),
            r,
            1.0,
            df * (1.0 - ep),
            cfg.tolerance,
        ));

        // integer duplicate counts D a_j^2, plus patch splits sized to stay
        // on the unit ball while reproducing D g g* exactly
        let mut counts: Vec<u128> = Vec::with_capacity(widx.len());
        let mut fam_len: u128 = 0;
        for &j in &widx {
            let s = scalable.scalar_sq(j);
            let c = (d / *s.denom() as u128) * *s.numer() as u128;
            fam_len += c;
            counts.push(c);
        }
        let mut patch_copies: Vec<(CVector, usize)> = Vec::with_capacity(patch.patch.len());
        for g in &patch.patch {
            let copies = ((df * g.norm_squared()).ceil()).max(1.0) as usize;
            fam_len += copies as u128;
            patch_copies.push((g * C64::new((df / copies as f64).sqrt(), 0.0), copies));
        }
        if fam_len > cfg.duplicate_cap as u128 {
            return Err(SamplerError::ResourceLimit(format!(
                "block {r} needs {fam_len} duplicates, more than the cap of {}",
                cfg.duplicate_cap
            )));
        }
        let mut assignments = Vec::new();
        for (&j, &c) in widx.iter().zip(&counts) {
            for _ in 0..c {
                assignments.push(j);
            }
        }
        let dup = DuplicationMap { d, assignments };
        let dup_len = dup.len();

        // the duplicates at weight 1/D reproduce the weighted window operator
        let mut t_dup = CMatrix::zeros(dim, dim);
        for (&j, &c) in widx.iter().zip(&counts) {
            if c > 0 {
                accumulate_outer(&mut t_dup, base.vector(j), c as f64 / df);
            }
        }
        let t_win = frame_operator(&wframe);
        let ident = (&t_dup - t_win.entries())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        certs.push(Certificate::for_block(
            format!("block {r} duplication identity"),
            r,
            ident,
            0.0,
            1e-12,
        ));

        // weight-one family on the unit ball: duplicates then patch copies
        let mut fam_vecs: Vec<CVector> = dup
            .assignments
            .iter()
            .map(|&j| base.vector(j).clone())
            .collect();
        for (v, copies) in &patch_copies {
            for _ in 0..*copies {
                fam_vecs.push(v.clone());
            }
        }
        let family = Frame::new(base.field(), dim, fam_vecs, None)?;
        let partitioned = partition_general_frame_with(&family, &cfg.partition)?;
        let parts = &partitioned.parts;

        // head screening: per level k, the duplicates attached past cut k,
        // compressed onto the first k blocks
        let k_lo = m_r.saturating_sub(2).max(1);
        let k_hi = n_r.min(nb);
        let mut level_frames = Vec::new();
        let mut level_ids = Vec::new();
        for k in k_lo..=k_hi {
            let u_k = decomp.span_basis(1, k);
            let dim_k = u_k.ncols();
            let tail_cap = ep * 2f64.powi(-(k as i32));
            if dim_k == 0 {
                certs.push(Certificate::for_block(
                    format!("block {r} selected tail bessel k={k}"),
                    r,
                    0.0,
                    tail_cap,
                    0.0,
                ));
                continue;
            }
            let cut_k = decomp.cut(k as i64) as usize;
            let vectors: Vec<CVector> = (0..family.len())
                .map(|nn| {
                    if nn < dup_len && dup.assignments[nn] >= cut_k {
                        u_k.adjoint() * base.vector(dup.assignments[nn])
                    } else {
                        CVector::zeros(dim_k)
                    }
                })
                .collect();
            level_frames.push(Frame::new(Field::Complex, dim_k, vectors, None)?);
            level_ids.push(k);
        }
        let m0 = if level_frames.is_empty() {
            0
        } else {
            let sel = multi_level_select(&level_frames, parts)?;
            for (idx, &k) in level_ids.iter().enumerate() {
                certs.push(scaled_cert(
                    format!("block {r} selected tail bessel k={k}"),
                    r,
                    sel.certificates[idx].0,
                    ep * 2f64.powi(-(k as i32)),
                    cfg.tolerance,
                ));
            }
            sel.part
        };
        let part = &parts[m0];

        // operator of the chosen part's duplicates in given coordinates
        let part_dup_op = |basis: &CMatrix| -> CMatrix {
            let mut t = CMatrix::zeros(basis.ncols(), basis.ncols());
            for &nn in part {
                if nn < dup_len {
                    let c = basis.adjoint() * base.vector(dup.assignments[nn]);
                    accumulate_outer(&mut t, &c, 1.0);
                }
            }
            t
        };
        if m_r >= 3 {
            let u_head = decomp.span_basis(1, m_r - 2);
            if u_head.ncols() > 0 {
                let head = hermitian_eigen_range(&part_dup_op(&u_head)).1;
                certs.push(scaled_cert(
                    format!("block {r} leading bessel"),
                    r,
                    head,
                    ep * 2f64.powi(-(r as i32)),
                    cfg.tolerance,
                ));
            }
        }
        if u1.ncols() > 0 {
            let (w_lo, w_hi) = hermitian_eigen_range(&part_dup_op(&u1));
            certs.push(Certificate::for_block(
                format!("block {r} window frame lower"),
                r,
                1.0,
                w_lo,
                cfg.tolerance + cfg.partition.tolerance + 1e-12,
            ));
            certs.push(scaled_cert(
                format!("block {r} window frame upper"),
                r,
                w_hi,
                part_upper_cap,
                cfg.tolerance,
            ));
        }
        let u_ext = decomp.span_basis(m_r.saturating_sub(1).max(1), n_r);
        if u_ext.ncols() > 0 {
            let ext = hermitian_eigen_range(&part_dup_op(&u_ext)).1;
            certs.push(scaled_cert(
                format!("block {r} extended window bessel"),
                r,
                ext,
                part_upper_cap,
                cfg.tolerance,
            ));
        }
        {
            let mut t = CMatrix::zeros(dim, dim);
            for &nn in part {
                if nn < dup_len {
                    accumulate_outer(&mut t, base.vector(dup.assignments[nn]), 1.0);
                }
            }
            let amb = hermitian_eigen_range(&t).1;
            certs.push(scaled_cert(
                format!("block {r} selected bessel"),
                r,
                amb,
                part_upper_cap,
                cfg.tolerance,
            ));
        }

        for &nn in part {
            if nn < dup_len {
                multiplicity[dup.assignments[nn]] += 1;
            }
        }

        while checked < certs.len() {
            if !certs[checked].holds() {
                return Err(SamplerError::SamplingFailure {
                    block: r,
                    inequality: certs[checked].name.clone(),
                });
            }
            checked += 1;
        }
    }

    let indices: Vec<usize> = (0..total).filter(|&j| multiplicity[j] > 0).collect();
    if indices.is_empty() {
        return Err(SamplerError::Numerical("no indices were selected".into()));
    }
    let multiplicities: Vec<usize> = indices.iter().map(|&j| multiplicity[j]).collect();
    let vecs: Vec<CVector> = indices.iter().map(|&j| base.vector(j).clone()).collect();
    let wts: Vec<f64> = multiplicities.iter().map(|&m| m as f64).collect();
    let sampled = Frame::new(base.field(), dim, vecs, Some(wts))?;
    let bounds = frame_bounds(&sampled);

    let eps2 = selection_defect(ep, b_star);
    let upper_envelope = 2.0 * b_star * (1.0 + eps2);
    let lower_envelope = 1.0 - ep - eps2 * eps2 - eps2 - 4.0 * b_star * (1.0 + eps2) * eps2;
    let lower_envelope_alt = 1.0 - 3.0 * eps2 - 4.0 * b_star * (1.0 + eps2) * eps2.sqrt();
    let floor = lower_envelope.min(lower_envelope_alt);
    certs.push(scaled_cert(
        "final lower envelope".into(),
        0,
        floor,
        bounds.lower,
        cfg.tolerance,
    ));
    certs.push(scaled_cert(
        "final upper envelope".into(),
        0,
        bounds.upper,
        upper_envelope,
        cfg.tolerance,
    ));
    while checked < certs.len() {
        if !certs[checked].holds() {
            return Err(SamplerError::SamplingFailure {
                block: 0,
                inequality: certs[checked].name.clone(),
            });
        }
        checked += 1;
    }

    Ok(SampleReport {
        indices,
        multiplicities,
        bounds,
        epsilon: eps,
        epsilon_prime: ep,
        epsilon_two: eps2,
        lower_envelope,
        lower_envelope_alt,
        upper_envelope,
        sequences: seqs,
        certificates: certs,
        decomposition: decomp,
    })
}

/// Deterministic JSON for a sampling report; certificate names map to their
/// tolerance-inclusive slacks, in emission order.
pub fn sample_report_to_json(report: &SampleReport) -> String {
    use frameforge_core::json::fmt_f64;
    use std::fmt::Write as _;

    let mut s = String::from("{\"indices\":[");
    for (i, j) in report.indices.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{j}");
    }
    s.push_str("],\"multiplicities\":[");
    for (i, m) in report.multiplicities.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{m}");
    }
    let _ = write!(
        s,
        "],\"bounds\":[{},{}],\"epsilon\":{},\"certificates\":{{",
        fmt_f64(report.bounds.lower),
        fmt_f64(report.bounds.upper),
        fmt_f64(report.epsilon)
    );
    for (i, c) in report.certificates.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "\"{}\":{}", c.name, fmt_f64(c.slack()));
    }
    s.push_str("}}");
    s
}
