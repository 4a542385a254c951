//! Orthogonal block decomposition of a scalable frame's span.
//!
//! Blocks are grown greedily: block `k+1` spans the rejections of the vectors
//! attached between the two previous cuts, and the next cut is the smallest
//! count whose tail leaks at most the block's leakage budget into the
//! accumulated span. Budgets are halved per block and additionally capped so
//! the budget inequality `eps_n * B (1+eps')(1-eps')^{-2} dim < eps' 8^{-n}`
//! holds with room to spare. Every inequality is re-verified on the finished
//! decomposition; a violation reports the failing block and inequality.

use crate::error::SamplerError;
use crate::types::{BlockDecomposition, Certificate, ScalableFrame};
use frameforge_core::operator::{accumulate_outer, hermitian_eigen_range};
use frameforge_core::subspace::{orthonormal_span_basis, orthonormality_defect, reject};
use frameforge_core::tol::{DEFAULT_CERT_TOL, RANK_REL_TOL};
use frameforge_core::{CMatrix, CVector, Frame};
use frameforge_partition::consts::global_upper_bound;

/// Bound defect `eps'` carried by every block certificate:
/// `6 eps + 4 sqrt(eps) sqrt(1 + 2 eps)`.
pub fn block_defect(epsilon: f64) -> f64 {
    6.0 * epsilon + 4.0 * epsilon.sqrt() * (1.0 + 2.0 * epsilon).sqrt()
}

/// Rejections above this norm count as genuinely new directions; anything
/// smaller is attributed to rounding and treated as contained.
const REJECT_ABS_TOL: f64 = 1e-9;

/// Entry gate shared by the decomposition and the sampling pipeline.
pub(crate) const EPSILON_GATE: f64 = 1.0 / 256.0;

/// Smallest cut greater than `k_cut` whose tail mass, compressed onto the
/// accumulated span, stays within `allow`. The tail operator loses one term
/// per candidate, so the maximum eigenvalue is nonincreasing and the first
/// hit is the smallest valid cut.
fn choose_cut(base: &Frame, scalars: &[f64], acc: &CMatrix, k_cut: usize, allow: f64) -> usize {
    let total = base.len();
    if k_cut >= total {
        return total;
    }
    let m = acc.ncols();
    if m == 0 {
        return k_cut + 1;
    }
    let coords: Vec<CVector> =
        (k_cut + 1..total).map(|j| acc.adjoint() * base.vector(j)).collect();
    let mut t = CMatrix::zeros(m, m);
    for j in k_cut + 1..total {
        accumulate_outer(&mut t, &coords[j - (k_cut + 1)], scalars[j] * scalars[j]);
    }
    for cand in k_cut + 1..total {
        if hermitian_eigen_range(&t).1 <= allow {
            return cand;
        }
        accumulate_outer(&mut t, &coords[cand - (k_cut + 1)], -(scalars[cand] * scalars[cand]));
    }
    // an empty tail leaks exactly nothing
    total
}

pub fn build_block_decomposition(
    scalable: &ScalableFrame,
    truncation: usize,
) -> Result<BlockDecomposition, SamplerError> {
    let eps = scalable.epsilon();
    if eps >= EPSILON_GATE {
        return Err(SamplerError::InvalidInput(format!(
            "epsilon must be below 1/256 for the block pipeline, got {eps}"
        )));
    }
    if truncation == 0 {
        return Err(SamplerError::InvalidInput("truncation must be at least 1".into()));
    }

    let base = scalable.base();
    let scalars = scalable.scalars();
    let dim = base.dim();
    let total = base.len();
    let ep = block_defect(eps);
    let budget_scale = global_upper_bound() * (1.0 + ep) / ((1.0 - ep) * (1.0 - ep));

    let mut subspaces = vec![CMatrix::zeros(dim, 0)];
    let mut cuts = vec![1usize.min(total)];
    let mut leakages = vec![eps / 2.0];
    loop {
        let k = subspaces.len();
        let k_cut = cuts[k - 1];
        let prev_cut = if k >= 2 { cuts[k - 2] } else { 0 };

        let refs: Vec<&CMatrix> = subspaces.iter().collect();
        let acc = frameforge_core::subspace::concat_bases(dim, &refs);
        let mut fresh = Vec::new();
        for j in prev_cut..k_cut {
            let r = reject(&acc, base.vector(j));
            if r.norm() > REJECT_ABS_TOL {
                fresh.push(r);
            }
        }
        let next = if fresh.is_empty() {
            CMatrix::zeros(dim, 0)
        } else {
            orthonormal_span_basis(dim, &fresh, RANK_REL_TOL)
        };

        if k_cut == total && next.ncols() == 0 {
            break;
        }
        if k >= truncation {
            return Err(SamplerError::DecompositionFailure {
                block: k + 1,
                inequality: format!(
                    "truncation budget {truncation} exhausted with {k_cut} of {total} vectors attached"
                ),
            });
        }

        let dim_next = acc.ncols() + next.ncols();
        let cap = if dim_next == 0 {
            f64::INFINITY
        } else {
            ep * 8f64.powi(-((k + 1) as i32)) / (budget_scale * dim_next as f64)
        };
        let eps_next = (leakages[k - 1] / 2.0).min(cap / 2.0);

        let refs2: Vec<&CMatrix> = refs.into_iter().chain(std::iter::once(&next)).collect();
        let acc2 = frameforge_core::subspace::concat_bases(dim, &refs2);
        let cut_next = choose_cut(base, scalars, &acc2, k_cut, eps_next);

        subspaces.push(next);
        cuts.push(cut_next);
        leakages.push(eps_next);
    }

    let decomp = BlockDecomposition { subspaces, cuts, leakages, epsilon_prime: ep };
    let certs = verify_block_decomposition(scalable, &decomp, DEFAULT_CERT_TOL)?;
    if let Some(c) = certs.iter().find(|c| !c.holds()) {
        return Err(SamplerError::DecompositionFailure {
            block: c.block,
            inequality: format!(
                "{} violated: {:.9e} > {:.9e} + {:.1e}",
                c.name, c.lhs, c.rhs, c.tolerance
            ),
        });
    }
    Ok(decomp)
}

/// Re-derives every decomposition inequality as a certificate. The returned
/// list may contain failing certificates; structural mismatches (wrong sizes,
/// non-saturating cuts) error instead.
pub fn verify_block_decomposition(
    scalable: &ScalableFrame,
    decomp: &BlockDecomposition,
    tolerance: f64,
) -> Result<Vec<Certificate>, SamplerError> {
    let nb = decomp.blocks();
    let base = scalable.base();
    let scalars = scalable.scalars();
    let dim = base.dim();
    let total = base.len();
    if nb == 0 || decomp.cuts.len() != nb || decomp.leakages.len() != nb {
        return Err(SamplerError::InvalidInput(
            "decomposition needs equal-length subspace, cut, and leakage lists".into(),
        ));
    }
    if decomp.subspaces.iter().any(|b| b.nrows() != dim) {
        return Err(SamplerError::InvalidInput(
            "block bases must have one row per ambient dimension".into(),
        ));
    }
    if decomp.cuts.windows(2).any(|w| w[0] > w[1]) || decomp.cuts.iter().any(|&c| c > total) {
        return Err(SamplerError::InvalidInput("cuts must be nondecreasing counts".into()));
    }
    if *decomp.cuts.last().unwrap() != total {
        return Err(SamplerError::InvalidInput(format!(
            "cuts must end at the vector count {total}, got {}",
            decomp.cuts.last().unwrap()
        )));
    }
    if decomp.leakages.iter().any(|l| !l.is_finite() || *l < 0.0) {
        return Err(SamplerError::InvalidInput("leakages must be nonnegative".into()));
    }
    let eps = scalable.epsilon();
    let ep = decomp.epsilon_prime;
    if (ep - block_defect(eps)).abs() > 1e-12 {
        return Err(SamplerError::InvalidInput(format!(
            "decomposition carries defect {ep}, expected {} for epsilon {eps}",
            block_defect(eps)
        )));
    }

    let mut certs = Vec::new();

    let full = decomp.span_basis(1, nb);
    certs.push(Certificate::global(
        "orthonormal blocks",
        orthonormality_defect(&full),
        0.0,
        1e-10,
    ));
    certs.push(Certificate::global(
        "span complete",
        dim as f64,
        decomp.total_dim() as f64,
        0.0,
    ));
    let worst_rise = if nb >= 2 {
        decomp.leakages.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max)
    } else {
        0.0
    };
    certs.push(Certificate::global("leakage monotone", worst_rise, 0.0, 0.0));

    // containment: vectors before cut n-1 lie in the first n blocks
    for n in 2..=nb {
        let acc = decomp.span_basis(1, n);
        let upto = decomp.cut(n as i64 - 1).max(0) as usize;
        let mut worst = 0.0f64;
        for j in 0..upto {
            worst = worst.max(reject(&acc, base.vector(j)).norm_squared());
        }
        certs.push(Certificate::for_block(format!("containment n={n}"), n, worst, 0.0, 1e-14));
    }

    // window bounds and leakage per block range m..=n
    for n in 1..=nb {
        let eps_n = decomp.leakages[n - 1];
        for m in 1..=n {
            let basis = decomp.span_basis(m, n);
            if basis.ncols() == 0 {
                continue;
            }
            let lo = decomp.cut(m as i64 - 2).max(0) as usize;
            let hi = decomp.cut(n as i64) as usize;
            let cols = basis.ncols();
            let mut window_op = CMatrix::zeros(cols, cols);
            let mut complement_op = CMatrix::zeros(cols, cols);
            for j in 0..total {
                let w = scalars[j] * scalars[j];
                if w == 0.0 {
                    continue;
                }
                let c = basis.adjoint() * base.vector(j);
                if j >= lo && j < hi {
                    accumulate_outer(&mut window_op, &c, w);
                } else {
                    accumulate_outer(&mut complement_op, &c, w);
                }
            }
            let (wlo, whi) = hermitian_eigen_range(&window_op);
            certs.push(Certificate::for_block(
                format!("window lower m={m} n={n}"),
                n,
                1.0 - 2.0 * eps,
                wlo,
                tolerance,
            ));
            certs.push(Certificate::for_block(
                format!("window upper m={m} n={n}"),
                n,
                whi,
                1.0 + eps,
                tolerance,
            ));
            let leak = hermitian_eigen_range(&complement_op).1;
            certs.push(Certificate::for_block(
                format!("leakage m={m} n={n}"),
                n,
                leak,
                eps_n,
                tolerance,
            ));
        }
    }

    // leakage budgets against the global partition constant
    let budget_scale = global_upper_bound() * (1.0 + ep) / ((1.0 - ep) * (1.0 - ep));
    let mut cum_dim = 0usize;
    for n in 1..=nb {
        cum_dim += decomp.basis(n).ncols();
        certs.push(Certificate::for_block(
            format!("leakage budget n={n}"),
            n,
            decomp.leakages[n - 1] * budget_scale * cum_dim as f64,
            ep * 8f64.powi(-(n as i32)),
            0.0,
        ));
    }

    Ok(certs)
}
