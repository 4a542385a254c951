//! Orthonormal span bases, projections, and subspace compressions.

use crate::tol;
use crate::{C64, CMatrix, CVector};

/// Orthonormal basis (as matrix columns) of the span of the given vectors,
/// from the SVD with a relative rank cutoff. Returns a `dim x rank` matrix;
/// rank may be zero.
pub fn orthonormal_span_basis(dim: usize, vectors: &[CVector], rank_rel_tol: f64) -> CMatrix {
    if vectors.is_empty() {
        return CMatrix::zeros(dim, 0);
    }
    let mut m = CMatrix::zeros(dim, vectors.len());
    for (k, v) in vectors.iter().enumerate() {
        m.set_column(k, v);
    }
    let svd = m.svd(true, false);
    let u = svd.u.expect("svd with u requested");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    if smax <= 0.0 {
        return CMatrix::zeros(dim, 0);
    }
    let rank = svd
        .singular_values
        .iter()
        .filter(|&&s| s > rank_rel_tol * smax)
        .count();
    u.columns(0, rank).into_owned()
}

pub fn default_span_basis(dim: usize, vectors: &[CVector]) -> CMatrix {
    orthonormal_span_basis(dim, vectors, tol::RANK_REL_TOL)
}

/// Orthogonal projection of `x` onto the column span of `basis`
/// (columns assumed orthonormal).
pub fn project(basis: &CMatrix, x: &CVector) -> CVector {
    if basis.ncols() == 0 {
        return CVector::zeros(x.len());
    }
    basis * (basis.adjoint() * x)
}

/// Component of `x` orthogonal to the column span of `basis`.
pub fn reject(basis: &CMatrix, x: &CVector) -> CVector {
    x - project(basis, x)
}

/// Compression `Q^* M Q` of a Hermitian matrix onto the subspace with
/// orthonormal basis columns `Q`.
pub fn compress_hermitian(m: &CMatrix, basis: &CMatrix) -> CMatrix {
    let c = basis.adjoint() * m * basis;
    (&c + c.adjoint()).scale(0.5)
}

/// Concatenates orthonormal bases of pairwise-orthogonal subspaces into one
/// basis matrix.
pub fn concat_bases(dim: usize, bases: &[&CMatrix]) -> CMatrix {
    let total: usize = bases.iter().map(|b| b.ncols()).sum();
    let mut q = CMatrix::zeros(dim, total);
    let mut col = 0;
    for b in bases {
        for k in 0..b.ncols() {
            q.set_column(col, &b.column(k));
            col += 1;
        }
    }
    q
}

/// Gram-based orthonormality defect `max |Q^*Q - I|`, for assertions.
pub fn orthonormality_defect(basis: &CMatrix) -> f64 {
    let g = basis.adjoint() * basis;
    let n = g.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            worst = worst.max((g[(i, j)] - target).norm());
        }
    }
    worst
}
