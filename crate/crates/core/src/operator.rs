use crate::error::FrameError;
use crate::frame::Frame;
use crate::tol;
use crate::{C64, CMatrix, CVector};

/// The frame operator `T = sum_j w_j x_j x_j^*` with its structural
/// invariants (self-adjoint, positive semidefinite) verified at construction.
#[derive(Clone, Debug)]
pub struct FrameOperatorMatrix {
    dim: usize,
    entries: CMatrix,
}

/// Eigendecomposition of a self-adjoint matrix, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Columns are the eigenvectors, in the same order as `values`.
    pub vectors: CMatrix,
}

impl FrameOperatorMatrix {
    /// Wraps a matrix after checking it is self-adjoint within
    /// `tol::HERMITIAN_REL_TOL` and positive semidefinite within
    /// `tol::PSD_REL_SLACK` (both relative to the largest magnitude entry).
    pub fn from_entries(entries: CMatrix) -> Result<Self, FrameError> {
        if entries.nrows() != entries.ncols() {
            return Err(FrameError::InvalidInput("operator matrix must be square".into()));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(FrameError::InvalidInput("operator matrix has non-finite entries".into()));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        let asym = (&entries - entries.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if asym > tol::HERMITIAN_REL_TOL * scale {
            return Err(FrameError::InvalidInput(format!(
                "operator matrix is not self-adjoint: asymmetry {asym:.3e} vs scale {scale:.3e}"
            )));
        }
        // Symmetrize exactly so downstream eigensolves see a Hermitian input.
        let entries = (&entries + entries.adjoint()).scale(0.5);
        let m = FrameOperatorMatrix { dim: entries.nrows(), entries };
        let min = m.eigen_min_raw();
        if min < -tol::PSD_REL_SLACK * scale {
            return Err(FrameError::InvalidInput(format!(
                "operator matrix is not positive semidefinite: min eigenvalue {min:.3e}"
            )));
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix {
        self.entries
    }

    pub fn apply(&self, x: &CVector) -> CVector {
        &self.entries * x
    }

    pub fn eigen(&self) -> HermitianEigen {
        hermitian_eigen(&self.entries)
    }

    fn eigen_min_raw(&self) -> f64 {
        self.entries
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// `(smallest, largest)` eigenvalue; tiny negatives inside the PSD slack
    /// are clamped to zero.
    pub fn eigen_bounds(&self) -> (f64, f64) {
        let ev = self.entries.clone().symmetric_eigenvalues();
        let lo = ev.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ev.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (lo.max(0.0), hi.max(0.0))
    }

    /// Operator norm (largest eigenvalue for a PSD matrix).
    pub fn op_norm(&self) -> f64 {
        self.eigen_bounds().1
    }

    /// `T^{-1/2}` via the eigendecomposition. Fails if the smallest
    /// eigenvalue is at or below `tolerance` relative to the largest.
    pub fn inv_sqrt(&self, tolerance: f64) -> Result<CMatrix, FrameError> {
        let eig = self.eigen();
        let hi = eig.values.last().copied().unwrap_or(0.0);
        let lo = eig.values.first().copied().unwrap_or(0.0);
        if hi <= 0.0 || lo <= tolerance * hi {
            return Err(FrameError::NotAFrame { lower: lo.max(0.0), tolerance: tolerance * hi });
        }
        Ok(functional(&eig, |l| l.powf(-0.5)))
    }

    /// `T^{1/2}`; eigenvalues inside the PSD slack are treated as zero.
    pub fn sqrt(&self) -> CMatrix {
        let eig = self.eigen();
        functional(&eig, |l| l.max(0.0).sqrt())
    }

    pub fn inverse(&self, tolerance: f64) -> Result<CMatrix, FrameError> {
        let eig = self.eigen();
        let hi = eig.values.last().copied().unwrap_or(0.0);
        let lo = eig.values.first().copied().unwrap_or(0.0);
        if hi <= 0.0 || lo <= tolerance * hi {
            return Err(FrameError::NotAFrame { lower: lo.max(0.0), tolerance: tolerance * hi });
        }
        Ok(functional(&eig, |l| 1.0 / l))
    }

    /// Largest absolute deviation of `T` from the identity.
    pub fn identity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                worst = worst.max((self.entries[(i, j)] - target).norm());
            }
        }
        worst
    }
}

/// `sum_j w_j x_j x_j^*`, accumulated entrywise so the result is Hermitian by
/// construction.
pub fn frame_operator(frame: &Frame) -> FrameOperatorMatrix {
    let d = frame.dim();
    let mut m = CMatrix::zeros(d, d);
    for j in 0..frame.len() {
        accumulate_outer(&mut m, frame.vector(j), frame.weight(j));
    }
    FrameOperatorMatrix { dim: d, entries: m }
}

/// Adds `w * x x^*` to `m` in place, filling both triangles consistently.
pub fn accumulate_outer(m: &mut CMatrix, x: &CVector, w: f64) {
    let d = x.len();
    for a in 0..d {
        let xa = x[a];
        m[(a, a)] += C64::new(w * xa.norm_sqr(), 0.0);
        for b in (a + 1)..d {
            let v = xa * x[b].conj() * w;
            m[(a, b)] += v;
            m[(b, a)] += v.conj();
        }
    }
}

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted ascending.
pub fn hermitian_eigen(m: &CMatrix) -> HermitianEigen {
    let se = m.clone().symmetric_eigen();
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].total_cmp(&se.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&k| se.eigenvalues[k]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        vectors.set_column(col, &se.eigenvectors.column(k));
    }
    HermitianEigen { values, vectors }
}

/// `(smallest, largest)` eigenvalue of a Hermitian matrix, without the PSD
/// clamp of `FrameOperatorMatrix::eigen_bounds`.
pub fn hermitian_eigen_range(m: &CMatrix) -> (f64, f64) {
    if m.nrows() == 0 {
        return (0.0, 0.0);
    }
    let ev = m.clone().symmetric_eigenvalues();
    let lo = ev.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ev.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

fn functional(eig: &HermitianEigen, f: impl Fn(f64) -> f64) -> CMatrix {
    let n = eig.values.len();
    let mut scaled = eig.vectors.clone();
    for (k, &l) in eig.values.iter().enumerate() {
        let fl = C64::new(f(l), 0.0);
        for r in 0..n {
            scaled[(r, k)] *= fl;
        }
    }
    &scaled * eig.vectors.adjoint()
}
