//! Real-symmetric scratch space for subset spectral bounds.
//!
//! The split searches evaluate eigenvalues of many subset operators. To keep
//! that loop in plain `f64`, a complex frame in dimension d embeds into the
//! real dimension 2d: a vector z = u + iv contributes the two real columns
//! [u; v] and [-v; u], and the embedded sum has the same spectrum as the
//! complex operator (with doubled multiplicity). Real frames embed as
//! themselves. Weights fold into the columns as sqrt(w).

use frameforge_core::{Field, Frame};
use nalgebra::{DMatrix, DVector};

pub struct RealEmbedding {
    dim: usize,
    columns: Vec<Vec<DVector<f64>>>,
}

impl RealEmbedding {
    pub fn from_frame(frame: &Frame) -> Self {
        let d = frame.dim();
        match frame.field() {
            Field::Real => {
                let columns = (0..frame.len())
                    .map(|j| {
                        let s = frame.weight(j).sqrt();
                        vec![frame.vector(j).map(|z| s * z.re)]
                    })
                    .collect();
                RealEmbedding { dim: d, columns }
            }
            Field::Complex => {
                let columns = (0..frame.len())
                    .map(|j| {
                        let s = frame.weight(j).sqrt();
                        let z = frame.vector(j);
                        let mut a = DVector::<f64>::zeros(2 * d);
                        let mut b = DVector::<f64>::zeros(2 * d);
                        for i in 0..d {
                            a[i] = s * z[i].re;
                            a[d + i] = s * z[i].im;
                            b[i] = -s * z[i].im;
                            b[d + i] = s * z[i].re;
                        }
                        vec![a, b]
                    })
                    .collect();
                RealEmbedding { dim: 2 * d, columns }
            }
        }
    }

    pub fn zero_operator(&self) -> DMatrix<f64> {
        DMatrix::zeros(self.dim, self.dim)
    }

    /// Adds (`sign` = 1.0) or removes (`sign` = -1.0) index `j`'s rank-one
    /// terms from the accumulated operator.
    pub fn apply_index(&self, m: &mut DMatrix<f64>, j: usize, sign: f64) {
        for col in &self.columns[j] {
            for r in 0..self.dim {
                let vr = sign * col[r];
                if vr == 0.0 {
                    continue;
                }
                for c in 0..self.dim {
                    m[(r, c)] += vr * col[c];
                }
            }
        }
    }

    pub fn operator_of(&self, indices: impl IntoIterator<Item = usize>) -> DMatrix<f64> {
        let mut m = self.zero_operator();
        for j in indices {
            self.apply_index(&mut m, j, 1.0);
        }
        m
    }

    /// Weighted squared norm of index `j` (its singleton Bessel bound).
    pub fn sq_norm(&self, j: usize) -> f64 {
        self.columns[j][0].norm_squared()
    }
}

/// Largest eigenvalue of a small symmetric matrix; 0 for the empty matrix.
pub fn lambda_max(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    m.clone().symmetric_eigenvalues().iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

