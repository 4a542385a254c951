use crate::error::FrameError;
use crate::{C64, CMatrix, CVector};
use nalgebra::DVector;

/// Scalar field of a frame. Declared explicitly, never inferred from data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Real => "real",
            Field::Complex => "complex",
        }
    }
}

/// A finite, optionally weighted family of vectors in `R^dim` or `C^dim`.
///
/// Storage is complex for both fields; real-field frames must have exactly
/// zero imaginary parts. A weight `w_j` multiplies the rank-one term
/// `x_j x_j^*` in the frame operator, so scaling a vector's amplitude by `c`
/// is equivalent to scaling its weight by `c^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    field: Field,
    dim: usize,
    vectors: Vec<CVector>,
    weights: Option<Vec<f64>>,
}

impl Frame {
    pub fn new(
        field: Field,
        dim: usize,
        vectors: Vec<CVector>,
        weights: Option<Vec<f64>>,
    ) -> Result<Self, FrameError> {
        if dim == 0 {
            return Err(FrameError::InvalidInput("dimension must be positive".into()));
        }
        if vectors.is_empty() {
            return Err(FrameError::InvalidInput("frame needs at least one vector".into()));
        }
        for (j, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(FrameError::InvalidInput(format!(
                    "vector {j} has length {} but dim is {dim}",
                    v.len()
                )));
            }
            for (k, z) in v.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(FrameError::InvalidInput(format!(
                        "vector {j} entry {k} is not finite"
                    )));
                }
                if field == Field::Real && z.im != 0.0 {
                    return Err(FrameError::InvalidInput(format!(
                        "real-field frame has nonzero imaginary part at vector {j} entry {k}"
                    )));
                }
            }
        }
        if let Some(w) = &weights {
            if w.len() != vectors.len() {
                return Err(FrameError::InvalidInput(format!(
                    "{} weights for {} vectors",
                    w.len(),
                    vectors.len()
                )));
            }
            if let Some((j, _)) = w.iter().enumerate().find(|(_, x)| !x.is_finite() || **x < 0.0) {
                return Err(FrameError::InvalidInput(format!(
                    "weight {j} must be nonnegative and finite"
                )));
            }
        }
        Ok(Frame { field, dim, vectors, weights })
    }

    /// Real-field frame from real vectors.
    pub fn real(dim: usize, vectors: Vec<DVector<f64>>) -> Result<Self, FrameError> {
        let vs = vectors.into_iter().map(|v| v.map(|x| C64::new(x, 0.0))).collect();
        Frame::new(Field::Real, dim, vs, None)
    }

    pub fn real_weighted(
        dim: usize,
        vectors: Vec<DVector<f64>>,
        weights: Vec<f64>,
    ) -> Result<Self, FrameError> {
        let vs = vectors.into_iter().map(|v| v.map(|x| C64::new(x, 0.0))).collect();
        Frame::new(Field::Real, dim, vs, Some(weights))
    }

    pub fn complex(dim: usize, vectors: Vec<CVector>) -> Result<Self, FrameError> {
        Frame::new(Field::Complex, dim, vectors, None)
    }

    pub fn complex_weighted(
        dim: usize,
        vectors: Vec<CVector>,
        weights: Vec<f64>,
    ) -> Result<Self, FrameError> {
        Frame::new(Field::Complex, dim, vectors, Some(weights))
    }

    /// The standard orthonormal basis as a frame.
    pub fn standard_basis(field: Field, dim: usize) -> Self {
        let vectors = (0..dim)
            .map(|k| {
                let mut v = CVector::zeros(dim);
                v[k] = C64::new(1.0, 0.0);
                v
            })
            .collect();
        Frame { field, dim, vectors, weights: None }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one vector by construction
    }

    pub fn vector(&self, j: usize) -> &CVector {
        &self.vectors[j]
    }

    pub fn vectors(&self) -> &[CVector] {
        &self.vectors
    }

    pub fn weight(&self, j: usize) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[j])
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// `w_j ||x_j||^2`, the diagonal of the Gram form.
    pub fn weighted_sq_norm(&self, j: usize) -> f64 {
        self.weight(j) * self.vectors[j].norm_squared()
    }

    pub fn max_weighted_sq_norm(&self) -> f64 {
        (0..self.len()).map(|j| self.weighted_sq_norm(j)).fold(0.0, f64::max)
    }

    /// Multiset selection by index; repeated indices repeat vectors.
    pub fn subframe(&self, indices: &[usize]) -> Result<Self, FrameError> {
        if indices.is_empty() {
            return Err(FrameError::InvalidInput("subframe needs at least one index".into()));
        }
        if let Some(&bad) = indices.iter().find(|&&j| j >= self.len()) {
            return Err(FrameError::InvalidInput(format!(
                "subframe index {bad} out of range for {} vectors",
                self.len()
            )));
        }
        let vectors = indices.iter().map(|&j| self.vectors[j].clone()).collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| indices.iter().map(|&j| w[j]).collect());
        Ok(Frame { field: self.field, dim: self.dim, vectors, weights })
    }

    /// All vectors scaled by the same factor (weights untouched).
    pub fn scaled(&self, c: f64) -> Result<Self, FrameError> {
        if !c.is_finite() {
            return Err(FrameError::InvalidInput("scale factor must be finite".into()));
        }
        let s = C64::new(c, 0.0);
        let vectors = self.vectors.iter().map(|v| v * s).collect();
        Frame::new(self.field, self.dim, vectors, self.weights.clone())
    }

    /// Per-vector amplitudes: vector `j` becomes `a_j x_j`. Amplitudes may be
    /// zero (the resulting vector stays in the frame as a zero vector).
    pub fn with_amplitudes(&self, amps: &[f64]) -> Result<Self, FrameError> {
        if amps.len() != self.len() {
            return Err(FrameError::InvalidInput(format!(
                "{} amplitudes for {} vectors",
                amps.len(),
                self.len()
            )));
        }
        if let Some((j, _)) = amps.iter().enumerate().find(|(_, a)| !a.is_finite() || **a < 0.0) {
            return Err(FrameError::InvalidInput(format!(
                "amplitude {j} must be nonnegative and finite"
            )));
        }
        let vectors = self
            .vectors
            .iter()
            .zip(amps)
            .map(|(v, &a)| v * C64::new(a, 0.0))
            .collect();
        Frame::new(self.field, self.dim, vectors, self.weights.clone())
    }

    /// Applies a matrix to every vector, keeping weights. The result is
    /// complex-field unless the matrix is entirely real and the frame was
    /// real.
    pub fn apply_matrix(&self, m: &CMatrix) -> Result<Self, FrameError> {
        if m.ncols() != self.dim {
            return Err(FrameError::InvalidInput(format!(
                "matrix has {} columns but frame dim is {}",
                m.ncols(),
                self.dim
            )));
        }
        let real = self.field == Field::Real && m.iter().all(|z| z.im == 0.0);
        let field = if real { Field::Real } else { Field::Complex };
        let vectors = self.vectors.iter().map(|v| m * v).collect();
        Frame::new(field, m.nrows(), vectors, self.weights.clone())
    }

    /// Concatenates two frames over the same space into one family.
    pub fn concat(&self, other: &Frame) -> Result<Self, FrameError> {
        if self.dim != other.dim {
            return Err(FrameError::InvalidInput("dimension mismatch in concat".into()));
        }
        if self.field != other.field {
            return Err(FrameError::InvalidInput("field mismatch in concat".into()));
        }
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        let weights = match (&self.weights, &other.weights) {
            (None, None) => None,
            _ => {
                let mut w: Vec<f64> = (0..self.len()).map(|j| self.weight(j)).collect();
                w.extend((0..other.len()).map(|j| other.weight(j)));
                Some(w)
            }
        };
        Frame::new(self.field, self.dim, vectors, weights)
    }
}
