//! Phase vectors: the complex parameters carried by Z (white) spiders.
//!
//! A spider of dimension `d` is parameterised by `(a_1, ..., a_{d-1})`;
//! the leading coefficient `a_0 = 1` is implicit and never stored.

use std::f64::consts::PI;

use num_complex::Complex64;

/// The `(a_1, ..., a_{d-1})` parameter of a Z spider of dimension `d = entries.len() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector {
    entries: Vec<Complex64>,
}

impl PhaseVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        PhaseVector { entries }
    }

    /// Dimension of the carrying wire; the empty vector has dimension 1.
    pub fn dim(&self) -> usize {
        self.entries.len() + 1
    }

    /// Coefficient `a_j`, including the implicit `a_0 = 1`.
    pub fn coefficient(&self, j: usize) -> Complex64 {
        if j == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            self.entries[j - 1]
        }
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// All entries equal to `value`.
    pub fn constant(dim: usize, value: Complex64) -> Self {
        assert!(dim >= 1, "phase vector needs dimension >= 1");
        PhaseVector::new(vec![value; dim - 1])
    }

    /// The no-phase spider parameter `(1, ..., 1)`.
    pub fn ones(dim: usize) -> Self {
        Self::constant(dim, Complex64::new(1.0, 0.0))
    }

    /// The antipode parameter `(-1, ..., -1)`.
    pub fn minus_ones(dim: usize) -> Self {
        Self::constant(dim, Complex64::new(-1.0, 0.0))
    }

    /// `(xi^{1}, xi^{4}, ..., xi^{k^2}, ...)` with `xi = e^{2*pi*i/d}`: the phase
    /// a wire picks up when one side of a braid is traced out.
    pub fn braid_loop(dim: usize) -> Self {
        Self::from_angles(dim, |k, d| 2.0 * PI * ((k * k) % d) as f64 / d as f64)
    }

    /// Conjugate of [`PhaseVector::braid_loop`]; the inverse-braid trace.
    pub fn braid_loop_conj(dim: usize) -> Self {
        Self::from_angles(dim, |k, d| -2.0 * PI * ((k * k) % d) as f64 / d as f64)
    }

    /// `(xi^{j}, xi^{2j}, ..., xi^{(d-1)j})`: the harmonic column used to build
    /// X spiders by Hadamard conjugation.
    pub fn fourier(dim: usize, j: usize) -> Self {
        Self::from_angles(dim, |k, d| 2.0 * PI * ((k * j) % d) as f64 / d as f64)
    }

    /// `(e^{i t_1}, ..., e^{i t_{d-1}})` with `t_k = k*pi + k^2*pi/d`: the
    /// half-angle Gauss phases of the red tau gate.
    pub fn gauss(dim: usize) -> Self {
        Self::from_angles(dim, |k, d| k as f64 * PI + (k * k) as f64 * PI / d as f64)
    }

    /// `(0, ..., 0, 1/d - 1)`. Closing a loop through a spider with this
    /// parameter yields the scalar `1/d`.
    pub fn inverse_dim(dim: usize) -> Self {
        assert!(dim >= 1);
        let mut entries = vec![Complex64::new(0.0, 0.0); dim - 1];
        if dim >= 2 {
            entries[dim - 2] = Complex64::new(1.0 / dim as f64 - 1.0, 0.0);
        }
        PhaseVector::new(entries)
    }

    /// Entrywise product, the fused parameter of two spiders joined by a wire.
    pub fn entrywise_mul(&self, other: &PhaseVector) -> PhaseVector {
        assert_eq!(self.dim(), other.dim());
        PhaseVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    /// Entrywise sum, the parameter produced by the addition gadget.
    pub fn entrywise_add(&self, other: &PhaseVector) -> PhaseVector {
        assert_eq!(self.dim(), other.dim());
        PhaseVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn from_angles(dim: usize, angle: impl Fn(usize, usize) -> f64) -> Self {
        assert!(dim >= 1);
        PhaseVector::new(
            (1..dim)
                .map(|k| Complex64::from_polar(1.0, angle(k, dim)))
                .collect(),
        )
    }
}
