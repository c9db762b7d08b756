//! Dense complex matrices and the numeric comparison used by the verifier.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// The 1x1 matrix `[value]`; scalars are matrices on the 0-wire boundary.
    pub fn scalar(value: Complex64) -> Self {
        ComplexMatrix {
            rows: 1,
            cols: 1,
            data: vec![value],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_assign_entry(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// `self * other` (ordinary matrix product).
    pub fn matmul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let lhs_row = k * other.cols;
                let out_row = i * other.cols;
                for j in 0..other.cols {
                    out.data[out_row + j] += a * other.data[lhs_row + j];
                }
            }
        }
        out
    }

    /// Kronecker product, left factor most significant.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.data[i1 * self.cols + j1];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for i2 in 0..other.rows {
                    let out_row = (i1 * other.rows + i2) * out.cols + j1 * other.cols;
                    let in_row = i2 * other.cols;
                    for j2 in 0..other.cols {
                        out.data[out_row + j2] = a * other.data[in_row + j2];
                    }
                }
            }
        }
        out
    }

    /// Largest entrywise modulus of `self - other`; `None` on shape mismatch.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Option<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, "  ")?;
                }
                let z = self.get(r, c);
                write!(f, "{:+.3}{:+.3}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of an approximate matrix comparison.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub pass: bool,
    pub max_deviation: f64,
    /// Set when the comparison failed for a structural reason (shape mismatch).
    pub reason: Option<String>,
}

/// Entrywise comparison with absolute tolerance. Shape mismatch is reported
/// as a failed comparison, not an error.
pub fn approx_equal(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Comparison {
    match a.max_abs_diff(b) {
        Some(dev) => Comparison {
            pass: dev <= tol,
            max_deviation: dev,
            reason: None,
        },
        None => Comparison {
            pass: false,
            max_deviation: f64::INFINITY,
            reason: Some(format!(
                "shape mismatch: {}x{} vs {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )),
        },
    }
}

/// Precomputed powers of `xi = e^{2*pi*i/d}` for exponents `0..=d^2`.
///
/// Each power is evaluated at its reduced angle, so `power(j*k)` is as
/// accurate as a single transcendental call even when `j*k >= d`.
#[derive(Debug, Clone)]
pub struct RootOfUnityTable {
    dim: usize,
    powers: Vec<Complex64>,
}

impl RootOfUnityTable {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1);
        let powers = (0..=dim * dim)
            .map(|e| Complex64::from_polar(1.0, TAU * (e % dim) as f64 / dim as f64))
            .collect();
        RootOfUnityTable { dim, powers }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `xi^exponent` for `exponent <= d^2`.
    pub fn power(&self, exponent: usize) -> Complex64 {
        self.powers[exponent]
    }

    /// `conj(xi)^exponent`.
    pub fn power_conj(&self, exponent: usize) -> Complex64 {
        self.powers[exponent].conj()
    }
}
