//! Eigendecomposition with degeneracy grouping, plus the exact integer
//! engine (characteristic polynomials, integrality) and real-GCD detection
//! of commensurable eigenvalue gaps.

mod charpoly;
mod commensurate;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use thiserror::Error;

use crate::hamiltonian::SingleExcitationHamiltonian;

pub use charpoly::{format_char_poly, integer_char_poly, is_integral_spectrum, IntegralSpectrum};
pub use commensurate::{real_gcd, CommensurabilityResult, DEFAULT_MAX_DENOMINATOR, DEFAULT_RESIDUAL_TOL};

pub const DEFAULT_GROUPING_TOL: f64 = 1e-8;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("eigensolver did not converge for {n}x{n} matrix (max |entry| = {max_abs_entry:e})")]
    EigensolverFailure { n: usize, max_abs_entry: f64 },
    #[error("grouping tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("value {value} at index {index} is not above the residual tolerance")]
    DegenerateInput { index: usize, value: f64 },
    #[error("empty input")]
    EmptyInput,
}

/// One distinct eigenvalue with an orthonormal basis of its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    pub eigenvalue: f64,
    pub basis: Vec<DVector<Complex64>>,
}

impl Eigenspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `P |v>` for the basis state `|v>`.
    pub fn project_basis_state(&self, v: usize) -> DVector<Complex64> {
        let n = self.basis[0].len();
        self.basis
            .iter()
            .fold(DVector::zeros(n), |acc, b| acc + b * b[v].conj())
    }

    pub fn project(&self, state: &DVector<Complex64>) -> DVector<Complex64> {
        let n = state.len();
        self.basis
            .iter()
            .fold(DVector::zeros(n), |acc, b| acc + b * b.dotc(state))
    }

    /// `<a| P |b>`.
    pub fn matrix_element(&self, a: usize, b: usize) -> Complex64 {
        self.basis.iter().map(|x| x[a] * x[b].conj()).sum()
    }

    pub fn projector(&self) -> DMatrix<Complex64> {
        let n = self.basis[0].len();
        self.basis
            .iter()
            .fold(DMatrix::zeros(n, n), |acc, b| acc + b * b.adjoint())
    }
}

/// Distinct eigenvalues in increasing order with their eigenspaces.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    n: usize,
    eigenspaces: Vec<Eigenspace>,
    grouping_tol: f64,
}

impl SpectralDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eigenspaces(&self) -> &[Eigenspace] {
        &self.eigenspaces
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.eigenspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenspaces.is_empty()
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigenspaces.iter().map(|e| e.eigenvalue).collect()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenspaces
            .iter()
            .map(|e| e.eigenvalue.abs())
            .fold(0.0, f64::max)
    }

    /// `max(1, spectral radius)`, the scale used by relative tolerances.
    pub fn scale(&self) -> f64 {
        self.spectral_radius().max(1.0)
    }

    /// `sum_k lambda_k P_k`.
    pub fn reconstruct(&self) -> DMatrix<Complex64> {
        self.eigenspaces
            .iter()
            .fold(DMatrix::zeros(self.n, self.n), |acc, e| {
                acc + e.projector() * Complex64::new(e.eigenvalue, 0.0)
            })
    }

    /// `exp(-i H t) state`.
    pub fn evolve(&self, state: &DVector<Complex64>, t: f64) -> DVector<Complex64> {
        self.eigenspaces
            .iter()
            .fold(DVector::zeros(self.n), |acc, e| {
                acc + e.project(state) * Complex64::from_polar(1.0, -e.eigenvalue * t)
            })
    }

    /// `<b| exp(-i H t) |a>`.
    pub fn amplitude(&self, a: usize, b: usize, t: f64) -> Complex64 {
        self.eigenspaces
            .iter()
            .map(|e| e.matrix_element(b, a) * Complex64::from_polar(1.0, -e.eigenvalue * t))
            .sum()
    }

    /// Per-eigenspace amplitude weights `<b|P_k|a>`, for repeated evaluation
    /// of [`amplitude`](Self::amplitude) at many times.
    pub fn amplitude_terms(&self, a: usize, b: usize) -> Vec<(f64, Complex64)> {
        self.eigenspaces
            .iter()
            .map(|e| (e.eigenvalue, e.matrix_element(b, a)))
            .collect()
    }
}

/// Evaluates `sum_k w_k exp(-i lambda_k t)` for terms from
/// [`SpectralDecomposition::amplitude_terms`].
pub fn eval_terms(terms: &[(f64, Complex64)], t: f64) -> Complex64 {
    terms
        .iter()
        .map(|&(lambda, w)| w * Complex64::from_polar(1.0, -lambda * t))
        .sum()
}

/// Diagonalises `h` and groups eigenvalues closer than
/// `grouping_tol * max(1, spectral radius)` into a single eigenspace.
pub fn decompose(
    h: &SingleExcitationHamiltonian,
    grouping_tol: f64,
) -> Result<SpectralDecomposition, SpectralError> {
    if !(grouping_tol > 0.0) {
        return Err(SpectralError::InvalidTolerance(grouping_tol));
    }
    let n = h.n();
    let failure = || SpectralError::EigensolverFailure {
        n,
        max_abs_entry: h.matrix().iter().map(|z| z.norm()).fold(0.0, f64::max),
    };
    let (values, vectors): (Vec<f64>, Vec<DVector<Complex64>>) = if h.is_real() {
        let real = h.matrix().map(|z| z.re);
        let eig = SymmetricEigen::try_new(real, EIGEN_EPS, EIGEN_MAX_ITER).ok_or_else(failure)?;
        let vecs = (0..n)
            .map(|k| eig.eigenvectors.column(k).map(|x| Complex64::new(x, 0.0)))
            .collect();
        (eig.eigenvalues.iter().copied().collect(), vecs)
    } else {
        let eig = SymmetricEigen::try_new(h.matrix().clone(), EIGEN_EPS, EIGEN_MAX_ITER)
            .ok_or_else(failure)?;
        let vecs = (0..n).map(|k| eig.eigenvectors.column(k).into_owned()).collect();
        (eig.eigenvalues.iter().copied().collect(), vecs)
    };
    if values.iter().any(|v| !v.is_finite()) {
        return Err(failure());
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let radius = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let gap_tol = grouping_tol * radius.max(1.0);

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if values[i] - values[*g.last().expect("nonempty")] <= gap_tol => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let eigenspaces = groups
        .into_iter()
        .map(|g| Eigenspace {
            eigenvalue: g.iter().map(|&i| values[i]).sum::<f64>() / g.len() as f64,
            basis: g.into_iter().map(|i| vectors[i].clone()).collect(),
        })
        .collect();
    Ok(SpectralDecomposition {
        n,
        eigenspaces,
        grouping_tol,
    })
}

/// Projection of `|v>` onto one eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportComponent {
    pub index: usize,
    pub projection: DVector<Complex64>,
    /// `|P_k |v>|`; its square is the weight `a_k`.
    pub norm: f64,
}

pub fn support_components(dec: &SpectralDecomposition, v: usize) -> Vec<SupportComponent> {
    assert!(v < dec.n(), "vertex {v} out of range");
    dec.eigenspaces
        .iter()
        .enumerate()
        .map(|(index, e)| {
            let projection = e.project_basis_state(v);
            let norm = projection.norm();
            SupportComponent {
                index,
                projection,
                norm,
            }
        })
        .collect()
}
