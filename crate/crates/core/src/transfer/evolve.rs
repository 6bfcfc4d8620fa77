use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::TransferError;
use crate::hamiltonian::SingleExcitationHamiltonian;
use crate::spectral::{decompose, DEFAULT_GROUPING_TOL};

/// `exp(-i H t) state`, through the spectral decomposition of `h`.
pub fn evolve(
    h: &SingleExcitationHamiltonian,
    state: &DVector<Complex64>,
    t: f64,
) -> Result<DVector<Complex64>, TransferError> {
    if state.len() != h.n() {
        return Err(TransferError::DimensionMismatch {
            expected: h.n(),
            found: state.len(),
        });
    }
    let norm = state.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(TransferError::NotNormalized(norm));
    }
    let dec = decompose(h, DEFAULT_GROUPING_TOL)?;
    Ok(dec.evolve(state, t))
}

/// `<b| exp(-i H t) |a>` and its magnitude.
pub fn fidelity(
    h: &SingleExcitationHamiltonian,
    a: usize,
    b: usize,
    t: f64,
) -> Result<(Complex64, f64), TransferError> {
    h.support_graph().check_vertex(a)?;
    h.support_graph().check_vertex(b)?;
    let dec = decompose(h, DEFAULT_GROUPING_TOL)?;
    let amp = dec.amplitude(a, b, t);
    Ok((amp, amp.norm()))
}

/// `exp(-i H t)` by scaling-and-squaring Padé, independent of any
/// eigendecomposition.
pub fn propagator_expm(h: &SingleExcitationHamiltonian, t: f64) -> DMatrix<Complex64> {
    (h.matrix() * Complex64::new(0.0, -t)).exp()
}

/// Basis state `|v>` of dimension `n`.
pub fn basis_state(n: usize, v: usize) -> DVector<Complex64> {
    let mut e = DVector::zeros(n);
    e[v] = Complex64::new(1.0, 0.0);
    e
}
