use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TransferError;
use crate::graph::Graph;
use crate::hamiltonian::SingleExcitationHamiltonian;
use crate::spectral::{decompose, DEFAULT_GROUPING_TOL};

/// For a real, field-free Hamiltonian on a bipartite graph, amplitudes
/// between same-coloured vertices are real and between opposite colours
/// imaginary, at every time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PhaseClass {
    PurelyReal(Complex64),
    PurelyImaginary(Complex64),
}

impl PhaseClass {
    pub fn amplitude(&self) -> Complex64 {
        match *self {
            PhaseClass::PurelyReal(z) | PhaseClass::PurelyImaginary(z) => z,
        }
    }

    /// The component that must vanish for this class.
    pub fn residual(&self) -> f64 {
        match *self {
            PhaseClass::PurelyReal(z) => z.im.abs(),
            PhaseClass::PurelyImaginary(z) => z.re.abs(),
        }
    }
}

/// Classifies `<m| exp(-iHt) |a>` by the colours of `a` and `m`.
///
/// The class is predicted from the colouring; the returned amplitude is the
/// computed one, so `residual()` measures how well the prediction holds.
pub fn bipartite_phase_class(
    g: &Graph,
    h: &SingleExcitationHamiltonian,
    a: usize,
    m: usize,
    t: f64,
) -> Result<PhaseClass, TransferError> {
    g.check_vertex(a)?;
    g.check_vertex(m)?;
    if h.n() != g.n() {
        return Err(TransferError::DimensionMismatch {
            expected: g.n(),
            found: h.n(),
        });
    }
    let coloring = g.bipartite_coloring();
    if !coloring.valid {
        return Err(TransferError::NotBipartite);
    }
    if !h.is_real() {
        return Err(TransferError::NonRealHamiltonian);
    }
    if !h.has_zero_diagonal() {
        return Err(TransferError::NonzeroDiagonal);
    }
    if let Some((u, v)) = h.support_graph().edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(TransferError::SupportNotInGraph(u, v));
    }
    let amp = decompose(h, DEFAULT_GROUPING_TOL)?.amplitude(a, m, t);
    Ok(if coloring.colors[a] == coloring.colors[m] {
        PhaseClass::PurelyReal(amp)
    } else {
        PhaseClass::PurelyImaginary(amp)
    })
}
