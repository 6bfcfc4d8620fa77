use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{TransferError, TransferVerdict};
use crate::spectral::SpectralDecomposition;

/// Unitary `S`, diagonal in the eigenbasis of `H`, with `S|a> = |b>`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryOperator {
    pub matrix: DMatrix<Complex64>,
}

fn max_entry(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl SymmetryOperator {
    /// `max |(S S^dagger - 1)_ij|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.matrix.nrows();
        max_entry(&(&self.matrix * self.matrix.adjoint() - DMatrix::identity(n, n)))
    }

    /// `max |(S H S^dagger - H)_ij|`.
    pub fn commutation_defect(&self, h: &DMatrix<Complex64>) -> f64 {
        max_entry(&(&self.matrix * h * self.matrix.adjoint() - h))
    }

    /// `|S|a> - |b>|`.
    pub fn mapping_defect(&self, a: usize, b: usize) -> f64 {
        let mut col = self.matrix.column(a).into_owned();
        col[b] -= Complex64::new(1.0, 0.0);
        col.norm()
    }

    /// `max |(S^2 - 1)_ij|`.
    pub fn involution_defect(&self) -> f64 {
        let n = self.matrix.nrows();
        max_entry(&(&self.matrix * &self.matrix - DMatrix::identity(n, n)))
    }

    /// Whether `S` is a permutation matrix to within `tol`.
    pub fn is_permutation(&self, tol: f64) -> bool {
        let n = self.matrix.nrows();
        (0..n).all(|i| {
            let row = self.matrix.row(i);
            let ones = row.iter().filter(|z| (**z - Complex64::new(1.0, 0.0)).norm() <= tol).count();
            let zeros = row.iter().filter(|z| z.norm() <= tol).count();
            ones == 1 && zeros == n - 1
        })
    }
}

/// `S = sum_supported e^{i phi_k} P_k + sum_unsupported P_k`.
///
/// The phases of unsupported eigenspaces are free; they are fixed to 1.
/// `phases` lists `(eigenspace index, phi_k)` for the supported eigenspaces,
/// as produced by a verdict that passed the proportionality test.
pub fn symmetry_operator(
    dec: &SpectralDecomposition,
    phases: &[(usize, f64)],
) -> Result<SymmetryOperator, TransferError> {
    if phases.is_empty() {
        return Err(TransferError::PhaseUndefined("no supported eigenspaces given".into()));
    }
    let mut factors = vec![Complex64::new(1.0, 0.0); dec.len()];
    for &(k, phi) in phases {
        if k >= dec.len() {
            return Err(TransferError::PhaseUndefined(format!("eigenspace {k} does not exist")));
        }
        factors[k] = Complex64::from_polar(1.0, phi);
    }
    let n = dec.n();
    let matrix = dec
        .eigenspaces()
        .iter()
        .zip(factors)
        .fold(DMatrix::zeros(n, n), |acc, (e, f)| acc + e.projector() * f);
    Ok(SymmetryOperator { matrix })
}

impl TransferVerdict {
    /// `(eigenspace index, phi_k)` pairs for [`symmetry_operator`]; errors
    /// unless the proportionality test passed.
    pub fn phase_table(&self) -> Result<Vec<(usize, f64)>, TransferError> {
        if self.phases.is_empty() {
            return Err(TransferError::PhaseUndefined(format!("{}", self.status)));
        }
        Ok(self.phases.iter().map(|p| (p.index, p.phase)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hamiltonian::{adjacency_hamiltonian, asymmetric_five_chain, chain_hamiltonian};
    use crate::spectral::{decompose, DEFAULT_GROUPING_TOL};
    use crate::transfer::check_transfer;

    fn operator_for(h: &crate::hamiltonian::SingleExcitationHamiltonian, a: usize, b: usize) -> SymmetryOperator {
        let v = check_transfer(h, a, b).unwrap();
        let dec = decompose(h, DEFAULT_GROUPING_TOL).unwrap();
        symmetry_operator(&dec, &v.phase_table().unwrap()).unwrap()
    }

    #[test]
    fn path3_symmetry_is_the_mirror() {
        let h = adjacency_hamiltonian(&Graph::path(3)).to_hamiltonian();
        let s = operator_for(&h, 0, 2);
        assert!(s.unitarity_defect() < 1e-12);
        assert!(s.commutation_defect(h.matrix()) < 1e-12);
        assert!(s.mapping_defect(0, 2) < 1e-12);
        assert!(s.involution_defect() < 1e-12);
        assert!(s.is_permutation(1e-12));
        assert!((s.matrix[(1, 1)] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn k2_symmetry_swaps() {
        let h = adjacency_hamiltonian(&Graph::complete(2)).to_hamiltonian();
        let s = operator_for(&h, 0, 1);
        assert!(s.mapping_defect(0, 1) < 1e-12 && s.mapping_defect(1, 0) < 1e-12);
    }

    #[test]
    fn asymmetric_chain_symmetry_is_not_a_permutation() {
        let h = chain_hamiltonian(&asymmetric_five_chain(1.0).unwrap());
        let s = operator_for(&h, 1, 3);
        assert!(s.unitarity_defect() < 1e-10);
        assert!(s.commutation_defect(h.matrix()) < 1e-10);
        assert!(s.mapping_defect(1, 3) < 1e-10);
        assert!(s.involution_defect() < 1e-10);
        assert!(!s.is_permutation(1e-6));
    }

    #[test]
    fn phases_required() {
        let h = adjacency_hamiltonian(&Graph::complete(3)).to_hamiltonian();
        let v = check_transfer(&h, 0, 1).unwrap();
        assert!(matches!(v.phase_table(), Err(TransferError::PhaseUndefined(_))));
        let dec = decompose(&h, DEFAULT_GROUPING_TOL).unwrap();
        assert!(symmetry_operator(&dec, &[]).is_err());
    }
}
