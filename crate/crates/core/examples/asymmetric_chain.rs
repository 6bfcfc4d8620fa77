//! A five-site chain that transfers 2 -> 4 (zero-indexed 1 -> 3) at t = pi
//! without being mirror symmetric. The symmetry operator built from the
//! eigenspace phases is unitary and commutes with H but is not a
//! permutation.

use pstlab::hamiltonian::{asymmetric_five_chain, chain_hamiltonian, check_coupling_identity_5chain};
use pstlab::spectral::{decompose, DEFAULT_GROUPING_TOL};
use pstlab::transfer::{check_transfer, symmetry_operator};

fn main() {
    for j2 in [0.8, 1.0, 1.2, 1.5] {
        let j = match asymmetric_five_chain(j2) {
            Ok(j) => j,
            Err(e) => {
                println!("J2 = {j2}: {e}");
                continue;
            }
        };
        let h = chain_hamiltonian(&j);
        let v = check_transfer(&h, 1, 3).unwrap();
        println!(
            "J2 = {j2}: couplings {:.6?}, identity holds: {}, mirror symmetric: {}",
            j,
            check_coupling_identity_5chain(j).unwrap(),
            (j[0] - j[3]).abs() < 1e-12 && (j[1] - j[2]).abs() < 1e-12
        );
        println!("  {} at t0 = {:.12}", v.status, v.t0.unwrap_or(f64::NAN));
        let dec = decompose(&h, DEFAULT_GROUPING_TOL).unwrap();
        let s = symmetry_operator(&dec, &v.phase_table().unwrap()).unwrap();
        println!(
            "  S: unitary {:.1e}, commutes {:.1e}, S|1> = |3> {:.1e}, S^2 = 1 {:.1e}, permutation {}",
            s.unitarity_defect(),
            s.commutation_defect(h.matrix()),
            s.mapping_defect(1, 3),
            s.involution_defect(),
            s.is_permutation(1e-6)
        );
    }
}
