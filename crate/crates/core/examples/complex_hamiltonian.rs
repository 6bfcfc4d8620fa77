//! Complex couplings: a two-site exchange with a phase, and a triangle
//! threaded by flux pi/2, which the exact test cannot settle and the
//! numerical fallback resolves.

use std::collections::BTreeMap;

use num_complex::Complex64;
use pstlab::graph::Graph;
use pstlab::hamiltonian::{weighted_hamiltonian, HamiltonianSpec};
use pstlab::transfer::check_transfer;

fn main() {
    let pair = HamiltonianSpec {
        n: 2,
        couplings: vec![(0, 1, 0.6, 0.8)],
        fields: vec![],
    }
    .build()
    .unwrap();
    let v = check_transfer(&pair, 0, 1).unwrap();
    println!("phased pair: {} at t0 = {:.10}, phase {:.6}", v.status, v.t0.unwrap(), v.transfer_phase.unwrap());

    let i = Complex64::new(0.0, 1.0);
    let couplings: BTreeMap<_, _> = [((0, 1), -i), ((1, 2), -i), ((0, 2), i)].into_iter().collect();
    let h = weighted_hamiltonian(&Graph::complete(3), &couplings, &BTreeMap::new()).unwrap();
    for b in [1, 2] {
        let v = check_transfer(&h, 0, b).unwrap();
        println!("chiral triangle 0 -> {b}: {} at t0 = {:?}", v.status, v.t0);
    }
}
