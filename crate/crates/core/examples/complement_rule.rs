//! The complement of a regular graph with transfer at t0 transfers at the
//! same time exactly when exp(-i t0 N) = 1.

use pstlab::graph::{complement, Graph};
use pstlab::hamiltonian::adjacency_hamiltonian;
use pstlab::limits::complement_pst_condition;
use pstlab::transfer::fidelity;

fn main() {
    let cases = [("C4", Graph::cycle(4), 0, 2), ("K2", Graph::complete(2), 0, 1), ("Q3", Graph::hypercube(3), 0, 7)];
    for (name, g, a, b) in cases {
        let h = adjacency_hamiltonian(&g).to_hamiltonian();
        let t0 = std::f64::consts::FRAC_PI_2;
        let (_, f) = fidelity(&h, a, b, t0).unwrap();
        let c = complement(&g);
        let (_, fc) = fidelity(&adjacency_hamiltonian(&c).to_hamiltonian(), a, b, t0).unwrap();
        println!(
            "{name}: |<b|U(t0)|a>| = {f:.6}; complement has {} edges, |<b|U(t0)|a>| = {fc:.6}; predicted {}",
            c.edge_count(),
            complement_pst_condition(t0, g.n())
        );
    }
}
