//! Real Hamiltonians route to at most one target; the routing bound
//! D J <= M - 1 limits complex ones.

use pstlab::graph::Graph;
use pstlab::hamiltonian::{adjacency_hamiltonian, krawtchouk_chain};
use pstlab::limits::{routing_bound_check, routing_impossibility_scan};

fn main() {
    let cases = [
        ("C4", adjacency_hamiltonian(&Graph::cycle(4)).to_hamiltonian()),
        ("K3", adjacency_hamiltonian(&Graph::complete(3)).to_hamiltonian()),
        ("Q3", adjacency_hamiltonian(&Graph::hypercube(3)).to_hamiltonian()),
        ("standard 5-chain", krawtchouk_chain(5)),
    ];
    for (name, h) in cases {
        let scan = routing_impossibility_scan(&h, 0).unwrap();
        println!("{name}: perfect targets from 0: {:?}", scan.perfect);
    }
    for (d, j, m, n) in [(1, 6, 7, 7), (2, 2, 4, 4), (3, 1, 5, 5)] {
        println!("D = {d}, J = {j}, M = {m}, N = {n}: allowed {}", routing_bound_check(d, j, m, n));
    }
}
