//! Hypercubes as iterated Cartesian products of K2, and the other graph
//! products, with their antipodal transfer.

use pstlab::graph::{cartesian_product, conjunction, join, strong_product, Graph};
use pstlab::hamiltonian::adjacency_hamiltonian;
use pstlab::transfer::check_transfer;

fn main() {
    let k2 = Graph::complete(2);
    let mut q = k2.clone();
    for d in 1..=5 {
        let n = q.n();
        let v = check_transfer(&adjacency_hamiltonian(&q).to_hamiltonian(), 0, n - 1).unwrap();
        let phase = v.transfer_phase.unwrap();
        println!(
            "Q{d}: {n} vertices, 0 -> {}: {} at t0 = {:.10}, phase = {:+.3} {:+.3}i",
            n - 1,
            v.status,
            v.t0.unwrap(),
            phase.re,
            phase.im
        );
        q = cartesian_product(&q, &k2);
    }

    let p3 = Graph::path(3);
    println!("K2 x P3 (conjunction) edges: {:?}", conjunction(&k2, &p3).edges().collect::<Vec<_>>());
    println!("K2 * P3 (strong) edge count: {}", strong_product(&k2, &p3).edge_count());
    let j = join(&Graph::complete(2), &Graph::empty(2));
    println!("K2 + 2K1 join: {} edges, integral discriminant: {}", j.graph.edge_count(), j.square_ok);
}
