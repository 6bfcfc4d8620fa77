//! Decide transfer on a uniformly coupled path and print the certificate.
//!
//!     cargo run --example decide_transfer -- 3 0 2

use std::env;

use pstlab::graph::Graph;
use pstlab::hamiltonian::adjacency_hamiltonian;
use pstlab::transfer::check_transfer;

fn main() {
    let args: Vec<usize> = env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (n, a, b) = match args.as_slice() {
        [n, a, b] => (*n, *a, *b),
        [] => (3, 0, 2),
        _ => panic!("usage: decide_transfer [n source target]"),
    };
    let h = adjacency_hamiltonian(&Graph::path(n)).to_hamiltonian();
    let v = check_transfer(&h, a, b).expect("valid vertices");
    println!("P{n}: {a} -> {b}: {}", v.status);
    if let (Some(t0), Some(phase)) = (v.t0, v.transfer_phase) {
        println!("t0 = {t0:.10}, phase = {:.6} {:+.6}i", phase.re, phase.im);
    }
    if let Some(g) = &v.gap_structure {
        println!("gap unit chi = {:.10}, multiples {:?}, r = {:?}", g.chi, g.integers, v.r);
    }
    for p in &v.phases {
        println!("  lambda = {:+.6}  phi = {:+.6}  weight = {:.6}", p.eigenvalue, p.phase, p.weight);
    }
}
