//! Perfect transfer over every connected graph up to n vertices, written as
//! JSON Lines.
//!
//!     cargo run --release --example census -- 6 census.jsonl

use std::env;
use std::time::Instant;

use pstlab::search::{census, enumerate_connected_graphs, write_records, Model};

fn main() {
    let mut args = env::args().skip(1);
    let max_n: usize = args.next().map_or(5, |s| s.parse().expect("n"));
    let out = args.next().unwrap_or_else(|| "census.jsonl".into());
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        let level = enumerate_connected_graphs(n).unwrap();
        println!("n = {n}: {} connected graphs", level.len());
        graphs.extend(level);
    }
    let outcome = census(&graphs, &Model::ALL).unwrap();
    for r in &outcome.records {
        println!(
            "{:>8} {:<9} {} -> {}  t0 = {:.6}  D = {} M = {} l = {}  integral {}  bipartite {}",
            r.graph6, r.model, r.source, r.target, r.t0, r.distance, r.supported, r.zeros, r.integral_spectrum, r.bipartite
        );
    }
    write_records(&outcome.records, &out).unwrap();
    println!(
        "{} records ({} undecided, {} failures) in {:.2?}, written to {out}",
        outcome.records.len(),
        outcome.undecided.len(),
        outcome.failures.len(),
        start.elapsed()
    );
}
