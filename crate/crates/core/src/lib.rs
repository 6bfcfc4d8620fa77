//! Perfect state transfer on quantum spin networks.
//!
//! Given a single-excitation Hamiltonian on a coupling graph, decide whether
//! an excitation moves from vertex `a` to vertex `b` with unit fidelity,
//! certify the answer (transfer time, phase, eigenspace phases, symmetry
//! operator), and check the structural limits that any such transfer obeys.
//!
//! | module        | contents                                                     |
//! |---------------|--------------------------------------------------------------|
//! | [`graph`]     | simple graphs, metrics, products, graph6                     |
//! | [`hamiltonian`] | adjacency / Laplacian / weighted single-excitation matrices |
//! | [`spectral`]  | grouped eigendecomposition, exact char-poly, real GCD        |
//! | [`transfer`]  | the decision procedure, evolution, symmetry operator         |
//! | [`limits`]    | rate, routing, Laplacian diameter and complement checks      |
//! | [`search`]    | exhaustive small-graph census and JSONL records              |
//! | [`io`]        | JSON graph / Hamiltonian files and dense CSV matrices        |
//!
//! ```
//! use pstlab::graph::Graph;
//! use pstlab::hamiltonian::adjacency_hamiltonian;
//! use pstlab::transfer::check_transfer;
//!
//! let h = adjacency_hamiltonian(&Graph::path(3)).to_hamiltonian();
//! let verdict = check_transfer(&h, 0, 2).unwrap();
//! assert!(verdict.is_perfect());
//! let t0 = verdict.t0.unwrap();
//! assert!((t0 - std::f64::consts::PI / 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod config;
pub mod graph;
pub mod hamiltonian;
pub mod io;
pub mod limits;
pub mod search;
pub mod spectral;
pub mod transfer;

pub use config::Config;
