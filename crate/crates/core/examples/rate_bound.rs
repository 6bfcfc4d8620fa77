//! The rate bound 2l + D <= M on the standard chains J_n = sqrt(n(N - n)).
//! Vertex n (one-indexed) sends its excitation a distance N + 1 - 2n and
//! its autocorrelation vanishes n - 1 times on the way.

use pstlab::hamiltonian::krawtchouk_chain;
use pstlab::limits::rate_report;

fn main() {
    for n_sites in [5, 7, 9] {
        let h = krawtchouk_chain(n_sites);
        for a in 0..n_sites / 2 {
            let b = n_sites - 1 - a;
            let r = rate_report(&h, a, b).unwrap();
            println!(
                "N = {n_sites}, {a} -> {b}: D = {}, l = {}, M = {}, 2l + D <= M: {}, ML bound {:.4} <= t0 {:.4}",
                r.distance, r.zeros, r.supported, r.bound_satisfied, r.ml_lower_bound, r.t0
            );
        }
    }
}
