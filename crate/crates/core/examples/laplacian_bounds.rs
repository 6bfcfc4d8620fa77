//! Integral spectra and the Laplacian diameter bounds.

use pstlab::graph::Graph;
use pstlab::hamiltonian::{adjacency_hamiltonian, laplacian_hamiltonian};
use pstlab::limits::{laplacian_diameter_bounds, DEFAULT_ALPHAS};
use pstlab::spectral::{format_char_poly, is_integral_spectrum};

fn main() {
    let graphs = [
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4)),
        ("Q3", Graph::hypercube(3)),
        ("C5", Graph::cycle(5)),
    ];
    for (name, g) in graphs {
        let adj = is_integral_spectrum(&adjacency_hamiltonian(&g));
        let lap = is_integral_spectrum(&laplacian_hamiltonian(&g));
        println!("{name}");
        println!("  adjacency: {} (integral: {})", format_char_poly(&adj.char_poly), adj.integral);
        println!("  laplacian: {} (integral: {}, roots {:?})", format_char_poly(&lap.char_poly), lap.integral, lap.roots);
        let b = laplacian_diameter_bounds(&g, Some(0), &DEFAULT_ALPHAS).unwrap();
        let mohar: Vec<String> = b
            .mohar
            .iter()
            .map(|m| format!("{:.3}: {}", m.alpha, m.bound.map_or("n/a".into(), |v| v.to_string())))
            .collect();
        println!(
            "  D = {}, 2d = {}, k - 1 = {}, Mohar [{}], premise {}, satisfied {}",
            b.diameter,
            b.two_d,
            b.k_minus_1,
            mohar.join(", "),
            b.premise_holds(),
            b.all_satisfied
        );
    }
}
