//! Graph products, join and complement.
//!
//! Product vertices are indexed row-major: the pair `(i, j)` with `i` in the
//! first factor becomes `i * n2 + j`, which turns the adjacency identities
//! into literal Kronecker products.

use super::Graph;

fn product_with<F>(g1: &Graph, g2: &Graph, adjacent: F) -> Graph
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1 * n2;
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            let (u1, u2) = (a / n2, a % n2);
            let (v1, v2) = (b / n2, b % n2);
            if adjacent(u1, u2, v1, v2) {
                g.add_edge(a, b).expect("product indices are in range");
            }
        }
    }
    g
}

/// `(u1,u2) ~ (v1,v2)` iff one coordinate is equal and the other is an edge.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    product_with(g1, g2, |u1, u2, v1, v2| {
        (u1 == v1 && g2.has_edge(u2, v2)) || (u2 == v2 && g1.has_edge(u1, v1))
    })
}

/// Tensor product: both coordinates must be edges.
pub fn conjunction(g1: &Graph, g2: &Graph) -> Graph {
    product_with(g1, g2, |u1, u2, v1, v2| {
        g1.has_edge(u1, v1) && g2.has_edge(u2, v2)
    })
}

/// Union of the Cartesian and tensor edge sets.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Graph {
    product_with(g1, g2, |u1, u2, v1, v2| {
        let e1 = g1.has_edge(u1, v1);
        let e2 = g2.has_edge(u2, v2);
        (u1 == v1 && e2) || (u2 == v2 && e1) || (e1 && e2)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinResult {
    pub graph: Graph,
    /// Both inputs regular and `(d1 - d2)^2 + 4 n1 n2` a perfect square.
    pub square_ok: bool,
}

/// Disjoint union of `g1` (vertices `0..n1`) and `g2` (shifted by `n1`)
/// plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> JoinResult {
    let (n1, n2) = (g1.n(), g2.n());
    let mut g = Graph::empty(n1 + n2);
    for (u, v) in g1.edges() {
        g.add_edge(u, v).expect("in range");
    }
    for (u, v) in g2.edges() {
        g.add_edge(u + n1, v + n1).expect("in range");
    }
    for u in 0..n1 {
        for v in 0..n2 {
            g.add_edge(u, n1 + v).expect("in range");
        }
    }
    let square_ok = match (g1.regular_degree(), g2.regular_degree()) {
        (Some(d1), Some(d2)) => {
            let diff = d1.abs_diff(d2) as u128;
            is_perfect_square(diff * diff + 4 * (n1 as u128) * (n2 as u128))
        }
        _ => false,
    };
    JoinResult {
        graph: g,
        square_ok,
    }
}

fn is_perfect_square(x: u128) -> bool {
    let r = (x as f64).sqrt() as u128;
    // Float sqrt can be off by one near large squares.
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == x)
}

/// Same vertex set, inverted edge set.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut c = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                c.add_edge(u, v).expect("in range");
            }
        }
    }
    c
}
