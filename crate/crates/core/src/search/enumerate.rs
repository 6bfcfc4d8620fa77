use std::collections::BTreeMap;

use crate::graph::Graph;

use super::SearchError;

pub const MAX_ENUMERATION_N: usize = 7;

/// Column-major position of pair `(i, j)`, `i < j`: the graph6 bit order.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// The upper triangle as an integer whose most significant bit is pair
/// `(0, 1)`; comparing these integers compares the bitstrings
/// lexicographically.
pub fn upper_triangle_code(g: &Graph) -> u64 {
    let n = g.n();
    let len = n * n.saturating_sub(1) / 2;
    g.edges().fold(0u64, |acc, (i, j)| acc | 1 << (len - 1 - pair_index(i, j)))
}

struct Search<'a> {
    n: usize,
    len: usize,
    adj: &'a [Vec<bool>],
    perm: Vec<usize>,
    used: Vec<bool>,
    best: u64,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// `perm[new] = old`; column `j` is fixed once labels `0..=j` are placed.
    fn extend(&mut self, j: usize, code: u64) {
        if j == self.n {
            if code < self.best {
                self.best = code;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for i in 0..j {
                if self.adj[self.perm[i]][v] {
                    next |= 1 << (self.len - 1 - pair_index(i, j));
                }
            }
            let fixed = (j + 1) * j / 2;
            let mask = if fixed == 0 { 0 } else { u64::MAX << (self.len - fixed) };
            if next & mask > self.best & mask {
                continue;
            }
            self.used[v] = true;
            self.perm[j] = v;
            self.extend(j + 1, next);
            self.used[v] = false;
        }
    }
}

/// The relabelling of `g` with the lexicographically smallest upper-triangle
/// bitstring over all vertex permutations.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let len = n * (n - 1) / 2;
    let mut s = Search {
        n,
        len,
        adj: &adj,
        perm: vec![0; n],
        used: vec![false; n],
        best: u64::MAX,
        best_perm: (0..n).collect(),
    };
    s.extend(0, 0);
    // best_perm maps new label to old vertex; `permuted` wants old to new.
    let mut inverse = vec![0; n];
    for (new, &old) in s.best_perm.iter().enumerate() {
        inverse[old] = new;
    }
    g.permuted(&inverse)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labelling, ordered by upper-triangle bitstring.
///
/// Every connected graph on `n >= 2` vertices has a vertex whose removal
/// leaves it connected, so the classes on `n` vertices all arise from those
/// on `n - 1` by attaching a new vertex to a nonempty neighbour set.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    if n > MAX_ENUMERATION_N {
        return Err(SearchError::NTooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for subset in 1u32..(1 << (m - 1)) {
                let mut h = Graph::empty(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("edge of a smaller graph");
                }
                for u in (0..m - 1).filter(|u| subset >> u & 1 == 1) {
                    h.add_edge(u, m - 1).expect("new vertex in range");
                }
                let c = canonical_form(&h);
                next.insert(upper_triangle_code(&c), c);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn n3_is_path_and_triangle() {
        let gs = enumerate_connected_graphs(3).unwrap();
        let edges: Vec<usize> = gs.iter().map(Graph::edge_count).collect();
        assert_eq!(edges, vec![2, 3]);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let c = canonical_form(&g);
        for perm in [[4, 3, 2, 1, 0], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3]] {
            assert_eq!(canonical_form(&g.permuted(&perm)), c);
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(enumerate_connected_graphs(8), Err(SearchError::NTooLarge(8))));
    }
}
