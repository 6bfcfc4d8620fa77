//! Independent oracles shared by the integration suites. None of them go
//! through the spectral decomposition used by the library.

#![allow(dead_code)]

use std::collections::HashSet;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use pstlab::graph::Graph;
use pstlab::hamiltonian::SingleExcitationHamiltonian;

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn connected_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 0 {
                continue;
            }
            let w = if i == u { j } else if j == u { i } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of connected graphs on `n` vertices by orbit
/// marking over all labelled graphs: each unmarked connected labelled graph
/// starts a new class, and its images under all `n!` permutations are marked.
pub fn brute_force_connected_classes(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    let index = |i: usize, j: usize| {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        ps.iter().position(|&p| p == (i, j)).unwrap()
    };
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let mut marked: HashSet<u32> = HashSet::new();
    let mut classes = Vec::new();
    for mask in 0u32..(1 << ps.len()) {
        if marked.contains(&mask) {
            continue;
        }
        for img in &images {
            let m = (0..ps.len()).filter(|&k| mask >> k & 1 == 1).fold(0u32, |acc, k| acc | 1 << img[k]);
            marked.insert(m);
        }
        if connected_mask(n, &ps, mask) {
            let edges = (0..ps.len()).filter(|&k| mask >> k & 1 == 1).map(|k| ps[k]);
            classes.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    classes
}

/// `exp(-i H t)` by Taylor series with scaling and squaring, written out here
/// so that it shares no code with the library.
pub fn taylor_expm(h: &DMatrix<Complex64>, t: f64) -> DMatrix<Complex64> {
    let n = h.nrows();
    let norm: f64 = h.iter().map(|z| z.norm()).sum::<f64>() * t.abs();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = h * Complex64::new(0.0, -t / 2f64.powi(squarings as i32));
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// `max_t |<b|exp(-iHt)|a>|` over `(0, t_max]` on a uniform grid of
/// `grid` steps (state propagated step by step with one fixed propagator),
/// with golden-section refinement of the promising local maxima using
/// fresh exponentials.
pub fn fidelity_scan(h: &SingleExcitationHamiltonian, a: usize, b: usize, t_max: f64, grid: usize) -> (f64, f64) {
    let m = h.matrix();
    let n = m.nrows();
    let dt = t_max / grid as f64;
    let step = taylor_expm(m, dt);
    let mut psi = DVector::<Complex64>::zeros(n);
    psi[a] = Complex64::new(1.0, 0.0);
    let mut samples = Vec::with_capacity(grid + 2);
    samples.push(if a == b { 1.0 } else { 0.0 });
    for _ in 0..=grid {
        psi = &step * psi;
        samples.push(psi[b].norm());
    }
    let mag = |t: f64| taylor_expm(m, t)[(b, a)].norm();
    let mut best = (0.0, 0.0);
    for j in 1..=grid {
        let s = samples[j];
        if s > best.1 {
            best = (j as f64 * dt, s);
        }
        if s >= 0.9 && s >= samples[j - 1] && s >= samples[j + 1] {
            let (mut lo, mut hi) = ((j - 1) as f64 * dt, (j + 1) as f64 * dt);
            let r = (5f64.sqrt() - 1.0) / 2.0;
            for _ in 0..60 {
                let x1 = hi - r * (hi - lo);
                let x2 = lo + r * (hi - lo);
                if mag(x1) < mag(x2) {
                    lo = x1;
                } else {
                    hi = x2;
                }
            }
            let t = (lo + hi) / 2.0;
            let f = mag(t);
            if f > best.1 {
                best = (t, f);
            }
        }
    }
    best
}

pub fn dense_adjacency(g: &Graph) -> DMatrix<f64> {
    DMatrix::from_fn(g.n(), g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// Contains an odd cycle, by checking closed walks of odd length up to `n`
/// through powers of the adjacency matrix.
pub fn has_odd_cycle(g: &Graph) -> bool {
    let a = dense_adjacency(g);
    let mut p = a.clone();
    for len in 1..=g.n() {
        if len % 2 == 1 && p.trace() > 0.0 {
            return true;
        }
        p = &p * &a;
    }
    false
}

/// Earliest time in `(0, t_max]` at which `|<b|exp(-iHt)|a>| >= threshold`,
/// for every target `b`, from one propagation of `|a>` on a uniform grid.
/// Grid peaks above 0.9 are refined by golden section on fresh exponentials.
pub fn earliest_transfer_times(
    h: &SingleExcitationHamiltonian,
    a: usize,
    t_max: f64,
    grid: usize,
    threshold: f64,
) -> Vec<Option<f64>> {
    let m = h.matrix();
    let n = m.nrows();
    let dt = t_max / grid as f64;
    let step = taylor_expm(m, dt);
    let mut psi = DVector::<Complex64>::zeros(n);
    psi[a] = Complex64::new(1.0, 0.0);
    let mut samples = vec![psi.map(|z| z.norm())];
    for _ in 0..=grid {
        psi = &step * psi;
        samples.push(psi.map(|z| z.norm()));
    }
    (0..n)
        .map(|b| {
            if b == a {
                return None;
            }
            let mag = |t: f64| taylor_expm(m, t)[(b, a)].norm();
            for j in 1..=grid {
                let s = samples[j][b];
                if s < 0.9 || s < samples[j - 1][b] || s < samples[j + 1][b] {
                    continue;
                }
                let (mut lo, mut hi) = ((j - 1) as f64 * dt, (j + 1) as f64 * dt);
                let r = (5f64.sqrt() - 1.0) / 2.0;
                for _ in 0..60 {
                    let x1 = hi - r * (hi - lo);
                    let x2 = lo + r * (hi - lo);
                    if mag(x1) < mag(x2) {
                        lo = x1;
                    } else {
                        hi = x2;
                    }
                }
                let t = (lo + hi) / 2.0;
                if mag(t) >= threshold {
                    return Some(t);
                }
            }
            None
        })
        .collect()
}
