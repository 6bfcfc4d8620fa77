//! Single-excitation Hamiltonians.
//!
//! In the one-excitation sector an excitation-preserving spin Hamiltonian is
//! an `N x N` Hermitian matrix: couplings `J_uv` off the diagonal on the
//! edges of the coupling graph and on-site fields `B_v` on the diagonal.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HamiltonianError {
    #[error("coupling on ({0}, {1}) is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("coupling J{index} = {value} is not strictly positive")]
    NonPositiveCoupling { index: usize, value: f64 },
    #[error("coupling J{index} would be imaginary (J{index}^2 = {square})")]
    ImaginaryCoupling { index: usize, square: f64 },
    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact symmetric integer matrix; the adjacency and Laplacian models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerHamiltonian {
    entries: Vec<Vec<i64>>,
}

impl IntegerHamiltonian {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self, HamiltonianError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(HamiltonianError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(HamiltonianError::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(IntegerHamiltonian { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn trace(&self) -> i64 {
        (0..self.n()).map(|i| self.entries[i][i]).sum()
    }

    /// Largest absolute row sum; bounds every eigenvalue in magnitude.
    pub fn gershgorin_radius(&self) -> i64 {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn to_hamiltonian(&self) -> SingleExcitationHamiltonian {
        let n = self.n();
        let m = DMatrix::from_fn(n, n, |i, j| Complex64::new(self.entries[i][j] as f64, 0.0));
        SingleExcitationHamiltonian::from_matrix_unchecked(m, true)
    }
}

/// `H = A`: unit couplings on every edge, no fields.
pub fn adjacency_hamiltonian(g: &Graph) -> IntegerHamiltonian {
    let n = g.n();
    let mut entries = vec![vec![0; n]; n];
    for (u, v) in g.edges() {
        entries[u][v] = 1;
        entries[v][u] = 1;
    }
    IntegerHamiltonian { entries }
}

/// `H = L = D - A`.
pub fn laplacian_hamiltonian(g: &Graph) -> IntegerHamiltonian {
    let mut h = adjacency_hamiltonian(g);
    for (i, d) in g.degrees().into_iter().enumerate() {
        for x in h.entries[i].iter_mut() {
            *x = -*x;
        }
        h.entries[i][i] = d as i64;
    }
    h
}

/// Hermitian matrix with a realness flag and its coupling support graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleExcitationHamiltonian {
    matrix: DMatrix<Complex64>,
    is_real: bool,
    support: Graph,
}

impl SingleExcitationHamiltonian {
    /// `matrix` must already be exactly Hermitian.
    fn from_matrix_unchecked(matrix: DMatrix<Complex64>, is_real: bool) -> Self {
        let n = matrix.nrows();
        let mut support = Graph::empty(n);
        for j in 0..n {
            for i in 0..j {
                if matrix[(i, j)] != Complex64::new(0.0, 0.0) {
                    support.add_edge(i, j).expect("in range");
                }
            }
        }
        SingleExcitationHamiltonian {
            matrix,
            is_real,
            support,
        }
    }

    /// Accepts a dense matrix that is Hermitian to within `1e-12` of its
    /// largest entry, then mirrors the upper triangle so the stored matrix
    /// is exactly Hermitian.
    pub fn from_dense(mut matrix: DMatrix<Complex64>) -> Result<Self, HamiltonianError> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(HamiltonianError::DimensionMismatch {
                expected: n,
                found: matrix.ncols(),
            });
        }
        let mut scale = 1.0f64;
        for ((row, col), z) in matrix.iter().enumerate().map(|(k, z)| ((k % n, k / n), z)) {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(HamiltonianError::NonFinite { row, col });
            }
            scale = scale.max(z.norm());
        }
        let tol = 1e-12 * scale;
        for i in 0..n {
            for j in i..n {
                if (matrix[(i, j)] - matrix[(j, i)].conj()).norm() > tol {
                    return Err(HamiltonianError::NotHermitian { row: i, col: j });
                }
            }
        }
        for i in 0..n {
            matrix[(i, i)].im = 0.0;
            for j in i + 1..n {
                matrix[(j, i)] = matrix[(i, j)].conj();
            }
        }
        let is_real = matrix.iter().all(|z| z.im == 0.0);
        Ok(Self::from_matrix_unchecked(matrix, is_real))
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    /// Edges carrying a nonzero coupling.
    pub fn support_graph(&self) -> &Graph {
        &self.support
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n()).all(|i| self.matrix[(i, i)].re == 0.0)
    }

    /// `sum_j |J_vj|` over the couplings incident on `v`.
    pub fn incident_coupling_sum(&self, v: usize) -> f64 {
        (0..self.n())
            .filter(|&j| j != v)
            .map(|j| self.matrix[(v, j)].norm())
            .sum()
    }

    /// `c * H`.
    pub fn scaled(&self, c: f64) -> Self {
        Self::from_matrix_unchecked(self.matrix.map(|z| z * c), self.is_real)
    }

    /// `H + delta * 1`.
    pub fn shifted(&self, delta: f64) -> Self {
        let mut m = self.matrix.clone();
        for i in 0..self.n() {
            m[(i, i)].re += delta;
        }
        Self::from_matrix_unchecked(m, self.is_real)
    }
}

/// Builds `H1` from a graph, per-edge couplings and on-site fields.
///
/// A coupling keyed `(u, v)` with `u < v` sets `H[u][v] = J` and
/// `H[v][u] = conj(J)`; a key given as `(v, u)` is read as `J_vu`, so it is
/// conjugated into the upper triangle. Edges without a key carry zero.
pub fn weighted_hamiltonian(
    g: &Graph,
    couplings: &BTreeMap<(usize, usize), Complex64>,
    fields: &BTreeMap<usize, f64>,
) -> Result<SingleExcitationHamiltonian, HamiltonianError> {
    let n = g.n();
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for (&(u, v), &j) in couplings {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(HamiltonianError::EdgeNotInGraph(u, v));
        }
        let upper = if u < v { j } else { j.conj() };
        let (a, b) = (u.min(v), u.max(v));
        m[(a, b)] = upper;
        m[(b, a)] = upper.conj();
    }
    for (&v, &b) in fields {
        g.check_vertex(v)?;
        m[(v, v)] = Complex64::new(b, 0.0);
    }
    if let Some((k, _)) = m.iter().enumerate().find(|(_, z)| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(HamiltonianError::NonFinite { row: k % n, col: k / n });
    }
    let is_real = m.iter().all(|z| z.im == 0.0);
    Ok(SingleExcitationHamiltonian::from_matrix_unchecked(m, is_real))
}

/// Real nearest-neighbour chain `J_1 .. J_{n-1}` with zero fields.
pub fn chain_hamiltonian(couplings: &[f64]) -> SingleExcitationHamiltonian {
    let g = Graph::path(couplings.len() + 1);
    let map = couplings
        .iter()
        .enumerate()
        .map(|(i, &j)| ((i, i + 1), Complex64::new(j, 0.0)))
        .collect();
    weighted_hamiltonian(&g, &map, &BTreeMap::new()).expect("chain edges are graph edges")
}

/// The mirror-symmetric chain `J_k = sqrt(k (n - k))` that transfers end to
/// end at `t = pi / 2`, with spectrum `-(n-1), -(n-3), ..., n-1`.
pub fn krawtchouk_chain(n: usize) -> SingleExcitationHamiltonian {
    let js: Vec<f64> = (1..n).map(|k| ((k * (n - k)) as f64).sqrt()).collect();
    chain_hamiltonian(&js)
}

/// Couplings `(J1, J2, J3, J4)` of the non-mirror-symmetric five-site chain
/// that transfers between its second and fourth sites at `t = pi`:
/// `J1 = sqrt(5/2 - J2^2)`, `J3 = 3 / (2 J2)`, `J4 = sqrt(5/2 - 9 / (4 J2^2))`.
///
/// Real couplings exist only for `sqrt(9/10) <= J2 <= sqrt(5/2)`; outside that
/// window `J1` or `J4` would be imaginary and an `ImaginaryCoupling` error
/// names the offending index.
pub fn asymmetric_five_chain(j2: f64) -> Result<[f64; 4], HamiltonianError> {
    if j2.is_nan() || j2 <= 0.0 {
        return Err(HamiltonianError::NonPositiveCoupling { index: 2, value: j2 });
    }
    let j1_sq = 2.5 - j2 * j2;
    let j4_sq = 2.5 - 9.0 / (4.0 * j2 * j2);
    if j1_sq <= 0.0 {
        return Err(HamiltonianError::ImaginaryCoupling { index: 1, square: j1_sq });
    }
    if j4_sq <= 0.0 {
        return Err(HamiltonianError::ImaginaryCoupling { index: 4, square: j4_sq });
    }
    Ok([j1_sq.sqrt(), j2, 3.0 / (2.0 * j2), j4_sq.sqrt()])
}

/// `J1^2 + J2^2 == J3^2 + J4^2` to a relative tolerance of `1e-12`.
pub fn check_coupling_identity_5chain(j: [f64; 4]) -> Result<bool, HamiltonianError> {
    if let Some((i, &v)) = j.iter().enumerate().find(|(_, &v)| !(v > 0.0)) {
        return Err(HamiltonianError::NonPositiveCoupling { index: i + 1, value: v });
    }
    let lhs = j[0] * j[0] + j[1] * j[1];
    let rhs = j[2] * j[2] + j[3] * j[3];
    Ok((lhs - rhs).abs() <= 1e-12 * lhs.max(rhs))
}

/// Wire form `{"n": int, "couplings": [[u, v, re, im], ...], "fields": [b0, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub n: usize,
    pub couplings: Vec<(usize, usize, f64, f64)>,
    #[serde(default)]
    pub fields: Vec<f64>,
}

impl HamiltonianSpec {
    /// The support graph is the set of listed coupling pairs.
    pub fn build(&self) -> Result<SingleExcitationHamiltonian, HamiltonianError> {
        if !self.fields.is_empty() && self.fields.len() != self.n {
            return Err(HamiltonianError::DimensionMismatch {
                expected: self.n,
                found: self.fields.len(),
            });
        }
        let mut g = Graph::empty(self.n);
        let mut couplings = BTreeMap::new();
        for &(u, v, re, im) in &self.couplings {
            g.add_edge(u, v)?;
            couplings.insert((u, v), Complex64::new(re, im));
        }
        let fields = self.fields.iter().copied().enumerate().collect();
        weighted_hamiltonian(&g, &couplings, &fields)
    }

    pub fn from_hamiltonian(h: &SingleExcitationHamiltonian) -> Self {
        let n = h.n();
        let couplings = h
            .support_graph()
            .edges()
            .map(|(u, v)| {
                let z = h.entry(u, v);
                (u, v, z.re, z.im)
            })
            .collect();
        let fields = (0..n).map(|i| h.entry(i, i).re).collect();
        HamiltonianSpec { n, couplings, fields }
    }
}
