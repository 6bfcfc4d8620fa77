//! Quantitative limits on perfect transfer, checked on concrete instances:
//! the rate bound `2l + D <= M <= N`, the routing bound `DJ <= M - 1`,
//! single-target routing for real Hamiltonians, the Laplacian diameter
//! bounds and the complement rule for regular graphs.

use std::f64::consts::{E, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::graph::{Graph, GraphError};
use crate::hamiltonian::{laplacian_hamiltonian, SingleExcitationHamiltonian};
use crate::spectral::{decompose, eval_terms, is_integral_spectrum, support_components, SpectralDecomposition};
use crate::transfer::{check_transfer_decomposed, TransferError, TransferStatus};

pub const DEFAULT_ALPHAS: [f64; 3] = [2.0, E, 4.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateReport {
    pub source: usize,
    pub target: usize,
    pub t0: f64,
    /// Distance from source to target on the support graph.
    #[serde(rename = "D")]
    pub distance: usize,
    /// Distinct eigenvalues with support on the source.
    #[serde(rename = "M")]
    pub supported: usize,
    /// Autocorrelation zeros in `(0, t0)`.
    #[serde(rename = "l")]
    pub zeros: usize,
    pub zero_times: Vec<f64>,
    pub bound_satisfied: bool,
    /// `(l + 1) pi / (4 sum_j |J_aj|)`.
    pub ml_lower_bound: f64,
}

fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..100 {
        if f1 > f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn zeros_from_decomposition(dec: &SpectralDecomposition, a: usize, t0: f64, grid: usize, tol: f64) -> Vec<f64> {
    let terms = dec.amplitude_terms(a, a);
    let mag = |t: f64| eval_terms(&terms, t).norm();
    let dt = t0 / grid as f64;
    let samples: Vec<f64> = (0..=grid).map(|j| mag(j as f64 * dt)).collect();
    // Near a zero of high order |f| sits below rounding noise over a whole
    // stretch and the noise has many local minima. Minima joined by samples
    // below `well` count as one zero, and those joined to t0 are the zero at
    // t0 itself (real Hamiltonians always have one there), which the open
    // interval excludes.
    let well = tol.sqrt();
    let mut near_t0 = grid;
    while near_t0 > 0 && samples[near_t0] < well {
        near_t0 -= 1;
    }
    let mut zeros: Vec<f64> = Vec::new();
    let mut last: Option<usize> = None;
    for j in 1..grid.min(near_t0 + 1) {
        if samples[j] > samples[j - 1] || samples[j] > samples[j + 1] {
            continue;
        }
        let (t, f) = golden_section_min(mag, (j - 1) as f64 * dt, (j + 1) as f64 * dt);
        if f > tol || t <= 0.0 || t >= t0 {
            continue;
        }
        let joined = last.is_some_and(|i| samples[i..=j].iter().all(|&s| s < well));
        if !joined {
            zeros.push(t);
        }
        last = Some(j);
    }
    zeros
}

/// Times `t` in `(0, t0)` with `<a|exp(-iHt)|a> = 0`, located as interior
/// minima of `|f|` on a uniform grid and refined by golden section.
pub fn autocorrelation_zeros(
    h: &SingleExcitationHamiltonian,
    a: usize,
    t0: f64,
    grid: usize,
    tol: f64,
) -> Result<Vec<f64>, TransferError> {
    h.support_graph().check_vertex(a)?;
    assert!(t0 > 0.0, "t0 must be positive");
    assert!(grid >= 1000, "grid must have at least 1000 points");
    let dec = decompose(h, Config::default().grouping_tol)?;
    Ok(zeros_from_decomposition(&dec, a, t0, grid, tol))
}

pub fn rate_report(h: &SingleExcitationHamiltonian, a: usize, b: usize) -> Result<RateReport, TransferError> {
    rate_report_with(h, a, b, &Config::default())
}

pub fn rate_report_with(
    h: &SingleExcitationHamiltonian,
    a: usize,
    b: usize,
    cfg: &Config,
) -> Result<RateReport, TransferError> {
    cfg.validate()?;
    let dec = decompose(h, cfg.grouping_tol)?;
    rate_report_decomposed(h, &dec, a, b, cfg)
}

pub(crate) fn rate_report_decomposed(
    h: &SingleExcitationHamiltonian,
    dec: &SpectralDecomposition,
    a: usize,
    b: usize,
    cfg: &Config,
) -> Result<RateReport, TransferError> {
    let verdict = check_transfer_decomposed(h, dec, a, b, cfg)?;
    if !verdict.is_perfect() {
        return Err(TransferError::NotPerfect);
    }
    let t0 = verdict.t0.ok_or(TransferError::NotPerfect)?;
    let distance = h
        .support_graph()
        .distance(a, b)?
        .finite()
        .ok_or(TransferError::Graph(GraphError::Disconnected))?;
    let supported = verdict.supported_count();
    let zero_times = zeros_from_decomposition(dec, a, t0, cfg.zero_grid, cfg.zero_tol);
    let zeros = zero_times.len();
    Ok(RateReport {
        source: a,
        target: b,
        t0,
        distance,
        supported,
        zeros,
        zero_times,
        bound_satisfied: 2 * zeros + distance <= supported,
        ml_lower_bound: (zeros + 1) as f64 * PI / (4.0 * h.incident_coupling_sum(a)),
    })
}

/// `D J <= M - 1` and `M <= N`.
pub fn routing_bound_check(d: u64, j: u64, m: u64, n: u64) -> bool {
    m >= 1 && d * j < m && m <= n
}

/// Every target reachable from one source, with its transfer time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoutingScan {
    pub source: usize,
    /// `(target, t0)`, sorted by target.
    pub perfect: Vec<(usize, f64)>,
    /// Targets the checker could not decide.
    pub undecided: Vec<usize>,
}

impl RoutingScan {
    pub fn targets(&self) -> Vec<usize> {
        self.perfect.iter().map(|&(c, _)| c).collect()
    }

    /// A real Hamiltonian transfers perfectly to at most one target.
    pub fn single_target(&self) -> bool {
        self.perfect.len() <= 1
    }
}

pub fn routing_impossibility_scan(h: &SingleExcitationHamiltonian, a: usize) -> Result<RoutingScan, TransferError> {
    routing_impossibility_scan_with(h, a, &Config::default())
}

pub fn routing_impossibility_scan_with(
    h: &SingleExcitationHamiltonian,
    a: usize,
    cfg: &Config,
) -> Result<RoutingScan, TransferError> {
    if !h.is_real() {
        return Err(TransferError::NonRealHamiltonian);
    }
    h.support_graph().check_vertex(a)?;
    cfg.validate()?;
    let dec = decompose(h, cfg.grouping_tol)?;
    let mut scan = RoutingScan {
        source: a,
        perfect: Vec::new(),
        undecided: Vec::new(),
    };
    for c in (0..h.n()).filter(|&c| c != a) {
        let v = check_transfer_decomposed(h, &dec, a, c, cfg)?;
        match v.status {
            TransferStatus::Perfect => scan.perfect.push((c, v.t0.expect("perfect verdicts carry t0"))),
            TransferStatus::Undecided { .. } => scan.undecided.push(c),
            TransferStatus::NoTransfer { .. } => {}
        }
    }
    Ok(scan)
}

/// One Mohar bound evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoharBound {
    pub alpha: f64,
    /// `None` when `ceil(log_alpha(N / 2))` is zero (`N <= 2`).
    pub bound: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaplacianBounds {
    /// Maximum degree.
    pub d: usize,
    pub two_d: usize,
    /// Distinct Laplacian eigenvalues.
    pub k: usize,
    pub k_minus_1: usize,
    pub mohar: Vec<MoharBound>,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub integral_spectrum: bool,
    pub source: Option<usize>,
    /// Whether every Laplacian eigenspace has support on `source`.
    pub full_support: Option<bool>,
    /// `D <= k - 1`, plus `D <= 2d` and the Mohar bounds when the premise
    /// (integral spectrum, full support on the source) holds.
    pub all_satisfied: bool,
}

impl LaplacianBounds {
    /// Whether the degree and Mohar bounds are asserted for this graph.
    pub fn premise_holds(&self) -> bool {
        self.integral_spectrum && self.full_support == Some(true)
    }
}

/// `2 ceil(sqrt(2d) sqrt((alpha^2 - 1) / (4 alpha)) + 1) ceil(log_alpha(N / 2))`.
pub fn mohar_bound(d: usize, n: usize, alpha: f64) -> Option<u64> {
    assert!(alpha > 1.0, "alpha must exceed 1");
    let log = ((n as f64 / 2.0).ln() / alpha.ln()).ceil();
    if log < 1.0 {
        return None;
    }
    let inner = ((2 * d) as f64).sqrt() * ((alpha * alpha - 1.0) / (4.0 * alpha)).sqrt() + 1.0;
    // Exact halves such as 1.5 + 1 must not round up through float noise.
    let inner = (inner - 1e-12).ceil();
    Some(2 * inner as u64 * log as u64)
}

pub fn laplacian_diameter_bounds(
    g: &Graph,
    source: Option<usize>,
    alphas: &[f64],
) -> Result<LaplacianBounds, TransferError> {
    if !g.is_connected() {
        return Err(TransferError::Graph(GraphError::Disconnected));
    }
    if let Some(s) = source {
        g.check_vertex(s)?;
    }
    let lap = laplacian_hamiltonian(g);
    let exact = is_integral_spectrum(&lap);
    let cfg = Config::default();
    let dec = decompose(&lap.to_hamiltonian(), cfg.grouping_tol)?;
    let k = if exact.integral { exact.distinct_roots() } else { dec.len() };
    let d = g.max_degree();
    let diameter = g.diameter().finite().expect("connected graph has finite diameter");
    let full_support = source.map(|s| support_components(&dec, s).iter().all(|c| c.norm > cfg.support_tol));
    let mohar: Vec<MoharBound> = alphas
        .iter()
        .map(|&alpha| MoharBound {
            alpha,
            bound: mohar_bound(d, g.n(), alpha),
        })
        .collect();
    let mut report = LaplacianBounds {
        d,
        two_d: 2 * d,
        k,
        k_minus_1: k - 1,
        mohar,
        diameter,
        integral_spectrum: exact.integral,
        source,
        full_support,
        all_satisfied: false,
    };
    let mut ok = diameter <= report.k_minus_1;
    if report.premise_holds() {
        ok &= diameter <= report.two_d;
        ok &= report.mohar.iter().filter_map(|m| m.bound).all(|b| diameter as u64 <= b);
    }
    report.all_satisfied = ok;
    Ok(report)
}

/// `exp(-i t0 n) = 1` within `1e-8`: the complement of a regular graph
/// with perfect transfer at `t0` transfers at the same time.
pub fn complement_pst_condition(t0: f64, n: usize) -> bool {
    let x = (t0 * n as f64).rem_euclid(TAU);
    x.min(TAU - x) <= 1e-8
}
