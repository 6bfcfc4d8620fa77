//! Perfect state transfer decision procedure.
//!
//! `exp(-iHt0)|a> = e^{i phi}|b>` holds exactly when
//!
//! * every eigenspace projection of `|b>` is a unimodular multiple of the
//!   projection of `|a>` (`P_k|b> = e^{i phi_k} P_k|a>`), with unsupported
//!   eigenspaces of `|a>` also unsupported for `|b>`, and
//! * there is a time with `lambda_k t0 = -phi - phi_k (mod 2 pi)` on every
//!   supported eigenspace.
//!
//! Taking differences against the lowest supported eigenvalue `lambda_k0`
//! turns the second condition into `g_k t0 = pi sigma_k (mod 2 pi)` with
//! gaps `g_k = lambda_k - lambda_k0` and `sigma_k = (phi_k0 - phi_k) / pi`.
//! When every `sigma_k` is an integer (always the case for real `H`), the
//! gaps must be integer multiples `z_k` of a unit `chi` and `t0 = r pi / chi`
//! with `r` odd iff `z_k = sigma_k (mod 2)` for all `k`. Other complex
//! Hamiltonians fall back to a numerical fidelity scan.

mod bipartite;
mod evolve;
mod symmetry;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::{Config, ConfigError};
use crate::graph::GraphError;
use crate::hamiltonian::SingleExcitationHamiltonian;
use crate::spectral::{decompose, eval_terms, real_gcd, CommensurabilityResult, SpectralDecomposition, SpectralError};

pub use bipartite::{bipartite_phase_class, PhaseClass};
pub use evolve::{basis_state, evolve, fidelity, propagator_expm};
pub use symmetry::{symmetry_operator, SymmetryOperator};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransferError {
    #[error("source and target coincide (vertex {0})")]
    VertexCoincide(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("state has norm {0}, expected 1")]
    NotNormalized(f64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("verdict is not perfect")]
    NotPerfect,
    #[error("eigenspace phases are undefined: {0}")]
    PhaseUndefined(String),
    #[error("coupling graph is not bipartite")]
    NotBipartite,
    #[error("Hamiltonian has complex entries")]
    NonRealHamiltonian,
    #[error("Hamiltonian has a nonzero on-site field")]
    NonzeroDiagonal,
    #[error("coupling ({0}, {1}) lies outside the given graph")]
    SupportNotInGraph(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoTransferReason {
    WeightMismatch { eigenvalue: f64 },
    NonRealPhase { eigenvalue: f64 },
    IncommensurableGaps,
    ParityObstruction,
    NoGaps,
}

impl fmt::Display for NoTransferReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoTransferReason::WeightMismatch { eigenvalue } => {
                write!(f, "weight mismatch at eigenvalue {eigenvalue}")
            }
            NoTransferReason::NonRealPhase { eigenvalue } => {
                write!(f, "non-real phase on real Hamiltonian at eigenvalue {eigenvalue}")
            }
            NoTransferReason::IncommensurableGaps => f.write_str("incommensurable eigenvalue gaps"),
            NoTransferReason::ParityObstruction => f.write_str("parity obstruction"),
            NoTransferReason::NoGaps => f.write_str("source supported on a single eigenspace"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TransferStatus {
    Perfect,
    NoTransfer { reason: NoTransferReason },
    Undecided { note: String },
}

impl TransferStatus {
    pub fn is_perfect(&self) -> bool {
        matches!(self, TransferStatus::Perfect)
    }

    /// Process exit code convention: 0 perfect, 1 no transfer, 2 undecided.
    pub fn exit_code(&self) -> i32 {
        match self {
            TransferStatus::Perfect => 0,
            TransferStatus::NoTransfer { .. } => 1,
            TransferStatus::Undecided { .. } => 2,
        }
    }
}

impl fmt::Display for TransferStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferStatus::Perfect => f.write_str("perfect"),
            TransferStatus::NoTransfer { reason } => write!(f, "no transfer ({reason})"),
            TransferStatus::Undecided { note } => write!(f, "undecided ({note})"),
        }
    }
}

/// Phase `phi_k = arg(<lambda_k|b> / <lambda_k|a>)` of one supported eigenspace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenspacePhase {
    pub index: usize,
    pub eigenvalue: f64,
    pub phase: f64,
    /// `a_k = |P_k|a>|^2`.
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransferVerdict {
    pub source: usize,
    pub target: usize,
    #[serde(flatten)]
    pub status: TransferStatus,
    pub t0: Option<f64>,
    /// `e^{i phi}` with `exp(-iHt0)|a> = e^{i phi}|b>`.
    pub transfer_phase: Option<Complex64>,
    /// Supported eigenspaces in increasing eigenvalue order. Filled once the
    /// proportionality test has passed.
    pub phases: Vec<EigenspacePhase>,
    pub gap_structure: Option<CommensurabilityResult>,
    /// `t0 = r pi / chi`.
    pub r: Option<u32>,
    /// `|<b|exp(-iHt0)|a>|` from an independent matrix exponential.
    pub fidelity_at_t0: Option<f64>,
}

impl TransferVerdict {
    pub fn is_perfect(&self) -> bool {
        self.status.is_perfect()
    }

    fn no_transfer(source: usize, target: usize, reason: NoTransferReason) -> Self {
        TransferVerdict {
            source,
            target,
            status: TransferStatus::NoTransfer { reason },
            t0: None,
            transfer_phase: None,
            phases: Vec::new(),
            gap_structure: None,
            r: None,
            fidelity_at_t0: None,
        }
    }

    /// Number of eigenspaces supported on the source (`M`); only meaningful
    /// after the proportionality test passed.
    pub fn supported_count(&self) -> usize {
        self.phases.len()
    }
}

/// Decides perfect transfer `a -> b` with default tolerances.
pub fn check_transfer(
    h: &SingleExcitationHamiltonian,
    a: usize,
    b: usize,
) -> Result<TransferVerdict, TransferError> {
    check_transfer_with(h, a, b, &Config::default())
}

pub fn check_transfer_with(
    h: &SingleExcitationHamiltonian,
    a: usize,
    b: usize,
    cfg: &Config,
) -> Result<TransferVerdict, TransferError> {
    cfg.validate()?;
    let dec = decompose(h, cfg.grouping_tol)?;
    check_transfer_decomposed(h, &dec, a, b, cfg)
}

/// Phases per eigenspace from the proportionality test: `Ok(Some(phi))` for
/// supported spaces, `Ok(None)` for unsupported ones, `Err(k)` at the first
/// eigenspace that fails.
pub(crate) fn eigenspace_phases(
    dec: &SpectralDecomposition,
    a: usize,
    b: usize,
    cfg: &Config,
) -> Result<Vec<Option<(f64, f64)>>, usize> {
    dec.eigenspaces()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let v = e.project_basis_state(a);
            let w = e.project_basis_state(b);
            let nv = v.norm();
            if nv <= cfg.support_tol {
                return if w.norm() <= cfg.weight_tol { Ok(None) } else { Err(k) };
            }
            let overlap = v.dotc(&w);
            let phase = overlap.arg();
            let rotated = &v * Complex64::from_polar(1.0, phase);
            if (&w - rotated).norm() <= cfg.weight_tol {
                Ok(Some((phase, nv * nv)))
            } else {
                Err(k)
            }
        })
        .collect()
}

/// The checker on a precomputed decomposition of `h` (the census reuses one
/// decomposition for every vertex pair).
pub fn check_transfer_decomposed(
    h: &SingleExcitationHamiltonian,
    dec: &SpectralDecomposition,
    a: usize,
    b: usize,
    cfg: &Config,
) -> Result<TransferVerdict, TransferError> {
    let g = h.support_graph();
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(TransferError::VertexCoincide(a));
    }
    let spaces = dec.eigenspaces();
    let raw = match eigenspace_phases(dec, a, b, cfg) {
        Ok(raw) => raw,
        Err(k) => {
            return Ok(TransferVerdict::no_transfer(
                a,
                b,
                NoTransferReason::WeightMismatch {
                    eigenvalue: spaces[k].eigenvalue,
                },
            ))
        }
    };
    let phases: Vec<EigenspacePhase> = raw
        .iter()
        .enumerate()
        .filter_map(|(index, p)| {
            p.map(|(phase, weight)| EigenspacePhase {
                index,
                eigenvalue: spaces[index].eigenvalue,
                phase,
                weight,
            })
        })
        .collect();
    let mut verdict = TransferVerdict {
        phases: phases.clone(),
        ..TransferVerdict::no_transfer(a, b, NoTransferReason::NoGaps)
    };
    let Some((reference, rest)) = phases.split_first() else {
        return Ok(verdict);
    };
    if rest.is_empty() {
        return Ok(verdict);
    }

    // sigma_k = (phi_k0 - phi_k) / pi, reduced to [0, 2).
    let sigmas: Vec<f64> = rest
        .iter()
        .map(|p| ((reference.phase - p.phase) / PI).rem_euclid(2.0))
        .collect();
    let integral_sigmas: Option<Vec<i64>> = sigmas
        .iter()
        .map(|&s| {
            let r = s.round();
            ((s - r).abs() <= cfg.phase_tol).then_some(r as i64 % 2)
        })
        .collect();

    let Some(sigmas) = integral_sigmas else {
        if h.is_real() {
            let k = sigmas
                .iter()
                .position(|s| (s - s.round()).abs() > cfg.phase_tol)
                .expect("some sigma is non-integral");
            verdict.status = TransferStatus::NoTransfer {
                reason: NoTransferReason::NonRealPhase {
                    eigenvalue: rest[k].eigenvalue,
                },
            };
            return Ok(verdict);
        }
        return numerical_fallback(h, dec, verdict, cfg);
    };

    let gaps: Vec<f64> = rest.iter().map(|p| p.eigenvalue - reference.eigenvalue).collect();
    let gcd = real_gcd(&gaps, cfg.max_denominator, cfg.residual_tol * dec.scale())?;
    if !gcd.commensurable {
        verdict.gap_structure = Some(gcd);
        verdict.status = TransferStatus::NoTransfer {
            reason: NoTransferReason::IncommensurableGaps,
        };
        return Ok(verdict);
    }
    let odd_works = gcd
        .integers
        .iter()
        .zip(&sigmas)
        .all(|(z, s)| z.rem_euclid(2) == *s);
    let r = if odd_works {
        1
    } else if sigmas.iter().all(|&s| s == 0) {
        2
    } else {
        verdict.gap_structure = Some(gcd);
        verdict.status = TransferStatus::NoTransfer {
            reason: NoTransferReason::ParityObstruction,
        };
        return Ok(verdict);
    };
    let t0 = f64::from(r) * PI / gcd.chi;
    // phi = -lambda_k0 t0 - phi_k0
    let phase = Complex64::from_polar(1.0, -reference.eigenvalue * t0 - reference.phase);
    verdict.gap_structure = Some(gcd);
    verdict.r = Some(r);
    verdict.t0 = Some(t0);
    verdict.transfer_phase = Some(phase);
    confirm(h, verdict, cfg)
}

/// Confirms a candidate `t0` by the matrix exponential.
fn confirm(
    h: &SingleExcitationHamiltonian,
    mut verdict: TransferVerdict,
    cfg: &Config,
) -> Result<TransferVerdict, TransferError> {
    let t0 = verdict.t0.expect("candidate time set before confirmation");
    let u = propagator_expm(h, t0);
    let magnitude = u[(verdict.target, verdict.source)].norm();
    verdict.fidelity_at_t0 = Some(magnitude);
    verdict.status = if magnitude >= 1.0 - cfg.fidelity_tol {
        TransferStatus::Perfect
    } else {
        TransferStatus::Undecided {
            note: format!("direct evolution at candidate t0 = {t0} reached fidelity {magnitude}"),
        }
    };
    Ok(verdict)
}

fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, iterations: usize) -> (f64, f64) {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iterations {
        if f1 < f2 {
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
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Maximises `|<b|exp(-iHt)|a>|` on a grid over `(0, t_max]`, refines every
/// local maximum by golden section, and reports the earliest time reaching
/// `1 - fidelity_tol`.
fn numerical_fallback(
    h: &SingleExcitationHamiltonian,
    dec: &SpectralDecomposition,
    mut verdict: TransferVerdict,
    cfg: &Config,
) -> Result<TransferVerdict, TransferError> {
    let terms = dec.amplitude_terms(verdict.source, verdict.target);
    let radius = dec.spectral_radius();
    let t_max = cfg.t_max.unwrap_or(50.0 / radius.max(f64::MIN_POSITIVE));
    let n = cfg.scan_grid;
    let dt = t_max / n as f64;
    let mag = |t: f64| eval_terms(&terms, t).norm();
    let samples: Vec<f64> = (0..=n + 1).map(|j| mag(j as f64 * dt)).collect();
    let mut best = (0.0, 0.0);
    let mut hit = None;
    for j in 1..=n {
        if samples[j] >= samples[j - 1] && samples[j] >= samples[j + 1] {
            let (t, f) = golden_section_max(mag, (j - 1) as f64 * dt, (j + 1) as f64 * dt, 80);
            if f > best.1 {
                best = (t, f);
            }
            if f >= 1.0 - cfg.fidelity_tol {
                hit = Some(t);
                break;
            }
        }
    }
    match hit {
        Some(t0) => {
            let amp = eval_terms(&terms, t0);
            verdict.t0 = Some(t0);
            verdict.transfer_phase = Some(amp / amp.norm());
            confirm(h, verdict, cfg)
        }
        None => {
            verdict.status = TransferStatus::Undecided {
                note: format!(
                    "numerical scan up to t = {t_max} found best fidelity {} at t = {}",
                    best.1, best.0
                ),
            };
            Ok(verdict)
        }
    }
}

/// `r pi / chi` for an exact verdict, or the scanned `t0` of a numerical one.
pub fn minimal_transfer_time(verdict: &TransferVerdict) -> Result<f64, TransferError> {
    if !verdict.is_perfect() {
        return Err(TransferError::NotPerfect);
    }
    match (&verdict.gap_structure, verdict.r) {
        (Some(g), Some(r)) => Ok(f64::from(r) * PI / g.chi),
        _ => verdict.t0.ok_or(TransferError::NotPerfect),
    }
}
