use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::graph::{encode_graph6, Graph};
use crate::limits::rate_report_decomposed;
use crate::spectral::{decompose, is_integral_spectrum};
use crate::transfer::{check_transfer_decomposed, TransferError, TransferStatus};

use super::{Model, SearchError, SearchRecord};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UndecidedPair {
    pub graph6: String,
    pub model: Model,
    pub source: usize,
    pub target: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusFailure {
    pub graph6: String,
    pub model: Model,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CensusOutcome {
    /// Sorted by `(graph6, model, source, target)`.
    pub records: Vec<SearchRecord>,
    pub undecided: Vec<UndecidedPair>,
    pub failures: Vec<CensusFailure>,
}

#[derive(Default)]
struct GraphOutcome {
    records: Vec<SearchRecord>,
    undecided: Vec<UndecidedPair>,
    failures: Vec<CensusFailure>,
}

fn analyse_model(g: &Graph, graph6: &str, model: Model, cfg: &Config, out: &mut GraphOutcome) -> Result<(), TransferError> {
    let ih = model.integer_hamiltonian(g);
    let h = ih.to_hamiltonian();
    let dec = decompose(&h, cfg.grouping_tol)?;
    let mut integral = None;
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let verdict = check_transfer_decomposed(&h, &dec, a, b, cfg)?;
            match verdict.status {
                TransferStatus::Perfect => {
                    let rate = rate_report_decomposed(&h, &dec, a, b, cfg)?;
                    let integral_spectrum = *integral.get_or_insert_with(|| is_integral_spectrum(&ih).integral);
                    out.records.push(SearchRecord {
                        graph6: graph6.to_string(),
                        n: g.n(),
                        model,
                        source: a,
                        target: b,
                        t0: rate.t0,
                        transfer_phase: verdict.transfer_phase.expect("perfect verdicts carry a phase"),
                        distance: rate.distance,
                        supported: rate.supported,
                        zeros: rate.zeros,
                        integral_spectrum,
                        bipartite: g.is_bipartite(),
                        regular: g.is_regular(),
                        max_degree: g.max_degree(),
                    });
                }
                TransferStatus::Undecided { note } => out.undecided.push(UndecidedPair {
                    graph6: graph6.to_string(),
                    model,
                    source: a,
                    target: b,
                    note,
                }),
                TransferStatus::NoTransfer { .. } => {}
            }
        }
    }
    Ok(())
}

fn analyse_graph(g: &Graph, models: &[Model], cfg: &Config) -> GraphOutcome {
    let graph6 = encode_graph6(g);
    let mut out = GraphOutcome::default();
    for &model in models {
        let mut part = GraphOutcome::default();
        match analyse_model(g, &graph6, model, cfg, &mut part) {
            Ok(()) => {
                out.records.append(&mut part.records);
                out.undecided.append(&mut part.undecided);
            }
            Err(e) => out.failures.push(CensusFailure {
                graph6: graph6.clone(),
                model,
                message: e.to_string(),
            }),
        }
    }
    out
}

/// Checks every vertex pair of every graph under every model with default
/// tolerances.
pub fn census(graphs: &[Graph], models: &[Model]) -> Result<CensusOutcome, SearchError> {
    census_with(graphs, models, &Config::default())
}

/// Graphs are analysed in parallel (`cfg.workers` threads, default all
/// cores); the output is sorted and therefore independent of scheduling.
/// A graph whose analysis fails is reported in `failures` and skipped.
pub fn census_with(graphs: &[Graph], models: &[Model], cfg: &Config) -> Result<CensusOutcome, SearchError> {
    cfg.validate().map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    let parts: Vec<GraphOutcome> = pool.install(|| graphs.par_iter().map(|g| analyse_graph(g, models, cfg)).collect());

    let mut outcome = CensusOutcome::default();
    for mut p in parts {
        outcome.records.append(&mut p.records);
        outcome.undecided.append(&mut p.undecided);
        outcome.failures.append(&mut p.failures);
    }
    outcome.records.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    outcome
        .undecided
        .sort_by(|x, y| (&x.graph6, x.model, x.source, x.target).cmp(&(&y.graph6, y.model, y.source, y.target)));
    outcome.failures.sort_by(|x, y| (&x.graph6, x.model).cmp(&(&y.graph6, y.model)));
    Ok(outcome)
}
