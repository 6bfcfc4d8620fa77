//! Input formats: JSON graphs `{"n", "edges"}`, JSON Hamiltonians
//! `{"n", "couplings", "fields"}`, dense CSV matrices (`n` rows of `2n`
//! numbers, real and imaginary parts interleaved) and graph6 text.

use std::fs;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::Value;
use thiserror::Error;

use crate::graph::{parse_graph6, Graph, GraphError};
use crate::hamiltonian::{HamiltonianError, HamiltonianSpec, SingleExcitationHamiltonian};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid CSV matrix on row {row}: {message}")]
    Csv { row: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hamiltonian(#[from] HamiltonianError),
    #[error("a graph input is required here")]
    NotAGraph,
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Graph(Graph),
    Hamiltonian(SingleExcitationHamiltonian),
}

impl Input {
    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Input::Graph(g) => Some(g),
            Input::Hamiltonian(_) => None,
        }
    }

    /// The graph itself, or the support graph of a Hamiltonian.
    pub fn support_graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Hamiltonian(h) => h.support_graph(),
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs always serialise")
}

pub fn parse_hamiltonian_json(text: &str) -> Result<SingleExcitationHamiltonian, InputError> {
    let spec: HamiltonianSpec = serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
    Ok(spec.build()?)
}

pub fn parse_dense_csv(text: &str) -> Result<SingleExcitationHamiltonian, InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| InputError::Csv {
            row: i + 1,
            message: e.to_string(),
        })?;
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| InputError::Csv {
                row: i + 1,
                message: e.to_string(),
            })?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(InputError::Csv {
            row: 0,
            message: "empty matrix".into(),
        });
    }
    if let Some(i) = rows.iter().position(|r| r.len() != 2 * n) {
        return Err(InputError::Csv {
            row: i + 1,
            message: format!("expected {} numbers, found {}", 2 * n, rows[i].len()),
        });
    }
    let m = DMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][2 * j], rows[i][2 * j + 1]));
    Ok(SingleExcitationHamiltonian::from_dense(m)?)
}

/// Parses by content: JSON objects with `edges` are graphs, with
/// `couplings` Hamiltonians; a `.csv` extension selects the dense matrix
/// format; anything else is read as graph6 (first graph in the file).
pub fn parse_input(text: &str, extension: Option<&str>) -> Result<Input, InputError> {
    if extension.is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        return Ok(Input::Hamiltonian(parse_dense_csv(text)?));
    }
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
        return if value.get("couplings").is_some() {
            Ok(Input::Hamiltonian(parse_hamiltonian_json(text)?))
        } else {
            Ok(Input::Graph(parse_graph_json(text)?))
        };
    }
    if extension.is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        return Err(InputError::Json("expected a JSON object".into()));
    }
    let line = text
        .lines()
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l).trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| GraphError::MalformedGraph6("empty input".into()))?;
    Ok(Input::Graph(parse_graph6(line)?))
}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_input(path: &Path) -> Result<Input, InputError> {
    let text = read_text(path)?;
    parse_input(&text, path.extension().and_then(|e| e.to_str()))
}

pub fn load_graph(path: &Path) -> Result<Graph, InputError> {
    match load_input(path)? {
        Input::Graph(g) => Ok(g),
        Input::Hamiltonian(_) => Err(InputError::NotAGraph),
    }
}
