//! Exhaustive perfect-transfer census over small connected graphs.

mod census;
mod enumerate;
mod records;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::hamiltonian::{adjacency_hamiltonian, laplacian_hamiltonian, IntegerHamiltonian};

pub use census::{census, census_with, CensusFailure, CensusOutcome, UndecidedPair};
pub use enumerate::{canonical_form, enumerate_connected_graphs, upper_triangle_code, MAX_ENUMERATION_N};
pub use records::{read_records, read_records_from, write_records, write_records_csv, write_records_to};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("enumeration is limited to n <= 7, got n = {0}; supply a graph6 file instead")]
    NTooLarge(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed record on line {line}: {message}")]
    MalformedRecord { line: usize, message: String },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Adjacency,
    Laplacian,
}

impl Model {
    pub const ALL: [Model; 2] = [Model::Adjacency, Model::Laplacian];

    pub fn integer_hamiltonian(self, g: &Graph) -> IntegerHamiltonian {
        match self {
            Model::Adjacency => adjacency_hamiltonian(g),
            Model::Laplacian => laplacian_hamiltonian(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::Adjacency => "adjacency",
            Model::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" => Ok(Model::Adjacency),
            "laplacian" => Ok(Model::Laplacian),
            other => Err(format!("unknown model {other:?} (expected adjacency or laplacian)")),
        }
    }
}

/// One perfect transfer pair `source < target` of one graph under one model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub graph6: String,
    pub n: usize,
    pub model: Model,
    pub source: usize,
    pub target: usize,
    pub t0: f64,
    #[serde(with = "complex_pair")]
    pub transfer_phase: Complex64,
    #[serde(rename = "D")]
    pub distance: usize,
    #[serde(rename = "M")]
    pub supported: usize,
    #[serde(rename = "l")]
    pub zeros: usize,
    pub integral_spectrum: bool,
    pub bipartite: bool,
    pub regular: bool,
    pub max_degree: usize,
}

impl SearchRecord {
    pub fn sort_key(&self) -> (&str, Model, usize, usize) {
        (&self.graph6, self.model, self.source, self.target)
    }
}

mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}
