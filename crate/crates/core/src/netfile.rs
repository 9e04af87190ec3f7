//! The JSON network file format.
//!
//! ```json
//! {
//!   "name": "triangle",
//!   "vertices": ["1", "2", "3"],
//!   "edges": [{"id": "e1", "tail": "1", "head": "2", "resistance": "1"}],
//!   "rotation": {"1": ["e1:t", "e3:h"]}
//! }
//! ```
//!
//! Resistances are rational strings (`p`, `p/q`, or a terminating decimal);
//! rotation entries are darts written `edgeId:t` (tail end) or `edgeId:h`
//! (head end). A file parses successfully exactly when it builds a valid
//! embedded multigraph.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DartEnd, EdgeSpec, EmbeddedMultigraph, GraphError, GraphSpec};
use crate::rational::{parse_rational, RationalParseError};

#[derive(Debug, Error)]
pub enum NetFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge {edge}: bad resistance: {source}")]
    Resistance {
        edge: String,
        #[source]
        source: RationalParseError,
    },
    #[error("rotation at {vertex}: bad dart token {token:?} (expected \"edgeId:t\" or \"edgeId:h\")")]
    DartToken { vertex: String, token: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Serde image of a network file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkFile {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    pub rotation: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub resistance: String,
}

impl NetworkFile {
    pub fn into_graph(self) -> Result<EmbeddedMultigraph, NetFileError> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in self.edges {
            let resistance = parse_rational(&e.resistance)
                .map_err(|source| NetFileError::Resistance { edge: e.id.clone(), source })?;
            edges.push(EdgeSpec { id: e.id, tail: e.tail, head: e.head, resistance });
        }
        let mut rotation = BTreeMap::new();
        for (vertex, darts) in self.rotation {
            let mut parsed = Vec::with_capacity(darts.len());
            for token in darts {
                let (edge, end) = parse_dart_token(&token).ok_or_else(|| {
                    NetFileError::DartToken { vertex: vertex.clone(), token: token.clone() }
                })?;
                parsed.push((edge, end));
            }
            rotation.insert(vertex, parsed);
        }
        Ok(EmbeddedMultigraph::build(GraphSpec {
            name: self.name,
            vertices: self.vertices,
            edges,
            rotation,
        })?)
    }

    pub fn from_graph(g: &EmbeddedMultigraph) -> Self {
        NetworkFile {
            name: g.name().to_owned(),
            vertices: g.vertex_ids().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    tail: g.vertex_ids()[e.tail].clone(),
                    head: g.vertex_ids()[e.head].clone(),
                    resistance: e.resistance.to_string(),
                })
                .collect(),
            rotation: g
                .vertex_ids()
                .iter()
                .enumerate()
                .map(|(v, id)| {
                    let darts = g.rotation(v).iter().map(|&d| g.dart_token(d)).collect();
                    (id.clone(), darts)
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain data serializes");
        text.push('\n');
        text
    }
}

fn parse_dart_token(token: &str) -> Option<(String, DartEnd)> {
    let (edge, end) = token.rsplit_once(':')?;
    if edge.is_empty() {
        return None;
    }
    let end = match end {
        "t" => DartEnd::Tail,
        "h" => DartEnd::Head,
        _ => return None,
    };
    Some((edge.to_owned(), end))
}

/// Reads and validates a network file.
pub fn parse_network(path: impl AsRef<Path>) -> Result<EmbeddedMultigraph, NetFileError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| NetFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    network_from_str(&text)
}

/// Parses a network from JSON text.
pub fn network_from_str(text: &str) -> Result<EmbeddedMultigraph, NetFileError> {
    let file: NetworkFile = serde_json::from_str(text)?;
    file.into_graph()
}
