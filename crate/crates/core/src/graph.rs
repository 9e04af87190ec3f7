//! Embedded planar multigraphs.
//!
//! The embedding is a rotation system: a cyclic order of the darts around
//! each vertex. Faces are the orbits of the successor map
//! `next(d) = rotation-successor, at head(d), of twin(d)`, and a rotation
//! system is accepted exactly when Euler's formula `V - E + F = 2` holds,
//! which certifies a sphere embedding. Embeddings are input data; this crate
//! never searches for one.

use std::collections::BTreeMap;

use num_traits::Signed;
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} is a loop")]
    LoopEdge(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("bad rotation at vertex {vertex}: {detail}")]
    BadRotation { vertex: String, detail: String },
    #[error("edge {0} has non-positive resistance")]
    NonPositiveResistance(String),
    #[error("rotation system is not a sphere embedding: V - E + F = {v} - {e} + {f} != 2")]
    NotPlanarEmbedding { v: usize, e: usize, f: usize },
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("unknown edge id {0}")]
    UnknownEdge(String),
    #[error("unknown vertex id {0}")]
    UnknownVertexId(String),
}

/// Which end of an edge a dart belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DartEnd {
    Tail,
    Head,
}

/// Half of an edge, pinned to one endpoint. Each edge contributes the dart at
/// its tail and the dart at its head; `edge` indexes the graph's edge list
/// (edges sorted by id).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: usize,
    pub end: DartEnd,
}

impl Dart {
    pub fn tail(edge: usize) -> Self {
        Dart { edge, end: DartEnd::Tail }
    }

    pub fn head(edge: usize) -> Self {
        Dart { edge, end: DartEnd::Head }
    }

    pub fn twin(self) -> Self {
        Dart {
            edge: self.edge,
            end: match self.end {
                DartEnd::Tail => DartEnd::Head,
                DartEnd::Head => DartEnd::Tail,
            },
        }
    }

    /// Position in `0..2E`; darts are ordered by (edge, tail-before-head).
    pub fn index(self) -> usize {
        2 * self.edge
            + match self.end {
                DartEnd::Tail => 0,
                DartEnd::Head => 1,
            }
    }
}

/// Resistor edge between two vertices (indices into the sorted vertex list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub resistance: Rational,
}

impl Edge {
    /// Endpoint the given dart is attached to.
    pub fn vertex_at(&self, end: DartEnd) -> usize {
        match end {
            DartEnd::Tail => self.tail,
            DartEnd::Head => self.head,
        }
    }
}

/// Faces of an embedded graph: orbits of the face-successor map. Each face
/// starts at its smallest dart and faces are sorted by that dart, so the
/// census is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of_dart: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn cycles(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_of(&self, dart: Dart) -> usize {
        self.face_of_dart[dart.index()]
    }
}

/// Plain-data description consumed by [`EmbeddedMultigraph::build`]; the file
/// format maps onto this 1:1.
#[derive(Debug, Clone, Default)]
pub struct GraphSpec {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    /// Per vertex id, the cyclic dart order as (edge id, end) pairs.
    pub rotation: BTreeMap<String, Vec<(String, DartEnd)>>,
}

#[derive(Debug, Clone)]
pub struct EdgeSpec {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub resistance: Rational,
}

/// Loopless connected multigraph with positive resistances and a validated
/// sphere embedding. Immutable after construction; vertices and edges are
/// sorted by id, which fixes matrix indices and all output orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedMultigraph {
    name: String,
    vertex_ids: Vec<String>,
    edges: Vec<Edge>,
    rotations: Vec<Vec<Dart>>,
    faces: FaceSet,
}

impl EmbeddedMultigraph {
    pub fn build(spec: GraphSpec) -> Result<Self, GraphError> {
        let mut vertex_ids = spec.vertices;
        vertex_ids.sort();
        if let Some(dup) = first_duplicate(&vertex_ids) {
            return Err(GraphError::DuplicateVertex(dup.clone()));
        }
        if vertex_ids.len() < 2 {
            return Err(GraphError::TooFewVertices(vertex_ids.len()));
        }
        let vertex_index: BTreeMap<&str, usize> = vertex_ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();

        let mut edge_specs = spec.edges;
        edge_specs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges = Vec::with_capacity(edge_specs.len());
        for e in edge_specs {
            let resolve = |v: &str| {
                vertex_index.get(v).copied().ok_or_else(|| GraphError::UnknownVertex {
                    edge: e.id.clone(),
                    vertex: v.to_owned(),
                })
            };
            let tail = resolve(&e.tail)?;
            let head = resolve(&e.head)?;
            if tail == head {
                return Err(GraphError::LoopEdge(e.id));
            }
            if !e.resistance.is_positive() {
                return Err(GraphError::NonPositiveResistance(e.id));
            }
            edges.push(Edge { id: e.id, tail, head, resistance: e.resistance });
        }
        if let Some(dup) = first_duplicate_by(&edges, |e| &e.id) {
            return Err(GraphError::DuplicateEdge(dup.clone()));
        }
        let edge_index: BTreeMap<&str, usize> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.as_str(), i))
            .collect();

        // Rotation lists: every vertex present, every incident dart exactly once.
        let mut rotations: Vec<Vec<Dart>> = vec![Vec::new(); vertex_ids.len()];
        let mut seen_dart = vec![false; 2 * edges.len()];
        for (vertex, darts) in &spec.rotation {
            let &v = vertex_index.get(vertex.as_str()).ok_or_else(|| GraphError::BadRotation {
                vertex: vertex.clone(),
                detail: "not a vertex of the graph".to_owned(),
            })?;
            let bad = |detail: String| GraphError::BadRotation { vertex: vertex.clone(), detail };
            let mut rot = Vec::with_capacity(darts.len());
            for (edge_id, end) in darts {
                let &e = edge_index
                    .get(edge_id.as_str())
                    .ok_or_else(|| bad(format!("dart references unknown edge {edge_id}")))?;
                let dart = Dart { edge: e, end: *end };
                if edges[e].vertex_at(*end) != v {
                    return Err(bad(format!(
                        "dart {} is not incident to this vertex",
                        dart_token(&edges, dart),
                    )));
                }
                if seen_dart[dart.index()] {
                    return Err(bad(format!(
                        "dart {} listed twice",
                        dart_token(&edges, dart),
                    )));
                }
                seen_dart[dart.index()] = true;
                rot.push(dart);
            }
            rotations[v] = rot;
        }
        if let Some(missing) = seen_dart.iter().position(|seen| !seen) {
            let dart = Dart {
                edge: missing / 2,
                end: if missing % 2 == 0 { DartEnd::Tail } else { DartEnd::Head },
            };
            let v = edges[dart.edge].vertex_at(dart.end);
            return Err(GraphError::BadRotation {
                vertex: vertex_ids[v].clone(),
                detail: format!("dart {} missing from rotation", dart_token(&edges, dart)),
            });
        }

        if !connected(vertex_ids.len(), &edges, |_| true) {
            return Err(GraphError::Disconnected);
        }

        let faces = trace_faces(&edges, &rotations);
        let (v, e, f) = (vertex_ids.len(), edges.len(), faces.len());
        if v + f != e + 2 {
            return Err(GraphError::NotPlanarEmbedding { v, e, f });
        }

        Ok(EmbeddedMultigraph { name: spec.name, vertex_ids, edges, rotations, faces })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, GraphError> {
        self.vertex_ids
            .binary_search_by(|v| v.as_str().cmp(id))
            .map_err(|_| GraphError::UnknownVertexId(id.to_owned()))
    }

    /// Edges in sorted-id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, id: &str) -> Result<usize, GraphError> {
        self.edges
            .binary_search_by(|e| e.id.as_str().cmp(id))
            .map_err(|_| GraphError::UnknownEdge(id.to_owned()))
    }

    pub fn edge(&self, id: &str) -> Result<&Edge, GraphError> {
        Ok(&self.edges[self.edge_index(id)?])
    }

    /// Cyclic dart order around the vertex with the given index.
    pub fn rotation(&self, vertex: usize) -> &[Dart] {
        &self.rotations[vertex]
    }

    /// Faces computed from the rotation system at build time.
    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    /// The vertex a dart is attached to.
    pub fn dart_vertex(&self, dart: Dart) -> usize {
        self.edges[dart.edge].vertex_at(dart.end)
    }

    /// The vertex at the far end of a dart's edge.
    pub fn dart_target(&self, dart: Dart) -> usize {
        self.dart_vertex(dart.twin())
    }

    /// Display form `edgeId:t` / `edgeId:h`, matching the file format.
    pub fn dart_token(&self, dart: Dart) -> String {
        dart_token(&self.edges, dart)
    }

    /// Edges whose removal disconnects the graph, in sorted-id order.
    pub fn bridges(&self) -> Vec<String> {
        (0..self.edges.len())
            .filter(|&skip| !connected(self.n_vertices(), &self.edges, |e| e != skip))
            .map(|e| self.edges[e].id.clone())
            .collect()
    }

    pub(crate) fn bridge_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&skip| !connected(self.n_vertices(), &self.edges, |e| e != skip))
            .collect()
    }
}

fn dart_token(edges: &[Edge], dart: Dart) -> String {
    let end = match dart.end {
        DartEnd::Tail => "t",
        DartEnd::Head => "h",
    };
    format!("{}:{}", edges[dart.edge].id, end)
}

fn first_duplicate(sorted: &[String]) -> Option<&String> {
    sorted.windows(2).find(|w| w[0] == w[1]).map(|w| &w[0])
}

fn first_duplicate_by<T>(sorted: &[T], key: impl Fn(&T) -> &String) -> Option<&String> {
    sorted
        .windows(2)
        .find(|w| key(&w[0]) == key(&w[1]))
        .map(|w| key(&w[0]))
}

fn connected(n_vertices: usize, edges: &[Edge], use_edge: impl Fn(usize) -> bool) -> bool {
    if n_vertices == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n_vertices];
    for (i, e) in edges.iter().enumerate() {
        if use_edge(i) {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
    }
    let mut seen = vec![false; n_vertices];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n_vertices
}

/// Orbits of `next(d) = rotation-successor, at head(d), of twin(d)`.
fn trace_faces(edges: &[Edge], rotations: &[Vec<Dart>]) -> FaceSet {
    let n_darts = 2 * edges.len();
    // successor of each dart within its own rotation
    let mut rot_next = vec![Dart::tail(0); n_darts];
    for rot in rotations {
        for (i, &d) in rot.iter().enumerate() {
            rot_next[d.index()] = rot[(i + 1) % rot.len()];
        }
    }
    let next = |d: Dart| rot_next[d.twin().index()];

    let mut face_of_dart = vec![usize::MAX; n_darts];
    let mut faces = Vec::new();
    for edge in 0..edges.len() {
        for dart in [Dart::tail(edge), Dart::head(edge)] {
            if face_of_dart[dart.index()] != usize::MAX {
                continue;
            }
            let face_ix = faces.len();
            let mut cycle = Vec::new();
            let mut cur = dart;
            loop {
                face_of_dart[cur.index()] = face_ix;
                cycle.push(cur);
                cur = next(cur);
                if cur == dart {
                    break;
                }
            }
            faces.push(cycle);
        }
    }
    // cycles already start at their smallest dart: darts are visited in
    // index order, so the first dart of each orbit is its minimum
    FaceSet { faces, face_of_dart }
}
