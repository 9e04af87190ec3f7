//! Dual electrical networks.
//!
//! The dual has one vertex per face of the primal and one edge `e'` per
//! primal edge `e`, joining the two faces that border `e`, with resistance
//! `1/R_e` (the conductance of `e`). The dual rotation system is read off the
//! primal face cycles, so the dual is itself a valid embedded graph and can
//! be dualized again.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Dart, DartEnd, EdgeSpec, EmbeddedMultigraph, GraphError, GraphSpec};
use crate::rational::reciprocal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("graph has bridges ({}), whose duals would be loops", .0.join(", "))]
    BridgePresent(Vec<String>),
    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("unknown edge id {0}")]
    UnknownEdge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How edges and faces of a graph line up with its dual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorrespondence {
    edge_to_dual: BTreeMap<String, String>,
    dual_to_edge: BTreeMap<String, String>,
    face_to_vertex: Vec<String>,
}

impl DualCorrespondence {
    /// Dual edge id for a primal edge id.
    pub fn dual_edge(&self, edge: &str) -> Result<&str, DualError> {
        self.edge_to_dual
            .get(edge)
            .map(String::as_str)
            .ok_or_else(|| DualError::UnknownEdge(edge.to_owned()))
    }

    pub fn primal_edge(&self, dual_edge: &str) -> Result<&str, DualError> {
        self.dual_to_edge
            .get(dual_edge)
            .map(String::as_str)
            .ok_or_else(|| DualError::UnknownEdge(dual_edge.to_owned()))
    }

    /// Dual vertex id for a primal face index.
    pub fn vertex_of_face(&self, face: usize) -> &str {
        &self.face_to_vertex[face]
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edge_to_dual.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }
}

/// Dual electrical network of a bridgeless graph, with the correspondence
/// between primal and dual edges and faces.
///
/// A bridge would dualize to a loop, which embedded multigraphs forbid, so
/// bridged inputs are rejected; effective-resistance reports fall back to the
/// bridge convention instead of calling this.
pub fn dual(
    g: &EmbeddedMultigraph,
) -> Result<(EmbeddedMultigraph, DualCorrespondence), DualError> {
    let bridges = g.bridge_indices();
    if !bridges.is_empty() {
        return Err(DualError::BridgePresent(
            bridges.iter().map(|&e| g.edges()[e].id.clone()).collect(),
        ));
    }
    Ok(dual_omitting(g, &[]))
}

/// Dual with the listed edges left out. With an empty list this is the plain
/// dual; with the bridge set it is the loop-free dual, i.e. the dual of the
/// graph with its bridges contracted (deleting a loop in the dual contracts
/// the corresponding bridge in the primal).
pub(crate) fn dual_omitting(
    g: &EmbeddedMultigraph,
    omit: &[usize],
) -> (EmbeddedMultigraph, DualCorrespondence) {
    let omit: BTreeSet<usize> = omit.iter().copied().collect();
    let faces = g.faces();
    let face_to_vertex: Vec<String> = (0..faces.len()).map(|i| format!("f{i}")).collect();

    let mut edges = Vec::new();
    let mut edge_to_dual = BTreeMap::new();
    let mut dual_to_edge = BTreeMap::new();
    for (ix, edge) in g.edges().iter().enumerate() {
        if omit.contains(&ix) {
            continue;
        }
        let dual_id = format!("{}'", edge.id);
        edge_to_dual.insert(edge.id.clone(), dual_id.clone());
        dual_to_edge.insert(dual_id.clone(), edge.id.clone());
        edges.push(EdgeSpec {
            id: dual_id,
            tail: face_to_vertex[faces.face_of(Dart::tail(ix))].clone(),
            head: face_to_vertex[faces.face_of(Dart::head(ix))].clone(),
            resistance: reciprocal(&edge.resistance),
        });
    }

    // rotation at a dual vertex: the face cycle, dart for dart
    let mut rotation = BTreeMap::new();
    for (face_ix, cycle) in faces.cycles().iter().enumerate() {
        let darts: Vec<(String, DartEnd)> = cycle
            .iter()
            .filter(|d| !omit.contains(&d.edge))
            .map(|d| (format!("{}'", g.edges()[d.edge].id), d.end))
            .collect();
        rotation.insert(face_to_vertex[face_ix].clone(), darts);
    }

    let spec = GraphSpec {
        name: format!("{}'", g.name()),
        vertices: face_to_vertex.clone(),
        edges,
        rotation,
    };
    let dual_graph = EmbeddedMultigraph::build(spec)
        .expect("dual of a valid embedding is a valid embedding");

    (
        dual_graph,
        DualCorrespondence { edge_to_dual, dual_to_edge, face_to_vertex },
    )
}

/// Spanning tree of some host graph, stored as its sorted edge-id set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanningTree {
    edges: BTreeSet<String>,
}

impl SpanningTree {
    /// Validates that the edge set is a spanning tree of `host`.
    pub fn of<I, S>(host: &EmbeddedMultigraph, edges: I) -> Result<Self, DualError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let edges: BTreeSet<String> = edges.into_iter().map(Into::into).collect();
        let mut indices = Vec::with_capacity(edges.len());
        for id in &edges {
            indices.push(host.edge_index(id).map_err(|_| {
                DualError::NotSpanningTree(format!("{id} is not an edge of {}", host.name()))
            })?);
        }
        if !is_spanning_tree(host, &indices) {
            return Err(DualError::NotSpanningTree(format!(
                "{{{}}} does not span {} acyclically",
                edges.iter().cloned().collect::<Vec<_>>().join(", "),
                host.name(),
            )));
        }
        Ok(SpanningTree { edges })
    }

    /// Skips validation; `indices` must already form a spanning tree.
    pub(crate) fn from_indices(host: &EmbeddedMultigraph, indices: &[usize]) -> Self {
        SpanningTree {
            edges: indices.iter().map(|&i| host.edges()[i].id.clone()).collect(),
        }
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &str> {
        self.edges.iter().map(String::as_str)
    }

    pub fn contains(&self, edge: &str) -> bool {
        self.edges.contains(edge)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub(crate) fn is_spanning_tree(host: &EmbeddedMultigraph, edge_indices: &[usize]) -> bool {
    let n = host.n_vertices();
    if edge_indices.len() + 1 != n {
        return false;
    }
    let mut dsu = Dsu::new(n);
    for &ix in edge_indices {
        let e = &host.edges()[ix];
        if !dsu.union(e.tail, e.head) {
            return false; // cycle
        }
    }
    true // n-1 acyclic edges on n vertices always span
}

/// Complement bijection from dual spanning trees to primal ones: the primal
/// edges whose duals are *not* in the given dual tree.
pub fn psi_complement(
    primal: &EmbeddedMultigraph,
    dual_graph: &EmbeddedMultigraph,
    corr: &DualCorrespondence,
    dual_tree: &SpanningTree,
) -> Result<SpanningTree, DualError> {
    let mut indices = Vec::with_capacity(dual_tree.len());
    for id in dual_tree.edge_ids() {
        indices.push(dual_graph
            .edge_index(id)
            .map_err(|_| DualError::NotSpanningTree(format!("{id} is not a dual edge")))?);
    }
    if !is_spanning_tree(dual_graph, &indices) {
        return Err(DualError::NotSpanningTree(
            "input is not a spanning tree of the dual".to_owned(),
        ));
    }
    let complement = primal
        .edges()
        .iter()
        .filter(|e| {
            let dual_id = corr.edge_to_dual.get(&e.id);
            dual_id.is_none_or(|d| !dual_tree.contains(d))
        })
        .map(|e| e.id.clone());
    SpanningTree::of(primal, complement)
}

/// Union-find over vertex indices.
#[derive(Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when both ends were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::testutil::{parallel3_spec, triangle_spec};

    #[test]
    fn triangle_dual_is_three_parallel_unit_edges() {
        let g = EmbeddedMultigraph::build(triangle_spec()).unwrap();
        let (d, corr) = dual(&g).unwrap();
        assert_eq!(d.n_vertices(), 2);
        assert_eq!(d.n_edges(), 3);
        assert_eq!(d.faces().len(), 3);
        for e in d.edges() {
            assert_eq!(e.resistance, ratio(1, 1));
            assert_ne!(e.tail, e.head);
        }
        assert_eq!(corr.dual_edge("e1").unwrap(), "e1'");
        assert_eq!(corr.primal_edge("e3'").unwrap(), "e3");
    }

    #[test]
    fn dual_resistances_are_reciprocal() {
        let mut spec = triangle_spec();
        spec.edges[0].resistance = ratio(3, 2);
        spec.edges[1].resistance = ratio(5, 1);
        let g = EmbeddedMultigraph::build(spec).unwrap();
        let (d, corr) = dual(&g).unwrap();
        for e in g.edges() {
            let dual_id = corr.dual_edge(&e.id).unwrap();
            assert_eq!(d.edge(dual_id).unwrap().resistance, reciprocal(&e.resistance));
        }
    }

    #[test]
    fn dual_counts_swap_vertices_and_faces() {
        for spec in [triangle_spec(), parallel3_spec()] {
            let g = EmbeddedMultigraph::build(spec).unwrap();
            let (d, _) = dual(&g).unwrap();
            assert_eq!(d.n_vertices(), g.faces().len());
            assert_eq!(d.n_edges(), g.n_edges());
            assert_eq!(d.faces().len(), g.n_vertices());
        }
    }

    #[test]
    fn dual_rejects_bridges() {
        use crate::graph::DartEnd::*;
        let spec = GraphSpec {
            name: "single".into(),
            vertices: vec!["a".into(), "b".into()],
            edges: vec![EdgeSpec {
                id: "e".into(),
                tail: "a".into(),
                head: "b".into(),
                resistance: ratio(1, 1),
            }],
            rotation: [
                ("a".to_string(), vec![("e".to_string(), Tail)]),
                ("b".to_string(), vec![("e".to_string(), Head)]),
            ]
            .into_iter()
            .collect(),
        };
        let g = EmbeddedMultigraph::build(spec).unwrap();
        assert_eq!(
            dual(&g),
            Err(DualError::BridgePresent(vec!["e".to_string()]))
        );
    }

    #[test]
    fn psi_complement_on_triangle() {
        let g = EmbeddedMultigraph::build(triangle_spec()).unwrap();
        let (d, corr) = dual(&g).unwrap();
        let t_dual = SpanningTree::of(&d, ["e1'"]).unwrap();
        let t = psi_complement(&g, &d, &corr, &t_dual).unwrap();
        let ids: Vec<&str> = t.edge_ids().collect();
        assert_eq!(ids, vec!["e2", "e3"]);
    }

    #[test]
    fn psi_rejects_non_trees() {
        let g = EmbeddedMultigraph::build(triangle_spec()).unwrap();
        let (d, corr) = dual(&g).unwrap();
        // two parallel dual edges form a cycle, not a tree
        assert!(SpanningTree::of(&d, ["e1'", "e2'"]).is_err());
        let fake = SpanningTree { edges: ["e1'".to_string(), "e2'".to_string()].into() };
        assert!(psi_complement(&g, &d, &corr, &fake).is_err());
    }

    #[test]
    fn spanning_tree_validation() {
        let g = EmbeddedMultigraph::build(triangle_spec()).unwrap();
        assert!(SpanningTree::of(&g, ["e1", "e2"]).is_ok());
        assert!(SpanningTree::of(&g, ["e1"]).is_err());
        assert!(SpanningTree::of(&g, ["e1", "nope"]).is_err());
    }
}
