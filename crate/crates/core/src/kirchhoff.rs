//! Weighted Laplacians, their minors, and effective resistance.
//!
//! For an edge `e` between vertices `i` and `j`, the effective resistance is
//! the ratio of two minors of the weighted Laplacian: the double minor with
//! rows and columns `i, j` deleted over the cofactor at the reference vertex.
//! The duality report pairs that value with the one from the dual network and
//! checks `r_e/R_e + r_e'/R_e' = 1` edge by edge.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::dual::dual_omitting;
use crate::graph::{EmbeddedMultigraph, GraphError};
use crate::matrix::RationalMatrix;
use crate::rational::{reciprocal, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KirchhoffError {
    #[error("vertices must differ, got {0} twice")]
    SameVertex(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Weighted Laplacian of a network: off-diagonal `(i, j)` is minus the sum of
/// the conductances of the edges between `i` and `j` (an empty sum is 0), and
/// the diagonal makes every row sum to zero. Rows and columns follow the
/// sorted vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    matrix: RationalMatrix,
    vertex_ids: Vec<String>,
}

impl LaplacianMatrix {
    fn assemble<'a>(
        vertex_ids: &[String],
        edges: impl Iterator<Item = (usize, usize, &'a Rational)>,
    ) -> Self {
        let n = vertex_ids.len();
        let mut entries = vec![vec![Rational::zero(); n]; n];
        for (tail, head, resistance) in edges {
            let conductance = reciprocal(resistance);
            entries[tail][head] -= &conductance;
            entries[head][tail] -= &conductance;
            entries[tail][tail] += &conductance;
            entries[head][head] += &conductance;
        }
        LaplacianMatrix {
            matrix: RationalMatrix::from_rows(entries),
            vertex_ids: vertex_ids.to_vec(),
        }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, KirchhoffError> {
        self.vertex_ids
            .binary_search_by(|v| v.as_str().cmp(id))
            .map_err(|_| GraphError::UnknownVertexId(id.to_owned()).into())
    }

    /// Signed cofactor `(-1)^(i+j) det(L with row i, column j deleted)`. By
    /// the weighted matrix-tree theorem this is the spanning-tree weight sum,
    /// the same for every vertex pair.
    pub fn cofactor(&self, i: &str, j: &str) -> Result<Rational, KirchhoffError> {
        let (ri, cj) = (self.vertex_index(i)?, self.vertex_index(j)?);
        let det = self
            .matrix
            .minor(&[ri], &[cj])
            .expect("indices in range")
            .det()
            .expect("minor of square is square");
        Ok(if (ri + cj) % 2 == 0 { det } else { -det })
    }

    /// Determinant of `L` with rows `i, j` and columns `i, j` deleted, no
    /// sign factor. Divided by `R_e` it is the weight sum of the spanning
    /// trees through an edge `e` between `i` and `j`; for a 2-vertex network
    /// the deleted matrix is empty and the determinant is 1 by convention.
    pub fn double_minor(&self, i: &str, j: &str) -> Result<Rational, KirchhoffError> {
        let (ri, rj) = (self.vertex_index(i)?, self.vertex_index(j)?);
        if ri == rj {
            return Err(KirchhoffError::SameVertex(i.to_owned()));
        }
        Ok(self
            .matrix
            .minor(&[ri, rj], &[ri, rj])
            .expect("indices in range and distinct")
            .det()
            .expect("minor of square is square"))
    }

    /// Cofactor at the reference vertex (the first in sorted order), the
    /// denominator of the effective-resistance ratio.
    pub fn reference_cofactor(&self) -> Rational {
        let first = self.vertex_ids[0].clone();
        self.cofactor(&first, &first).expect("reference vertex exists")
    }
}

/// Record of the duality check for one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityRecord {
    pub edge_id: String,
    /// R_e, the edge's own resistance.
    pub resistance: Rational,
    /// r_e, the effective resistance over the edge.
    pub effective: Rational,
    /// R_e' = 1/R_e, the dual edge's resistance.
    pub dual_resistance: Rational,
    /// r_e', the effective resistance over the dual edge.
    pub dual_effective: Rational,
    /// r_e/R_e + r_e'/R_e', exactly 1 when the duality identity holds.
    pub sum: Rational,
    /// Bridges have no dual edge; their record is the convention
    /// r_e = R_e, r_e' = 0, sum = 1.
    pub bridge: bool,
}

impl EmbeddedMultigraph {
    pub fn laplacian(&self) -> LaplacianMatrix {
        LaplacianMatrix::assemble(
            self.vertex_ids(),
            self.edges().iter().map(|e| (e.tail, e.head, &e.resistance)),
        )
    }

    /// Effective resistance over an edge: the network seen from the edge's
    /// endpoints as a single resistor. Satisfies `0 < r_e <= R_e`, with
    /// equality exactly on bridges.
    pub fn effective_resistance(&self, edge: &str) -> Result<Rational, KirchhoffError> {
        let e = self.edge(edge)?;
        let lap = self.laplacian();
        let tail = self.vertex_ids()[e.tail].clone();
        let head = self.vertex_ids()[e.head].clone();
        Ok(lap.double_minor(&tail, &head)? / lap.reference_cofactor())
    }

    /// Merges every parallel class into a single edge carrying the parallel
    /// resistance `1/(1/R_1 + ... + 1/R_k)`. The result is a plain weighted
    /// graph without an embedding (merging can change the face structure),
    /// with the same Laplacian as the input.
    pub fn collapse_parallel(&self) -> CollapsedNetwork {
        let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ix, e) in self.edges().iter().enumerate() {
            let key = (e.tail.min(e.head), e.tail.max(e.head));
            classes.entry(key).or_default().push(ix);
        }
        let mut edges: Vec<CollapsedEdge> = classes
            .into_iter()
            .map(|((tail, head), members)| {
                let conductance: Rational = members
                    .iter()
                    .map(|&ix| reciprocal(&self.edges()[ix].resistance))
                    .sum();
                let merged_ids: Vec<String> =
                    members.iter().map(|&ix| self.edges()[ix].id.clone()).collect();
                CollapsedEdge {
                    id: merged_ids.join("+"),
                    merged_ids,
                    tail,
                    head,
                    resistance: reciprocal(&conductance),
                }
            })
            .collect();
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        CollapsedNetwork {
            name: self.name().to_owned(),
            vertex_ids: self.vertex_ids().to_vec(),
            edges,
        }
    }

    /// The duality check for every edge, in sorted edge-id order.
    ///
    /// Non-bridge edges get `r_e` from this network and `r_e'` from the dual;
    /// when bridges are present the dual-side values come from the loop-free
    /// dual (equivalently, the dual of the network with its bridges
    /// contracted), which leaves `r_e` of non-bridge edges untouched. Bridge
    /// edges get the convention record with `r_e = R_e` and `r_e' = 0`.
    pub fn duality_report(&self) -> Vec<DualityRecord> {
        let bridges = self.bridge_indices();
        let all_bridges = bridges.len() == self.n_edges();
        let dual_side = if all_bridges {
            None
        } else {
            let (dual_graph, corr) = dual_omitting(self, &bridges);
            let lap = dual_graph.laplacian();
            let reference = lap.reference_cofactor();
            Some((dual_graph, corr, lap, reference))
        };
        let lap = self.laplacian();
        let reference = lap.reference_cofactor();

        let mut is_bridge = vec![false; self.n_edges()];
        for &b in &bridges {
            is_bridge[b] = true;
        }

        self.edges()
            .iter()
            .enumerate()
            .map(|(ix, e)| {
                let dual_resistance = reciprocal(&e.resistance);
                if is_bridge[ix] {
                    return DualityRecord {
                        edge_id: e.id.clone(),
                        resistance: e.resistance.clone(),
                        effective: e.resistance.clone(),
                        dual_resistance,
                        dual_effective: Rational::zero(),
                        sum: Rational::from_integer(1.into()),
                        bridge: true,
                    };
                }
                let (dual_graph, corr, dual_lap, dual_reference) =
                    dual_side.as_ref().expect("non-bridge edge implies dual exists");
                let tail = &self.vertex_ids()[e.tail];
                let head = &self.vertex_ids()[e.head];
                let effective =
                    lap.double_minor(tail, head).expect("edge endpoints differ") / &reference;

                let dual_edge = dual_graph
                    .edge(corr.dual_edge(&e.id).expect("non-bridge edge has a dual"))
                    .expect("correspondence targets dual edges");
                let dual_tail = &dual_graph.vertex_ids()[dual_edge.tail];
                let dual_head = &dual_graph.vertex_ids()[dual_edge.head];
                let dual_effective = dual_lap
                    .double_minor(dual_tail, dual_head)
                    .expect("dual edge endpoints differ")
                    / dual_reference;

                let sum = &effective / &e.resistance + &dual_effective / &dual_resistance;
                DualityRecord {
                    edge_id: e.id.clone(),
                    resistance: e.resistance.clone(),
                    effective,
                    dual_resistance,
                    dual_effective,
                    sum,
                    bridge: false,
                }
            })
            .collect()
    }
}

/// Simple weighted graph produced by [`EmbeddedMultigraph::collapse_parallel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedNetwork {
    pub name: String,
    pub vertex_ids: Vec<String>,
    pub edges: Vec<CollapsedEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedEdge {
    pub id: String,
    /// Ids of the parallel edges merged into this one, in sorted order.
    pub merged_ids: Vec<String>,
    pub tail: usize,
    pub head: usize,
    pub resistance: Rational,
}

impl CollapsedNetwork {
    pub fn laplacian(&self) -> LaplacianMatrix {
        LaplacianMatrix::assemble(
            &self.vertex_ids,
            self.edges.iter().map(|e| (e.tail, e.head, &e.resistance)),
        )
    }
}
