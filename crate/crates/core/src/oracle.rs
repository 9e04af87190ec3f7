//! Brute-force spanning-tree enumeration.
//!
//! Deletion-contraction over the sorted edge list, no shortcuts: this is the
//! ground truth that the matrix-tree identities are checked against, so the
//! implementation stays as plain as possible. Weighted sums computed here are
//! compared exactly with Laplacian cofactors and double minors.

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::dual::{dual, psi_complement, Dsu, SpanningTree};
use crate::graph::{EmbeddedMultigraph, GraphError};
use crate::kirchhoff::LaplacianMatrix;
use crate::rational::{reciprocal, Rational};

/// Default enumeration cap; keeps the oracle suite fast at desk scale.
pub const DEFAULT_TREE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("more than {0} spanning trees; rerun with a higher cap or use determinants only")]
    CapExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exhaustive, duplicate-free list of spanning trees with their weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreeSet {
    trees: Vec<SpanningTree>,
    weights: Vec<Rational>,
}

impl SpanningTreeSet {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    /// Weight of the i-th tree, the product of its edge conductances.
    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpanningTree, &Rational)> {
        self.trees.iter().zip(&self.weights)
    }

    /// Sum of all tree weights; equals any Laplacian cofactor.
    pub fn total_weight(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Sum of the weights of the trees containing the given edge.
    pub fn weight_through(&self, edge: &str) -> Rational {
        self.iter()
            .filter(|(t, _)| t.contains(edge))
            .map(|(_, w)| w)
            .sum()
    }
}

/// Product of the conductances `1/R_e` over the given edges; 1 for the empty
/// set.
pub fn subgraph_weight<'a>(
    g: &EmbeddedMultigraph,
    edges: impl IntoIterator<Item = &'a str>,
) -> Result<Rational, OracleError> {
    let mut weight = Rational::one();
    for id in edges {
        weight *= reciprocal(&g.edge(id)?.resistance);
    }
    Ok(weight)
}

/// Total weight of the whole edge set, `Π(G)`.
pub fn total_graph_weight(g: &EmbeddedMultigraph) -> Rational {
    g.edges().iter().map(|e| reciprocal(&e.resistance)).product()
}

/// Enumerates every spanning tree by deletion-contraction: edges are taken in
/// sorted-id order and each is first included (contracted) and then excluded
/// (deleted), pruning branches that can no longer span. The order is
/// deterministic and independent of the input edge order.
pub fn enumerate_spanning_trees(
    g: &EmbeddedMultigraph,
    cap: usize,
) -> Result<SpanningTreeSet, OracleError> {
    let n = g.n_vertices();
    let conductances: Vec<Rational> =
        g.edges().iter().map(|e| reciprocal(&e.resistance)).collect();
    let mut out = SpanningTreeSet { trees: Vec::new(), weights: Vec::new() };
    let mut chosen: Vec<usize> = Vec::with_capacity(n.saturating_sub(1));
    recurse(g, cap, 0, Dsu::new(n), &mut chosen, &conductances, &mut out)?;
    Ok(out)
}

fn recurse(
    g: &EmbeddedMultigraph,
    cap: usize,
    next_edge: usize,
    dsu: Dsu,
    chosen: &mut Vec<usize>,
    conductances: &[Rational],
    out: &mut SpanningTreeSet,
) -> Result<(), OracleError> {
    if chosen.len() + 1 == g.n_vertices() {
        if out.trees.len() == cap {
            return Err(OracleError::CapExceeded(cap));
        }
        out.trees.push(SpanningTree::from_indices(g, chosen));
        out.weights.push(chosen.iter().map(|&i| &conductances[i]).product());
        return Ok(());
    }
    if next_edge == g.n_edges() {
        return Ok(());
    }
    let edge = &g.edges()[next_edge];

    // include (contract) when it closes no cycle
    let mut with_edge = dsu.clone();
    if with_edge.union(edge.tail, edge.head) {
        chosen.push(next_edge);
        recurse(g, cap, next_edge + 1, with_edge, chosen, conductances, out)?;
        chosen.pop();
    }

    // exclude (delete) when the remaining edges can still connect everything
    let mut rest = dsu.clone();
    for later in next_edge + 1..g.n_edges() {
        let e = &g.edges()[later];
        rest.union(e.tail, e.head);
    }
    if rest.components() == 1 {
        recurse(g, cap, next_edge + 1, dsu, chosen, conductances, out)?;
    }
    Ok(())
}

/// Outcome of one oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Enumerated ground truth compared against the determinant identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub tree_count: usize,
    pub dual_tree_count: Option<usize>,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn all_passed(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Fail(_)))
    }
}

/// Runs every oracle comparison on a graph:
///
/// a. enumerated tree-weight sum vs. the Laplacian cofactor,
/// b. per edge, the weight of the trees through it vs. `double minor / R_e`,
/// c. dual cofactor vs. primal cofactor times the dual's total weight,
/// d. per dual tree, weight transfer under the complement map,
/// e. the complement map is a bijection onto the primal tree set.
///
/// On graphs with bridges the dual does not exist, so c-e are reported as
/// skipped; a and b always run.
pub fn oracle_report(g: &EmbeddedMultigraph, cap: usize) -> Result<OracleReport, OracleError> {
    let trees = enumerate_spanning_trees(g, cap)?;
    let lap = g.laplacian();
    let mut checks = Vec::new();

    checks.push(OracleCheck {
        name: "tree_weight_sum_vs_cofactor",
        status: compare(
            "enumerated tree weight sum",
            &trees.total_weight(),
            "reference cofactor",
            &lap.reference_cofactor(),
        ),
    });

    checks.push(OracleCheck {
        name: "per_edge_weight_vs_double_minor",
        status: per_edge_check(g, &lap, &trees),
    });

    let bridges = g.bridges();
    let (dual_tree_count, dual_checks) = if bridges.is_empty() {
        let (dual_graph, corr) = dual(g).expect("bridgeless");
        let dual_trees = enumerate_spanning_trees(&dual_graph, cap)?;
        let count = dual_trees.len();
        let checks = dual_transfer_checks(g, &dual_graph, &corr, &trees, &dual_trees);
        (Some(count), checks)
    } else {
        let reason = format!("bridges present: {}", bridges.join(", "));
        let skipped = |name| OracleCheck { name, status: CheckStatus::Skipped(reason.clone()) };
        (
            None,
            vec![
                skipped("dual_cofactor_transfer"),
                skipped("dual_tree_weight_transfer"),
                skipped("complement_bijection"),
            ],
        )
    };
    checks.extend(dual_checks);

    Ok(OracleReport { tree_count: trees.len(), dual_tree_count, checks })
}

fn compare(what: &str, got: &Rational, against: &str, want: &Rational) -> CheckStatus {
    if got == want {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(format!("{what} = {got} but {against} = {want}"))
    }
}

fn per_edge_check(
    g: &EmbeddedMultigraph,
    lap: &LaplacianMatrix,
    trees: &SpanningTreeSet,
) -> CheckStatus {
    for e in g.edges() {
        let tail = &g.vertex_ids()[e.tail];
        let head = &g.vertex_ids()[e.head];
        let from_minor = lap
            .double_minor(tail, head)
            .expect("edge endpoints differ")
            / &e.resistance;
        let from_trees = trees.weight_through(&e.id);
        if from_minor != from_trees {
            return CheckStatus::Fail(format!(
                "edge {}: trees give {from_trees}, double minor gives {from_minor}",
                e.id
            ));
        }
    }
    CheckStatus::Pass
}

fn dual_transfer_checks(
    g: &EmbeddedMultigraph,
    dual_graph: &EmbeddedMultigraph,
    corr: &crate::dual::DualCorrespondence,
    trees: &SpanningTreeSet,
    dual_trees: &SpanningTreeSet,
) -> Vec<OracleCheck> {
    let mut checks = Vec::new();
    let dual_total = total_graph_weight(dual_graph);

    checks.push(OracleCheck {
        name: "dual_cofactor_transfer",
        status: compare(
            "dual cofactor",
            &dual_graph.laplacian().reference_cofactor(),
            "primal cofactor times dual total weight",
            &(g.laplacian().reference_cofactor() * &dual_total),
        ),
    });

    let mut weight_transfer = CheckStatus::Pass;
    let mut images: BTreeSet<SpanningTree> = BTreeSet::new();
    for (dual_tree, dual_weight) in dual_trees.iter() {
        match psi_complement(g, dual_graph, corr, dual_tree) {
            Ok(image) => {
                let image_ids: Vec<&str> = image.edge_ids().collect();
                let image_weight = subgraph_weight(g, image_ids).expect("tree edges exist");
                if *dual_weight != &dual_total * &image_weight {
                    weight_transfer = CheckStatus::Fail(format!(
                        "dual tree {{{}}}: weight {dual_weight} != total * complement weight",
                        dual_tree.edge_ids().collect::<Vec<_>>().join(", "),
                    ));
                    break;
                }
                images.insert(image);
            }
            Err(err) => {
                weight_transfer =
                    CheckStatus::Fail(format!("complement is not a spanning tree: {err}"));
                break;
            }
        }
    }
    checks.push(OracleCheck { name: "dual_tree_weight_transfer", status: weight_transfer });

    let primal_set: BTreeSet<SpanningTree> = trees.trees().iter().cloned().collect();
    let bijection = if images.len() != dual_trees.len() {
        CheckStatus::Fail(format!(
            "complement map not injective: {} dual trees map to {} images",
            dual_trees.len(),
            images.len()
        ))
    } else if images != primal_set {
        CheckStatus::Fail(format!(
            "complement images cover {} of {} primal trees",
            images.intersection(&primal_set).count(),
            primal_set.len()
        ))
    } else {
        CheckStatus::Pass
    };
    checks.push(OracleCheck { name: "complement_bijection", status: bijection });

    checks
}
