//! Small hand-built graphs shared by the unit tests.

use std::collections::BTreeMap;

use crate::graph::{DartEnd, EdgeSpec, GraphSpec};
use crate::rational::{ratio, Rational};

pub fn unit_edge(id: &str, tail: &str, head: &str) -> EdgeSpec {
    edge(id, tail, head, ratio(1, 1))
}

pub fn edge(id: &str, tail: &str, head: &str, resistance: Rational) -> EdgeSpec {
    EdgeSpec {
        id: id.to_owned(),
        tail: tail.to_owned(),
        head: head.to_owned(),
        resistance,
    }
}

pub fn rot(pairs: &[(&str, DartEnd)]) -> Vec<(String, DartEnd)> {
    pairs.iter().map(|(id, end)| (id.to_string(), *end)).collect()
}

pub fn rotation_map(entries: &[(&str, &[(&str, DartEnd)])]) -> BTreeMap<String, Vec<(String, DartEnd)>> {
    entries
        .iter()
        .map(|(vertex, darts)| (vertex.to_string(), rot(darts)))
        .collect()
}

pub fn triangle_spec() -> GraphSpec {
    use DartEnd::*;
    GraphSpec {
        name: "triangle".into(),
        vertices: vec!["1".into(), "2".into(), "3".into()],
        edges: vec![
            unit_edge("e1", "1", "2"),
            unit_edge("e2", "2", "3"),
            unit_edge("e3", "3", "1"),
        ],
        rotation: rotation_map(&[
            ("1", &[("e1", Tail), ("e3", Head)]),
            ("2", &[("e2", Tail), ("e1", Head)]),
            ("3", &[("e3", Tail), ("e2", Head)]),
        ]),
    }
}

pub fn path3_spec() -> GraphSpec {
    use DartEnd::*;
    GraphSpec {
        name: "path3".into(),
        vertices: vec!["1".into(), "2".into(), "3".into()],
        edges: vec![unit_edge("e1", "1", "2"), unit_edge("e2", "2", "3")],
        rotation: rotation_map(&[
            ("1", &[("e1", Tail)]),
            ("2", &[("e1", Head), ("e2", Tail)]),
            ("3", &[("e2", Head)]),
        ]),
    }
}

pub fn parallel3_spec() -> GraphSpec {
    use DartEnd::*;
    GraphSpec {
        name: "parallel3".into(),
        vertices: vec!["1".into(), "2".into()],
        edges: vec![
            unit_edge("p1", "1", "2"),
            unit_edge("p2", "1", "2"),
            unit_edge("p3", "1", "2"),
        ],
        rotation: rotation_map(&[
            ("1", &[("p1", Tail), ("p2", Tail), ("p3", Tail)]),
            ("2", &[("p3", Head), ("p2", Head), ("p1", Head)]),
        ]),
    }
}

/// The four-vertex network with parallel edges R4/R5 between vertices 3 and 4
/// (R5 drawn outermost), with configurable resistances.
pub fn parallel_square_spec(r: [Rational; 5]) -> GraphSpec {
    use DartEnd::*;
    let [r1, r2, r3, r4, r5] = r;
    GraphSpec {
        name: "parallel-square".into(),
        vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
        edges: vec![
            edge("R1", "1", "4", r1),
            edge("R2", "1", "2", r2),
            edge("R3", "2", "3", r3),
            edge("R4", "3", "4", r4),
            edge("R5", "3", "4", r5),
        ],
        rotation: rotation_map(&[
            ("1", &[("R1", Tail), ("R2", Tail)]),
            ("2", &[("R2", Head), ("R3", Tail)]),
            ("3", &[("R5", Tail), ("R4", Tail), ("R3", Head)]),
            ("4", &[("R1", Head), ("R4", Head), ("R5", Head)]),
        ]),
    }
}

pub fn unit_parallel_square_spec() -> GraphSpec {
    parallel_square_spec([ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1), ratio(1, 1)])
}

/// Two triangles joined by a single bridge.
pub fn barbell_spec() -> GraphSpec {
    use DartEnd::*;
    GraphSpec {
        name: "barbell".into(),
        vertices: (1..=6).map(|i| i.to_string()).collect(),
        edges: vec![
            unit_edge("a1", "1", "2"),
            unit_edge("a2", "2", "3"),
            unit_edge("a3", "3", "1"),
            unit_edge("b", "3", "4"),
            unit_edge("c1", "4", "5"),
            unit_edge("c2", "5", "6"),
            unit_edge("c3", "6", "4"),
        ],
        rotation: rotation_map(&[
            ("1", &[("a1", Tail), ("a3", Head)]),
            ("2", &[("a2", Tail), ("a1", Head)]),
            ("3", &[("b", Tail), ("a3", Tail), ("a2", Head)]),
            ("4", &[("c1", Tail), ("b", Head), ("c3", Head)]),
            ("5", &[("c2", Tail), ("c1", Head)]),
            ("6", &[("c3", Tail), ("c2", Head)]),
        ]),
    }
}
