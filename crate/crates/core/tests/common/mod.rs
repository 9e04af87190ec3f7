//! Helpers shared by the integration suites: fixture loading, programmatic
//! graph builders, random small rationals, and independent oracles.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dualohm::graph::DartEnd;
use dualohm::{
    parse_network, EdgeSpec, EmbeddedMultigraph, GraphSpec, Rational, RationalMatrix,
};

/// Every fixture file shipped under fixtures/.
pub const ALL_FIXTURES: &[&str] = &[
    "triangle",
    "path3",
    "parallel3",
    "example_s3",
    "barbell",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "rhombic_dodecahedron",
    "cuboctahedron",
    "wheel4",
    "wheel5",
    "wheel6",
    "wheel7",
    "wheel8",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

pub fn load_fixture(name: &str) -> EmbeddedMultigraph {
    parse_network(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Positive rational with numerator and denominator up to 10.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(1i64..=10).into(), rng.gen_range(1i64..=10).into())
}

fn edge(id: &str, tail: &str, head: &str, resistance: Rational) -> EdgeSpec {
    EdgeSpec {
        id: id.to_owned(),
        tail: tail.to_owned(),
        head: head.to_owned(),
        resistance,
    }
}

fn rotation_map(
    entries: Vec<(String, Vec<(String, DartEnd)>)>,
) -> BTreeMap<String, Vec<(String, DartEnd)>> {
    entries.into_iter().collect()
}

/// The four-vertex network with the doubled edge: R4 and R5 run in parallel
/// between vertices 3 and 4, R5 drawn outermost.
pub fn parallel_square(resistances: [Rational; 5]) -> EmbeddedMultigraph {
    use DartEnd::*;
    let [r1, r2, r3, r4, r5] = resistances;
    let spec = GraphSpec {
        name: "parallel-square".into(),
        vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
        edges: vec![
            edge("R1", "1", "4", r1),
            edge("R2", "1", "2", r2),
            edge("R3", "2", "3", r3),
            edge("R4", "3", "4", r4),
            edge("R5", "3", "4", r5),
        ],
        rotation: rotation_map(vec![
            ("1".into(), vec![("R1".into(), Tail), ("R2".into(), Tail)]),
            ("2".into(), vec![("R2".into(), Head), ("R3".into(), Tail)]),
            (
                "3".into(),
                vec![("R5".into(), Tail), ("R4".into(), Tail), ("R3".into(), Head)],
            ),
            (
                "4".into(),
                vec![("R1".into(), Head), ("R4".into(), Head), ("R5".into(), Head)],
            ),
        ]),
    };
    EmbeddedMultigraph::build(spec).expect("parallel-square embedding is valid")
}

pub fn random_parallel_square(rng: &mut ChaCha8Rng) -> ([Rational; 5], EmbeddedMultigraph) {
    let r: [Rational; 5] = std::array::from_fn(|_| small_rational(rng));
    let g = parallel_square(r.clone());
    (r, g)
}

/// Wheel with `n` rim vertices: hub `h`, rim `r0..`, rim edges `c0..` and
/// spokes `s0..`. `resistances` follows sorted edge-id order (all `c`s, then
/// all `s`s); pass `None` for unit resistances.
pub fn wheel(n: usize, resistances: Option<&[Rational]>) -> EmbeddedMultigraph {
    use DartEnd::*;
    assert!((3..10).contains(&n), "single-digit rim sizes only");
    let res = |k: usize| match resistances {
        Some(r) => r[k].clone(),
        None => Rational::one(),
    };
    let mut edges = Vec::new();
    for k in 0..n {
        edges.push(edge(
            &format!("c{k}"),
            &format!("r{k}"),
            &format!("r{}", (k + 1) % n),
            res(k),
        ));
    }
    for k in 0..n {
        edges.push(edge(&format!("s{k}"), "h", &format!("r{k}"), res(n + k)));
    }
    let mut rotation = vec![(
        "h".to_string(),
        (0..n).map(|k| (format!("s{k}"), Tail)).collect::<Vec<_>>(),
    )];
    for k in 0..n {
        rotation.push((
            format!("r{k}"),
            vec![
                (format!("c{k}"), Tail),
                (format!("s{k}"), Head),
                (format!("c{}", (k + n - 1) % n), Head),
            ],
        ));
    }
    let spec = GraphSpec {
        name: format!("wheel{n}"),
        vertices: std::iter::once("h".to_string())
            .chain((0..n).map(|k| format!("r{k}")))
            .collect(),
        edges,
        rotation: rotation_map(rotation),
    };
    EmbeddedMultigraph::build(spec).expect("wheel embedding is valid")
}

pub fn random_wheel(n: usize, rng: &mut ChaCha8Rng) -> EmbeddedMultigraph {
    let resistances: Vec<Rational> = (0..2 * n).map(|_| small_rational(rng)).collect();
    wheel(n, Some(&resistances))
}

/// Same topology and embedding, resistances replaced per edge.
pub fn rebuild_with_resistances(
    g: &EmbeddedMultigraph,
    mut resistance: impl FnMut(&dualohm::Edge) -> Rational,
) -> EmbeddedMultigraph {
    let spec = GraphSpec {
        name: g.name().to_owned(),
        vertices: g.vertex_ids().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeSpec {
                id: e.id.clone(),
                tail: g.vertex_ids()[e.tail].clone(),
                head: g.vertex_ids()[e.head].clone(),
                resistance: resistance(e),
            })
            .collect(),
        rotation: g
            .vertex_ids()
            .iter()
            .enumerate()
            .map(|(v, id)| {
                let darts = g
                    .rotation(v)
                    .iter()
                    .map(|d| (g.edges()[d.edge].id.clone(), d.end))
                    .collect();
                (id.clone(), darts)
            })
            .collect(),
    };
    EmbeddedMultigraph::build(spec).expect("same embedding stays valid")
}

pub fn with_random_resistances(g: &EmbeddedMultigraph, rng: &mut ChaCha8Rng) -> EmbeddedMultigraph {
    rebuild_with_resistances(g, |_| small_rational(rng))
}

pub fn with_unit_resistances(g: &EmbeddedMultigraph) -> EmbeddedMultigraph {
    rebuild_with_resistances(g, |_| Rational::one())
}

/// Two vertices joined by one parallel edge per resistance.
pub fn parallel_edges(resistances: &[Rational]) -> EmbeddedMultigraph {
    use DartEnd::*;
    let k = resistances.len();
    let spec = GraphSpec {
        name: format!("parallel{k}"),
        vertices: vec!["1".into(), "2".into()],
        edges: resistances
            .iter()
            .enumerate()
            .map(|(i, r)| edge(&format!("p{i}"), "1", "2", r.clone()))
            .collect(),
        rotation: rotation_map(vec![
            (
                "1".into(),
                (0..k).map(|i| (format!("p{i}"), Tail)).collect(),
            ),
            (
                "2".into(),
                (0..k).rev().map(|i| (format!("p{i}"), Head)).collect(),
            ),
        ]),
    };
    EmbeddedMultigraph::build(spec).expect("parallel bundle embedding is valid")
}

/// Recursive Laplace expansion along the first row: the independent
/// determinant oracle. Exponential, only for small matrices.
pub fn det_by_cofactor_expansion(m: &RationalMatrix) -> Rational {
    assert!(m.is_square());
    let n = m.n_rows();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        let minor = m.minor(&[0], &[j]).expect("indices valid");
        let term = m.get(0, j) * det_by_cofactor_expansion(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Checks that `b` is `a` with every edge id renamed through `map_id`:
/// i.e. there is a vertex bijection under which the renamed edges of `a` are
/// exactly the edges of `b`, resistances included.
pub fn isomorphic_by_edge_ids(
    a: &EmbeddedMultigraph,
    b: &EmbeddedMultigraph,
    map_id: impl Fn(&str) -> String,
) -> bool {
    if a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges() {
        return false;
    }
    for e in a.edges() {
        match b.edge(&map_id(&e.id)) {
            Ok(mapped) if mapped.resistance == e.resistance => {}
            _ => return false,
        }
    }
    // incident-edge-id sets: each edge appears in exactly the sets of its two
    // endpoints, so matching vertices by their sets pins the isomorphism
    let sets_of = |g: &EmbeddedMultigraph, rename: &dyn Fn(&str) -> String| -> Vec<Vec<String>> {
        let mut sets = vec![Vec::new(); g.n_vertices()];
        for e in g.edges() {
            sets[e.tail].push(rename(&e.id));
            sets[e.head].push(rename(&e.id));
        }
        for set in &mut sets {
            set.sort();
        }
        sets.sort();
        sets
    };
    let own: &dyn Fn(&str) -> String = &|id| id.to_owned();
    let renamed: &dyn Fn(&str) -> String = &|id| map_id(id);
    sets_of(a, renamed) == sets_of(b, own)
}
