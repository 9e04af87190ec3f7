#!/usr/bin/env python3
"""Generate the JSON network fixtures under fixtures/.

Polyhedral networks are derived from 3D vertex coordinates: faces come from
the convex hull (coplanar triangles merged, vertices ordered counterclockwise
as seen from outside), and the rotation system is read off the oriented face
set. Every fixture is self-checked before it is written:

  * each directed edge appears exactly once over all faces,
  * the face orbits recomputed from the emitted rotation lists match,
  * V - E + F = 2,
  * effective resistances recomputed with exact arithmetic (sympy) match the
    expected values where known.

Run from the repository root:  python3 tools/gen_fixtures.py
"""

import json
import math
import os
from fractions import Fraction
from itertools import product

import numpy as np
from scipy.spatial import ConvexHull
import sympy

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")

PHI = (1 + math.sqrt(5)) / 2


# ---------------------------------------------------------------------------
# polyhedron coordinates


def cube_points():
    return [np.array(p, dtype=float) for p in product((-1, 1), repeat=3)]


def octahedron_points():
    pts = []
    for axis in range(3):
        for sign in (-1, 1):
            p = np.zeros(3)
            p[axis] = sign
            pts.append(p)
    return pts


def dodecahedron_points():
    pts = [np.array(p, dtype=float) for p in product((-1, 1), repeat=3)]
    for a, b in product((-1, 1), repeat=2):
        pts.append(np.array([0.0, a / PHI, b * PHI]))
        pts.append(np.array([a / PHI, b * PHI, 0.0]))
        pts.append(np.array([a * PHI, 0.0, b / PHI]))
    return pts


def icosahedron_points():
    pts = []
    for a, b in product((-1, 1), repeat=2):
        pts.append(np.array([0.0, a, b * PHI]))
        pts.append(np.array([a, b * PHI, 0.0]))
        pts.append(np.array([a * PHI, 0.0, b]))
    return pts


def cuboctahedron_points():
    pts = []
    for a, b in product((-1, 1), repeat=2):
        pts.append(np.array([a, b, 0.0]))
        pts.append(np.array([a, 0.0, b]))
        pts.append(np.array([0.0, a, b]))
    return pts


def rhombic_dodecahedron_points():
    pts = [np.array(p, dtype=float) for p in product((-1, 1), repeat=3)]
    for axis in range(3):
        for sign in (-2, 2):
            p = np.zeros(3)
            p[axis] = sign
            pts.append(p)
    return pts


# ---------------------------------------------------------------------------
# hull faces, oriented outward


def hull_faces(points):
    """Faces of the convex hull as vertex cycles, counterclockwise from outside."""
    pts = np.array(points)
    hull = ConvexHull(pts)
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(int(v) for v in simplex)
    faces = []
    for key in sorted(groups):
        normal = np.array(key[:3])
        members = sorted(groups[key])
        center = pts[members].mean(axis=0)
        basis_a = pts[members[0]] - center
        basis_a = basis_a / np.linalg.norm(basis_a)
        basis_b = np.cross(normal, basis_a)
        basis_b = basis_b / np.linalg.norm(basis_b)

        def angle(v):
            d = pts[v] - center
            return math.atan2(float(d @ basis_b), float(d @ basis_a))

        faces.append([v for v in sorted(members, key=angle)])
    return sorted(faces, key=lambda f: tuple(sorted(f)))


def check_oriented(faces):
    directed = set()
    for face in faces:
        for i, u in enumerate(face):
            v = face[(i + 1) % len(face)]
            assert u != v, "degenerate edge in face"
            assert (u, v) not in directed, f"directed edge {(u, v)} repeated"
            directed.add((u, v))
    for u, v in directed:
        assert (v, u) in directed, f"missing reverse of {(u, v)}"
    return directed


# ---------------------------------------------------------------------------
# rotation system from oriented faces (simple graphs only)


def rotations_from_faces(n_vertices, faces, edge_id, vid):
    """Per-vertex dart lists. sigma(d) = face-successor of twin(d)."""
    succ = {}
    for face in faces:
        for i, u in enumerate(face):
            v = face[(i + 1) % len(face)]
            w = face[(i + 2) % len(face)]
            succ[(u, v)] = (v, w)

    def dart_token(u, v):
        eid, tail, _head = edge_id[frozenset((u, v))]
        return f"{eid}:{'t' if tail == u else 'h'}"

    rotations = {}
    for u in range(n_vertices):
        out = sorted(v for (a, v) in succ if a == u)
        start = out[0]
        cycle = []
        v = start
        while True:
            cycle.append(dart_token(u, v))
            _, v = succ[(v, u)]
            if v == start:
                break
        assert len(cycle) == len(out), f"rotation at {u} does not close up"
        rotations[vid(u)] = cycle
    return rotations


# ---------------------------------------------------------------------------
# independent self-checks on the emitted fixture dict


def face_orbits(fx):
    """Recompute face orbits from the rotation lists, mirroring the dart rules:
    twin(e:t) = e:h, head(e:t) = head(e), next(d) = successor of twin(d) in the
    rotation at head(d)."""
    tail = {e["id"]: e["tail"] for e in fx["edges"]}
    head = {e["id"]: e["head"] for e in fx["edges"]}

    def twin(d):
        eid, end = d.rsplit(":", 1)
        return f"{eid}:{'h' if end == 't' else 't'}"

    def dart_head(d):
        eid, end = d.rsplit(":", 1)
        return head[eid] if end == "t" else tail[eid]

    succ = {}
    at_vertex = {}
    for v, rot in fx["rotation"].items():
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
            at_vertex[d] = v
    assert len(succ) == 2 * len(fx["edges"]), "rotation does not cover all darts"

    def nxt(d):
        t = twin(d)
        assert at_vertex[t] == dart_head(d), f"dart {d} inconsistent"
        return succ[t]

    seen = set()
    orbits = []
    for d in sorted(succ):
        if d in seen:
            continue
        orbit = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = nxt(cur)
        orbits.append(orbit)
    return orbits


def laplacian(fx):
    verts = sorted(fx["vertices"])
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mat = sympy.zeros(n, n)
    for e in fx["edges"]:
        i, j = index[e["tail"]], index[e["head"]]
        c = 1 / sympy.Rational(e["resistance"])
        mat[i, j] -= c
        mat[j, i] -= c
        mat[i, i] += c
        mat[j, j] += c
    return mat, index


def minor_det(mat, drop):
    keep = [k for k in range(mat.shape[0]) if k not in drop]
    sub = mat[keep, keep]
    if sub.shape[0] == 0:
        return sympy.Integer(1)
    return sub.det()


def effective_resistances(fx):
    mat, index = laplacian(fx)
    denom = minor_det(mat, {0})
    out = {}
    for e in fx["edges"]:
        i, j = index[e["tail"]], index[e["head"]]
        out[e["id"]] = sympy.nsimplify(minor_det(mat, {i, j}) / denom)
    return out, denom


def self_check(fx, expect_r=None, expect_tree_weight=None, expect_faces=None):
    ids = [e["id"] for e in fx["edges"]]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert fx["vertices"] == sorted(fx["vertices"])
    for e in fx["edges"]:
        assert e["tail"] != e["head"], f"loop edge {e['id']}"

    orbits = face_orbits(fx)
    v, e, f = len(fx["vertices"]), len(fx["edges"]), len(orbits)
    assert v - e + f == 2, f"{fx['name']}: V-E+F = {v}-{e}+{f} != 2"
    if expect_faces is not None:
        lengths = sorted(len(o) for o in orbits)
        assert lengths == sorted(expect_faces), f"{fx['name']}: faces {lengths}"

    rs, denom = effective_resistances(fx)
    if expect_tree_weight is not None:
        assert denom == expect_tree_weight, f"{fx['name']}: tree weight {denom}"
    if expect_r is not None:
        for eid, val in rs.items():
            want = expect_r(eid) if callable(expect_r) else expect_r
            if want is not None:
                assert val == want, f"{fx['name']}: r({eid}) = {val}, want {want}"
    return orbits, rs, denom


def write(fx):
    path = os.path.join(OUT_DIR, fx["name"] + ".json")
    with open(path, "w") as fh:
        json.dump(fx, fh, indent=2)
        fh.write("\n")
    print(f"wrote {path}")


# ---------------------------------------------------------------------------
# fixture builders


def polyhedron_fixture(name, points):
    faces = hull_faces(points)
    check_oriented(faces)
    n = len(points)
    edge_pairs = sorted(
        {frozenset((f[i], f[(i + 1) % len(f)])) for f in faces for i in range(len(f))},
        key=sorted,
    )

    def vid(i):
        return f"v{i}"

    edge_id = {}
    edges = []
    for k, pair in enumerate(edge_pairs):
        u, v = sorted(pair)
        eid = f"e{k}"
        edge_id[pair] = (eid, u, v)
        edges.append({"id": eid, "tail": vid(u), "head": vid(v), "resistance": "1"})

    rotations = rotations_from_faces(n, faces, edge_id, vid)
    return {
        "name": name,
        "vertices": sorted(vid(i) for i in range(n)),
        "edges": sorted(edges, key=lambda e: e["id"]),
        "rotation": {v: rotations[v] for v in sorted(rotations)},
    }


def wheel_fixture(n):
    """Hub plus an n-cycle rim; every rim vertex has a spoke to the hub."""
    verts = ["h"] + [f"r{k}" for k in range(n)]
    edges = []
    for k in range(n):
        edges.append({"id": f"c{k}", "tail": f"r{k}", "head": f"r{(k + 1) % n}", "resistance": "1"})
    for k in range(n):
        edges.append({"id": f"s{k}", "tail": "h", "head": f"r{k}", "resistance": "1"})
    edges.sort(key=lambda e: e["id"])
    rotation = {"h": [f"s{k}:t" for k in range(n)]}
    for k in range(n):
        rotation[f"r{k}"] = [f"c{k}:t", f"s{k}:h", f"c{(k - 1) % n}:h"]
    return {
        "name": f"wheel{n}",
        "vertices": sorted(verts),
        "edges": edges,
        "rotation": {v: rotation[v] for v in sorted(rotation)},
    }


def triangle_fixture():
    return {
        "name": "triangle",
        "vertices": ["1", "2", "3"],
        "edges": [
            {"id": "e1", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "e2", "tail": "2", "head": "3", "resistance": "1"},
            {"id": "e3", "tail": "3", "head": "1", "resistance": "1"},
        ],
        "rotation": {
            "1": ["e1:t", "e3:h"],
            "2": ["e2:t", "e1:h"],
            "3": ["e3:t", "e2:h"],
        },
    }


def path3_fixture():
    return {
        "name": "path3",
        "vertices": ["1", "2", "3"],
        "edges": [
            {"id": "e1", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "e2", "tail": "2", "head": "3", "resistance": "1"},
        ],
        "rotation": {
            "1": ["e1:t"],
            "2": ["e1:h", "e2:t"],
            "3": ["e2:h"],
        },
    }


def parallel3_fixture():
    return {
        "name": "parallel3",
        "vertices": ["1", "2"],
        "edges": [
            {"id": "p1", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "p2", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "p3", "tail": "1", "head": "2", "resistance": "1"},
        ],
        "rotation": {
            "1": ["p1:t", "p2:t", "p3:t"],
            "2": ["p3:h", "p2:h", "p1:h"],
        },
    }


def example_s3_fixture():
    """Four-vertex network with a doubled edge: R4/R5 parallel between 3 and 4,
    R5 drawn outermost."""
    return {
        "name": "example_s3",
        "vertices": ["1", "2", "3", "4"],
        "edges": [
            {"id": "R1", "tail": "1", "head": "4", "resistance": "1"},
            {"id": "R2", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "R3", "tail": "2", "head": "3", "resistance": "1"},
            {"id": "R4", "tail": "3", "head": "4", "resistance": "1"},
            {"id": "R5", "tail": "3", "head": "4", "resistance": "1"},
        ],
        "rotation": {
            "1": ["R1:t", "R2:t"],
            "2": ["R2:h", "R3:t"],
            "3": ["R5:t", "R4:t", "R3:h"],
            "4": ["R1:h", "R4:h", "R5:h"],
        },
    }


def barbell_fixture():
    """Two triangles joined by a single bridge edge."""
    return {
        "name": "barbell",
        "vertices": ["1", "2", "3", "4", "5", "6"],
        "edges": [
            {"id": "a1", "tail": "1", "head": "2", "resistance": "1"},
            {"id": "a2", "tail": "2", "head": "3", "resistance": "1"},
            {"id": "a3", "tail": "3", "head": "1", "resistance": "1"},
            {"id": "b", "tail": "3", "head": "4", "resistance": "1"},
            {"id": "c1", "tail": "4", "head": "5", "resistance": "1"},
            {"id": "c2", "tail": "5", "head": "6", "resistance": "1"},
            {"id": "c3", "tail": "6", "head": "4", "resistance": "1"},
        ],
        "rotation": {
            "1": ["a1:t", "a3:h"],
            "2": ["a2:t", "a1:h"],
            "3": ["b:t", "a3:t", "a2:h"],
            "4": ["c1:t", "b:h", "c3:h"],
            "5": ["c2:t", "c1:h"],
            "6": ["c3:t", "c2:h"],
        },
    }


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    polyhedra = [
        ("cube", cube_points(), sympy.Rational(7, 12), 8, 12, [4] * 6),
        ("octahedron", octahedron_points(), sympy.Rational(5, 12), 6, 12, [3] * 8),
        ("dodecahedron", dodecahedron_points(), sympy.Rational(19, 30), 20, 30, [5] * 12),
        ("icosahedron", icosahedron_points(), sympy.Rational(11, 30), 12, 30, [3] * 20),
        ("rhombic_dodecahedron", rhombic_dodecahedron_points(), sympy.Rational(13, 24), 14, 24, [4] * 12),
        ("cuboctahedron", cuboctahedron_points(), sympy.Rational(11, 24), 12, 24, [3] * 8 + [4] * 6),
    ]
    for name, pts, r, nv, ne, face_lens in polyhedra:
        fx = polyhedron_fixture(name, pts)
        assert len(fx["vertices"]) == nv and len(fx["edges"]) == ne
        _, _, weight = self_check(fx, expect_r=r, expect_faces=face_lens)
        print(f"{name}: r = {r} on all edges, tree weight sum = {weight}")
        write(fx)

    fx = triangle_fixture()
    self_check(fx, expect_r=sympy.Rational(2, 3), expect_tree_weight=3, expect_faces=[3, 3])
    write(fx)

    fx = path3_fixture()
    self_check(fx, expect_r=1, expect_tree_weight=1, expect_faces=[4])
    write(fx)

    fx = parallel3_fixture()
    self_check(fx, expect_r=sympy.Rational(1, 3), expect_tree_weight=3, expect_faces=[2, 2, 2])
    write(fx)

    fx = example_s3_fixture()
    orbits, rs, weight = self_check(
        fx,
        expect_r=lambda eid: {"R4": sympy.Rational(3, 7), "R5": sympy.Rational(3, 7)}.get(eid),
        expect_tree_weight=7,
        expect_faces=[2, 4, 4],
    )
    edge_sets = sorted(sorted({d.rsplit(":", 1)[0] for d in o}) for o in orbits)
    assert edge_sets == [
        ["R1", "R2", "R3", "R4"],
        ["R1", "R2", "R3", "R5"],
        ["R4", "R5"],
    ], f"example_s3 faces: {edge_sets}"
    print(f"example_s3: r = {rs}")
    write(fx)

    fx = barbell_fixture()
    self_check(
        fx,
        expect_r=lambda eid: 1 if eid == "b" else sympy.Rational(2, 3),
        expect_tree_weight=9,
        expect_faces=[3, 3, 8],
    )
    write(fx)

    for n in range(4, 9):
        fx = wheel_fixture(n)
        self_check(fx, expect_faces=[3] * n + [n])
        write(fx)

    print("all fixtures written and checked")


if __name__ == "__main__":
    main()
