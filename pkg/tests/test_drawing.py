from __future__ import annotations

import pytest

from crossing_ledger import (
    DrawingSpec,
    InvalidRotation,
    InvariantError,
    NonSpherical,
    build_map,
    faces_of,
    restrict,
)
from crossing_ledger.generator import generate_optimal, theta_frame


def test_triangle_two_faces(triangle_spec):
    pmap = build_map(triangle_spec)
    assert sorted(f.length for f in pmap.faces) == [3, 3]
    assert pmap.segment_count() == 3


def test_crossing_diagonals_euler(square_diagonals_spec):
    pmap = build_map(square_diagonals_spec)
    assert len(pmap.vertices) == 4
    assert len(pmap.crossing_ids) == 1
    assert pmap.segment_count() == 8
    # V - E + F = 2 forces F = 2 - 5 + 8
    assert len(pmap.faces) == 5


def test_generated_segment_count():
    spec = generate_optimal(6)
    pmap = build_map(spec)
    # each crossing splits two edges once more
    assert pmap.segment_count() == len(spec.edges) + 2 * len(spec.crossings)


def test_face_walk_lengths_sum_to_dart_count(square_diagonals_spec):
    pmap = build_map(square_diagonals_spec)
    assert sum(f.length for f in pmap.faces) == 2 * pmap.segment_count()


def test_restrict_to_all_edges_is_identity(square_diagonals_spec):
    pmap = build_map(square_diagonals_spec)
    assert restrict(pmap, pmap.edge_ids) == pmap


def test_restrict_dissolves_crossings(square_diagonals_spec):
    pmap = build_map(square_diagonals_spec)
    sub = restrict(pmap, ["c1", "c2", "c3", "c4", "d1"])
    assert sub.crossing_ids == ()
    assert sub.chain("d1") == ()
    assert len(sub.faces) == 3  # 4 nodes, 5 edges: F = 2 - 4 + 5


def test_restrict_is_idempotent(square_diagonals_spec):
    pmap = build_map(square_diagonals_spec)
    keep = ["c1", "c2", "c3", "c4", "d2"]
    once = restrict(pmap, keep)
    assert restrict(once, keep) == once


def test_restrict_generated_skeleton_is_triangulated():
    pmap = build_map(generate_optimal(6))
    keep = [e for e in pmap.edge_ids if e.startswith("F")]
    keep += ["G0.0", "G0.2", "G0.4", "G1.0", "G1.2", "G1.4"]
    sub = restrict(pmap, keep)
    assert all(f.length == 3 for f in sub.faces)
    assert len(sub.faces) == 8


def test_restrict_rejects_unknown_edges(triangle_spec):
    pmap = build_map(triangle_spec)
    with pytest.raises(KeyError):
        restrict(pmap, ["nope"])


def test_faces_of_cycle():
    spec = DrawingSpec.build(
        vertices=[f"v{i}" for i in range(6)],
        edges=[(f"e{i}", f"v{i}", f"v{(i + 1) % 6}") for i in range(6)],
        rotations={
            f"v{i}": [(f"e{i}", "+"), (f"e{(i - 1) % 6}", "-")] for i in range(6)
        },
    )
    walks = faces_of(build_map(spec))
    assert sorted(w.length for w in walks) == [6, 6]


def test_theta_frame_faces_are_hexagons():
    pmap = build_map(theta_frame(10))
    assert len(pmap.faces) == 4
    assert all(f.length == 6 for f in pmap.faces)


def test_non_simple_face_repeats_vertex():
    # a triangle with a pendant edge hanging into one face: the pendant's
    # endpoints appear twice on that face's walk
    spec = DrawingSpec.build(
        vertices=["v1", "v2", "v3", "v4"],
        edges=[
            ("a", "v1", "v2"),
            ("b", "v2", "v3"),
            ("c", "v3", "v1"),
            ("p", "v2", "v4"),
        ],
        rotations={
            "v1": [("a", "+"), ("c", "-")],
            "v2": [("b", "+"), ("p", "+"), ("a", "-")],
            "v3": [("c", "+"), ("b", "-")],
            "v4": [("p", "-")],
        },
    )
    pmap = build_map(spec)
    big = max(pmap.faces, key=lambda f: f.length)
    assert big.length == 5
    assert big.nodes.count("v2") == 2
    assert big.edges.count("p") == 2  # the pendant edge is a bridge


def test_crossing_rotation_must_alternate():
    with pytest.raises(InvalidRotation):
        build_map(
            DrawingSpec.build(
                vertices=["v1", "v2", "v3", "v4"],
                edges=[("e", "v1", "v2"), ("f", "v3", "v4")],
                chains={"e": ["x"], "f": ["x"]},
                crossings={"x": ["e", "f"]},
                rotations={
                    "v1": [("e", "+")],
                    "v2": [("e", "-")],
                    "v3": [("f", "+")],
                    "v4": [("f", "-")],
                    "x": [("e", "+"), ("e", "-"), ("f", "+"), ("f", "-")],
                },
            )
        )


def test_dangling_crossing_rejected():
    with pytest.raises(InvariantError):
        build_map(
            DrawingSpec.build(
                vertices=["v1", "v2", "v3", "v4"],
                edges=[("e", "v1", "v2"), ("f", "v3", "v4")],
                chains={"e": ["x"]},  # f's chain omits x
                crossings={"x": ["e", "f"]},
                rotations={
                    "v1": [("e", "+")],
                    "v2": [("e", "-")],
                    "v3": [("f", "+")],
                    "v4": [("f", "-")],
                    "x": [("e", "+"), ("f", "+"), ("e", "-"), ("f", "-")],
                },
            )
        )


def test_torus_rotation_rejected():
    # K5 minus enough structure... simplest non-spherical witness: one vertex,
    # two self-loops interleaved in the rotation (a torus embedding)
    with pytest.raises(NonSpherical):
        build_map(
            DrawingSpec.build(
                vertices=["v"],
                edges=[("a", "v", "v"), ("b", "v", "v")],
                rotations={"v": [("a", "+"), ("b", "+"), ("a", "-"), ("b", "-")]},
            )
        )


def test_duplicate_edge_id_rejected():
    with pytest.raises(InvariantError):
        DrawingSpec.build(
            vertices=["v1", "v2"],
            edges=[("e", "v1", "v2"), ("e", "v2", "v1")],
            rotations={},
        )


def test_disconnected_input_accepted(triangle_spec):
    doc = triangle_spec.to_doc()
    doc["vertices"].append("lonely")
    spec = DrawingSpec.build(**{k: doc[k] for k in ("vertices", "edges", "chains", "crossings", "rotations")})
    pmap = build_map(spec)
    assert pmap.component_of("lonely") != pmap.component_of("v1")
