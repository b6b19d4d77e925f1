"""Branch coverage for the triangle association rules on synthetic profiles.

The pairing logic is a pure function of face profiles and stick pieces, so
the corner cases (2+1 placements, nonconformant inputs, claim conflicts) are
exercised directly on hand-built inputs rather than full drawings.
"""

from __future__ import annotations

from crossing_ledger.audit import associate
from crossing_ledger.segments import CrossedRef, FaceProfile, SegmentPiece


def _triangle(face, nodes, neighbors, tau, stick_ids):
    return FaceProfile(
        face=face,
        size=3,
        walk_nodes=tuple(nodes),
        walk_edges=(f"{face}_a", f"{face}_b", f"{face}_c"),
        neighbors=tuple(neighbors),
        type_tuple=tuple(tau),
        sticks=tuple(stick_ids),
        middles=(),
        passing_edges=(),
        bridges=(),
        non_bridges=(f"{face}_a", f"{face}_b", f"{face}_c"),
        uncrossed_non_bridges=(),
        stick_stick_pairs=(),
        stick_middle_pairs=(),
        opposite_flags={},
    )


def _stick(piece_id, occurrence, crossed_position, host):
    return SegmentPiece(
        piece_id=piece_id,
        edge=piece_id.split("#")[0],
        index=0,
        kind="stick",
        host_face=host,
        emanates_from="v",
        occurrence=occurrence,
        crossed=(CrossedRef(crossing="x", edge="e", position=crossed_position),),
        classification="short",
        orientation=None,
        intra_crossings=(),
        intra_pieces=(),
    )


def test_two_one_zero_targets_side_opposite_the_lone_stick():
    # tau = (2, 1, 0): two sticks at occurrence 0, one at occurrence 1, whose
    # stick exits across dart (1 + 2) % 3 = 0, the side joining corners 2 and 0
    pieces = [
        _stick("p#0", 0, 2, "T"),
        _stick("q#0", 0, 2, "T"),
        _stick("r#0", 1, 0, "T"),
    ]
    profiles = [
        _triangle("T", ("a", "b", "c"), ("N0", "N1", "N2"), (2, 1, 0), ("p#0", "q#0", "r#0")),
        _triangle("N0", ("c", "a", "x"), ("T", "Z1", "Z2"), (0, 0, 0), ()),
        _triangle("N1", ("a", "b", "y"), ("T", "Z3", "Z4"), (0, 0, 0), ()),
        _triangle("N2", ("b", "c", "z"), ("T", "Z5", "Z6"), (0, 0, 0), ()),
    ]
    result = associate(profiles, pieces)
    assert result.ok
    assert result.mapping == {"T": "N0"}


def test_two_one_zero_nonconformant_lone_stick_is_diagnosed():
    pieces = [
        _stick("p#0", 0, 2, "T"),
        _stick("q#0", 0, 2, "T"),
        _stick("r#0", 1, 1, "T"),  # exits across a side touching its own corner
    ]
    profiles = [
        _triangle("T", ("a", "b", "c"), ("N0", "N1", "N2"), (2, 1, 0), ("p#0", "q#0", "r#0")),
        _triangle("N0", ("c", "a", "x"), ("T", "Z1", "Z2"), (0, 0, 0), ()),
        _triangle("N1", ("a", "b", "y"), ("T", "Z3", "Z4"), (0, 0, 0), ()),
        _triangle("N2", ("b", "c", "z"), ("T", "Z5", "Z6"), (0, 0, 0), ()),
    ]
    result = associate(profiles, pieces)
    assert not result.ok
    assert result.diagnoses[0].kind == "nonconformant"


def test_three_zero_zero_with_split_exits_is_diagnosed():
    pieces = [
        _stick("p#0", 0, 2, "T"),
        _stick("q#0", 0, 2, "T"),
        _stick("r#0", 0, 1, "T"),  # does not share the thrice-crossed side
    ]
    profiles = [
        _triangle("T", ("a", "b", "c"), ("N0", "N1", "N2"), (3, 0, 0), ("p#0", "q#0", "r#0")),
        _triangle("N0", ("c", "a", "x"), ("T", "Z1", "Z2"), (0, 0, 0), ()),
        _triangle("N1", ("a", "b", "y"), ("T", "Z3", "Z4"), (0, 0, 0), ()),
        _triangle("N2", ("b", "c", "z"), ("T", "Z5", "Z6"), (0, 0, 0), ()),
    ]
    result = associate(profiles, pieces)
    assert not result.ok
    assert result.diagnoses[0].kind == "nonconformant"


def test_overfull_target_is_diagnosed():
    pieces = [_stick(f"p{i}#0", 0, 2, "T") for i in range(3)]
    target_sticks = [_stick(f"t{i}#0", i, (i + 2) % 3, "N2") for i in range(3)]
    profiles = [
        _triangle("T", ("a", "b", "c"), ("N0", "N1", "N2"), (3, 0, 0),
                  tuple(p.piece_id for p in pieces)),
        _triangle("N0", ("c", "a", "x"), ("T", "Z1", "Z2"), (0, 0, 0), ()),
        _triangle("N1", ("a", "b", "y"), ("T", "Z3", "Z4"), (0, 0, 0), ()),
        _triangle("N2", ("b", "c", "z"), ("T", "Z5", "Z6"), (1, 1, 1),
                  tuple(p.piece_id for p in target_sticks)),
    ]
    result = associate(profiles, pieces + target_sticks)
    assert not result.ok
    kinds = {d.kind for d in result.diagnoses}
    assert "target-overfull" in kinds or "optimality-violation" in kinds


def test_triple_claim_conflict_is_diagnosed():
    # three 3-stick triangles all claiming the same partner cannot be resolved
    pieces = []
    profiles = [
        _triangle("M", ("a", "b", "c"), ("S0", "S1", "S2"), (0, 0, 0), ()),
    ]
    for i in range(3):
        ids = tuple(f"s{i}_{j}#0" for j in range(3))
        # sticks at occurrence 1 exit across dart (1 + 2) % 3 = 0, which faces M
        pieces += [_stick(pid, 1, 0, f"S{i}") for pid in ids]
        profiles.append(
            _triangle(f"S{i}", ("a", "b", "c"), ("M", f"A{i}", f"B{i}"), (0, 3, 0), ids)
        )
        profiles.append(_triangle(f"A{i}", ("p", "q", "r"), (f"S{i}", "M", "M"), (0, 0, 0), ()))
        profiles.append(_triangle(f"B{i}", ("p", "q", "r"), (f"S{i}", "M", "M"), (0, 0, 0), ()))
    result = associate(profiles, pieces)
    assert not result.ok
    assert any(d.kind == "conflict" for d in result.diagnoses)


def test_non_triangular_profile_disables_association():
    prof = FaceProfile(
        face="Q",
        size=4,
        walk_nodes=("a", "b", "c", "d"),
        walk_edges=("e1", "e2", "e3", "e4"),
        neighbors=("X", "X", "X", "X"),
        type_tuple=(0, 0, 0, 0),
        sticks=(),
        middles=(),
        passing_edges=(),
        bridges=(),
        non_bridges=("e1", "e2", "e3", "e4"),
        uncrossed_non_bridges=(),
        stick_stick_pairs=(),
        stick_middle_pairs=(),
        opposite_flags={},
    )
    result = associate([prof], [])
    assert not result.applicable
