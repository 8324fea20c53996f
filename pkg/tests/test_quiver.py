from __future__ import annotations

import pytest

from string_hochschild import (
    BoundQuiver,
    check_finite_dimensional,
    validate_gentle,
    validate_string,
)
from fixtures import a3_one_relation, one_loop, relation_fork, two_cycle


def test_normalization_keeps_input_order() -> None:
    bq = two_cycle()
    assert bq.vertex_labels == ("1", "2")
    assert [(a.id, a.label, a.source, a.target) for a in bq.arrows] == [
        (0, "a", 0, 1),
        (1, "b", 1, 0),
    ]
    assert bq.relations == frozenset({(0, 1), (1, 0)})


def test_constructor_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        BoundQuiver([], [], [])
    with pytest.raises(ValueError, match="duplicate vertex"):
        BoundQuiver(["v", "v"], [], [])
    with pytest.raises(ValueError, match="duplicate arrow"):
        BoundQuiver(["v"], [("a", "v", "v"), ("a", "v", "v")], [])
    with pytest.raises(ValueError, match="unknown source"):
        BoundQuiver(["v"], [("a", "w", "v")], [])
    with pytest.raises(ValueError, match="unknown arrow"):
        BoundQuiver(["v"], [("a", "v", "v")], [("a", "z")])
    # relation whose two arrows do not compose
    with pytest.raises(ValueError, match="not composable"):
        BoundQuiver(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "1", "3")],
            [("a", "b")],
        )
    with pytest.raises(ValueError, match="collides"):
        BoundQuiver(["x"], [("x", "x", "x")], [])


def test_successor_tables() -> None:
    bq = a3_one_relation()
    # ab is the only composition and it is a relation
    assert bq.rel_successors[0] == (1,)
    assert bq.live_successors[0] == ()
    assert bq.rel_predecessors[1] == (0,)
    assert bq.live_predecessors[1] == ()
    assert bq.is_relation(0, 1)
    assert not bq.is_relation(1, 0)


def test_path_assembly_and_labels() -> None:
    bq = two_cycle()
    e1 = bq.trivial(0)
    a = bq.arrow_path(0)
    b = bq.arrow_path(1)
    assert e1.is_trivial and len(e1) == 0
    assert bq.path_label(e1) == "e_1"
    assert bq.path_label(bq.make_path([0, 1])) == "ab"
    assert bq.compose(a, b).arrows == (0, 1)
    assert bq.compose(a, a) is None  # endpoints do not meet
    assert bq.compose(e1, a) == a and bq.compose(a, bq.trivial(1)) == a
    with pytest.raises(ValueError):
        bq.make_path([0, 0])
    with pytest.raises(ValueError):
        bq.make_path([])


def test_quotient_multiplication() -> None:
    bq = two_cycle()
    a = bq.arrow_path(0)
    b = bq.arrow_path(1)
    # both round trips die on the relations
    assert bq.mul_basis(a, b) is None
    assert bq.mul_basis(b, a) is None
    assert bq.mul_basis(bq.trivial(0), a) == a
    assert bq.contains_relation((0, 1))
    assert not bq.contains_relation((0,))


def test_string_conditions_hold_on_fixtures() -> None:
    for bq in (one_loop(), two_cycle(), a3_one_relation(), relation_fork()):
        assert validate_string(bq).ok


def test_string_condition_violations_are_reported() -> None:
    # three arrows out of one vertex
    fan = BoundQuiver(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "0", "2"), ("c", "0", "3")],
        [],
    )
    report = validate_string(fan)
    assert not report.ok
    assert any("3 outgoing" in p for p in report.problems)

    # two surviving continuations of the same arrow
    forked = BoundQuiver(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
        [],
    )
    report = validate_string(forked)
    assert not report.ok
    assert any("surviving continuations" in p for p in report.problems)
    # killing one branch repairs it
    fixed = BoundQuiver(
        ["0", "1", "2", "3"],
        [("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
        [("a", "c")],
    )
    assert validate_string(fixed).ok


def test_disconnected_quiver_is_rejected() -> None:
    bq = BoundQuiver(["u", "v"], [("a", "u", "u")], [("a", "a")])
    report = validate_string(bq)
    assert not report.ok
    assert any("connected" in p for p in report.problems)


def test_gentle_needs_unique_relation_continuations() -> None:
    assert validate_gentle(two_cycle()).ok
    assert validate_gentle(a3_one_relation()).ok
    report = validate_gentle(relation_fork())
    assert not report.ok
    assert any("starts 2 relations" in p for p in report.problems)
    # string validity is part of the gentle check
    assert validate_string(relation_fork()).ok


def test_finite_dimensionality_witness() -> None:
    free_loop = BoundQuiver(["v"], [("a", "v", "v")], [])
    witness = check_finite_dimensional(free_loop)
    assert witness is not None and witness.arrows == (0,)

    assert check_finite_dimensional(one_loop()) is None
    assert check_finite_dimensional(two_cycle()) is None

    # free round trip: the two-arrow cycle survives and is the witness
    free_cycle = BoundQuiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [])
    witness = check_finite_dimensional(free_cycle)
    assert witness is not None
    cyc = witness.arrows
    assert sorted(cyc) == [0, 1]
    # every consecutive pair along the witness really survives
    for x, y in zip(cyc, cyc[1:] + cyc[:1]):
        assert not free_cycle.is_relation(x, y)

    # killing one of the two turns already makes the quotient finite:
    # b*a survives but (b*a)^2 contains the killed word a*b
    half = BoundQuiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [("a", "b")])
    assert check_finite_dimensional(half) is None
