from __future__ import annotations

import pytest

from string_hochschild import (
    BoundQuiver,
    FieldSpec,
    hh0_dim,
    hh1_dim,
    hh_dim_formula,
    hh_dim_oracle,
    hhn_dim,
    hhn_dim_gentle,
    validate_gentle,
)
from corpus import corpus_members, gentle_members
from fixtures import a3_one_relation, one_loop, relation_fork, two_cycle

Q = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)
ALL_FIELDS = (Q, F2, F3)


def test_loop_dimensions_and_breakdowns() -> None:
    loop = one_loop()
    assert [hh_dim_formula(loop, n, Q).dim for n in range(9)] == [2, 1, 1, 1, 1, 1, 1, 1, 1]
    assert [hh_dim_formula(loop, n, F2).dim for n in range(9)] == [2] * 9
    assert [hh_dim_formula(loop, n, F3).dim for n in range(9)] == [2, 1, 1, 1, 1, 1, 1, 1, 1]

    center = hh0_dim(loop, Q)
    assert center.dim == 2
    assert center.breakdown == {"blocked_cycles": 1, "constants": 1}

    outer = hh1_dim(loop, Q)
    assert outer.dim == 1
    assert outer.breakdown == {
        "blocked_detached": 0,
        "arrow_count": 1,
        "vertex_count": 1,
        "constants": 1,
    }
    outer2 = hh1_dim(loop, F2)
    assert outer2.dim == 2
    assert outer2.breakdown["gentle_orbits_1"] == 1
    assert outer2.char_case == "char2"


def test_two_cycle_dimensions_and_breakdowns() -> None:
    two = two_cycle()
    for field in ALL_FIELDS:
        assert [hh_dim_formula(two, n, field).dim for n in range(9)] == [1] * 9

    even = hhn_dim(two, 4, Q)
    assert even.char_case == "even"
    assert even.breakdown["gentle_orbits_here"] == 1
    odd = hhn_dim(two, 5, Q)
    assert odd.char_case == "odd"
    assert odd.breakdown["gentle_orbits_below"] == 1
    both = hhn_dim(two, 3, F2)
    assert both.char_case == "char2"
    assert both.breakdown["gentle_orbits_here"] == 0  # no cyclic chain in odd degree
    assert both.breakdown["gentle_orbits_below"] == 1


def test_a3_vanishes_above_degree_zero() -> None:
    a3 = a3_one_relation()
    for field in ALL_FIELDS:
        assert [hh_dim_formula(a3, n, field).dim for n in range(6)] == [1, 0, 0, 0, 0, 0]


def test_fork_has_three_outer_derivations() -> None:
    fork = relation_fork()
    for field in ALL_FIELDS:
        assert [hh_dim_formula(fork, n, field).dim for n in range(7)] == [1, 3, 0, 0, 0, 0, 0]
        assert [hh_dim_oracle(fork, n, field) for n in range(7)] == [1, 3, 0, 0, 0, 0, 0]


def test_empty_pair_feeds_degree_two() -> None:
    half = BoundQuiver(["u", "v"], [("a", "u", "v"), ("b", "v", "u")], [("a", "b")])
    for field in ALL_FIELDS:
        dims = [hh_dim_formula(half, n, field).dim for n in range(6)]
        assert dims == [2, 1, 1, 0, 0, 0]
        assert dims == [hh_dim_oracle(half, n, field) for n in range(6)]
    report = hhn_dim(half, 2, Q)
    assert report.breakdown["empty_pairs"] == 1


def test_gentle_variant_agrees_and_guards() -> None:
    two = two_cycle()
    for n in range(2, 7):
        for field in ALL_FIELDS:
            assert hhn_dim_gentle(two, n, field).dim == hhn_dim(two, n, field).dim
    for bq in gentle_members(5):
        assert validate_gentle(bq).ok
        for n in range(2, 6):
            assert hhn_dim_gentle(bq, n, Q).dim == hhn_dim(bq, n, Q).dim
    with pytest.raises(ValueError, match="non-gentle"):
        hhn_dim_gentle(relation_fork(), 2, Q)


def test_degree_guards() -> None:
    loop = one_loop()
    with pytest.raises(ValueError):
        hhn_dim(loop, 1, Q)
    with pytest.raises(ValueError):
        hhn_dim(loop, 0, Q)
    with pytest.raises(ValueError):
        hh_dim_formula(loop, -1, Q)


def test_formula_matches_oracle_on_a_corpus_slice() -> None:
    # a quick slice here; the acceptance suite runs the full sweep
    for bq in corpus_members(10):
        for n in range(0, 4):
            for field in ALL_FIELDS:
                assert hh_dim_formula(bq, n, field).dim == hh_dim_oracle(bq, n, field)
