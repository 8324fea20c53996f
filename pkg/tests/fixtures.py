"""Small hand-checked presentations used across the test suite."""

from __future__ import annotations

from string_hochschild import BoundQuiver


def one_loop() -> BoundQuiver:
    """One vertex, one loop, loop squared is a relation (dual numbers)."""
    return BoundQuiver(["v"], [("a", "v", "v")], [("a", "a")])


def two_cycle() -> BoundQuiver:
    """Two vertices, a round trip, both length-2 turns are relations."""
    return BoundQuiver(
        ["1", "2"],
        [("a", "1", "2"), ("b", "2", "1")],
        [("a", "b"), ("b", "a")],
    )


def a3_one_relation() -> BoundQuiver:
    """Linear quiver on three vertices with its only composition killed."""
    return BoundQuiver(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3")],
        [("a", "b")],
    )


def relation_fork() -> BoundQuiver:
    """String but not gentle: one arrow starts two relations."""
    return BoundQuiver(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")],
        [("a", "b"), ("a", "c")],
    )
