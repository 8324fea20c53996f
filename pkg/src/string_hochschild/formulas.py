"""Closed-form Hochschild cohomology dimensions by pure counting.

Every function here counts combinatorial data of the presentation (parallel
pairs by anchor tag and block decoration, the cyclic taxonomy of
trivial-path pairs, rotation orbits) and never touches linear algebra.  The
oracle in ``cochain`` computes the same dimensions from ranks of the actual
differentials; the package's headline claim is that the two always agree.

The general-degree formula (degree >= 2) reads

    dim H^n = #(doubly blocked, unanchored pairs of degree n)
            + #(empty trivial-path pairs of degree n)
            - #(busy incomplete trivial-path pairs of degree n-1)
            + #(one-arrow-path pairs anchored only at the start,
                or anchored only at the end and left-blocked)
            + rotation-orbit terms

where the orbit terms count gentle orbits in degree n (n even, odd
characteristic), in degree n-1 (n odd, odd characteristic), or both
(characteristic 2).  Degrees 0 and 1 have their own simpler counts.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

from .combinatorics import (
    PairClass,
    ParallelPair,
    classify_cyclic,
    classify_pair,
    empty_pairs,
    enumerate_ap,
    enumerate_basis_paths,
    gentle_pairs,
    left_extensions,
    orbit_count,
    parallel_pairs,
    right_extensions,
    trivial_path_pairs,
)
from .linalg import FieldSpec
from .quiver import BoundQuiver


@dataclass
class DimensionReport:
    """A dimension together with the named counts that produced it."""

    degree: int
    dim: int
    breakdown: dict[str, int] = dc_field(default_factory=dict)
    char_case: str = ""


@functools.lru_cache(maxsize=4096)
def _classified(bq: BoundQuiver, n: int) -> tuple[tuple[ParallelPair, PairClass], ...]:
    basis = enumerate_basis_paths(bq)
    pairs = parallel_pairs(enumerate_ap(bq, n), basis)
    return tuple((p, classify_pair(bq, p)) for p in pairs)


# ----------------------------------------------------------------------
# the named counts


def count_blocked_detached(bq: BoundQuiver, n: int) -> int:
    """Unanchored pairs whose path can be extended on neither side."""
    return sum(
        1
        for p, c in _classified(bq, n)
        if len(p.path) >= 1
        and c.tag == (0, 0)
        and c.left_blocked
        and c.right_blocked
    )


def count_tagged(
    bq: BoundQuiver,
    n: int,
    tag: tuple[int, int],
    *,
    need_left_blocked: bool = False,
    need_right_blocked: bool = False,
    path_len_min: int = 0,
    path_len_max: int | None = None,
) -> int:
    """Generic tag/decoration counter over the degree-n pairs."""
    total = 0
    for p, c in _classified(bq, n):
        if c.tag != tag:
            continue
        if need_left_blocked and not c.left_blocked:
            continue
        if need_right_blocked and not c.right_blocked:
            continue
        if len(p.path) < path_len_min:
            continue
        if path_len_max is not None and len(p.path) > path_len_max:
            continue
        total += 1
    return total


def count_arrow_anchored(bq: BoundQuiver, n: int) -> int:
    """One-arrow-path pairs anchored only at the start, plus those anchored
    only at the end whose path is left-blocked."""
    start_only = count_tagged(bq, n, (1, 0), path_len_min=1, path_len_max=1)
    end_only = count_tagged(
        bq, n, (0, 1), need_left_blocked=True, path_len_min=1, path_len_max=1
    )
    return start_only + end_only


def count_empty(bq: BoundQuiver, n: int) -> int:
    return len(empty_pairs(bq, n))


def count_complete(bq: BoundQuiver, n: int) -> int:
    return sum(
        1 for p in trivial_path_pairs(bq, n) if classify_cyclic(bq, p).complete
    )


def count_busy_incomplete(bq: BoundQuiver, n: int) -> int:
    """Incomplete trivial-path pairs with some relation through the base."""
    total = 0
    for p in trivial_path_pairs(bq, n):
        data = classify_cyclic(bq, p)
        if not data.complete and not data.empty:
            total += 1
    return total


def gentle_orbits(bq: BoundQuiver, n: int) -> int:
    """Number of rotation orbits of gentle trivial-path pairs in degree n.

    This equals the dimension of the rotation coinvariants of their span in
    every characteristic, because the orbits are free and permutation
    modules of free orbits have one coinvariant per orbit.
    """
    return orbit_count(bq, gentle_pairs(bq, n))


# ----------------------------------------------------------------------
# the dimension formulas


def _char_case(n: int, field: FieldSpec) -> str:
    if field.characteristic == 2:
        return "char2"
    return "even" if n % 2 == 0 else "odd"


def hh0_dim(bq: BoundQuiver, field: FieldSpec) -> DimensionReport:
    """Degree 0: one constant plus one dimension per doubly blocked cycle."""
    blocked = 0
    basis = enumerate_basis_paths(bq)
    for v in bq.vertices:
        for gamma in basis.by_endpoints.get((v, v), ()):
            if gamma.is_trivial:
                continue
            if not left_extensions(bq, gamma) and not right_extensions(bq, gamma):
                blocked += 1
    return DimensionReport(
        degree=0,
        dim=blocked + 1,
        breakdown={"blocked_cycles": blocked, "constants": 1},
        char_case=_char_case(0, field),
    )


def hh1_dim(bq: BoundQuiver, field: FieldSpec) -> DimensionReport:
    """Degree 1: blocked unanchored pairs plus Euler-characteristic part,
    plus the gentle loop orbits in characteristic 2."""
    blocked = count_blocked_detached(bq, 1)
    base = blocked + len(bq.arrows) - len(bq.vertices) + 1
    breakdown = {
        "blocked_detached": blocked,
        "arrow_count": len(bq.arrows),
        "vertex_count": len(bq.vertices),
        "constants": 1,
    }
    dim = base
    if field.characteristic == 2:
        g1 = gentle_orbits(bq, 1)
        breakdown["gentle_orbits_1"] = g1
        dim += g1
    return DimensionReport(
        degree=1, dim=dim, breakdown=breakdown, char_case=_char_case(1, field)
    )


def hhn_dim(bq: BoundQuiver, n: int, field: FieldSpec) -> DimensionReport:
    """General closed form in degree n >= 2 for any string presentation."""
    if n < 2:
        raise ValueError(f"this closed form starts at degree 2 (got {n})")
    blocked = count_blocked_detached(bq, n)
    empty_n = count_empty(bq, n)
    busy_below = count_busy_incomplete(bq, n - 1)
    anchored = count_arrow_anchored(bq, n)
    case = _char_case(n, field)
    breakdown = {
        "blocked_detached": blocked,
        "empty_pairs": empty_n,
        "busy_incomplete_below": busy_below,
        "arrow_anchored": anchored,
    }
    dim = blocked + empty_n - busy_below + anchored
    if case in ("even", "char2"):
        g_here = gentle_orbits(bq, n)
        breakdown["gentle_orbits_here"] = g_here
        dim += g_here
    if case in ("odd", "char2"):
        g_below = gentle_orbits(bq, n - 1)
        breakdown["gentle_orbits_below"] = g_below
        dim += g_below
    return DimensionReport(degree=n, dim=dim, breakdown=breakdown, char_case=case)


def hhn_dim_gentle(bq: BoundQuiver, n: int, field: FieldSpec) -> DimensionReport:
    """Specialized count for gentle presentations (degree n >= 2).

    On gentle input the busy-incomplete term of the general formula cancels
    against the arrow-anchored term, leaving only blocked pairs, empty
    pairs, and orbit terms.  Raises ValueError on non-gentle input.
    """
    from .quiver import validate_gentle

    if n < 2:
        raise ValueError(f"this closed form starts at degree 2 (got {n})")
    report = validate_gentle(bq)
    if not report.ok:
        raise ValueError(
            "gentle-only formula applied to a non-gentle presentation: "
            + "; ".join(report.problems)
        )
    blocked = count_blocked_detached(bq, n)
    empty_n = count_empty(bq, n)
    case = _char_case(n, field)
    breakdown = {"blocked_detached": blocked, "empty_pairs": empty_n}
    dim = blocked + empty_n
    if case in ("even", "char2"):
        g_here = gentle_orbits(bq, n)
        breakdown["gentle_orbits_here"] = g_here
        dim += g_here
    if case in ("odd", "char2"):
        g_below = gentle_orbits(bq, n - 1)
        breakdown["gentle_orbits_below"] = g_below
        dim += g_below
    return DimensionReport(degree=n, dim=dim, breakdown=breakdown, char_case=case)


def hh_dim_formula(bq: BoundQuiver, n: int, field: FieldSpec) -> DimensionReport:
    """Uniform entry point across all degrees."""
    if n < 0:
        raise ValueError(f"degree must be non-negative (got {n})")
    if n == 0:
        return hh0_dim(bq, field)
    if n == 1:
        return hh1_dim(bq, field)
    return hhn_dim(bq, n, field)
