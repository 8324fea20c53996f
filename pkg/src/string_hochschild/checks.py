"""Cross-validation suites tying the three computation routes together.

Each check pits independently computed quantities against each other: the
two differential routes, closed-form counts against ranks and kernels, the
structural kernel families against actual kernels, algebraic identities of
the products at chain level, and class-level consequences against the
oracle's coboundary test.  Everything returns a CheckResult so the same
suites back both the test suite and the command-line selftest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cochain import (
    Cochain,
    OracleComplex,
    apply_differential,
    assemble_from_blocks,
    block_components,
    cochain_add,
    cochain_add_term,
    cochain_eq,
    cochain_scale,
    cochain_sub,
    oracle,
    zero_cochain,
)
from .combinatorics import (
    classify_cyclic,
    classify_pair,
    gentle_pairs,
    norm_of,
    order_of,
    phi,
    rotate,
    trivial_path_pairs,
)
from .formulas import (
    count_arrow_anchored,
    count_blocked_detached,
    count_busy_incomplete,
    count_complete,
    count_empty,
    count_tagged,
    gentle_orbits,
    hh_dim_formula,
)
from .gerstenhaber import bracket, circ, cup, norm_cochain, omega_power
from .linalg import (
    FieldSpec,
    SparseMatrix,
    SubspaceBasis,
    column_space_basis,
    kernel_basis,
    rank,
    rank_naive,
)
from .quiver import BoundQuiver


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


# ----------------------------------------------------------------------
# sampling helpers


def random_cochain(
    orc: OracleComplex, n: int, rng: random.Random, max_terms: int = 3
) -> Cochain:
    basis = orc.basis(n)
    out = zero_cochain(n)
    if not basis:
        return out
    for _ in range(rng.randint(1, max_terms)):
        pair = basis[rng.randrange(len(basis))]
        c = orc.field.from_int(rng.choice([-3, -2, -1, 1, 2, 3]))
        cochain_add_term(out, pair, c, orc.field)
    return out


def random_cocycle(orc: OracleComplex, n: int, rng: random.Random) -> Cochain:
    rows = orc.cocycles(n).rows
    vec = [orc.field.zero] * orc.dim(n)
    for row in rows:
        c = orc.field.from_int(rng.randint(-2, 2))
        if not orc.field.is_zero(c):
            vec = [orc.field.add(x, orc.field.mul(c, y)) for x, y in zip(vec, row)]
    return orc.from_vector(n, vec)


# ----------------------------------------------------------------------
# complex-level checks


def check_complex_property(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Differential squared is zero, degree by degree."""
    orc = oracle(bq, field)
    for n in range(1, max_degree):
        prod = orc.differential(n + 1).matmul(orc.differential(n))
        if not prod.is_zero():
            return CheckResult(
                "complex_property", False, f"differential square nonzero out of degree {n - 1}"
            )
    return CheckResult("complex_property", True, f"degrees up to {max_degree}")


def check_block_consistency(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """The matrix assembled from the closed block formulas equals the one
    assembled by evaluating the defining formula, entry for entry."""
    orc = oracle(bq, field)
    for n in range(0, max_degree):
        direct = orc.differential(n + 1)
        blocked = assemble_from_blocks(bq, n, field)
        if direct.entries != blocked.entries:
            return CheckResult(
                "block_consistency", False, f"block assembly differs out of degree {n}"
            )
    return CheckResult("block_consistency", True, f"degrees up to {max_degree}")


def check_rank_routes(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Fraction-free and naive elimination agree on every rank."""
    orc = oracle(bq, field)
    for n in range(1, max_degree + 1):
        m = orc.differential(n)
        if rank(m) != rank_naive(m):
            return CheckResult("rank_routes", False, f"rank routes differ in degree {n}")
    return CheckResult("rank_routes", True, f"degrees up to {max_degree}")


def check_dimension_agreement(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Closed-form dimensions equal the oracle's, in every degree."""
    orc = oracle(bq, field)
    for n in range(0, max_degree + 1):
        formula = hh_dim_formula(bq, n, field).dim
        computed = orc.hh_dim(n)
        if formula != computed:
            return CheckResult(
                "dimension_agreement",
                False,
                f"degree {n}: formula {formula} vs oracle {computed}",
            )
    return CheckResult("dimension_agreement", True, f"degrees up to {max_degree}")


# ----------------------------------------------------------------------
# kernel and image of the two blocks against the combinatorial counts


def _long_path_kernel_counts(bq: BoundQuiver, n: int) -> int:
    return (
        count_blocked_detached(bq, n)
        + count_tagged(bq, n, (0, 1), need_left_blocked=True, path_len_min=1)
        + count_tagged(bq, n, (1, 1), path_len_min=1)
        + count_tagged(bq, n, (1, 0), path_len_min=1)
    )


def _long_path_image_counts(bq: BoundQuiver, n: int) -> int:
    return (
        count_tagged(bq, n + 1, (0, 1), need_left_blocked=True, path_len_min=2)
        + count_tagged(bq, n + 1, (1, 0), path_len_min=2)
        + count_tagged(bq, n + 1, (1, 1), path_len_min=2)
    )


def check_long_path_block(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Kernel and image dimensions of the longer-path block match the
    anchored/blocked pair counts."""
    for n in range(1, max_degree + 1):
        _, block1 = block_components(bq, n, field)
        want_ker = _long_path_kernel_counts(bq, n)
        got_ker = block1.cols - rank(block1)
        if want_ker != got_ker:
            return CheckResult(
                "long_path_block",
                False,
                f"degree {n}: kernel count {want_ker} vs rank computation {got_ker}",
            )
        want_im = _long_path_image_counts(bq, n)
        got_im = rank(block1)
        if want_im != got_im:
            return CheckResult(
                "long_path_block",
                False,
                f"degree {n}: image count {want_im} vs rank {got_im}",
            )
    return CheckResult("long_path_block", True, f"degrees up to {max_degree}")


def check_trivial_path_block(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Kernel and image dimensions of the trivial-path block match the
    cyclic-taxonomy counts, per characteristic case."""
    for n in range(1, max_degree + 1):
        block0, _ = block_components(bq, n, field)
        orbit_term = gentle_orbits(bq, n) if (n % 2 == 0 or field.characteristic == 2) else 0
        want_ker = count_empty(bq, n) + orbit_term
        got_ker = block0.cols - rank(block0)
        if want_ker != got_ker:
            return CheckResult(
                "trivial_path_block",
                False,
                f"degree {n}: kernel count {want_ker} vs rank computation {got_ker}",
            )
        want_im = count_complete(bq, n) + count_busy_incomplete(bq, n) - orbit_term
        got_im = rank(block0)
        if want_im != got_im:
            return CheckResult(
                "trivial_path_block",
                False,
                f"degree {n}: image count {want_im} vs rank {got_im}",
            )
    return CheckResult("trivial_path_block", True, f"degrees up to {max_degree}")


def check_kernel_families(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """Every structurally predicted kernel element really is a cocycle:
    the four singleton families and the shifted doubles."""
    orc = oracle(bq, field)
    checked = 0
    for n in range(1, max_degree + 1):
        for pair in orc.basis(n):
            if pair.path.is_trivial:
                continue
            cls = classify_pair(bq, pair)
            singleton = (
                (cls.tag == (0, 0) and cls.left_blocked and cls.right_blocked)
                or (cls.tag == (1, 0) and cls.right_blocked)
                or (cls.tag == (0, 1) and cls.left_blocked)
                or cls.tag == (1, 1)
            )
            if singleton:
                delta = Cochain(n, {pair: field.one})
                if not apply_differential(bq, field, delta).is_zero():
                    return CheckResult(
                        "kernel_families", False, f"singleton family member not closed: {pair!r}"
                    )
                checked += 1
            elif cls.tag == (1, 0) and not cls.right_blocked:
                partner = phi(bq, pair)
                double = Cochain(
                    n,
                    {pair: field.one, partner: field.from_int((-1) ** n)},
                )
                if not apply_differential(bq, field, double).is_zero():
                    return CheckResult(
                        "kernel_families", False, f"shifted double not closed: {pair!r}"
                    )
                checked += 1
    return CheckResult("kernel_families", True, f"{checked} members checked")


def check_injective_on_busy(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """The trivial-path block restricted to busy incomplete pairs and
    non-gentle complete pairs is injective."""
    for n in range(1, max_degree + 1):
        block0, _ = block_components(bq, n, field)
        pairs = trivial_path_pairs(bq, n)
        cols = []
        for j, pair in enumerate(pairs):
            data = classify_cyclic(bq, pair)
            busy_incomplete = not data.complete and not data.empty
            busy_complete = data.complete and not data.gentle
            if busy_incomplete or busy_complete:
                cols.append(j)
        if not cols:
            continue
        restricted = block0.submatrix_columns(cols)
        if rank(restricted) != len(cols):
            return CheckResult(
                "injective_on_busy",
                False,
                f"degree {n}: rank {rank(restricted)} on {len(cols)} busy columns",
            )
    return CheckResult("injective_on_busy", True, f"degrees up to {max_degree}")


def check_norm_rotation_exactness(bq: BoundQuiver, field: FieldSpec, max_degree: int) -> CheckResult:
    """On the span of the gentle pairs in each degree, the rotation norm
    and (identity - rotation) are exact against each other both ways."""
    checked = 0
    for n in range(1, max_degree + 1):
        pairs = gentle_pairs(bq, n)
        if not pairs:
            continue
        index = {p: i for i, p in enumerate(pairs)}
        dim = len(pairs)
        one_minus_t = SparseMatrix(dim, dim, field)
        norm = SparseMatrix(dim, dim, field)
        for j, p in enumerate(pairs):
            one_minus_t.add_to(j, j, field.one)
            one_minus_t.add_to(index[rotate(bq, p)], j, field.from_int(-1))
            for q in norm_of(bq, p):
                norm.add_to(index[q], j, field.one)
        if kernel_basis(norm) != column_space_basis(one_minus_t):
            return CheckResult(
                "norm_rotation_exactness", False, f"degree {n}: norm kernel mismatch"
            )
        if kernel_basis(one_minus_t) != column_space_basis(norm):
            return CheckResult(
                "norm_rotation_exactness", False, f"degree {n}: rotation kernel mismatch"
            )
        checked += 1
    return CheckResult("norm_rotation_exactness", True, f"{checked} degrees with gentle pairs")


def check_coboundary_criterion(
    bq: BoundQuiver,
    field: FieldSpec,
    max_degree: int,
    rng: random.Random,
    samples_per_degree: int = 10,
) -> CheckResult:
    """Cocycles supported on length >= 2 paths with nothing on the doubly
    blocked unanchored pairs are coboundaries.  Samples random elements of
    that constrained kernel and asks the oracle."""
    orc = oracle(bq, field)
    verified = 0
    for n in range(2, max_degree + 1):
        basis = orc.basis(n)
        if not basis:
            continue
        forbidden = []
        for j, pair in enumerate(basis):
            if len(pair.path) < 2:
                forbidden.append(j)
                continue
            cls = classify_pair(bq, pair)
            if cls.tag == (0, 0) and cls.left_blocked and cls.right_blocked:
                forbidden.append(j)
        diff = orc.differential(n + 1)
        stacked = SparseMatrix(diff.rows + len(forbidden), diff.cols, field)
        for (r, c), v in diff.entries.items():
            stacked.add_to(r, c, v)
        for extra, j in enumerate(forbidden):
            stacked.add_to(diff.rows + extra, j, field.one)
        constrained = kernel_basis(stacked)
        if constrained.dim == 0:
            continue
        for _ in range(samples_per_degree):
            vec = [field.zero] * len(basis)
            for row in constrained.rows:
                c = field.from_int(rng.randint(-2, 2))
                if not field.is_zero(c):
                    vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, row)]
            f = orc.from_vector(n, vec)
            if not orc.is_zero_class(f):
                return CheckResult(
                    "coboundary_criterion", False, f"degree {n}: constrained cocycle not a coboundary"
                )
            verified += 1
    return CheckResult("coboundary_criterion", True, f"{verified} samples")


# ----------------------------------------------------------------------
# product identities


def check_cup_derivation(
    bq: BoundQuiver,
    field: FieldSpec,
    max_degree: int,
    rng: random.Random,
    samples: int = 20,
) -> CheckResult:
    """The differential is a derivation for the cup product, exactly."""
    orc = oracle(bq, field)
    done = 0
    for _ in range(samples):
        n = rng.randint(0, max_degree)
        m = rng.randint(0, max_degree)
        f = random_cochain(orc, n, rng)
        g = random_cochain(orc, m, rng)
        left = apply_differential(bq, field, cup(bq, field, f, g))
        right = cochain_add(
            cup(bq, field, apply_differential(bq, field, f), g),
            cochain_scale(
                field.from_int((-1) ** n),
                cup(bq, field, f, apply_differential(bq, field, g)),
                field,
            ),
            field,
        )
        if not cochain_eq(left, right):
            return CheckResult(
                "cup_derivation", False, f"failed at degrees ({n}, {m})"
            )
        done += 1
    return CheckResult("cup_derivation", True, f"{done} random pairs")


def check_bracket_compatibility(
    bq: BoundQuiver,
    field: FieldSpec,
    max_degree: int,
    rng: random.Random,
    samples: int = 20,
) -> CheckResult:
    """The differential is compatible with the bracket, exactly."""
    orc = oracle(bq, field)
    done = 0
    for _ in range(samples):
        n = rng.randint(1, max_degree)
        m = rng.randint(1, max_degree)
        f = random_cochain(orc, n, rng)
        g = random_cochain(orc, m, rng)
        left = apply_differential(bq, field, bracket(bq, field, f, g))
        right = cochain_add(
            bracket(bq, field, f, apply_differential(bq, field, g)),
            cochain_scale(
                field.from_int((-1) ** (m - 1)),
                bracket(bq, field, apply_differential(bq, field, f), g),
                field,
            ),
            field,
        )
        if not cochain_eq(left, right):
            return CheckResult(
                "bracket_compatibility", False, f"failed at degrees ({n}, {m})"
            )
        done += 1
    return CheckResult("bracket_compatibility", True, f"{done} random pairs")


def check_commutativity_up_to_boundary(
    bq: BoundQuiver,
    field: FieldSpec,
    max_degree: int,
    rng: random.Random,
    samples: int = 10,
) -> CheckResult:
    """Cocycle cups commute up to sign and coboundary; cups and brackets
    against a coboundary input land in coboundaries (well-definedness)."""
    orc = oracle(bq, field)
    done = 0
    for _ in range(samples):
        n = rng.randint(1, max_degree)
        m = rng.randint(1, max_degree)
        f = random_cocycle(orc, n, rng)
        g = random_cocycle(orc, m, rng)
        commutator = cochain_sub(
            cup(bq, field, f, g),
            cochain_scale(field.from_int((-1) ** (n * m)), cup(bq, field, g, f), field),
            field,
        )
        if not orc.is_zero_class(commutator):
            return CheckResult(
                "commutativity_up_to_boundary", False, f"failed at degrees ({n}, {m})"
            )
        h = random_cochain(orc, n - 1, rng) if n >= 1 else zero_cochain(0)
        boundary = apply_differential(bq, field, h)
        if not orc.is_zero_class(cup(bq, field, boundary, g)):
            return CheckResult(
                "commutativity_up_to_boundary", False, f"cup against a boundary escapes boundaries ({n}, {m})"
            )
        if not orc.is_zero_class(bracket(bq, field, boundary, g)):
            return CheckResult(
                "commutativity_up_to_boundary", False, f"bracket against a boundary escapes boundaries ({n}, {m})"
            )
        done += 1
    return CheckResult("commutativity_up_to_boundary", True, f"{done} random pairs")


def check_orbit_cup_orthogonality(
    bq: BoundQuiver, field: FieldSpec, max_degree: int
) -> CheckResult:
    """Distinct rotations of a gentle power never cup together; equal
    rotations compose additively in the exponent (chain level)."""
    tested = 0
    for n in range(1, max_degree + 1):
        for omega in gentle_pairs(bq, n):
            k = order_of(bq, omega)
            p1 = omega_power(bq, omega, 1)
            p2 = omega_power(bq, omega, 2)
            rots = norm_of(bq, p1)
            sums = norm_of(bq, p2)
            assert len(rots) == k and len(sums) == k
            for i in range(k):
                for j in range(k):
                    fi = Cochain(n, {rots[i]: field.one})
                    gj = Cochain(n, {rots[j]: field.one})
                    prod = cup(bq, field, fi, gj)
                    expected = (
                        Cochain(2 * n, {sums[i]: field.one}) if i == j else zero_cochain(2 * n)
                    )
                    if not cochain_eq(prod, expected):
                        return CheckResult(
                            "orbit_cup_orthogonality",
                            False,
                            f"degree {n}: rotations ({i}, {j}) misbehaved",
                        )
                    tested += 1
    return CheckResult("orbit_cup_orthogonality", True, f"{tested} rotation pairs")


def check_jacobi_classes(
    bq: BoundQuiver,
    field: FieldSpec,
    max_degree: int,
    rng: random.Random,
    samples: int = 5,
) -> CheckResult:
    """Graded Jacobi identity on sampled cocycle triples, up to coboundary."""
    orc = oracle(bq, field)
    done = 0
    for _ in range(samples):
        n = rng.randint(1, max_degree)
        m = rng.randint(1, max_degree)
        p = rng.randint(1, max_degree)
        f = random_cocycle(orc, n, rng)
        g = random_cocycle(orc, m, rng)
        h = random_cocycle(orc, p, rng)
        a, b, c = n - 1, m - 1, p - 1
        term1 = cochain_scale(
            field.from_int((-1) ** (a * c)),
            bracket(bq, field, f, bracket(bq, field, g, h)),
            field,
        )
        term2 = cochain_scale(
            field.from_int((-1) ** (b * a)),
            bracket(bq, field, g, bracket(bq, field, h, f)),
            field,
        )
        term3 = cochain_scale(
            field.from_int((-1) ** (c * b)),
            bracket(bq, field, h, bracket(bq, field, f, g)),
            field,
        )
        total = cochain_add(cochain_add(term1, term2, field), term3, field)
        if not orc.is_zero_class(total):
            return CheckResult(
                "jacobi_classes", False, f"failed at degrees ({n}, {m}, {p})"
            )
        done += 1
    return CheckResult("jacobi_classes", True, f"{done} random triples")


# ----------------------------------------------------------------------
# the aggregate suite


def run_selftest(
    bq: BoundQuiver, field: FieldSpec, max_degree: int, seed: int = 7
) -> list[CheckResult]:
    """Every invariant suite at moderate sampling, deterministic."""
    rng = random.Random(seed)
    results = [
        check_complex_property(bq, field, max_degree),
        check_block_consistency(bq, field, max_degree),
        check_rank_routes(bq, field, max_degree),
        check_dimension_agreement(bq, field, max_degree),
        check_long_path_block(bq, field, max_degree),
        check_trivial_path_block(bq, field, max_degree),
        check_kernel_families(bq, field, max_degree),
        check_injective_on_busy(bq, field, max_degree),
        check_norm_rotation_exactness(bq, field, max_degree),
        check_coboundary_criterion(bq, field, max_degree, rng, samples_per_degree=5),
        check_cup_derivation(bq, field, min(max_degree, 3), rng, samples=10),
        check_bracket_compatibility(bq, field, min(max_degree, 3), rng, samples=10),
        check_commutativity_up_to_boundary(bq, field, min(max_degree, 3), rng, samples=5),
        check_orbit_cup_orthogonality(bq, field, min(max_degree, 4)),
        check_jacobi_classes(bq, field, min(max_degree, 2), rng, samples=3),
    ]
    return results
