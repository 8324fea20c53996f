"""Cup product, insertion products, bracket, and nonvanishing witnesses.

The products are computed on the parallel-pair basis of the cochain spaces:

* the cup of two pairs concatenates both components — it survives when the
  chain junction is a relation and the path product survives in the
  algebra;
* the i-th insertion of g = (rho', gamma') into f = (rho, gamma) replaces a
  slot of f's chain by rho' and pushes gamma' through f's path.  A trivial
  gamma' kills the term.  A one-arrow gamma' must equal the i-th chain
  arrow, which then gets spliced out (new seams must be relations).  A
  longer gamma' only acts at the two ends of a chain of length >= 2 (its
  boundary arrow must match there), while for a degree-1 f it acts at every
  occurrence of f's chain arrow inside gamma', summed over occurrences.

The bracket is the graded commutator of the total insertion products.

Witness searches certify nonvanishing products in high degrees: powers of a
gentle trivial-path pair give classes whose cups compose the rotation norms
additively, and (on gentle presentations in characteristic 0) whose
one-arrow extensions bracket by the difference of exponents.  Both searches
verify the chain-level identity exactly and check class nonvanishing
against the linear-algebra oracle before returning a witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochain import (
    Cochain,
    OracleComplex,
    apply_differential,
    cochain_add_term,
    cochain_eq,
    cochain_scale,
    cochain_sub,
    oracle,
    zero_cochain,
)
from .combinatorics import (
    ParallelPair,
    classify_cyclic,
    gentle_pairs,
    norm_of,
    order_of,
)
from .linalg import FieldSpec, Scalar
from .quiver import BoundQuiver, HypothesisViolation, Path, validate_gentle


@dataclass
class GradedElement:
    """A cochain remembered with its degree, for product tables."""

    degree: int
    cochain: Cochain


@dataclass
class Witness:
    """A re-checkable certificate of a nonvanishing product in cohomology."""

    kind: str  # "cup" or "bracket"
    omega: ParallelPair
    base_degree: int
    rotation_order: int
    s1: int
    s2: int
    left: Cochain
    right: Cochain
    product: Cochain
    expected: Cochain
    identity_ok: bool
    class_nonzero: bool

    @property
    def verified(self) -> bool:
        return self.identity_ok and self.class_nonzero


# ----------------------------------------------------------------------
# cup product


def _cup_pair(
    bq: BoundQuiver, f_pair: ParallelPair, g_pair: ParallelPair
) -> ParallelPair | None:
    rho, gamma = f_pair.chain, f_pair.path
    rho2, gamma2 = g_pair.chain, g_pair.path
    if rho.target != rho2.source:
        return None
    if rho.arrows and rho2.arrows and not bq.is_relation(rho.arrows[-1], rho2.arrows[0]):
        return None  # the concatenated word is not a relation chain
    new_gamma = bq.mul_basis(gamma, gamma2)
    if new_gamma is None:
        return None  # the path product is zero in the algebra
    new_chain = bq.compose(rho, rho2)
    assert new_chain is not None
    return ParallelPair(new_chain, new_gamma)


def cup(bq: BoundQuiver, field: FieldSpec, f: Cochain, g: Cochain) -> Cochain:
    """Cup product; degree adds, no sign."""
    out = zero_cochain(f.degree + g.degree)
    for fp, cf in f.coeffs.items():
        for gp, cg in g.coeffs.items():
            prod = _cup_pair(bq, fp, gp)
            if prod is not None:
                cochain_add_term(out, prod, field.mul(cf, cg), field)
    return out


# ----------------------------------------------------------------------
# insertion products


def _splice_chain(
    bq: BoundQuiver, left: tuple[int, ...], middle: tuple[int, ...], right: tuple[int, ...], anchor: int
) -> Path | None:
    """Concatenate chain segments; every seam between nonempty neighbours
    must be a relation.  ``anchor`` locates the trivial path if the result
    is empty."""
    if left and middle and not bq.is_relation(left[-1], middle[0]):
        return None
    if middle and right and not bq.is_relation(middle[-1], right[0]):
        return None
    if not middle and left and right and not bq.is_relation(left[-1], right[0]):
        return None
    word = left + middle + right
    if not word:
        return bq.trivial(anchor)
    return Path(word, bq.arrows[word[0]].source, bq.arrows[word[-1]].target)


def _basis_path(bq: BoundQuiver, word: tuple[int, ...], anchor: int) -> Path | None:
    """The surviving path on a word of arrows, or None when it dies."""
    if not word:
        return bq.trivial(anchor)
    for x, y in zip(word, word[1:]):
        if bq.arrows[x].target != bq.arrows[y].source:
            return None
    if bq.contains_relation(word):
        return None
    return Path(word, bq.arrows[word[0]].source, bq.arrows[word[-1]].target)


def _circ_i_pair(
    bq: BoundQuiver, f_pair: ParallelPair, g_pair: ParallelPair, i: int
) -> list[ParallelPair]:
    """All basis terms of the i-th insertion of one pair into another."""
    rho, gamma = f_pair.chain, f_pair.path
    rho2, gamma2 = g_pair.chain, g_pair.path
    n = len(rho)
    assert 1 <= i <= n
    if gamma2.is_trivial:
        return []

    if len(gamma2) == 1:
        # the inserted value is a single arrow: it must be the chain's i-th
        # arrow, which gets replaced by the other chain
        b = gamma2.arrows[0]
        if rho.arrows[i - 1] != b:
            return []
        left, right = rho.arrows[: i - 1], rho.arrows[i:]
        new_chain = _splice_chain(bq, left, rho2.arrows, right, rho.source)
        if new_chain is None:
            return []
        return [ParallelPair(new_chain, gamma)]

    # the inserted value is a longer path
    if n == 1:
        # degree-1 source: act at every occurrence of the chain arrow
        a = rho.arrows[0]
        out: list[ParallelPair] = []
        for j, b in enumerate(gamma2.arrows):
            if b != a:
                continue
            word = gamma2.arrows[:j] + gamma.arrows + gamma2.arrows[j + 1 :]
            new_gamma = _basis_path(bq, word, gamma.source)
            if new_gamma is not None:
                out.append(ParallelPair(rho2, new_gamma))
        return out
    if i == 1:
        # the inserted path must end with the chain's first arrow
        if gamma2.arrows[-1] != rho.arrows[0]:
            return []
        new_chain = _splice_chain(bq, (), rho2.arrows, rho.arrows[1:], rho.source)
        if new_chain is None:
            return []
        new_gamma = _basis_path(
            bq, gamma2.arrows[:-1] + gamma.arrows, gamma2.source
        )
        if new_gamma is None:
            return []
        return [ParallelPair(new_chain, new_gamma)]
    if i == n:
        # the inserted path must start with the chain's last arrow
        if gamma2.arrows[0] != rho.arrows[-1]:
            return []
        new_chain = _splice_chain(bq, rho.arrows[:-1], rho2.arrows, (), rho.source)
        if new_chain is None:
            return []
        new_gamma = _basis_path(
            bq, gamma.arrows + gamma2.arrows[1:], gamma.source
        )
        if new_gamma is None:
            return []
        return [ParallelPair(new_chain, new_gamma)]
    # interior slots of longer chains never see a longer path
    return []


def circ_i(bq: BoundQuiver, field: FieldSpec, f: Cochain, g: Cochain, i: int) -> Cochain:
    """The i-th insertion product (1 <= i <= degree of f); degree n+m-1."""
    out = zero_cochain(f.degree + g.degree - 1)
    for fp, cf in f.coeffs.items():
        for gp, cg in g.coeffs.items():
            for pair in _circ_i_pair(bq, fp, gp, i):
                cochain_add_term(out, pair, field.mul(cf, cg), field)
    return out


def circ(bq: BoundQuiver, field: FieldSpec, f: Cochain, g: Cochain) -> Cochain:
    """Total insertion product: signed sum of the slot insertions."""
    n, m = f.degree, g.degree
    out = zero_cochain(n + m - 1)
    for i in range(1, n + 1):
        sign = field.from_int((-1) ** ((i - 1) * (m - 1)))
        term = circ_i(bq, field, f, g, i)
        for pair, c in term.coeffs.items():
            cochain_add_term(out, pair, field.mul(sign, c), field)
    return out


def bracket(bq: BoundQuiver, field: FieldSpec, f: Cochain, g: Cochain) -> Cochain:
    """Graded commutator of the insertion products."""
    n, m = f.degree, g.degree
    fg = circ(bq, field, f, g)
    gf = circ(bq, field, g, f)
    sign = field.from_int((-1) ** ((n - 1) * (m - 1)))
    return cochain_sub(fg, cochain_scale(sign, gf, field), field)


# ----------------------------------------------------------------------
# classes


def cup_class(orc: OracleComplex, f: Cochain, g: Cochain) -> Cochain:
    """Canonical representative of the cup of two cocycle classes."""
    if not orc.is_cocycle(f) or not orc.is_cocycle(g):
        raise ValueError("cup_class needs cocycles")
    return orc.class_of(cup(orc.bq, orc.field, f, g))


def bracket_class(orc: OracleComplex, f: Cochain, g: Cochain) -> Cochain:
    """Canonical representative of the bracket of two cocycle classes."""
    if not orc.is_cocycle(f) or not orc.is_cocycle(g):
        raise ValueError("bracket_class needs cocycles")
    return orc.class_of(bracket(orc.bq, orc.field, f, g))


# ----------------------------------------------------------------------
# distinguished cocycles from gentle trivial-path pairs


def omega_power(bq: BoundQuiver, pair: ParallelPair, s: int) -> ParallelPair:
    """The s-th power of a complete trivial-path pair (wrap junctions are
    relations, so the repeated word is again a relation chain)."""
    assert s >= 1
    assert pair.path.is_trivial
    w = pair.chain.arrows
    assert bq.is_relation(w[-1], w[0]), "powers need a complete junction"
    word = w * s
    return ParallelPair(Path(word, pair.chain.source, pair.chain.target), pair.path)


def norm_cochain(bq: BoundQuiver, field: FieldSpec, pair: ParallelPair, s: int) -> Cochain:
    """Sum of all rotations of the s-th power of a complete pair.

    When the power's degree is even, or in characteristic 2, this is a
    cocycle; that is asserted.  (For odd degree in odd characteristic the
    rotation sum is not closed and callers should not build it.)
    """
    power = omega_power(bq, pair, s)
    out = Cochain(len(power.chain), {})
    for rot in norm_of(bq, power):
        cochain_add_term(out, rot, field.one, field)
    if len(power.chain) % 2 == 0 or field.characteristic == 2:
        assert apply_differential(bq, field, out).is_zero(), (
            "rotation norm failed to be a cocycle"
        )
    return out


def psi(bq: BoundQuiver, field: FieldSpec, pair: ParallelPair, s: int) -> Cochain:
    """One-arrow extension of the s-th power of a gentle pair.

    Appending the first arrow to the power's chain and pairing with that
    arrow gives a both-ends-anchored pair, hence a cocycle (asserted).
    """
    assert classify_cyclic(bq, pair).gentle, "psi needs a gentle pair"
    power = omega_power(bq, pair, s)
    w = power.chain.arrows
    first = w[0]
    chain = Path(w + (first,), power.chain.source, bq.arrows[first].target)
    out = Cochain(len(w) + 1, {ParallelPair(chain, bq.arrow_path(first)): field.one})
    assert apply_differential(bq, field, out).is_zero(), (
        "anchored extension failed to be a cocycle"
    )
    return out


# ----------------------------------------------------------------------
# witness searches


def find_cup_witness(
    bq: BoundQuiver, field: FieldSpec, max_degree: int
) -> Witness | None:
    """Search for a certified nonvanishing cup product of positive-degree
    classes.

    Scans gentle trivial-path pairs by increasing degree; the first one
    found yields rotation norms whose cup is again a rotation norm.  In odd
    characteristic an odd-degree pair is squared first so both factors have
    even degree.  Returns None when no gentle pair exists up to the bound.
    """
    for n in range(1, max_degree + 1):
        pairs = gentle_pairs(bq, n)
        if not pairs:
            continue
        omega = pairs[0]
        k = order_of(bq, omega)
        if field.characteristic != 2 and n % 2 == 1:
            s1 = s2 = 2
        else:
            s1 = s2 = 1
        left = norm_cochain(bq, field, omega, s1)
        right = norm_cochain(bq, field, omega, s2)
        expected = norm_cochain(bq, field, omega, s1 + s2)
        product = cup(bq, field, left, right)
        identity_ok = cochain_eq(product, expected)
        orc = oracle(bq, field)
        class_nonzero = not orc.is_zero_class(product)
        return Witness(
            kind="cup",
            omega=omega,
            base_degree=n,
            rotation_order=k,
            s1=s1,
            s2=s2,
            left=left,
            right=right,
            product=product,
            expected=expected,
            identity_ok=identity_ok,
            class_nonzero=class_nonzero,
        )
    return None


def find_bracket_witness(bq: BoundQuiver, max_degree: int) -> Witness | None:
    """Search for a certified nonvanishing bracket, over the rationals.

    Requires a gentle presentation and characteristic 0; anything else is a
    hypothesis violation.  The witness brackets two one-arrow extensions of
    powers of the first gentle pair, with distinct exponents (doubled when
    the base degree is odd so the extensions keep odd total degree).
    """
    gentle_report = validate_gentle(bq)
    if not gentle_report.ok:
        raise HypothesisViolation(
            "bracket witnesses need a gentle presentation: "
            + "; ".join(gentle_report.problems)
        )
    field = FieldSpec(0)
    for n in range(1, max_degree + 1):
        pairs = gentle_pairs(bq, n)
        if not pairs:
            continue
        omega = pairs[0]
        k = order_of(bq, omega)
        s1, s2 = (1, 2) if n % 2 == 0 else (2, 4)
        f = psi(bq, field, omega, s1)
        g = psi(bq, field, omega, s2)
        expected = cochain_scale(
            field.from_int((n // k) * (s1 - s2)), psi(bq, field, omega, s1 + s2), field
        )
        product = bracket(bq, field, f, g)
        identity_ok = cochain_eq(product, expected)
        orc = oracle(bq, field)
        class_nonzero = not orc.is_zero_class(product)
        return Witness(
            kind="bracket",
            omega=omega,
            base_degree=n,
            rotation_order=k,
            s1=s1,
            s2=s2,
            left=f,
            right=g,
            product=product,
            expected=expected,
            identity_ok=identity_ok,
            class_nonzero=class_nonzero,
        )
    return None


def check_witness(bq: BoundQuiver, field: FieldSpec, w: Witness) -> bool:
    """Re-verify a witness from scratch: the chain identity and the
    oracle's nonvanishing judgement."""
    if w.kind == "cup":
        product = cup(bq, field, w.left, w.right)
    else:
        product = bracket(bq, field, w.left, w.right)
    if not cochain_eq(product, w.product) or not cochain_eq(product, w.expected):
        return False
    return not oracle(bq, field).is_zero_class(product)
