"""Path enumeration and the combinatorics driving the dimension formulas.

Two families of paths matter:

* surviving paths -- the relation-avoiding paths, a basis of the quotient
  algebra (``enumerate_basis_paths``);
* relation chains -- words of arrows in which *every* consecutive pair is a
  relation (``enumerate_ap``).  The degree-n cochain space has a basis
  indexed by parallel pairs (chain of length n, surviving path with the same
  endpoints).

On top of the raw enumeration this module classifies parallel pairs:

* the anchor tag of a pair (rho, gamma) records whether gamma starts with
  the first arrow of rho and/or ends with the last one;
* the block decorations record whether gamma admits a surviving extension by
  one arrow on the left / on the right;
* pairs whose parallel path is trivial get a cyclic taxonomy (complete /
  incomplete junction, rotation order, gentle, empty) that feeds the
  even-degree part of the dimension counts.

The rotation action, its orbit count, and the one-arrow shift ``phi`` used
to pair off kernel elements live here too.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import BoundQuiver, Path


@dataclass(frozen=True)
class ParallelPair:
    """A cochain-space basis element: a relation chain and a parallel
    surviving path (same source, same target)."""

    chain: Path
    path: Path

    @property
    def key(self) -> tuple:
        return (self.chain.key, self.path.key)

    def __repr__(self) -> str:
        return f"Pair({self.chain!r}, {self.path!r})"


@dataclass(frozen=True)
class PairClass:
    """Anchor tag and block decorations of a parallel pair.

    ``starts_with_first``/``ends_with_last`` say whether the parallel path
    shares the chain's first/last arrow (both may hold at once).
    ``left_blocked`` means no arrow b keeps b*gamma relation-avoiding;
    ``right_blocked`` is the mirror condition.  The decorations depend only
    on the path component.
    """

    starts_with_first: bool
    ends_with_last: bool
    left_blocked: bool
    right_blocked: bool

    @property
    def tag(self) -> tuple[int, int]:
        return (int(self.starts_with_first), int(self.ends_with_last))


@dataclass(frozen=True)
class CyclicPairData:
    """Taxonomy of a trivial-path pair (chain parallel to a vertex).

    ``complete`` -- the wrap-around arrow pair (last, first) is a relation;
    ``order`` -- least k >= 1 with k-fold rotation the identity (complete
    pairs only, None otherwise); ``exclusive_junction`` -- complete, and no
    other arrow extends the last arrow into a relation or precedes the first
    arrow in one; ``gentle`` -- every rotation has an exclusive junction;
    ``empty`` -- incomplete and no relation at all passes through the base
    vertex.
    """

    complete: bool
    order: int | None
    exclusive_junction: bool
    gentle: bool
    empty: bool


class BasisPathSet:
    """All surviving (relation-avoiding) paths, indexed by endpoints."""

    def __init__(self, paths: list[Path]):
        self.all_paths: tuple[Path, ...] = tuple(sorted(paths, key=lambda p: p.key))
        self.by_endpoints: dict[tuple[int, int], tuple[Path, ...]] = {}
        for p in self.all_paths:
            key = (p.source, p.target)
            self.by_endpoints[key] = self.by_endpoints.get(key, ()) + (p,)
        self._members = set(self.all_paths)

    def parallel_to(self, p: Path) -> tuple[Path, ...]:
        return self.by_endpoints.get((p.source, p.target), ())

    def __contains__(self, p: Path) -> bool:
        return p in self._members

    def __len__(self) -> int:
        return len(self.all_paths)


APSet = tuple[Path, ...]


def enumerate_basis_paths(bq: BoundQuiver) -> BasisPathSet:
    """Enumerate every relation-avoiding path (trivial paths included).

    Requires the quotient algebra to be finite dimensional; the growth is
    cut off by the fact that no relation-avoiding word can be longer than
    the arrow count without revisiting an arrow (which would yield a
    relation-avoiding cycle).
    """
    paths: list[Path] = [bq.trivial(v) for v in bq.vertices]
    frontier: list[Path] = [bq.arrow_path(a.id) for a in bq.arrows]
    limit = len(bq.arrows)
    while frontier:
        paths.extend(frontier)
        nxt: list[Path] = []
        for p in frontier:
            if len(p) > limit:
                raise ValueError("quotient algebra is not finite dimensional")
            for b in bq.live_successors[p.arrows[-1]]:
                nxt.append(Path(p.arrows + (b,), p.source, bq.arrows[b].target))
        frontier = nxt
    return BasisPathSet(paths)


def enumerate_ap(bq: BoundQuiver, n: int) -> APSet:
    """Relation chains of length n: words a_1..a_n with every consecutive
    pair a relation.  Degree 0 gives the trivial paths, degree 1 the arrows.
    """
    assert n >= 0
    if n == 0:
        return tuple(bq.trivial(v) for v in bq.vertices)
    words: list[tuple[int, ...]] = [(a.id,) for a in bq.arrows]
    for _ in range(n - 1):
        words = [w + (b,) for w in words for b in bq.rel_successors[w[-1]]]
        if not words:
            break
    chains = [
        Path(w, bq.arrows[w[0]].source, bq.arrows[w[-1]].target) for w in words if len(w) == n
    ]
    return tuple(sorted(chains, key=lambda p: p.key))


def parallel_pairs(
    chains: APSet, basis: BasisPathSet, min_path_len: int = 0
) -> list[ParallelPair]:
    """All pairs (chain, surviving path) with matching endpoints and path
    length at least ``min_path_len``, in canonical order."""
    out = [
        ParallelPair(c, g)
        for c in chains
        for g in basis.parallel_to(c)
        if len(g) >= min_path_len
    ]
    out.sort(key=lambda p: p.key)
    return out


def left_extensions(bq: BoundQuiver, gamma: Path) -> tuple[int, ...]:
    """Arrows b such that b*gamma is still relation-avoiding."""
    if gamma.is_trivial:
        return tuple(a.id for a in bq._in[gamma.source])
    return bq.live_predecessors[gamma.arrows[0]]


def right_extensions(bq: BoundQuiver, gamma: Path) -> tuple[int, ...]:
    """Arrows b such that gamma*b is still relation-avoiding."""
    if gamma.is_trivial:
        return tuple(a.id for a in bq._out[gamma.source])
    return bq.live_successors[gamma.arrows[-1]]


def classify_pair(bq: BoundQuiver, pair: ParallelPair) -> PairClass:
    """Anchor tag and block decorations of a parallel pair.

    A pair is anchored at the start when its path begins with the chain's
    first arrow, anchored at the end when it ends with the chain's last
    arrow; a trivial path is anchored nowhere.  For chains of length 1 the
    first and last arrow coincide, and a path anchored on *both* sides must
    be that arrow outright: a longer one would traverse the arrow twice and
    wrap a relation-avoiding cycle around it, which the
    finite-dimensionality hypothesis forbids.  One-sided anchors are
    perfectly possible, though (the path may continue past the arrow).
    """
    rho, gamma = pair.chain, pair.path
    assert not rho.is_trivial, "pairs over a length-0 chain have no anchor tag"
    swf = len(gamma) >= 1 and gamma.arrows[0] == rho.arrows[0]
    ewl = len(gamma) >= 1 and gamma.arrows[-1] == rho.arrows[-1]
    if len(rho) == 1 and swf and ewl:
        assert gamma.arrows == rho.arrows, (
            "a surviving path anchored on both sides of a length-1 chain "
            "must be that arrow itself (otherwise the algebra is infinite "
            "dimensional)"
        )
    return PairClass(
        starts_with_first=swf,
        ends_with_last=ewl,
        left_blocked=not left_extensions(bq, gamma),
        right_blocked=not right_extensions(bq, gamma),
    )


# ----------------------------------------------------------------------
# trivial-path pairs: rotation, orbits, taxonomy


def rotate(bq: BoundQuiver, pair: ParallelPair) -> ParallelPair:
    """Rotate a complete trivial-path pair: move the last arrow to the
    front and follow the base vertex along."""
    assert pair.path.is_trivial, "rotation only acts on trivial-path pairs"
    w = pair.chain.arrows
    assert bq.is_relation(w[-1], w[0]), "rotation needs a complete junction"
    new = (w[-1],) + w[:-1]
    src = bq.arrows[new[0]].source
    return ParallelPair(Path(new, src, bq.arrows[new[-1]].target), bq.trivial(src))


def order_of(bq: BoundQuiver, pair: ParallelPair) -> int:
    """Least k >= 1 with the k-fold rotation equal to the identity."""
    cur = rotate(bq, pair)
    k = 1
    while cur != pair:
        cur = rotate(bq, cur)
        k += 1
    return k


def norm_of(bq: BoundQuiver, pair: ParallelPair) -> list[ParallelPair]:
    """The rotation orbit of a complete pair, starting at the pair itself."""
    orbit = [pair]
    cur = rotate(bq, pair)
    while cur != pair:
        orbit.append(cur)
        cur = rotate(bq, cur)
    return orbit


def orbit_count(bq: BoundQuiver, pairs: list[ParallelPair]) -> int:
    """Number of rotation orbits in a rotation-closed set of complete pairs."""
    seen: set[ParallelPair] = set()
    count = 0
    for p in pairs:
        if p in seen:
            continue
        count += 1
        seen.update(norm_of(bq, p))
    return count


def classify_cyclic(bq: BoundQuiver, pair: ParallelPair) -> CyclicPairData:
    """Cyclic taxonomy of a trivial-path pair; see CyclicPairData."""
    assert pair.path.is_trivial
    w = pair.chain.arrows
    r = pair.path.source
    complete = bq.is_relation(w[-1], w[0])

    def exclusive(word: tuple[int, ...]) -> bool:
        # the wrap junction is the only relation touching either end
        others_out = [b for b in bq.rel_successors[word[-1]] if b != word[0]]
        others_in = [b for b in bq.rel_predecessors[word[0]] if b != word[-1]]
        return not others_out and not others_in

    if complete:
        order = order_of(bq, pair)
        excl = exclusive(w)
        gentle = all(
            exclusive(rot.chain.arrows) for rot in norm_of(bq, pair)
        )
        empty = False
    else:
        order = None
        excl = False
        gentle = False
        # no relation passes through the base vertex at all
        empty = not any(
            bq.rel_successors[a.id] for a in bq._in[r]
        )
    return CyclicPairData(
        complete=complete,
        order=order,
        exclusive_junction=excl,
        gentle=gentle,
        empty=empty,
    )


def trivial_path_pairs(bq: BoundQuiver, n: int) -> list[ParallelPair]:
    """Degree-n pairs whose parallel path is trivial (chain is a cycle)."""
    return [
        ParallelPair(c, bq.trivial(c.source))
        for c in enumerate_ap(bq, n)
        if c.source == c.target
    ]


def gentle_pairs(bq: BoundQuiver, n: int) -> list[ParallelPair]:
    return [p for p in trivial_path_pairs(bq, n) if classify_cyclic(bq, p).gentle]


def empty_pairs(bq: BoundQuiver, n: int) -> list[ParallelPair]:
    return [p for p in trivial_path_pairs(bq, n) if classify_cyclic(bq, p).empty]


# ----------------------------------------------------------------------
# the one-arrow shift pairing start-anchored pairs with end-anchored ones


def phi(bq: BoundQuiver, pair: ParallelPair) -> ParallelPair:
    """Shift a start-anchored, right-live pair one arrow to the right.

    Input: (a*rho', a*gamma') where the path starts with the chain's first
    arrow a and extends on the right by some arrow.  The surviving right
    extension b is unique (string condition), and appending it while
    dropping the shared first arrow gives (rho'*b, gamma'*b), an
    end-anchored pair whose path no longer starts with the chain's first
    arrow.  The string conditions make the new final junction a relation,
    so the output chain is again a relation chain; all of that is asserted.
    """
    cls = classify_pair(bq, pair)
    assert cls.starts_with_first and not cls.ends_with_last and not cls.right_blocked, (
        "phi needs a start-anchored, non-end-anchored pair with a live right extension"
    )
    rho, gamma = pair.chain, pair.path
    ext = right_extensions(bq, gamma)
    assert len(ext) == 1, "string condition: the surviving extension is unique"
    b = ext[0]
    new_chain_word = rho.arrows[1:] + (b,)
    assert bq.is_relation(rho.arrows[-1], b), (
        "string condition forces the appended junction into a relation"
    )
    new_chain = Path(
        new_chain_word, bq.arrows[new_chain_word[0]].source, bq.arrows[b].target
    )
    assert not bq.contains_relation(gamma.arrows[1:] + (b,))
    new_path = Path(
        gamma.arrows[1:] + (b,),
        bq.arrows[gamma.arrows[0]].target,
        bq.arrows[b].target,
    )
    assert new_chain.source == new_path.source and new_chain.target == new_path.target
    out = ParallelPair(new_chain, new_path)
    out_cls = classify_pair(bq, out)
    assert out_cls.ends_with_last and not out_cls.starts_with_first
    assert not out_cls.left_blocked
    return out
