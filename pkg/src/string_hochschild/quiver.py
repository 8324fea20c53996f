"""Bound quivers with quadratic monomial relations.

A bound quiver here is a finite directed graph together with a set of
relations, each relation being an ordered pair of composable arrows (a
length-2 path).  The quotient of the path algebra by the ideal generated by
those length-2 paths is the algebra whose Hochschild cohomology the rest of
the package computes.  This module only knows about the presentation: paths,
composition, the string/gentle conditions, connectivity, and finite
dimensionality.

Vertices and arrows are normalized to dense integer ids (0..n-1) in input
order; original labels are kept for printing.  Everything is immutable after
construction and totally ordered, so downstream bases and matrices are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class HypothesisViolation(ValueError):
    """Raised when an operation is asked to run outside the hypotheses it
    is proved for (non-gentle input to a gentle-only routine, bracket
    witnesses away from characteristic 0, infinite-dimensional quotients)."""


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    label: str

    def __repr__(self) -> str:
        return f"Arrow({self.label}: {self.source}->{self.target})"


@dataclass(frozen=True)
class Path:
    """A path in the quiver: a composable tuple of arrow ids.

    The trivial path at a vertex v has arrows == () and source == target == v.
    """

    arrows: tuple[int, ...]
    source: int
    target: int

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def key(self) -> tuple:
        """Canonical sort key: (length, arrow id sequence, source)."""
        return (len(self.arrows), self.arrows, self.source)

    def __repr__(self) -> str:
        if not self.arrows:
            return f"Path(e_{self.source})"
        return f"Path({'.'.join(str(a) for a in self.arrows)}: {self.source}->{self.target})"


@dataclass(frozen=True)
class WitnessCycle:
    """A relation-avoiding cycle of arrows, certifying infinite dimension."""

    arrows: tuple[int, ...]


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)


class BoundQuiver:
    """Immutable bound quiver with quadratic monomial relations.

    Parameters are given in label form and normalized: vertices get ids
    0..|Q0|-1 and arrows ids 0..|Q1|-1, both in input order (idempotent).
    Relations are ordered pairs of arrow labels (first arrow, then the arrow
    it composes into); duplicates are dropped silently, non-composable pairs
    are rejected.
    """

    def __init__(
        self,
        vertices: list[str],
        arrows: list[tuple[str, str, str]],
        relations: list[tuple[str, str]],
    ):
        if not vertices:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        self.vertex_labels: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.vertices: tuple[int, ...] = tuple(range(len(vertices)))
        vid = {v: i for i, v in enumerate(self.vertex_labels)}

        arrow_list: list[Arrow] = []
        seen_labels: set[str] = set()
        for label, src, tgt in arrows:
            label = str(label)
            if label in seen_labels:
                raise ValueError(f"duplicate arrow label {label!r}")
            if label in vid:
                raise ValueError(f"arrow label {label!r} collides with a vertex label")
            seen_labels.add(label)
            if src not in vid:
                raise ValueError(f"arrow {label!r}: unknown source vertex {src!r}")
            if tgt not in vid:
                raise ValueError(f"arrow {label!r}: unknown target vertex {tgt!r}")
            arrow_list.append(Arrow(len(arrow_list), vid[src], vid[tgt], label))
        self.arrows: tuple[Arrow, ...] = tuple(arrow_list)
        aid = {a.label: a.id for a in self.arrows}

        rels: set[tuple[int, int]] = set()
        for first, second in relations:
            if first not in aid:
                raise ValueError(f"relation references unknown arrow {first!r}")
            if second not in aid:
                raise ValueError(f"relation references unknown arrow {second!r}")
            a, b = self.arrows[aid[first]], self.arrows[aid[second]]
            if a.target != b.source:
                raise ValueError(
                    f"relation {first!r} {second!r} is not composable "
                    f"(target of {first!r} is {self.vertex_labels[a.target]!r}, "
                    f"source of {second!r} is {self.vertex_labels[b.source]!r})"
                )
            rels.add((a.id, b.id))
        self.relations: frozenset[tuple[int, int]] = frozenset(rels)

        # Incidence and composability tables used all over the package.
        self._out: dict[int, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        self._in: dict[int, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        for a in self.arrows:
            self._out[a.source] += (a,)
            self._in[a.target] += (a,)
        # Continuations of an arrow that stay inside a relation / avoid all
        # relations.  "Live" successors of a are the arrows b out of t(a)
        # with ab not a relation, i.e. ab survives in the quotient.
        self.rel_successors: dict[int, tuple[int, ...]] = {}
        self.live_successors: dict[int, tuple[int, ...]] = {}
        self.rel_predecessors: dict[int, tuple[int, ...]] = {}
        self.live_predecessors: dict[int, tuple[int, ...]] = {}
        for a in self.arrows:
            succ = [b.id for b in self._out[a.target]]
            self.rel_successors[a.id] = tuple(b for b in succ if (a.id, b) in self.relations)
            self.live_successors[a.id] = tuple(b for b in succ if (a.id, b) not in self.relations)
            pred = [b.id for b in self._in[a.source]]
            self.rel_predecessors[a.id] = tuple(b for b in pred if (b, a.id) in self.relations)
            self.live_predecessors[a.id] = tuple(b for b in pred if (b, a.id) not in self.relations)

    # ------------------------------------------------------------------
    # paths

    def trivial(self, v: int) -> Path:
        assert v in self._out, f"no vertex {v}"
        return Path((), v, v)

    def arrow_path(self, a: int) -> Path:
        arr = self.arrows[a]
        return Path((a,), arr.source, arr.target)

    def make_path(self, arrow_ids: tuple[int, ...] | list[int]) -> Path:
        """Assemble a path from arrow ids, checking composability."""
        ids = tuple(arrow_ids)
        if not ids:
            raise ValueError("make_path needs at least one arrow; use trivial() instead")
        for x, y in zip(ids, ids[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                raise ValueError(f"arrows {x} and {y} do not compose")
        return Path(ids, self.arrows[ids[0]].source, self.arrows[ids[-1]].target)

    def compose(self, p: Path, q: Path) -> Path | None:
        """Concatenation of paths, or None when the endpoints do not meet."""
        if p.target != q.source:
            return None
        if p.is_trivial:
            return q
        if q.is_trivial:
            return p
        return Path(p.arrows + q.arrows, p.source, q.target)

    def is_relation(self, a: int, b: int) -> bool:
        return (a, b) in self.relations

    def contains_relation(self, arrow_ids: tuple[int, ...]) -> bool:
        """True when some consecutive arrow pair of the word is a relation."""
        rel = self.relations
        return any((x, y) in rel for x, y in zip(arrow_ids, arrow_ids[1:]))

    def mul_basis(self, p: Path, q: Path) -> Path | None:
        """Product of two residue classes of paths in the quotient algebra.

        Returns the concatenated path when it is again relation-avoiding,
        None when the endpoints mismatch or a relation appears (the product
        is zero in the algebra).  Both inputs are expected to be
        relation-avoiding already, so only the junction can die, but the
        full word is checked anyway.
        """
        w = self.compose(p, q)
        if w is None or self.contains_relation(w.arrows):
            return None
        return w

    def path_label(self, p: Path) -> str:
        if p.is_trivial:
            return f"e_{self.vertex_labels[p.source]}"
        return "".join(self.arrows[a].label for a in p.arrows)

    # ------------------------------------------------------------------
    # validation

    def is_connected(self) -> bool:
        """Undirected connectivity of the underlying graph."""
        if not self.vertices:
            return False
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def validate_string(bq: BoundQuiver) -> ValidationReport:
    """Check the string-algebra conditions on the presentation.

    S1: every vertex is the source of at most two arrows and the target of
    at most two arrows.  S2: for every arrow a there is at most one arrow b
    with ab relation-avoiding, and at most one arrow c with ca
    relation-avoiding.  Connectivity of the underlying graph is enforced
    here as well, since the degree-0/1 dimension statements assume it.
    """
    problems: list[str] = []
    if not bq.is_connected():
        problems.append("quiver is not connected")
    for v in bq.vertices:
        if len(bq._out[v]) > 2:
            labels = ",".join(a.label for a in bq._out[v])
            problems.append(f"vertex {bq.vertex_labels[v]} has {len(bq._out[v])} outgoing arrows ({labels})")
        if len(bq._in[v]) > 2:
            labels = ",".join(a.label for a in bq._in[v])
            problems.append(f"vertex {bq.vertex_labels[v]} has {len(bq._in[v])} incoming arrows ({labels})")
    for a in bq.arrows:
        live_out = bq.live_successors[a.id]
        if len(live_out) > 1:
            labels = ",".join(bq.arrows[b].label for b in live_out)
            problems.append(f"arrow {a.label} has {len(live_out)} surviving continuations ({labels})")
        live_in = bq.live_predecessors[a.id]
        if len(live_in) > 1:
            labels = ",".join(bq.arrows[b].label for b in live_in)
            problems.append(f"arrow {a.label} has {len(live_in)} surviving predecessors ({labels})")
    return ValidationReport(ok=not problems, problems=problems)


def validate_gentle(bq: BoundQuiver) -> ValidationReport:
    """Check the extra gentle condition on top of the string conditions.

    For every arrow a there is at most one arrow b with ab a relation and at
    most one arrow c with ca a relation.  (Relations are quadratic by
    construction, so nothing else needs checking.)
    """
    report = validate_string(bq)
    problems = list(report.problems)
    for a in bq.arrows:
        rel_out = bq.rel_successors[a.id]
        if len(rel_out) > 1:
            labels = ",".join(bq.arrows[b].label for b in rel_out)
            problems.append(f"arrow {a.label} starts {len(rel_out)} relations ({labels})")
        rel_in = bq.rel_predecessors[a.id]
        if len(rel_in) > 1:
            labels = ",".join(bq.arrows[b].label for b in rel_in)
            problems.append(f"arrow {a.label} ends {len(rel_in)} relations ({labels})")
    return ValidationReport(ok=not problems, problems=problems)


def check_finite_dimensional(bq: BoundQuiver) -> WitnessCycle | None:
    """None when the quotient algebra is finite dimensional.

    The algebra is infinite dimensional exactly when some relation-avoiding
    cycle of arrows exists (its powers never meet a relation, because the
    ideal is generated by length-2 words).  Equivalently, the directed graph
    on arrows with an edge a -> b whenever ab is composable and not a
    relation must be acyclic.  A cycle found there is returned as a witness.
    """
    color: dict[int, int] = {}  # 0 = on stack, 1 = done
    stack_path: list[int] = []

    def visit(a: int) -> tuple[int, ...] | None:
        color[a] = 0
        stack_path.append(a)
        for b in bq.live_successors[a]:
            if b not in color:
                cyc = visit(b)
                if cyc is not None:
                    return cyc
            elif color[b] == 0:
                i = stack_path.index(b)
                return tuple(stack_path[i:])
        stack_path.pop()
        color[a] = 1
        return None

    for a0 in range(len(bq.arrows)):
        if a0 not in color:
            cyc = visit(a0)
            if cyc is not None:
                return WitnessCycle(cyc)
    return None
