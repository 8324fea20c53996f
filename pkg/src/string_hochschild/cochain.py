"""The cochain complex computing Hochschild cohomology, exactly.

The degree-n cochain space has the parallel pairs (relation chain of length
n, surviving path) as basis.  The differential into degree n+1 is computed
by two deliberately different routes:

* ``apply_differential`` evaluates the defining formula: the value of the
  image cochain on a chain is the first arrow times the value on the tail,
  plus a sign times the value on the head times the last arrow (degree 0 is
  the two-sided commutator form).  ``differential_matrix`` assembles the
  matrix column by column from this evaluation.
* ``block_components`` builds the same map from closed summation formulas
  for its two nonzero blocks (trivial-path sources hitting one-arrow-path
  targets, and longer-path sources hitting length >= 2 targets), and
  ``assemble_from_blocks`` embeds them back into the full matrix.

Their agreement, entry for entry, is one of the package's standing
invariants.  Cohomology dimensions come from ranks alone; cocycle and
coboundary bases, canonical class representatives, and the zero-class test
are built lazily and cached per (quiver, field).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

from .combinatorics import (
    BasisPathSet,
    ParallelPair,
    enumerate_ap,
    enumerate_basis_paths,
    parallel_pairs,
)
from .linalg import (
    FieldSpec,
    Scalar,
    SparseMatrix,
    SubspaceBasis,
    column_space_basis,
    kernel_basis,
    rank,
)
from .quiver import BoundQuiver, Path


@dataclass
class Cochain:
    """A sparse cochain: finitely supported map from degree-n parallel
    pairs to scalars.  Zero coefficients are never stored."""

    degree: int
    coeffs: dict[ParallelPair, Scalar] = dc_field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[ParallelPair]:
        return sorted(self.coeffs, key=lambda p: p.key)


def zero_cochain(degree: int) -> Cochain:
    return Cochain(degree, {})


def cochain_from_pairs(
    degree: int, terms: list[tuple[ParallelPair, Scalar]], field: FieldSpec
) -> Cochain:
    out = Cochain(degree, {})
    for pair, c in terms:
        cochain_add_term(out, pair, c, field)
    return out


def cochain_add_term(f: Cochain, pair: ParallelPair, c: Scalar, field: FieldSpec) -> None:
    assert len(pair.chain) == f.degree
    cur = field.add(f.coeffs.get(pair, field.zero), c)
    if field.is_zero(cur):
        f.coeffs.pop(pair, None)
    else:
        f.coeffs[pair] = cur


def cochain_add(f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    assert f.degree == g.degree
    out = Cochain(f.degree, dict(f.coeffs))
    for pair, c in g.coeffs.items():
        cochain_add_term(out, pair, c, field)
    return out


def cochain_scale(c: Scalar, f: Cochain, field: FieldSpec) -> Cochain:
    if field.is_zero(c):
        return zero_cochain(f.degree)
    return Cochain(f.degree, {p: field.mul(c, v) for p, v in f.coeffs.items()})


def cochain_sub(f: Cochain, g: Cochain, field: FieldSpec) -> Cochain:
    return cochain_add(f, cochain_scale(field.from_int(-1), g, field), field)


def cochain_eq(f: Cochain, g: Cochain) -> bool:
    return f.degree == g.degree and f.coeffs == g.coeffs


# ----------------------------------------------------------------------
# the differential, route one: evaluate the defining formula


def _value_on_chain(f: Cochain, chain: Path) -> dict[Path, Scalar]:
    """The value of a cochain on one relation chain, as a combination of
    surviving paths."""
    out: dict[Path, Scalar] = {}
    for pair, c in f.coeffs.items():
        if pair.chain == chain:
            out[pair.path] = c  # pairs are unique per (chain, path)
    return out


def apply_differential(bq: BoundQuiver, field: FieldSpec, f: Cochain) -> Cochain:
    """Image of a cochain under the Hochschild differential.

    In positive degrees the image's value on a chain w = a_1..a_{n+1} is
    a_1 * f(a_2..a_{n+1}) + (-1)^{n+1} f(a_1..a_n) * a_{n+1}, products taken
    in the quotient algebra (terms that hit a relation vanish).  A degree-0
    cochain assigns each vertex a parallel cycle, and its image on an arrow
    a is a*f(e_target) - f(e_source)*a.
    """
    n = f.degree
    out = Cochain(n + 1, {})
    if f.is_zero():
        return out
    for w in enumerate_ap(bq, n + 1):
        if n == 0:
            a = w.arrows[0]
            apath = bq.arrow_path(a)
            for gamma, c in _value_on_chain(f, bq.trivial(bq.arrows[a].target)).items():
                prod = bq.mul_basis(apath, gamma)
                if prod is not None:
                    cochain_add_term(out, ParallelPair(w, prod), c, field)
            for gamma, c in _value_on_chain(f, bq.trivial(bq.arrows[a].source)).items():
                prod = bq.mul_basis(gamma, apath)
                if prod is not None:
                    cochain_add_term(out, ParallelPair(w, prod), field.neg(c), field)
        else:
            first = bq.arrow_path(w.arrows[0])
            last = bq.arrow_path(w.arrows[-1])
            head = Path(w.arrows[:-1], w.source, bq.arrows[w.arrows[-2]].target)
            tail = Path(w.arrows[1:], bq.arrows[w.arrows[1]].source, w.target)
            sign = field.from_int((-1) ** (n + 1))
            for gamma, c in _value_on_chain(f, tail).items():
                prod = bq.mul_basis(first, gamma)
                if prod is not None:
                    cochain_add_term(out, ParallelPair(w, prod), c, field)
            for gamma, c in _value_on_chain(f, head).items():
                prod = bq.mul_basis(gamma, last)
                if prod is not None:
                    cochain_add_term(out, ParallelPair(w, prod), field.mul(sign, c), field)
    return out


# ----------------------------------------------------------------------
# the differential, route two: closed block formulas


def block_components(
    bq: BoundQuiver, n: int, field: FieldSpec
) -> tuple[SparseMatrix, SparseMatrix]:
    """The two nonzero blocks of the differential out of degree n.

    With the degree-n basis split into trivial-path pairs and longer-path
    pairs, and the degree-(n+1) basis split by path length into trivial /
    one-arrow / length >= 2 parts, the differential has exactly two nonzero
    blocks: trivial-path sources map into the one-arrow part and
    longer-path sources map into the length >= 2 part.  Both are assembled
    here from explicit summation formulas, independently of
    ``apply_differential``.
    """
    assert n >= 0
    src0 = _degree_part(bq, n, lambda g: len(g) == 0)
    src1 = _degree_part(bq, n, lambda g: len(g) >= 1)
    tgt1 = _degree_part(bq, n + 1, lambda g: len(g) == 1)
    tgt2 = _degree_part(bq, n + 1, lambda g: len(g) >= 2)
    idx_tgt1 = {p: i for i, p in enumerate(tgt1)}
    idx_tgt2 = {p: i for i, p in enumerate(tgt2)}
    block0 = SparseMatrix(len(tgt1), len(src0), field)
    block1 = SparseMatrix(len(tgt2), len(src1), field)
    one = field.one
    sign = field.from_int((-1) ** (n + 1))

    for j, pair in enumerate(src0):
        r = pair.path.source
        if n == 0:
            # commutator with a vertex: every arrow in or out of the base
            for b in bq._in[r]:
                block0.add_to(idx_tgt1[ParallelPair(bq.arrow_path(b.id), bq.arrow_path(b.id))], j, one)
            for b in bq._out[r]:
                block0.add_to(idx_tgt1[ParallelPair(bq.arrow_path(b.id), bq.arrow_path(b.id))], j, field.neg(one))
        else:
            w = pair.chain.arrows
            for b in bq.rel_predecessors[w[0]]:
                if bq.arrows[b].target == r:
                    tgt = ParallelPair(bq.make_path((b,) + w), bq.arrow_path(b))
                    block0.add_to(idx_tgt1[tgt], j, one)
            for b in bq.rel_successors[w[-1]]:
                if bq.arrows[b].source == r:
                    tgt = ParallelPair(bq.make_path(w + (b,)), bq.arrow_path(b))
                    block0.add_to(idx_tgt1[tgt], j, sign)

    for j, pair in enumerate(src1):
        gamma = pair.path
        if n == 0:
            r = pair.chain.source
            for b in bq._in[r]:
                ext = bq.live_predecessors[gamma.arrows[0]]
                if b.id in ext:
                    tgt = ParallelPair(bq.arrow_path(b.id), bq.make_path((b.id,) + gamma.arrows))
                    block1.add_to(idx_tgt2[tgt], j, one)
            for b in bq._out[r]:
                ext = bq.live_successors[gamma.arrows[-1]]
                if b.id in ext:
                    tgt = ParallelPair(bq.arrow_path(b.id), bq.make_path(gamma.arrows + (b.id,)))
                    block1.add_to(idx_tgt2[tgt], j, field.neg(one))
        else:
            w = pair.chain.arrows
            for b in bq.rel_predecessors[w[0]]:
                if b in bq.live_predecessors[gamma.arrows[0]]:
                    tgt = ParallelPair(bq.make_path((b,) + w), bq.make_path((b,) + gamma.arrows))
                    block1.add_to(idx_tgt2[tgt], j, one)
            for b in bq.rel_successors[w[-1]]:
                if b in bq.live_successors[gamma.arrows[-1]]:
                    tgt = ParallelPair(bq.make_path(w + (b,)), bq.make_path(gamma.arrows + (b,)))
                    block1.add_to(idx_tgt2[tgt], j, sign)

    return block0, block1


def _degree_part(bq: BoundQuiver, n: int, keep) -> list[ParallelPair]:
    basis = enumerate_basis_paths(bq)
    return [p for p in parallel_pairs(enumerate_ap(bq, n), basis) if keep(p.path)]


def assemble_from_blocks(bq: BoundQuiver, n: int, field: FieldSpec) -> SparseMatrix:
    """Embed the two blocks back into the full degree-n differential matrix
    (rows and columns in the canonical degree-basis order)."""
    block0, block1 = block_components(bq, n, field)
    src = _degree_part(bq, n, lambda g: True)
    tgt = _degree_part(bq, n + 1, lambda g: True)
    src_index = {p: i for i, p in enumerate(src)}
    tgt_index = {p: i for i, p in enumerate(tgt)}
    src0 = [p for p in src if len(p.path) == 0]
    src1 = [p for p in src if len(p.path) >= 1]
    tgt1 = [p for p in tgt if len(p.path) == 1]
    tgt2 = [p for p in tgt if len(p.path) >= 2]
    out = SparseMatrix(len(tgt), len(src), field)
    for (r, c), v in block0.entries.items():
        out.add_to(tgt_index[tgt1[r]], src_index[src0[c]], v)
    for (r, c), v in block1.entries.items():
        out.add_to(tgt_index[tgt2[r]], src_index[src1[c]], v)
    return out


# ----------------------------------------------------------------------
# the cached complex


@dataclass
class DegreeData:
    """Everything the oracle knows about one degree."""

    degree: int
    basis: list[ParallelPair]
    differential_out: SparseMatrix
    cocycles: SubspaceBasis
    coboundaries: SubspaceBasis
    hh_dim: int


class OracleComplex:
    """Lazy, cached view of the whole complex for one (quiver, field)."""

    def __init__(self, bq: BoundQuiver, field: FieldSpec):
        self.bq = bq
        self.field = field
        self.basis_paths: BasisPathSet = enumerate_basis_paths(bq)
        self._basis: dict[int, list[ParallelPair]] = {}
        self._index: dict[int, dict[ParallelPair, int]] = {}
        self._diff: dict[int, SparseMatrix] = {}
        self._rank: dict[int, int] = {}
        self._cocycles: dict[int, SubspaceBasis] = {}
        self._coboundaries: dict[int, SubspaceBasis] = {}

    def basis(self, n: int) -> list[ParallelPair]:
        if n not in self._basis:
            self._basis[n] = parallel_pairs(enumerate_ap(self.bq, n), self.basis_paths)
        return self._basis[n]

    def index(self, n: int) -> dict[ParallelPair, int]:
        if n not in self._index:
            self._index[n] = {p: i for i, p in enumerate(self.basis(n))}
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def differential(self, n: int) -> SparseMatrix:
        """The matrix of the differential from degree n-1 into degree n."""
        assert n >= 1
        if n not in self._diff:
            src = self.basis(n - 1)
            tgt_index = self.index(n)
            mat = SparseMatrix(len(self.basis(n)), len(src), self.field)
            for j, pair in enumerate(src):
                image = apply_differential(
                    self.bq, self.field, Cochain(n - 1, {pair: self.field.one})
                )
                for tpair, v in image.coeffs.items():
                    mat.add_to(tgt_index[tpair], j, v)
            self._diff[n] = mat
        return self._diff[n]

    def rank_differential(self, n: int) -> int:
        assert n >= 0
        if n == 0:
            return 0
        if n not in self._rank:
            self._rank[n] = rank(self.differential(n))
        return self._rank[n]

    def hh_dim(self, n: int) -> int:
        """dim H^n = dim Ker(out of degree n) - rank(into degree n)."""
        assert n >= 0
        kernel_dim = self.dim(n) - self.rank_differential(n + 1)
        return kernel_dim - self.rank_differential(n)

    def cocycles(self, n: int) -> SubspaceBasis:
        if n not in self._cocycles:
            self._cocycles[n] = kernel_basis(self.differential(n + 1))
        return self._cocycles[n]

    def coboundaries(self, n: int) -> SubspaceBasis:
        if n not in self._coboundaries:
            if n == 0:
                self._coboundaries[n] = SubspaceBasis.from_vectors(
                    [], self.dim(0), self.field
                )
            else:
                self._coboundaries[n] = column_space_basis(self.differential(n))
        return self._coboundaries[n]

    def degree_data(self, n: int) -> DegreeData:
        cocycles = self.cocycles(n)
        coboundaries = self.coboundaries(n)
        for row in coboundaries.rows:
            assert cocycles.contains(row), "a coboundary failed to be a cocycle"
        data = DegreeData(
            degree=n,
            basis=self.basis(n),
            differential_out=self.differential(n + 1),
            cocycles=cocycles,
            coboundaries=coboundaries,
            hh_dim=self.hh_dim(n),
        )
        assert data.hh_dim == cocycles.dim - coboundaries.dim
        return data

    # -- cochain <-> vector plumbing

    def to_vector(self, f: Cochain) -> list[Scalar]:
        idx = self.index(f.degree)
        vec = [self.field.zero] * self.dim(f.degree)
        for pair, c in f.coeffs.items():
            vec[idx[pair]] = c
        return vec

    def from_vector(self, n: int, vec: list[Scalar]) -> Cochain:
        basis = self.basis(n)
        assert len(vec) == len(basis)
        out = Cochain(n, {})
        for i, c in enumerate(vec):
            if not self.field.is_zero(c):
                out.coeffs[basis[i]] = c
        return out

    def class_generators(self, n: int) -> list[Cochain]:
        """Canonical cocycles representing a basis of degree-n cohomology."""
        boundaries = self.coboundaries(n)
        reduced = []
        for row in self.cocycles(n).rows:
            red = boundaries.reduce(row)
            if any(not self.field.is_zero(x) for x in red):
                reduced.append(red)
        span = SubspaceBasis.from_vectors(reduced, self.dim(n), self.field)
        assert span.dim == self.hh_dim(n)
        return [self.from_vector(n, row) for row in span.rows]

    def is_cocycle(self, f: Cochain) -> bool:
        return apply_differential(self.bq, self.field, f).is_zero()

    def class_of(self, f: Cochain) -> Cochain:
        """Canonical representative of the cohomology class of a cocycle."""
        if not self.is_cocycle(f):
            raise ValueError("class_of needs a cocycle")
        reduced = self.coboundaries(f.degree).reduce(self.to_vector(f))
        return self.from_vector(f.degree, reduced)

    def is_zero_class(self, f: Cochain) -> bool:
        return self.class_of(f).is_zero()


@functools.lru_cache(maxsize=256)
def oracle(bq: BoundQuiver, field: FieldSpec) -> OracleComplex:
    """The cached complex for one bound quiver and field."""
    return OracleComplex(bq, field)


def differential_matrix(bq: BoundQuiver, n: int, field: FieldSpec) -> SparseMatrix:
    """Matrix of the differential from degree n-1 to degree n (n >= 1)."""
    return oracle(bq, field).differential(n)


def hh_dim_oracle(bq: BoundQuiver, n: int, field: FieldSpec) -> int:
    """Hochschild cohomology dimension in degree n, by ranks alone."""
    return oracle(bq, field).hh_dim(n)


def cocycle_basis(bq: BoundQuiver, n: int, field: FieldSpec) -> SubspaceBasis:
    return oracle(bq, field).cocycles(n)


def coboundary_basis(bq: BoundQuiver, n: int, field: FieldSpec) -> SubspaceBasis:
    return oracle(bq, field).coboundaries(n)


def class_of(bq: BoundQuiver, field: FieldSpec, f: Cochain) -> Cochain:
    return oracle(bq, field).class_of(f)


def is_zero_class(bq: BoundQuiver, field: FieldSpec, f: Cochain) -> bool:
    return oracle(bq, field).is_zero_class(f)
