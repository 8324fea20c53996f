from __future__ import annotations

from fractions import Fraction

import pytest

from string_hochschild import (
    FieldSpec,
    ParallelPair,
    apply_differential,
    cochain_add,
    cochain_eq,
    cochain_from_pairs,
    cochain_scale,
    cochain_sub,
    enumerate_ap,
    enumerate_basis_paths,
    oracle,
    parallel_pairs,
    zero_cochain,
)
from string_hochschild.cochain import assemble_from_blocks, cochain_add_term
from corpus import corpus_members
from fixtures import a3_one_relation, one_loop, two_cycle

Q = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)


def _pair(bq, chain_ids, path_ids, vertex=None):
    chain = bq.make_path(chain_ids) if chain_ids else bq.trivial(vertex)
    path = bq.make_path(path_ids) if path_ids else bq.trivial(vertex if vertex is not None else chain.source)
    return ParallelPair(chain, path)


def test_cochain_arithmetic() -> None:
    loop = one_loop()
    p = _pair(loop, [0], [0])
    f = cochain_from_pairs(1, [(p, Fraction(2))], Q)
    g = cochain_scale(Fraction(3), f, Q)
    assert g.coeffs[p] == Fraction(6)
    assert cochain_eq(cochain_sub(g, g, Q), zero_cochain(1))
    h = cochain_add(f, cochain_scale(Fraction(-2), f, Q), Q)
    assert cochain_eq(h, cochain_scale(Fraction(-1), f, Q))
    # accumulating a cancelling term prunes the coefficient dict
    cochain_add_term(f, p, Fraction(-2), Q)
    assert f.is_zero() and p not in f.coeffs


def test_loop_differential_doubles_the_detached_generator() -> None:
    loop = one_loop()
    orc = oracle(loop, Q)
    # degree-1 basis is [(a|e_v), (a|a)]; degree-2 basis [(aa|e_v), (aa|a)]
    names = [(loop.path_label(p.chain), loop.path_label(p.path)) for p in orc.basis(1)]
    assert names == [("a", "e_v"), ("a", "a")]
    m = orc.differential(2)
    assert (m.rows, m.cols) == (2, 2)
    idx2 = orc.index(2)
    target = _pair(loop, [0, 0], [0])
    assert m.get(idx2[target], 0) == Fraction(2)  # the only nonzero entry
    assert sum(1 for _ in m.entries) == 1
    # in characteristic 2 that entry vanishes and the map is zero
    assert oracle(loop, F2).differential(2).is_zero()


def test_two_cycle_differentials_frozen() -> None:
    two = two_cycle()
    orc = oracle(two, Q)
    # degree 1 -> 2 is identically zero: both products at the junction die
    assert orc.differential(2).is_zero()
    # degree 2 -> 3 sends (ab|e_1) to -(aba|a) + (bab|b) and
    # (ba|e_2) to (aba|a) - (bab|b)
    m = orc.differential(3)
    i2, i3 = orc.index(2), orc.index(3)
    col_ab = i2[_pair(two, [0, 1], [], 0)]
    col_ba = i2[_pair(two, [1, 0], [], 1)]
    row_aba = i3[_pair(two, [0, 1, 0], [0])]
    row_bab = i3[_pair(two, [1, 0, 1], [1])]
    assert m.get(row_aba, col_ab) == Fraction(-1)
    assert m.get(row_bab, col_ab) == Fraction(1)
    assert m.get(row_aba, col_ba) == Fraction(1)
    assert m.get(row_bab, col_ba) == Fraction(-1)
    assert orc.rank_differential(3) == 1


def test_degree_zero_differential_is_the_commutator_map() -> None:
    a3 = a3_one_relation()
    orc = oracle(a3, Q)
    # vertex functions modulo constants embed: rank |Q_0| - 1 on a tree
    assert orc.rank_differential(1) == 2
    assert orc.hh_dim(0) == 1
    f = cochain_from_pairs(0, [(_pair(a3, [], [], 0), Fraction(1))], Q)
    df = apply_differential(a3, Q, f)
    # e_1 commutes into -a on the only arrow out of vertex 1
    assert [(a3.path_label(p.chain), a3.path_label(p.path), c) for p, c in sorted(df.coeffs.items(), key=lambda t: t[0].key)] == [
        ("a", "a", Fraction(-1))
    ]


def test_differential_squares_to_zero() -> None:
    for bq in (one_loop(), two_cycle(), a3_one_relation()):
        for field in (Q, F2, F3):
            orc = oracle(bq, field)
            for n in range(1, 6):
                assert orc.differential(n + 1).matmul(orc.differential(n)).is_zero()


def test_block_assembly_matches_evaluation_route() -> None:
    for bq in corpus_members(12):
        for field in (Q, F3):
            orc = oracle(bq, field)
            for n in range(0, 5):
                direct = orc.differential(n + 1)
                blocks = assemble_from_blocks(bq, n, field)
                assert direct.entries == blocks.entries


def test_oracle_dimensions_frozen() -> None:
    loop, two, a3 = one_loop(), two_cycle(), a3_one_relation()
    assert [oracle(loop, Q).hh_dim(n) for n in range(9)] == [2, 1, 1, 1, 1, 1, 1, 1, 1]
    assert [oracle(loop, F2).hh_dim(n) for n in range(9)] == [2] * 9
    assert [oracle(loop, F3).hh_dim(n) for n in range(9)] == [2, 1, 1, 1, 1, 1, 1, 1, 1]
    for field in (Q, F2, F3):
        assert [oracle(two, field).hh_dim(n) for n in range(9)] == [1] * 9
        assert [oracle(a3, field).hh_dim(n) for n in range(6)] == [1, 0, 0, 0, 0, 0]


def test_degree_data_invariants() -> None:
    for bq in (one_loop(), two_cycle()):
        orc = oracle(bq, F2)
        for n in range(0, 5):
            data = orc.degree_data(n)
            assert data.hh_dim == data.cocycles.dim - data.coboundaries.dim
            for row in data.coboundaries.rows:
                assert data.cocycles.contains(list(row))


def test_class_machinery() -> None:
    two = two_cycle()
    orc = oracle(two, Q)
    gens = orc.class_generators(2)
    assert len(gens) == 1
    assert orc.is_cocycle(gens[0]) and not orc.is_zero_class(gens[0])
    # a coboundary has zero class
    img = apply_differential(two, Q, cochain_from_pairs(2, [(orc.basis(2)[0], Fraction(1))], Q))
    assert orc.is_cocycle(img) and orc.is_zero_class(img)
    # non-cocycles are rejected
    basis1 = oracle(one_loop(), Q)
    bad = cochain_from_pairs(1, [(basis1.basis(1)[0], Fraction(1))], Q)
    assert not basis1.is_cocycle(bad)
    with pytest.raises(ValueError):
        basis1.class_of(bad)


def test_vector_round_trip() -> None:
    two = two_cycle()
    orc = oracle(two, F3)
    f = cochain_from_pairs(3, [(orc.basis(3)[0], 2), (orc.basis(3)[1], 1)], F3)
    assert cochain_eq(orc.from_vector(3, orc.to_vector(f)), f)


def test_chain_degrees_empty_beyond_support() -> None:
    a3 = a3_one_relation()
    orc = oracle(a3, Q)
    assert orc.dim(3) == 0 and orc.dim(4) == 0
    assert orc.hh_dim(7) == 0
    basis = enumerate_basis_paths(a3)
    assert parallel_pairs(enumerate_ap(a3, 3), basis) == []
