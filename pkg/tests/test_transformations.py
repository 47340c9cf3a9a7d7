import pytest
from hypothesis import given, settings, strategies as st

from semicomp import (ArgError, DegreeMismatch, GenSet, SizeExceeded, Transformation, closure,
                      compose, find_embeddings, is_permutation, make_Tn_generators, make_cyclic)
from semicomp.transformations import collapsing, constant, cycle, identity, transposition

import oracles


def test_last_write_wins():
    assert compose(constant(2, 0), constant(2, 1)) == constant(2, 1)


@pytest.mark.parametrize("t", [cycle(4), collapsing(3), constant(3, 2), transposition(5, 1, 3)])
def test_identity_is_neutral(t):
    e = identity(t.degree)
    assert compose(t, e) == t
    assert compose(e, t) == t


def test_transposition_is_an_involution():
    s = transposition(3)
    assert compose(s, s) == identity(3)


def test_compose_applies_left_first():
    x = Transformation((1, 2, 0))
    y = Transformation((0, 0, 2))
    assert compose(x, y).image == (0, 2, 0)
    assert (x * y).image == (0, 2, 0)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(2), identity(3))
    with pytest.raises(DegreeMismatch):
        GenSet(2, [(0, 1), (0, 1, 2)])


def test_bad_transformations():
    with pytest.raises(ArgError):
        Transformation((0, 3, 1))
    with pytest.raises(ArgError):
        Transformation(())
    with pytest.raises(ArgError):
        GenSet(2, [])


def test_duplicates_are_flagged_not_rejected():
    g = GenSet(2, [(1, 0), (1, 0), (0, 0)])
    assert g.has_duplicates
    c = closure(g)
    assert c.gen_indices == (0, 0, 1)
    assert c.order == 4


def test_closure_of_the_three_standard_maps():
    gens = GenSet(3, [transposition(3), cycle(3), collapsing(3, 0, 1)])
    c = closure(gens)
    assert c.order == 27
    assert {e.image for e in c.elements} == oracles.self_maps(3)


def test_closure_of_a_three_cycle_is_z3():
    c = closure(GenSet(3, [cycle(3)]))
    assert c.order == 3
    z3 = make_cyclic(3)
    assert len(find_embeddings(c.table, z3)) >= 1
    assert len(find_embeddings(z3, c.table)) >= 1


@pytest.mark.parametrize("p", [1, 2, 5])
def test_closure_of_identity_is_trivial(p):
    c = closure(GenSet(p, [identity(p)]))
    assert c.order == 1 and c.table.rows == [[0]]


def test_tn_generators():
    assert [t.image for t in make_Tn_generators(3).gens] == [(1, 0, 2), (1, 2, 0), (1, 1, 2)]
    assert [t.image for t in make_Tn_generators(2).gens] == [(1, 0), (1, 1)]
    assert [t.image for t in make_Tn_generators(1).gens] == [(0,)]
    with pytest.raises(ArgError):
        make_Tn_generators(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tn_closure_is_every_self_map_once(n):
    c = closure(make_Tn_generators(n))
    images = [e.image for e in c.elements]
    assert len(images) == n ** n == len(set(images))
    assert set(images) == oracles.self_maps(n)


def test_is_permutation():
    assert is_permutation(cycle(3))
    assert not is_permutation(collapsing(3))
    assert is_permutation(identity(4))


def test_generators_come_first_then_breadth_first():
    gens = make_Tn_generators(3)
    c = closure(gens)
    assert [c.elements[i] for i in c.gen_indices] == list(gens.gens)
    assert c.gen_indices == (0, 1, 2)
    # the first new element is the first generator followed by itself
    assert c.elements[3] == compose(gens.gens[0], gens.gens[0])


def test_discovery_order_is_reproducible():
    g = make_Tn_generators(4)
    a, b = closure(g), closure(g)
    assert a.elements == b.elements
    assert a.table == b.table


def test_size_cap():
    with pytest.raises(SizeExceeded):
        closure(make_Tn_generators(3), max_size=26)
    assert closure(make_Tn_generators(3), max_size=27).order == 27


def test_large_degree_needs_override():
    with pytest.raises(ArgError):
        closure(GenSet(9, [cycle(9)]))
    assert closure(GenSet(9, [cycle(9)]), allow_large=True).order == 9


def test_large_degree_uses_exact_keys():
    # 16**16 overflows int64 keys; the byte-key path has to take over
    c = closure(GenSet(16, [cycle(16), constant(16, 0)]), allow_large=True)
    # 16 rotations and 16 constant maps
    assert c.order == 32
    expected = oracles.naive_closure([cycle(16).image, constant(16, 0).image])
    assert {e.image for e in c.elements} == expected
    for i in range(c.order):
        for j in range(c.order):
            assert c.elements[c.table(i, j)] == compose(c.elements[i], c.elements[j])


def _same_degree_triples():
    return st.integers(1, 6).flatmap(lambda p: st.tuples(*[
        st.lists(st.integers(0, p - 1), min_size=p, max_size=p).map(
            lambda img: Transformation(tuple(img))) for _ in range(3)]))


@settings(max_examples=200, deadline=None)
@given(_same_degree_triples())
def test_compose_is_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def _gensets():
    return st.integers(1, 4).flatmap(lambda p: st.lists(
        st.lists(st.integers(0, p - 1), min_size=p, max_size=p).map(tuple),
        min_size=1, max_size=3).map(lambda gs: GenSet(p, gs)))


@settings(max_examples=80, deadline=None)
@given(_gensets())
def test_closure_matches_naive_fixed_point(g):
    c = closure(g)
    expected = oracles.naive_closure([t.image for t in g.gens])
    assert {e.image for e in c.elements} == expected
    assert len(c.elements) == len(expected)


@settings(max_examples=60, deadline=None)
@given(_gensets())
def test_closure_table_is_consistent_and_closed(g):
    c = closure(g)
    for i, x in enumerate(c.elements):
        for j, y in enumerate(c.elements):
            assert c.elements[c.table(i, j)] == compose(x, y)
    again = closure(GenSet(g.degree, c.elements))
    assert {e.image for e in again.elements} == {e.image for e in c.elements}
