import random

import pytest
from hypothesis import given, settings, strategies as st

from semicomp import (ArgError, Automaton, find_embeddings, make_cyclic, make_flip_flop,
                      right_regular_representation, run, transition_semigroup)
from semicomp.data import path as data_path
from semicomp.formats import load_fsa
from semicomp.transformations import cycle, identity

FLIP_FLOP = Automaton(2, [(0, 1), (0, 0), (1, 1)], ("read", "set0", "set1"))


def _isomorphic(a, b):
    return a.order == b.order and bool(find_embeddings(a, b, limit=1)) \
        and bool(find_embeddings(b, a, limit=1))


def test_flip_flop_automaton_is_the_flip_flop():
    sg, letters = transition_semigroup(FLIP_FLOP)
    assert sg.order == 3
    assert {e.image for e in sg.elements} == {(0, 1), (0, 0), (1, 1)}
    assert _isomorphic(sg.table, make_flip_flop())
    assert len(set(letters)) == 3


def test_bundled_flip_flop_file():
    a = load_fsa(data_path("flipflop.fsa"))
    assert a == FLIP_FLOP


@pytest.mark.parametrize("k", [2, 3, 5])
def test_single_cycle_letter_gives_cyclic(k):
    sg, letters = transition_semigroup(Automaton(k, [cycle(k)]))
    assert sg.order == k and letters == (0,)
    assert _isomorphic(sg.table, make_cyclic(k))


def test_identity_letter_gives_trivial():
    sg, _ = transition_semigroup(Automaton(4, [identity(4)]))
    assert sg.order == 1


def test_identical_letters_share_an_element():
    _, letters = transition_semigroup(Automaton(2, [(1, 0), (0, 0), (1, 0)]))
    assert letters[0] == letters[2] != letters[1]


def test_run_examples():
    assert run(FLIP_FLOP, 0, ["set1", "read"]) == 1
    assert run(FLIP_FLOP, 1, []) == 1
    a = load_fsa(data_path("cycle3.fsa"))
    assert run(a, 0, ["tick"] * 3) == 0
    assert run(a, 0, [0, 0]) == 2


def test_run_errors():
    with pytest.raises(IndexError):
        run(FLIP_FLOP, 2, [])
    with pytest.raises(IndexError):
        run(FLIP_FLOP, 0, [3])
    with pytest.raises(IndexError):
        run(FLIP_FLOP, 0, ["write"])


def test_bad_automata():
    with pytest.raises(ArgError):
        Automaton(2, [(0, 1, 2)])
    with pytest.raises(ArgError):
        Automaton(2, [])
    with pytest.raises(ArgError):
        Automaton(2, [(0, 1), (1, 0)], ("a", "a"))


def _automata():
    return st.integers(1, 5).flatmap(lambda n: st.lists(
        st.lists(st.integers(0, n - 1), min_size=n, max_size=n).map(tuple),
        min_size=1, max_size=3).map(lambda d: Automaton(n, d)))


@settings(max_examples=150, deadline=None)
@given(_automata(), st.data())
def test_run_splits_over_concatenation(a, data):
    word = st.lists(st.integers(0, a.letter_count - 1), max_size=12)
    u, v = data.draw(word), data.draw(word)
    s = data.draw(st.integers(0, a.state_count - 1))
    assert run(a, s, u + v) == run(a, run(a, s, u), v)


def _fixture_automata():
    yield FLIP_FLOP
    yield load_fsa(data_path("cycle3.fsa"))
    yield Automaton(3, [(1, 0, 2), (1, 2, 0), (1, 1, 2)])


@pytest.mark.parametrize("a", list(_fixture_automata()), ids=["flipflop", "cycle3", "t3"])
def test_semigroup_action_reproduces_run(a):
    sg, letters = transition_semigroup(a)
    rng = random.Random(11)
    for _ in range(1000):
        start = rng.randrange(a.state_count)
        word = [rng.randrange(a.letter_count) for _ in range(rng.randint(1, 15))]
        element = letters[word[0]]
        for w in word[1:]:
            element = sg.table(element, letters[w])
        assert sg.elements[element].image[start] == run(a, start, word)


def test_regular_representation_automaton_contains_the_table(flip_flop, z3, left_zero):
    for t in (flip_flop, z3, left_zero):
        gs, images = right_regular_representation(t)
        a = Automaton(gs.degree, images)
        sg, letters = transition_semigroup(a)
        # letters are the elements of t, and they form a copy of it
        assert len(set(letters)) == t.order
        for x in range(t.order):
            for y in range(t.order):
                assert sg.table(letters[x], letters[y]) == letters[t(x, y)]
        assert find_embeddings(t, sg.table, limit=1)
