from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from test_graph import graphs
from zforce.forcing import (
    ColorState,
    ForceChain,
    apply_rule_once,
    derived_coloring,
    derived_coloring_queue,
    first_non_forcing_extension,
    is_failed,
    is_maximal_failed,
    is_stalled,
    is_zero_forcing_set,
    replay,
)
from zforce.graph import VertexSet, complete, cycle, empty, path, petersen


def test_apply_rule_once():
    assert apply_rule_once(path(3), [0]) == (0, 1)
    assert apply_rule_once(cycle(4), [0]) is None
    assert apply_rule_once(complete(4), [0, 1, 2]) == (0, 3)


def test_apply_rule_does_not_mutate():
    s = VertexSet.of(3, [0])
    apply_rule_once(path(3), s)
    derived_coloring(path(3), s)
    assert s.to_list() == [0]


def test_derived_coloring_path_from_endpoint():
    final, chain = derived_coloring(path(5), [0])
    assert final.to_list() == [0, 1, 2, 3, 4]
    assert chain.steps == ((0, 1), (1, 2), (2, 3), (3, 4))


def test_derived_coloring_stalled_cycle():
    final, chain = derived_coloring(cycle(6), [0, 2, 4])
    assert final.to_list() == [0, 2, 4] and len(chain) == 0


def test_derived_coloring_empty():
    final, chain = derived_coloring(petersen(), [])
    assert len(final) == 0 and len(chain) == 0


def test_chain_is_lowest_forcer_sequence():
    g = path(6)
    blue = VertexSet.of(6, [2, 3])
    _, chain = derived_coloring(g, blue)
    steps = []
    while (step := apply_rule_once(g, blue)) is not None:
        steps.append(step)
        blue = blue.add(step[1])
    assert chain.steps == tuple(steps)


def test_chain_text_round_trip():
    _, chain = derived_coloring(path(4), [0])
    assert chain.format() == "0 -> 1\n1 -> 2\n2 -> 3"
    assert ForceChain.parse(chain.format()) == chain


def test_color_state():
    st_ = ColorState(VertexSet.of(5, [1]))
    assert st_.graph_order == 5


def test_predicates():
    assert is_zero_forcing_set(path(7), [6])
    assert is_zero_forcing_set(path(7), [3, 4])
    assert not is_zero_forcing_set(cycle(4), [0])
    assert is_failed(complete(4), [0, 1])
    assert not is_failed(path(4), [0])
    assert is_failed(complete(1), [])
    assert not is_failed(cycle(5), range(5))


def test_stalled():
    assert is_stalled(cycle(6), [0, 2, 4])
    assert not is_stalled(path(3), [0])
    assert not is_stalled(cycle(4), range(4))
    assert is_stalled(empty(3), [0])


def test_maximal_failed():
    assert is_maximal_failed(cycle(4), [0, 2])
    assert not is_maximal_failed(complete(4), [0])
    assert first_non_forcing_extension(complete(4), [0]) == 1
    assert is_maximal_failed(path(3), [1])
    assert not is_maximal_failed(path(3), [0])


@pytest.mark.parametrize("n", range(2, 13))
def test_path_endpoints_and_consecutive_pairs_force(n):
    g = path(n)
    assert is_zero_forcing_set(g, [0]) and is_zero_forcing_set(g, [n - 1])
    for i in range(n - 1):
        assert is_zero_forcing_set(g, [i, i + 1])


@settings(max_examples=200, deadline=None)
@given(graphs(8), st.data())
def test_matches_naive_closure(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    final, chain = derived_coloring(g, s)
    assert set(final) == naive.closure(naive.adjacency(g), s)
    assert replay(g, s, chain) == final


@settings(max_examples=200, deadline=None)
@given(graphs(8), st.data())
def test_tie_break_independence(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    low = derived_coloring(g, s)[0]
    assert derived_coloring_queue(g, s) == low
    assert derived_coloring_queue(g, s, highest_first=True) == low


@settings(max_examples=200, deadline=None)
@given(graphs(8), st.data())
def test_monotonicity(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    extra = data.draw(st.sets(st.integers(0, g.order - 1)))
    bigger = s | extra
    if is_zero_forcing_set(g, s):
        assert is_zero_forcing_set(g, bigger)
    if is_failed(g, bigger):
        assert is_failed(g, s)


@settings(max_examples=150, deadline=None)
@given(graphs(7), st.data())
def test_maximal_implies_stalled(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    if is_maximal_failed(g, s):
        assert is_stalled(g, s)


def test_replay_rejects_illegal_step():
    with pytest.raises(ValueError, match="unique white"):
        replay(cycle(4), [0], ForceChain(((0, 1),)))
    with pytest.raises(ValueError, match="white"):
        replay(path(3), [0], ForceChain(((2, 1),)))


def test_random_sets_on_petersen_agree_with_naive():
    rng = random.Random(7)
    g = petersen()
    adj = naive.adjacency(g)
    for _ in range(300):
        s = [v for v in range(10) if rng.random() < 0.5]
        assert set(derived_coloring(g, s)[0]) == naive.closure(adj, s)
