import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import (feasible_instance, insert_neighbors, multi_window_neighborhood_best,
                     random_instance, score, swap_neighbors, window_neighborhood_best)
from setupls.distances import (insert_distance, multi_window_distance, swap_distance,
                               window_distance)
from setupls.model import Instance
from setupls.neighborhoods import (improve_insert, improve_multi_window, improve_swap,
                                   improve_window)


def test_toy_window_and_multi_window(toy):
    ident = (0, 1, 2, 3)
    assert improve_window(toy, ident, 2) is None
    mw = improve_multi_window(toy, ident, 2)
    assert score(toy, mw) == (0, 6)
    assert multi_window_distance(ident, mw) == 2
    w4 = improve_window(toy, ident, 4)
    assert score(toy, w4)[1] == 6
    assert window_neighborhood_best(toy, ident, 2) == (0, 7)
    assert window_neighborhood_best(toy, ident, 4) == (0, 6)


def test_k_clamped_and_degenerate(toy):
    ident = (0, 1, 2, 3)
    assert improve_window(toy, ident, 1) is None
    assert improve_window(toy, ident, 0) is None
    assert improve_window(toy, ident, 99) is not None
    assert improve_insert(toy, ident, 0) is None
    assert improve_swap(toy, ident, 0) is None


def test_globally_optimal_start_is_final(rng):
    for _ in range(10):
        inst = random_instance(rng, 6, 3)
        opt = min(itertools.permutations(range(6)), key=lambda p: score(inst, p))
        for k in range(2, 7):
            assert improve_window(inst, opt, k) is None
            assert improve_multi_window(inst, opt, k) is None


def test_window_equals_multi_window_when_k_covers(rng):
    for _ in range(15):
        inst = random_instance(rng, 5, 3)
        order = tuple(int(x) for x in rng.permutation(5))
        a = improve_window(inst, order, 5, first_improvement=False)
        b = improve_multi_window(inst, order, 5)
        assert (a is None) == (b is None)
        if a is not None:
            assert score(inst, a) == score(inst, b)


def test_swap_two_beats_one():
    inst = Instance.from_lists([6, 1, 3, 6], [None] * 4, [2, 1, 0, 2],
                               [[0, 5, 3], [6, 0, 9], [8, 2, 0]])
    order = (0, 1, 2, 3)
    cur = score(inst, order)
    assert all(score(inst, nb) >= cur for nb in swap_neighbors(order))
    assert improve_swap(inst, order, 1) is None
    better = improve_swap(inst, order, 2)
    assert score(inst, better) < cur and swap_distance(order, better) == 2


def test_swap_two_jobs():
    inst = Instance.from_lists([1, 1, 1], [None] * 3, [0, 1, 0], [[0, 5], [5, 0]])
    got = improve_swap(inst, (0, 1, 2), 1)
    assert got is not None and score(inst, got) == (0, 8)


def test_figure_insert_move():
    # jobs 2 and 5 are the only type-1 jobs; moving job 5 to position 3 joins them
    setup = [[0, 10], [10, 0]]
    inst = Instance.from_lists([1] * 8, [None] * 8, [0, 0, 1, 0, 0, 1, 0, 0], setup)
    pi = tuple(range(8))
    pi1 = (0, 1, 5, 2, 3, 4, 6, 7)
    assert insert_distance(pi, pi1) == 1
    assert pi1 in set(insert_neighbors(pi))
    assert score(inst, pi1) == (0, 28) < score(inst, pi) == (0, 48)
    got = improve_insert(inst, pi, 1)
    assert got is not None and insert_distance(pi, got) == 1
    assert score(inst, got) < score(inst, pi)


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 8), k=st.integers(1, 3))
def test_radius_and_strictness(seed, n, k):
    rng = np.random.default_rng(seed)
    inst = random_instance(rng, n, 3)
    order = tuple(int(x) for x in rng.permutation(n))
    cur = score(inst, order)
    for fn, dist, kk in ((improve_swap, swap_distance, k), (improve_insert, insert_distance, k),
                         (improve_window, window_distance, k + 1),
                         (improve_multi_window, multi_window_distance, k + 1)):
        got = fn(inst, order, kk)
        if got is not None:
            assert sorted(got) == list(range(n))
            assert 0 < dist(order, got) <= kk
            assert score(inst, got) < cur


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 7))
def test_single_move_none_agrees_with_enumeration(seed, n):
    rng = np.random.default_rng(seed)
    inst = random_instance(rng, n, 3)
    order = tuple(int(x) for x in rng.permutation(n))
    cur = score(inst, order)
    for fn, nbs in ((improve_swap, swap_neighbors), (improve_insert, insert_neighbors)):
        exists = any(score(inst, p) < cur for p in nbs(order))
        assert (fn(inst, order, 1) is not None) == exists


@pytest.mark.parametrize("seed", range(25))
def test_window_completeness(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 9))
    inst, order = feasible_instance(rng, n, int(rng.integers(1, 4)))
    for k in range(2, 6):
        best = window_neighborhood_best(inst, order, k)
        got = improve_window(inst, order, k)
        assert (got is None) == (best >= score(inst, order))


@pytest.mark.parametrize("seed", range(25))
def test_multi_window_completeness(seed):
    rng = np.random.default_rng(500 + seed)
    n = int(rng.integers(3, 8))
    inst, order = feasible_instance(rng, n, int(rng.integers(1, 4)))
    for k in range(2, 5):
        best = multi_window_neighborhood_best(inst, order, k)
        got = improve_multi_window(inst, order, k)
        if best < score(inst, order):
            assert got is not None and score(inst, got) == best
        else:
            assert got is None
        w = improve_window(inst, order, k)
        if w is not None:
            assert got is not None and score(inst, got) <= score(inst, w)
