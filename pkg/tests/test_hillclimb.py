import itertools
import math

import numpy as np
import pytest

from oracles import random_instance, score, window_neighborhood_best
from setupls.edds import start_dd
from setupls.hillclimb import VARIANTS, StrategyConfig, counting_clock, run
from setupls.neighborhoods import improve_multi_window, improve_swap, improve_window


def test_toy_mw_single_step(toy):
    rep = run(toy, (0, 1, 2, 3), StrategyConfig("mw", k_init=2))
    assert rep.objective == (0, 6)
    assert len(rep.trajectory) == 1 and rep.trajectory[0].k == 2
    assert rep.termination == "k-exhausted"


def test_toy_win_escalates(toy):
    # k = 2 cannot improve; k = 3 already can (oracle below), so the climb escalates once
    assert window_neighborhood_best(toy, (0, 1, 2, 3), 2) == (0, 7)
    assert window_neighborhood_best(toy, (0, 1, 2, 3), 3) == (0, 6)
    rep = run(toy, (0, 1, 2, 3), StrategyConfig("win", k_init=2))
    assert rep.objective == (0, 6)
    assert [q.k for q in rep.queries[:2]] == [2, 3]
    assert rep.trajectory[0].k == 3


def test_optimal_start_has_empty_trajectory(rng):
    inst = random_instance(rng, 6, 3)
    opt = min(itertools.permutations(range(6)), key=lambda p: score(inst, p))
    for v in VARIANTS:
        rep = run(inst, opt, StrategyConfig(v, k_init=2))
        assert rep.trajectory == [] and rep.termination == "k-exhausted"
        assert rep.schedule == opt


def test_config_validation():
    with pytest.raises(ValueError):
        StrategyConfig("nope")
    with pytest.raises(ValueError):
        StrategyConfig(k_init=1)
    with pytest.raises(ValueError):
        StrategyConfig(k_init=4, k_max=3)
    with pytest.raises(ValueError):
        StrategyConfig(time_limit=-1)


def test_time_limit_zero(toy):
    rep = run(toy, (0, 1, 2, 3), StrategyConfig("mw", time_limit=0))
    assert rep.termination == "time-limit" and rep.queries == []


def test_counting_clock_bounds_queries(rng):
    inst = random_instance(rng, 20, 4)
    rep = run(inst, start_dd(inst), StrategyConfig("win-swap", time_limit=5), clock=counting_clock())
    assert rep.termination in ("time-limit", "k-exhausted")
    assert len(rep.queries) <= 5


def check_contract(inst, start, cfg, rep):
    """Monotone trajectory, reset discipline, and the local-optimality certificate."""
    objs = [score(inst, start)] + [tuple(e.objective) for e in rep.trajectory]
    assert all(b < a for a, b in zip(objs, objs[1:]))
    assert tuple(rep.objective) == score(inst, rep.schedule) == objs[-1]
    qs = rep.queries
    for prev, nxt in zip(qs, qs[1:]):
        if prev.improved:
            expected_k = 1 if nxt.move == "swap" else cfg.k_init
            assert nxt.k == expected_k
        elif prev.move != "swap":
            assert nxt.k in (prev.k + 1, 1)
    if rep.termination == "k-exhausted":
        multi = cfg.variant.startswith("mw")
        for k in rep.tried_k:
            fn = improve_multi_window if multi else improve_window
            assert fn(inst, rep.schedule, k) is None
        if cfg.variant.endswith("swap"):
            assert improve_swap(inst, rep.schedule, 1) is None


@pytest.mark.parametrize("variant", VARIANTS)
def test_contract_small(variant, rng):
    for _ in range(5):
        inst = random_instance(rng, int(rng.integers(5, 16)), 4)
        start = start_dd(inst)
        cfg = StrategyConfig(variant, k_init=2, k_max=5)
        rep = run(inst, start, cfg)
        check_contract(inst, start, cfg, rep)
        assert rep.termination == "k-exhausted"


def test_determinism(rng):
    inst = random_instance(rng, 25, 5)
    cfg = StrategyConfig("mw-swap", k_init=3, k_max=5)
    a = run(inst, start_dd(inst), cfg, clock=counting_clock())
    b = run(inst, start_dd(inst), cfg, clock=counting_clock())
    assert a.to_dict() == b.to_dict() and a.queries == b.queries


def test_report_dict(toy):
    d = run(toy, (0, 1, 2, 3), StrategyConfig("mw", k_init=2), clock=counting_clock()).to_dict()
    assert d["objective"] == {"tardiness": 0, "makespan": 6}
    assert d["termination"] == "k-exhausted"
    assert d["trajectory"][0]["move"] == "multi_window"
    assert math.isfinite(d["trajectory"][0]["elapsed"])
