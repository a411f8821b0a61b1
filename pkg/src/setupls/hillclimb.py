"""Hill climbing with growing window radius: Win, Win+Swap, MW and MW+Swap."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .model import Instance, Objective, check_schedule, evaluate
from .neighborhoods import improve_multi_window, improve_swap, improve_window

VARIANTS = ("win", "win-swap", "mw", "mw-swap")


@dataclass(frozen=True)
class StrategyConfig:
    variant: str = "win-swap"
    k_init: int = 4
    k_max: Optional[int] = None  # None means n
    time_limit: float = math.inf
    first_improvement: bool = True

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.k_init < 2:
            raise ValueError("k_init must be at least 2")
        if self.k_max is not None and self.k_max < self.k_init:
            raise ValueError("k_max must be >= k_init")
        if self.time_limit < 0:
            raise ValueError("time_limit must be non-negative")


@dataclass(frozen=True)
class Improvement:
    elapsed: float
    k: int  # radius of the accepting query; 1 for a swap move
    move: str  # "swap" | "window" | "multi_window" | <baseline-specific>
    objective: Objective


@dataclass(frozen=True)
class Query:
    k: int
    move: str
    improved: bool


@dataclass
class RunReport:
    schedule: tuple
    objective: Objective
    trajectory: list = field(default_factory=list)
    termination: str = "time-limit"  # "time-limit" | "k-exhausted" | "iterations"
    queries: list = field(default_factory=list)
    tried_k: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schedule": list(self.schedule),
            "objective": {"tardiness": self.objective.tardiness,
                          "makespan": self.objective.makespan},
            "trajectory": [
                {"elapsed": e.elapsed, "k": e.k, "move": e.move,
                 "tardiness": e.objective.tardiness, "makespan": e.objective.makespan}
                for e in self.trajectory
            ],
            "termination": self.termination,
        }


def run(instance: Instance, start: Sequence[int], config: StrategyConfig = StrategyConfig(),
        clock: Callable[[], float] = time.perf_counter) -> RunReport:
    """Climb from ``start`` until the time budget runs out or ``k`` passes ``k_max``.

    Each round first tries a 1-swap improvement (``+Swap`` variants), then the
    window or multi-window neighborhood of radius ``k``.  Any accepted
    improvement resets ``k`` to ``k_init``; an unsuccessful window query
    increments it.  Time is checked between queries only.
    """
    order = check_schedule(instance, start)
    n = len(order)
    k_max = n if config.k_max is None else config.k_max
    use_swap = config.variant.endswith("swap")
    multi = config.variant.startswith("mw")
    move = "multi_window" if multi else "window"

    t0 = clock()
    best = evaluate(instance, order).objective
    report = RunReport(order, best, termination="k-exhausted")
    k = config.k_init

    def elapsed():
        return clock() - t0

    while True:
        if elapsed() >= config.time_limit:
            report.termination = "time-limit"
            break
        if k > k_max:
            break
        if use_swap:
            cand = improve_swap(instance, order, 1)
            report.queries.append(Query(1, "swap", cand is not None))
            if cand is not None:
                order, best = cand, evaluate(instance, cand).objective
                report.trajectory.append(Improvement(elapsed(), 1, "swap", best))
                k = config.k_init
                continue
        if multi:
            cand = improve_multi_window(instance, order, k)
        else:
            cand = improve_window(instance, order, k, first_improvement=config.first_improvement)
        report.queries.append(Query(k, move, cand is not None))
        if k not in report.tried_k:
            report.tried_k.append(k)
        if cand is None:
            k += 1
        else:
            order, best = cand, evaluate(instance, cand).objective
            report.trajectory.append(Improvement(elapsed(), k, move, best))
            k = config.k_init
    report.schedule, report.objective = order, best
    return report


def counting_clock(step: float = 1.0) -> Callable[[], float]:
    """Deterministic clock advancing by ``step`` per call, for reproducible reports."""
    state = [0.0]

    def tick():
        state[0] += step
        return state[0]
    return tick
