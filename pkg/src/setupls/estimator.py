"""Estimator-style wrapper so solvers plug into ``get_params``/``set_params``/``clone`` tooling."""
from __future__ import annotations

import math

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import baselines, hillclimb
from ._validation import check_instance
from .edds import STARTS
from .model import evaluate


class ScheduleSearch(BaseEstimator):
    """Minimize (tardiness, makespan) on one instance.

    Parameters
    ----------
    algo : {"win", "win-swap", "mw", "mw-swap", "pils1", "gad", "mga"}
    start : {"dd", "sm", "tm"}
        Starting schedule for the hill climbers and PILS1.
    k_init, k_max : int
        Window radius schedule of the hill climbers.
    time_limit : float
        Seconds.
    max_iters : int or None
        Iteration (PILS1) or generation (GA) cap.
    population, seed :
        Baseline settings.

    Attributes
    ----------
    schedule_ : tuple
    objective_ : Objective
    report_ : RunReport
    """

    def __init__(self, algo="win-swap", start="dd", k_init=4, k_max=None, time_limit=math.inf,
                 first_improvement=True, max_iters=None, population=100, seed=0):
        self.algo = algo
        self.start = start
        self.k_init = k_init
        self.k_max = k_max
        self.time_limit = time_limit
        self.first_improvement = first_improvement
        self.max_iters = max_iters
        self.population = population
        self.seed = seed

    def fit(self, X, y=None, setup=None):
        inst = check_instance(X, setup)
        if self.start not in STARTS:
            raise ValueError(f"unknown start {self.start!r}")
        start = STARTS[self.start](inst)
        if self.algo in hillclimb.VARIANTS:
            cfg = hillclimb.StrategyConfig(self.algo, self.k_init, self.k_max, self.time_limit,
                                           self.first_improvement)
            report = hillclimb.run(inst, start, cfg)
        elif self.algo == "pils1":
            report = baselines.run_pils1(inst, start, self.time_limit, self.seed, self.max_iters)
        elif self.algo in ("gad", "mga"):
            cfg = baselines.GaConfig(population=self.population, seed=self.seed)
            fn = baselines.run_gad if self.algo == "gad" else baselines.run_mga
            report = fn(inst, cfg, self.time_limit, self.max_iters)
        else:
            raise ValueError(f"unknown algo {self.algo!r}")
        self.instance_ = inst
        self.start_schedule_ = start
        self.report_ = report
        self.schedule_ = report.schedule
        self.objective_ = report.objective
        return self

    def predict(self, X=None, setup=None):
        """The fitted schedule; ``X``, if given, must be the fitted instance."""
        check_is_fitted(self, "schedule_")
        if X is not None and check_instance(X, setup) != self.instance_:
            raise ValueError("predict() got a different instance than fit()")
        return self.schedule_

    def fit_predict(self, X, y=None, setup=None):
        return self.fit(X, setup=setup).schedule_

    def score(self, X=None, y=None, setup=None):
        """Negative fitness ``makespan + mu * tardiness`` (larger is better)."""
        check_is_fitted(self, "schedule_")
        inst = self.instance_ if X is None else check_instance(X, setup)
        ev = evaluate(inst, self.schedule_)
        return -(ev.makespan + baselines.fitness_weight(inst) * ev.total_tardiness)
