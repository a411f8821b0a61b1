"""Comparison baselines: PILS1 and two genetic algorithms (GAD, MGA).

Every stochastic choice is drawn from one ``numpy.random.Generator`` per run,
so a fixed seed (and a deterministic clock or an iteration cap) reproduces a
run exactly.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .edds import decode_type_sequence, edd_chains, random_edds
from .hillclimb import Improvement, RunReport
from .model import Instance, Objective, check_schedule, objective
from .neighborhoods import _Scorer, apply_insert, apply_swap, insert_moves, swap_moves


def dominates(a: Objective, b: Objective) -> bool:
    """``a`` is no worse than ``b`` in both components and better in one."""
    return a[0] <= b[0] and a[1] <= b[1] and (a[0] < b[0] or a[1] < b[1])


class NdArchive:
    """Schedules with pairwise non-dominated (tardiness, makespan) objectives."""

    def __init__(self):
        self.members: list[tuple[tuple, Objective]] = []

    def __len__(self):
        return len(self.members)

    def accepts(self, obj: Objective) -> bool:
        # equal objectives are refused so the archive cannot fill with ties
        return not any(m[0] <= obj[0] and m[1] <= obj[1] for _, m in self.members)

    def add(self, schedule: tuple, obj: Objective) -> bool:
        if not self.accepts(obj):
            return False
        self.members = [(s, m) for s, m in self.members if not dominates(obj, m)]
        self.members.append((schedule, obj))
        return True

    def best(self) -> tuple[tuple, Objective]:
        """Member with the lowest tardiness, ties broken by makespan."""
        return min(self.members, key=lambda sm: sm[1])

    def is_valid(self) -> bool:
        objs = [m for _, m in self.members]
        return not any(dominates(a, b) for a in objs for b in objs)

    def pick(self, rng: np.random.Generator) -> tuple:
        return self.members[int(rng.integers(len(self.members)))][0]


def _stop(clock, t0, time_limit, it, max_iters) -> Optional[str]:
    if max_iters is not None and it >= max_iters:
        return "iterations"
    if clock() - t0 >= time_limit:
        return "time-limit"
    return None


def _scan_neighbors(instance, base, archive):
    """First swap-1, then insert-1 neighbor of ``base`` the archive accepts."""
    scorer = _Scorer(instance, base)
    n = len(base)
    for moves, apply in ((swap_moves, apply_swap), (insert_moves, apply_insert)):
        for move in moves(n):
            cand = apply(base, move)
            obj = scorer.score(cand, min(move), exact=True)
            if archive.accepts(obj):
                return cand, obj
    return None


def run_pils1(instance: Instance, start: Sequence[int], time_limit: float = math.inf,
              seed: int = 0, max_iters: Optional[int] = None,
              clock: Callable[[], float] = time.perf_counter,
              on_insert: Optional[Callable[[NdArchive], None]] = None) -> RunReport:
    """Archive-based swap/insert local search with growing reversal perturbations.

    ``on_insert`` is called with the archive after every successful insertion.
    """
    rng = np.random.default_rng(seed)
    order = check_schedule(instance, start)
    n = len(order)
    t0 = clock()
    archive = NdArchive()
    archive.add(order, objective(instance, order))
    best = archive.best()
    report = RunReport(best[0], best[1])
    p = 4
    cand = archive.pick(rng)
    it = 0
    while True:
        reason = _stop(clock, t0, time_limit, it, max_iters)
        if reason:
            report.termination = reason
            break
        it += 1
        found = _scan_neighbors(instance, cand, archive)
        if found is not None:
            archive.add(*found)
            if on_insert is not None:
                on_insert(archive)
            p = 4
            new_best = archive.best()
            if new_best[1] < best[1]:
                best = new_best
                report.trajectory.append(Improvement(clock() - t0, p, "pils1", best[1]))
            cand = archive.pick(rng)
        else:
            p += 1
            base = archive.pick(rng)
            length = min(p, n)
            lo = int(rng.integers(n - length + 1))
            cand = base[:lo] + base[lo:lo + length][::-1] + base[lo + length:]
        report.queries.append(p)
    report.schedule, report.objective = best
    return report


@dataclass(frozen=True)
class GaConfig:
    population: int = 100
    crossover_rate: float = 0.9
    mutation_rate: float = 0.01
    selection_rate: float = 0.2
    seed: int = 0

    def __post_init__(self):
        if self.population < 2:
            raise ValueError("population must be at least 2")
        for name in ("crossover_rate", "mutation_rate", "selection_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")


def fitness_weight(instance: Instance) -> int:
    """Tardiness weight large enough that fitness orders schedules lexicographically."""
    max_setup = max(max(row) for row in instance.setup)
    return instance.n * (max(instance.proc) + max_setup) + 1


def fitness(instance: Instance, schedule: Sequence[int], mu: Optional[int] = None) -> int:
    if mu is None:
        mu = fitness_weight(instance)
    obj = objective(instance, schedule)
    return obj.makespan + mu * obj.tardiness


def order_crossover(a: tuple, b: tuple, lo: int, hi: int) -> tuple:
    """Keep ``a[lo:hi]`` in place; fill the other slots with the rest of ``b`` in ``b``'s order."""
    segment = a[lo:hi]
    keep = set(segment)
    rest = [g for g in b if g not in keep]
    return tuple(rest[:lo]) + segment + tuple(rest[lo:])


def type_crossover(a: Sequence[int], b: Sequence[int], chosen: set) -> tuple:
    """Genes of ``chosen`` types stay where ``b`` has them; other slots take ``a``'s remaining genes in order."""
    fill = iter(g for g in a if g not in chosen)
    return tuple(g if g in chosen else next(fill) for g in b)


def _ga_loop(instance, config, time_limit, max_generations, clock, init, breed, decode):
    rng = np.random.default_rng(config.seed)
    mu = fitness_weight(instance)
    t0 = clock()
    pop = [init(rng) for _ in range(config.population)]
    fit = [fitness(instance, decode(c), mu) for c in pop]
    i_best = int(np.argmin(fit))
    best, best_fit = pop[i_best], fit[i_best]
    report = RunReport(decode(best), objective(instance, decode(best)))
    report.queries.append(best_fit)
    n_parents = max(2, int(round(config.selection_rate * config.population)))
    gen = 0
    while True:
        reason = _stop(clock, t0, time_limit, gen, max_generations)
        if reason:
            report.termination = reason
            break
        gen += 1
        ranked = sorted(range(len(pop)), key=fit.__getitem__)[:n_parents]
        kids = []
        for _ in range(config.population):
            i, j = rng.choice(len(ranked), size=2, replace=False)
            kids.append(breed(pop[ranked[i]], pop[ranked[j]], rng))
        kid_fit = [fitness(instance, decode(c), mu) for c in kids]
        keep = sorted(range(len(kids)), key=kid_fit.__getitem__)[:config.population - 1]
        pop = [best] + [kids[i] for i in keep]
        fit = [best_fit] + [kid_fit[i] for i in keep]
        i_best = int(np.argmin(fit))
        if fit[i_best] < best_fit:
            best, best_fit = pop[i_best], fit[i_best]
            report.trajectory.append(
                Improvement(clock() - t0, gen, "ga", objective(instance, decode(best))))
        report.queries.append(best_fit)
    report.schedule = decode(best)
    report.objective = objective(instance, report.schedule)
    return report


def run_gad(instance: Instance, config: GaConfig = GaConfig(), time_limit: float = math.inf,
            max_generations: Optional[int] = None,
            clock: Callable[[], float] = time.perf_counter) -> RunReport:
    """Permutation GA: random EDD start population, order crossover, single-swap mutation."""
    chains = edd_chains(instance)
    n = instance.n

    def init(rng):
        return random_edds(instance, rng, chains)

    def breed(a, b, rng):
        if rng.random() < config.crossover_rate:
            lo, hi = sorted(int(x) for x in rng.choice(n + 1, size=2, replace=False))
            child = order_crossover(a, b, lo, hi)
        else:
            child = a
        if rng.random() < config.mutation_rate and n > 1:
            x, y = (int(v) for v in rng.choice(n, size=2, replace=False))
            child = apply_swap(child, (x, y))
        return child

    return _ga_loop(instance, config, time_limit, max_generations, clock, init, breed,
                    lambda c: c)


def run_mga(instance: Instance, config: GaConfig = GaConfig(), time_limit: float = math.inf,
            max_generations: Optional[int] = None,
            clock: Callable[[], float] = time.perf_counter) -> RunReport:
    """Type-sequence GA; every decoded chromosome is an EDD schedule."""
    chains = edd_chains(instance)
    m = len(chains)
    labels = tuple(i for i, c in enumerate(chains) for _ in c.job_ids)
    n = len(labels)

    def init(rng):
        seq = np.array(labels)
        rng.shuffle(seq)
        return tuple(int(x) for x in seq)

    def breed(a, b, rng):
        if rng.random() < config.crossover_rate:
            size = int(rng.integers(1, m + 1))
            chosen = {int(x) for x in rng.choice(m, size=size, replace=False)}
            child = type_crossover(a, b, chosen)
        else:
            child = a
        if rng.random() < config.mutation_rate and n > 1:
            lo, hi = sorted(int(v) for v in rng.choice(n, size=2, replace=False))
            part = np.array(child[lo:hi + 1])
            rng.shuffle(part)
            child = child[:lo] + tuple(int(x) for x in part) + child[hi + 1:]
        return child

    return _ga_loop(instance, config, time_limit, max_generations, clock, init, breed,
                    lambda c: decode_type_sequence(chains, c))
