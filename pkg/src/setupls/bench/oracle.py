"""Exhaustive search over all permutations, for small instances."""
from __future__ import annotations

from dataclasses import dataclass

from ..edds import CapacityError
from ..model import Instance, Objective

MAX_ORACLE_JOBS = 10


@dataclass(frozen=True)
class OracleResult:
    objective: Objective
    schedule: tuple
    count: int  # number of optimal schedules


def oracle_optimal(instance: Instance) -> OracleResult:
    """Optimal objective, the lexicographically first optimal schedule, and the optimum count.

    Depth-first over permutations with prefix reuse.  Branches are cut only
    when they are strictly worse than the incumbent, so ties are all counted.
    """
    n = instance.n
    if n > MAX_ORACLE_JOBS:
        raise CapacityError(f"oracle refuses n={n} > {MAX_ORACLE_JOBS}")
    proc, due, types, setup = instance.proc, instance.due, instance.types, instance.setup_rows
    best = [None, None, 0]
    used = [False] * n
    prefix: list[int] = []

    def dfs(prev, time, tard, rest):
        if best[0] is not None and (tard, time + rest) > best[0]:
            return
        if len(prefix) == n:
            obj = (tard, time)
            if best[0] is None or obj < best[0]:
                best[0], best[1], best[2] = obj, tuple(prefix), 1
            elif obj == best[0]:
                best[2] += 1
            return
        for j in range(n):
            if used[j]:
                continue
            ty = types[j]
            end = time + (setup[prev][ty] if prev >= 0 else 0) + proc[j]
            late = end - due[j] if end > due[j] else 0
            used[j] = True
            prefix.append(j)
            dfs(ty, end, tard + late, rest - proc[j])
            prefix.pop()
            used[j] = False

    dfs(-1, 0, 0, sum(proc))
    return OracleResult(Objective(*best[0]), best[1], best[2])
