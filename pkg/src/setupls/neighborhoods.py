"""Improvement searches inside the four distance neighborhoods.

Each ``improve_*`` function returns a schedule that is strictly better than
``current`` (lexicographic tardiness, then makespan) and lies within distance
``k`` under the matching measure, or ``None`` when the search finds nothing.
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .internal_mm import _pareto_add, edds_frontiers, traceback
from .model import Instance, Objective, check_schedule, evaluate

Schedule = tuple


class _Timeline:
    """Prefix data of the incumbent used to splice windows back in."""

    def __init__(self, instance: Instance, order: Sequence[int]):
        self.instance = instance
        self.order = order
        ev = evaluate(instance, order)
        self.objective = ev.objective
        n = len(order)
        due = np.array([instance.due[j] for j in order], dtype=np.int64)
        self.comp = list(ev.completion_times)
        comp = np.array(self.comp, dtype=np.int64)
        late = np.maximum(comp - due, 0)
        self.cum_tard = np.concatenate([[0], np.cumsum(late)]).tolist()  # tardiness of order[:i]
        self.slack = due - comp
        # min slack over order[s:]
        self.min_slack = np.minimum.accumulate(self.slack[::-1])[::-1].tolist() + [1 << 62]
        self.suffix_tard = (self.cum_tard[-1] - np.array(self.cum_tard)).tolist()
        proc = [instance.proc[j] for j in order]
        self.suffix_proc = (np.cumsum([0] + proc[::-1])[::-1]).tolist()  # proc of order[i:]
        self.types = [instance.types[j] for j in order]
        self.n = n

    def prefix(self, i: int) -> tuple[int, int, int]:
        """``(prev_type, end_time, tardiness)`` of ``order[:i]``."""
        if i == 0:
            return -1, 0, 0
        return self.types[i - 1], self.comp[i - 1], self.cum_tard[i]

    def suffix(self, s: int, end_type: int, time: int) -> tuple[int, int]:
        """``(tardiness, end_time)`` of the unchanged ``order[s:]`` run after ``(end_type, time)``."""
        if s == self.n:
            return 0, time
        setup = self.instance.setup_rows
        ts = self.types[s]
        delta = time + setup[end_type][ts] - self.comp[s - 1] - setup[self.types[s - 1]][ts]
        end = self.comp[-1] + delta
        if delta == 0:
            return self.suffix_tard[s], end
        if delta <= self.min_slack[s]:
            return 0, end
        late = delta - self.slack[s:]
        return int(late[late > 0].sum()), end


def improve_window(instance: Instance, current: Sequence[int], k: int,
                   first_improvement: bool = True) -> Optional[Schedule]:
    """Rearrange one block of ``k`` consecutive jobs into a better schedule.

    Window starts are tried left to right; each window is solved exactly over
    its EDD arrangements (all start and end types at once, since the job
    before the window fixes the setup into it).  With ``first_improvement``
    the first improving window is returned, otherwise the best one.
    """
    order = check_schedule(instance, current)
    n = len(order)
    k = min(k, n)
    if k < 2:
        return None
    line = _Timeline(instance, order)
    cur = line.objective
    best_obj, best_sched = cur, None
    for i in range(n - k + 1):
        prev_type, start, pre_tard = line.prefix(i)
        s = i + k
        bound = (best_obj[0] - pre_tard, best_obj[1])
        fr = edds_frontiers(instance, order[i:s], [(prev_type, 0, start, None)],
                            bound=bound, tail_proc=line.suffix_proc[s])
        win_obj = win_entry = None
        for end_type, front in fr.by_type.items():
            for entry in front:
                tard, end = line.suffix(s, end_type, entry[1])
                obj = Objective(pre_tard + entry[0] + tard, end)
                if win_obj is None or obj < win_obj:
                    win_obj, win_entry = obj, entry
        if win_obj is not None and win_obj < best_obj:
            window, _ = traceback(win_entry)
            best_obj, best_sched = win_obj, order[:i] + window + order[s:]
            if first_improvement:
                return best_sched
    return best_sched


def improve_multi_window(instance: Instance, current: Sequence[int], k: int) -> Optional[Schedule]:
    """Best schedule reachable by rearranging disjoint blocks of at most ``k`` jobs.

    Dynamic program over cut positions: ``T[i]`` holds, per end type, the
    Pareto frontier of ``(tardiness, time)`` over rearrangements of
    ``order[:i]`` whose last block ends at ``i``.  The DP returns the
    neighborhood optimum; it is reported only if strictly better.
    """
    order = check_schedule(instance, current)
    n = len(order)
    k = min(k, n)
    if k < 2:
        return None
    line = _Timeline(instance, order)
    cur = line.objective
    bound = tuple(cur)
    table: list[list] = [[] for _ in range(n + 1)]
    table[0] = [(-1, 0, 0, None)]
    for i in range(1, n + 1):
        fronts: dict[int, list] = {}
        for j in range(max(0, i - k), i):
            seeds = table[j]
            if not seeds:
                continue
            fr = edds_frontiers(instance, order[j:i], seeds, bound=bound,
                                tail_proc=line.suffix_proc[i])
            for end_type, front in fr.by_type.items():
                dest = fronts.setdefault(end_type, [])
                for entry in front:
                    _pareto_add(dest, entry)
        table[i] = [(ty, e[0], e[1], e) for ty in sorted(fronts) for e in fronts[ty]]
    best = None
    for _, tard, time, entry in table[n]:
        if best is None or (tard, time) < (best[0], best[1]):
            best = entry
    if best is None or Objective(best[0], best[1]) >= cur:
        return None
    blocks = []
    entry = best
    while entry is not None:
        block, entry = traceback(entry)
        blocks.append(block)
    return tuple(j for block in reversed(blocks) for j in block)


class _Scorer:
    """Objective of neighbors of one incumbent, re-evaluated from the first changed position."""

    def __init__(self, instance: Instance, order: Sequence[int]):
        self.instance = instance
        self.order = order
        line = _Timeline(instance, order)
        self.objective = line.objective
        self.comp = line.comp
        self.cum_tard = line.cum_tard
        self.types = line.types

    def score(self, cand: Sequence[int], lo: int, exact: bool = False) -> Objective:
        """Objective of ``cand``, which agrees with the incumbent before ``lo``.

        Unless ``exact``, evaluation stops once tardiness exceeds the
        incumbent's, returning a partial (but already worse) value.
        """
        inst = self.instance
        proc, due, types, setup = inst.proc, inst.due, inst.types, inst.setup_rows
        cap = (1 << 62) if exact else self.objective[0]
        if lo == 0:
            prev, time, tard = -1, 0, 0
        else:
            prev, time, tard = self.types[lo - 1], self.comp[lo - 1], self.cum_tard[lo]
        for idx in range(lo, len(cand)):
            j = cand[idx]
            ty = types[j]
            if prev >= 0:
                time += setup[prev][ty]
            time += proc[j]
            if time > due[j]:
                tard += time - due[j]
                if tard > cap:
                    return Objective(tard, time)  # already worse; exact value not needed
            prev = ty
        return Objective(tard, time)


def swap_moves(n: int):
    for a in range(n):
        for b in range(a + 1, n):
            yield a, b


def insert_moves(n: int):
    for a in range(n):
        for b in range(n):
            if b != a:
                yield a, b


def apply_swap(order: tuple, move) -> tuple:
    a, b = move
    out = list(order)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def apply_insert(order: tuple, move) -> tuple:
    a, b = move
    out = list(order)
    job = out.pop(a)
    out.insert(b, job)
    return tuple(out)


def _first_diff(a, b) -> int:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return len(a)


def _improve_by_moves(instance, current, k, moves, apply) -> Optional[Schedule]:
    order = check_schedule(instance, current)
    n = len(order)
    if k < 1 or n < 2:
        return None
    scorer = _Scorer(instance, order)
    cur = scorer.objective
    seen = {order}
    level = [order]
    for depth in range(k):
        nxt = []
        for base in level:
            for move in moves(n):
                cand = apply(base, move)
                if cand in seen:
                    continue
                seen.add(cand)
                lo = min(move) if base is order else _first_diff(order, cand)
                if scorer.score(cand, lo) < cur:
                    return cand
                if depth + 1 < k:
                    nxt.append(cand)
        level = nxt
    return None


def improve_swap(instance: Instance, current: Sequence[int], k: int = 1) -> Optional[Schedule]:
    """First strictly better schedule within ``k`` transpositions (breadth-first, deduplicated)."""
    return _improve_by_moves(instance, current, k, swap_moves, apply_swap)


def improve_insert(instance: Instance, current: Sequence[int], k: int = 1) -> Optional[Schedule]:
    """First strictly better schedule within ``k`` remove-and-reinsert moves."""
    return _improve_by_moves(instance, current, k, insert_moves, apply_insert)


IMPROVERS = {
    "window": improve_window,
    "multi_window": improve_multi_window,
    "swap": improve_swap,
    "insert": improve_insert,
}
