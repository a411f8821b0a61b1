"""Best earliest-due-date arrangement of a window of jobs.

The dynamic program walks over *prefix vectors*: entry ``p[c]`` says how many
jobs of EDD chain ``c`` are already placed.  A state is a prefix vector plus
the type of the last placed job.  Each state keeps a Pareto frontier of
``(tardiness, completion_time)`` pairs, so the search is exact for the
lexicographic objective inside the space of EDD arrangements, and it
collapses to a single value per state whenever all tardiness is zero.

Vectors are encoded in mixed radix (``stride[c] = prod(q[:c] + 1)``), so
plain increasing integer order visits every vector after all of its
predecessors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .edds import edd_chains
from .model import Instance, InputError, Objective

# Frontier entries are tuples ``(tardiness, time, job, parent)``.  Seeds use
# ``job == -1`` and carry a caller payload in ``parent``.
_SEED = -1


@dataclass(frozen=True)
class InternalMmQuery:
    window_jobs: frozenset
    suffix: tuple = ()
    start_type: int = 0
    end_type: int = 0
    theta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "window_jobs", frozenset(self.window_jobs))
        object.__setattr__(self, "suffix", tuple(self.suffix))
        if self.theta < 0:
            raise InputError("theta must be non-negative")
        if self.window_jobs & set(self.suffix):
            raise InputError("window jobs and suffix jobs overlap")


@dataclass(frozen=True)
class InternalMmResult:
    objective: Objective
    window: tuple
    cells: int


@dataclass
class Frontiers:
    """Final DP row: Pareto frontier per end type, plus bookkeeping."""
    by_type: dict
    cells: int


def _pareto_add(front: list, entry: tuple) -> None:
    tard, time = entry[0], entry[1]
    for other in front:
        if other[0] <= tard and other[1] <= time:
            return
    front[:] = [o for o in front if o[0] < tard or o[1] < time]
    front.append(entry)


def edds_frontiers(
    instance: Instance,
    jobs: Iterable[int],
    seeds: Sequence[tuple],
    first_type: Optional[int] = None,
    bound: Optional[tuple] = None,
    tail_proc: int = 0,
) -> Frontiers:
    """Run the prefix-vector DP over the EDD chains of ``jobs``.

    ``seeds`` are ``(prev_type, tardiness, time, payload)`` tuples describing
    what precedes the window; ``prev_type=-1`` means nothing does (no setup
    before the first job).  ``first_type`` forces the type of the first job.

    With ``bound=(T, M)``, states that cannot finish strictly below ``(T, M)``
    are dropped; ``tail_proc`` is processing time known to follow the window.
    """
    proc, due, types, setup = instance.proc, instance.due, instance.types, instance.setup_rows
    chains = [c.job_ids for c in edd_chains(instance, jobs)]
    chain_type = [types[c[0]] for c in chains]
    m = len(chains)
    q = [len(c) for c in chains]
    stride = []
    size = 1
    for qc in q:
        stride.append(size)
        size *= qc + 1
    total_proc = sum(proc[j] for c in chains for j in c)
    if bound is None:
        max_tard = max_time = None
    else:
        max_tard, max_time = bound

    table: list = [None] * size
    done = [0] * size  # processing time already placed, per vector
    cells = 1

    def push(vec2, c2, front, add, d, job, prev_time_done):
        nonlocal cells
        row = table[vec2]
        if row is None:
            row = table[vec2] = [None] * m
            done[vec2] = prev_time_done + proc[job]
        target = row[c2]
        rest = total_proc - done[vec2] + tail_proc
        for entry in front:
            time = entry[1] + add
            tard = entry[0] + (time - d if time > d else 0)
            if max_tard is not None and (
                    tard > max_tard or (tard == max_tard and time + rest >= max_time)):
                continue
            new = (tard, time, job, entry)
            if target is None:
                target = row[c2] = [new]
                cells += 1
            else:
                _pareto_add(target, new)

    base: dict[int, list] = {}
    for prev_type, tard, time, payload in seeds:
        _pareto_add(base.setdefault(prev_type, []), (tard, time, _SEED, payload))
    for prev_type, front in sorted(base.items()):
        for c2 in range(m):
            if first_type is not None and chain_type[c2] != first_type:
                continue
            job = chains[c2][0]
            add = (setup[prev_type][chain_type[c2]] if prev_type >= 0 else 0) + proc[job]
            push(stride[c2], c2, front, add, due[job], job, 0)

    p = [0] * m
    for vec in range(1, size - 1):
        row = table[vec]
        if row is None:
            continue
        rem = vec
        for c in range(m):
            p[c] = rem % (q[c] + 1)
            rem //= q[c] + 1
        placed = done[vec]
        for c in range(m):
            front = row[c]
            if not front:
                continue
            srow = setup[chain_type[c]]
            for c2 in range(m):
                pc2 = p[c2]
                if pc2 == q[c2]:
                    continue
                job = chains[c2][pc2]
                push(vec + stride[c2], c2, front, srow[chain_type[c2]] + proc[job],
                     due[job], job, placed)

    final = table[size - 1] if m else None
    by_type = {}
    if final is not None:
        for c in range(m):
            if final[c]:
                by_type[chain_type[c]] = final[c]
    return Frontiers(by_type, cells)


def traceback(entry: tuple) -> tuple[tuple, object]:
    """Jobs placed along ``entry``'s path and the payload of its seed."""
    jobs = []
    while entry[2] != _SEED:
        jobs.append(entry[2])
        entry = entry[3]
    jobs.reverse()
    return tuple(jobs), entry[3]


def append_sequence(instance: Instance, sequence: Sequence[int], prev_type: int,
                    time: int) -> tuple[int, int]:
    """``(tardiness, end_time)`` of ``sequence`` run after a job of ``prev_type`` ending at ``time``."""
    proc, due, types, setup = instance.proc, instance.due, instance.types, instance.setup_rows
    tard = 0
    for j in sequence:
        ty = types[j]
        if prev_type >= 0:
            time += setup[prev_type][ty]
        time += proc[j]
        if time > due[j]:
            tard += time - due[j]
        prev_type = ty
    return tard, time


def solve_internal_mm(instance: Instance, query: InternalMmQuery) -> Optional[InternalMmResult]:
    """Best EDD arrangement of ``query.window_jobs`` with forced first and last types.

    The timeline starts at ``theta``; the fixed ``suffix`` follows the window.
    The objective counts tardiness of window and suffix jobs and the end time
    of the last job.  Returns ``None`` when no arrangement has the requested
    boundary types.
    """
    jobs = sorted(query.window_jobs)
    if not jobs:
        return None
    window_types = {instance.types[j] for j in jobs}
    if query.start_type not in window_types or query.end_type not in window_types:
        return None
    fr = edds_frontiers(instance, jobs, [(-1, 0, query.theta, None)], first_type=query.start_type)
    front = fr.by_type.get(query.end_type)
    if not front:
        return None
    best = best_entry = None
    for entry in front:
        tard, end = append_sequence(instance, query.suffix, query.end_type, entry[1])
        obj = Objective(entry[0] + tard, end)
        if best is None or obj < best:
            best, best_entry = obj, entry
    window, _ = traceback(best_entry)
    return InternalMmResult(best, window, fr.cells)


def cell_bound(instance: Instance, jobs: Iterable[int]) -> int:
    """``t * prod(q_c + 1)``: the state-count bound of the prefix-vector DP."""
    counts: dict[int, int] = {}
    for j in jobs:
        counts[instance.types[j]] = counts.get(instance.types[j], 0) + 1
    out = len(counts)
    for c in counts.values():
        out *= c + 1
    return out
