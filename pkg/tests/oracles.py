"""Independent brute-force oracles.

Nothing here imports the DP, the neighborhood code or ``model.evaluate``;
schedules are scored by a separate, straight-line recurrence.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from setupls.model import Instance, Job


def score(instance: Instance, schedule, start_time=0, prev_type=None):
    """(tardiness, makespan) by the textbook completion-time recurrence."""
    time, tard, prev = start_time, 0, prev_type
    for j in schedule:
        job = instance.jobs[j]
        if prev is not None:
            time += instance.setup[prev][job.type_id]
        time += job.processing_time
        if job.deadline is not None:
            tard += max(time - job.deadline, 0)
        prev = job.type_id
    return tard, time


def in_chain_order(instance: Instance, arrangement) -> bool:
    """Same-type jobs appear sorted by (deadline, id), no deadline last."""
    last = {}
    for j in arrangement:
        job = instance.jobs[j]
        key = (float("inf") if job.deadline is None else job.deadline, j)
        if job.type_id in last and last[job.type_id] > key:
            return False
        last[job.type_id] = key
    return True


def internal_mm_bruteforce(instance, window_jobs, suffix, start_type, end_type, theta):
    best = None
    for perm in itertools.permutations(sorted(window_jobs)):
        if instance.jobs[perm[0]].type_id != start_type or instance.jobs[perm[-1]].type_id != end_type:
            continue
        if not in_chain_order(instance, perm):
            continue
        tard, time = score(instance, perm, start_time=theta)
        t2, time = score(instance, suffix, start_time=time, prev_type=end_type) if suffix else (0, time)
        obj = (tard + t2, time)
        if best is None or obj < best:
            best = obj
    return best


def window_neighborhood_best(instance, order, k):
    """Best objective over every rearrangement of every k consecutive jobs."""
    n = len(order)
    k = min(k, n)
    best = score(instance, order)
    for i in range(n - k + 1):
        for perm in itertools.permutations(order[i:i + k]):
            cand = order[:i] + perm + order[i + k:]
            obj = score(instance, cand)
            if obj < best:
                best = obj
    return best


def multi_window_neighborhood_best(instance, order, k):
    """Best objective over all block decompositions (blocks <= k) with all block permutations."""
    n = len(order)
    best = [score(instance, order)]

    def rec(pos, prev, time, tard):
        if pos == n:
            if (tard, time) < best[0]:
                best[0] = (tard, time)
            return
        for length in range(1, min(k, n - pos) + 1):
            for perm in itertools.permutations(order[pos:pos + length]):
                t, tr, pv = time, tard, prev
                for j in perm:
                    job = instance.jobs[j]
                    if pv is not None:
                        t += instance.setup[pv][job.type_id]
                    t += job.processing_time
                    if job.deadline is not None:
                        tr += max(t - job.deadline, 0)
                    pv = job.type_id
                rec(pos + length, pv, t, tr)

    rec(0, None, 0, 0)
    return best[0]


def bfs_distance(a, b, neighbors):
    """Shortest path length from ``a`` to ``b`` under single moves."""
    a, b = tuple(a), tuple(b)
    dist = {a: 0}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            return dist[cur]
        for nxt in neighbors(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    raise AssertionError("unreachable")


def swap_neighbors(p):
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            q = list(p)
            q[a], q[b] = q[b], q[a]
            yield tuple(q)


def insert_neighbors(p):
    for a in range(len(p)):
        rest = p[:a] + p[a + 1:]
        for b in range(len(p)):
            if b != a:
                yield rest[:b] + (p[a],) + rest[b:]


def decomposes(a, b, k) -> bool:
    """The recursive k-interval definition, checked literally."""
    n = len(a)
    if n <= k:
        return True
    for i in range(n - k, n):  # last block holds 1..k jobs
        if set(a[i:]) == set(b[i:]) and decomposes(a[:i], b[:i], k):
            return True
    return False


def random_metric(t, rng, low=1, high=20):
    m = rng.integers(low, high + 1, size=(t, t))
    np.fill_diagonal(m, 0)
    for via in range(t):
        m = np.minimum(m, m[:, [via]] + m[[via], :])
    return m.tolist()


def random_instance(rng, n, t, deadlines="mixed", max_proc=9):
    setup = random_metric(t, rng)
    jobs = []
    for _ in range(n):
        p = int(rng.integers(0 if rng.random() < 0.1 else 1, max_proc + 1))
        ty = int(rng.integers(t))
        if deadlines == "none" or (deadlines == "mixed" and rng.random() < 0.3):
            d = None
        else:
            d = int(rng.integers(0, n * (max_proc + 10)))
        jobs.append(Job(p, d, ty))
    return Instance(tuple(jobs), setup)


def feasible_instance(rng, n, t, max_proc=9):
    """Random instance plus a random schedule that meets every deadline.

    Deadlines sit at the schedule's completion times plus random slack (some
    tight, some absent), so the schedule has tardiness 0.
    """
    setup = random_metric(t, rng)
    proc = [int(rng.integers(1, max_proc + 1)) for _ in range(n)]
    types = [int(rng.integers(t)) for _ in range(n)]
    order = tuple(int(x) for x in rng.permutation(n))
    time, prev, due = 0, None, [None] * n
    for j in order:
        if prev is not None:
            time += setup[prev][types[j]]
        time += proc[j]
        prev = types[j]
        r = rng.random()
        if r < 0.25:
            due[j] = None
        elif r < 0.5:
            due[j] = time
        else:
            due[j] = time + int(rng.integers(0, 15))
    inst = Instance(tuple(Job(p, d, ty) for p, d, ty in zip(proc, due, types)), setup)
    return inst, order
