"""Per-type earliest-due-date chains and the greedy starting schedules DD, SM and TM."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import Instance, Objective

MAX_BLOCK_TYPES = 10


class CapacityError(RuntimeError):
    """The request exceeds a hard size guard (block-order enumeration, oracle, ...)."""


@dataclass(frozen=True)
class EddChain:
    type_id: int
    job_ids: tuple[int, ...]


def edd_key(instance: Instance, j: int) -> tuple[int, int]:
    return instance.due[j], j


def edd_chains(instance: Instance, jobs=None) -> list[EddChain]:
    """One chain per occurring type, sorted by deadline (no deadline last), ties by job id."""
    if jobs is None:
        jobs = range(instance.n)
    grouped: dict[int, list[int]] = {}
    for j in jobs:
        grouped.setdefault(instance.types[j], []).append(j)
    return [EddChain(ty, tuple(sorted(js, key=lambda j: edd_key(instance, j))))
            for ty, js in sorted(grouped.items())]


def start_dd(instance: Instance) -> tuple[int, ...]:
    """All jobs by deadline, ties by job id (a stable sort of the input order)."""
    due = instance.due
    return tuple(sorted(range(instance.n), key=lambda j: (due[j], j)))


def _blocks(instance: Instance):
    chains = edd_chains(instance)
    if len(chains) > MAX_BLOCK_TYPES:
        raise CapacityError(
            f"{len(chains)} types exceed the block-order enumeration limit of {MAX_BLOCK_TYPES}")
    return chains


def _schedule_from_blocks(chains, block_order) -> tuple[int, ...]:
    return tuple(j for b in block_order for j in chains[b].job_ids)


def _search_block_orders(instance: Instance, chains, cost_of_block):
    """Depth-first search over block orders in lexicographic type order.

    ``cost_of_block(b, prev_type, time)`` returns ``(extra_tardiness, new_time)``.
    Returns the first order with the strictly smallest (tardiness, makespan).
    Branches whose lower bound cannot beat the incumbent are cut; a tie never
    replaces the incumbent, so pruning on equality keeps the lexicographic rule.
    """
    m = len(chains)
    block_proc = [sum(instance.proc[j] for j in c.job_ids) for c in chains]
    best = [None, None]  # objective, order
    used = [False] * m
    order: list[int] = []

    def dfs(prev_type, tard, time, remaining):
        if best[0] is not None:
            lb = (tard, time + remaining)
            if lb >= tuple(best[0]):
                return
        if len(order) == m:
            best[0] = Objective(tard, time)
            best[1] = tuple(order)
            return
        for b in range(m):
            if used[b]:
                continue
            extra, new_time = cost_of_block(b, prev_type, time)
            used[b] = True
            order.append(b)
            dfs(chains[b].type_id, tard + extra, new_time, remaining - block_proc[b])
            order.pop()
            used[b] = False

    dfs(None, 0, 0, sum(block_proc))
    return best[0], best[1]


def start_sm(instance: Instance) -> tuple[int, ...]:
    """Type blocks (EDD inside) in the order with the least total setup time."""
    chains = _blocks(instance)
    setup = instance.setup_rows
    block_proc = [sum(instance.proc[j] for j in c.job_ids) for c in chains]

    def cost(b, prev_type, time):
        s = 0 if prev_type is None else setup[prev_type][chains[b].type_id]
        return 0, time + s + block_proc[b]

    _, order = _search_block_orders(instance, chains, cost)
    return _schedule_from_blocks(chains, order)


def start_tm(instance: Instance) -> tuple[int, ...]:
    """Type blocks (EDD inside) in the order with the least (tardiness, makespan)."""
    chains = _blocks(instance)
    setup = instance.setup_rows
    offsets, dues = [], []
    for c in chains:
        offsets.append(np.cumsum([instance.proc[j] for j in c.job_ids], dtype=np.int64))
        dues.append(np.array([instance.due[j] for j in c.job_ids], dtype=np.int64))

    def cost(b, prev_type, time):
        start = time + (0 if prev_type is None else setup[prev_type][chains[b].type_id])
        late = offsets[b] + (start - dues[b])
        return int(late[late > 0].sum()), start + int(offsets[b][-1])

    _, order = _search_block_orders(instance, chains, cost)
    return _schedule_from_blocks(chains, order)


STARTS = {"dd": start_dd, "sm": start_sm, "tm": start_tm}


def random_edds(instance: Instance, rng: np.random.Generator, chains=None) -> tuple[int, ...]:
    """Uniformly random interleaving of the EDD chains."""
    if chains is None:
        chains = edd_chains(instance)
    labels = np.concatenate([np.full(len(c.job_ids), i) for i, c in enumerate(chains)])
    rng.shuffle(labels)
    return decode_type_sequence(chains, labels)


def decode_type_sequence(chains, labels) -> tuple[int, ...]:
    """Map the i-th occurrence of chain label ``c`` to the i-th job of chain ``c``."""
    cursor = [0] * len(chains)
    out = []
    for c in labels:
        c = int(c)
        out.append(chains[c].job_ids[cursor[c]])
        cursor[c] += 1
    return tuple(out)
