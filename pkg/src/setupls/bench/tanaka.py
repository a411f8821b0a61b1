"""Adapting two-column (processing time, deadline) benchmark data to typed jobs."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from ..model import Instance, Job


def read_pairs(path) -> list[tuple[int, int]]:
    """Read ``processing_time deadline`` rows; extra columns and ``#`` comments are ignored."""
    pairs = []
    for raw in Path(path).read_text().splitlines():
        body = raw.split("#", 1)[0].replace(",", " ").split()
        if len(body) >= 2:
            pairs.append((int(body[0]), int(body[1])))
    return pairs


def metric_setup_matrix(t: int, rng: np.random.Generator, low: int = 20, high: int = 300) -> list[list[int]]:
    """Random asymmetric setup matrix closed under shortest paths, so the triangle inequality holds."""
    m = rng.integers(low, high + 1, size=(t, t)).astype(np.int64)
    np.fill_diagonal(m, 0)
    for via in range(t):
        m = np.minimum(m, m[:, [via]] + m[[via], :])
    return m.tolist()


def random_pairs(n: int, rng: np.random.Generator, tardiness_factor: float = 0.2,
                 due_range: float = 0.6, max_proc: int = 100) -> list[tuple[int, int]]:
    """Classic weighted-tardiness style data: ``p ~ U[1, max_proc]``,
    ``d ~ U[P(1 - TF - RDD/2), P(1 - TF + RDD/2)]`` with ``P = sum(p)``."""
    p = rng.integers(1, max_proc + 1, size=n)
    total = int(p.sum())
    lo = max(0, int(total * (1 - tardiness_factor - due_range / 2)))
    hi = max(lo, int(total * (1 - tardiness_factor + due_range / 2)))
    d = rng.integers(lo, hi + 1, size=n)
    return [(int(a), int(b)) for a, b in zip(p, d)]


def adapt_tanaka(pairs: Iterable[Sequence[int]], setup: Sequence[Sequence[int]],
                 type_count: Optional[int] = None, scale: int = 50, seed: int = 0,
                 name: str = "") -> Instance:
    """Scale each ``(p, d)`` by ``scale`` and draw a uniform random type per job."""
    pairs = [tuple(pr) for pr in pairs]
    if any(v < 0 for pr in pairs for v in pr):
        raise ValueError("processing times and deadlines must be non-negative")
    if type_count is None:
        type_count = len(setup)
    rng = np.random.default_rng(seed)
    types = rng.integers(type_count, size=len(pairs))
    jobs = tuple(Job(p * scale, d * scale, int(ty)) for (p, d), ty in zip(pairs, types))
    return Instance(jobs, setup, name)
