"""Distance measures between two schedules of the same job set."""
from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from .model import InputError


def _check_pair(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b) or sorted(a) != sorted(b):
        raise InputError("schedules do not permute the same job set")


def window_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Length of the smallest position range outside which ``a`` and ``b`` agree."""
    _check_pair(a, b)
    diff = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
    if not diff:
        return 0
    return diff[-1] - diff[0] + 1


def cut_points(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Indices ``i`` in ``[0, n]`` where ``a[:i]`` and ``b[:i]`` hold the same jobs."""
    _check_pair(a, b)
    cuts = [0]
    pending = 0  # jobs seen in exactly one of the two prefixes
    seen: dict[int, int] = {}
    for i, (x, y) in enumerate(zip(a, b), start=1):
        for job, side in ((x, 1), (y, 2)):
            mark = seen.get(job, 0)
            if mark and mark != side:
                pending -= 1
                seen[job] = 3
            elif not mark:
                pending += 1
                seen[job] = side
        if pending == 0:
            cuts.append(i)
    return cuts


def multi_window_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Smallest ``k`` such that ``a`` and ``b`` decompose into ``k``-intervals.

    Equal schedules are at distance 0.
    """
    cuts = cut_points(a, b)
    if list(a) == list(b):
        return 0
    return max(hi - lo for lo, hi in zip(cuts, cuts[1:]))


def swap_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Minimum number of transpositions turning ``a`` into ``b``."""
    _check_pair(a, b)
    where = {job: i for i, job in enumerate(b)}
    perm = [where[job] for job in a]
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return len(perm) - cycles


def insert_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Minimum number of remove-and-reinsert moves turning ``a`` into ``b``.

    Equals ``n`` minus the longest common subsequence, which for two
    permutations is a longest increasing subsequence.
    """
    _check_pair(a, b)
    where = {job: i for i, job in enumerate(b)}
    tails: list[int] = []
    for job in a:
        pos = where[job]
        k = bisect_left(tails, pos)
        if k == len(tails):
            tails.append(pos)
        else:
            tails[k] = pos
    return len(a) - len(tails)


DISTANCES = {
    "window": window_distance,
    "multi_window": multi_window_distance,
    "swap": swap_distance,
    "insert": insert_distance,
}
