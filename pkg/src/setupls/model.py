"""Problem data, validation and exact objective evaluation.

A job is a ``(processing_time, deadline, type_id)`` triple.  ``deadline=None``
means the job has no deadline.  All times are integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

# Internal stand-in for "no deadline" in the hot loops.  Never exposed.
NO_DEADLINE = 1 << 62


class InputError(ValueError):
    """Raised for malformed instances or schedules."""


@dataclass(frozen=True)
class Job:
    processing_time: int
    deadline: Optional[int]
    type_id: int

    def __post_init__(self):
        if self.processing_time < 0:
            raise InputError(f"negative processing time {self.processing_time}")
        if self.deadline is not None and self.deadline < 0:
            raise InputError(f"negative deadline {self.deadline}")
        if self.type_id < 0:
            raise InputError(f"negative type id {self.type_id}")


@dataclass(frozen=True)
class SetupViolation:
    kind: str  # "diagonal" | "triangle" | "negative" | "shape"
    types: tuple

    def __str__(self):
        return f"{self.kind} violation at {self.types}"


def validate_setup(matrix: Sequence[Sequence[int]]) -> list[SetupViolation]:
    """Return every violated setup-matrix constraint; empty iff the matrix is valid.

    Checks squareness, non-negativity, a zero diagonal and the triangle
    inequality ``m[a][c] <= m[a][b] + m[b][c]``.  Asymmetry is allowed.
    """
    t = len(matrix)
    violations = []
    for a, row in enumerate(matrix):
        if len(row) != t:
            violations.append(SetupViolation("shape", (a,)))
    if violations:
        return violations
    for a in range(t):
        for b in range(t):
            if matrix[a][b] < 0:
                violations.append(SetupViolation("negative", (a, b)))
        if matrix[a][a] != 0:
            violations.append(SetupViolation("diagonal", (a,)))
    for a in range(t):
        row_a = matrix[a]
        for b in range(t):
            ab = row_a[b]
            row_b = matrix[b]
            for c in range(t):
                if row_a[c] > ab + row_b[c]:
                    violations.append(SetupViolation("triangle", (a, b, c)))
    return violations


def asymmetric_pairs(matrix: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Pairs ``(a, b)``, ``a < b``, with ``m[a][b] != m[b][a]``.  Informational only."""
    t = len(matrix)
    return [(a, b) for a in range(t) for b in range(a + 1, t) if matrix[a][b] != matrix[b][a]]


@dataclass(frozen=True)
class Instance:
    jobs: tuple[Job, ...]
    setup: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(self.jobs))
        object.__setattr__(self, "setup", tuple(tuple(int(v) for v in row) for row in self.setup))
        if not self.jobs:
            raise InputError("instance has no jobs")
        t = len(self.setup)
        if t < 1:
            raise InputError("setup matrix is empty")
        for row in self.setup:
            if len(row) != t:
                raise InputError("setup matrix is not square")
        for j, job in enumerate(self.jobs):
            if job.type_id >= t:
                raise InputError(f"job {j} has type {job.type_id}, but only {t} types exist")

    @classmethod
    def from_lists(cls, processing_times, deadlines, types, setup, name=""):
        jobs = tuple(Job(int(p), None if d is None else int(d), int(ty))
                     for p, d, ty in zip(processing_times, deadlines, types, strict=True))
        return cls(jobs, setup, name)

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def t(self) -> int:
        return len(self.setup)

    @cached_property
    def proc(self) -> list[int]:
        return [job.processing_time for job in self.jobs]

    @cached_property
    def due(self) -> list[int]:
        return [NO_DEADLINE if job.deadline is None else job.deadline for job in self.jobs]

    @cached_property
    def types(self) -> list[int]:
        return [job.type_id for job in self.jobs]

    @cached_property
    def setup_rows(self) -> list[list[int]]:
        return [list(row) for row in self.setup]

    @cached_property
    def occurring_types(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.types)))

    @cached_property
    def total_processing(self) -> int:
        return sum(self.proc)


class Objective(NamedTuple):
    """Lexicographic objective: total tardiness first, then makespan.

    Plain tuple comparison gives the intended order.
    """
    tardiness: int
    makespan: int


def compare(a: Objective, b: Objective) -> int:
    """-1, 0 or 1 as ``a`` is better than, equal to or worse than ``b``."""
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class Evaluation:
    completion_times: tuple[int, ...]
    makespan: int
    total_tardiness: int
    total_setup: int

    @property
    def objective(self) -> Objective:
        return Objective(self.total_tardiness, self.makespan)

    @property
    def feasible(self) -> bool:
        return self.total_tardiness == 0


def check_schedule(instance: Instance, schedule: Sequence[int]) -> tuple[int, ...]:
    """Return ``schedule`` as a tuple, raising :class:`InputError` unless it permutes the jobs."""
    order = tuple(int(j) for j in schedule)
    n = instance.n
    if len(order) != n or set(order) != set(range(n)):
        raise InputError(f"schedule is not a permutation of the {n} jobs")
    return order


def evaluate(instance: Instance, schedule: Sequence[int]) -> Evaluation:
    order = check_schedule(instance, schedule)
    proc, due, types, setup = instance.proc, instance.due, instance.types, instance.setup_rows
    completion = []
    time = tard = setup_total = 0
    prev = None
    for j in order:
        if prev is not None:
            s = setup[prev][types[j]]
            setup_total += s
            time += s
        time += proc[j]
        completion.append(time)
        if time > due[j]:
            tard += time - due[j]
        prev = types[j]
    return Evaluation(tuple(completion), time, tard, setup_total)


def objective(instance: Instance, schedule: Sequence[int]) -> Objective:
    """Objective of an already validated schedule, without building an :class:`Evaluation`."""
    proc, due, types, setup = instance.proc, instance.due, instance.types, instance.setup_rows
    time = tard = 0
    prev = -1
    for j in schedule:
        ty = types[j]
        if prev >= 0:
            time += setup[prev][ty]
        time += proc[j]
        if time > due[j]:
            tard += time - due[j]
        prev = ty
    return Objective(tard, time)


def is_feasible(evaluation: Evaluation) -> bool:
    return evaluation.total_tardiness == 0


def type_inversions(instance: Instance, schedule: Sequence[int]) -> list[tuple[int, int]]:
    """Position pairs ``(a, b)``, ``a < b``, holding same-type jobs with ``d[a] > d[b]``."""
    due, types = instance.due, instance.types
    by_type: dict[int, list[int]] = {}
    for pos, j in enumerate(schedule):
        by_type.setdefault(types[j], []).append(pos)
    out = []
    for positions in by_type.values():
        for x, a in enumerate(positions):
            for b in positions[x + 1:]:
                if due[schedule[a]] > due[schedule[b]]:
                    out.append((a, b))
    return sorted(out)


def is_edds(instance: Instance, schedule: Sequence[int]) -> bool:
    due, types = instance.due, instance.types
    last: dict[int, int] = {}
    for j in schedule:
        ty = types[j]
        if last.get(ty, -1) > due[j]:
            return False
        last[ty] = due[j]
    return True
