"""Plain-text instance format.

::

    t n
    <t rows of t setup times>
    <n rows: processing_time deadline type>   # deadline -1 = none

``#`` starts a comment; blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path

from ..model import Instance, InputError, Job, validate_setup


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {text.strip()!r}", lineno) from None


def parse_instance(text: str, name: str = "") -> Instance:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise FormatError("empty instance")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 2:
        raise FormatError("header must be 't n'", lineno)
    t, n = head
    if t < 1 or n < 1:
        raise FormatError("type and job counts must be positive", lineno)
    if len(lines) != 1 + t + n:
        raise FormatError(f"expected {t} matrix rows and {n} job rows, found {len(lines) - 1} rows",
                          lines[-1][0])
    matrix = []
    for lineno, body in lines[1:1 + t]:
        row = _ints(body, lineno)
        if len(row) != t:
            raise FormatError(f"setup row has {len(row)} entries, expected {t}", lineno)
        if any(v < 0 for v in row):
            raise FormatError("negative setup time", lineno)
        matrix.append(row)
    jobs = []
    for lineno, body in lines[1 + t:]:
        vals = _ints(body, lineno)
        if len(vals) != 3:
            raise FormatError("job row must be 'processing_time deadline type'", lineno)
        p, d, ty = vals
        if p < 0:
            raise FormatError("negative processing time", lineno)
        if d < -1:
            raise FormatError("negative deadline (use -1 for none)", lineno)
        if not 0 <= ty < t:
            raise FormatError(f"type out of range: {ty} not in [0, {t - 1}]", lineno)
        jobs.append(Job(p, None if d == -1 else d, ty))
    violations = validate_setup(matrix)
    if violations:
        raise FormatError(f"invalid setup matrix: {violations[0]}", lines[1][0])
    try:
        return Instance(tuple(jobs), matrix, name)
    except InputError as exc:
        raise FormatError(str(exc)) from None


def format_instance(instance: Instance) -> str:
    out = [f"{instance.t} {instance.n}"]
    out += [" ".join(str(v) for v in row) for row in instance.setup]
    for job in instance.jobs:
        d = -1 if job.deadline is None else job.deadline
        out.append(f"{job.processing_time} {d} {job.type_id}")
    return "\n".join(out) + "\n"


def read_instance(path) -> Instance:
    path = Path(path)
    return parse_instance(path.read_text(), name=path.stem)


def write_instance(instance: Instance, path) -> None:
    Path(path).write_text(format_instance(instance))


def parse_schedule(text: str) -> tuple[int, ...]:
    body = " ".join(line.split("#", 1)[0] for line in text.splitlines())
    try:
        return tuple(int(tok) for tok in body.replace(",", " ").split())
    except ValueError:
        raise FormatError("schedule must be whitespace-separated job ids") from None
