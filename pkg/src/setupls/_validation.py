"""Input coercion in the spirit of ``sklearn.utils.check_array``."""
from __future__ import annotations

import numpy as np

from .model import Instance, InputError, Job


def check_instance(X, setup=None) -> Instance:
    """Return ``X`` as an :class:`Instance`.

    Accepts an ``Instance`` or an ``(n, 3)`` array-like of
    ``processing_time, deadline, type`` rows (deadline ``-1`` for none)
    together with a ``setup`` matrix.
    """
    if isinstance(X, Instance):
        return X
    if setup is None:
        raise InputError("a setup matrix is required when X is not an Instance")
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise InputError(f"expected an (n, 3) array of jobs, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise InputError("job data must be integral")
        arr = arr.astype(np.int64)
    jobs = tuple(Job(int(p), None if d == -1 else int(d), int(ty)) for p, d, ty in arr)
    return Instance(jobs, setup)
