"""Solution trajectories and instrumentation counters."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from jacobipc.interp import UniformGrid

# solutions beyond this magnitude are treated as numerically divergent
GUARD = 1e100

STATUS_OK = "ok"
STATUS_DIVERGED = "diverged"


class DivergenceError(RuntimeError):
    """A starter run diverged, so the requested solve cannot proceed."""


@dataclass
class Counters:
    rhs_evals: int = 0
    interp_evals: int = 0
    value_reads: int = 0
    history_reads: int = 0


@dataclass
class Trajectory:
    grid: UniformGrid
    x: np.ndarray
    f_cache: np.ndarray
    status: str = STATUS_OK
    counters: Counters = field(default_factory=Counters)
    head: Optional["Trajectory"] = None

    def finalize(self):
        self.x.flags.writeable = False
        self.f_cache.flags.writeable = False
        return self


def counting_rhs(rhs, counters):
    """Wrap a right-hand side so every evaluation bumps the counter."""

    def wrapped(t, x):
        counters.rhs_evals += 1
        return rhs(t, x)

    return wrapped
