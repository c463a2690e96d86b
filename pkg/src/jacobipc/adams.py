"""Fractional Adams-Bashforth-Moulton (PECE) scheme and starting values.

This is the O(N^2) baseline method of order min(1 + alpha, 2) and, run at a
refined substep, the generic starter that supplies the first stencil_size
grid values for the predictor-corrector when no exact solution is available.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from jacobipc._backend import kernels
from jacobipc.interp import UniformGrid
from jacobipc.problems import taylor_head
from jacobipc.trajectory import (
    GUARD,
    STATUS_DIVERGED,
    STATUS_OK,
    Counters,
    DivergenceError,
    Trajectory,
    counting_rhs,
)

EXACT = "exact"
REFINED_ADAMS = "refined_adams"

# refinement exponents beyond this make the starter cost explode; use the
# exact-start mode for high-order stencils at fine steps instead
MAX_REFINEMENT = 6


@dataclass(frozen=True)
class StarterConfig:
    mode: str = EXACT
    k: Optional[int] = None

    def __post_init__(self):
        if self.mode not in (EXACT, REFINED_ADAMS):
            raise ValueError(f"unknown starter mode {self.mode!r}")
        if self.k is not None and self.k < 0:
            raise ValueError("refinement exponent must be >= 0")


@dataclass(frozen=True)
class AdamsWeights:
    """Materialized weights for one step n -> n+1 (reference/testing path).

    predictor: length n+1, b_j = (h^alpha/alpha) ((n+1-j)^alpha - (n-j)^alpha)
    corrector: length n+2 including the implicit unit weight at t_{n+1},
               scaled by h^alpha / Gamma(alpha+2) at use.
    """

    predictor: np.ndarray
    corrector: np.ndarray


def adams_weights(alpha, h, n):
    j = np.arange(n + 1, dtype=float)
    b = h**alpha / alpha * ((n + 1 - j) ** alpha - (n - j) ** alpha)
    a = np.empty(n + 2)
    a[0] = float(n) ** (alpha + 1) - (n - alpha) * float(n + 1) ** alpha
    jj = j[1:]
    a[1 : n + 1] = (
        (n - jj + 2) ** (alpha + 1) + (n - jj) ** (alpha + 1) - 2 * (n - jj + 1) ** (alpha + 1)
    )
    a[n + 1] = 1.0
    return AdamsWeights(predictor=b, corrector=a)


def adams_solve(problem, h, n_steps):
    """Integrate the problem with the fractional Adams PECE scheme.

    Returns a trajectory over the uniform grid {0, h, ..., n_steps*h}; on
    divergence the trajectory is truncated at the last finite value and
    flagged.  Cost is O(n_steps^2).
    """
    if h <= 0 or n_steps < 1:
        raise ValueError("need h > 0 and n_steps >= 1")
    alpha = problem.alpha
    counters = Counters()
    rhs = counting_rhs(problem.rhs, counters)
    x = np.zeros(n_steps + 1)
    fc = np.zeros(n_steps + 1)
    x[0] = problem.init[0]
    fc[0] = rhs(0.0, x[0])
    c_pred = h**alpha / math.gamma(alpha + 1.0)
    c_corr = h**alpha / math.gamma(alpha + 2.0)
    status = STATUS_OK
    count = n_steps + 1
    for n in range(n_steps):
        pred, corr = kernels.adams_step_sums(fc, n, alpha)
        counters.history_reads += 2 * (n + 1)
        t1 = (n + 1) * h
        head = taylor_head(problem, t1)
        x_pred = head + c_pred * pred
        if not abs(x_pred) <= GUARD:
            status, count = STATUS_DIVERGED, n + 1
            break
        f_pred = rhs(t1, x_pred)
        x_new = head + c_corr * (corr + f_pred)
        if not abs(x_new) <= GUARD:
            status, count = STATUS_DIVERGED, n + 1
            break
        x[n + 1] = x_new
        fc[n + 1] = rhs(t1, x_new)
    grid = UniformGrid(0.0, h, count)
    return Trajectory(grid, x[:count], fc[:count], status, counters).finalize()


def recommended_refinement(alpha, h, stencil_size):
    """Smallest k with (h*10^-k)^(1+min(alpha,1)) <= h^(stencil_size+0.5).

    Conservative rule making the starter error negligible against the target
    order; capped at MAX_REFINEMENT (the refined run costs O((10^k)^2)).
    """
    if h >= 1.0:
        raise ValueError("refinement rule assumes h < 1")
    p = 1.0 + min(alpha, 1.0)
    k = math.ceil((stencil_size + 0.5 - p) * math.log10(1.0 / h) / p - 1e-12)
    return min(max(k, 0), MAX_REFINEMENT)


def start_values(problem, h, stencil_size, cfg, exact_solution=None):
    """First ``stencil_size`` grid values x_0 .. x_{stencil_size-1}.

    exact mode samples the provided (or registered) exact solution; the
    refined mode runs the Adams scheme at substep h*10^-k and subsamples
    every 10^k-th value.
    """
    if stencil_size < 2:
        raise ValueError("stencil size must be at least 2")
    if cfg.mode == EXACT:
        fn = exact_solution if exact_solution is not None else problem.exact
        if fn is None:
            raise ValueError("exact starter requested but no exact solution is known")
        return np.array([fn(i * h) for i in range(stencil_size)])
    k = cfg.k if cfg.k is not None else recommended_refinement(problem.alpha, h, stencil_size)
    stride = 10**k
    fine = adams_solve(problem, h / stride, (stencil_size - 1) * stride)
    if fine.status != STATUS_OK:
        raise DivergenceError("starter run diverged before reaching the coarse grid")
    return fine.x[::stride].copy()
