"""Predictor-corrector stepping driven by mapped Gauss-Lobatto quadrature.

Each step writes the solution as the Taylor head plus a weighted-kernel
integral over the full history, transforms that integral onto [-1, 1], and
evaluates the integrand at the quadrature nodes by local polynomial
interpolation of cached f values.  Cost per step is O(stencil_size * jn),
so a whole run is O(N) for fixed configuration.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from jacobipc._backend import kernels
from jacobipc.adams import StarterConfig, start_values
from jacobipc.interp import StencilParams, UniformGrid, uniform_bary_weights
from jacobipc.problems import taylor_head
from jacobipc.quadrature import JacobiWeight, gauss_lobatto_rule
from jacobipc.trajectory import (
    GUARD,
    STATUS_DIVERGED,
    STATUS_OK,
    Counters,
    DivergenceError,
    Trajectory,
    counting_rhs,
)

REL_GRID_TOL = 1e-9


@dataclass(frozen=True)
class SplitConfig:
    """Two-segment run: auxiliary rule on [0, t0], main stepping on [t0, T].

    aux_jn is the index of the weight-free rule used for the head integral
    (defaults to twice the main rule index); fine_factor refines the head
    trajectory's substep relative to the main h.
    """

    t0: float
    aux_jn: Optional[int] = None
    fine_factor: int = 10

    def __post_init__(self):
        if self.t0 <= 0:
            raise ValueError("split point must be positive")
        if self.aux_jn is not None and self.aux_jn < 2:
            raise ValueError("auxiliary rule index must be >= 2")
        if self.fine_factor < 1:
            raise ValueError("fine_factor must be >= 1")


@dataclass(frozen=True)
class SolverConfig:
    h: float
    stencil_size: int = 3
    jn: int = 26
    starter: StarterConfig = field(default_factory=StarterConfig)
    split: Optional[SplitConfig] = None

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("step must be positive")
        if self.stencil_size < 2:
            raise ValueError("stencil size must be at least 2")
        if self.jn < 2:
            raise ValueError("quadrature index must be at least 2")


def step_count(length, h):
    """Number of steps of size h covering ``length``; rejects uneven fits."""
    n = round(length / h)
    if n < 1 or abs(n * h - length) > REL_GRID_TOL * max(1.0, abs(length)):
        raise ValueError(f"step {h} does not evenly divide {length}")
    return n


def quadrature_for(alpha, jn):
    """The jn+1 point Lobatto rule matching the kernel weight for alpha."""
    return gauss_lobatto_rule(JacobiWeight(alpha - 1.0, 0.0), jn + 1)


def _run_jpc(rhs, alpha, base_at, grid, x, fc, first, rule, size, counters):
    """Advance x and fc in place from index ``first`` through the grid end.

    base_at(t) supplies everything outside the quadrature integral (Taylor
    head, plus any precomputed head-segment contribution); the integral runs
    over [grid.origin, t].  Returns (status, finalized count).
    """
    nodes = rule.nodes
    weights = rule.weights
    jn = rule.n_points - 1
    params = StencilParams(size)
    bary = uniform_bary_weights(size)
    kc = np.zeros(2, dtype=np.int64)
    pref = 1.0 / math.gamma(alpha)
    end_w = weights[jn]
    h = grid.h
    status = STATUS_OK
    count = grid.count
    for n in range(first - 1, grid.count - 1):
        t1 = grid.t(n + 1)
        scale = pref * (0.5 * (n + 1) * h) ** alpha
        base = base_at(t1)
        total = kernels.weighted_interp_sum(
            fc, n, nodes, weights, jn + 1, size, params.left, params.right, bary, 0, kc
        )
        x_pred = base + scale * total
        if not abs(x_pred) <= GUARD:
            status, count = STATUS_DIVERGED, n + 1
            break
        f_pred = rhs(t1, x_pred)
        fc[n + 1] = f_pred
        # interior nodes only: the end node s=1 lands on t_{n+1} and uses the
        # directly evaluated f_pred, never an interpolated value
        total = kernels.weighted_interp_sum(
            fc, n, nodes, weights, jn, size, params.left, params.right, bary, 1, kc
        )
        x_new = base + scale * (total + end_w * f_pred)
        if not abs(x_new) <= GUARD:
            status, count = STATUS_DIVERGED, n + 1
            break
        x[n + 1] = x_new
        fc[n + 1] = rhs(t1, x_new)
    counters.interp_evals += int(kc[0])
    counters.value_reads += int(kc[1])
    return status, count


def solve(problem, config):
    """Full trajectory on [0, T] (or config.split's two-segment variant).

    The first stencil_size values come from the starter; every later index
    is one predict/correct pass.  On divergence the trajectory is truncated
    at the last finite value and flagged rather than raising.
    """
    if config.split is not None:
        from jacobipc.split import solve_split

        return solve_split(problem, config)
    n_steps = step_count(problem.T, config.h)
    size = config.stencil_size
    if n_steps < size:
        raise ValueError("grid too coarse: need at least stencil_size steps")
    rule = quadrature_for(problem.alpha, config.jn)
    counters = Counters()
    rhs = counting_rhs(problem.rhs, counters)
    x = np.zeros(n_steps + 1)
    fc = np.zeros(n_steps + 1)
    x[:size] = start_values(problem, config.h, size, config.starter)
    for i in range(size):
        fc[i] = rhs(i * config.h, x[i])
    grid = UniformGrid(0.0, config.h, n_steps + 1)
    status, count = _run_jpc(
        rhs, problem.alpha, lambda t: taylor_head(problem, t), grid, x, fc, size, rule, size, counters
    )
    if count != grid.count:
        grid = UniformGrid(0.0, config.h, count)
    return Trajectory(grid, x[:count], fc[:count], status, counters).finalize()


def _check_history(state, n, size):
    if n + 1 < size:
        raise ValueError("insufficient history: need n+1 >= stencil_size")
    if len(state.f_cache) < n + 1:
        raise ValueError("state does not cover indices 0..n")


def predict(state, n, rule, cfg, problem):
    """Predicted value at index n+1 from the finalized history x_0..x_n.

    Reference single-step form of the loop in solve(), for a trajectory
    whose grid starts at the lower integration limit.
    """
    size = cfg.stencil_size
    _check_history(state, n, size)
    grid = state.grid
    t1 = grid.origin + (n + 1) * grid.h
    params = StencilParams(size)
    kc = np.zeros(2, dtype=np.int64)
    total = kernels.weighted_interp_sum(
        state.f_cache[: n + 1],
        n,
        rule.nodes,
        rule.weights,
        rule.n_points,
        size,
        params.left,
        params.right,
        uniform_bary_weights(size),
        0,
        kc,
    )
    scale = (0.5 * (n + 1) * grid.h) ** problem.alpha / math.gamma(problem.alpha)
    x_pred = taylor_head(problem, t1) + scale * total
    if not abs(x_pred) <= GUARD:
        raise DivergenceError(f"predicted value at t={t1} exceeds the guard")
    return x_pred


def correct(state, n, x_pred, rule, cfg, problem):
    """Corrected value at index n+1 given the predicted one.

    Interior nodes may interpolate through (t_{n+1}, f(t_{n+1}, x_pred));
    the end node contributes that f value directly.  The caller finalizes
    f_cache[n+1] from the returned x.
    """
    size = cfg.stencil_size
    _check_history(state, n, size)
    grid = state.grid
    t1 = grid.origin + (n + 1) * grid.h
    f_pred = problem.rhs(t1, x_pred)
    fbuf = np.empty(n + 2)
    fbuf[: n + 1] = state.f_cache[: n + 1]
    fbuf[n + 1] = f_pred
    params = StencilParams(size)
    kc = np.zeros(2, dtype=np.int64)
    jn = rule.n_points - 1
    total = kernels.weighted_interp_sum(
        fbuf,
        n,
        rule.nodes,
        rule.weights,
        jn,
        size,
        params.left,
        params.right,
        uniform_bary_weights(size),
        1,
        kc,
    )
    scale = (0.5 * (n + 1) * grid.h) ** problem.alpha / math.gamma(problem.alpha)
    x_new = taylor_head(problem, t1) + scale * (total + rule.weights[jn] * f_pred)
    if not abs(x_new) <= GUARD:
        raise DivergenceError(f"corrected value at t={t1} exceeds the guard")
    return x_new
