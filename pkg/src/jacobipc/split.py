"""Two-segment runs: quadrature head on [0, t0], stepping tail on [t0, T].

Splitting moves the non-smooth neighbourhood of the origin (or, for very
small alpha, the steep initial transient) out of the stepped segment.  The
head contribution to each later value is a plain integral with a smooth
kernel, evaluated with a weight-free Lobatto rule over f values read off a
refined trajectory; the tail is the standard predictor-corrector with its
prefactor measured from t0.
"""

import math

import numpy as np

from jacobipc.adams import EXACT, adams_solve
from jacobipc.interp import (
    CORRECTOR,
    StencilParams,
    UniformGrid,
    lagrange_eval,
    map_node,
    select_stencil,
)
from jacobipc.problems import taylor_head
from jacobipc.quadrature import JacobiWeight, gauss_lobatto_rule
from jacobipc.solver import _run_jpc, quadrature_for, step_count
from jacobipc.trajectory import (
    STATUS_OK,
    Counters,
    DivergenceError,
    Trajectory,
    counting_rhs,
)


def _interp_f(head, targets, size):
    """f values at the target times, interpolated from a head trajectory."""
    params = StencilParams(size)
    grid = head.grid
    times = grid.times
    n = grid.count - 2
    out = np.empty(len(targets))
    for i, tau in enumerate(targets):
        st = select_stencil(tau, grid, params, n, CORRECTOR)
        sl = slice(st.start, st.start + st.length)
        out[i] = lagrange_eval(times[sl], head.f_cache[sl], tau)
    return out


def head_integral(problem, t_eval, head, aux_rule, stencil_size=3):
    """Contribution of the head segment to the solution value at t_eval.

    Computes (1/Gamma(alpha)) * sum_j w_j (t_eval - tau_j)^(alpha-1)
    f(tau_j, x(tau_j)) with the aux rule mapped onto the head interval and
    f values interpolated from the head trajectory.
    """
    grid = head.grid
    t0 = grid.origin + (grid.count - 1) * grid.h
    if t_eval <= t0:
        raise ValueError("evaluation time must lie beyond the head segment")
    taus = np.array([map_node(s, grid.origin, t0) for s in aux_rule.nodes])
    fvals = _interp_f(head, taus, stencil_size)
    wt = aux_rule.weights * (0.5 * (t0 - grid.origin))
    kern = (t_eval - taus) ** (problem.alpha - 1.0)
    return float(np.dot(wt * kern, fvals)) / math.gamma(problem.alpha)


def solve_split(problem, config):
    """Trajectory on the main grid [t0, T]; the fine head ride along as aux.

    The head trajectory is a refined baseline run with substep
    h/fine_factor, which must land exactly on t0.  The main starter either
    samples the exact solution at t0, t0+h, ... or extends the same refined
    run past t0 and subsamples it.
    """
    split = config.split
    if split is None:
        raise ValueError("config carries no split section")
    t0, h = split.t0, config.h
    if t0 >= problem.T:
        raise ValueError("split point must lie inside [0, T]")
    size = config.stencil_size
    n_steps = step_count(problem.T - t0, h)
    if n_steps < size:
        raise ValueError("main grid too coarse: need at least stencil_size steps")
    h_fine = h / split.fine_factor
    n_fine = step_count(t0, h_fine)

    exact_start = config.starter.mode == EXACT
    n_run = n_fine if exact_start else n_fine + (size - 1) * split.fine_factor
    fine = adams_solve(problem, h_fine, n_run)
    if fine.status != STATUS_OK:
        raise DivergenceError("head trajectory diverged before reaching t0")
    if exact_start:
        head = fine
        if problem.exact is None:
            raise ValueError("exact starter requested but no exact solution is known")
        x_start = np.array([problem.exact(t0 + i * h) for i in range(size)])
    else:
        g = fine.grid
        head = Trajectory(
            UniformGrid(g.origin, g.h, n_fine + 1),
            fine.x[: n_fine + 1],
            fine.f_cache[: n_fine + 1],
            fine.status,
            fine.counters,
        )
        x_start = fine.x[n_fine :: split.fine_factor][:size].copy()

    aux_jn = split.aux_jn if split.aux_jn is not None else 2 * config.jn
    aux_rule = gauss_lobatto_rule(JacobiWeight(0.0, 0.0), aux_jn + 1)
    taus = np.array([map_node(s, 0.0, t0) for s in aux_rule.nodes])
    ftau = _interp_f(head, taus, size)
    wt = aux_rule.weights * (0.5 * t0)
    am1 = problem.alpha - 1.0
    c = 1.0 / math.gamma(problem.alpha)

    def base_at(t):
        return taylor_head(problem, t) + c * float(np.dot(wt * (t - taus) ** am1, ftau))

    counters = Counters()
    rhs = counting_rhs(problem.rhs, counters)
    rule = quadrature_for(problem.alpha, config.jn)
    x = np.zeros(n_steps + 1)
    fc = np.zeros(n_steps + 1)
    x[:size] = x_start
    for i in range(size):
        fc[i] = rhs(t0 + i * h, x[i])
    grid = UniformGrid(t0, h, n_steps + 1)
    status, count = _run_jpc(
        rhs, problem.alpha, base_at, grid, x, fc, size, rule, size, counters
    )
    if count != grid.count:
        grid = UniformGrid(t0, h, count)
    return Trajectory(grid, x[:count], fc[:count], status, counters, head=head).finalize()
