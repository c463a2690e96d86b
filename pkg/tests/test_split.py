"""Two-segment runs: head quadrature plus restarted stepping."""

import math

import numpy as np
import pytest

from jacobipc.adams import EXACT, REFINED_ADAMS, StarterConfig, adams_solve
from jacobipc.problems import ProblemSpec, make_problem
from jacobipc.quadrature import JacobiWeight, gauss_lobatto_rule
from jacobipc.solver import SolverConfig, SplitConfig, solve
from jacobipc.split import head_integral, solve_split
from jacobipc.trajectory import STATUS_OK


def aux_rule(jn):
    return gauss_lobatto_rule(JacobiWeight(0.0, 0.0), jn + 1)


def head_run(rhs, alpha, t0, n_fine, init=(0.0,)):
    problem = ProblemSpec(alpha, init, rhs, t0, name="head")
    return adams_solve(problem, t0 / n_fine, n_fine)


def max_err(tr, exact):
    return max(abs(tr.x[i] - exact(tr.grid.t(i))) for i in range(tr.grid.count))


def test_head_integral_constant_integrand_alpha_one():
    # alpha = 1 kills the kernel, f = 1: the integral is plain length t0
    t0 = 0.4
    problem = ProblemSpec(1.0, (0.0,), lambda t, x: 1.0, 1.0)
    head = head_run(problem.rhs, 1.0, t0, 16)
    for t_eval in (0.5, 1.0, 3.0):
        got = head_integral(problem, t_eval, head, aux_rule(12))
        assert got == pytest.approx(t0, abs=1e-13)


def test_head_integral_singular_kernel_closed_form():
    # f = 1, alpha = 1/2: integral of (1-tau)^(-1/2) over [0, 0.1] / gamma(1/2)
    problem = ProblemSpec(0.5, (0.0,), lambda t, x: 1.0, 1.0)
    head = head_run(problem.rhs, 0.5, 0.1, 20)
    want = 2.0 * (1.0 - math.sqrt(0.9)) / math.sqrt(math.pi)
    got = head_integral(problem, 1.0, head, aux_rule(16))
    assert got == pytest.approx(want, rel=1e-12)


def test_head_integral_polynomial_integrand_is_exact():
    # f(tau) = tau^2 with alpha = 1: t0^3 / 3, exact for rule and stencil
    t0 = 0.3
    problem = ProblemSpec(1.0, (0.0,), lambda t, x: t * t, 1.0)
    head = head_run(problem.rhs, 1.0, t0, 12)
    got = head_integral(problem, 2.0, head, aux_rule(8))
    assert got == pytest.approx(t0**3 / 3.0, rel=1e-13)


def test_head_integral_requires_time_beyond_segment():
    problem = ProblemSpec(0.5, (0.0,), lambda t, x: 1.0, 1.0)
    head = head_run(problem.rhs, 0.5, 0.2, 10)
    with pytest.raises(ValueError, match="beyond the head segment"):
        head_integral(problem, 0.2, head, aux_rule(8))


def test_split_run_tracks_plain_run():
    problem = make_problem("ml_linear", 0.5, 1.0)
    starter = StarterConfig(mode=EXACT)
    plain = solve(problem, SolverConfig(h=1.0 / 40, stencil_size=3, jn=26,
                                        starter=starter))
    split = solve(problem, SolverConfig(h=1.0 / 40, stencil_size=3, jn=26,
                                        starter=starter,
                                        split=SplitConfig(t0=0.1)))
    assert split.status == STATUS_OK
    assert split.grid.origin == 0.1
    e_plain = max_err(plain, problem.exact)
    e_split = max_err(split, problem.exact)
    assert e_split < 5 * e_plain
    assert abs(split.x[-1] - plain.x[-1]) < 5 * max(e_plain, e_split)


@pytest.mark.parametrize("alpha,size,n,pinned", [
    (0.5, 3, 40, 1.43e-5),
    (0.2, 2, 160, 2.44e-5),
])
def test_published_split_errors(alpha, size, n, pinned):
    # relaxation benchmark on [0, 1.1], head segment [0, 0.1]
    problem = make_problem("ml_linear", alpha, 1.1)
    cfg = SolverConfig(h=1.0 / n, stencil_size=size, jn=26,
                       starter=StarterConfig(mode=EXACT),
                       split=SplitConfig(t0=0.1))
    tr = solve(problem, cfg)
    assert tr.status == STATUS_OK
    err = max_err(tr, problem.exact)
    assert pinned / 3 < err < pinned * 3


def test_aux_rule_default_is_twice_main_index():
    problem = make_problem("poly8", 0.5, 1.0)
    base = dict(h=1.0 / 40, stencil_size=3, jn=26,
                starter=StarterConfig(mode=EXACT))
    auto = solve(problem, SolverConfig(split=SplitConfig(t0=0.1), **base))
    pinned = solve(problem, SolverConfig(split=SplitConfig(t0=0.1, aux_jn=52), **base))
    assert np.array_equal(auto.x, pinned.x)


def test_refined_start_matches_exact_start():
    problem = make_problem("poly8", 0.5, 1.0)
    base = dict(h=1.0 / 40, stencil_size=3, jn=26, split=SplitConfig(t0=0.1))
    ex = solve(problem, SolverConfig(starter=StarterConfig(mode=EXACT), **base))
    rf = solve(problem, SolverConfig(starter=StarterConfig(mode=REFINED_ADAMS), **base))
    e_ex = max_err(ex, problem.exact)
    e_rf = max_err(rf, problem.exact)
    assert e_rf < 5 * max(e_ex, 1e-9)


def test_head_trajectory_rides_along():
    problem = make_problem("poly8", 0.5, 1.0)
    for mode in (EXACT, REFINED_ADAMS):
        cfg = SolverConfig(h=1.0 / 40, stencil_size=3, jn=26,
                           starter=StarterConfig(mode=mode),
                           split=SplitConfig(t0=0.1))
        tr = solve(problem, cfg)
        head = tr.head
        assert head is not None
        assert head.grid.origin == 0.0
        end = head.grid.origin + (head.grid.count - 1) * head.grid.h
        assert end == pytest.approx(0.1, abs=1e-12)


def test_split_validation():
    problem = make_problem("poly8", 0.5, 1.0)
    starter = StarterConfig(mode=EXACT)
    with pytest.raises(ValueError, match="inside"):
        solve(problem, SolverConfig(h=0.1, starter=starter,
                                    split=SplitConfig(t0=1.0)))
    with pytest.raises(ValueError, match="too coarse"):
        solve(problem, SolverConfig(h=0.45, starter=starter,
                                    split=SplitConfig(t0=0.1)))
    with pytest.raises(ValueError, match="evenly divide"):
        solve(problem, SolverConfig(h=0.1, starter=starter,
                                    split=SplitConfig(t0=0.13)))
    with pytest.raises(ValueError, match="no split"):
        solve_split(problem, SolverConfig(h=0.1, starter=starter))
