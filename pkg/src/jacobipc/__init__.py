"""Jacobi-quadrature predictor-corrector solver for Caputo fractional IVPs.

Solves D^alpha x(t) = f(t, x(t)) with classical initial conditions by
marching the equivalent Volterra integral form: the memory integral is
evaluated with a Gauss-Lobatto rule whose Jacobi weight absorbs the kernel
singularity, and the integrand is rebuilt from stored f values by local
stencil interpolation, giving per-step cost independent of the step index.
Includes a fractional Adams baseline, a two-segment splitting for long
horizons, an evaluator for the linear problem's special-function solution,
an expression DSL for user-defined right-hand sides, and a benchmark CLI.

``USING_COMPILED`` reports whether the compiled kernel extension is active;
set ``JACOBIPC_PURE=1`` before import to force the pure-Python fallback.
"""

from jacobipc._backend import USING_COMPILED
from jacobipc.adams import (EXACT, REFINED_ADAMS, StarterConfig, adams_solve,
                            adams_weights, recommended_refinement, start_values)
from jacobipc.expr import compile_rhs
from jacobipc.mittag import mittag_leffler, ml_solution, z_switch
from jacobipc.problems import ProblemSpec, make_problem, problem_ids, taylor_head
from jacobipc.quadrature import (JacobiWeight, QuadratureRule,
                                 gauss_lobatto_rule, integrate)
from jacobipc.reports import (ConvergenceReport, TimingReport, export, load,
                              run_convergence, run_timing, smallest_n_reaching)
from jacobipc.solver import (SolverConfig, SplitConfig, correct, predict,
                             quadrature_for, solve, step_count)
from jacobipc.split import head_integral, solve_split
from jacobipc.trajectory import (GUARD, STATUS_DIVERGED, STATUS_OK, Counters,
                                 DivergenceError, Trajectory)

__version__ = "0.1.0"

__all__ = [
    "USING_COMPILED", "EXACT", "REFINED_ADAMS", "StarterConfig", "adams_solve",
    "adams_weights", "recommended_refinement", "start_values", "compile_rhs",
    "mittag_leffler", "ml_solution", "z_switch", "ProblemSpec", "make_problem",
    "problem_ids", "taylor_head", "JacobiWeight", "QuadratureRule",
    "gauss_lobatto_rule", "integrate", "ConvergenceReport", "TimingReport",
    "export", "load", "run_convergence", "run_timing", "smallest_n_reaching",
    "SolverConfig", "SplitConfig", "correct", "predict", "quadrature_for",
    "solve", "step_count", "head_integral", "solve_split", "GUARD",
    "STATUS_DIVERGED", "STATUS_OK", "Counters", "DivergenceError", "Trajectory",
    "__version__",
]
