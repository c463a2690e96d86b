"""Compiled extension vs pure-Python kernels: bit-for-bit parity."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

import jacobipc
from jacobipc import _kernels_py
from jacobipc._backend import kernels
from jacobipc.interp import StencilParams, uniform_bary_weights
from jacobipc.solver import quadrature_for

try:
    from jacobipc import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None,
                                    reason="compiled extension not built")


def test_backend_flag_is_consistent():
    assert isinstance(jacobipc.USING_COMPILED, bool)
    assert jacobipc.USING_COMPILED == kernels.COMPILED
    assert _kernels_py.COMPILED is False
    if _kernels is not None:
        assert _kernels.COMPILED is True


@needs_compiled
def test_weighted_interp_sum_parity():
    rng = np.random.default_rng(11)
    rule = quadrature_for(0.5, 26)
    fc = rng.uniform(-3, 3, size=60)
    for size in (2, 3, 4, 5):
        params = StencilParams(size)
        bary = uniform_bary_weights(size)
        for n in (size - 1, 17, 40):
            for phase, n_nodes in ((0, rule.n_points), (1, rule.n_points - 1)):
                kc_a = np.zeros(2, dtype=np.int64)
                kc_b = np.zeros(2, dtype=np.int64)
                got = _kernels.weighted_interp_sum(
                    fc, n, rule.nodes, rule.weights, n_nodes, size,
                    params.left, params.right, bary, phase, kc_a)
                want = _kernels_py.weighted_interp_sum(
                    fc, n, rule.nodes, rule.weights, n_nodes, size,
                    params.left, params.right, bary, phase, kc_b)
                assert got == want  # bitwise, not approx
                assert list(kc_a) == list(kc_b)


@needs_compiled
def test_adams_step_sums_parity():
    rng = np.random.default_rng(12)
    f = rng.uniform(-2, 2, size=30)
    for alpha in (0.3, 1.0, 1.7):
        for n in (0, 5, 28):
            pa, ca = _kernels.adams_step_sums(f, n, alpha)
            pb, cb = _kernels_py.adams_step_sums(f, n, alpha)
            assert pa == pb
            assert ca == cb


def test_forced_pure_subprocess_matches_this_backend():
    code = """
import json
from jacobipc import USING_COMPILED
from jacobipc.problems import make_problem
from jacobipc.solver import SolverConfig, solve
tr = solve(make_problem("poly8", 0.5, 1.0), SolverConfig(h=1.0/40))
print(json.dumps({
    "compiled": USING_COMPILED,
    "endpoint": tr.x[-1].hex(),
    "rhs_evals": tr.counters.rhs_evals,
    "value_reads": tr.counters.value_reads,
}))
"""
    env = dict(os.environ, JACOBIPC_PURE="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env,
                          capture_output=True, text=True, check=True)
    got = json.loads(proc.stdout)
    assert got["compiled"] is False

    from jacobipc.problems import make_problem
    from jacobipc.solver import SolverConfig, solve

    tr = solve(make_problem("poly8", 0.5, 1.0), SolverConfig(h=1.0 / 40))
    assert got["endpoint"] == tr.x[-1].hex()
    assert got["rhs_evals"] == tr.counters.rhs_evals
    assert got["value_reads"] == tr.counters.value_reads
