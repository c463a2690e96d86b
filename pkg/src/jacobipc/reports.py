"""Convergence and timing reports: sweep drivers, CSV/JSON export, parsing.

A convergence report holds (h, max_error, observed_order) rows plus the
configuration that produced them; a timing report holds (N, wall_seconds,
rhs_evals, method) rows.  The ``rhs_evals`` column counts f-value accesses
(fresh evaluations plus stored-history reads), the quantity that separates
the linear-cost marcher from the quadratic baseline; fresh evaluations alone
are linear in N for both methods.

CSV carries exactly the row columns; JSON carries rows and metadata.  All
reals are written as 17-significant-digit decimals so parsing returns
bit-identical floats.
"""

import json
import math
import time
from dataclasses import dataclass
from typing import Optional

from jacobipc.adams import EXACT, REFINED_ADAMS, StarterConfig, adams_solve
from jacobipc.problems import make_problem
from jacobipc.solver import SolverConfig, quadrature_for, solve, step_count
from jacobipc.trajectory import STATUS_OK

ROW_OK = "ok"
ROW_GROWING = "growing"  # error failed to shrink under refinement
ROW_DIVERGED = "diverged"

_CONV_HEADER = "h,max_error,observed_order"
_TIMING_HEADER = "N,wall_seconds,rhs_evals,method"


@dataclass(frozen=True)
class ConvergenceRow:
    h: float
    max_error: float
    observed_order: Optional[float]  # None on the first row
    status: str = ROW_OK


@dataclass(frozen=True)
class ConvergenceReport:
    alpha: float
    stencil_size: int
    jn: int
    method: str
    problem: str
    starter: str
    rows: tuple


@dataclass(frozen=True)
class TimingRow:
    n_steps: int
    wall_seconds: float
    rhs_evals: int
    method: str


@dataclass(frozen=True)
class TimingReport:
    problem: str
    alpha: float
    h: float
    rows: tuple


def starter_label(cfg):
    if cfg.mode == EXACT:
        return "exact"
    return f"refined:{cfg.k if cfg.k is not None else 'auto'}"


def observed_order(h_prev, err_prev, h, err):
    """Empirical rate log(err_prev/err)/log(h_prev/h); None when undefined."""
    if err_prev <= 0.0 or err <= 0.0 or h_prev == h:
        return None
    return math.log(err_prev / err) / math.log(h_prev / h)


def _max_error(trajectory, exact):
    worst = 0.0
    for i in range(trajectory.grid.count):
        err = abs(trajectory.x[i] - exact(trajectory.grid.t(i)))
        if err > worst:
            worst = err
    return worst


def _accesses(counters):
    return counters.rhs_evals + counters.value_reads + counters.history_reads


def run_convergence(problem, h_list, stencil_size=3, jn=26, starter=None,
                    split=None, method="jpc"):
    """Solve at each step size (descending) and tabulate max errors and rates.

    Errors are measured on the main grid only.  The problem must carry an
    exact solution.  ``method`` is "jpc" or "adams"; the adams baseline takes
    no starter and no split (stencil_size/jn are recorded but unused by it).
    """
    if method not in ("jpc", "adams"):
        raise ValueError(f"method must be 'jpc' or 'adams', got {method!r}")
    if problem.exact is None:
        raise ValueError("convergence runs need a problem with an exact solution")
    if method == "adams" and split is not None:
        raise ValueError("split applies to the jpc method only")
    if starter is None:
        starter = StarterConfig()

    rows = []
    prev = None
    for h in sorted(set(h_list), reverse=True):
        if method == "jpc":
            cfg = SolverConfig(h=h, stencil_size=stencil_size, jn=jn,
                               starter=starter, split=split)
            tr = solve(problem, cfg)
        else:
            tr = adams_solve(problem, h, step_count(problem.T, h))
        err = _max_error(tr, problem.exact)
        order = observed_order(prev[0], prev[1], h, err) if prev else None
        if tr.status != STATUS_OK:
            status = ROW_DIVERGED
        elif order is not None and order <= 0.0:
            status = ROW_GROWING
        else:
            status = ROW_OK
        rows.append(ConvergenceRow(h, err, order, status))
        prev = (h, err)
    return ConvergenceReport(
        alpha=problem.alpha,
        stencil_size=stencil_size,
        jn=jn,
        method=method,
        problem=problem.name or "custom",
        starter="none" if method == "adams" else starter_label(starter),
        rows=tuple(rows),
    )


def run_timing(problem_id, alpha, h, methods, t_list, stencil_size=3, jn=26,
               starter=None):
    """Time each (method, horizon) cell at a fixed step size.

    Quadrature tables are cached and warmed beforehand, so rows measure
    marching cost.  Horizons must be integer multiples of h.
    """
    for m in methods:
        if m not in ("jpc", "adams"):
            raise ValueError(f"unknown method {m!r} (known: jpc, adams)")
    if starter is None:
        starter = StarterConfig()
    probe = make_problem(problem_id, alpha, max(t_list))
    quadrature_for(probe.alpha, jn)

    rows = []
    for method in methods:
        for t_end in sorted(t_list):
            problem = make_problem(problem_id, alpha, t_end)
            n = step_count(t_end, h)
            begin = time.perf_counter()
            if method == "jpc":
                tr = solve(problem, SolverConfig(h=h, stencil_size=stencil_size,
                                                 jn=jn, starter=starter))
            else:
                tr = adams_solve(problem, h, n)
            wall = time.perf_counter() - begin
            rows.append(TimingRow(n, wall, _accesses(tr.counters), method))
    return TimingReport(problem=problem_id, alpha=alpha, h=h, rows=tuple(rows))


def run_target(problem_id, alpha, tol, methods, t_list, stencil_size=3, jn=26,
               starter=None):
    """For each (method, horizon): smallest N with max error <= tol, timed.

    The N-search procedure is a doubling bracket plus bisection; the paper's
    analogous table does not state its search rule, so exact N agreement with
    it is not promised.
    """
    if starter is None:
        starter = StarterConfig()
    probe = make_problem(problem_id, alpha, max(t_list))
    quadrature_for(probe.alpha, jn)

    rows = []
    for method in methods:
        for t_end in sorted(t_list):
            problem = make_problem(problem_id, alpha, t_end)
            n = smallest_n_reaching(problem, tol, stencil_size=stencil_size,
                                    jn=jn, starter=starter, method=method)
            begin = time.perf_counter()
            if method == "jpc":
                tr = solve(problem, SolverConfig(h=t_end / n,
                                                 stencil_size=stencil_size,
                                                 jn=jn, starter=starter))
            else:
                tr = adams_solve(problem, t_end / n, n)
            wall = time.perf_counter() - begin
            rows.append(TimingRow(n, wall, _accesses(tr.counters), method))
    return TimingReport(problem=problem_id, alpha=alpha, h=None, rows=tuple(rows))


def smallest_n_reaching(problem, tol, stencil_size=3, jn=26, starter=None,
                        method="jpc", n_max=1 << 22):
    """Smallest step count with max error <= tol, by doubling then bisection.

    Best-effort: assumes the error is monotone in N near the answer, which
    holds in the asymptotic regime the tables report.
    """
    if method not in ("jpc", "adams"):
        raise ValueError(f"method must be 'jpc' or 'adams', got {method!r}")
    if problem.exact is None:
        raise ValueError("needs a problem with an exact solution")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if starter is None:
        starter = StarterConfig()

    def err(n):
        if method == "adams":
            tr = adams_solve(problem, problem.T / n, n)
        else:
            cfg = SolverConfig(h=problem.T / n, stencil_size=stencil_size,
                               jn=jn, starter=starter)
            tr = solve(problem, cfg)
        return _max_error(tr, problem.exact)

    n = stencil_size
    while err(n) > tol:
        n *= 2
        if n > n_max:
            raise ValueError(f"error still above {tol:g} at N={n // 2}")
    if n == stencil_size:
        return n
    lo, hi = n // 2, n  # err(lo) > tol >= err(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if err(mid) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


def _real(v):
    return format(v, ".17g")


def to_csv(report):
    if isinstance(report, ConvergenceReport):
        lines = [_CONV_HEADER]
        for row in report.rows:
            order = "" if row.observed_order is None else _real(row.observed_order)
            lines.append(f"{_real(row.h)},{_real(row.max_error)},{order}")
    else:
        lines = [_TIMING_HEADER]
        for row in report.rows:
            lines.append(f"{row.n_steps},{_real(row.wall_seconds)},"
                         f"{row.rhs_evals},{row.method}")
    return "\n".join(lines) + "\n"


def to_json(report):
    if isinstance(report, ConvergenceReport):
        payload = {
            "kind": "convergence",
            "alpha": report.alpha,
            "stencil_size": report.stencil_size,
            "jn": report.jn,
            "method": report.method,
            "problem": report.problem,
            "starter": report.starter,
            "rows": [
                {"h": r.h, "max_error": r.max_error,
                 "observed_order": r.observed_order, "status": r.status}
                for r in report.rows
            ],
        }
    else:
        payload = {
            "kind": "timing",
            "problem": report.problem,
            "alpha": report.alpha,
            "h": report.h,
            "rows": [
                {"n_steps": r.n_steps, "wall_seconds": r.wall_seconds,
                 "rhs_evals": r.rhs_evals, "method": r.method}
                for r in report.rows
            ],
        }
    return json.dumps(payload, indent=2) + "\n"


def export(report, fmt, path):
    """Write a report to ``path`` as ``csv`` or ``json``."""
    if fmt == "csv":
        text = to_csv(report)
    elif fmt == "json":
        text = to_json(report)
    else:
        raise ValueError(f"unknown format {fmt!r} (known: csv, json)")
    with open(path, "w") as fh:
        fh.write(text)


def _parse_convergence_csv(lines):
    rows = []
    for line in lines:
        h_s, err_s, order_s = line.split(",")
        h, err = float(h_s), float(err_s)
        order = None if order_s == "" else float(order_s)
        if order is not None and order <= 0.0:
            status = ROW_GROWING
        else:
            status = ROW_OK
        rows.append(ConvergenceRow(h, err, order, status))
    return ConvergenceReport(alpha=None, stencil_size=None, jn=None, method="",
                             problem="", starter="", rows=tuple(rows))


def _parse_timing_csv(lines):
    rows = []
    for line in lines:
        n_s, wall_s, evals_s, method = line.split(",")
        rows.append(TimingRow(int(n_s), float(wall_s), int(evals_s), method))
    return TimingReport(problem="", alpha=None, h=None, rows=tuple(rows))


def _from_json(payload):
    if payload.get("kind") == "convergence":
        rows = tuple(
            ConvergenceRow(r["h"], r["max_error"], r["observed_order"],
                           r.get("status", ROW_OK))
            for r in payload["rows"]
        )
        return ConvergenceReport(payload["alpha"], payload["stencil_size"],
                                 payload["jn"], payload["method"],
                                 payload["problem"], payload["starter"], rows)
    if payload.get("kind") == "timing":
        rows = tuple(
            TimingRow(r["n_steps"], r["wall_seconds"], r["rhs_evals"], r["method"])
            for r in payload["rows"]
        )
        return TimingReport(payload["problem"], payload["alpha"], payload["h"], rows)
    raise ValueError(f"unknown report kind {payload.get('kind')!r}")


def loads(text):
    """Parse a report from exported text (JSON or either CSV layout).

    CSV carries rows only, so metadata fields come back empty; JSON round-trips
    the full report.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty report text")
    if stripped.startswith("{"):
        return _from_json(json.loads(stripped))
    lines = stripped.splitlines()
    if lines[0] == _CONV_HEADER:
        return _parse_convergence_csv(lines[1:])
    if lines[0] == _TIMING_HEADER:
        return _parse_timing_csv(lines[1:])
    raise ValueError(f"unrecognized report header {lines[0]!r}")


def load(path):
    with open(path) as fh:
        return loads(fh.read())


def format_table(report):
    """Console rendering with aligned columns (not a serialization format)."""
    if isinstance(report, ConvergenceReport):
        out = [f"{'h':>12}  {'max_error':>13}  {'order':>7}  status"]
        for r in report.rows:
            order = "" if r.observed_order is None else f"{r.observed_order:7.2f}"
            out.append(f"{r.h:12.6g}  {r.max_error:13.6e}  {order:>7}  {r.status}")
    else:
        out = [f"{'method':>7}  {'N':>9}  {'wall_s':>11}  {'rhs_evals':>12}"]
        for r in report.rows:
            out.append(f"{r.method:>7}  {r.n_steps:>9}  {r.wall_seconds:11.4e}  "
                       f"{r.rhs_evals:>12}")
    return "\n".join(out)


def with_status(report):
    """Worst row status in the report ("ok" < "growing" < "diverged")."""
    rank = {ROW_OK: 0, ROW_GROWING: 1, ROW_DIVERGED: 2}
    worst = ROW_OK
    for row in report.rows:
        if rank[row.status] > rank[worst]:
            worst = row.status
    return worst
