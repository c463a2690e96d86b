"""Command-line benchmark harness.

Subcommands: ``quad`` (dump a quadrature rule), ``solve`` (one run),
``converge`` (step-size sweep), ``bench`` (wall-time/operation-count
scaling), ``mlf`` (evaluate the relaxation special function).

Every subcommand accepts ``--config FILE`` holding ``key=value`` lines
(keys are the long option names; ``#`` comments and blank lines allowed);
explicit flags win over the file.  Exit codes: 0 success, 1 configuration
error, 2 numerical divergence.
"""

import math

import click
from click.core import ParameterSource

from jacobipc.adams import EXACT, REFINED_ADAMS, StarterConfig
from jacobipc.expr import compile_rhs, evaluate, parse as parse_expr
from jacobipc.mittag import DEFAULT_TOL, mittag_leffler
from jacobipc.problems import ProblemSpec, make_problem, problem_ids
from jacobipc.quadrature import JacobiWeight, gauss_lobatto_rule
from jacobipc.reports import (ROW_DIVERGED, export, format_table,
                              run_convergence, run_target, run_timing,
                              with_status)
from jacobipc.solver import SolverConfig, SplitConfig, solve, step_count
from jacobipc.trajectory import STATUS_OK, DivergenceError


class Diverged(Exception):
    """Run finished (output already emitted) but hit the divergence guard."""


def _merge_config(ctx, kw):
    """Overlay key=value config-file entries onto unset parameters."""
    path = kw.get("config")
    if not path:
        return kw
    by_name = {p.name: p for p in ctx.command.params}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise click.UsageError(f"{path}:{lineno}: expected key=value")
            name = key.strip().replace("-", "_")
            param = by_name.get(name)
            if param is None or name == "config":
                raise click.UsageError(f"{path}:{lineno}: unknown key {key.strip()!r}")
            if ctx.get_parameter_source(name) == ParameterSource.COMMANDLINE:
                continue
            kw[name] = param.type.convert(value.strip(), param, ctx)
    return kw


def _require(kw, *names):
    for name in names:
        if kw[name] is None:
            raise click.UsageError(f"missing required option --{name.replace('_', '-')}")


def _parse_h(text):
    """Step size as a decimal or a p/q fraction ("0.025" or "1/40")."""
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return float(num) / float(den)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"bad step size {text!r}") from None
    try:
        return float(text)
    except ValueError:
        raise click.UsageError(f"bad step size {text!r}") from None


def _starter_for(kw, problem):
    if kw["starter"] is not None:
        return _parse_starter(kw["starter"])
    if problem.exact is not None:
        return StarterConfig(mode=EXACT)
    return StarterConfig(mode=REFINED_ADAMS)


def _parse_starter(text):
    if text == "exact":
        return StarterConfig(mode=EXACT)
    if text == "refined":
        return StarterConfig(mode=REFINED_ADAMS)
    if text.startswith("refined:"):
        try:
            return StarterConfig(mode=REFINED_ADAMS, k=int(text[len("refined:"):]))
        except ValueError as exc:
            raise click.UsageError(f"bad starter {text!r}: {exc}") from None
    raise click.UsageError(
        f"bad starter {text!r} (use exact, refined, or refined:K)")


def _parse_init(text):
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise click.UsageError(f"bad initial values {text!r}") from None


def _build_problem(kw, need_exact=False):
    """Problem from --problem (registry) or --rhs/--init (+ --exact) flags."""
    pid, rhs, alpha, t_end = kw["problem"], kw["rhs"], kw["alpha"], kw["t_end"]
    if (pid is None) == (rhs is None):
        raise click.UsageError("give exactly one of --problem or --rhs")
    if pid is not None:
        if kw["init"] is not None:
            raise click.UsageError("built-in problems carry their initial values")
        return make_problem(pid, alpha, t_end)
    if kw["init"] is None:
        raise click.UsageError("--rhs needs --init (comma-separated x(0), x'(0), ...)")
    exact = None
    if kw.get("exact") is not None:
        tree = parse_expr(kw["exact"])

        def exact(t, _tree=tree, _alpha=alpha):
            return evaluate(_tree, t, math.nan, _alpha)

    elif need_exact:
        raise click.UsageError("--rhs needs --exact (expression in t) here")
    return ProblemSpec(alpha, _parse_init(kw["init"]), compile_rhs(rhs, alpha),
                       t_end, exact=exact, name=f"rhs:{rhs}")


def _split_config(kw):
    if kw["split_t0"] is None:
        return None
    return SplitConfig(t0=kw["split_t0"], aux_jn=kw["split_jn"],
                       fine_factor=kw["split_fine"])


def _emit(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


_CONFIG_OPT = click.option(
    "--config", type=click.Path(exists=True, dir_okay=False),
    help="key=value defaults; explicit flags win")


def _problem_opts(fn):
    for deco in reversed([
        click.option("--problem", type=click.Choice(problem_ids()),
                     help="built-in benchmark problem"),
        click.option("--rhs", help="right-hand side f(t, x) as an expression"),
        click.option("--init", help="initial values for --rhs, comma-separated"),
        click.option("--alpha", type=float, help="derivative order in (0, 2]"),
        click.option("--t-end", type=float, default=1.0, show_default=True,
                     help="horizon T"),
    ]):
        fn = deco(fn)
    return fn


def _solver_opts(fn):
    for deco in reversed([
        click.option("--stencil", type=int, default=3, show_default=True,
                     help="interpolation stencil size (= expected order)"),
        click.option("--jn", type=int, default=26, show_default=True,
                     help="quadrature rule index (rule has jn+1 points)"),
        click.option("--starter",
                     help="exact, refined, or refined:K "
                          "[default: exact when the problem has an exact "
                          "solution, else refined]"),
        click.option("--split-t0", type=float, help="split point for a two-segment run"),
        click.option("--split-jn", type=int, help="auxiliary rule index [default: 2*jn]"),
        click.option("--split-fine", type=int, default=10, show_default=True,
                     help="head-segment substep refinement factor"),
    ]):
        fn = deco(fn)
    return fn


@click.group()
def cli():
    """Benchmark harness for a Jacobi-quadrature predictor-corrector solver
    of Caputo initial value problems."""


@cli.command()
@click.option("--jacobi-a", type=float, help="exponent on (1-s)")
@click.option("--jacobi-b", type=float, default=0.0, show_default=True,
              help="exponent on (1+s)")
@click.option("--points", type=int, help="number of nodes (>= 2)")
@click.option("--output", type=click.Path(dir_okay=False))
@_CONFIG_OPT
@click.pass_context
def quad(ctx, **kw):
    """Dump Gauss-Lobatto nodes and weights as CSV."""
    kw = _merge_config(ctx, kw)
    _require(kw, "jacobi_a", "points")
    rule = gauss_lobatto_rule(JacobiWeight(kw["jacobi_a"], kw["jacobi_b"]),
                              kw["points"])
    lines = ["node,weight"]
    for s, w in zip(rule.nodes, rule.weights):
        lines.append(f"{s:.17g},{w:.17g}")
    _emit("\n".join(lines) + "\n", kw["output"])


@cli.command(name="solve")
@_problem_opts
@click.option("--h", "h_text", help='step size ("1/40" or "0.025")')
@click.option("--n", type=int, help="number of steps (h = T/n)")
@_solver_opts
@click.option("--output", type=click.Path(dir_okay=False),
              help="write the trajectory as CSV")
@_CONFIG_OPT
@click.pass_context
def solve_cmd(ctx, **kw):
    """Solve one problem and report the endpoint (and error, if exact)."""
    kw = _merge_config(ctx, kw)
    _require(kw, "alpha")
    if (kw["h_text"] is None) == (kw["n"] is None):
        raise click.UsageError("give exactly one of --h or --n")
    problem = _build_problem(kw)
    split = _split_config(kw)
    span = problem.T - (split.t0 if split else 0.0)
    h = _parse_h(kw["h_text"]) if kw["h_text"] is not None else span / kw["n"]
    cfg = SolverConfig(h=h, stencil_size=kw["stencil"], jn=kw["jn"],
                       starter=_starter_for(kw, problem), split=split)
    tr = solve(problem, cfg)

    if kw["output"]:
        has_exact = problem.exact is not None
        lines = ["t,x,exact,abs_error" if has_exact else "t,x"]
        for i in range(tr.grid.count):
            t, x = tr.grid.t(i), tr.x[i]
            if has_exact:
                ex = problem.exact(t)
                lines.append(f"{t:.17g},{x:.17g},{ex:.17g},{abs(x - ex):.17g}")
            else:
                lines.append(f"{t:.17g},{x:.17g}")
        with open(kw["output"], "w") as fh:
            fh.write("\n".join(lines) + "\n")

    last = tr.grid.count - 1
    click.echo(f"t = {tr.grid.t(last):.17g}  x = {tr.x[last]:.17g}  status = {tr.status}")
    if problem.exact is not None and tr.status == STATUS_OK:
        err = max(abs(tr.x[i] - problem.exact(tr.grid.t(i)))
                  for i in range(tr.grid.count))
        click.echo(f"max_error = {err:.17g}")
    if tr.status != STATUS_OK:
        raise Diverged(f"solution magnitude passed the guard; "
                       f"trajectory truncated at {tr.grid.count} points")


@cli.command()
@_problem_opts
@click.option("--exact", help="exact solution (expression in t) for --rhs")
@click.option("--h-list", help='comma-separated step sizes ("1/10,1/20,1/40")')
@click.option("--n-list", help="comma-separated step counts (h = T/n)")
@_solver_opts
@click.option("--method", type=click.Choice(["jpc", "adams"]), default="jpc",
              show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False))
@_CONFIG_OPT
@click.pass_context
def converge(ctx, **kw):
    """Step-size sweep: max errors and observed orders against the exact
    solution, table to stdout plus optional CSV/JSON export."""
    kw = _merge_config(ctx, kw)
    _require(kw, "alpha")
    if (kw["h_list"] is None) == (kw["n_list"] is None):
        raise click.UsageError("give exactly one of --h-list or --n-list")
    problem = _build_problem(kw, need_exact=True)
    if kw["h_list"] is not None:
        hs = [_parse_h(tok) for tok in kw["h_list"].split(",")]
    else:
        try:
            span = problem.T - (kw["split_t0"] or 0.0)
            hs = [span / int(tok) for tok in kw["n_list"].split(",")]
        except ValueError:
            raise click.UsageError(f"bad --n-list {kw['n_list']!r}") from None
    report = run_convergence(
        problem, hs, stencil_size=kw["stencil"], jn=kw["jn"],
        starter=_starter_for(kw, problem), split=_split_config(kw),
        method=kw["method"])
    click.echo(format_table(report))
    if kw["output"]:
        export(report, kw["fmt"], kw["output"])
    if with_status(report) == ROW_DIVERGED:
        raise Diverged("at least one sweep cell hit the divergence guard")


@cli.command()
@click.option("--problem", type=click.Choice(problem_ids()))
@click.option("--alpha", type=float)
@click.option("--h", "h_text", help='step size ("1/40" or "0.025")')
@click.option("--methods", default="jpc,adams", show_default=True)
@click.option("--t-list", default="0.5,1,2", show_default=True,
              help="comma-separated horizons")
@click.option("--target-error", type=float,
              help="instead of timing at --h, search for the smallest N "
                   "whose max error meets this bound, then time it")
@click.option("--stencil", type=int, default=3, show_default=True)
@click.option("--jn", type=int, default=26, show_default=True)
@click.option("--starter", default="exact", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False))
@_CONFIG_OPT
@click.pass_context
def bench(ctx, **kw):
    """Wall time and f-value access counts per (method, horizon) cell."""
    kw = _merge_config(ctx, kw)
    _require(kw, "problem", "alpha")
    methods = [tok.strip() for tok in kw["methods"].split(",") if tok.strip()]
    try:
        t_list = [float(tok) for tok in kw["t_list"].split(",")]
    except ValueError:
        raise click.UsageError(f"bad --t-list {kw['t_list']!r}") from None
    starter = _parse_starter(kw["starter"])
    if kw["target_error"] is not None:
        report = run_target(kw["problem"], kw["alpha"], kw["target_error"],
                            methods, t_list, stencil_size=kw["stencil"],
                            jn=kw["jn"], starter=starter)
    else:
        _require(kw, "h_text")
        report = run_timing(kw["problem"], kw["alpha"], _parse_h(kw["h_text"]),
                            methods, t_list, stencil_size=kw["stencil"],
                            jn=kw["jn"], starter=starter)
    click.echo(format_table(report))
    if kw["output"]:
        export(report, kw["fmt"], kw["output"])


@cli.command()
@click.option("--alpha", type=float, help="order in (0, 2]")
@click.option("--z", type=float, help="argument (must be <= 0)")
@click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True)
@_CONFIG_OPT
@click.pass_context
def mlf(ctx, **kw):
    """Evaluate the one-parameter relaxation special function at z <= 0."""
    kw = _merge_config(ctx, kw)
    _require(kw, "alpha", "z")
    click.echo(f"{mittag_leffler(kw['alpha'], kw['z'], kw['tol']):.17g}")


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="jacobipc", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except Diverged as exc:
        click.echo(f"diverged: {exc}", err=True)
        return 2
    except DivergenceError as exc:
        click.echo(f"diverged: {exc}", err=True)
        return 2
    except (ValueError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
