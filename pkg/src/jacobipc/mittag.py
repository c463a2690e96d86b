"""Evaluation of E_a(z) = sum_k z^k / Gamma(a*k + 1) for real z <= 0.

Three regimes, picked per call: the defining power series in float64 with
compensated summation (small |z|), the algebraic large-argument expansion at
optimal truncation (|z| beyond a per-order switch point), and an
extended-precision series for the cancellation gap in between.  a = 1 and
a = 2 short-circuit to exp and cos(sqrt(.)).
"""

import math
from functools import lru_cache

import mpmath as mp

DEFAULT_TOL = 1e-10
SWITCH_TARGET = 1e-11
MAX_TERMS = 2000
LN_PI = math.log(math.pi)


def _series64(alpha, x, tol):
    """Power series at z = -x in float64; returns (value, trustworthy)."""
    total, comp, sum_abs = 1.0, 0.0, 1.0
    lnx = math.log(x)
    r = x ** (1.0 / alpha)
    n = MAX_TERMS
    for k in range(1, MAX_TERMS):
        m = math.exp(k * lnx - math.lgamma(alpha * k + 1.0))
        t = -m if k & 1 else m
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        sum_abs += m
        if m < 1e-17 * (1.0 + abs(total)) and alpha * k + 1.0 > r:
            n = k
            break
    else:
        return total, False
    # rounding model: each add contributes ~eps of the running magnitude
    err = sum_abs * (2e-16 + 2e-17 * n)
    return total, err <= 0.5 * tol


def _asymptotic(alpha, x, tol):
    """Large-x expansion of E_a(-x); returns (value, error estimate).

    Algebraic part sum_k (-1)^(k+1) x^-k / Gamma(1 - a*k), written through
    the reflection formula so magnitudes stay in log space, truncated where
    the term envelope turns; for a > 1 the pair of conjugate exponential
    modes contributes a damped oscillation on top.
    """
    lnx = math.log(x)
    total, comp = 0.0, 0.0
    prev_env = math.inf
    err = math.inf
    for k in range(1, 400):
        y = alpha * k
        env = math.lgamma(y) - k * lnx - LN_PI
        if env >= prev_env:
            err = math.exp(min(env, 700.0))
            break
        prev_env = env
        s = math.sin(math.pi * y)
        t = (s if k & 1 else -s) * math.exp(env)
        yy = t - comp
        ss = total + yy
        comp = (ss - total) - yy
        total = ss
        if env < -41.0:  # below 1e-18: machine-level truncation
            err = math.exp(env)
            break
    if alpha > 1.0:
        r = x ** (1.0 / alpha)
        th = math.pi / alpha
        total += (2.0 / alpha) * math.exp(r * math.cos(th)) * math.cos(r * math.sin(th))
    return total, err


def _asym_floor(alpha, x):
    """First omitted term magnitude at the expansion's optimal truncation."""
    lnx = math.log(x)
    prev = math.inf
    env = math.inf
    for k in range(1, 400):
        env = math.lgamma(alpha * k) - k * lnx - LN_PI
        if env >= prev:
            break
        prev = env
    return math.exp(min(env, 700.0))


def _series_mp(alpha, x, tol):
    """Power series at z = -x with working precision sized to the peak term."""
    r = x ** (1.0 / alpha)
    dps = int(35 + 0.4343 * r - math.log10(tol))
    with mp.workdps(dps):
        a = mp.mpf(alpha)
        mz = mp.mpf(-x)
        total = mp.mpf(1)
        p = mp.mpf(1)
        floor = mp.mpf(10) ** (-dps + 5)
        for k in range(1, 200000):
            p *= mz
            term = p / mp.gamma(a * k + 1)
            total += term
            if abs(term) < floor * (1 + abs(total)) and alpha * k + 1.0 > r:
                return float(total)
    raise RuntimeError("series did not attain the requested tolerance")


@lru_cache(maxsize=None)
def z_switch(alpha):
    """Smallest |z| where the large-argument expansion reaches SWITCH_TARGET.

    Found by bisection on the optimal-truncation floor (monotone in |z|)
    and checked once against the extended-precision series at the
    crossover.
    """
    hi = max(8.0, 2.0 * 25.33**alpha)
    for _ in range(60):
        if _asym_floor(alpha, hi) <= SWITCH_TARGET:
            break
        hi *= 2.0
    else:
        raise RuntimeError("no usable asymptotic regime found")
    lo = min(0.25, 0.5 * hi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if _asym_floor(alpha, mid) <= SWITCH_TARGET:
            hi = mid
        else:
            lo = mid
    val, _ = _asymptotic(alpha, hi, SWITCH_TARGET)
    ref = _series_mp(alpha, hi, 1e-20)
    if abs(val - ref) > 1e-10:
        raise RuntimeError(f"regime mismatch at the switch point for order {alpha}")
    return hi


def mittag_leffler(alpha, z, tol=DEFAULT_TOL):
    """E_alpha(z) for 0 < alpha <= 2 and real z <= 0, to absolute tol."""
    if not 0.0 < alpha <= 2.0:
        raise ValueError("order must lie in (0, 2]")
    if z > 0.0:
        raise ValueError("argument must be nonpositive")
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    if alpha == 1.0:
        return math.exp(z)
    if alpha == 2.0:
        return math.cos(math.sqrt(-z))
    x = -float(z)
    if x == 0.0:
        return 1.0
    if x >= z_switch(alpha):
        val, err = _asymptotic(alpha, x, tol)
        if err <= 0.5 * tol:
            return val
    else:
        val, ok = _series64(alpha, x, tol)
        if ok:
            return val
    return _series_mp(alpha, x, tol)


def ml_solution(alpha, t, tol=DEFAULT_TOL):
    """x(t) = E_alpha(-t^alpha): the decaying relaxation solution."""
    if t < 0.0:
        raise ValueError("time must be nonnegative")
    return mittag_leffler(alpha, -float(t) ** alpha, tol)
