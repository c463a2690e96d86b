# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: stencil-interpolation quadrature sums and the
fractional Adams history sums.  Mirrors jacobipc._kernels_py exactly."""

from libc.math cimport floor, pow

COMPILED = True

cdef double TIE_TOL = 1e-12


def weighted_interp_sum(const double[::1] fvals, Py_ssize_t n, const double[::1] nodes,
                        const double[::1] weights, Py_ssize_t node_count,
                        Py_ssize_t size, Py_ssize_t ln, Py_ssize_t rn,
                        const double[::1] bary, bint corrector,
                        long long[::1] counters):
    cdef Py_ssize_t np1 = n + 1
    cdef Py_ssize_t usable = np1 + 1 if corrector else np1
    cdef double total = 0.0
    cdef long long reads = 0
    cdef Py_ssize_t j, k, le, start, hit
    cdef double theta, x, num, den, d, c
    for j in range(node_count):
        theta = 0.5 * (1.0 + nodes[j]) * np1
        le = <Py_ssize_t>floor(theta + TIE_TOL) + 1
        if le > usable:
            le = usable
        if le <= ln:
            start = 0
        elif corrector:
            start = np1 + 1 - size if le + rn >= np1 + 1 else le - ln
        else:
            start = np1 - size if le + rn >= np1 else le - ln
        x = theta - start
        num = 0.0
        den = 0.0
        hit = -1
        for k in range(size):
            d = x - k
            if -TIE_TOL < d < TIE_TOL:
                hit = k
                break
            c = bary[k] / d
            num += c * fvals[start + k]
            den += c
        if hit >= 0:
            total += weights[j] * fvals[start + hit]
            reads += hit + 1
        else:
            total += weights[j] * (num / den)
            reads += size
    counters[0] += node_count
    counters[1] += reads
    return total


def adams_step_sums(const double[::1] fvals, Py_ssize_t n, double alpha):
    cdef double ap1 = alpha + 1.0
    cdef double pred = 0.0
    cdef double corr = (pow(n, ap1) - (n - alpha) * pow(n + 1, alpha)) * fvals[0]
    cdef double pm1 = 0.0
    cdef double qm1 = 0.0
    cdef double qm = 1.0
    cdef double pm, qp, fj
    cdef Py_ssize_t m
    for m in range(1, n + 1):
        pm = pow(m, alpha)
        qp = pow(m + 1, ap1)
        fj = fvals[n + 1 - m]
        pred += (pm - pm1) * fj
        corr += (qp - 2.0 * qm + qm1) * fj
        pm1 = pm
        qm1 = qm
        qm = qp
    pred += (pow(n + 1, alpha) - pm1) * fvals[0]
    return pred, corr
