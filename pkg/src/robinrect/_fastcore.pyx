# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_purecore``: scalar/array secular solves, the
Hardy-Littlewood square scan, and the windowed pair-correlation sum.

Kept in lockstep with the numpy fallback: identical iteration schemes and
stopping rules, so the two backends agree to a few ulp.
"""

from libc.math cimport atan, exp, fabs, floor, fma, sqrt

import numpy as np

cdef double M_PI = 3.141592653589793
cdef double EPS = 2.220446049231364e-16  # 2 ulp of 1.0


cdef inline double _u_start(long n, double sigma) nogil:
    if n >= 1:
        return sigma / (n * M_PI)
    if sigma <= 4.0 / 3.0:
        return sqrt(0.75 * sigma)
    return sigma


cdef double _solve_u(long n, double sigma) nogil:
    cdef double npi = n * M_PI
    cdef double u = _u_start(n, sigma)
    cdef double at, phi, dphi, du
    cdef int it
    for it in range(100):
        at = atan(u)
        phi = (npi + 2.0 * at) * u - sigma
        dphi = npi + 2.0 * at + 2.0 * u / (1.0 + u * u)
        du = phi / dphi
        u -= du
        if fabs(du) <= EPS * fabs(u):
            break
    return u


def solve_offset(long n, double sigma):
    """Offset d = k_n(sigma) - n*pi of the 1D Robin frequency, scalar."""
    if sigma == 0.0:
        return 0.0
    return 2.0 * atan(_solve_u(n, sigma))


def solve_offsets(ns, double sigma):
    """Offsets for an int array of bracket indices at one sigma."""
    cdef long[::1] nv = np.ascontiguousarray(ns, dtype=np.int64)
    out = np.empty(nv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    if sigma == 0.0:
        out[:] = 0.0
        return out
    with nogil:
        for i in range(nv.shape[0]):
            ov[i] = 2.0 * atan(_solve_u(nv[i], sigma))
    return out


def hl_scan(double theta_hi, double theta_lo, double thresh,
            long n_lo, long n_hi):
    """First n1 in [n_lo, n_hi) with frac(theta*n1^2) > thresh, else -1."""
    cdef long n1
    cdef double nsq, p, err, f
    with nogil:
        for n1 in range(n_lo, n_hi):
            nsq = <double> (n1 * n1)
            p = theta_hi * nsq
            err = fma(theta_hi, nsq, -p) + theta_lo * nsq
            f = (p - floor(p)) + err
            if f >= 1.0:
                f -= 1.0
            elif f < 0.0:
                f += 1.0
            if f > thresh:
                with gil:
                    return n1
    return -1


cdef inline double _kernel_value(double x, int kind, double rho) nogil:
    cdef double y = fabs(x) / rho
    if y >= 1.0:
        return 0.0
    if kind == 0:  # bump
        return exp(-1.0 / (1.0 - y * y))
    return exp(-(y * y) / (1.0 - y * y))  # smooth tent


def r2_builtin_sum(lam, double inv_sbar, int kind, double rho):
    """Sum of f((lam[j]-lam[i])/sbar) over pairs i<j within the support."""
    cdef double[::1] lv = np.ascontiguousarray(lam, dtype=np.float64)
    cdef Py_ssize_t n = lv.shape[0]
    cdef double window = rho / inv_sbar
    cdef double total = 0.0
    cdef double diff
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                diff = lv[j] - lv[i]
                if diff >= window:
                    break
                total += _kernel_value(diff * inv_sbar, kind, rho)
    return total
