"""Numpy implementation of the hot kernels.

This is the fallback twin of the compiled ``_fastcore`` extension; the
two expose identical signatures and are selected in ``_backend``.  All
routines work on the reduced secular variable: with ``k = n*pi + d`` and
``u = tan(d/2)``, both parity classes of the one-dimensional secular
equation collapse to

    phi(u) = (n*pi + 2*atan(u)) * u - sigma = 0,   u >= 0,

which is increasing and convex in u, so Newton iteration started on the
overshoot side converges monotonically without any bracketing.
"""

import math

import numpy as np

_EPS = 2.220446049231364e-16  # 2 ulp of 1.0
_SPLIT = 134217729.0


def _u_start(n, sigma):
    if n >= 1:
        return sigma / (n * math.pi)
    # n = 0: any u0 with phi(u0) >= 0
    return math.sqrt(0.75 * sigma) if sigma <= 4.0 / 3.0 else sigma


def solve_offset(n, sigma):
    """Offset d = k_n(sigma) - n*pi of the 1D Robin frequency, scalar."""
    if sigma == 0.0:
        return 0.0
    npi = n * math.pi
    u = _u_start(n, sigma)
    for _ in range(100):
        at = math.atan(u)
        phi = (npi + 2.0 * at) * u - sigma
        dphi = npi + 2.0 * at + 2.0 * u / (1.0 + u * u)
        du = phi / dphi
        u -= du
        if abs(du) <= _EPS * abs(u):
            break
    return 2.0 * math.atan(u)


def solve_offsets(ns, sigma):
    """Offsets for an int array of bracket indices at one sigma."""
    ns = np.asarray(ns)
    if sigma == 0.0:
        return np.zeros(ns.shape, dtype=np.float64)
    npi = ns * math.pi
    u = np.empty(ns.shape, dtype=np.float64)
    pos = ns >= 1
    np.divide(sigma, npi, out=u, where=pos)
    u[~pos] = _u_start(0, sigma)
    for _ in range(100):
        at = np.arctan(u)
        phi = (npi + 2.0 * at) * u - sigma
        dphi = npi + 2.0 * at + 2.0 * u / (1.0 + u * u)
        du = phi / dphi
        u -= du
        if np.all(np.abs(du) <= _EPS * np.abs(u)):
            break
    return 2.0 * np.arctan(u)


def hl_scan(theta_hi, theta_lo, thresh, n_lo, n_hi, chunk=65536):
    """First n1 in [n_lo, n_hi) with frac(theta*n1^2) > thresh, else -1.

    theta is a double-double (theta_hi, theta_lo); the product
    theta_hi*n1^2 is formed error-free (Dekker two-product), so the
    fractional part stays accurate up to n1 ~ 1e6.
    """
    c = _SPLIT * theta_hi
    ahi = c - (c - theta_hi)
    alo = theta_hi - ahi
    for start in range(n_lo, n_hi, chunk):
        stop = min(start + chunk, n_hi)
        n1 = np.arange(start, stop, dtype=np.float64)
        nsq = n1 * n1
        p = theta_hi * nsq
        cb = _SPLIT * nsq
        bhi = cb - (cb - nsq)
        blo = nsq - bhi
        err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
        f = (p - np.floor(p)) + (err + theta_lo * nsq)
        f = np.where(f >= 1.0, f - 1.0, np.where(f < 0.0, f + 1.0, f))
        hits = np.nonzero(f > thresh)[0]
        if hits.size:
            return start + int(hits[0])
    return -1


def window_pair_diffs(lam, window):
    """All differences lam[j]-lam[i] with i<j and difference < window.

    lam must be sorted ascending.  Used both by the pure pair-correlation
    path and by custom (python-callable) kernels.
    """
    lam = np.asarray(lam, dtype=np.float64)
    n = lam.size
    hi_idx = np.searchsorted(lam, lam + window, side="left")
    counts = hi_idx - np.arange(1, n + 1)
    np.maximum(counts, 0, out=counts)
    total = int(counts.sum())
    i_idx = np.repeat(np.arange(n), counts)
    offs = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    j_idx = i_idx + 1 + offs
    return lam[j_idx] - lam[i_idx]


def _kernel_values(x, kind, rho):
    y = np.abs(x) / rho
    out = np.zeros(y.shape, dtype=np.float64)
    inside = y < 1.0
    yi = y[inside]
    if kind == 0:  # bump
        out[inside] = np.exp(-1.0 / (1.0 - yi * yi))
    elif kind == 1:  # smooth tent
        out[inside] = np.exp(-(yi * yi) / (1.0 - yi * yi))
    else:
        raise ValueError(f"unknown kernel kind {kind}")
    return out


def r2_builtin_sum(lam, inv_sbar, kind, rho):
    """Sum of f((lam[j]-lam[i])/sbar) over pairs i<j within the support."""
    window = rho / inv_sbar
    diffs = window_pair_diffs(lam, window)
    return float(np.sum(_kernel_values(diffs * inv_sbar, kind, rho)))
