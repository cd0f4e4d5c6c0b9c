"""One-dimensional Robin frequencies on the unit interval.

The frequency k_n(sigma) is the unique solution of the secular equation
tan(k) = 2*sigma*k/(k^2 - sigma^2) in the bracket [n*pi, (n+1)*pi].  The
equation splits by symmetry class into

    even n:   k * tan(k/2) = sigma,
    odd  n:  -k * cot(k/2) = sigma,

and with the offset d = k - n*pi both classes reduce to the single
well-conditioned form (n*pi + d) * tan(d/2) = sigma, d in [0, pi).  All
solves, residuals and gaps below work in the offset variable, which keeps
full relative precision even for large n where k itself carries ~k*eps of
representation noise.

Everything here is a pure function of its arguments; there is no caching
or other shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _backend
from .errors import DomainError, PrecisionError

#: Bound on the normalized parity-form residual of every returned frequency.
TOL_SECULAR = 1e-12

#: Largest admissible bracket index; keeps n*pi representable to < 1 ulp*pi.
N_MAX = 2**26


def _check_sigma(sigma) -> float:
    sigma = float(sigma)
    if not math.isfinite(sigma) or sigma < 0.0:
        raise DomainError(f"sigma must be finite and >= 0, got {sigma}")
    return sigma


def _check_n(n) -> int:
    if n != int(n):
        raise DomainError(f"bracket index must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"bracket index must be >= 0, got {n}")
    if n > N_MAX:
        raise PrecisionError(
            f"bracket index {n} exceeds {N_MAX}; n*pi would lose more than "
            "1 ulp*pi of 64-bit precision"
        )
    return n


def secular_residual(n: int, offset: float, sigma: float) -> float:
    """Normalized parity-form defect of a candidate offset.

    Evaluates ((n*pi + d)*tan(d/2) - sigma) / (1 + k), which equals the
    even/odd secular residual k*tan(k/2)-sigma resp. -k*cot(k/2)-sigma up
    to the exact trig identity tan((n*pi+d)/2) = tan(d/2) (n even) /
    -cot((n*pi+d)/2) = tan(d/2) (n odd).
    """
    k = n * math.pi + offset
    return ((n * math.pi + offset) * math.tan(0.5 * offset) - sigma) / (1.0 + k)


@dataclass(frozen=True)
class Frequency:
    """One 1D Robin frequency with its bracket index and solve defect.

    ``offset`` is k - n*pi; it carries the full relative accuracy of the
    solve and should be preferred over ``k`` in any cancellation-prone
    arithmetic (finite differences, Robin-Neumann gaps).
    """

    n: int
    sigma: float
    k: float
    offset: float
    residual: float
    parity: str

    @property
    def gap(self) -> float:
        """k_n(sigma)^2 - k_n(0)^2, computed without cancellation."""
        return self.offset * (2.0 * self.n * math.pi + self.offset)


@dataclass(frozen=True)
class ScaledFrequency:
    """Robin frequency on an interval of length L: k = k_n(sigma*L)/L."""

    L: float
    n: int
    sigma: float
    k: float
    offset: float
    residual: float
    parity: str


def solve_k(n: int, sigma: float) -> Frequency:
    """Solve the secular equation in the bracket [n*pi, (n+1)*pi].

    Parameters
    ----------
    n : int
        Bracket index, 0 <= n <= 2**26.
    sigma : float
        Robin constant, finite and >= 0.  sigma = 0 returns exactly n*pi
        (and exactly 0 for n = 0).

    Returns
    -------
    Frequency
        k is strictly increasing in sigma at fixed n, lies in its bracket,
        and the normalized parity residual is below TOL_SECULAR.
    """
    n = _check_n(n)
    sigma = _check_sigma(sigma)
    if sigma == 0.0:
        k = 0.0 if n == 0 else n * math.pi
        return Frequency(n, 0.0, k, 0.0, 0.0, _parity(n))
    offset = _backend.solve_offset(n, sigma)
    return Frequency(
        n,
        sigma,
        n * math.pi + offset,
        offset,
        secular_residual(n, offset, sigma),
        _parity(n),
    )


def _parity(n: int) -> str:
    return "even" if n % 2 == 0 else "odd"


def solve_offsets(ns, sigma: float):
    """Offsets k_n(sigma) - n*pi for an array of bracket indices.

    Vectorized building block for spectrum enumeration; does the same
    Newton iteration as solve_k without the per-root dataclass wrapping.
    """
    sigma = _check_sigma(sigma)
    return _backend.solve_offsets(ns, sigma)


def frequency_gap(n: int, sigma: float) -> float:
    """k_n(sigma)^2 - (n*pi)^2 in offset form (no cancellation)."""
    n = _check_n(n)
    sigma = _check_sigma(sigma)
    if sigma == 0.0:
        return 0.0
    d = _backend.solve_offset(n, sigma)
    return d * (2.0 * n * math.pi + d)


def dirichlet_limit(n: int) -> float:
    """The sigma -> infinity limit (n+1)*pi of k_n; brackets searches."""
    n = _check_n(n)
    return (n + 1) * math.pi


def k_derivative_at_zero(n: int) -> float:
    """dk_n/dsigma at sigma = 0, equal to 2/(pi*n) for n >= 1.

    n = 0 is rejected: k_0 is not analytic at sigma = 0 (k_0 ~ sqrt(2*sigma)).
    """
    n = _check_n(n)
    if n == 0:
        raise DomainError("k_0 is not differentiable at sigma = 0")
    return 2.0 / (math.pi * n)


def k0_small_sigma(sigma: float) -> float:
    """k_0(sigma) in the regime 0 < sigma < pi/2 where k_0 < pi/2.

    Satisfies k_0(sigma)^2 = 2*sigma + O(sigma^2) and k_0(sigma) > sigma.
    """
    sigma = _check_sigma(sigma)
    if not 0.0 < sigma < 0.5 * math.pi:
        raise DomainError(
            f"k0_small_sigma requires 0 < sigma < pi/2, got {sigma}"
        )
    return solve_k(0, sigma).k


def solve_k_scaled(L: float, n: int, sigma: float) -> ScaledFrequency:
    """Robin frequency on [0, L]: k_{L;n}(sigma) = k_n(sigma*L) / L."""
    L = float(L)
    if not math.isfinite(L) or L <= 0.0:
        raise DomainError(f"interval length must be finite and > 0, got {L}")
    unit = solve_k(n, _check_sigma(sigma) * L)
    return ScaledFrequency(
        L, n, float(sigma), unit.k / L, unit.offset, unit.residual, unit.parity
    )
