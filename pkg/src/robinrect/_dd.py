"""Error-free float transforms and minimal double-double arithmetic.

A double-double value is an unevaluated sum ``hi + lo`` of two floats with
``|lo| <= ulp(hi)/2``, giving roughly 32 significant decimal digits.  Only
the handful of operations needed elsewhere in the package are provided.
"""

import math

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


def two_sum(a, b):
    """Exact sum: returns (s, e) with s = fl(a+b) and a+b = s+e exactly."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def two_prod(a, b):
    """Exact product: returns (p, e) with p = fl(a*b) and a*b = p+e exactly."""
    p = a * b
    c = _SPLIT * a
    ahi = c - (c - a)
    alo = a - ahi
    c = _SPLIT * b
    bhi = c - (c - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def dd_add(a, b):
    """Sum of two double-doubles (each a (hi, lo) pair)."""
    s, e = two_sum(a[0], b[0])
    e += a[1] + b[1]
    hi, lo = two_sum(s, e)
    return hi, lo


def dd_mul(a, b):
    """Product of two double-doubles."""
    p, e = two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    hi, lo = two_sum(p, e)
    return hi, lo


def dd_div(a, b):
    """Quotient of two double-doubles (one Newton correction)."""
    q1 = a[0] / b[0]
    r = dd_add(a, dd_mul((-q1, 0.0), b))
    q2 = (r[0] + r[1]) / b[0]
    hi, lo = two_sum(q1, q2)
    return hi, lo


def dd_from_square(x):
    """x*x as a double-double, exact for a float x."""
    return two_prod(x, x)


def dd_frac(a):
    """Fractional part and integer part of a double-double.

    Returns (frac, int_part) with frac in [0, 1).  The hi part must be
    below 2**53 for the integer part to be exact.
    """
    ip = math.floor(a[0])
    f = (a[0] - ip) + a[1]  # a[0]-ip is exact (Sterbenz)
    if f >= 1.0:
        f -= 1.0
        ip += 1
    elif f < 0.0:
        f += 1.0
        ip -= 1
    return f, int(ip)


# High-precision constants as (hi, lo) pairs.
PI_DD = (3.141592653589793, 1.2246467991473532e-16)
PI2_DD = (9.869604401089358, 6.265295508739711e-16)
SQRT2_DD = (1.4142135623730951, -9.667293313452913e-17)
GOLDEN_DD = (1.618033988749895, -5.432115203682506e-17)
