"""Confluent hypergeometric (Kummer) function and associated Laguerre polynomials.

``kummer_m`` evaluates M(a, b, z) by its ascending series.  Every physical
state in this package has a non-positive integer first argument, where the
series terminates exactly and M is a polynomial; the infinite-series branch
exists for off-eigenvalue scans.  ``laguerre`` evaluates L_n^(alpha) through
the three-term recurrence in n and serves as an independent cross-check via

    binom(n + alpha, n) * M(-n, alpha + 1, z) == L_n^(alpha)(z).

The terminating series is strongly alternating for large z (the value can be
smaller than the largest term by a factor ~exp(z/2)), so that branch runs in
compensated double-double arithmetic: the identity above must hold to ten
significant figures out to z = 50, n = 20, which is beyond an 80-bit
accumulator.  The infinite-series branch accumulates in extended precision,
which is ample for the non-terminating parameter scans this package performs.

The irregular second solution of Kummer's equation is intentionally absent:
it grows at infinity and never contributes to a normalizable state.
"""

from __future__ import annotations

import numpy as np

__all__ = ["kummer_m", "kummer_m_derivative", "laguerre"]

# Tolerance for recognising integer arguments; the quantization condition
# produces exact integers, so this only guards against benign roundoff.
_INT_TOL = 1e-12
_SERIES_RTOL = 1e-15
_MAX_TERMS = 600

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _as_nonpositive_int(x) -> int | None:
    """Return k >= 0 such that x == -k when x is a non-positive integer."""
    r = round(float(x))
    if abs(x - r) <= _INT_TOL and r <= 0:
        return -r
    return None


# ---------------------------------------------------------------------------
# double-double building blocks (error-free transformations on IEEE doubles)


def _two_sum(x, y):
    s = x + y
    t = s - x
    e = (x - (s - t)) + (y - t)
    return s, e


def _quick_renorm(hi, lo):
    s = hi + lo
    return s, lo - (s - hi)


def _two_prod(x, y):
    p = x * y
    cx = _SPLITTER * x
    xh = cx - (cx - x)
    xl = x - xh
    cy = _SPLITTER * y
    yh = cy - (cy - y)
    yl = y - yh
    e = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    return p, e


def _dd_add(hi1, lo1, hi2, lo2):
    s, e = _two_sum(hi1, hi2)
    return _quick_renorm(s, e + lo1 + lo2)


def _dd_mul_double(hi, lo, x):
    p, e = _two_prod(hi, x)
    return _quick_renorm(p, e + lo * x)


def _dd_div_double(hi, lo, x):
    q = hi / x
    p, e = _two_prod(q, x)
    return _quick_renorm(q, ((hi - p) - e + lo) / x)


def _terminating_series(a: float, b: float, z: np.ndarray, n_terms: int) -> np.ndarray:
    """Sum the degree-(n_terms) polynomial series in double-double precision."""
    term_hi = np.ones_like(z)
    term_lo = np.zeros_like(z)
    total_hi = term_hi.copy()
    total_lo = term_lo.copy()
    for k in range(n_terms):
        term_hi, term_lo = _dd_mul_double(term_hi, term_lo, a + k)
        term_hi, term_lo = _dd_mul_double(term_hi, term_lo, z)
        term_hi, term_lo = _dd_div_double(term_hi, term_lo, b + k)
        term_hi, term_lo = _dd_div_double(term_hi, term_lo, k + 1.0)
        total_hi, total_lo = _dd_add(total_hi, total_lo, term_hi, term_lo)
    return total_hi + total_lo


def kummer_m(a: float, b: float, z):
    """Confluent hypergeometric function M(a, b, z) for z >= 0.

    Parameters
    ----------
    a, b : float
        Series parameters.  b must not be zero or a negative integer.
    z : float or ndarray
        Non-negative, finite argument(s).

    Returns
    -------
    float or ndarray matching the shape of z.

    The sum uses the term recurrence
    t_{k+1} = t_k * (a + k) / ((b + k) * (k + 1)) * z.  A non-positive
    integer a terminates the series after |a| + 1 terms (a degree-|a|
    polynomial), evaluated in compensated arithmetic; otherwise summation
    stops once the term falls below 1e-15 of the running sum twice in a row.
    """
    if _as_nonpositive_int(b) is not None:
        raise ValueError(f"b must not be zero or a negative integer, got b={b}")
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("z must be finite")
    if np.any(arr < 0.0):
        raise ValueError(f"negative z is outside the supported domain, got {z}")
    scalar = arr.ndim == 0

    k_poly = _as_nonpositive_int(a)
    if k_poly is not None:
        out = _terminating_series(float(round(a)), float(b), np.atleast_1d(arr), k_poly)
        return float(out[0]) if scalar else out.reshape(arr.shape)

    zl = arr.astype(np.longdouble)
    al = np.longdouble(a)
    bl = np.longdouble(b)
    term = np.ones_like(zl)
    total = term.copy()
    consecutive_small = 0
    for k in range(_MAX_TERMS):
        term = term * ((al + k) / ((bl + k) * (k + 1.0))) * zl
        total = total + term
        if np.all(np.abs(term) <= _SERIES_RTOL * np.abs(total)):
            consecutive_small += 1
            if consecutive_small >= 2:
                break
        else:
            consecutive_small = 0
    else:
        raise RuntimeError(
            f"Kummer series did not converge within {_MAX_TERMS} terms "
            f"for a={a}, b={b}, max z={arr.max()}"
        )
    out = total.astype(float)
    return float(out) if scalar else out


def kummer_m_derivative(a: float, b: float, z):
    """dM/dz via the shift identity (a/b) * M(a+1, b+1, z)."""
    if _as_nonpositive_int(b) is not None:
        raise ValueError(f"b must not be zero or a negative integer, got b={b}")
    if a == 0:
        arr = np.asarray(z, dtype=float)
        return 0.0 if arr.ndim == 0 else np.zeros_like(arr)
    return (a / b) * kummer_m(a + 1.0, b + 1.0, z)


def laguerre(n: int, alpha: int, z):
    """Associated Laguerre polynomial L_n^(alpha)(z) for z >= 0.

    Uses the upward recurrence
    (k+1) L_{k+1} = (2k + alpha + 1 - z) L_k - (k + alpha) L_{k-1},
    accumulated in extended precision: near a high-order root the final
    subtraction cancels against intermediates ~exp(z/2) larger than the
    result.
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(alpha, (int, np.integer)) or alpha < 0:
        raise ValueError(f"alpha must be a non-negative integer, got {alpha!r}")
    arr = np.asarray(z, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError(f"negative z is outside the supported domain, got {z}")
    scalar = arr.ndim == 0

    zl = arr.astype(np.longdouble)
    prev = np.ones_like(zl)
    if n == 0:
        return 1.0 if scalar else np.ones_like(arr)
    cur = (alpha + 1.0) - zl
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + alpha + 1.0 - zl) * cur - (k + alpha) * prev) / (
            k + 1.0
        )
    out = cur.astype(float)
    return float(out) if scalar else out
