"""Orthogonal polynomials and normalization constants for the state catalog.

Hermite polynomials use the physicists' convention

    H_0(x) = 1,   H_1(x) = 2x,   H_{k+1}(x) = 2x H_k(x) - 2k H_{k-1}(x),

so that int exp(-x^2) H_n(x)^2 dx = sqrt(pi) 2^n n!.  Associated Legendre
functions omit the Condon-Shortley phase:

    P_m^m(x)     = (2m-1)!! (1-x^2)^(m/2),
    P_{m+1}^m(x) = (2m+1) x P_m^m(x),
    (l-m) P_l^m(x) = (2l-1) x P_{l-1}^m(x) - (l+m-1) P_{l-2}^m(x).

Both recurrences are numerically stable upward in degree for the moderate
degrees allowed here.  Inputs can be scalars or numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DegreeError, DomainError

# Upward recurrences stay well conditioned far beyond this, but state
# specs have no business asking for more.
MAX_DEGREE = 64


def _check_degree(n: int, name: str = "degree") -> int:
    if not isinstance(n, (int, np.integer)):
        raise DegreeError(f"{name} must be an integer, got {n!r}")
    if n < 0 or n > MAX_DEGREE:
        raise DegreeError(f"{name} must be in [0, {MAX_DEGREE}], got {n}")
    return int(n)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) via the three-term recurrence."""
    n = _check_degree(n)
    x = np.asarray(x, dtype=float) if isinstance(x, np.ndarray) else float(x)
    h_prev = x * 0.0 + 1.0
    if n == 0:
        return h_prev
    h_curr = 2.0 * x
    for k in range(1, n):
        h_prev, h_curr = h_curr, 2.0 * x * h_curr - 2.0 * k * h_prev
    return h_curr


def hermite_derivative(n: int, x):
    """d/dx H_n(x) = 2n H_{n-1}(x)."""
    n = _check_degree(n)
    if n == 0:
        return (np.asarray(x, dtype=float) if isinstance(x, np.ndarray) else float(x)) * 0.0
    return 2.0 * n * hermite(n - 1, x)


def assoc_legendre(l: int, m_abs: int, x):
    """Associated Legendre function P_l^m(x) without the Condon-Shortley phase.

    Args:
        l: degree, 0 <= l <= MAX_DEGREE.
        m_abs: non-negative order, m_abs <= l.
        x: argument in [-1, 1] (scalar or array).
    """
    l = _check_degree(l, "l")
    if not isinstance(m_abs, (int, np.integer)) or m_abs < 0:
        raise DomainError(f"order must be a non-negative integer, got {m_abs!r}")
    if m_abs > l:
        raise DomainError(f"order {m_abs} exceeds degree {l}")
    scalar = not isinstance(x, np.ndarray)
    x = np.asarray(x, dtype=float)
    if np.any(x < -1.0) or np.any(x > 1.0):
        raise DomainError("argument of assoc_legendre must lie in [-1, 1]")

    m = int(m_abs)
    # P_m^m: the (1-x^2)^(m/2) factor vanishes exactly at the endpoints.
    pmm = np.ones_like(x)
    if m > 0:
        somx2 = np.sqrt((1.0 - x) * (1.0 + x))
        fact = 1.0
        for _ in range(m):
            pmm = pmm * fact * somx2
            fact += 2.0
    if l == m:
        return float(pmm) if scalar else pmm
    pmmp1 = x * (2.0 * m + 1.0) * pmm
    if l == m + 1:
        return float(pmmp1) if scalar else pmmp1
    for ll in range(m + 2, l + 1):
        pmm, pmmp1 = pmmp1, (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m)
    return float(pmmp1) if scalar else pmmp1


def assoc_legendre_norm(l: int, m_abs: int) -> float:
    """Spherical-harmonic normalization sqrt((2l+1)(l-m)! / (4 pi (l+m)!))."""
    l = _check_degree(l, "l")
    if m_abs < 0 or m_abs > l:
        raise DomainError(f"order {m_abs} must satisfy 0 <= order <= {l}")
    m = int(m_abs)
    return math.sqrt((2 * l + 1) * math.factorial(l - m)
                     / (4.0 * math.pi * math.factorial(l + m)))


def oscillator_norm(n: int, alpha: float) -> float:
    """One-dimensional oscillator normalization (alpha / (sqrt(pi) 2^n n!))^(1/2).

    alpha is the inverse length scale sqrt(m omega / hbar) and must be positive.
    """
    n = _check_degree(n)
    alpha = float(alpha)
    if not alpha > 0.0 or not math.isfinite(alpha):
        raise DomainError(f"alpha must be positive and finite, got {alpha}")
    return math.sqrt(alpha / (math.sqrt(math.pi) * (2.0 ** n) * math.factorial(n)))
