"""Chebyshev and ultraspherical (Gegenbauer) polynomial kernel.

Evaluation uses the Clenshaw recurrence for Chebyshev series and the
three-term recurrence for ultraspherical polynomials

    C_{k+1} = (2 (k + lam) x C_k - (k + 2 lam - 1) C_{k-1}) / (k + 1),
    C_0 = 1,  C_1 = 2 lam x,

normalized so that C_k has leading coefficient 2^k (lam+k-1)! / ((lam-1)! k!).
Gaussian rules come from the Golub-Welsch symmetric tridiagonal eigenproblem
built from the same recurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

MONOMIAL = "monomial"
CHEBYSHEV = "chebyshev"
ULTRASPHERICAL = "ultraspherical"


class UnresolvedCoefficientError(Exception):
    """A coefficient function could not be resolved to machine accuracy."""


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients of a polynomial in a tagged basis.

    basis is one of 'monomial', 'chebyshev' or 'ultraspherical'; order is the
    ultraspherical order lam (ignored for the other bases).
    """

    coeffs: np.ndarray
    basis: str = CHEBYSHEV
    order: int = 0

    def evaluate(self, x):
        if self.basis == MONOMIAL:
            return np.polynomial.polynomial.polyval(x, self.coeffs)
        if self.basis == CHEBYSHEV:
            return cheb_eval(self.coeffs, x)
        return ultra_series_eval(self.order, self.coeffs, x)


def cheb_eval(c: np.ndarray, x):
    """Evaluate sum_k c_k T_k(x) by the Clenshaw recurrence."""
    c = np.asarray(c, dtype=float)
    x = np.asarray(x, dtype=float)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for k in range(len(c) - 1, 0, -1):
        b1, b2 = c[k] + 2.0 * x * b1 - b2, b1
    out = c[0] + x * b1 - b2 if len(c) else np.zeros_like(x)
    return out if out.ndim else float(out)


def ultra_eval(lam: int, k: int, x):
    """Value of the degree-k ultraspherical polynomial of order lam."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    x = np.asarray(x, dtype=float)
    c0 = np.ones_like(x)
    if k == 0:
        return c0 if c0.ndim else 1.0
    c1 = 2.0 * lam * x
    for j in range(1, k):
        c0, c1 = c1, (2.0 * (j + lam) * x * c1 - (j + 2 * lam - 1) * c0) / (j + 1)
    return c1 if c1.ndim else float(c1)


def ultra_series_eval(lam: int, c: np.ndarray, x):
    """Evaluate sum_k c_k C_k^(lam)(x) via the forward recurrence."""
    c = np.asarray(c, dtype=float)
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    p0 = np.ones_like(x)
    if len(c) > 0:
        out = out + c[0] * p0
    if len(c) == 1:
        return out if out.ndim else float(out)
    p1 = 2.0 * lam * x
    out = out + c[1] * p1
    for k in range(1, len(c) - 1):
        p0, p1 = p1, (2.0 * (k + lam) * x * p1 - (k + 2 * lam - 1) * p0) / (k + 1)
        out = out + c[k + 1] * p1
    return out if out.ndim else float(out)


def chebyshev_points(n: int) -> np.ndarray:
    """First-kind Chebyshev points cos((2j - 1) pi / (2n)), j = 1..n."""
    j = np.arange(1, n + 1)
    return np.cos((2 * j - 1) * np.pi / (2 * n))


def cheb_transform(f, n: int) -> CoeffVector:
    """Degree-(n-1) Chebyshev interpolation coefficients of f.

    Interpolates at the first-kind points; for a polynomial f of degree < n
    the coefficients are exact up to roundoff.
    """
    x = chebyshev_points(n)
    fx = np.asarray(f(x), dtype=float)
    theta = (2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)
    # a_k = (2 - delta_{k0}) / n * sum_j f(x_j) cos(k theta_j)
    C = np.cos(np.outer(np.arange(n), theta))
    a = (2.0 / n) * (C @ fx)
    a[0] *= 0.5
    return CoeffVector(a, CHEBYSHEV)


def resolve_chebyshev(f, tol: float = 1e-14, max_n: int = 32768) -> np.ndarray:
    """Chebyshev coefficients of f trimmed to its resolved length.

    Doubles the interpolation size until the trailing block of coefficients
    falls below tol relative to the largest one, then trims the tail.
    Raises UnresolvedCoefficientError when max_n is insufficient.
    """
    n = 16
    while n <= max_n:
        a = cheb_transform(f, n).coeffs
        scale = np.max(np.abs(a))
        if scale == 0.0:
            return np.zeros(1)
        tail = np.max(np.abs(a[-max(2, n // 8):]))
        if tail <= tol * scale:
            keep = np.nonzero(np.abs(a) > tol * scale)[0]
            return a[: keep[-1] + 1] if len(keep) else np.zeros(1)
        n *= 2
    raise UnresolvedCoefficientError(
        f"coefficient tail did not decay below {tol:g} up to n={max_n}"
    )


@dataclass(frozen=True)
class QuadratureRule:
    """Gaussian rule: nodes in (-1, 1), positive weights, tagged weight kind."""

    nodes: np.ndarray
    weights: np.ndarray
    weight_kind: str

    def integrate(self, f) -> float:
        return float(self.weights @ np.asarray(f(self.nodes), dtype=float))


def _golub_welsch(beta: np.ndarray, mu0: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights from the symmetric Jacobi matrix off-diagonal."""
    if len(beta) == 0:
        return np.zeros(1), np.array([mu0])
    vals, vecs = scipy.linalg.eigh_tridiagonal(np.zeros(len(beta) + 1), beta)
    return vals, mu0 * vecs[0] ** 2


def gauss_legendre(m: int) -> QuadratureRule:
    """m-point Gauss-Legendre rule on [-1, 1]; exact for degree <= 2m - 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    k = np.arange(1, m)
    beta = k / np.sqrt(4.0 * k**2 - 1.0)
    nodes, weights = _golub_welsch(beta, 2.0)
    return QuadratureRule(nodes, weights, "legendre")


def gauss_gegenbauer(m: int, lam: int) -> QuadratureRule:
    """m-point Gauss rule for the weight (1 - x^2)^(lam - 1/2), lam >= 1.

    Built from the ultraspherical recurrence via Golub-Welsch; exact for
    polynomials of degree <= 2m - 1 against the Gegenbauer weight.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if lam < 1:
        raise ValueError("lam must be >= 1")
    k = np.arange(0, m - 1)
    beta = np.sqrt((k + 1) * (k + 2 * lam) / (4.0 * (k + lam) * (k + 1 + lam)))
    mu0 = math.sqrt(math.pi) * math.gamma(lam + 0.5) / math.gamma(lam + 1.0)
    nodes, weights = _golub_welsch(beta, mu0)
    return QuadratureRule(nodes, weights, f"gegenbauer({lam})")


def gauss_chebyshev(m: int) -> QuadratureRule:
    """m-point rule for the Chebyshev weight (1 - x^2)^(-1/2), closed form."""
    if m < 1:
        raise ValueError("m must be >= 1")
    j = np.arange(1, m + 1)
    nodes = np.cos((2 * j - 1) * np.pi / (2 * m))[::-1]
    return QuadratureRule(nodes, np.full(m, np.pi / m), "chebyshev")


def ultra_norm_squared(lam: int, k: int) -> float:
    """Squared weighted L2 norm of C_k^(lam) under its own weight."""
    # evaluated in log space: the gamma ratio overflows for large degrees
    log_val = (
        math.log(math.pi)
        + (1 - 2 * lam) * math.log(2.0)
        + math.lgamma(k + 2 * lam)
        - math.lgamma(k + 1)
        - math.log(k + lam)
        - 2 * math.lgamma(lam)
    )
    return math.exp(log_val)
