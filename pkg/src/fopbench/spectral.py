"""Ultraspherical spectral method for linear BVPs on [-1, 1].

Builds the sparse differentiation, conversion and multiplication operators

    D_lam : Chebyshev coefficients of u  ->  C^(lam) coefficients of u^(lam)
    S_lam : C^(lam) series               ->  C^(lam+1) series
    M_lam(a) : multiplication by a in the C^(lam) basis

and assembles boundary-bordered systems for an order-N operator
u^(N) + a_{N-1} u^(N-1) + ... + a_0 u, either in the pure-Chebyshev test
basis (the ill-conditioned baseline, dense upper-triangular differentiation)
or in the C^(N) test basis via the recursion factors.  The factors are
multiplied at a padded size and then truncated, so every retained entry
agrees with the infinite-dimensional operator; the preconditioned matrix is
never formed by multiplying the ill-conditioned baseline with a conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .linalg import BandedMatrix, SingularMatrixError, lu_solve
from .orthopoly import (
    CHEBYSHEV,
    CoeffVector,
    cheb_eval,
    cheb_transform,
    gauss_gegenbauer,
    resolve_chebyshev,
    ultra_norm_squared,
)


class SingularSystemError(Exception):
    """The bordered spectral system is numerically singular."""


UNPREC = "unprec"
ULTRA = "ultra"
ULTRA_R = "ultra_r"


@dataclass
class BVProblem:
    """Linear BVP u^(N) + a_{N-1} u^(N-1) + ... + a_0 u = f.

    coeffs lists a_0 .. a_{N-1}; None entries are zero.  Each boundary
    condition is (point, derivative_order, value) with point in {-1, +1}.
    The leading coefficient is normalized to one.
    """

    order: int
    coeffs: Sequence[Callable | None]
    rhs: Callable
    bcs: Sequence[tuple[float, int, float]]

    def __post_init__(self):
        if len(self.coeffs) != self.order:
            raise ValueError("need exactly N lower-order coefficients")
        if len(self.bcs) != self.order:
            raise ValueError("need exactly N boundary conditions")


@dataclass
class SpectralSystem:
    """Boundary-bordered discretization: N constraint rows on top."""

    matrix: np.ndarray
    rhs: np.ndarray
    n: int
    preconditioned: bool
    diag_R: np.ndarray | None = None


def _band_to_banded(A: np.ndarray, p: int, q: int) -> BandedMatrix:
    n = A.shape[0]
    p = min(p, n - 1)
    q = min(q, n - 1)
    data = np.zeros((p + q + 1, n))
    for d in range(-p, q + 1):
        diag = np.diag(A, k=d)
        if d >= 0:
            data[q - d, d:] = diag
        else:
            data[q - d, : n + d] = diag
    return BandedMatrix(n, p, q, data)


def _diff_dense(lam: int, n: int) -> np.ndarray:
    scale = 2.0 ** (lam - 1) * math.factorial(lam - 1)
    D = np.zeros((n, n))
    j = np.arange(n - lam)
    D[j, j + lam] = scale * (lam + j)
    return D


def diff_matrix(lam: int, n: int) -> BandedMatrix:
    """Order-lam differentiation: Chebyshev in, C^(lam) coefficients out."""
    if lam < 1:
        raise ValueError("lam must be >= 1")
    if n <= lam:
        raise ValueError("n must exceed lam")
    return _band_to_banded(_diff_dense(lam, n), 0, lam)


def _conv_dense(lam: int, n: int) -> np.ndarray:
    S = np.zeros((n, n))
    j = np.arange(n)
    if lam == 0:
        S[j, j] = 0.5
        S[0, 0] = 1.0
        S[j[:-2], j[:-2] + 2] = -0.5
    else:
        S[j, j] = lam / (lam + j)
        S[j[:-2], j[:-2] + 2] = -lam / (lam + j[:-2] + 2)
    return S


def conversion_matrix(lam: int, n: int) -> BandedMatrix:
    """Basis conversion C^(lam) -> C^(lam+1); lam = 0 converts Chebyshev."""
    if lam < 0:
        raise ValueError("lam must be >= 0")
    return _band_to_banded(_conv_dense(lam, n), 0, 2)


def _mult_dense_chebyshev(alpha: np.ndarray, n: int) -> np.ndarray:
    """Multiplication operator in the Chebyshev basis via 2 T_m T_k = T_{m+k} + T_|m-k|."""
    ext = np.zeros(2 * n)
    ext[: len(alpha)] = alpha[: 2 * n]
    jj = np.arange(n)[:, None]
    kk = np.arange(n)[None, :]
    M = 0.5 * ext[jj + kk]
    M += 0.5 * np.where(jj >= kk, ext[np.abs(jj - kk)], 0.0)
    M += 0.5 * np.where(kk >= jj, ext[np.abs(kk - jj)], 0.0)
    # on row zero the two |m - k| branches are the same term; drop the double count
    M[0, :] -= 0.5 * ext[:n]
    return M


def _mult_dense_ultra(alpha: np.ndarray, lam: int, n: int) -> np.ndarray:
    """Galerkin multiplication matrix in the C^(lam) basis by Gauss-Gegenbauer quadrature."""
    d = len(alpha) - 1
    m = n + d // 2 + 2
    rule = gauss_gegenbauer(m, lam)
    x, w = rule.nodes, rule.weights
    # ultraspherical basis values at the quadrature nodes, columns k = 0..n-1
    P = np.zeros((len(x), n))
    P[:, 0] = 1.0
    if n > 1:
        P[:, 1] = 2.0 * lam * x
    for k in range(1, n - 1):
        P[:, k + 1] = (2 * (k + lam) * x * P[:, k] - (k + 2 * lam - 1) * P[:, k - 1]) / (
            k + 1
        )
    avals = cheb_eval(alpha, x)
    M = P.T @ (P * (w * avals)[:, None])
    norms = np.array([ultra_norm_squared(lam, j) for j in range(n)])
    M /= norms[:, None]
    # orthogonality makes everything outside the coefficient band exactly zero
    j, k = np.indices(M.shape)
    M[np.abs(j - k) > d] = 0.0
    return M


def _mult_dense(a: Callable, lam: int, n: int) -> tuple[np.ndarray, int]:
    alpha = resolve_chebyshev(a)
    d = len(alpha) - 1
    if lam == 0:
        return _mult_dense_chebyshev(alpha, n), d
    return _mult_dense_ultra(alpha, lam, n), d


def mult_matrix(a: Callable, lam: int, n: int) -> BandedMatrix:
    """Multiplication by a in the C^(lam) basis (lam = 0 means Chebyshev).

    a is resolved in Chebyshev coefficients to machine accuracy first; a
    polynomial of degree d yields bandwidth 2d + 1.  Raises
    UnresolvedCoefficientError when a cannot be resolved.
    """
    M, d = _mult_dense(a, lam, n)
    return _band_to_banded(M, d, d)


def cheb_diff_dense(n: int) -> np.ndarray:
    """Dense upper-triangular Chebyshev-coefficient differentiation matrix."""
    D = np.zeros((n, n))
    for k in range(n):
        ck = 2.0 if k == 0 else 1.0
        p = np.arange(k + 1, n, 2)
        D[k, p] = 2.0 * p / ck
    return D


def boundary_row(point: float, dorder: int, n: int) -> np.ndarray:
    """Row of T_k^(d)(point) for point = +-1, from the closed-form products."""
    if point not in (-1.0, 1.0):
        raise ValueError("boundary rows are defined at the endpoints only")
    k = np.arange(n, dtype=float)
    row = np.ones(n)
    for i in range(dorder):
        row *= (k**2 - i**2) / (2 * i + 1)
    if point < 0:
        row *= (-1.0) ** (k + dorder)
    return row


def _resolved_degrees(p: BVProblem) -> list[int]:
    degs = []
    for a in p.coeffs:
        if a is None:
            degs.append(-1)
        else:
            degs.append(len(resolve_chebyshev(a)) - 1)
    return degs


def unpreconditioned_operator(p: BVProblem, n: int) -> np.ndarray:
    """Pure-Chebyshev coefficient-space operator matrix (no boundary rows).

    Assembled at a padded size and truncated so the retained entries equal
    the infinite-dimensional Galerkin operator.
    """
    degs = _resolved_degrees(p)
    pad = 2 * p.order + max(degs, default=0) + 4
    nn = n + pad
    D = cheb_diff_dense(nn)
    L = np.linalg.matrix_power(D, p.order)
    for j, a in enumerate(p.coeffs):
        if a is None:
            continue
        M, _ = _mult_dense(a, 0, nn)
        L += M @ np.linalg.matrix_power(D, j)
    return L[:n, :n]


def ultraspherical_operator(p: BVProblem, n: int) -> np.ndarray:
    """C^(N)-test-basis operator built from the D, S, M recursion factors."""
    N = p.order
    degs = _resolved_degrees(p)
    pad = 2 * N + max(degs, default=0) + 4
    nn = n + pad
    L = _diff_dense(N, nn)
    for j, a in enumerate(p.coeffs):
        if a is None:
            continue
        M, _ = _mult_dense(a, j, nn)
        term = M if j == 0 else M @ _diff_dense(j, nn)
        for lam in range(j, N):
            term = _conv_dense(lam, nn) @ term
        L += term
    return L[:n, :n]


def _bordered(p: BVProblem, L: np.ndarray, rhs_interior: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    N = p.order
    A = np.zeros((n, n))
    b = np.zeros(n)
    for i, (point, dorder, value) in enumerate(p.bcs):
        A[i] = boundary_row(float(point), dorder, n)
        b[i] = value
    A[N:] = L[: n - N]
    b[N:] = rhs_interior[: n - N]
    if not np.all(np.isfinite(A)):
        raise FloatingPointError("non-finite entries in assembled system")
    return A, b


def assemble_unpreconditioned(p: BVProblem, n: int) -> SpectralSystem:
    """Boundary-bordered pure-Chebyshev discretization (condition ~ n^(2N))."""
    if n <= 2 * p.order:
        raise ValueError("n must exceed 2N")
    L = unpreconditioned_operator(p, n)
    fhat = cheb_transform(p.rhs, n).coeffs
    A, b = _bordered(p, L, fhat, n)
    return SpectralSystem(A, b, n, preconditioned=False)


def assemble_ultraspherical(p: BVProblem, n: int) -> SpectralSystem:
    """Boundary-bordered ultraspherical discretization (condition ~ n).

    The right-hand side is discretized directly in the C^(N) basis by
    applying the banded conversions to the Chebyshev coefficients of f.
    """
    if n <= 2 * p.order:
        raise ValueError("n must exceed 2N")
    N = p.order
    L = ultraspherical_operator(p, n)
    nn = n + 2 * N + 4
    fhat = cheb_transform(p.rhs, nn).coeffs
    for lam in range(N):
        fhat = _conv_dense(lam, nn) @ fhat
    A, b = _bordered(p, L, fhat, n)
    return SpectralSystem(A, b, n, preconditioned=True)


def right_diag_R(N: int, n: int) -> np.ndarray:
    """Diagonal right preconditioner (1,..,1, 1/N, 1/(N+1), ...) / (2^(N-1) (N-1)!)."""
    if n <= N:
        raise ValueError("n must exceed N")
    diag = np.ones(n)
    diag[N:] = 1.0 / np.arange(N, n)
    return diag / (2.0 ** (N - 1) * math.factorial(N - 1))


def solve_bvp(p: BVProblem, n: int, method: str = ULTRA) -> CoeffVector:
    """Solve the BVP, returning Chebyshev coefficients of the approximation.

    method 'unprec' uses the pure-Chebyshev matrix, 'ultra' the
    ultraspherical one, and 'ultra_r' additionally applies the diagonal
    right preconditioner and rescales the solved variable back.
    """
    if method not in (UNPREC, ULTRA, ULTRA_R):
        raise ValueError(f"unknown method {method!r}")
    if method == UNPREC:
        sys_ = assemble_unpreconditioned(p, n)
    else:
        sys_ = assemble_ultraspherical(p, n)
    A, b = sys_.matrix, sys_.rhs
    try:
        if method == ULTRA_R:
            r = right_diag_R(p.order, n)
            v = lu_solve(A * r[None, :], b)
            return CoeffVector(r * v, CHEBYSHEV)
        return CoeffVector(lu_solve(A, b), CHEBYSHEV)
    except SingularMatrixError as exc:
        raise SingularSystemError(str(exc)) from exc


def benchmark_problem() -> BVProblem:
    """Second-order test problem u'' + 10 u' + 100 x u = f, u(+-1) = 0."""
    return BVProblem(
        order=2,
        coeffs=[lambda x: 100.0 * x, lambda x: 10.0 + 0.0 * x],
        rhs=np.exp,
        bcs=[(1.0, 0, 0.0), (-1.0, 0, 0.0)],
    )
