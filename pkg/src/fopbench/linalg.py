"""Dense and banded linear algebra used by the experiment suite.

Dense matrices are plain float64 ndarrays (row-major); banded matrices carry
their diagonals in LAPACK band storage.  The GMRES here is full (no restarts)
and keeps the history of *true* relative residuals, because the experiments
measure accuracy floors rather than Arnoldi residual estimates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.linalg


class SingularMatrixError(Exception):
    """A factorization hit an exactly zero pivot."""


class InvalidKappaError(ValueError):
    """Requested condition number below 1."""


@dataclass(frozen=True)
class LinearMap:
    """Matrix-free linear action on R^n.

    Carries preconditioners and operators for the iterative solver; it is
    enough to know how to apply them to a vector.
    """

    n: int
    matvec: Callable[[np.ndarray], np.ndarray]

    @classmethod
    def from_matrix(cls, A: np.ndarray) -> "LinearMap":
        A = np.asarray(A, dtype=float)
        return cls(A.shape[0], lambda v: A @ v)

    def __call__(self, v: np.ndarray) -> np.ndarray:
        return self.matvec(v)


@dataclass
class GmresReport:
    """Outcome of a GMRES run.

    residual_history[k] is the relative 2-norm residual of the reconstructed
    iterate after k steps (entry 0 belongs to the zero initial guess), so
    iterations == len(residual_history) - 1 and the history is non-increasing:
    each entry reports the best iterate found so far.
    """

    solution: np.ndarray
    residual_history: np.ndarray
    iterations: int
    converged: bool
    iterates: list[np.ndarray] | None = field(default=None, repr=False)


def _as_matvec(A) -> tuple[int, Callable[[np.ndarray], np.ndarray]]:
    if isinstance(A, LinearMap):
        return A.n, A.matvec
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix or a LinearMap")
    return A.shape[0], lambda v: A @ v


def lu_solve(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve Ax = b by LU factorization with partial pivoting.

    Raises SingularMatrixError when elimination produces an exactly zero
    pivot.  Backward stable in the usual sense: the residual of the computed
    solution is a modest multiple of n*eps*||A||*||x||.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    if A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if b.shape[0] != A.shape[0]:
        raise ValueError("right-hand side length mismatch")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    if np.any(np.diag(lu) == 0.0):
        raise SingularMatrixError("zero pivot in LU factorization")
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)


def gmres(
    A,
    b: np.ndarray,
    right_precond: LinearMap | np.ndarray | None = None,
    tol: float = 1e-14,
    max_iters: int | None = None,
    keep_iterates: bool = False,
) -> GmresReport:
    """Full GMRES (no restarts) with optional right preconditioning.

    Solves A M v = b for the preconditioner action M and returns x = M v.
    The residual history records ||b - A x_k||_2 / ||b||_2 for the
    reconstructed iterates, keeping the best iterate seen so far, which makes
    the history non-increasing even once rounding errors dominate.  On an
    Arnoldi breakdown the best iterate so far is returned; convergence is
    judged from the final true residual.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, amv = _as_matvec(A)
    b = np.asarray(b, dtype=float)
    if b.shape[0] != n:
        raise ValueError("right-hand side length mismatch")
    if right_precond is None:
        pmv = None
    else:
        pn, pmv = _as_matvec(right_precond)
        if pn != n:
            raise ValueError("preconditioner dimension mismatch")
    if max_iters is None:
        max_iters = n

    def op(v):
        return amv(pmv(v)) if pmv is not None else amv(v)

    norm_b = np.linalg.norm(b)
    if norm_b == 0.0:
        x = np.zeros(n)
        return GmresReport(x, np.array([0.0]), 0, True, [x] if keep_iterates else None)

    # Arnoldi with modified Gram-Schmidt; Givens rotations on the Hessenberg.
    V = np.zeros((max_iters + 1, n))
    H = np.zeros((max_iters + 1, max_iters))
    cs = np.zeros(max_iters)
    sn = np.zeros(max_iters)
    g = np.zeros(max_iters + 1)
    g[0] = norm_b
    V[0] = b / norm_b

    x_best = np.zeros(n)
    res_best = 1.0
    history = [1.0]
    iterates = [x_best.copy()] if keep_iterates else None
    breakdown = False

    k = 0
    while k < max_iters:
        w = op(V[k])
        for i in range(k + 1):
            H[i, k] = V[i] @ w
            w -= H[i, k] * V[i]
        H[k + 1, k] = np.linalg.norm(w)
        if H[k + 1, k] > 0.0:
            V[k + 1] = w / H[k + 1, k]
        else:
            breakdown = True
        for i in range(k):
            t = cs[i] * H[i, k] + sn[i] * H[i + 1, k]
            H[i + 1, k] = -sn[i] * H[i, k] + cs[i] * H[i + 1, k]
            H[i, k] = t
        r = np.hypot(H[k, k], H[k + 1, k])
        if r == 0.0:
            # Singular least-squares step: keep previous iterate and stop.
            k += 1
            history.append(res_best)
            if keep_iterates:
                iterates.append(x_best.copy())
            break
        cs[k], sn[k] = H[k, k] / r, H[k + 1, k] / r
        H[k, k] = r
        H[k + 1, k] = 0.0
        g[k + 1] = -sn[k] * g[k]
        g[k] = cs[k] * g[k]
        k += 1

        y = scipy.linalg.solve_triangular(H[:k, :k], g[:k], check_finite=False)
        v = V[:k].T @ y
        x = pmv(v) if pmv is not None else v
        res = np.linalg.norm(b - amv(x)) / norm_b
        if res < res_best:
            res_best = res
            x_best = x
        history.append(res_best)
        if keep_iterates:
            iterates.append(x_best.copy())
        if res_best <= tol or breakdown:
            break

    return GmresReport(
        solution=x_best,
        residual_history=np.asarray(history),
        iterations=len(history) - 1,
        converged=res_best <= tol,
        iterates=iterates,
    )


def norm2(A: np.ndarray) -> float:
    """Largest singular value of a dense matrix."""
    return float(np.linalg.norm(np.asarray(A, dtype=float), 2))


def cond2(A: np.ndarray) -> float:
    """2-norm condition number sigma_max / sigma_min via dense SVD.

    Returns +inf when the smallest singular value underflows to zero.
    """
    s = np.linalg.svd(np.asarray(A, dtype=float), compute_uv=False)
    if s[-1] == 0.0:
        return np.inf
    return float(s[0] / s[-1])


def prescribed_cond_matrix(
    n: int, kappa: float, seed: int
) -> tuple[np.ndarray, LinearMap, np.ndarray]:
    """Random symmetric matrix L = U S U^T with cond2(L) = kappa.

    U is a random orthogonal matrix (QR of a standard Gaussian with the sign
    of R's diagonal fixed), S holds singular values spaced geometrically from
    1 to kappa.  Also returns the exact inverse action U S^{-1} U^T as a
    LinearMap, and a standard-normal reference solution x_true.
    """
    if kappa < 1.0:
        raise InvalidKappaError(f"kappa must be >= 1, got {kappa}")
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((n, n))
    Q, R = np.linalg.qr(G)
    U = Q * np.sign(np.diag(R))
    s = np.geomspace(1.0, kappa, n)
    L = (U * s) @ U.T
    L = 0.5 * (L + L.T)  # enforce exact symmetry of the stored entries
    inv = LinearMap(n, lambda v: U @ ((U.T @ v) / s))
    x_true = rng.standard_normal(n)
    return L, inv, x_true


class BandedMatrix:
    """Square banded matrix in LAPACK band storage.

    data[q + i - j, j] = A[i, j] for the entries with -q <= i - j <= p,
    where p and q are the lower and upper bandwidths.
    """

    def __init__(self, n: int, p: int, q: int, data: np.ndarray):
        data = np.asarray(data, dtype=float)
        if data.shape != (p + q + 1, n):
            raise ValueError("band storage must have shape (p + q + 1, n)")
        self.n = n
        self.p = p
        self.q = q
        self.data = data

    @classmethod
    def from_dense(cls, A: np.ndarray, p: int, q: int) -> "BandedMatrix":
        A = np.asarray(A, dtype=float)
        n = A.shape[0]
        data = np.zeros((p + q + 1, n))
        for i in range(n):
            for j in range(max(0, i - p), min(n, i + q + 1)):
                data[q + i - j, j] = A[i, j]
        return cls(n, p, q, data)

    def toarray(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for d in range(-self.p, self.q + 1):
            diag = self.data[self.q - d, max(d, 0) : self.n + min(d, 0)]
            A += np.diag(diag, k=d)
        return A

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.toarray() @ np.asarray(v, dtype=float)

    def __matmul__(self, v):
        return self.matvec(v)


def banded_solve(B: BandedMatrix, b: np.ndarray) -> np.ndarray:
    """Solve Bx = b using the banded LU factorization.

    Agrees with lu_solve on the densified matrix up to roundoff.
    """
    b = np.asarray(b, dtype=float)
    if b.shape[0] != B.n:
        raise ValueError("right-hand side length mismatch")
    if B.p == 0 and B.q == 0:
        d = B.data[0]
        if np.any(d == 0.0):
            raise SingularMatrixError("zero pivot in banded solve")
        return b / d
    try:
        return scipy.linalg.solve_banded((B.p, B.q), B.data, b, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise SingularMatrixError(str(exc)) from exc
