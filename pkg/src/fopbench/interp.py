"""Polynomial interpolation viewed as a discretized identity equation.

Interpolation matrices in the monomial and Chebyshev bases, the exact
Chebyshev-to-monomial conversion, and the experiment comparing matrix-level
right preconditioning against working in the well-conditioned basis from the
start.  Interpolation nodes are the first-kind Chebyshev points
cos((2j - 1) pi / (2n)), for which the Chebyshev interpolation matrix has
constant condition number sqrt(2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import LinearMap, gmres, lu_solve
from .orthopoly import CHEBYSHEV, MONOMIAL, cheb_eval, chebyshev_points

EPS = 2.0**-52


class DuplicateNodesError(ValueError):
    """Interpolation nodes too close for a unique interpolant."""


@dataclass(frozen=True)
class InterpolationMatrix:
    matrix: np.ndarray
    basis: str
    nodes: np.ndarray


def chebyshev_nodes(n: int) -> np.ndarray:
    """First-kind Chebyshev node set of size n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return chebyshev_points(n)


def interpolation_matrix(nodes: np.ndarray, basis: str = CHEBYSHEV) -> InterpolationMatrix:
    """n x n matrix with entry [j, k] = phi_k(x_j) for the chosen basis."""
    nodes = np.asarray(nodes, dtype=float)
    n = len(nodes)
    gaps = np.abs(np.subtract.outer(nodes, nodes)) + np.eye(n)
    if np.min(gaps) <= 1e-14:
        raise DuplicateNodesError("nodes closer than 1e-14")
    k = np.arange(n)
    if basis == MONOMIAL:
        M = nodes[:, None] ** k[None, :]
    elif basis == CHEBYSHEV:
        M = np.cos(k[None, :] * np.arccos(nodes)[:, None])
    else:
        raise ValueError(f"unsupported basis {basis!r}")
    return InterpolationMatrix(M, basis, nodes)


def cheb_to_mono(n: int) -> np.ndarray:
    """Matrix C whose row k holds the monomial coefficients of T_k.

    Built from T_{k+1} = 2 x T_k - T_{k-1}; entries are integers represented
    exactly in double precision for every n of interest here.  A Chebyshev
    coefficient vector u and the monomial vector C^T u represent the same
    polynomial.
    """
    C = np.zeros((n, n))
    C[0, 0] = 1.0
    if n > 1:
        C[1, 1] = 1.0
    for k in range(2, n):
        C[k, 1:] = 2.0 * C[k - 1, :-1]
        C[k, :] -= C[k - 2, :]
    return C


@dataclass
class InterpExperimentResult:
    """Relative 2-norm errors of the three solution strategies.

    err_* fields hold geometric means over the draws; the *_mean fields the
    arithmetic means (the errors span many decades, so both are kept).
    """

    err_mono: float
    err_mono_precond: float
    err_cheb: float
    err_mono_mean: float
    err_mono_precond_mean: float
    err_cheb_mean: float
    n_draws: int


def interp_experiment(n: int, seed: int, n_draws: int = 100) -> InterpExperimentResult:
    """Accuracy comparison on random degree-(n-1) interpolation problems.

    Each draw samples monomial coefficients q ~ N(0, 1), evaluates the
    polynomial at the Chebyshev nodes for the right-hand side, and solves
    three systems with full GMRES at tolerance eps: the Vandermonde system,
    the Vandermonde system with the basis conversion C^T as a right matrix
    preconditioner (applied per iteration, so every GMRES step multiplies by
    both matrices in sequence), and the Chebyshev-basis system.  The
    Vandermonde error is measured against q.  The preconditioned run is
    measured on the preconditioned variable against the Chebyshev ground
    truth, since mapping back through C^T would leave the well-conditioned
    basis again; the ground truth is an LU solve of the kappa = sqrt(2)
    system, accurate to machine precision.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    nodes = chebyshev_nodes(n)
    L_mono = interpolation_matrix(nodes, MONOMIAL).matrix
    L_cheb = interpolation_matrix(nodes, CHEBYSHEV).matrix
    Ct = cheb_to_mono(n).T
    product_op = LinearMap(n, lambda w: L_mono @ (Ct @ w))
    rng = np.random.default_rng(seed)

    errs = np.zeros((n_draws, 3))
    for d in range(n_draws):
        q = rng.standard_normal(n)
        b = np.polynomial.polynomial.polyval(nodes, q)
        x_ref = lu_solve(L_cheb, b)
        ref_norm = np.linalg.norm(x_ref)

        x_mono = gmres(L_mono, b, tol=EPS, max_iters=n).solution
        errs[d, 0] = np.linalg.norm(x_mono - q) / np.linalg.norm(q)

        v = gmres(product_op, b, tol=EPS, max_iters=n).solution
        errs[d, 1] = np.linalg.norm(v - x_ref) / ref_norm

        x_cheb = gmres(L_cheb, b, tol=EPS, max_iters=n).solution
        errs[d, 2] = np.linalg.norm(x_cheb - x_ref) / ref_norm

    floored = np.maximum(errs, 1e-300)
    geo = np.exp(np.mean(np.log(floored), axis=0))
    mean = np.mean(errs, axis=0)
    return InterpExperimentResult(
        err_mono=float(geo[0]),
        err_mono_precond=float(geo[1]),
        err_cheb=float(geo[2]),
        err_mono_mean=float(mean[0]),
        err_mono_precond_mean=float(mean[1]),
        err_cheb_mean=float(mean[2]),
        n_draws=n_draws,
    )
