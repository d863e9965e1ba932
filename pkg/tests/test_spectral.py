import numpy as np
import pytest

from fopbench.interp import cheb_to_mono
from fopbench.linalg import cond2, gmres
from fopbench.orthopoly import (
    cheb_eval,
    cheb_transform,
    gauss_gegenbauer,
    ultra_eval,
    ultra_norm_squared,
    ultra_series_eval,
)
from fopbench.spectral import (
    ULTRA,
    ULTRA_R,
    UNPREC,
    BVProblem,
    assemble_ultraspherical,
    assemble_unpreconditioned,
    benchmark_problem,
    boundary_row,
    cheb_diff_dense,
    conversion_matrix,
    diff_matrix,
    mult_matrix,
    right_diag_R,
    solve_bvp,
    ultraspherical_operator,
)

POLYVAL = np.polynomial.polynomial.polyval
POLYDER = np.polynomial.polynomial.polyder


def _ultra_coeffs_by_projection(vals_fn, lam, n, quad_order):
    """Independent projection oracle: c_j = (C_j, f)_rho / ||C_j||^2."""
    rule = gauss_gegenbauer(quad_order, lam)
    x, w = rule.nodes, rule.weights
    fx = vals_fn(x)
    return np.array(
        [
            (w @ (ultra_eval(lam, j, x) * fx)) / ultra_norm_squared(lam, j)
            for j in range(n)
        ]
    )


def test_diff_matrix_order_one_superdiagonal():
    D = diff_matrix(1, 6).toarray()
    assert np.array_equal(np.diag(D, 1), [1, 2, 3, 4, 5])
    assert np.count_nonzero(D) == 5


def test_diff_matrix_order_two_entry():
    D = diff_matrix(2, 6).toarray()
    assert D[0, 2] == 4.0
    # T_2'' = 4 = 4 C_0^(2)
    c = np.zeros(6)
    c[2] = 1.0
    out = D @ c
    assert np.array_equal(out, [4, 0, 0, 0, 0, 0])


def test_diff_matrix_second_derivative_of_quartic():
    # p = x^4 - 2x^2 + 1; p'' = 12 x^2 - 4; symbolic differentiation oracle
    p_cheb = cheb_transform(lambda x: x**4 - 2 * x**2 + 1, 10).coeffs
    out = diff_matrix(2, 10).toarray() @ p_cheb
    x = np.linspace(-0.95, 0.95, 10)
    vals = ultra_series_eval(2, out, x)
    assert np.max(np.abs(vals - (12 * x**2 - 4))) <= 1e-12


def test_diff_matrix_matches_projection_oracle():
    rng = np.random.default_rng(10)
    for lam in (1, 2, 3):
        n = 14
        c = rng.standard_normal(n - lam)
        mono = cheb_to_mono(n - lam).T @ c
        dmono = mono.copy()
        for _ in range(lam):
            dmono = POLYDER(dmono)
        expected = _ultra_coeffs_by_projection(
            lambda x: POLYVAL(x, dmono), lam, n, n + 4
        )
        padded = np.zeros(n)
        padded[: n - lam] = c
        out = diff_matrix(lam, n).toarray() @ padded
        assert np.max(np.abs(out - expected)) <= 1e-11 * max(1.0, np.max(np.abs(expected)))


def test_conversion_chebyshev_row_zero():
    S0 = conversion_matrix(0, 6).toarray()
    assert np.array_equal(S0[0], [1, 0, -0.5, 0, 0, 0])


def test_conversion_t2_identity_pointwise():
    # T_2 = (C_2^(1) - C_0^(1)) / 2 at x = 0.7
    lhs = cheb_eval([0, 0, 1], 0.7)
    rhs = 0.5 * (ultra_eval(1, 2, 0.7) - 1.0)
    assert lhs == pytest.approx(rhs, abs=1e-15)
    assert lhs == pytest.approx(-0.02, abs=1e-15)


def test_conversion_preserves_values():
    rng = np.random.default_rng(3)
    for lam in (1, 2, 4):
        c = rng.standard_normal(11)
        out = conversion_matrix(lam, 11).toarray() @ c
        x = np.linspace(-1, 1, 30)
        before = ultra_series_eval(lam, c, x)
        after = ultra_series_eval(lam + 1, out, x)
        assert np.max(np.abs(before - after)) <= 1e-12 * np.max(np.abs(before))


def test_conversion_chain_from_chebyshev():
    rng = np.random.default_rng(4)
    c = rng.standard_normal(12)
    out = c.copy()
    for lam in range(3):
        out = conversion_matrix(lam, 12).toarray() @ out
    x = np.linspace(-1, 1, 25)
    assert np.max(
        np.abs(ultra_series_eval(3, out, x) - cheb_eval(c, x))
    ) <= 1e-12 * np.max(np.abs(cheb_eval(c, x)))


def test_mult_constant_is_identity():
    for lam in (0, 1, 3):
        M = mult_matrix(lambda x: np.ones_like(x), lam, 8).toarray()
        assert np.allclose(M, np.eye(8), atol=1e-13)


def test_mult_by_x_chebyshev_structure():
    M = mult_matrix(lambda x: x, 0, 6).toarray()
    expected = 0.5 * (np.diag(np.ones(5), 1) + np.diag(np.ones(5), -1))
    expected[1, 0] = 1.0
    assert np.allclose(M, expected, atol=1e-14)


def test_mult_by_x_ultraspherical_pointwise():
    M = mult_matrix(lambda x: x, 2, 8).toarray()
    c = np.zeros(8)
    c[3] = 1.0
    out = M @ c
    x = np.linspace(-0.9, 0.9, 10)
    target = x * ultra_eval(2, 3, x)
    assert np.max(np.abs(ultra_series_eval(2, out, x) - target)) <= 1e-12


def test_mult_matches_projection_oracle():
    # random polynomial multiplier against the Galerkin definition
    rng = np.random.default_rng(8)
    lam, n = 2, 10
    a_mono = rng.standard_normal(4)
    a = lambda x: POLYVAL(x, a_mono)
    M = mult_matrix(a, lam, n).toarray()
    for k in range(n - 4):
        expected = _ultra_coeffs_by_projection(
            lambda x: a(x) * ultra_eval(lam, k, x), lam, n, n + 8
        )
        assert np.max(np.abs(M[:, k] - expected)) <= 1e-12 * max(
            1.0, np.max(np.abs(expected))
        )


def test_cheb_diff_dense_matches_banded_route():
    # D maps Chebyshev coefficients of u to Chebyshev coefficients of u'
    rng = np.random.default_rng(5)
    c = rng.standard_normal(9)
    mono = cheb_to_mono(9).T @ c
    dmono = POLYDER(mono)
    out = cheb_diff_dense(9) @ c
    x = np.linspace(-1, 1, 20)
    assert np.max(np.abs(cheb_eval(out, x) - POLYVAL(x, dmono))) <= 1e-11


def test_boundary_rows_dirichlet():
    assert np.array_equal(boundary_row(1.0, 0, 5), np.ones(5))
    assert np.array_equal(boundary_row(-1.0, 0, 5), [1, -1, 1, -1, 1])


def test_boundary_rows_derivatives_match_finite_differences():
    h = 1e-6
    for point in (1.0, -1.0):
        for d in (1, 2):
            row = boundary_row(point, d, 8)
            for k in range(8):
                c = np.zeros(8)
                c[k] = 1.0
                xs = point - np.array([2, 1, 0]) * np.sign(point) * h
                vals = cheb_eval(c, xs)
                if d == 1:
                    fd = (3 * vals[2] - 4 * vals[1] + vals[0]) / (2 * h) * np.sign(point)
                else:
                    fd = (vals[2] - 2 * vals[1] + vals[0]) / h**2
                assert row[k] == pytest.approx(fd, rel=2e-4, abs=2e-4)


def test_poisson_like_solution_exact():
    p = BVProblem(2, [None, None], lambda x: 2.0 + 0.0 * x, [(1.0, 0, 0.0), (-1.0, 0, 0.0)])
    x = np.linspace(-1, 1, 101)
    for method in (UNPREC, ULTRA, ULTRA_R):
        u = solve_bvp(p, 16, method)
        assert np.max(np.abs(u.evaluate(x) - (x**2 - 1))) <= 1e-12


def test_poisson_like_coefficients_n8():
    p = BVProblem(2, [None, None], lambda x: 2.0 + 0.0 * x, [(1.0, 0, 0.0), (-1.0, 0, 0.0)])
    u = solve_bvp(p, 8, ULTRA)
    expected = np.zeros(8)
    expected[0], expected[2] = -0.5, 0.5
    assert np.allclose(u.coeffs, expected, atol=1e-13)


def test_clamped_quartic_solution():
    p = BVProblem(
        4,
        [None, None, None, None],
        lambda x: 24.0 + 0.0 * x,
        [(1.0, 0, 0.0), (-1.0, 0, 0.0), (1.0, 1, 0.0), (-1.0, 1, 0.0)],
    )
    u = solve_bvp(p, 16, ULTRA)
    x = np.linspace(-1, 1, 101)
    assert np.max(np.abs(u.evaluate(x) - (1 - x**2) ** 2)) <= 1e-10


def test_right_diag_examples():
    assert np.allclose(right_diag_R(1, 4), [1, 1, 0.5, 1 / 3], atol=1e-16)
    assert np.allclose(right_diag_R(2, 5), 0.5 * np.array([1, 1, 0.5, 1 / 3, 0.25]), atol=1e-16)


def test_assembled_bandwidth():
    bp = benchmark_problem()
    L = ultraspherical_operator(bp, 40)
    N, max_deg = 2, 1
    lower, upper = 1, N + 2 * N + 2 * max_deg
    j, k = np.indices(L.shape)
    outside = (k - j > upper) | (j - k > lower)
    assert np.all(L[outside] == 0.0)


def test_fop_equals_basis_change_oracle():
    # assembled entries equal the Gegenbauer-Galerkin projection of L T_k,
    # with T_k differentiated through the exact closed forms in theta
    # (T_k = cos k.theta, stable at the interior quadrature nodes)
    bp = benchmark_problem()
    N = 2
    for n in (8, 20, 32):
        L = ultraspherical_operator(bp, n)
        rule = gauss_gegenbauer(n + 6, N)
        x, w = rule.nodes, rule.weights
        theta = np.arccos(x)
        s = np.sin(theta)
        norms = np.array([ultra_norm_squared(N, j) for j in range(n)])
        basis = np.array([ultra_eval(N, j, x) for j in range(n)])
        oracle = np.zeros((n, n))
        for k in range(n):
            tk = np.cos(k * theta)
            d1 = k * np.sin(k * theta) / s
            d2 = -(k**2) * tk / s**2 + k * np.cos(theta) * np.sin(k * theta) / s**3
            Lvals = d2 + 10.0 * d1 + 100.0 * x * tk
            oracle[:, k] = basis @ (w * Lvals)
        oracle /= norms[:, None]
        scale = np.max(np.abs(oracle))
        assert np.max(np.abs(L - oracle)) <= 1e-10 * scale


def test_condition_number_scaling():
    bp = benchmark_problem()
    ns = np.array([32, 64, 128])
    cu = [cond2(assemble_unpreconditioned(bp, n).matrix) for n in ns]
    cl = [cond2(assemble_ultraspherical(bp, n).matrix) for n in ns]
    s_unprec = np.polyfit(np.log(ns), np.log(cu), 1)[0]
    s_ultra = np.polyfit(np.log(ns), np.log(cl), 1)[0]
    assert s_unprec == pytest.approx(4.0, abs=0.5)
    assert s_ultra == pytest.approx(1.0, abs=0.3)


def test_diagonal_preconditioner_flattens_condition():
    bp = benchmark_problem()
    conds = []
    for n in (64, 128, 256):
        A = assemble_ultraspherical(bp, n).matrix
        conds.append(cond2(A * right_diag_R(2, n)[None, :]))
    assert max(conds) / min(conds) <= 3.0


def test_self_convergence_reference():
    bp = benchmark_problem()
    ref = solve_bvp(bp, 2048, ULTRA).coeffs

    def deviation(c):
        padded = np.zeros_like(ref)
        padded[: len(c)] = c
        return np.linalg.norm(padded - ref)

    for method in (ULTRA, ULTRA_R):
        assert deviation(solve_bvp(bp, 1024, method).coeffs) <= 1e-8

    # The kappa ~ n^4 ill-conditioning shows in the iterative solve: GMRES on
    # the unpreconditioned system stalls far from the reference, while the
    # banded ultraspherical system converges to it.  (Pivoted LU happens to
    # dodge the floor here because the right-hand side is fully resolved.)
    eps = 2.0**-52
    sys_u = assemble_unpreconditioned(bp, 1024)
    dev_unprec = deviation(gmres(sys_u.matrix, sys_u.rhs, tol=eps, max_iters=400).solution)
    sys_l = assemble_ultraspherical(bp, 1024)
    dev_ultra = deviation(gmres(sys_l.matrix, sys_l.rhs, tol=eps, max_iters=400).solution)
    assert dev_ultra <= 1e-8
    assert dev_unprec >= 10 * max(dev_ultra, 1e-8)
