import numpy as np
import pytest

from fopbench.orthopoly import (
    CHEBYSHEV,
    MONOMIAL,
    ULTRASPHERICAL,
    CoeffVector,
    cheb_eval,
    cheb_transform,
    chebyshev_points,
    gauss_chebyshev,
    gauss_gegenbauer,
    gauss_legendre,
    resolve_chebyshev,
    ultra_eval,
    ultra_norm_squared,
    ultra_series_eval,
)


def test_cheb_eval_linear():
    assert cheb_eval([0.0, 1.0], 0.3) == pytest.approx(0.3, abs=1e-15)


def test_cheb_eval_t2():
    assert cheb_eval([0.0, 0.0, 1.0], 0.5) == pytest.approx(-0.5, abs=1e-15)


def test_cheb_eval_matches_trig_definition():
    rng = np.random.default_rng(0)
    c = rng.standard_normal(21)
    x = rng.uniform(-1, 1, 40)
    theta = np.arccos(x)
    direct = sum(c[k] * np.cos(k * theta) for k in range(21))
    assert np.max(np.abs(cheb_eval(c, x) - direct)) <= 1e-13 * np.sum(np.abs(c))


def test_clenshaw_single_modes_on_grid():
    # every T_k up to k = 50 against cos(k arccos x) on a fixed grid
    x = np.linspace(-0.999, 0.999, 100)
    theta = np.arccos(x)
    for k in range(51):
        c = np.zeros(k + 1)
        c[k] = 1.0
        assert np.max(np.abs(cheb_eval(c, x) - np.cos(k * theta))) <= 1e-12


def test_ultra_eval_order_one_is_second_kind():
    assert ultra_eval(1, 2, 0.5) == pytest.approx(0.0, abs=1e-15)


def test_ultra_eval_degree_zero():
    for lam in (1, 2, 5):
        assert ultra_eval(lam, 0, -0.77) == 1.0


def test_chebyshev_derivative_identity():
    # d T_k / dx = k C^(1)_{k-1}, checked by central differences
    x, h = 0.3, 1e-5
    for k in range(1, 12):
        c = np.zeros(k + 1)
        c[k] = 1.0
        fd = (cheb_eval(c, x + h) - cheb_eval(c, x - h)) / (2 * h)
        assert fd == pytest.approx(k * ultra_eval(1, k - 1, x), abs=1e-6)


def test_ultra_series_eval_consistency():
    rng = np.random.default_rng(3)
    c = rng.standard_normal(9)
    x = rng.uniform(-1, 1, 15)
    direct = sum(c[k] * ultra_eval(2, k, x) for k in range(9))
    assert np.allclose(ultra_series_eval(2, c, x), direct, atol=1e-12)


def test_cheb_transform_square():
    a = cheb_transform(lambda x: x**2, 8).coeffs
    expected = np.zeros(8)
    expected[0], expected[2] = 0.5, 0.5
    assert np.allclose(a, expected, atol=1e-14)


def test_cheb_transform_constant():
    a = cheb_transform(lambda x: np.ones_like(x), 6).coeffs
    assert np.allclose(a, [1, 0, 0, 0, 0, 0], atol=1e-14)


def test_cheb_transform_oscillatory():
    f = lambda x: np.sin(20 * np.pi * x)
    a = cheb_transform(f, 128).coeffs
    assert np.max(np.abs(a[-10:])) <= 1e-10
    rng = np.random.default_rng(1)
    x = rng.uniform(-1, 1, 100)
    assert np.max(np.abs(cheb_eval(a, x) - f(x))) <= 1e-10


def test_cheb_transform_is_projection():
    rng = np.random.default_rng(2)
    c = rng.standard_normal(12)
    a = cheb_transform(lambda x: cheb_eval(c, x), 12).coeffs
    assert np.allclose(a, c, atol=1e-13)


def test_resolve_chebyshev_polynomial():
    c = resolve_chebyshev(lambda x: x**3 - 2 * x)
    assert len(c) == 4
    x = np.linspace(-1, 1, 7)
    assert np.allclose(cheb_eval(c, x), x**3 - 2 * x, atol=1e-13)


def test_gauss_legendre_one_point():
    rule = gauss_legendre(1)
    assert rule.nodes == pytest.approx([0.0], abs=1e-15)
    assert rule.weights == pytest.approx([2.0], rel=1e-15)


def test_gauss_legendre_eleven_points_degree_twenty():
    rule = gauss_legendre(11)
    assert rule.integrate(lambda x: x**20) == pytest.approx(2.0 / 21.0, rel=1e-13)


def test_gauss_legendre_eleven_points_degree_22_not_exact():
    rule = gauss_legendre(11)
    err = abs(rule.integrate(lambda x: x**22) - 2.0 / 23.0)
    assert err > 1e-9


def test_gauss_legendre_exactness_sweep():
    # every degree within the exactness guarantee, several rule sizes
    for m in range(1, 17):
        rule = gauss_legendre(m)
        for d in range(0, 2 * m):
            exact = 2.0 / (d + 1) if d % 2 == 0 else 0.0
            val = rule.integrate(lambda x, d=d: x**d)
            assert val == pytest.approx(exact, rel=1e-13, abs=1e-13)


def test_gauss_gegenbauer_total_weights():
    for m in (1, 4, 12):
        assert gauss_gegenbauer(m, 1).integrate(np.ones_like) == pytest.approx(
            np.pi / 2, rel=1e-13
        )
        assert gauss_gegenbauer(m, 2).integrate(np.ones_like) == pytest.approx(
            3 * np.pi / 8, rel=1e-13
        )


def test_gauss_gegenbauer_odd_monomials_vanish():
    rule = gauss_gegenbauer(9, 3)
    for d in (1, 3, 5, 7):
        assert abs(rule.integrate(lambda x, d=d: x**d)) <= 1e-14


def test_gauss_gegenbauer_orthogonality():
    # C_j^(2) orthogonal under (1-x^2)^(3/2), norms matching the closed form
    rule = gauss_gegenbauer(24, 2)
    for j in range(6):
        for k in range(6):
            val = rule.weights @ (
                ultra_eval(2, j, rule.nodes) * ultra_eval(2, k, rule.nodes)
            )
            if j == k:
                assert val == pytest.approx(ultra_norm_squared(2, j), rel=1e-12)
            else:
                assert abs(val) <= 1e-12 * ultra_norm_squared(2, max(j, k))


def test_chebyshev_weight_orthogonality():
    rule = gauss_chebyshev(64)
    theta = np.arccos(rule.nodes)
    for j in range(8):
        for k in range(8):
            val = rule.weights @ (np.cos(j * theta) * np.cos(k * theta))
            if j != k:
                assert abs(val) <= 1e-12


def test_quadrature_nodes_interior_and_interlaced():
    for make in (gauss_legendre, lambda m: gauss_gegenbauer(m, 2)):
        for m in range(2, 14):
            big = make(m).nodes
            small = make(m - 1).nodes
            assert np.all(big > -1) and np.all(big < 1)
            assert np.all(np.diff(big) > 0)
            # interlacing: one node of the smaller rule between consecutive big ones
            for i in range(m - 1):
                assert np.any((small > big[i]) & (small < big[i + 1]))


def test_coeffvector_basis_independent_evaluation():
    rng = np.random.default_rng(8)
    mono = rng.standard_normal(7)
    x = rng.uniform(-1, 1, 25)
    target = np.polynomial.polynomial.polyval(x, mono)
    # convert to Chebyshev by interpolation, then evaluate in that basis
    cheb = cheb_transform(lambda t: np.polynomial.polynomial.polyval(t, mono), 7)
    scale = np.sum(np.abs(cheb.coeffs))
    assert np.max(np.abs(cheb.evaluate(x) - target)) <= 1e-12 * scale
    v = CoeffVector(mono, MONOMIAL)
    assert np.max(np.abs(v.evaluate(x) - target)) <= 1e-12 * scale


def test_chebyshev_points_are_first_kind():
    assert chebyshev_points(1) == pytest.approx([0.0], abs=1e-16)
    assert np.allclose(
        chebyshev_points(2), [np.sqrt(2) / 2, -np.sqrt(2) / 2], atol=1e-15
    )
