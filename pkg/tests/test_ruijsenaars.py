import cmath
import math
import random

import pytest

from qsov import ruijsenaars as rj
from qsov.errors import CollisionError, DegenerateRoots, PoleError, ToleranceExceeded

T = 0.5
XI = 0.7


def test_phase_point_validation():
    with pytest.raises(ValueError):
        rj.PhasePoint(x=(1.5 + 0j,), Tx=(1.0,))
    with pytest.raises(ValueError):
        rj.PhasePoint(x=(1.0 + 0j,), Tx=(-1.0,))


def test_hamiltonians_trivial():
    point = rj.PhasePoint(x=(cmath.exp(0.4j), cmath.exp(-0.9j)), Tx=(1.0, 1.0))
    H = rj.hamiltonians(point.x, point.Tx, T)
    assert abs(H[1] - 1.0) < 1e-14


def test_hamiltonians_match_direct_formula():
    # oracle: the two-term expression v12 T1 + v21 T2 and the product T1 T2
    rng = random.Random(1)
    for _ in range(5):
        p = rj.random_phase_point(rng, 2)
        H = rj.hamiltonians(p.x, p.Tx, T)
        v12 = rj.v_factor(p.x[0], p.x[1], T)
        v21 = rj.v_factor(p.x[1], p.x[0], T)
        assert abs(H[0] - (v12 * p.Tx[0] + v21 * p.Tx[1])) < 1e-13
        assert abs(H[1] - p.Tx[0] * p.Tx[1]) < 1e-13


def test_hamiltonians_real_on_symmetric_configuration():
    rng = random.Random(2)
    for _ in range(5):
        p = rj.hermitian_phase_point(rng, 3)
        H = rj.hamiltonians(p.x, p.Tx, T)
        assert max(abs(h.imag) for h in H) < 1e-10


def test_collision_guard():
    with pytest.raises(CollisionError):
        rj.v_factor(1.0 + 0j, 1.0 + 0j, T)


def test_lax_pole_guard():
    p = rj.PhasePoint(x=(cmath.exp(0.4j), cmath.exp(-0.9j)), Tx=(1.0, 1.2))
    with pytest.raises(PoleError):
        rj.lax_matrix(p.x, p.Tx, T, 1.0)
    with pytest.raises(PoleError):
        rj.lax_matrix(p.x, p.Tx, T, T ** 2)


@pytest.mark.parametrize("n", (2, 3))
def test_characteristic_polynomial(n):
    rng = random.Random(7)
    for _ in range(5):
        p = rj.random_phase_point(rng, n)
        u = cmath.rect(rng.uniform(0.3, 2.0), rng.uniform(0, 2 * math.pi))
        z = cmath.rect(rng.uniform(0.3, 2.0), rng.uniform(0, 2 * math.pi))
        assert rj.char_poly_residual(p.x, p.Tx, T, u, z) < 1e-10


def test_e_matrix_diagonal_is_coordinate_free():
    rng = random.Random(3)
    p = rj.random_phase_point(rng, 2)
    u = 0.7 + 0.2j
    L = rj.lax_matrix(p.x, p.Tx, T, u)
    tn = T ** 2
    dcoef = (1 - T) * (tn - u) / (2 * T ** 1.5 * (1 - u))
    target = (tn + u) / (tn - u) - (T + 1) / (T - 1)
    for j in (0, 1):
        dj = dcoef * p.Tx[j] * rj.v_factor(p.x[j], p.x[1 - j], T)
        assert abs(L[j, j] / dj - target) < 1e-12


@pytest.mark.parametrize("xi", (0.7, 1.3 + 0.2j))
def test_separation_variables(xi):
    rng = random.Random(4)
    for _ in range(8):
        p = rj.random_phase_point(rng, 2)
        data = rj.separation_variables(p.x, p.Tx, T, xi, tol=1e-10)
        assert abs(data.y[0] * data.y[1] * xi ** 2 - T * p.x[0] * p.x[1]) < 1e-10
        for y in data.y:
            assert abs(rj.b_poly_value(p.x, p.Tx, T, xi, y)) < 1e-9


def test_a_function_identities():
    rng = random.Random(5)
    p = rj.random_phase_point(rng, 2)
    for _ in range(5):
        u = cmath.rect(rng.uniform(0.3, 2.0), rng.uniform(0, 2 * math.pi))
        assert rj.char_eq_a_residual(p.x, T, XI, u) < 1e-10
        assert rj.a_ratio_invariance_residual(p.x, T, XI, u) < 1e-12


def test_degenerate_roots_guard():
    with pytest.raises(DegenerateRoots):
        rj._solve_separation_quadratic(1.0, 2.0, 1.0)


def test_poisson_involutivity():
    rng = random.Random(6)
    for _ in range(5):
        p = rj.random_phase_point(rng, 2)
        assert rj.involutivity_residual(p.x, p.Tx, T) < 1e-6


def test_weyl_bracket_on_coordinates():
    # sanity of the finite-difference bracket on the defining pairs
    rng = random.Random(9)
    p = rj.random_phase_point(rng, 2)
    f = lambda x, Tx: Tx[0]  # noqa: E731
    g = lambda x, Tx: x[0]  # noqa: E731
    br = rj.poisson_bracket(f, g, p.x, p.Tx)
    assert abs(br - (-1j * p.Tx[0] * p.x[0])) < 1e-8
    g2 = lambda x, Tx: x[1]  # noqa: E731
    assert abs(rj.poisson_bracket(f, g2, p.x, p.Tx)) < 1e-8


def test_canonicity_and_richardson():
    rng = random.Random(10)
    for _ in range(3):
        p = rj.random_phase_point(rng, 2)
        rep = rj.canonicity_check(p.x, p.Tx, T, XI)
        assert rep["max"] < 1e-5
        rj.richardson_report(p.x, p.Tx, T, XI)


def test_dilog_values():
    assert rj.dilog(0) == 0
    assert abs(rj.dilog(1) - math.pi ** 2 / 6) < 1e-12
    assert abs(rj.dilog(-1) + math.pi ** 2 / 12) < 1e-12
    z = 0.3
    assert abs(rj.dilog(z) + rj.dilog(-z) - rj.dilog(z * z) / 2) < 1e-12


def test_dilog_inversion_consistency():
    for z in (1.7 + 0.9j, -2.3 + 0.4j, 0.9 + 0.5j, -0.8 - 0.61j):
        lhs = rj.dilog(z) + rj.dilog(1 / z)
        rhs = -math.pi ** 2 / 6 - 0.5 * cmath.log(-z) ** 2
        assert abs(lhs - rhs) < 1e-12


def test_generating_function_derivatives():
    rng = random.Random(11)
    for _ in range(4):
        p = rj.random_phase_point(rng, 2)
        rep = rj.generating_function_check(p.x, p.Tx, T, XI)
        assert rep["max"] < 1e-5
        assert rep["residuals"]["yp"] == 0.0


def test_gauge_conjugation_ratios():
    rng = random.Random(12)
    p = rj.random_phase_point(rng, 3)
    ytld = (0.3 * cmath.exp(0.5j), 0.45 * cmath.exp(-1.1j))
    rep = rj.gauge_ratio_report(p.x, 0.25, T, ytld)
    assert rep["max"] < 1e-10


def test_reduction_transport():
    rng = random.Random(13)
    for _ in range(4):
        p = rj.random_phase_point(rng, 3)
        rep = rj.reduction_map_report(p.x, (p.Tx[0], p.Tx[1]), T)
        assert rep["max"] < 1e-8


def test_separation_check_tolerance_guard():
    rng = random.Random(14)
    p = rj.random_phase_point(rng, 2)
    with pytest.raises(ToleranceExceeded):
        rj.separation_variables(p.x, p.Tx, T, XI, tol=1e-30)
