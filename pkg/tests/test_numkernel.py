import cmath
import math
import random

import numpy as np
import pytest

from qsov import numkernel as nk
from qsov import sov
from qsov.errors import ContourUnsupported, ToleranceExceeded, TrendViolation
from qsov.exact import Pair, QContext, frac

CFG = nk.DEFAULT_CONFIG


def test_config_validation():
    with pytest.raises(ValueError):
        nk.NumericConfig(quad_points=8)
    with pytest.raises(ValueError):
        nk.NumericConfig(prod_cutoff=1e-3)
    with pytest.raises(ValueError):
        nk.NumericConfig(tol_tight=0.0)


def test_awparams_disk():
    with pytest.raises(ContourUnsupported):
        nk.AWParams(1.2, 0, 0, 0)


def test_qprod_inf_basics():
    assert nk.qprod_inf(0.0, 0.25) == 1.0
    a, q = 0.3 + 0.1j, 0.25
    lhs = nk.qprod_inf(a, q)
    rhs = (1 - a) * nk.qprod_inf(a * q, q)
    assert abs(lhs - rhs) < CFG.tol_tight
    loose = nk.NumericConfig(prod_cutoff=1e-14)
    assert abs(nk.qprod_inf(q, q, loose) - nk.qprod_inf(q, q)) < 1e-12


def test_qprod_ratio_matches_quotient():
    a, b, q = 0.4 + 0.2j, -0.3 + 0.1j, 0.3
    direct = nk.qprod_inf(a, q) / nk.qprod_inf(b, q)
    assert abs(nk.qprod_ratio(a, b, q) - direct) < 1e-13


def test_aw_integral_zero_params():
    val = nk.aw_integral(nk.AWParams(0, 0, 0, 0), 0.25)
    assert abs(val - 2.0 / nk.qprod_inf(0.25, 0.25)) < CFG.tol_tight


def test_aw_integral_matches_closed_form():
    rng = random.Random(0)
    for q in (0.2, 0.4):
        for _ in range(10):
            params = nk.AWParams(
                *(
                    cmath.rect(rng.uniform(0, 0.6), rng.uniform(0, 2 * math.pi))
                    for _ in range(4)
                )
            )
            quad = nk.aw_integral(params, q)
            closed = nk.aw_closed_form(params, q)
            assert abs(quad - closed) / abs(closed) < 1e-10


def test_aw_integral_permutation_symmetry():
    p1 = nk.AWParams(0.3, -0.2, 0.1j, 0.4)
    p2 = nk.AWParams(0.4, 0.1j, -0.2, 0.3)
    assert abs(nk.aw_integral(p1, 0.25) - nk.aw_integral(p2, 0.25)) < 1e-12


def test_aw_integral_tolerance_guard():
    strict = nk.NumericConfig(tol_tight=1e-300)
    with pytest.raises(ToleranceExceeded):
        nk.aw_integral(nk.AWParams(0.3, -0.2, 0.1j, 0.4), 0.25, strict)


def test_aw_spectral_convergence():
    rep = nk.aw_convergence_report(nk.AWParams(0.3, -0.2, 0.1j, 0.4), 0.25)
    assert all(r >= 4.0 for r in rep["ratios"])


def test_mab_constant_and_eigenaction():
    y, r = cmath.exp(-0.9j), cmath.exp(0.4j)
    val = nk.apply_Mab_numeric(lambda x: np.ones_like(x), 0.7, 1.1, r, y, 0.25)
    assert abs(val - 1.0) < CFG.tol_tight
    rep = nk.mab_eigenpoly_report(0.7, 1.1, r, y, 0.25)
    assert rep["max_err"] < 1e-8


def test_mab_contour_guard():
    with pytest.raises(ContourUnsupported):
        nk.apply_Mab_numeric(lambda x: np.ones_like(x), 0.7, 1.1, 3.0, 0.5, 0.25)


def test_separating_integral_matches_algebra():
    ctx = QContext(s=frac(1, 2), g=1, xi=frac(3, 2))
    q, t, xi = float(ctx.q), float(ctx.t), float(ctx.xi)
    for th1, th2 in ((0.3, 0.55), (0.8, -0.4)):
        y1, y2 = t * cmath.exp(-2j * th1), t * cmath.exp(-2j * th2)
        yp = t * cmath.exp(-1j * (th1 + th2))
        for nu in (Pair(0, 1), Pair(-1, 1)):
            pol = sov.basis("p", nu, ctx)
            val = nk.apply_M_xi_numeric(pol, ctx.g, q, xi, y1, y2, yp)
            ref = complex(sov.basis("pt", nu, ctx).evaluate(y1, y2)) * float(
                sov.mu_p(nu, ctx)
            )
            assert abs(val - ref) / max(abs(ref), 1.0) < 1e-8


@pytest.mark.parametrize("n", range(6))
def test_product_formula(n):
    rep = nk.product_formula_check(n, 0.7, 1.1, 0.25, 0.5)
    assert rep["err"] < 1e-6


def test_kernel_series_truncation():
    rep = nk.kernel_series_check(0.5, 0.9, 1.3, 0.25, 0.5, terms=40)
    assert rep["err"] < 1e-6


def test_orthogonality():
    assert nk.orthogonality_check(0, 1, 0.25, 0.5)["err"] < 1e-6
    for n in (0, 2, 4):
        assert nk.orthogonality_check(n, n, 0.25, 0.5)["err"] < 1e-6


@pytest.mark.parametrize("n", (0, 2, 4))
def test_difference_equation(n):
    assert nk.qdiff_equation_check(n, 0.25, 0.5)["err"] < 1e-6


def test_fractional_power_action():
    r, y = cmath.exp(0.35j), cmath.exp(-1.1j)
    for alpha, nu in ((0.5, 0.4), (0.3, 1.0), (1.0, 0.7)):
        assert nk.power_action_report(alpha, nu, r, y, 0.25)["err"] < 1e-6
    # negative integer orders act through the finite-difference branch
    for g in (1, 2):
        val = nk.apply_I_fractional(lambda x: nk.psi_power(2.5, r, x, 0.25), -g, r, y, 0.25)
        ref = complex(nk.psi_power(2.5 - g, r, y, 0.25))
        assert abs(val - ref) / abs(ref) < 1e-6


def test_fractional_group_property():
    ys = [cmath.exp(0.7j), cmath.exp(-2.1j)]
    for alpha, beta in ((0.5, 0.5), (0.3, 0.7), (1.0, 1.0)):
        rep = nk.group_property_report(alpha, beta, cmath.exp(0.35j), ys, 0.25)
        assert rep["err"] < 1e-6


@pytest.mark.parametrize("g", (1, 2, 3))
def test_negative_order_composition(g):
    ys = [cmath.exp(0.7j), cmath.exp(-2.1j), cmath.exp(1.9j)]
    rep = nk.neg_order_consistency_report(g, cmath.exp(0.35j), ys, 0.25)
    assert rep["err"] < 1e-10


def test_noninteger_negative_order_rejected():
    with pytest.raises(ContourUnsupported):
        nk.apply_I_fractional(lambda x: x, -0.5, 0.3, 0.5, 0.25)


def test_classical_limits():
    rep = nk.classical_limit_checks()
    assert rep["poly_errors"][1] < rep["poly_errors"][0]
    assert rep["op_errors"][1] < rep["op_errors"][0]


def test_trend_guard():
    with pytest.raises(TrendViolation):
        nk.assert_decreasing([1e-3, 2e-3], "synthetic")


def test_gamma_normalizer_consistency():
    # b_q must factor through the adopted gamma normalization
    q = 0.25
    for a, b in ((0.7, 1.1), (1.0, 1.0), (0.4, 2.2)):
        lhs = nk.b_q(a, b, q)
        rhs = nk.gamma_q(a, q) * nk.gamma_q(b, q) / nk.gamma_q(a + b, q)
        assert abs(lhs - rhs) < 1e-12
    assert abs(nk.gamma_q(1.0, q) - 1.0) < 1e-14
