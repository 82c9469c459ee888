"""Classical trigonometric n-particle model: Lax matrices, separation data,
canonicity tests, and the dilogarithm generating function.

All computations are complex double precision.  Poisson brackets are taken
with multiplicative (Weyl-type) canonical pairs, so finite differences act
on the logarithms of the coordinates and momenta.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    CollisionError,
    DegenerateRoots,
    PoleError,
    ToleranceExceeded,
    TrendViolation,
)

_PI2_6 = math.pi ** 2 / 6.0


@dataclass(frozen=True)
class PhasePoint:
    """Unit-modulus coordinates with positive multiplicative momenta."""

    x: tuple
    Tx: tuple

    def __post_init__(self):
        if len(self.x) != len(self.Tx):
            raise ValueError("coordinate and momentum counts differ")
        for xv in self.x:
            if abs(abs(xv) - 1.0) > 1e-12:
                raise ValueError(f"|x| must be 1, got {xv}")
        for tv in self.Tx:
            if not tv > 0:
                raise ValueError("momenta must be positive")

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class SeparationData:
    y: tuple
    Ty: tuple


def v_factor(xj: complex, xk: complex, t: float) -> complex:
    st = math.sqrt(t)
    den = xj - xk
    if abs(den) < 1e-12 * max(abs(xj), abs(xk)):
        raise CollisionError(f"coordinates too close: {xj} vs {xk}")
    return (st * xj - xk / st) / den


def hamiltonians(x, Tx, t: float):
    """Subset-product integrals of motion H_1..H_n."""
    n = len(x)
    out = []
    for i in range(1, n + 1):
        total = 0.0 + 0.0j
        for subset in combinations(range(n), i):
            inside = set(subset)
            prod = 1.0 + 0.0j
            for j in subset:
                prod *= Tx[j]
                for k in range(n):
                    if k not in inside:
                        prod *= v_factor(x[j], x[k], t)
            total += prod
        out.append(total)
    return out


def lax_matrix(x, Tx, t: float, u: complex) -> np.ndarray:
    """Product form D(u) E(u) of the n-particle Lax matrix."""
    n = len(x)
    tn = t ** n
    if abs(u - 1.0) < 1e-12 or abs(u - tn) < 1e-12:
        raise PoleError(f"spectral parameter {u} sits on a pole")
    for j in range(n):
        for k in range(n):
            if j != k and abs(t * x[j] - x[k]) < 1e-12:
                raise PoleError("t x_j collides with x_k")
    dcoef = (1.0 - t) * (tn - u) / (2.0 * t ** ((n + 1) / 2.0) * (1.0 - u))
    L = np.empty((n, n), dtype=complex)
    for j in range(n):
        dj = dcoef * Tx[j]
        for i in range(n):
            if i != j:
                dj *= v_factor(x[j], x[i], t)
        for k in range(n):
            e_jk = (tn + u) / (tn - u) - (t * x[j] + x[k]) / (t * x[j] - x[k])
            L[j, k] = dj * e_jk
    return L


def char_poly_residual(x, Tx, t: float, u: complex, z: complex) -> float:
    """Relative residual of the characteristic-polynomial identity."""
    n = len(x)
    tn = t ** n
    L = lax_matrix(x, Tx, t, u)
    H = hamiltonians(x, Tx, t)
    lhs = (
        (-1.0) ** n
        * t ** (n * (n - 1) / 2.0)
        * (tn - u)
        * (1.0 - u) ** n
        * np.linalg.det(z * np.eye(n) - L)
    )
    rhs = 0.0 + 0.0j
    scale = 0.0
    for k in range(n + 1):
        hk = 1.0 if k == n else H[n - k - 1]
        term = (
            (-1.0) ** k
            * t ** ((n - 1) * k / 2.0)
            * (t ** k - u)
            * (1.0 - u) ** k
            * (tn - u) ** (n - k)
            * hk
            * z ** k
        )
        rhs += term
        scale = max(scale, abs(term))
    return abs(lhs - rhs) / max(scale, 1.0)


# ---------------------------------------------------------------------------
# Separation variables for the two-particle system
# ---------------------------------------------------------------------------

def a_funcs(x, t: float, xi: complex, u: complex):
    """Normalization-dependent eigenvalue functions a_1(u), a_2(u)."""
    out = []
    for j in (0, 1):
        other = x[1 - j]
        den = (1.0 - u) * (t * xi - x[j]) * (xi * u - t * other)
        if abs(den) < 1e-14:
            raise PoleError(f"a_{j + 1} pole at u={u}")
        out.append((t ** 2 - u) * (xi - x[j]) * (xi * u - other) / den)
    return out


def _solve_separation_quadratic(a, b, c):
    disc = b * b - 4.0 * a * c
    scale = abs(b * b) + abs(4.0 * a * c)
    if abs(disc) < 1e-12 * max(scale, 1e-30):
        raise DegenerateRoots(f"discriminant {disc} too small")
    root = cmath.sqrt(disc)
    if abs(a) < 1e-14 * max(abs(b), abs(c), 1.0):
        raise DegenerateRoots("leading coefficient vanished; a root escaped to infinity")
    return ((-b + root) / (2.0 * a), (-b - root) / (2.0 * a))


def separation_variables(x, Tx, t: float, xi: complex, ref=None, check: bool = True,
                         tol: float = 1e-9) -> SeparationData:
    """Solve T1 a1(u) = T2 a2(u) for the two separation points and momenta.

    The cleared equation is a quadratic in u whose coefficients are coded
    explicitly, which stays robust near coincident roots.  When ref is
    given, roots are ordered to follow it (used by finite differencing).
    """
    x1, x2 = x
    A1 = Tx[0] * (xi - x1) * (t * xi - x2)
    A2 = Tx[1] * (xi - x2) * (t * xi - x1)
    qa = xi ** 2 * (A1 - A2)
    qb = -xi * (A1 * (x2 + t * x1) - A2 * (x1 + t * x2))
    qc = t * x1 * x2 * (A1 - A2)
    y1, y2 = _solve_separation_quadratic(qa, qb, qc)
    if ref is not None:
        if abs(y1 - ref[0]) + abs(y2 - ref[1]) > abs(y2 - ref[0]) + abs(y1 - ref[1]):
            y1, y2 = y2, y1
    ys = (y1, y2)
    a_at = [a_funcs(x, t, xi, y) for y in ys]
    Ty = tuple(Tx[0] * a_at[i][0] for i in range(2))
    if check:
        for i in range(2):
            alt = Tx[1] * a_at[i][1]
            if abs(alt - Ty[i]) > tol * max(abs(Ty[i]), 1.0):
                raise ToleranceExceeded(f"eigenvalue branch mismatch at root {ys[i]}")
        constraint = abs(ys[0] * ys[1] * xi ** 2 - t * x1 * x2)
        if constraint > tol:
            raise ToleranceExceeded(f"product constraint residual {constraint}")
        H1, H2 = hamiltonians(x, Tx, t)
        for y, T in zip(ys, Ty):
            res = separation_equation_residual(y, T, H1, H2, t)
            if res > tol:
                raise ToleranceExceeded(f"separation equation residual {res} at {y}")
    return SeparationData(y=ys, Ty=Ty)


def separation_equation_residual(y: complex, Ty: complex, H1: complex, H2: complex,
                                 t: float) -> float:
    st = math.sqrt(t)
    val = t * (1.0 - y) * Ty ** 2 - st * (t - y) * H1 * Ty + (t ** 2 - y) * H2
    scale = max(abs(t * (1.0 - y) * Ty ** 2), abs(st * (t - y) * H1 * Ty), 1.0)
    return abs(val) / scale


def char_eq_a_residual(x, t: float, xi: complex, u: complex) -> float:
    """The quadratic relation satisfied identically by a_1, a_2."""
    a1, a2 = a_funcs(x, t, xi, u)
    st = math.sqrt(t)
    v12 = v_factor(x[0], x[1], t)
    v21 = v_factor(x[1], x[0], t)
    val = (
        t * (1.0 - u) * a1 * a2
        - st * (t - u) * (v12 * a2 + v21 * a1)
        + (t ** 2 - u)
    )
    return abs(val)


def a_ratio_invariance_residual(x, t: float, xi: complex, u: complex) -> float:
    """a1/a2 is invariant under u -> t x1 x2 / (u xi^2)."""
    a1, a2 = a_funcs(x, t, xi, u)
    u2 = t * x[0] * x[1] / (u * xi ** 2)
    b1, b2 = a_funcs(x, t, xi, u2)
    return abs(a1 / a2 - b1 / b2)


def normalization_row(x, t: float, xi: complex, u: complex, n_ambient: int = 2):
    """Row vector normalizing the eigenvector of the 2x2 system."""
    tn = t ** n_ambient
    return np.array(
        [
            (tn + u) / (tn - u) - (t * xi + x[j]) / (t * xi - x[j])
            for j in (0, 1)
        ],
        dtype=complex,
    )


def b_poly_value(x, Tx, t: float, xi: complex, u: complex) -> complex:
    """Determinant whose zeros are the separation points."""
    alpha = normalization_row(x, t, xi, u)
    L = lax_matrix(x, Tx, t, u)
    aL = alpha @ L
    return alpha[0] * aL[1] - alpha[1] * aL[0]


# ---------------------------------------------------------------------------
# Poisson brackets by central differences in logarithmic coordinates
# ---------------------------------------------------------------------------

def poisson_bracket(F, G, x, Tx, h: float = 1e-6) -> complex:
    """{F, G} for the bracket {T_j, x_k} = -i T_j x_k delta_jk.

    F, G are callables of (x, Tx); derivatives are central differences with
    multiplicative steps exp(+-h) (i.e. in ln T_j and ln x_j).
    """
    n = len(x)

    def grads(fn):
        dP, dX = [], []
        up, dn = math.exp(h), math.exp(-h)
        for j in range(n):
            Tp = list(Tx)
            Tm = list(Tx)
            Tp[j] = Tx[j] * up
            Tm[j] = Tx[j] * dn
            dP.append((fn(x, Tp) - fn(x, Tm)) / (2.0 * h))
            xp = list(x)
            xm = list(x)
            xp[j] = x[j] * up
            xm[j] = x[j] * dn
            dX.append((fn(xp, Tx) - fn(xm, Tx)) / (2.0 * h))
        return dP, dX

    FP, FX = grads(F)
    GP, GX = grads(G)
    return -1j * sum(FP[j] * GX[j] - FX[j] * GP[j] for j in range(n))


def _separation_component(t: float, xi: complex, ref: SeparationData, kind: str, idx: int):
    def fn(x, Tx):
        data = separation_variables(x, Tx, t, xi, ref=ref.y, check=False)
        return data.y[idx] if kind == "y" else data.Ty[idx]

    return fn


def canonicity_check(x, Tx, t: float, xi: complex, h: float = 1e-6,
                      tol: float = 1e-5) -> dict:
    """All pairwise brackets of the separation data against the Weyl pattern."""
    base = separation_variables(x, Tx, t, xi)
    y1 = _separation_component(t, xi, base, "y", 0)
    y2 = _separation_component(t, xi, base, "y", 1)
    T1 = _separation_component(t, xi, base, "T", 0)
    T2 = _separation_component(t, xi, base, "T", 1)
    residuals = {
        "y1_y2": abs(poisson_bracket(y1, y2, x, Tx, h)),
        "Ty1_Ty2": abs(poisson_bracket(T1, T2, x, Tx, h)),
        "Ty1_y2": abs(poisson_bracket(T1, y2, x, Tx, h)),
        "Ty2_y1": abs(poisson_bracket(T2, y1, x, Tx, h)),
    }
    for idx, (Tf, yf) in enumerate(((T1, y1), (T2, y2))):
        br = poisson_bracket(Tf, yf, x, Tx, h)
        target = -1j * base.Ty[idx] * base.y[idx]
        residuals[f"Ty{idx + 1}_y{idx + 1}"] = abs(br - target) / max(abs(target), 1.0)
    worst = max(residuals.values())
    report = {"residuals": residuals, "max": worst, "tol": tol, "h": h}
    if worst > tol:
        raise ToleranceExceeded(f"canonical brackets fail: {report}")
    return report


def richardson_report(x, Tx, t: float, xi: complex, h: float = 1e-3,
                      floor: float = 1e-9) -> dict:
    """Halving the step must at least halve the truncation-dominated residuals."""
    def max_residual(step):
        try:
            rep = canonicity_check(x, Tx, t, xi, h=step, tol=math.inf)
        except ToleranceExceeded:  # pragma: no cover - tol is inf
            raise
        return rep["max"]

    e0 = max_residual(h)
    e1 = max_residual(h / 2.0)
    report = {"coarse": e0, "fine": e1, "h": h}
    if e0 > floor and not (e1 <= e0 / 2.0):
        raise TrendViolation(f"step halving did not improve brackets: {report}")
    return report


def involutivity_residual(x, Tx, t: float, h: float = 1e-6) -> float:
    H1f = lambda xv, Tv: hamiltonians(xv, Tv, t)[0]  # noqa: E731
    H2f = lambda xv, Tv: hamiltonians(xv, Tv, t)[1]  # noqa: E731
    return abs(poisson_bracket(H1f, H2f, x, Tx, h))


# ---------------------------------------------------------------------------
# Dilogarithm and the generating function
# ---------------------------------------------------------------------------

def dilog(z: complex) -> complex:
    """Euler dilogarithm sum z^k/k^2, continued by the standard functional
    equations (inversion, reflection, Landen) away from the small disk."""
    z = complex(z)
    if z == 0:
        return 0.0 + 0.0j
    if z == 1:
        return complex(_PI2_6)
    if abs(z) <= 0.75:
        return _dilog_series(z)
    if abs(z) > 1.0:
        return -_PI2_6 - 0.5 * cmath.log(-z) ** 2 - dilog(1.0 / z)
    if abs(1.0 - z) <= 0.75:
        return _PI2_6 - cmath.log(z) * cmath.log(1.0 - z) - dilog(1.0 - z)
    w = z / (z - 1.0)
    if abs(w) <= 0.75:
        return -0.5 * cmath.log(1.0 - z) ** 2 - dilog(w)
    return _dilog_series(z)


def _dilog_series(z: complex, tol: float = 1e-17) -> complex:
    total = 0.0 + 0.0j
    term = z
    k = 1
    while True:
        total += term / k ** 2
        k += 1
        term *= z
        if abs(term) / k ** 2 < tol:
            return total
        if k > 200000:  # |z| extremely close to 1
            return total


def dilog_quad(nu: complex, x: complex, y: complex) -> complex:
    """Four-argument combination entering the generating function."""
    return (
        dilog(nu * x * y)
        + dilog(nu * x / y)
        + dilog(nu * y / x)
        + dilog(nu / (x * y))
    )


def f_generating(y_minus: complex, x_minus: complex, x_plus: complex, t: float,
                 xi: complex) -> complex:
    """Reduced generating function of the separating canonical map."""
    st = math.sqrt(t)
    w = x_plus / (st * xi)
    return (
        1j
        * (
            dilog_quad(st, y_minus, x_minus)
            + dilog_quad(st, w, x_minus)
            - dilog_quad(t, w, y_minus)
        )
        - 1j * dilog(x_minus ** 2)
        - 1j * dilog(x_minus ** -2)
    )


def _branch_reduce(delta: complex):
    k = round(delta.real / (2.0 * math.pi))
    return delta - 2.0 * math.pi * k, k


def generating_function_check(x, Tx, t: float, xi: complex, h: float = 1e-5,
                               tol: float = 1e-5) -> dict:
    """Central-difference check of the four derivative equations.

    The logarithms fix branches only up to 2*pi shifts, so each residual is
    reduced modulo 2*pi on its real part and the integer offsets are
    recorded alongside the residuals.
    """
    data = separation_variables(x, Tx, t, xi)
    x1, x2 = x
    st = math.sqrt(t)
    x_plus = cmath.exp(0.5 * (cmath.log(x1) + cmath.log(x2)))
    x_minus = cmath.exp(0.5 * (cmath.log(x1) - cmath.log(x2)))
    y_plus = st * x_plus / xi  # the coupling constraint fixes this square root
    if abs(y_plus ** 2 - data.y[0] * data.y[1]) > 1e-8:
        raise ToleranceExceeded("square-root branch inconsistent with the constraint")
    y_minus = data.y[0] / y_plus
    Txp = Tx[0] * Tx[1]
    Txm = Tx[0] / Tx[1]
    Typ = data.Ty[0] * data.Ty[1]
    Tym = data.Ty[0] / data.Ty[1]

    def dlog(which):
        def f(ym=y_minus, xm=x_minus, xp=x_plus):
            return f_generating(ym, xm, xp, t, xi)

        up, dn = cmath.exp(h), cmath.exp(-h)
        if which == "xp":
            return (f(xp=x_plus * up) - f(xp=x_plus * dn)) / (2.0 * h)
        if which == "xm":
            return (f(xm=x_minus * up) - f(xm=x_minus * dn)) / (2.0 * h)
        return (f(ym=y_minus * up) - f(ym=y_minus * dn)) / (2.0 * h)

    checks = {
        "xp": (dlog("xp"), 1j * cmath.log(Txp / Typ)),
        "xm": (dlog("xm"), 1j * cmath.log(Txm)),
        "ym": (dlog("ym"), -1j * cmath.log(Tym)),
    }
    residuals = {}
    branches = {}
    for name, (lhs, rhs) in checks.items():
        reduced, k = _branch_reduce(lhs - rhs)
        residuals[name] = abs(reduced)
        branches[name] = k
    residuals["yp"] = 0.0  # the reduced function has no dependence left
    worst = max(residuals.values())
    report = {"residuals": residuals, "branches": branches, "max": worst, "tol": tol}
    if worst > tol:
        raise ToleranceExceeded(f"generating-function derivatives fail: {report}")
    return report


# ---------------------------------------------------------------------------
# Gauge functions and the reduction from the three-particle chain
# ---------------------------------------------------------------------------

def _qprod(a: complex, q: float) -> complex:
    out = 1.0 + 0.0j
    qk = 1.0
    for _ in range(_trunc(abs(a), q)):
        out *= 1.0 - a * qk
        qk *= q
    return out


def _trunc(amax: float, q: float) -> int:
    if amax == 0:
        return 1
    return max(1, int(math.ceil(math.log(1e-16 / max(amax, 1e-16)) / math.log(q))) + 2)


def gauge_x(x, q: float, t: float) -> complex:
    x1, x2, x3 = x
    num = _qprod(t, q) * _qprod(t * x1 / x3, q) * _qprod(t * x2 / x3, q)
    den = _qprod(t ** 2, q) * _qprod(x1 / x3, q) * _qprod(x2 / x3, q)
    return num / den


def gauge_y(ytld, t: float, q: float) -> complex:
    y1, y2 = ytld
    num = _qprod(t ** 2, q) * _qprod(y1, q) * _qprod(y2, q)
    den = _qprod(t ** 3, q) * _qprod(y1 / t, q) * _qprod(y2 / t, q)
    return num / den


def gauge_ratio_report(x, q: float, t: float, ytld, tol: float = 1e-10) -> dict:
    """Telescoping of both gauge functions under a single q-shift."""
    worst = 0.0
    base_x = gauge_x(x, q, t)
    for j in (0, 1):
        shifted = list(x)
        shifted[j] = q * x[j]
        ratio = base_x / gauge_x(shifted, q, t)
        target = (1.0 - t * x[j] / x[2]) / (1.0 - x[j] / x[2])
        worst = max(worst, abs(ratio - target))
    base_y = gauge_y(ytld, t, q)
    for j in (0, 1):
        shifted = list(ytld)
        shifted[j] = q * ytld[j]
        ratio = base_y / gauge_y(shifted, t, q)
        target = (1.0 - ytld[j]) / (1.0 - ytld[j] / t)
        worst = max(worst, abs(ratio - target))
    report = {"max": worst, "tol": tol}
    if worst > tol:
        raise ToleranceExceeded(f"gauge conjugation ratios fail: {report}")
    return report


def reduced_lax(x3amb, Ttld, t: float, u: complex) -> np.ndarray:
    """Top-left 2x2 block of the three-particle Lax matrix (last row/column removed)."""
    x1, x2, x3 = x3amb
    t3 = t ** 3
    if abs(u - 1.0) < 1e-12 or abs(u - t3) < 1e-12:
        raise PoleError(f"spectral parameter {u} sits on a pole")
    dcoef = (1.0 - t) * (t3 - u) / (2.0 * t ** 2 * (1.0 - u))
    L = np.empty((2, 2), dtype=complex)
    for j, xj in enumerate((x1, x2)):
        dj = dcoef * Ttld[j]
        for i, xi_ in enumerate((x1, x2, x3)):
            if i != j:
                dj *= v_factor(xj, xi_, t)
        for k, xk in enumerate((x1, x2)):
            e_jk = (t3 + u) / (t3 - u) - (t * xj + xk) / (t * xj - xk)
            L[j, k] = dj * e_jk
    return L


def _reduced_row(x3amb, t: float, u: complex) -> np.ndarray:
    x1, x2, x3 = x3amb
    t3 = t ** 3
    return np.array(
        [
            (t3 + u) / (t3 - u) - (t * x3 + x1) / (t * x3 - x1),
            (t3 + u) / (t3 - u) - (t * x3 + x2) / (t * x3 - x2),
        ],
        dtype=complex,
    )


def reduction_map_report(x3amb, Ttld, t: float, tol: float = 1e-8) -> dict:
    """Transport of the two-particle separation data into the reduced chain.

    The two-particle system with coupling point x3 and rescaled momenta is
    solved directly; the mapped points t*y must be zeros of the reduced
    normalization determinant and the mapped momenta must match both
    eigenvalue branches there.
    """
    x1, x2, x3 = x3amb
    st = math.sqrt(t)
    Tx = [st * v_factor(x1, x3, t) * Ttld[0], st * v_factor(x2, x3, t) * Ttld[1]]
    data = separation_variables((x1, x2), Tx, t, xi=x3)
    worst = 0.0
    details = []
    for y, Ty in zip(data.y, data.Ty):
        ytld = t * y
        Tytld = Ty * (st - ytld / st) / (st * (1.0 - ytld))
        L = reduced_lax(x3amb, Ttld, t, ytld)
        alpha = _reduced_row(x3amb, t, ytld)
        aL = alpha @ L
        bval = alpha[0] * aL[1] - alpha[1] * aL[0]
        bscale = max(abs(alpha[0] * aL[1]), abs(alpha[1] * aL[0]), 1.0)
        res_b = abs(bval) / bscale
        v1 = L[0, 0] - (alpha[0] / alpha[1]) * L[0, 1]
        v2 = L[1, 1] - (alpha[1] / alpha[0]) * L[1, 0]
        res_T = max(abs(v1 - Tytld), abs(v2 - Tytld)) / max(abs(Tytld), 1.0)
        details.append({"b_residual": res_b, "momentum_residual": res_T})
        worst = max(worst, res_b, res_T)
    report = {"details": details, "max": worst, "tol": tol}
    if worst > tol:
        raise ToleranceExceeded(f"reduction map fails: {report}")
    return report


def reduction_checks(x3amb, Ttld, q: float, t: float, tol_ratio: float = 1e-10,
                     tol_map: float = 1e-8) -> dict:
    """Gauge-ratio telescoping plus the canonical transport of separation data."""
    base = separation_variables(
        (x3amb[0], x3amb[1]),
        [math.sqrt(t) * v_factor(x3amb[j], x3amb[2], t) * Ttld[j] for j in (0, 1)],
        t,
        xi=x3amb[2],
    )
    ytld = tuple(t * y for y in base.y)
    gauge = gauge_ratio_report(x3amb, q, t, ytld, tol_ratio)
    transport = reduction_map_report(x3amb, Ttld, t, tol_map)
    return {"gauge": gauge, "map": transport, "max": max(gauge["max"], transport["max"])}


# ---------------------------------------------------------------------------
# Sampling helpers
# ---------------------------------------------------------------------------

def random_phase_point(rng, n: int = 2, min_gap: float = 0.25) -> PhasePoint:
    """Generic point with angular separation and moderate momenta."""
    while True:
        angles = sorted(rng.uniform(-math.pi + 0.1, math.pi - 0.1) for _ in range(n))
        if all(b - a > min_gap for a, b in zip(angles, angles[1:])):
            break
    x = tuple(cmath.exp(1j * a) for a in angles)
    Tx = tuple(rng.uniform(0.5, 2.0) for _ in range(n))
    return PhasePoint(x=x, Tx=Tx)


def hermitian_phase_point(rng, n: int = 3) -> PhasePoint:
    """Conjugation-symmetric configuration, on which the integrals are real."""
    if n == 2:
        theta = rng.uniform(0.3, 2.5)
        T = rng.uniform(0.5, 2.0)
        return PhasePoint(x=(cmath.exp(1j * theta), cmath.exp(-1j * theta)), Tx=(T, T))
    if n == 3:
        theta = rng.uniform(0.4, 2.5)
        T = rng.uniform(0.5, 2.0)
        T3 = rng.uniform(0.5, 2.0)
        return PhasePoint(
            x=(cmath.exp(1j * theta), cmath.exp(-1j * theta), 1.0 + 0.0j),
            Tx=(T, T, T3),
        )
    raise ValueError("only 2- and 3-particle symmetric samples are provided")
