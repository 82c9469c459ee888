"""Two-variable symmetric orthogonal Laurent polynomials P_lam and friends.

P_lam is built from its triangular expansion in the monomial symmetric
basis; H1 and H2 are the commuting q-difference operators it diagonalizes.
The separated one-variable polynomials f_lam solve a three-term q-difference
equation whose spectral parameters are the H-eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IdentityViolation, NotPolynomial, PoleError
from .exact import (
    Laurent1,
    Laurent2,
    ONE,
    Pair,
    QContext,
    ZERO,
    divide_exact,
    divide_exact1,
    qpochhammer,
)


@dataclass(frozen=True)
class Spectrum:
    """Joint eigenvalues (h1, h2) attached to a label lam."""

    h1: object
    h2: object


def spectrum(lam: Pair, ctx: QContext) -> Spectrum:
    h1 = ctx.th(-1) * ctx.q ** lam.l1 + ctx.th(1) * ctx.q ** lam.l2
    h2 = ctx.q ** lam.total
    return Spectrum(h1=h1, h2=h2)


@dataclass(frozen=True)
class MacdonaldPoly:
    label: Pair
    poly: Laurent2


@dataclass(frozen=True)
class SeparatedPoly:
    label: Pair
    poly: Laurent1


def monomial(lam: Pair) -> Laurent2:
    """Monomial symmetric function m_lam."""
    if lam.l1 == lam.l2:
        return Laurent2.term(lam.l1, lam.l2)
    return Laurent2({(lam.l1, lam.l2): ONE, (lam.l2, lam.l1): ONE})


def u_coeff(lam: Pair, nu: Pair, ctx: QContext):
    """Expansion coefficient of m_nu in P_lam (nu inside lam, same total)."""
    q, t = ctx.q, ctx.t
    w = lam.width
    return (
        qpochhammer(q, q, w)
        / qpochhammer(t, q, w)
        * qpochhammer(t, q, nu.l1 - lam.l1)
        / qpochhammer(q, q, nu.l1 - lam.l1)
        * qpochhammer(t, q, lam.l2 - nu.l1)
        / qpochhammer(q, q, lam.l2 - nu.l1)
    )


def macdonald_poly(lam: Pair, ctx: QContext) -> MacdonaldPoly:
    """P_lam as the triangular monomial-basis expansion (unit leading term)."""
    total = lam.total
    poly = Laurent2()
    for nu1 in range(lam.l1, total // 2 + 1):
        nu2 = total - nu1
        nu = Pair(nu1, nu2)
        poly = poly + monomial(nu) * u_coeff(lam, nu, ctx)
    return MacdonaldPoly(label=lam, poly=poly)


_X1_MINUS_X2 = Laurent2({(1, 0): ONE, (0, 1): -ONE})


def apply_H1(p: Laurent2, ctx: QContext) -> Laurent2:
    """First Hamiltonian: v12 T_{q,x1} + v21 T_{q,x2} with exact clearing.

    The rational coefficients share the denominator (x1 - x2); the image of
    a symmetric polynomial is again polynomial, so the division must be
    exact and a failure signals a non-symmetric input.
    """
    st = ctx.sqrt_t
    sti = ONE / st
    shift1 = p.subs_scale(ctx.q, ONE)
    shift2 = p.subs_scale(ONE, ctx.q)
    num = (
        Laurent2({(1, 0): st, (0, 1): -sti}) * shift1
        - Laurent2({(0, 1): st, (1, 0): -sti}) * shift2
    )
    return divide_exact(num, _X1_MINUS_X2)


def apply_H2(p: Laurent2, ctx: QContext) -> Laurent2:
    """Second Hamiltonian: simultaneous q-shift of both variables."""
    return p.subs_scale(ctx.q, ctx.q)


def check_eigen(lam: Pair, ctx: QContext) -> bool:
    """H_j P_lam = h_j P_lam, exactly."""
    P = macdonald_poly(lam, ctx).poly
    spec = spectrum(lam, ctx)
    if apply_H1(P, ctx) != P * spec.h1:
        raise IdentityViolation(f"H1 eigenvalue fails for lam={lam}")
    if apply_H2(P, ctx) != P * spec.h2:
        raise IdentityViolation(f"H2 eigenvalue fails for lam={lam}")
    return True


# ---------------------------------------------------------------------------
# Separated polynomials
# ---------------------------------------------------------------------------

def separated_poly(lam: Pair, ctx: QContext) -> SeparatedPoly:
    """f_lam(y) = sum_{k=l1}^{l2} chi_k y^k with the explicit chi ratios."""
    q, t = ctx.q, ctx.t
    n = lam.width
    base = t ** -2 * q
    a_num1 = t
    a_num2 = q ** -n
    a_den = (ONE / t) * q ** (1 - n)
    coeffs = {}
    chi = ONE
    coeffs[lam.l1] = chi
    for j in range(1, n + 1):
        num = (ONE - a_num1 * q ** (j - 1)) * (ONE - a_num2 * q ** (j - 1))
        den = (ONE - q ** j) * (ONE - a_den * q ** (j - 1))
        if den == 0:
            raise PoleError(f"chi denominator vanished at step {j} for lam={lam}")
        chi = chi * base * num / den
        if chi != 0:
            coeffs[lam.l1 + j] = chi
    return SeparatedPoly(label=lam, poly=Laurent1(coeffs))


def _poch_factors(base, q, count: int) -> list:
    return [ONE - base * q ** i for i in range(count)]


def separated_poly_alt(lam: Pair, ctx: QContext) -> SeparatedPoly:
    """f_lam through the transformed series with the (y;q)_{1-2g} prefactor.

    The series ratio (t^{-1}q;q)_j / (t^{-1}q^{1-n};q)_j degenerates at the
    integer point t = q^g: numerator and denominator each develop a single
    vanishing factor (the same one, 1 - t^{-1}q^g), which cancels in the
    limit.  Matching zero factors are therefore dropped pairwise before
    taking the ratio; an unmatched denominator zero is a genuine pole.
    """
    q, t = ctx.q, ctx.t
    g = ctx.g
    n = lam.width
    a = (ONE / t ** 2) * q ** (1 - n)  # terminates the series
    b = (ONE / t) * q
    c = (ONE / t) * q ** (1 - n)
    series = Laurent1()
    qq = ONE
    poch_a = ONE
    for j in range(n + 2 * g):
        if j > 0:
            poch_a *= ONE - a * q ** (j - 1)
            qq *= ONE - q ** j
        if poch_a == 0:
            break
        num_factors = _poch_factors(b, q, j)
        den_factors = _poch_factors(c, q, j)
        num_zeros = sum(1 for f in num_factors if f == 0)
        den_zeros = sum(1 for f in den_factors if f == 0)
        if num_zeros > den_zeros:
            continue
        if den_zeros > num_zeros:
            raise PoleError(f"unmatched pole in series term {j} for lam={lam}")
        num = ONE
        skip = num_zeros
        for f in num_factors:
            if f == 0 and skip:
                skip -= 1
                continue
            num *= f
        den = ONE
        skip = den_zeros
        for f in den_factors:
            if f == 0 and skip:
                skip -= 1
                continue
            den *= f
        series = series + Laurent1.term(j, poch_a * num / (den * qq))
    denom = Laurent1.one()
    for k in range(1, 2 * g):
        denom = denom * (Laurent1.one() - Laurent1.term(1, q ** -k))
    try:
        quotient = divide_exact1(series, denom)
    except Exception as exc:
        raise NotPolynomial(f"series/(y;q)_(1-2g) not polynomial for lam={lam}") from exc
    shifted = Laurent1({k + lam.l1: v for k, v in quotient.c.items()})
    return SeparatedPoly(label=lam, poly=shifted)


def check_separation_equation(f: SeparatedPoly, spec: Spectrum, ctx: QContext) -> bool:
    """t(1-qy) f(q^2 y) - sqrt(t)(t-qy) h1 f(qy) + (t^2-qy) h2 f(y) == 0."""
    residual = separation_residual(f.poly, spec, ctx)
    if residual:
        raise IdentityViolation(f"separation equation residual {residual!r}")
    return True


def separation_residual(fp: Laurent1, spec: Spectrum, ctx: QContext) -> Laurent1:
    q, t = ctx.q, ctx.t
    st = ctx.sqrt_t
    y = Laurent1.term(1)
    f2 = fp.subs_scale(q ** 2)
    f1 = fp.subs_scale(q)
    term1 = (Laurent1.one() - y * q) * f2 * t
    term2 = (Laurent1.term(0, t) - y * q) * f1 * (st * spec.h1)
    term3 = (Laurent1.term(0, t ** 2) - y * q) * fp * spec.h2
    return term1 - term2 + term3


def separation_solution_dim(lam: Pair, ctx: QContext) -> int:
    """Dimension of Laurent solutions of the separation equation on [l1, l2].

    Writes the equation as a linear system on the coefficient window and
    rank-reduces it with exact elimination; the separated polynomial is the
    unique solution up to scale exactly when the dimension is 1.
    """
    q, t = ctx.q, ctx.t
    spec = spectrum(lam, ctx)
    idx = {k: i for i, k in enumerate(range(lam.l1, lam.l2 + 1))}
    ncols = len(idx)
    rows = []
    st = ctx.sqrt_t
    for m in range(lam.l1 - 1, lam.l2 + 2):
        row = [ZERO] * ncols
        #   c_m [t q^{2m} - t^{3/2} h1 q^m + t^2 h2]
        # + c_{m-1} [-t q^{2m-1} + t^{1/2} h1 q^m - h2 q]
        if m in idx:
            row[idx[m]] = t * q ** (2 * m) - t * st * spec.h1 * q ** m + t ** 2 * spec.h2
        if m - 1 in idx:
            row[idx[m - 1]] = (
                -t * q ** (2 * m - 1) + st * spec.h1 * q ** m - spec.h2 * q
            )
        if any(v != 0 for v in row):
            rows.append(row)
    rank = _exact_rank(rows, ncols)
    return ncols - rank


def _exact_rank(rows: list, ncols: int) -> int:
    rank = 0
    rows = [list(r) for r in rows]
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / pr[col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank
