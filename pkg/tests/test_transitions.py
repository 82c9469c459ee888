import pytest

from qsov import macdonald, sov
from qsov.exact import Laurent2, Pair, QContext, frac, pairs_under

CTX = QContext(s=frac(1, 2), g=1, xi=frac(3, 2))
CTX2 = QContext(s=frac(3, 5), g=2, xi=frac(2))
KINDS = ("rho", "pi", "Q", "R", "rhot", "pit", "Qt", "Rt")
LABELS = (Pair(0, 1), Pair(-1, 2), Pair(0, 4), Pair(-3, 0), Pair(2, 5))


def test_diagonal_entries():
    for ctx in (CTX, CTX2):
        for lam in LABELS:
            m = lam.width
            rho = sov.transition_row("rho", lam, ctx).entries[lam]
            assert rho == (-1) ** m * ctx.qh(-m * (m - 1)) * (ctx.t * ctx.xi) ** (-m)
            R = sov.transition_row("R", lam, ctx).entries[lam]
            assert R == (-1) ** m * ctx.qh(m * (m - 1)) * (ctx.t * ctx.xi) ** m
            assert rho * R == 1


def test_degenerate_width_row():
    row = sov.transition_row("rho", Pair(1, 1), CTX).entries
    assert row == {Pair(1, 1): 1}


@pytest.mark.parametrize("ctx", [CTX, CTX2])
@pytest.mark.parametrize("kind", KINDS)
def test_closed_matches_recurrence(ctx, kind):
    for lam in LABELS:
        closed = sov.transition_row(kind, lam, ctx, "closed").entries
        rec = sov.transition_row(kind, lam, ctx, "recurrence").entries
        assert closed == rec


@pytest.mark.parametrize("ctx", [CTX, CTX2])
def test_reassembly(ctx):
    for lam in (Pair(0, 2), Pair(-1, 2)):
        P = macdonald.macdonald_poly(lam, ctx).poly
        for kind, tag in (("rho", "r"), ("pi", "p")):
            acc = Laurent2()
            for nu, c in sov.transition_row(kind, lam, ctx).entries.items():
                acc = acc + sov.basis(tag, nu, ctx) * c
            assert acc == P
        for kind, tag in (("Q", "p"), ("R", "r")):
            acc = Laurent2()
            for nu, c in sov.transition_row(kind, lam, ctx).entries.items():
                acc = acc + macdonald.macdonald_poly(nu, ctx).poly * c
            assert acc == sov.basis(tag, lam, ctx)


@pytest.mark.parametrize("ctx", [CTX, CTX2])
def test_factorized_image_expansions(ctx):
    def f_image(nu):
        return sov.f_tensor(macdonald.separated_poly(nu, ctx)) * sov.normalization_c(nu, ctx)

    for lam in (Pair(-1, 2), Pair(0, 3)):
        F = f_image(lam)
        for kind, tag in (("pit", "pt"), ("rhot", "rt")):
            acc = Laurent2()
            for nu, c in sov.transition_row(kind, lam, ctx).entries.items():
                acc = acc + sov.basis(tag, nu, ctx) * c
            assert acc == F
        for kind, tag in (("Qt", "pt"), ("Rt", "rt")):
            acc = Laurent2()
            for nu, c in sov.transition_row(kind, lam, ctx).entries.items():
                acc = acc + f_image(nu) * c
            assert acc == sov.basis(tag, lam, ctx)


def test_tilded_scalings():
    lam = Pair(-1, 2)
    pi_row = sov.transition_row("pi", lam, CTX).entries
    pit_row = sov.transition_row("pit", lam, CTX).entries
    for nu, value in pit_row.items():
        assert value == pi_row[nu] * sov.mu_p(nu, CTX)
    Q_row = sov.transition_row("Q", lam, CTX).entries
    Qt_row = sov.transition_row("Qt", lam, CTX).entries
    for nu, value in Qt_row.items():
        assert value == Q_row[nu] / sov.mu_p(lam, CTX)


@pytest.mark.parametrize("ctx", [CTX, CTX2])
def test_mutual_inverse_identities(ctx):
    lam = Pair(-1, 3)
    under = pairs_under(lam)
    rows = {
        kind: {l: sov.transition_row(kind, l, ctx).entries for l in under}
        for kind in ("rho", "pi", "Q", "R")
    }
    zero = frac(0)
    for first, second in (("R", "rho"), ("rho", "R"), ("Q", "pi"), ("pi", "Q")):
        for mu in under:
            total = zero
            for nu in under:
                if lam.contains(nu) and nu.contains(mu):
                    total += rows[first][lam].get(nu, zero) * rows[second][nu].get(
                        mu, zero
                    )
            assert total == (frac(1) if mu == lam else zero)
