import pytest
from hypothesis import given, strategies as st

from matrix_ansatz import ansatz, calibration, moments as M
from matrix_ansatz.algebra import NotPolynomial, ONE, Poly, RatFun, genocchi_numbers, q_factorial, q_int, var
from matrix_ansatz.models import dual_qhahn_AC

q, a, b, c, r, x = (var(v) for v in "qabcrx")
CATALAN = [1, 1, 2, 5, 14]
FAMILY_NAMES = sorted(M.FAMILIES)


def test_ten_families():
    assert len(M.FAMILIES) == 10
    assert M.get_family("big-q-hermite") is M.FAMILIES["big_q_hermite"]
    with pytest.raises(M.UnknownFamily):
        M.get_family("nope")


def test_small_moments():
    t = M.TriDiag(lambda i: var("b") * (i + 1), lambda i: c * i)
    mu = M.moments_matrix(t, 2)
    assert mu[0] == RatFun(ONE)
    assert mu[1] == RatFun(var("b"))
    assert mu[2] == RatFun(var("b") ** 2 + c)


def test_catalan_and_parity():
    t = M.TriDiag(lambda i: 0, lambda i: 1)
    for mu in (M.moments_matrix(t, 8), M.moments_functional(t, 8)):
        assert [mu[2 * k] for k in range(5)] == [RatFun.coerce(v) for v in CATALAN]
        assert all(mu[k].is_zero() for k in range(1, 9, 2))
    herm = M.TriDiag(lambda i: 0, lambda i: q_int(i))
    assert all(v.is_zero() for v in M.moments_matrix(herm, 7)[1::2])


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_three_moment_methods(name):
    t = M.FAMILIES[name].tridiag
    mu = M.moments_matrix(t, 8)
    assert mu == M.moments_functional(t, 8)
    assert mu == M.moments_motzkin(t, 8)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_split_invariance(name):
    t = M.FAMILIES[name].tridiag
    assert M.moments_matrix(t.with_split(lambda i: RatFun(i + 1 + q)), 6) == M.moments_matrix(t, 6)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_shift_consistency(name):
    t = M.FAMILIES[name].tridiag
    mu = M.moments_matrix(t, 6)
    assert M.shift_moments(mu, 2, q) == M.moments_matrix(M.shift_tridiag(t, 2, q), 6)


def test_shift_identity_and_inverse():
    mu = M.family_moments("big_q_hermite", 7)
    assert M.shift_moments(mu, 1, 0) == mu
    s = M.shift_moments(mu, 3, a)
    assert M.shift_moments(s, RatFun(ONE, Poly.const(3)), RatFun(-a, Poly.const(3))) == mu
    with pytest.raises(M.ZeroScale):
        M.shift_moments(mu, 0, 1)


@given(st.integers(-3, 3).filter(bool), st.integers(-3, 3))
def test_shift_involution_numeric(s, t):
    mu = M.family_moments("q_charlier_ksz", 5)
    back = M.shift_moments(M.shift_moments(mu, s, t), RatFun.coerce(1) / s, RatFun.coerce(-t) / s)
    assert back == mu


def test_poly_sequence_start():
    for name in FAMILY_NAMES:
        fam = M.FAMILIES[name]
        seq = M.poly_sequence(fam, 1)
        assert seq[0] == RatFun(ONE)
        assert seq[1] == RatFun(x) - fam.tridiag.b_at(0)


def test_dumont_foata():
    assert M.dumont_foata(1) == ONE
    assert M.dumont_foata(2) == a * b + a * c + b * c
    g = genocchi_numbers(7)
    for n in range(1, 7):
        assert M.dumont_foata(n).evaluate({"a": 1, "b": 1, "c": 1}) == g[n]


def test_q_stirling():
    for n in range(6):
        assert M.q_stirling(n, n) == ONE
    assert M.q_stirling(3, 2) == 2 + q
    msw = M.family_moments("q_charlier_msw", 7)
    for n in range(8):
        assert RatFun(sum((a ** k * M.q_stirling(n, k) for k in range(n + 1)), Poly())) == msw[n]


def test_orthogonal_families_have_known_moments():
    lq = M.family_moments("little_q_jacobi_laguerre", 7)
    for n in range(8):
        assert lq[n] == RatFun(q_factorial(n))
    tb = M.family_moments("typeB_signed", 5)
    for n in range(6):
        assert tb[n] == RatFun(ansatz.sum_bracket(n, "typeB"))


def test_typeB_lambda_index():
    """[n]^2 (1 + r q^n)(1 + r q^(n-1)) is the working convention; the shifted index is not."""
    other = M.TriDiag(M.FAMILIES["typeB_signed"].tridiag.b,
                      lambda n: q_int(n) ** 2 * (1 + r * q ** n) * (1 + r * q ** (n + 1)))
    brute = [RatFun(ansatz.sum_bracket(n, "typeB")) for n in range(5)]
    assert M.family_moments("typeB_signed", 4) == brute
    assert M.moments_matrix(other, 4) != brute


def test_dual_qhahn_AC_sign():
    for n in range(6):
        A, C = dual_qhahn_AC(n, 1, -r, q)
        t = (1 - q) * (q_int(n) + q_int(n + 1)) * (1 + r * q ** n)
        assert A + C == RatFun(t)
        assert A + C != RatFun(-t)


def test_dual_qhahn_shift_gives_gn():
    base = M.moments_matrix(M.DUAL_QHAHN_Z, 4)
    shifted = M.moments_matrix(M.shift_tridiag(M.DUAL_QHAHN_Z, 1, -2), 4)
    assert [M.dual_qhahn_gn(n) for n in range(5)] == shifted == M.shift_moments(base, 1, -2)


def test_h_polynomials():
    assert M.h_poly(1) == q * a * b * c - a * b * c + a * b + a * c + b * c
    negative = False
    for n in range(5):
        h = M.h_poly(n)
        for perm in ((a, c, b), (b, a, c), (c, b, a)):
            assert h.substitute(dict(zip("abc", perm))) == h
        assert h.substitute({"q": 1}) == M.dumont_foata(n + 1)
        negative |= any(v < 0 for v in h.terms.values())
    assert negative


def test_dual_hahn_moments():
    off = calibration.dual_hahn_offset()
    mu = M.family_moments("dual_hahn", 6)
    for n in range(7):
        assert mu[n] == RatFun(M.dumont_foata(n + off))


def test_dual_hahn_literal_index_fails():
    mu = M.family_moments("dual_hahn", 1)
    assert mu[1] != RatFun(M.dumont_foata(1))


def test_calibration_matches_frozen():
    fresh = calibration.calibrate()
    frozen = calibration.load_calibration()
    assert fresh == frozen
    for key in ("alternative", "permutation", "permutation_q"):
        assert len(frozen[key]) == 1
