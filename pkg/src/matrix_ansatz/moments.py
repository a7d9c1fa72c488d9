"""Three-term recurrences, their moments, and the named polynomial families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .algebra import ONE, ZERO, NotPolynomial, Poly, RatFun, q_int, var
from . import models


class ZeroScale(ZeroDivisionError):
    pass


class UnknownFamily(KeyError):
    pass


Coeff = Callable[[int], object]


@dataclass(frozen=True)
class TriDiag:
    """``P_{k+1} = (x - b(k)) P_k - lam(k) P_{k-1}``.

    ``up`` optionally splits ``lam`` into ``m[i][i+1] = up(i)`` and
    ``m[i+1][i] = lam(i+1) / up(i)``; by default ``up = 1``.
    """

    b: Coeff
    lam: Coeff
    up: Coeff | None = None

    def b_at(self, i: int) -> RatFun:
        return RatFun.coerce(self.b(i))

    def lam_at(self, i: int) -> RatFun:
        return RatFun.coerce(self.lam(i))

    def entries(self, i: int, j: int) -> RatFun:
        """Matrix entry ``m[i][j]``."""
        if j == i:
            return self.b_at(i)
        if j == i + 1:
            return RatFun.coerce(self.up(i)) if self.up else RatFun.coerce(1)
        if j == i - 1:
            if self.up is None:
                return self.lam_at(i)
            return self.lam_at(i) / RatFun.coerce(self.up(j))
        return RatFun.coerce(0)

    def with_split(self, up: Coeff) -> "TriDiag":
        return TriDiag(self.b, self.lam, up)

    def substitute(self, bindings) -> "TriDiag":
        b, lam, up = self.b, self.lam, self.up
        return TriDiag(
            lambda i: RatFun.coerce(b(i)).substitute(bindings),
            lambda i: RatFun.coerce(lam(i)).substitute(bindings),
            None if up is None else (lambda i: RatFun.coerce(up(i)).substitute(bindings)),
        )


@dataclass(frozen=True)
class Family:
    name: str
    tridiag: TriDiag
    params: tuple[str, ...]
    description: str = ""


def moments_matrix(t: TriDiag, n: int) -> list[RatFun]:
    """``mu_k = <e_0| M^k |e_0>`` for k = 0..n."""
    size = n // 2 + 2
    rows = []
    for i in range(size):
        row = []
        for j in (i - 1, i, i + 1):
            if 0 <= j < size:
                v = t.entries(i, j)
                if not v.is_zero():
                    row.append((j, v))
        rows.append(row)
    vec = [RatFun.coerce(1)] + [RatFun.coerce(0)] * (size - 1)
    out = [vec[0]]
    for _ in range(n):
        nxt = [RatFun.coerce(0)] * size
        for i, x in enumerate(vec):
            if x.is_zero():
                continue
            for j, v in rows[i]:
                nxt[j] = nxt[j] + x * v
        vec = nxt
        out.append(vec[0])
    return out


def poly_sequence_from(t: TriDiag, n: int, x: Poly | None = None) -> list[RatFun]:
    """``P_0 .. P_n`` as polynomials in ``x``."""
    x = var("x") if x is None else x
    seq = [RatFun.coerce(1)]
    if n >= 1:
        seq.append(RatFun.coerce(x) - t.b_at(0))
    for k in range(1, n):
        seq.append((RatFun.coerce(x) - t.b_at(k)) * seq[k] - t.lam_at(k) * seq[k - 1])
    return seq


def x_coefficients(p: RatFun) -> list[RatFun]:
    """Coefficients of ``p`` as a polynomial in ``x``, lowest degree first."""
    parts = p.num.coefficients("x")
    if not parts:
        return [RatFun.coerce(0)]
    if any(k < 0 for k in parts) or "x" in p.den.used_vars():
        raise NotPolynomial(f"{p} is not a polynomial in x")
    top = max(parts)
    return [RatFun(parts[k], p.den) if k in parts else RatFun.coerce(0) for k in range(top + 1)]


def moments_functional(t: TriDiag, n: int) -> list[RatFun]:
    """Solve ``f(1) = 1`` and ``f(P_k) = 0`` (k = 1..n) for ``mu_1 .. mu_n``.

    ``P_k`` is monic of degree k, so row k of the system is triangular:
    ``mu_k = -sum_{j<k} [x^j]P_k * mu_j``.
    """
    seq = poly_sequence_from(t, n)
    mu = [RatFun.coerce(1)]
    for k in range(1, n + 1):
        coeffs = x_coefficients(seq[k])
        assert len(coeffs) == k + 1 and coeffs[k] == 1
        total = RatFun.coerce(0)
        for j in range(k):
            if not coeffs[j].is_zero():
                total = total + coeffs[j] * mu[j]
        mu.append(-total)
    return mu


def moments_motzkin(t: TriDiag, n: int) -> list[RatFun]:
    from .combstats import motzkin_sum

    return [motzkin_sum(k, t.b_at, t.lam_at) for k in range(n + 1)]


def shift_moments(mu: Sequence[RatFun], a, b) -> list[RatFun]:
    """Moments of ``a^{-n} P_n(a x + b)``: ``nu_n = a^{-n} sum C(n,k) mu_k (-b)^{n-k}``."""
    a = RatFun.coerce(a)
    b = RatFun.coerce(b)
    if a.is_zero():
        raise ZeroScale("shift scale a must be non-zero")
    out = []
    for n in range(len(mu)):
        total = RatFun.coerce(0)
        for k in range(n + 1):
            if not mu[k].is_zero():
                total = total + comb(n, k) * mu[k] * (-b) ** (n - k)
        out.append(total / a ** n)
    return out


def shift_tridiag(t: TriDiag, a, b) -> TriDiag:
    """Recurrence of ``a^{-n} P_n(a x + b)``, i.e. the matrix ``(M - b I) / a``."""
    a = RatFun.coerce(a)
    b = RatFun.coerce(b)
    if a.is_zero():
        raise ZeroScale("shift scale a must be non-zero")
    return TriDiag(lambda i: (t.b_at(i) - b) / a, lambda i: t.lam_at(i) / (a * a))


# ---------------------------------------------------------------------------
# named sequences


@lru_cache(maxsize=None)
def dumont_foata(n: int) -> Poly:
    """``f_1 = 1``, ``f_{n+1}(a,b,c) = (a+b)(a+c) f_n(a+1,b,c) - a^2 f_n(a,b,c)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return ONE
    a, b, c = var("a"), var("b"), var("c")
    prev = dumont_foata(n - 1)
    return (a + b) * (a + c) * prev.substitute({"a": a + 1}) - a ** 2 * prev


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> Poly:
    """``S_q(n,k) = S_q(n-1,k-1) + [k]_q S_q(n-1,k)``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return ZERO
    if n == 0:
        return ONE
    if k == 0:
        return ZERO
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


def msw_moment(n: int) -> Poly:
    a = var("a")
    return sum((a ** k * q_stirling(n, k) for k in range(n + 1)), ZERO)


# ---------------------------------------------------------------------------
# family catalogue

q, a, b, c, r, y = (var(v) for v in "qabcry")


def _qi(n):
    return q_int(n)


def dual_hahn_AC(n: int):
    return (n + a + b) * (n + a + c), n * (n + b + c - 1)


def _dual_qhahn_b(i: int) -> RatFun:
    A, C = models.dual_qhahn_AC(i)
    return RatFun(a) + RatFun(ONE, a) - A - C


def _dual_qhahn_lam(i: int) -> RatFun:
    return models.dual_qhahn_AC(i - 1)[0] * models.dual_qhahn_AC(i)[1]


def _pasep_D_E():
    return models.pasep_motzkin_entries()


def _asep_b(i):
    D, E = _pasep_D_E()
    return RatFun.coerce(D(i, i)) + RatFun.coerce(E(i, i))


def _asep_lam(i):
    D, E = _pasep_D_E()
    return RatFun.coerce(D(i - 1, i)) * RatFun.coerce(E(i, i - 1))


def _de_entry(i, j):
    D, E = _pasep_D_E()
    return sum((RatFun.coerce(D(i, k)) * RatFun.coerce(E(k, j)) for k in (i, i + 1) if k >= 0), RatFun.coerce(0))


def _build_families() -> dict[str, Family]:
    fams = [
        Family("big_q_hermite", TriDiag(lambda n: a * q ** n, lambda n: _qi(n)), ("a", "q"),
               "x H_n = H_{n+1} + a q^n H_n + [n] H_{n-1}"),
        Family("q_charlier_msw", TriDiag(lambda n: a * q ** n + _qi(n), lambda n: a * _qi(n) * q ** (n - 1)),
               ("a", "q"), "b_n = a q^n + [n], lam_n = a [n] q^{n-1}"),
        Family("q_charlier_ksz", TriDiag(lambda n: a + _qi(n), lambda n: a * _qi(n)), ("a", "q"),
               "b_n = a + [n], lam_n = a [n]"),
        Family("little_q_jacobi_laguerre",
               TriDiag(lambda n: q ** n * (_qi(n) + _qi(n + 1)), lambda n: q ** (2 * n - 1) * _qi(n) ** 2),
               ("q",), "b_n = q^n([n] + [n+1]), lam_n = q^{2n-1} [n]^2"),
        Family("al_salam_chihara_q_laguerre",
               TriDiag(lambda n: y * _qi(n + 1) + _qi(n), lambda n: y * _qi(n) ** 2), ("q", "y"),
               "b_n = y[n+1] + [n], lam_n = y [n]^2"),
        Family("typeB_signed",
               TriDiag(lambda n: (1 + r * q ** n) * (_qi(n) + _qi(n + 1)),
                       lambda n: _qi(n) ** 2 * (1 + r * q ** n) * (1 + r * q ** (n - 1))),
               ("q", "r"), "b_n = (1 + r q^n)([n] + [n+1]), lam_n = [n]^2 (1 + r q^n)(1 + r q^{n-1})"),
        Family("dual_q_hahn",
               TriDiag(lambda n: _dual_qhahn_b(n) + 2, _dual_qhahn_lam), ("a", "b", "c", "q"),
               "R_n(x/2 - 1; a, b, c | q), monic: b_n = a + 1/a + 2 - A_n - C_n, lam_n = A_{n-1} C_n"),
        Family("dual_hahn",
               TriDiag(lambda n: sum(dual_hahn_AC(n)) - a ** 2,
                       lambda n: dual_hahn_AC(n - 1)[0] * dual_hahn_AC(n)[1]),
               ("a", "b", "c"), "b_n = A_n + C_n - a^2, lam_n = A_{n-1} C_n"),
        Family("asep_al_salam_chihara", TriDiag(_asep_b, _asep_lam), ("a", "b", "q"),
               "D + E of the tridiagonal PASEP solution (a = 1/alpha, b = 1/beta)"),
        Family("pasep_staircase",
               TriDiag(lambda n: _de_entry(n, n), lambda n: _de_entry(n - 1, n) * _de_entry(n, n - 1)),
               ("a", "b", "q"), "D E of the tridiagonal PASEP solution"),
    ]
    return {f.name: f for f in fams}


FAMILIES = _build_families()


def get_family(name: str) -> Family:
    key = name.replace("-", "_")
    try:
        return FAMILIES[key]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None


def family_moments(name: str, n: int) -> list[RatFun]:
    return moments_matrix(get_family(name).tridiag, n)


def poly_sequence(f: Family | str, n: int) -> list[RatFun]:
    fam = get_family(f) if isinstance(f, str) else f
    return poly_sequence_from(fam.tridiag, n)


# ---------------------------------------------------------------------------
# dual q-Hahn moments and the symmetrized polynomials h_n

DUAL_QHAHN_Z = TriDiag(_dual_qhahn_b, _dual_qhahn_lam)  # R_n(z/2), monic in z


@lru_cache(maxsize=None)
def _gn_table(n: int) -> tuple[RatFun, ...]:
    base = moments_matrix(DUAL_QHAHN_Z, n)
    # R_n(x/2 - 1) in z = x - 2, i.e. the matrix M + 2I
    return tuple(shift_moments(base, 1, -2))


def dual_qhahn_gn(n: int) -> RatFun:
    """n-th moment of ``R_n(x/2 - 1; a, b, c | q)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _gn_table(n)[n]


def tilde(v: str) -> Poly:
    return (1 - var("q")) * var(v) - 1


@lru_cache(maxsize=None)
def h_poly(n: int) -> Poly:
    """``g_n(at, bt, ct, q) (1-q)^{-2n}`` with ``vt = (1-q)v - 1``; must be a polynomial."""
    g = dual_qhahn_gn(n)
    sub = g.substitute({"a": tilde("a"), "b": tilde("b"), "c": tilde("c")})
    val = sub / RatFun((1 - var("q")) ** (2 * n))
    if not val.is_poly():
        raise NotPolynomial(f"h_{n} did not reduce to a polynomial: {val}")
    return val.num


def dual_qhahn_R_hat(n: int) -> list[RatFun]:
    """``R_k(z/2; a, b, c | q)`` for k = 0..n as polynomials in ``x`` (standing for z)."""
    return poly_sequence_from(DUAL_QHAHN_Z, n)
