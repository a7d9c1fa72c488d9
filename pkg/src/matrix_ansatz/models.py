"""Explicit matrix solutions, truncated to finite size.

Every catalogue model uses ``<W| = e_0`` and row-vector evaluation: a word
``X_1 ... X_n`` is applied as ``W X_1 X_2 ... X_n V``.  A letter whose matrix
has ``X[i][j] != 0`` only for ``j <= i + 1`` raises the reachable index by at
most one, so an ``N = len(word) + 1`` truncation gives the exact value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Mapping, Sequence

from . import ansatz
from .algebra import ONE, ZERO, Poly, RatFun, q_int, var
from .ansatz import AnsatzSpec, Word


class UnknownModel(KeyError):
    pass


class TruncationTooSmall(ValueError):
    pass


class Unstable(ArithmeticError):
    pass


Entry = Callable[[int, int], object]

R0 = RatFun(ZERO)
R1 = RatFun(ONE)


def _unit(i: int) -> RatFun:
    return R1 if i == 0 else R0


@dataclass(frozen=True, eq=False)
class MatrixModel:
    name: str
    letters: Mapping[str, Entry]
    left: Callable[[int], object] = _unit
    right: Callable[[int], object] = _unit
    band: Mapping[str, int] = field(default_factory=dict)
    alias: Mapping[str, str] = field(default_factory=dict)
    spec: str | None = None
    extra_relations: Sequence[Callable[["TruncatedModel"], list]] = ()
    description: str = ""

    def up_step(self, letter: str) -> int:
        return self.band.get(letter, 1)

    def parse(self, text: str) -> Word:
        w = Word.parse(text, self.alias)
        missing = set(w.letters) - set(self.letters)
        if missing:
            raise ansatz.WordError(f"model {self.name} has no letter(s) {sorted(missing)}")
        return w

    def required_size(self, word: Word) -> int:
        return 1 + sum(self.up_step(ch) for ch in word.letters)

    def display(self, letter: str) -> str:
        return self.alias.get(letter, letter)


class TruncatedModel:
    """Materialized ``N x N`` matrices plus ``W`` and ``V`` of length ``N``."""

    def __init__(self, model: MatrixModel, N: int):
        if N < 1:
            raise ValueError("truncation size must be at least 1")
        self.model = model
        self.N = N
        self.rows: dict[str, list[list[tuple[int, RatFun]]]] = {}
        for letter, f in model.letters.items():
            rows = []
            for i in range(N):
                row = []
                for j in range(N):
                    v = RatFun.coerce(f(i, j))
                    if not v.is_zero():
                        row.append((j, v))
                rows.append(row)
            self.rows[letter] = rows
        self.W = [RatFun.coerce(model.left(i)) for i in range(N)]
        self.V = [RatFun.coerce(model.right(i)) for i in range(N)]

    @property
    def name(self) -> str:
        return self.model.name

    def entry(self, letter: str, i: int, j: int) -> RatFun:
        for k, v in self.rows[letter][i]:
            if k == j:
                return v
        return R0

    def matrix(self, letter: str) -> list[list[RatFun]]:
        out = [[R0] * self.N for _ in range(self.N)]
        for i, row in enumerate(self.rows[letter]):
            for j, v in row:
                out[i][j] = v
        return out

    def apply_row(self, vec: list, letter: str) -> list:
        out = [R0] * self.N
        for i, x in enumerate(vec):
            if x.is_zero():
                continue
            for j, v in self.rows[letter][i]:
                out[j] = out[j] + x * v
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "N": self.N,
            "matrices": {
                self.model.display(letter): [[str(v) for v in row] for row in self.matrix(letter)]
                for letter in sorted(self.rows)
            },
            "W": [str(v) for v in self.W],
            "V": [str(v) for v in self.V],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


_BUILD_CACHE: dict[tuple[str, int], TruncatedModel] = {}


def build(name: str | MatrixModel, N: int) -> TruncatedModel:
    model = get_model(name) if isinstance(name, str) else name
    key = (model.name, N)
    cached = _BUILD_CACHE.get(key)
    if cached is not None and cached.model is model:
        return cached
    tm = TruncatedModel(model, N)
    if model.name in CATALOGUE and CATALOGUE[model.name] is model:
        _BUILD_CACHE[key] = tm
    return tm


def _as_word(x, model: MatrixModel) -> Word:
    return model.parse(x) if isinstance(x, str) else x


def truncated_bracket(x: Word | str, model: TruncatedModel) -> RatFun:
    """``<W| x |V>`` on the truncation; raises if ``N`` is below the band bound."""
    w = _as_word(x, model.model)
    need = model.model.required_size(w)
    if model.N < need:
        raise TruncationTooSmall(f"{model.name}: word of length {len(w)} needs N >= {need}, got {model.N}")
    vec = list(model.W)
    for letter in w.letters:
        vec = model.apply_row(vec, letter)
    total = R0
    for x_i, v_i in zip(vec, model.V):
        if not x_i.is_zero() and not v_i.is_zero():
            total = total + x_i * v_i
    return total


def bracket(x: Word | str, model: MatrixModel | str) -> RatFun:
    """``<W| x |V>`` using the smallest safe truncation."""
    m = get_model(model) if isinstance(model, str) else model
    w = _as_word(x, m)
    return truncated_bracket(w, build(m, m.required_size(w)))


def stable_bracket(x: Word | str, model: MatrixModel | str) -> RatFun:
    """Evaluate at ``N = len + 1`` and ``N = len + 2``; raise Unstable if they differ."""
    m = get_model(model) if isinstance(model, str) else model
    w = _as_word(x, m)
    n = len(w) + 1
    first = truncated_bracket(w, build(m, max(n, m.required_size(w))))
    second = truncated_bracket(w, build(m, max(n, m.required_size(w)) + 1))
    if first != second:
        raise Unstable(f"{m.name}: {w} gives {first} at N={n} but {second} at N={n + 1}")
    return first


def power_bracket(tm: TruncatedModel, factor: Mapping[str, object], n: int) -> RatFun:
    """``<W| (sum c_L L)^n |V>`` for a linear combination of letters; '' is the identity."""
    if tm.N < n + 1:
        raise TruncationTooSmall(f"{tm.name}: power {n} needs N >= {n + 1}, got {tm.N}")
    coeffs = {k: RatFun.coerce(v) for k, v in factor.items()}
    vec = list(tm.W)
    for _ in range(n):
        nxt = [R0] * tm.N
        for letter, c in coeffs.items():
            part = vec if letter == "" else tm.apply_row(vec, letter)
            nxt = [u + c * v if not v.is_zero() else u for u, v in zip(nxt, part)]
        vec = nxt
    total = R0
    for x_i, v_i in zip(vec, tm.V):
        total = total + x_i * v_i
    return total


# ---------------------------------------------------------------------------
# relation checks


@dataclass
class RelationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RelationReport:
    model: str
    N: int
    checks: list[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]


def mat_mul(A: list[list[RatFun]], B: list[list[RatFun]]) -> list[list[RatFun]]:
    n = len(A)
    out = [[R0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if a.is_zero():
                continue
            for j in range(n):
                b = B[k][j]
                if not b.is_zero():
                    out[i][j] = out[i][j] + a * b
    return out


def mat_lin(*pairs) -> list[list[RatFun]]:
    """Linear combination ``sum c * M`` of square matrices."""
    n = len(pairs[0][1])
    out = [[R0] * n for _ in range(n)]
    for c, M in pairs:
        c = RatFun.coerce(c)
        for i in range(n):
            for j in range(n):
                if not M[i][j].is_zero():
                    out[i][j] = out[i][j] + c * M[i][j]
    return out


def identity(n: int) -> list[list[RatFun]]:
    return [[R1 if i == j else R0 for j in range(n)] for i in range(n)]


def transpose(M: list[list[RatFun]]) -> list[list[RatFun]]:
    return [list(col) for col in zip(*M)]


def block_mismatches(A, B, size: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(size) for j in range(size) if A[i][j] != B[i][j]]


def _describe(bad, limit: int = 3) -> str:
    return "ok" if not bad else f"{len(bad)} mismatching entries, first {bad[:limit]}"


def spec_relations(tm: TruncatedModel, spec: AnsatzSpec) -> list[RelationCheck]:
    """Commutation rule on the ``(N-1)`` block plus both boundary rules."""
    n = tm.N
    k = n - 1
    D, E = tm.matrix("D"), tm.matrix("E")
    r = spec.rule
    lhs = mat_mul(D, E)
    rhs = mat_lin((r.qc, mat_mul(E, D)), (r.s, D), (r.t, E), (r.u, identity(n)))
    d, e = tm.model.display("D"), tm.model.display("E")
    checks = [RelationCheck(f"commutation {d}{e}", not block_mismatches(lhs, rhs, k),
                            _describe(block_mismatches(lhs, rhs, k)))]

    WE = [sum((tm.W[i] * E[i][j] for i in range(n)), R0) for j in range(n)]
    kind, val = spec.boundary.left
    target = [R0] * n if kind == "zero" else [RatFun.coerce(val) * w for w in tm.W]
    bad = [j for j in range(k) if WE[j] != target[j]]
    checks.append(RelationCheck(f"left <W|{e}", not bad, _describe(bad)))

    DV = [sum((D[i][j] * tm.V[j] for j in range(n)), R0) for i in range(n)]
    kind, val = spec.boundary.right
    if kind == "zero":
        target = [R0] * n
    elif kind == "scale":
        target = [RatFun.coerce(val) * v for v in tm.V]
    else:
        EV = [sum((E[i][j] * tm.V[j] for j in range(n)), R0) for i in range(n)]
        target = [RatFun.coerce(val) * v for v in EV]
    bad = [i for i in range(k) if DV[i] != target[i]]
    checks.append(RelationCheck(f"right {d}|V>", not bad, _describe(bad)))

    norm = sum((w * v for w, v in zip(tm.W, tm.V)), R0)
    checks.append(RelationCheck("normalization <W|V>", norm == R1, str(norm)))
    return checks


def check_relations(tm: TruncatedModel) -> RelationReport:
    if tm.N < 3:
        raise ValueError("relation checks need N >= 3")
    checks: list[RelationCheck] = []
    if tm.model.spec is not None:
        checks.extend(spec_relations(tm, ansatz.get_spec(tm.model.spec)))
    for rel in tm.model.extra_relations:
        checks.extend(rel(tm))
    return RelationReport(tm.name, tm.N, checks)


# ---------------------------------------------------------------------------
# entry formulas

q, a, b, c, r = (var(v) for v in "qabcr")


def _qint(n: int) -> Poly:
    return q_int(n)


def _pasep_tableaux_E(i: int, j: int):
    if j > i:
        return ZERO
    inner = a * q ** j * comb(i, j) + sum((comb(i - j + k, k) * q ** k for k in range(j)), ZERO)
    return b ** (j - i) * inner


def pasep_motzkin_entries(sign: int = 1):
    """The tridiagonal PASEP solution with ``at = (1-q)a - 1``, ``bt = (1-q)b - 1``.

    ``sign`` is the sign in front of ``at q^i`` and ``bt q^i`` on the diagonals.
    """
    one_q = 1 - q
    at = one_q * a - 1
    bt = one_q * b - 1

    def D(i, j):
        if j == i:
            return RatFun(1 + sign * bt * q ** i, one_q)
        if j == i + 1:
            return RatFun(1 - at * bt * q ** i, one_q)
        return ZERO

    def E(i, j):
        if j == i:
            return RatFun(1 + sign * at * q ** i, one_q)
        if j == i - 1:
            return RatFun(1 - q ** i, one_q)
        return ZERO

    return D, E


def _dual_hahn_AC(n: int):
    A = (n + a + b) * (n + a + c)
    C = n * (n + b + c - 1)
    return A, C


def dual_qhahn_AC(n: int, a_=None, b_=None, c_=None):
    """``A_n = (1/a)(1-abq^n)(1-acq^n)`` and ``C_n = a(1-q^n)(1-bcq^{n-1})`` as RatFun."""
    a_ = a if a_ is None else a_
    b_ = b if b_ is None else b_
    c_ = c if c_ is None else c_
    A = RatFun((1 - a_ * b_ * q ** n) * (1 - a_ * c_ * q ** n), a_)
    C = RatFun(a_ * (1 - q ** n) * (1 - b_ * c_ * q ** (n - 1)) if n else ZERO)
    return A, C


def _tridiag(diag, up, down):
    """Entry function with ``M[i][i] = diag(i)``, ``M[i][i+1] = up(i)``, ``M[i+1][i] = down(i)``."""

    def M(i, j):
        if j == i:
            return diag(i)
        if j == i + 1:
            return up(i)
        if j == i - 1:
            return down(j)
        return ZERO

    return M


def _hermite_F(i, j):
    return _qint(i + 1) if j == i + 1 else ZERO


def _hermite_U(i, j, with_diag: bool = True):
    if j == i - 1:
        return ONE
    if with_diag and j == i:
        return a * q ** i
    return ZERO


# ---------------------------------------------------------------------------
# model-specific relations


def _ksz_product(tm: TruncatedModel) -> list[RelationCheck]:
    n = tm.N
    F = [[RatFun.coerce(_hermite_F(i, j)) for j in range(n)] for i in range(n)]
    U = [[RatFun.coerce(_hermite_U(i, j, with_diag=False)) for j in range(n)] for i in range(n)]
    I = identity(n)
    prod = mat_mul(mat_lin((1, U), (1, I)), mat_lin((1, F), (a, I)))
    bad = block_mismatches(tm.matrix("D"), prod, n - 1)
    fu = mat_lin((1, mat_mul(F, U)), (-q, mat_mul(U, F)))
    bad_fu = block_mismatches(fu, I, n - 1)
    return [
        RelationCheck("M = (U+I)(F+aI)", not bad, _describe(bad)),
        RelationCheck("commutation FU - qUF = I", not bad_fu, _describe(bad_fu)),
    ]


def pasep_q1_matrices(n: int):
    """``D`` and ``E`` of the tridiagonal PASEP solution at ``q = 1`` (``a = 1/alpha``, ``b = 1/beta``)."""
    D, E = pasep_motzkin_entries()
    Dm = [[RatFun.coerce(D(i, j)).substitute({"q": 1}) for j in range(n)] for i in range(n)]
    Em = [[RatFun.coerce(E(i, j)).substitute({"q": 1}) for j in range(n)] for i in range(n)]
    return Dm, Em


def dual_hahn_from_pasep(n: int):
    """``DE + (c-1)(D+E)`` from the ``q = 1`` PASEP matrices."""
    Dm, Em = pasep_q1_matrices(n)
    return mat_lin((1, mat_mul(Dm, Em)), (c - 1, Dm), (c - 1, Em))


def swap_ab(M):
    return [[v.substitute({"a": b, "b": a}) for v in row] for row in M]


def _dual_hahn_limit(tm: TruncatedModel) -> list[RelationCheck]:
    n = tm.N
    k = n - 1
    P = dual_hahn_from_pasep(n)
    M = tm.matrix("D")
    # a = 1/beta, b = 1/alpha: same diagonal, same products of the off-diagonal pairs
    Ms = swap_ab(M)
    bad_gauge = [(i, i) for i in range(k) if P[i][i] != Ms[i][i]]
    bad_gauge += [
        (i, i + 1) for i in range(k - 1) if P[i][i + 1] * P[i + 1][i] != Ms[i][i + 1] * Ms[i + 1][i]
    ]
    bad_gauge += [(i, j) for i in range(k) for j in range(k) if abs(i - j) > 1 and not P[i][j].is_zero()]
    # a = 1/alpha, b = 1/beta: entrywise equal to the transpose
    bad_t = block_mismatches(P, transpose(M), k)
    return [
        RelationCheck("q=1 limit DE+(c-1)(D+E) ~ M (diagonal and off-diagonal products)",
                      not bad_gauge, _describe(bad_gauge)),
        RelationCheck("q=1 limit DE+(c-1)(D+E) = transpose(M) entrywise", not bad_t, _describe(bad_t)),
    ]


def _dual_qhahn_pasep(tm: TruncatedModel) -> list[RelationCheck]:
    """At ``a = 1`` after ``x -> (1-q)x - 1``, ``M/(1-q)^2`` matches PASEP ``DE`` up to gauge."""
    n = tm.N
    k = n - 1
    one_q = 1 - q
    sub = {"a": one_q * 1 - 1, "b": one_q * b - 1, "c": one_q * c - 1}
    M = [[v.substitute(sub) / (one_q ** 2) for v in row] for row in tm.matrix("D")]
    D, E = pasep_motzkin_entries()
    Dm = [[RatFun.coerce(D(i, j)) for j in range(n)] for i in range(n)]
    Em = [[RatFun.coerce(E(i, j)) for j in range(n)] for i in range(n)]
    P = [[v.substitute({"a": b, "b": c}) for v in row] for row in mat_mul(Dm, Em)]
    bad = [(i, i) for i in range(k) if P[i][i] != M[i][i]]
    bad += [(i, i + 1) for i in range(k - 1) if P[i][i + 1] * P[i + 1][i] != M[i][i + 1] * M[i + 1][i]]
    return [RelationCheck("a=1 rescaled M ~ PASEP DE (diagonal and off-diagonal products)", not bad, _describe(bad))]


# ---------------------------------------------------------------------------
# catalogue


def _build_catalogue() -> dict[str, MatrixModel]:
    pm_D, pm_E = pasep_motzkin_entries()

    def qdiag_hahn(i):
        A, C = dual_qhahn_AC(i)
        return RatFun(a) + RatFun(ONE, a) + 2 - A - C

    models = [
        MatrixModel(
            "pasep_tableaux",
            {"D": lambda i, j: b if j == i + 1 else ZERO, "E": _pasep_tableaux_E},
            right=lambda i: ONE,
            spec="pasep",
            description="upper shift D = b, lower-triangular E; V is the all-ones vector",
        ),
        MatrixModel(
            "pasep_motzkin",
            {"D": pm_D, "E": pm_E},
            spec="pasep",
            description="tridiagonal PASEP solution with entries over (1-q)",
        ),
        MatrixModel(
            "hermite_FU",
            {"D": _hermite_F, "E": _hermite_U},
            alias={"D": "F", "E": "U"},
            spec="hermite",
            description="F[i][i+1] = [i+1], U[i+1][i] = 1, U[i][i] = a q^i",
        ),
        MatrixModel(
            "charlier_msw_XY",
            {
                "D": lambda i, j: q ** i if j in (i, i + 1) else ZERO,
                "E": lambda i, j: _qint(i) if j in (i, i - 1) else ZERO,
            },
            alias={"D": "X", "E": "Y"},
            spec="charlier_msw",
            description="X[i][i] = X[i][i+1] = q^i, Y[i][i] = Y[i][i-1] = [i]",
        ),
        MatrixModel(
            "charlier_ksz_M",
            {"D": _tridiag(lambda i: a + _qint(i), lambda i: _qint(i + 1), lambda i: a)},
            alias={"D": "M"},
            extra_relations=(_ksz_product,),
            description="M[i+1][i] = a, M[i][i] = a + [i], M[i][i+1] = [i+1]",
        ),
        MatrixModel(
            "inversion",
            {
                "D": _tridiag(
                    lambda i: q ** i * (_qint(i) + _qint(i + 1)),
                    lambda i: q ** (i + 1) * _qint(i + 1),
                    lambda i: q ** i * _qint(i + 1),
                ),
                "E": _tridiag(lambda i: _qint(i + 1), lambda i: ZERO, lambda i: _qint(i + 1)),
            },
            spec="inversion",
            description="inversion solution; D and E are lower-Hessenberg tridiagonal",
        ),
        MatrixModel(
            "crossing",
            {
                "D": lambda i, j: _qint(i + 1) if j in (i, i + 1) else ZERO,
                "E": lambda i, j: _qint(i) if j in (i, i - 1) else ZERO,
            },
            spec="crossing",
            description="D[i][i] = D[i][i+1] = [i+1], E[i][i] = E[i][i-1] = [i]",
        ),
        MatrixModel(
            "typeB",
            {
                "D": _tridiag(
                    lambda i: _qint(i) * (1 + r * q ** i) + r * q ** i * _qint(i + 1),
                    lambda i: _qint(i + 1) * (1 + r * q ** (i + 1)),
                    lambda i: r * q ** i * _qint(i + 1),
                ),
                "E": _tridiag(lambda i: _qint(i + 1), lambda i: ZERO, lambda i: _qint(i + 1)),
            },
            spec="typeB",
            description="type B solution",
        ),
        MatrixModel(
            "dual_hahn_M",
            {
                "D": _tridiag(
                    lambda i: sum(_dual_hahn_AC(i)) - a ** 2,
                    lambda i: _dual_hahn_AC(i + 1)[1],
                    lambda i: _dual_hahn_AC(i)[0],
                )
            },
            alias={"D": "M"},
            extra_relations=(_dual_hahn_limit,),
            description="M[i][i] = A_i + C_i - a^2, M[i+1][i] = A_i, M[i][i+1] = C_{i+1}",
        ),
        MatrixModel(
            "dual_qhahn_M",
            {
                "D": _tridiag(
                    qdiag_hahn,
                    lambda i: dual_qhahn_AC(i + 1)[1],
                    lambda i: dual_qhahn_AC(i)[0],
                )
            },
            alias={"D": "M"},
            extra_relations=(_dual_qhahn_pasep,),
            description="moment matrix of R_n(x/2 - 1; a, b, c | q)",
        ),
    ]
    return {m.name: m for m in models}


CATALOGUE = _build_catalogue()

# which ansatz spec each model solves
SPEC_PAIRS = {name: m.spec for name, m in CATALOGUE.items() if m.spec is not None}


def get_model(name: str) -> MatrixModel:
    try:
        return CATALOGUE[name]
    except KeyError:
        raise UnknownModel(f"unknown model {name!r}; known: {', '.join(sorted(CATALOGUE))}") from None


def transposed(model: MatrixModel, name: str | None = None) -> MatrixModel:
    """Same model with every letter matrix transposed (band profile widened to 2)."""
    letters = {k: (lambda f: (lambda i, j: f(j, i)))(f) for k, f in model.letters.items()}
    return MatrixModel(
        name or model.name + "_T", letters, model.left, model.right,
        band={k: 2 for k in letters}, alias=model.alias, spec=model.spec,
    )


def swapped(model: MatrixModel, name: str | None = None) -> MatrixModel:
    """Exchange the matrices attached to D and E."""
    letters = {"D": model.letters["E"], "E": model.letters["D"]}
    return MatrixModel(
        name or model.name + "_swap", letters, model.left, model.right,
        band={k: 2 for k in letters}, alias=model.alias, spec=model.spec,
    )
