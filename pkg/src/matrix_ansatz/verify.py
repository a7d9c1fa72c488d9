"""Named verification suites.

Each suite yields ``(check_id, thunk)`` pairs; the thunk returns the two sides
of an identity.  A check passes when both sides are equal.  Reports are
sorted by check id so output is deterministic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Iterator

from . import ansatz, calibration, combstats, models, moments, tableaux
from .algebra import Poly, RatFun, genocchi_numbers, q_factorial, var


class UnknownSuite(KeyError):
    pass


@dataclass
class CheckResult:
    id: str
    status: str
    lhs: str
    rhs: str
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        d = {"id": self.id, "status": self.status, "lhs": self.lhs, "rhs": self.rhs}
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class SuiteReport:
    suite: str
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json(timings) for c in sorted(self.checks, key=lambda c: c.id)],
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True)


Thunk = Callable[[], tuple]
SuiteFn = Callable[[int], Iterator[tuple[str, Thunk]]]


def _s(v) -> str:
    return str(v)


def run_checks(name: str, n_max: int, items: Iterator[tuple[str, Thunk]]) -> SuiteReport:
    report = SuiteReport(name, n_max)
    seen = set()
    for cid, thunk in items:
        if cid in seen:
            raise ValueError(f"duplicate check id {cid}")
        seen.add(cid)
        t0 = time.perf_counter()
        try:
            lhs, rhs = thunk()
            status = "pass" if lhs == rhs else "fail"
            ls, rs = _s(lhs), _s(rhs)
        except Exception as exc:  # a crashing check is a failing check
            status, ls, rs = "fail", f"error: {type(exc).__name__}: {exc}", ""
        report.checks.append(CheckResult(cid, status, ls, rs, time.perf_counter() - t0))
    return report


def _bool(ok: bool, detail: str = "") -> tuple:
    return ("pass" if ok else f"fail {detail}".strip()), "pass"


# ---------------------------------------------------------------------------
# suites


def suite_pasep_triangle(n_max: int):
    """Rewriting = matrices = tableaux for every PASEP word, plus the tableau recursions."""
    q = var("q")
    for n in range(n_max + 1):
        words = ansatz.all_words(n)

        def three_way(words=words):
            bad = []
            for w in words:
                x = ansatz.bracket(w, "pasep")
                if not (x == models.bracket(w, "pasep_tableaux") == models.bracket(w, "pasep_motzkin")
                        == tableaux.enum_permutation_tableaux(w)):
                    bad.append(str(w))
            return _bool(not bad, ",".join(bad[:3]))

        yield f"three-way/n={n:02d}", three_way

    for n in range(2, n_max + 1):
        def recursion(n=n):
            bad = []
            for w in ansatz.all_words(n):
                s = str(w)
                for i in range(n - 1):
                    if s[i:i + 2] != "DE":
                        continue
                    X, Y = s[:i], s[i + 2:]
                    lhs = tableaux.enum_permutation_tableaux(s)
                    rhs = (q * tableaux.enum_permutation_tableaux(X + "ED" + Y)
                           + tableaux.enum_permutation_tableaux(X + "D" + Y)
                           + tableaux.enum_permutation_tableaux(X + "E" + Y))
                    if lhs != rhs:
                        bad.append(s)
            return _bool(not bad, ",".join(bad[:3]))

        yield f"tableau-recursion/n={n:02d}", recursion

    for n in range(n_max):
        def boundary(n=n):
            a, b = var("a"), var("b")
            bad = []
            for w in ansatz.all_words(n):
                s = str(w)
                t = tableaux.enum_permutation_tableaux(s)
                if tableaux.enum_permutation_tableaux("E" + s) != a * t:
                    bad.append("E" + s)
                if tableaux.enum_permutation_tableaux(s + "D") != b * t:
                    bad.append(s + "D")
            return _bool(not bad, ",".join(bad[:3]))

        yield f"tableau-boundary/n={n:02d}", boundary


def suite_counting(n_max: int):
    for n in range(n_max + 1):
        yield (f"permutation-tableaux-total/n={n:02d}",
               lambda n=n: (tableaux.enum_permutation_tableaux_length(n).evaluate({"q": 1, "a": 1, "b": 1}),
                            factorial(n + 1)))
    for n in range(min(n_max, 4) + 1):
        yield (f"typeB-total/n={n:02d}",
               lambda n=n: (tableaux.enum_typeB_tableaux(n).evaluate({"q": 1, "r": 1}), 2 ** n * factorial(n)))
        yield (f"zero-crossing-signed/n={n:02d}",
               lambda n=n: (sum(1 for p in combstats.all_signed_permutations(n) if combstats.crossings_B(p) == 0),
                            comb(2 * n, n)))


def suite_moments(n_max: int):
    for name, fam in sorted(moments.FAMILIES.items()):
        t = fam.tridiag
        yield (f"{name}/matrix=functional",
               lambda t=t: (moments.moments_matrix(t, n_max), moments.moments_functional(t, n_max)))
        yield (f"{name}/matrix=motzkin",
               lambda t=t: (moments.moments_matrix(t, n_max), moments.moments_motzkin(t, n_max)))
    a = var("a")
    for name in ("big_q_hermite", "q_charlier_ksz", "typeB_signed"):
        t = moments.FAMILIES[name].tridiag
        yield (f"{name}/split-invariance",
               lambda t=t: (moments.moments_matrix(t.with_split(lambda i: RatFun(i + 1 + a)), n_max),
                            moments.moments_matrix(t, n_max)))
        yield (f"{name}/shift-consistency",
               lambda t=t: (moments.shift_moments(moments.moments_matrix(t, n_max), 2, a),
                            moments.moments_matrix(moments.shift_tridiag(t, 2, a), n_max)))


def suite_orthogonal(n_max: int):
    """Rook placements, involutions, 0-1 tableaux and set partitions versus moments."""
    herm = moments.family_moments("big_q_hermite", n_max)
    msw = moments.family_moments("q_charlier_msw", n_max)
    ksz = moments.family_moments("q_charlier_ksz", n_max)
    a = var("a")
    for n in range(n_max + 1):
        yield f"hermite/rooks/n={n:02d}", lambda n=n: (tableaux.rook_young_length(n), herm[n])
        yield (f"hermite/involutions/n={n:02d}",
               lambda n=n: (sum((combstats.involution_weight(v) for v in combstats.all_involutions(n)), Poly()),
                            herm[n]))
        yield (f"hermite/ansatz/n={n:02d}", lambda n=n: (ansatz.sum_bracket(n, "hermite"), herm[n]))
        yield f"msw/stirling/n={n:02d}", lambda n=n: (moments.msw_moment(n), msw[n])
        yield (f"msw/01-tableaux/n={n:02d}",
               lambda n=n: (sum((a ** k * tableaux.enum_01_tableaux(k, n - k) for k in range(1, n + 1)), Poly())
                            if n else Poly.const(1), msw[n]))
        yield (f"msw/ansatz/n={n:02d}",
               lambda n=n: (ansatz.sum_bracket(n, "charlier_msw", {"D": a}), msw[n]))
        yield (f"ksz/set-partitions/n={n:02d}",
               lambda n=n: (sum((combstats.setpartition_weight(p) for p in combstats.all_set_partitions(n)), Poly()),
                            ksz[n]))
        yield f"ksz/staircase-rooks/n={n:02d}", lambda n=n: (tableaux.enum_rook_staircase(n), ksz[n])
        yield (f"ksz/ansatz/n={n:02d}",
               lambda n=n: (ansatz.bracket_of_product([{"E": 1, "": 1}, {"D": 1, "": a}] * n,
                                                      ansatz.get_spec("hermite_ksz")), ksz[n]))
    yield ("golden/involution",
           lambda: (combstats.involution_weight(
               combstats.Involution(12, ((1, 6), (2, 5), (4, 11), (7, 8), (10, 12)))), Poly.parse("q^6*a^2")))
    yield ("golden/set-partition",
           lambda: (combstats.setpartition_weight(combstats.SetPartition.of((1, 5, 7), (2, 6), (3, 4))),
                    Poly.parse("q^2*a^3")))


def suite_permutations(n_max: int):
    q, r = var("q"), var("r")
    for n in range(n_max + 1):
        perms = list(combstats.all_permutations(n))
        yield f"inversions/ansatz/n={n:02d}", lambda n=n: (ansatz.bracket("D" * n, "inversion"), q_factorial(n))
        yield (f"inversions/brute-force/n={n:02d}",
               lambda perms=perms, n=n: (sum((q ** combstats.inversions(p) for p in perms), Poly()), q_factorial(n)))
        yield (f"inversions/tableaux/n={n:02d}",
               lambda n=n: (tableaux.enum_inversion_tableaux(n), q_factorial(n)))
        yield f"inversions/bijection/n={n:02d}", lambda n=n, perms=perms: _bool(_bijection_ok(n, perms))
        yield (f"crossings/n={n:02d}",
               lambda perms=perms, n=n: (ansatz.sum_bracket(n, "crossing"),
                                         sum((q ** combstats.crossings_A(p) for p in perms), Poly())))
    for n in range(min(n_max, 4) + 1):
        yield (f"typeB/brute-force/n={n:02d}",
               lambda n=n: (ansatz.sum_bracket(n, "typeB"),
                            sum((q ** combstats.crossings_B(p) * r ** combstats.negatives(p)
                                 for p in combstats.all_signed_permutations(n)), Poly())))
        yield (f"typeB/tableaux/n={n:02d}",
               lambda n=n: (tableaux.enum_typeB_tableaux(n), ansatz.sum_bracket(n, "typeB")))
    yield ("golden/inversion-table-1",
           lambda: (combstats.from_inversion_table((2, 2, 0, 1, 0)), combstats.Permutation((3, 4, 1, 5, 2))))
    yield ("golden/inversion-table-2",
           lambda: (combstats.from_inversion_table((2, 2, 2, 0, 0)), combstats.Permutation((3, 4, 5, 1, 2))))
    for n in range(min(n_max, 5) + 1):
        yield f"dual-q-hahn-identity/n={n:02d}", lambda n=n: typeB_dual_qhahn_sides(n)


def _bijection_ok(n: int, perms) -> bool:
    for p in perms:
        t = tableaux.from_permutation(p)
        if tableaux.to_permutation(t) != p:
            return False
        if tableaux.inversion_tableau_weight(t) != var("q") ** combstats.inversions(p):
            return False
    images = {tableaux.to_permutation(t) for t in tableaux.inversion_tableaux(n)}
    return len(images) == len(perms)


def typeB_dual_qhahn_sides(n: int) -> tuple:
    """``P_n(x)(q-1)^n`` against ``R_n(x(q-1)/2 + 1; 1, -r, q | q)``."""
    q, r, x = var("q"), var("r"), var("x")
    P = moments.poly_sequence("typeB_signed", n)[n]
    lhs = P * RatFun((q - 1) ** n)
    R = moments.dual_qhahn_R_hat(n)[n]  # in z = 2 * argument
    R = R.substitute({"a": 1, "b": -r, "c": q})
    rhs = R.substitute({"x": x * (q - 1) + 2})
    return lhs, rhs


def suite_genocchi(n_max: int):
    G = genocchi_numbers(n_max + 1)
    offset = calibration.dual_hahn_offset()
    dh = moments.family_moments("dual_hahn", n_max)
    for n in range(1, n_max + 1):
        f = moments.dumont_foata(n)
        yield f"genocchi/n={n:02d}", lambda f=f, n=n: (f.evaluate({"a": 1, "b": 1, "c": 1}), G[n])
        yield (f"symmetry/n={n:02d}",
               lambda f=f: _bool(all(f.substitute(dict(zip("abc", (var(s) for s in perm)))) == f
                                     for perm in ("acb", "bac", "bca", "cab", "cba"))))
    for n in range(n_max + 1):
        yield f"dual-hahn-moment/n={n:02d}", lambda n=n: (dh[n], moments.dumont_foata(n + offset))
    alt = calibration.frozen("alternative")
    perm = calibration.frozen("permutation")
    pq = calibration.frozen("permutation_q")
    for n in range(1, min(n_max, 3) + 1):
        yield (f"staircase-alternative/n={n:02d}",
               lambda n=n: (tableaux.enum_alternative_tableaux(tableaux.Shape.staircase(n + alt["row_shift"])),
                            calibration.scaled_dumont_foata(n, n + alt["index_offset"])))
        yield (f"staircase-permutation/n={n:02d}",
               lambda n=n: (tableaux.enum_staircase_permutation_tableaux(n + perm["row_shift"]),
                            calibration.scaled_dumont_foata(n, n + perm["index_offset"])))
        yield (f"staircase-permutation-q/n={n:02d}",
               lambda n=n: (tableaux.enum_staircase_q_tableaux(n + pq["row_shift"]), calibration.h_at_one(n)))
    for n in range(min(n_max, 4) + 1):
        yield f"h/polynomial-symmetric/n={n:02d}", lambda n=n: _bool(_h_symmetric(n))
        yield (f"h/q=1/n={n:02d}",
               lambda n=n: (moments.h_poly(n).substitute({"q": 1}), moments.dumont_foata(n + offset)))
    yield ("h/has-negative-terms",
           lambda: _bool(any(c < 0 for n in range(min(n_max, 4) + 1) for c in moments.h_poly(n).terms.values())))


def _h_symmetric(n: int) -> bool:
    h = moments.h_poly(n)
    a, b, c = var("a"), var("b"), var("c")
    return all(h.substitute({"a": x, "b": y, "c": z}) == h
               for x, y, z in ((a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)))


def suite_relations(n_max: int):
    N = max(n_max, 3)
    for name in sorted(models.CATALOGUE):
        def rel(name=name):
            rep = models.check_relations(models.build(name, N))
            fails = [f"{c.name}: {c.detail}" for c in rep.failures()]
            return _bool(rep.passed, "; ".join(fails))

        yield f"relations/{name}/N={N}", rel

        def stable(name=name):
            m = models.get_model(name)
            letters = "".join(sorted(m.letters))
            bad = []
            for n in range(n_max + 1):
                for w in ansatz.all_words(n):
                    if set(w.letters) <= set(letters):
                        try:
                            models.stable_bracket(w, m)
                        except models.Unstable:
                            bad.append(str(w))
            return _bool(not bad, ",".join(bad[:3]))

        yield f"stable/{name}", stable
    for name, spec in sorted(models.SPEC_PAIRS.items()):
        def agree(name=name, spec=spec):
            bad = [str(w) for n in range(n_max + 1) for w in ansatz.all_words(n)
                   if models.bracket(w, name) != ansatz.bracket(w, spec)]
            return _bool(not bad, ",".join(bad[:3]))

        yield f"model=ansatz/{name}", agree


SUITES: dict[str, tuple[SuiteFn, int, str]] = {
    "pasep-triangle": (suite_pasep_triangle, 6, "rewriting, matrices and permutation tableaux agree"),
    "counting": (suite_counting, 6, "(n+1)!, 2^n n!, C(2n, n) totals"),
    "moments": (suite_moments, 8, "moment computations agree for every family"),
    "orthogonal": (suite_orthogonal, 6, "rook placements, involutions, 0-1 tableaux, set partitions"),
    "permutations": (suite_permutations, 6, "inversions, crossings, type B, dual q-Hahn identity"),
    "genocchi": (suite_genocchi, 6, "Dumont-Foata, Genocchi, staircase tableaux, h_n"),
    "relations": (suite_relations, 6, "model relations, stable truncations, model = rewriting"),
}


def run_suite(name: str, n_max: int | None = None) -> SuiteReport:
    if name == "all":
        reports = [run_suite(s, n_max) for s in sorted(SUITES)]
        merged = SuiteReport("all", n_max if n_max is not None else -1)
        for rep in reports:
            for c in rep.checks:
                merged.checks.append(CheckResult(f"{rep.suite}/{c.id}", c.status, c.lhs, c.rhs, c.elapsed))
        return merged
    try:
        fn, default, _ = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: all, {', '.join(sorted(SUITES))}") from None
    n = default if n_max is None else n_max
    return run_checks(name, n, fn(n))
