"""Evaluate ``<W| X |V>`` by rewriting words in D and E.

A word is reduced to the normal form ``sum c_{k,l} E^k D^l`` with the
commutation rule ``DE = qc*ED + s*D + t*E + u*I`` (always rewriting the
leftmost ``DE``).  The boundary rules then strip D's on the right and E's on
the left until only ``<W|V> = 1`` remains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .algebra import ONE, ZERO, Poly, var

LETTERS = ("D", "E")


class UnknownSpec(KeyError):
    pass


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - set(LETTERS)
        if bad:
            raise WordError(f"word {self.letters!r} has letters outside D/E: {sorted(bad)}")

    @classmethod
    def parse(cls, text: str, alias: Mapping[str, str] | None = None) -> "Word":
        """Parse ``text``; ``alias`` maps display letters (F, U, X, Y...) to D/E."""
        text = text.strip()
        if text in ("", "1", "I"):
            return cls("")
        if alias:
            back = {v: k for k, v in alias.items()}
            text = "".join(back.get(ch, ch) for ch in text)
        return cls(text)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def count(self, letter: str) -> int:
        return self.letters.count(letter)


def all_words(n: int) -> list[Word]:
    return [Word("".join(w)) for w in product(LETTERS, repeat=n)]


def random_words(n_max: int, count: int, seed: int = 0, n_min: int = 0) -> list[Word]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(Word("".join(rng.choice(LETTERS) for _ in range(n))))
    return out


@dataclass(frozen=True)
class CommutationRule:
    """``DE = qc*ED + s*D + t*E + u*I``."""

    qc: Poly
    s: Poly = ZERO
    t: Poly = ZERO
    u: Poly = ZERO


@dataclass(frozen=True)
class BoundaryRules:
    """Left rule acts on ``<W|E``, right rule on ``D|V>``.

    left: ``("scale", w)`` for ``<W|E = w<W|`` or ``("zero", None)``.
    right: ``("scale", v)`` for ``D|V> = v|V>``, ``("zero", None)``, or
    ``("cross", r)`` for ``D|V> = r E|V>``.
    """

    left: tuple
    right: tuple

    def __post_init__(self):
        if self.left[0] not in ("scale", "zero"):
            raise ValueError(f"bad left rule {self.left}")
        if self.right[0] not in ("scale", "zero", "cross"):
            raise ValueError(f"bad right rule {self.right}")


@dataclass(frozen=True, eq=False)
class AnsatzSpec:
    name: str
    rule: CommutationRule
    boundary: BoundaryRules
    alias: dict = field(default_factory=dict)
    description: str = ""

    def __hash__(self):
        return hash(self.name)

    def __eq__(self, other):
        return isinstance(other, AnsatzSpec) and self.name == other.name

    def parse(self, text: str) -> Word:
        return Word.parse(text, self.alias)


NormalForm = dict  # (k, l) -> Poly, meaning coeff * E^k D^l


def _add_into(acc: dict, key, value: Poly):
    cur = acc.get(key)
    total = value if cur is None else cur + value
    if total.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = total


class _Engine:
    """Memo tables for one commutation rule and its boundary rules."""

    def __init__(self, spec: AnsatzSpec):
        self.spec = spec
        self.rule = spec.rule
        self._de_cache: dict[int, NormalForm] = {}
        self._tail_cache: dict[tuple, Poly] = {}

    def d_power_times_e(self, l: int) -> NormalForm:
        """Normal form of ``D^l E``."""
        cache = self._de_cache
        if l in cache:
            return cache[l]
        if l == 0:
            out = {(1, 0): ONE}
        else:
            # D^l E = D^{l-1} (qc ED + s D + t E + u)
            r = self.rule
            out: NormalForm = {}
            prev = self.d_power_times_e(l - 1)
            if not r.qc.is_zero():
                for (k, m), c in prev.items():
                    _add_into(out, (k, m + 1), c * r.qc)
            if not r.s.is_zero():
                _add_into(out, (0, l), r.s)
            if not r.t.is_zero():
                for key, c in prev.items():
                    _add_into(out, key, c * r.t)
            if not r.u.is_zero():
                _add_into(out, (0, l - 1), r.u)
        cache[l] = out
        return out

    def times_letter(self, nf: NormalForm, letter: str) -> NormalForm:
        out: NormalForm = {}
        if letter == "D":
            for (k, l), c in nf.items():
                _add_into(out, (k, l + 1), c)
            return out
        for (k, l), c in nf.items():
            for (k2, l2), c2 in self.d_power_times_e(l).items():
                _add_into(out, (k + k2, l2), c * c2)
        return out

    def normal_form(self, word: Word) -> NormalForm:
        nf: NormalForm = {(0, 0): ONE}
        for letter in word.letters:
            nf = self.times_letter(nf, letter)
        return nf

    def eval_normal(self, k: int, l: int) -> Poly:
        """``<W| E^k D^l |V>``."""
        key = (k, l)
        if key in self._tail_cache:
            return self._tail_cache[key]
        kind, val = self.spec.boundary.right
        if l == 0:
            lk, lv = self.spec.boundary.left
            if k == 0:
                res = ONE
            elif lk == "zero":
                res = ZERO
            else:
                res = lv ** k
        elif kind == "zero":
            res = ZERO
        elif kind == "scale":
            res = val ** l * self.eval_normal(k, 0)
        else:
            # E^k D^l |V> = r E^k D^{l-1} E |V>
            res = ZERO
            for (k2, l2), c in self.d_power_times_e(l - 1).items():
                res = res + c * self.eval_normal(k + k2, l2)
            res = val * res
        self._tail_cache[key] = res
        return res

    def eval_nf(self, nf: NormalForm) -> Poly:
        total = ZERO
        for (k, l), c in nf.items():
            v = self.eval_normal(k, l)
            if not v.is_zero():
                total = total + c * v
        return total


_ENGINES: dict[str, _Engine] = {}


def _engine(spec: AnsatzSpec) -> _Engine:
    eng = _ENGINES.get(spec.name)
    if eng is None or eng.spec is not spec:
        eng = _Engine(spec)
        _ENGINES[spec.name] = eng
    return eng


def normal_form(x: Word | str, rule: CommutationRule) -> NormalForm:
    """Coefficients ``{(k, l): c}`` with ``x = sum c E^k D^l``."""
    if isinstance(x, str):
        x = Word(x)
    spec = AnsatzSpec("_rule", rule, BoundaryRules(("zero", None), ("zero", None)))
    return _Engine(spec).normal_form(x)


def rewrite_once(x: Word | str, rule: CommutationRule, position: int) -> dict[str, Poly]:
    """Apply the commutation rule at the ``DE`` starting at ``position``.

    Returns the resulting formal sum as ``{word: coeff}``.
    """
    w = str(x)
    if w[position:position + 2] != "DE":
        raise WordError(f"no DE at position {position} in {w!r}")
    head, tail = w[:position], w[position + 2:]
    out: dict[str, Poly] = {}
    for piece, c in (("ED", rule.qc), ("D", rule.s), ("E", rule.t), ("", rule.u)):
        if not c.is_zero():
            key = head + piece + tail
            out[key] = out.get(key, ZERO) + c
    return out


def naive_normal_form(x: Word | str, rule: CommutationRule) -> NormalForm:
    """Normal form by literal leftmost-DE rewriting of strings (slow oracle)."""
    pending: dict[str, Poly] = {str(x): ONE}
    done: NormalForm = {}
    while pending:
        w, c = pending.popitem()
        i = w.find("DE")
        if i < 0:
            _add_into(done, (w.count("E"), w.count("D")), c)
            continue
        for w2, c2 in rewrite_once(w, rule, i).items():
            v = pending.get(w2, ZERO) + c * c2
            if v.is_zero():
                pending.pop(w2, None)
            else:
                pending[w2] = v
    return done


def bracket(x: Word | str, spec: AnsatzSpec | str) -> Poly:
    """``<W| x |V>`` under ``spec``."""
    spec = get_spec(spec) if isinstance(spec, str) else spec
    if isinstance(x, str):
        x = spec.parse(x)
    eng = _engine(spec)
    return eng.eval_nf(eng.normal_form(x))


def bracket_of_sum(terms: Mapping[str, Poly], spec: AnsatzSpec) -> Poly:
    total = ZERO
    for w, c in terms.items():
        total = total + c * bracket(Word(w), spec)
    return total


def bracket_of_product(factors: Iterable[Mapping[str, object]], spec: AnsatzSpec) -> Poly:
    """``<W| F_1 F_2 ... |V>`` where each factor is ``{letter or '': coeff}``.

    The empty key stands for the identity, so ``{"E": 1, "": 1}`` is ``E + I``.
    """
    eng = _engine(spec)
    nf: NormalForm = {(0, 0): ONE}
    for factor in factors:
        acc: NormalForm = {}
        for letter, coeff in factor.items():
            coeff = Poly.coerce(coeff)
            if coeff.is_zero():
                continue
            part = nf if letter == "" else eng.times_letter(nf, letter)
            for key, c in part.items():
                _add_into(acc, key, c * coeff)
        nf = acc
    return eng.eval_nf(nf)


def sum_bracket(n: int, spec: AnsatzSpec | str, weights: Mapping[str, object] | None = None) -> Poly:
    """``<W| (wD*D + wE*E)^n |V>``; weights default to 1 (the sum over all words)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    spec = get_spec(spec) if isinstance(spec, str) else spec
    weights = weights or {}
    factor = {letter: weights.get(letter, 1) for letter in LETTERS}
    return bracket_of_product([factor] * n, spec)


def naive_sum_bracket(n: int, spec: AnsatzSpec | str) -> Poly:
    spec = get_spec(spec) if isinstance(spec, str) else spec
    total = ZERO
    for w in all_words(n):
        total = total + bracket(w, spec)
    return total


# ---------------------------------------------------------------------------
# catalogue; PASEP parameters are stored as a = 1/alpha, b = 1/beta


def _build_catalogue() -> dict[str, AnsatzSpec]:
    q, a, b, r = var("q"), var("a"), var("b"), var("r")
    one = ONE
    specs = [
        AnsatzSpec(
            "pasep",
            CommutationRule(q, one, one, ZERO),
            BoundaryRules(("scale", a), ("scale", b)),
            description="DE = qED + D + E, <W|E = a<W|, D|V> = b|V> (a = 1/alpha, b = 1/beta)",
        ),
        AnsatzSpec(
            "hermite",
            CommutationRule(q, ZERO, ZERO, one),
            BoundaryRules(("scale", a), ("zero", None)),
            alias={"D": "F", "E": "U"},
            description="FU - qUF = I, <W|U = a<W|, F|V> = 0",
        ),
        AnsatzSpec(
            "hermite_ksz",
            CommutationRule(q, ZERO, ZERO, one),
            BoundaryRules(("zero", None), ("zero", None)),
            alias={"D": "F", "E": "U"},
            description="FU - qUF = I, <W|U = 0, F|V> = 0 (the a = 0 point, for M = (U+I)(F+aI))",
        ),
        AnsatzSpec(
            "charlier_msw",
            CommutationRule(q, one, ZERO, ZERO),
            BoundaryRules(("zero", None), ("scale", one)),
            alias={"D": "X", "E": "Y"},
            description="XY - qYX = X, <W|Y = 0, X|V> = |V>",
        ),
        AnsatzSpec(
            "inversion",
            CommutationRule(q, one, ZERO, ZERO),
            BoundaryRules(("scale", one), ("cross", one)),
            description="DE = qED + D, <W|E = <W|, D|V> = E|V>",
        ),
        AnsatzSpec(
            "crossing",
            CommutationRule(q, one, one, ZERO),
            BoundaryRules(("zero", None), ("scale", one)),
            description="DE = qED + D + E, <W|E = 0, D|V> = |V>",
        ),
        AnsatzSpec(
            "typeB",
            CommutationRule(q, one, one, ZERO),
            BoundaryRules(("scale", one), ("cross", r)),
            description="DE = qED + D + E, <W|E = <W|, D|V> = rE|V>",
        ),
    ]
    return {s.name: s for s in specs}


CATALOGUE = _build_catalogue()


def get_spec(name: str) -> AnsatzSpec:
    try:
        return CATALOGUE[name]
    except KeyError:
        raise UnknownSpec(f"unknown ansatz spec {name!r}; known: {', '.join(sorted(CATALOGUE))}") from None
