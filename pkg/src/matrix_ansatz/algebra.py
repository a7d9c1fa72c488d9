"""Exact arithmetic kernel.

Multivariate Laurent polynomials with big-integer coefficients (:class:`Poly`),
their quotients (:class:`RatFun`), and the tangent-series Genocchi numbers.

A ``Poly`` carries an ordered variable table.  Two polynomials with different
tables are aligned by variable name before any arithmetic, so ``q + a`` works
regardless of how either operand was built.  The default table is
``q, a, b, c, r, x, y``; any other name is appended after those.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

DEFAULT_VARS = ("q", "a", "b", "c", "r", "x", "y")

Scalar = Union[int, Fraction]


class AlgebraError(ArithmeticError):
    pass


class NegativeExponentSubstitution(AlgebraError):
    pass


class NotPolynomial(AlgebraError):
    pass


def _var_key(name: str):
    try:
        return (0, DEFAULT_VARS.index(name), "")
    except ValueError:
        return (1, 0, name)


def merge_tables(*tables: Iterable[str]) -> tuple[str, ...]:
    names = set()
    for t in tables:
        names.update(t)
    return tuple(sorted(names, key=_var_key))


def _embed(terms: dict, src: tuple, dst: tuple) -> dict:
    if src == dst:
        return terms
    # variables missing from dst must only carry zero exponents
    pos = [dst.index(v) if v in dst else -1 for v in src]
    n = len(dst)
    out = {}
    for e, c in terms.items():
        f = [0] * n
        for i, k in zip(pos, e):
            if i >= 0:
                f[i] = k
            elif k:
                raise ValueError(f"cannot drop variable with nonzero exponent from {src}")
        out[tuple(f)] = c
    return out


class Poly:
    """Laurent polynomial over the integers, immutable."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, vars: Iterable[str] = DEFAULT_VARS):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != n:
                        raise ValueError(f"exponent vector {e} does not match table {self.vars}")
                    clean[tuple(e)] = int(c)
        self.terms = clean
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict, vars: tuple) -> "Poly":
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int, vars: Iterable[str] = DEFAULT_VARS) -> "Poly":
        vars = tuple(vars)
        return cls._raw({(0,) * len(vars): int(c)} if c else {}, vars)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        vars = merge_tables(DEFAULT_VARS, (name,))
        e = [0] * len(vars)
        e[vars.index(name)] = power
        return cls._raw({tuple(e): 1}, vars)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        vars = merge_tables(DEFAULT_VARS, exps)
        e = [0] * len(vars)
        for name, k in exps.items():
            e[vars.index(name)] = k
        return cls._raw({tuple(e): int(coeff)} if coeff else {}, vars)

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        if isinstance(value, RatFun):
            return value.to_poly()
        if isinstance(value, Fraction) and value.denominator == 1:
            return cls.const(value.numerator)
        raise TypeError(f"cannot coerce {value!r} to Poly")

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the canonical text form, e.g. ``'2*q^2*a - b^-1 + 3'``."""
        text = text.strip()
        if text == "0":
            return ZERO
        s = text.replace(" ", "")
        if not s.startswith(("+", "-")):
            s = "+" + s
        out = ZERO
        for token in re.split(r"(?<!\^)(?=[+-])", s):
            if not token:
                continue
            sign, body = token[0], token[1:]
            coeff = 1
            exps: dict[str, int] = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?", factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                exps[m.group(1)] = exps.get(m.group(1), 0) + int(m.group(2) or 1)
            out = out + cls.monomial(exps, -coeff if sign == "-" else coeff)
        return out

    # -- alignment ----------------------------------------------------
    def aligned(self, vars: tuple) -> "Poly":
        if vars == self.vars:
            return self
        return Poly._raw(_embed(self.terms, self.vars, vars), vars)

    def _align(self, other: "Poly"):
        if self.vars == other.vars:
            return self.terms, other.terms, self.vars
        t = merge_tables(self.vars, other.vars)
        return _embed(self.terms, self.vars, t), _embed(other.terms, other.vars, t), t

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            other = Poly.coerce(other)
        a, b, t = self._align(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            other = Poly.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly._raw({}, self.vars)
            return Poly._raw({e: c * other for e, c in self.terms.items()}, self.vars)
        if not isinstance(other, Poly):
            if isinstance(other, RatFun):
                return NotImplemented
            other = Poly.coerce(other)
        a, b, t = self._align(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.unit_inverse()
            if inv is None:
                raise AlgebraError("negative power of a non-monomial polynomial")
            return inv ** (-k)
        result = ONE.aligned(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        return RatFun(self, other)

    def __rtruediv__(self, other):
        return RatFun(other, self)

    # -- comparison ---------------------------------------------------
    def _named(self) -> frozenset:
        names = self.vars
        return frozenset(
            (tuple((names[i], k) for i, k in enumerate(e) if k), c) for e, c in self.terms.items()
        )

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return other == self
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        a, b, _ = self._align(other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._named())
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def unit_inverse(self) -> "Poly | None":
        """Inverse of ``±monomial``; None for anything else."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if c not in (1, -1):
            return None
        return Poly._raw({tuple(-k for k in e): c}, self.vars)

    def used_vars(self) -> tuple[str, ...]:
        used = set()
        for e in self.terms:
            used.update(self.vars[i] for i, k in enumerate(e) if k)
        return tuple(v for v in self.vars if v in used)

    def degree(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, var: str) -> int:
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return min((e[i] for e in self.terms), default=0)

    def content(self) -> int:
        return reduce(math.gcd, self.terms.values(), 0)

    def has_negative_exponents(self) -> bool:
        return any(k < 0 for e in self.terms for k in e)

    def sorted_terms(self):
        """Terms in canonical graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_coefficient(self) -> int:
        if not self.terms:
            return 0
        return self.sorted_terms()[0][1]

    def coefficients(self, var: str) -> dict[int, "Poly"]:
        """Split into ``{k: coeff}`` with ``self = sum coeff * var**k``."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            f = e[:i] + (0,) + e[i + 1:]
            out.setdefault(e[i], {})[f] = c
        return {k: Poly._raw(t, self.vars) for k, t in out.items()}

    # -- evaluation ---------------------------------------------------
    def evaluate(self, point: Mapping[str, Scalar]) -> Scalar:
        """Value at a point binding every used variable to a number."""
        missing = set(self.used_vars()) - set(point)
        if missing:
            raise KeyError(f"unbound variables {sorted(missing)}")
        total: Scalar = 0
        vals = [point.get(v, 1) for v in self.vars]
        for e, c in self.terms.items():
            term: Scalar = c
            for v, k in zip(vals, e):
                if k:
                    term = term * (Fraction(v) ** k if k < 0 else v ** k)
            total += term
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def substitute(self, bindings: Mapping[str, object]) -> "Poly":
        if not bindings:
            return self
        bound = {v: Poly.coerce(p) for v, p in bindings.items() if v in self.vars}
        if not bound:
            return self
        keep = tuple(v for v in self.vars if v not in bound)
        idx_keep = [self.vars.index(v) for v in keep]
        idx_bound = [(self.vars.index(v), p) for v, p in bound.items()]
        powers: dict = {}

        def power(var_i, p, k):
            key = (var_i, k)
            if key not in powers:
                if k < 0:
                    inv = p.unit_inverse()
                    if inv is None:
                        raise NegativeExponentSubstitution(
                            f"{self.vars[var_i]} appears with exponent {k} and is bound to {p}"
                        )
                    powers[key] = inv ** (-k)
                else:
                    powers[key] = p ** k
            return powers[key]

        groups: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            be = tuple(e[i] for i, _ in idx_bound)
            groups.setdefault(be, {})[tuple(e[i] for i in idx_keep)] = c
        result = ZERO
        for be, rest in groups.items():
            factor = Poly._raw(rest, keep)
            for (i, p), k in zip(idx_bound, be):
                if k:
                    factor = factor * power(i, p, k)
            result = result + factor
        return result

    # -- division -----------------------------------------------------
    def monomial_content(self) -> tuple[int, ...]:
        n = len(self.vars)
        if not self.terms:
            return (0,) * n
        return tuple(min(e[i] for e in self.terms) for i in range(n))

    def shift(self, exps: Iterable[int]) -> "Poly":
        exps = tuple(exps)
        return Poly._raw({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}, self.vars)

    def exact_quotient(self, divisor: "Poly") -> "Poly | None":
        """``self / divisor`` when it is a (Laurent) polynomial, else None."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num, den, t = self._align(divisor)
        num, den = Poly._raw(num, t), Poly._raw(den, t)
        if num.is_zero():
            return num
        inv = den.unit_inverse()
        if inv is not None:
            return num * inv
        # work with honest polynomials, lex leading terms
        ns, ds = num.monomial_content(), den.monomial_content()
        num = num.shift(tuple(-k for k in ns))
        den = den.shift(tuple(-k for k in ds))
        lead_e = max(den.terms)
        lead_c = den.terms[lead_e]
        rem = dict(num.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c:
                return None
            m = tuple(a - b for a, b in zip(e, lead_e))
            if any(k < 0 for k in m):
                return None
            cq = c // lead_c
            quot[m] = cq
            for de, dc in den.terms.items():
                f = tuple(a + b for a, b in zip(m, de))
                v = rem.get(f, 0) - cq * dc
                if v:
                    rem[f] = v
                else:
                    rem.pop(f, None)
        shift = tuple(a - b for a, b in zip(ns, ds))
        return Poly._raw(quot, t).shift(shift)

    # -- serialization ------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json(self) -> dict:
        used = self.used_vars()
        p = self.aligned(used) if used != self.vars else self
        return {"vars": list(used), "terms": [[str(c), list(e)] for e, c in p.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        vars = tuple(data["vars"])
        p = cls({tuple(e): int(c) for c, e in data["terms"]}, vars)
        return p.aligned(merge_tables(DEFAULT_VARS, vars))


ZERO = Poly.const(0)
ONE = Poly.const(1)


def var(name: str) -> Poly:
    return Poly.var(name)


def q_int(n: int, q: Poly | None = None) -> Poly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; zero for n <= 0."""
    q = var("q") if q is None else q
    total = ZERO
    term = ONE
    for _ in range(max(n, 0)):
        total = total + term
        term = term * q
    return total


def q_factorial(n: int) -> Poly:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


# ---------------------------------------------------------------------------
# univariate helpers over Q, used by RatFun normalization


def _to_univariate(p: Poly, var_name: str) -> list[Fraction]:
    i = p.vars.index(var_name)
    deg = max(e[i] for e in p.terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        coeffs[e[i]] += c
    return coeffs


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _uni_rem(a: list, b: list) -> list:
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _trim(a)
    return a


def _uni_gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _uni_rem(a, b)
    if not a:
        return [Fraction(0)]
    return [c / a[-1] for c in a]


def _primitive_from_fractions(coeffs: list[Fraction], var_name: str) -> Poly:
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    g = reduce(math.gcd, ints, 0) or 1
    x = Poly.var(var_name)
    out = ZERO
    for k, c in enumerate(ints):
        if c:
            out = out + Poly.const(c // g) * x ** k
    return out


class RatFun:
    """Quotient of two Laurent polynomials, kept in a reduced normal form.

    Reduction removes monomial factors and integer content, divides exactly
    when the denominator divides the numerator, and cancels common factors
    when the denominator involves a single variable.  Equality always falls
    back to cross-multiplication, so a multivariate common factor that
    survives normalization never produces a wrong comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, normalize: bool = True):
        num = Poly.coerce(num) if not isinstance(num, (Fraction, RatFun)) else num
        den = Poly.coerce(den) if not isinstance(den, (Fraction, RatFun)) else den
        if isinstance(num, (Fraction, RatFun)) or isinstance(den, (Fraction, RatFun)):
            n, d = RatFun.coerce(num), RatFun.coerce(den)
            num, den = n.num * d.den, n.den * d.num
        if den.is_zero():
            raise ZeroDivisionError("RatFun with zero denominator")
        self.num, self.den = (num, den)
        if normalize:
            self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def coerce(cls, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        if isinstance(value, Fraction):
            return cls(Poly.const(value.numerator), Poly.const(value.denominator))
        return cls._raw(Poly.coerce(value), ONE)

    def is_poly(self) -> bool:
        return self.den == ONE

    def to_poly(self) -> Poly:
        if self.den == ONE:
            return self.num
        q = self.num.exact_quotient(self.den)
        if q is None:
            raise NotPolynomial(f"{self} is not a polynomial")
        return q

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic; den == 1 fast paths keep polynomial-only work cheap
    def __add__(self, other):
        o = RatFun.coerce(other)
        if self.den == ONE and o.den == ONE:
            return RatFun._raw(self.num + o.num, ONE)
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        o = RatFun.coerce(other)
        if self.den == ONE and o.den == ONE:
            return RatFun._raw(self.num * o.num, ONE)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFun.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("RatFun division by zero")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFun.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(self.den, self.num) ** (-k)
        if self.den == ONE:
            return RatFun._raw(self.num ** k, ONE)
        return RatFun(self.num ** k, self.den ** k)

    def __eq__(self, other):
        try:
            o = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def substitute(self, bindings: Mapping[str, object]) -> "RatFun":
        # clear negative exponents first so that any binding is legal
        num, den = self.num, self.den.aligned(self.num.vars)
        low = num.monomial_content()
        lift = tuple(-k if k < 0 else 0 for k in low)
        if any(lift):
            num, den = num.shift(lift), den.shift(lift)
        return RatFun(num.substitute(bindings), den.substitute(bindings))

    def evaluate(self, point: Mapping[str, Scalar]) -> Scalar:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at {dict(point)}")
        v = Fraction(self.num.evaluate(point)) / d
        return v.numerator if v.denominator == 1 else v

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RatFun({str(self)!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return num, ONE.aligned(num.vars)
    nt, dt, t = num._align(den)
    num, den = Poly._raw(nt, t), Poly._raw(dt, t)
    # strip the monomial part of den into num (Laurent numerators are fine)
    ds = den.monomial_content()
    if any(ds):
        neg = tuple(-k for k in ds)
        den = den.shift(neg)
        num = num.shift(neg)
    g = math.gcd(num.content(), den.content())
    if g > 1:
        num = Poly._raw({e: c // g for e, c in num.terms.items()}, t)
        den = Poly._raw({e: c // g for e, c in den.terms.items()}, t)
    if not den.is_constant():
        q = num.exact_quotient(den)
        if q is not None:
            return q, ONE.aligned(t)
        used = den.used_vars()
        if len(used) == 1:
            v = used[0]
            ns = num.monomial_content()
            n0 = num.shift(tuple(-k for k in ns))
            g_uni = _to_univariate(den, v)
            for coeff in _split_by_other_vars(n0, v):
                g_uni = _uni_gcd(g_uni, coeff)
                if len(g_uni) == 1:
                    break
            if len(g_uni) > 1:
                common = _primitive_from_fractions(g_uni, v)
                num = num.exact_quotient(common)
                den = den.exact_quotient(common)
                assert num is not None and den is not None
    if den.is_constant():
        c = den.constant_value()
        if c < 0:
            num, den = -num, -den
            c = -c
        if c == 1:
            return num, ONE.aligned(t)
        return num, den
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _split_by_other_vars(p: Poly, v: str):
    i = p.vars.index(v)
    groups: dict[tuple, dict[int, int]] = {}
    for e, c in p.terms.items():
        rest = e[:i] + e[i + 1:]
        groups.setdefault(rest, {})[e[i]] = c
    for coeffs in groups.values():
        arr = [Fraction(0)] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            arr[k] = Fraction(c)
        yield arr


def as_ratfun(value) -> RatFun:
    return RatFun.coerce(value)


# ---------------------------------------------------------------------------
# Genocchi numbers from x * tan(x/2)


def _series_div(num: list[Fraction], den: list[Fraction], n: int) -> list[Fraction]:
    out = []
    for k in range(n):
        s = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s / den[0])
    return out


def genocchi_numbers(n_max: int) -> list[Fraction]:
    """``[G_2, G_4, ..., G_{2 n_max}]`` from ``x tan(x/2) = sum G_2n x^2n / (2n)!``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    order = 2 * n_max + 1
    sin_half = [Fraction(0)] * order
    cos_half = [Fraction(0)] * order
    for k in range(order):
        term = Fraction(1, math.factorial(k) * 2 ** k)
        if k % 2:
            sin_half[k] = term if (k // 2) % 2 == 0 else -term
        else:
            cos_half[k] = term if (k // 2) % 2 == 0 else -term
    tan_half = _series_div(sin_half, cos_half, order)
    # x * tan(x/2): coefficient of x^(2n) is tan_half[2n - 1]
    out = []
    for n in range(1, n_max + 1):
        g = tan_half[2 * n - 1] * math.factorial(2 * n)
        if g.denominator != 1 or g <= 0:
            raise AlgebraError(f"G_{2 * n} = {g} is not a positive integer")
        out.append(g)
    return out
