"""Permutations, signed permutations, involutions, set partitions and
weighted Motzkin paths, with the statistics used to count them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Iterator, Sequence

from .algebra import ONE, ZERO, Poly, RatFun, var


class InvalidTable(ValueError):
    pass


class InvalidObject(ValueError):
    pass


class NotTridiagonal(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidObject(f"{self.images} is not a permutation")

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def to_json(self) -> str:
        return json.dumps(list(self.images))


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def inversions(p: Permutation) -> int:
    im = p.images
    return sum(1 for i, j in combinations(range(len(im)), 2) if im[i] > im[j])


def inversion_table(p: Permutation) -> tuple[int, ...]:
    """``t[i]`` = number of ``j > i`` with ``p(j) < p(i)``, so ``t[i] <= n - 1 - i``."""
    im = p.images
    n = len(im)
    return tuple(sum(1 for j in range(i + 1, n) if im[j] < im[i]) for i in range(n))


def from_inversion_table(t: Sequence[int]) -> Permutation:
    n = len(t)
    for i, k in enumerate(t):
        if not 0 <= k <= n - 1 - i:
            raise InvalidTable(f"entry {k} at position {i + 1} out of range for length {n}")
    remaining = list(range(1, n + 1))
    return Permutation(tuple(remaining.pop(k) for k in t))


def crossings_A(p: Permutation) -> int:
    n = len(p)
    count = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pi, pj = p(i), p(j)
            if i < j <= pi < pj or i > j > pi > pj:
                count += 1
    return count


# ---------------------------------------------------------------------------
# signed permutations


@dataclass(frozen=True)
class SignedPermutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidObject(f"{self.images} is not a signed permutation")

    def __len__(self):
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Value at ``i`` in ``[-n, n] \\ {0}``, with ``pi(-i) = -pi(i)``."""
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def to_json(self) -> str:
        return json.dumps(list(self.images))


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, p)))


def negatives(p: SignedPermutation) -> int:
    return sum(1 for v in p.images if v < 0)


def crossings_B(p: SignedPermutation) -> int:
    """Pairs ``(i, j)`` of positive indices with
    ``i < j <= pi(i) < pi(j)``, or ``-i < j <= -pi(i) < pi(j)``, or ``i > j > pi(i) > pi(j)``."""
    n = len(p)
    count = 0
    for i in range(1, n + 1):
        pi = p(i)
        for j in range(1, n + 1):
            pj = p(j)
            if i < j <= pi < pj:
                count += 1
            if -i < j <= -pi < pj:
                count += 1
            if i > j > pi > pj:
                count += 1
    return count


# ---------------------------------------------------------------------------
# involutions and set partitions


@dataclass(frozen=True)
class Involution:
    n: int
    arches: tuple[tuple[int, int], ...]

    def __post_init__(self):
        used = [v for arc in self.arches for v in arc]
        if len(set(used)) != len(used) or any(not (1 <= i < j <= self.n) for i, j in self.arches):
            raise InvalidObject(f"bad arches {self.arches} on [{self.n}]")

    @property
    def fixed_points(self) -> tuple[int, ...]:
        used = {v for arc in self.arches for v in arc}
        return tuple(i for i in range(1, self.n + 1) if i not in used)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "arches": [list(x) for x in self.arches]})


def all_involutions(n: int) -> Iterator[Involution]:
    def rec(rest: tuple, arches: tuple):
        if not rest:
            yield Involution(n, tuple(sorted(arches)))
            return
        first, others = rest[0], rest[1:]
        yield from rec(others, arches)
        for k, partner in enumerate(others):
            yield from rec(others[:k] + others[k + 1:], arches + ((first, partner),))

    yield from rec(tuple(range(1, n + 1)), ())


def involution_steps(v: Involution) -> list[tuple[str, int]]:
    """Step type and exponent of q for each position of ``1..n``.

    Opening an arch is ``NE`` with weight 1.  A fixed point is ``E`` with
    weight ``a q^k`` and a closing point ``SE`` with weight ``q^k``, where k
    counts the arches open above the point (for a closer, those opened after
    its partner).
    """
    partner = {}
    for i, j in v.arches:
        partner[i], partner[j] = j, i
    open_: list[int] = []
    out = []
    for pos in range(1, v.n + 1):
        if pos not in partner:
            out.append(("E", len(open_)))
        elif partner[pos] > pos:
            open_.append(pos)
            out.append(("NE", 0))
        else:
            start = partner[pos]
            k = sum(1 for u in open_ if u > start)
            open_.remove(start)
            out.append(("SE", k))
    return out


def involution_weight(v: Involution) -> Poly:
    q, a = var("q"), var("a")
    w = ONE
    for kind, k in involution_steps(v):
        if kind == "E":
            w = w * a * q ** k
        elif kind == "SE":
            w = w * q ** k
    return w


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(v for blk in self.blocks for v in blk)
        if flat != list(range(1, self.n + 1)) or any(not blk for blk in self.blocks):
            raise InvalidObject(f"{self.blocks} is not a partition of [{self.n}]")

    @classmethod
    def of(cls, *blocks: Sequence[int]) -> "SetPartition":
        blks = tuple(sorted(tuple(sorted(b)) for b in blocks))
        return cls(sum(len(b) for b in blks), blks)

    def arches(self) -> list[tuple[int, int]]:
        """Consecutive elements of each block."""
        return [(blk[k], blk[k + 1]) for blk in self.blocks for k in range(len(blk) - 1)]

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks])


def all_set_partitions(n: int) -> Iterator[SetPartition]:
    def rec(i: int, blocks: list):
        if i > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for blk in blocks:
            blk.append(i)
            yield from rec(i + 1, blocks)
            blk.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def setpartition_crossings(sp: SetPartition) -> int:
    """Pairs of arches ``(j, i)``, ``(u, v)`` with ``j < u < i < v``."""
    arcs = sp.arches()
    return sum(1 for (j, i) in arcs for (u, v) in arcs if j < u < i < v)


def setpartition_weight(sp: SetPartition) -> Poly:
    return var("a") ** len(sp.blocks) * var("q") ** setpartition_crossings(sp)


def charlier_steps(sp: SetPartition) -> list[tuple[str, int]]:
    """Per-position (step kind, q exponent) in the Charlier-diagram encoding.

    Element ``i`` closing an arch ``(j, i)`` gets ``q^k`` with k the number of
    arches ``(u, v)`` such that ``j < u < i < v``.
    """
    arcs = sp.arches()
    opens = {u: v for u, v in arcs}
    closes = {v: u for u, v in arcs}
    out = []
    for i in range(1, sp.n + 1):
        o, c = i in opens, i in closes
        if c:
            j = closes[i]
            k = sum(1 for (u, v) in arcs if j < u < i < v)
        else:
            k = 0
        kind = {(False, False): "E", (True, True): "E", (True, False): "NE", (False, True): "SE"}[(o, c)]
        out.append((kind, k))
    return out


# ---------------------------------------------------------------------------
# Motzkin paths


@dataclass(frozen=True)
class MotzkinPath:
    steps: tuple[str, ...]

    def __post_init__(self):
        h = 0
        for s in self.steps:
            h += {"NE": 1, "E": 0, "SE": -1}[s]
            if h < 0:
                raise InvalidObject(f"path {self.steps} dips below the axis")
        if h != 0:
            raise InvalidObject(f"path {self.steps} ends at height {h}")

    def heights(self) -> list[int]:
        """Starting height of each step."""
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += {"NE": 1, "E": 0, "SE": -1}[s]
        return out

    def to_json(self) -> str:
        return json.dumps(" ".join(self.steps))


def motzkin_paths(n: int) -> Iterator[MotzkinPath]:
    def rec(k: int, h: int, acc: tuple):
        if k == n:
            if h == 0:
                yield MotzkinPath(acc)
            return
        if h + 1 <= n - k - 1:
            yield from rec(k + 1, h + 1, acc + ("NE",))
        if h <= n - k - 1:
            yield from rec(k + 1, h, acc + ("E",))
        if h > 0:
            yield from rec(k + 1, h - 1, acc + ("SE",))

    yield from rec(0, 0, ())


def _coerce_weight(v):
    return v if isinstance(v, RatFun) else RatFun.coerce(v)


def motzkin_sum(n: int, b: Callable[[int], object], lam: Callable[[int], object]) -> RatFun:
    """Sum over Motzkin paths of length n: NE weight 1, E at height i weight
    ``b(i)``, SE from height i weight ``lam(i)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    bs = [_coerce_weight(b(i)) for i in range(n + 1)]
    ls = [None] + [_coerce_weight(lam(i)) for i in range(1, n + 1)]
    # vec[h] = weighted count of prefixes ending at height h
    vec = [RatFun.coerce(1)]
    for k in range(n):
        remaining = n - k - 1
        top = min(len(vec), remaining + 1)
        nxt = [RatFun.coerce(0)] * (top + 1)
        for h, w in enumerate(vec):
            if w.is_zero():
                continue
            if h + 1 <= remaining and h + 1 < len(nxt):
                nxt[h + 1] = nxt[h + 1] + w
            if h <= remaining:
                nxt[h] = nxt[h] + w * bs[h]
            if h > 0 and h - 1 <= remaining:
                nxt[h - 1] = nxt[h - 1] + w * ls[h]
        vec = nxt
    return vec[0]


def motzkin_sum_paths(n: int, b, lam) -> RatFun:
    """Same as :func:`motzkin_sum`, by listing every path (small n only)."""
    total = RatFun.coerce(0)
    for p in motzkin_paths(n):
        w = RatFun.coerce(1)
        for s, h in zip(p.steps, p.heights()):
            if s == "E":
                w = w * _coerce_weight(b(h))
            elif s == "SE":
                w = w * _coerce_weight(lam(h))
        total = total + w
    return total


def motzkin_shaped(x, model, N: int | None = None) -> RatFun:
    """Weighted Motzkin paths of shape ``x`` read off a tridiagonal model.

    Step j at height i with letter ``L = x_j`` has weight ``L[i][i+1]`` (NE),
    ``L[i][i]`` (E) or ``L[i][i-1]`` (SE); letters allow any step their
    matrix supports.  Requires ``<W| = e_0`` and ``|V> = e_0``.
    """
    from .ansatz import Word
    from .models import MatrixModel, build

    m: MatrixModel = model.model if hasattr(model, "model") else model
    w = m.parse(x) if isinstance(x, str) else x
    n = len(w)
    size = N or n + 2
    tm = build(m, size)
    for letter in set(w.letters):
        for i, row in enumerate(tm.rows[letter]):
            for j, _ in row:
                if abs(i - j) > 1:
                    raise NotTridiagonal(f"{m.name}: {letter}[{i}][{j}] is off the tridiagonal band")
    for i in range(size):
        if tm.W[i] != (1 if i == 0 else 0) or tm.V[i] != (1 if i == 0 else 0):
            raise NotTridiagonal(f"{m.name}: boundary vectors are not e_0")

    @lru_cache(maxsize=None)
    def paths(k: int, h: int) -> RatFun:
        if h < 0 or h > n - k:
            return RatFun.coerce(0)
        if k == n:
            return RatFun.coerce(1 if h == 0 else 0)
        letter = w.letters[k]
        total = RatFun.coerce(0)
        for dh in (1, 0, -1):
            j = h + dh
            if j < 0:
                continue
            wt = tm.entry(letter, h, j)
            if not wt.is_zero():
                total = total + wt * paths(k + 1, j)
        return total

    return paths(0, 0)
