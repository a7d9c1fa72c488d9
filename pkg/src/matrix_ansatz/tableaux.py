"""Brute-force generators and weights for every tableau family.

Shapes are described by their border word read from the north-east corner:
``D`` is a south step (a row), ``E`` a west step (a column).  A row's length
is the number of ``E`` after its ``D``.  Columns are indexed from the left, so
``E`` steps before the first ``D`` become empty columns on the right.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping, Sequence

from .algebra import ONE, ZERO, Poly, var
from .ansatz import LETTERS, Word, all_words
from .combstats import Permutation, from_inversion_table, inversion_table


class InvalidTableau(ValueError):
    pass


class InvalidShape(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    """Row lengths, top to bottom.  Shifted rows start at their own index."""

    rows: tuple[int, ...]
    kind: str = "young"
    ncols: int | None = None

    def __post_init__(self):
        if self.kind not in ("young", "shifted"):
            raise InvalidShape(f"unknown shape kind {self.kind!r}")
        if any(x < 0 for x in self.rows):
            raise InvalidShape(f"negative row length in {self.rows}")
        if self.kind == "young" and any(x < y for x, y in zip(self.rows, self.rows[1:])):
            raise InvalidShape(f"rows {self.rows} are not weakly decreasing")
        if self.kind == "shifted":
            ends = [i + x for i, x in enumerate(self.rows) if x]
            if any(x < y for x, y in zip(ends, ends[1:])):
                raise InvalidShape(f"shifted rows {self.rows} do not form an order ideal")
        if self.ncols is not None and self.ncols < self.width:
            raise InvalidShape(f"ncols {self.ncols} below the diagram width {self.width}")

    @property
    def width(self) -> int:
        if self.kind == "young":
            return max(self.rows, default=0)
        return max((i + x for i, x in enumerate(self.rows)), default=0)

    @property
    def columns(self) -> int:
        return self.width if self.ncols is None else self.ncols

    def row_range(self, i: int) -> range:
        start = i if self.kind == "shifted" else 0
        return range(start, start + self.rows[i])

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.rows)) for j in self.row_range(i)]

    def column_heights(self) -> list[int]:
        cells = set(self.cells())
        return [sum(1 for i in range(len(self.rows)) if (i, j) in cells) for j in range(self.columns)]

    def corners(self) -> list[tuple[int, int]]:
        cells = set(self.cells())
        return [(i, j) for (i, j) in cells if (i + 1, j) not in cells and (i, j + 1) not in cells]

    @classmethod
    def from_border(cls, x: Word | str) -> "Shape":
        w = str(x)
        rows = []
        for p, ch in enumerate(w):
            if ch == "D":
                rows.append(w.count("E", p + 1))
        return cls(tuple(rows), "young", w.count("E"))

    @classmethod
    def staircase(cls, k: int) -> "Shape":
        return cls(tuple(range(k, 0, -1)))

    def to_json(self) -> dict:
        return {"kind": self.kind, "rows": list(self.rows), "ncols": self.columns}


def shape_from_word(x: Word | str) -> Shape:
    """Shape of the permutation tableau whose border is ``D`` followed by ``x``."""
    return Shape.from_border("D" + str(x))


def typeB_shape(x: Word | str) -> Shape:
    """Shifted shape for a type B word: the row of the D at position p has length n - p."""
    w = str(x)
    n = len(w)
    return Shape(tuple(n - p for p, ch in enumerate(w) if ch == "D"), "shifted", n)


@dataclass(frozen=True)
class Filling:
    shape: Shape
    cells: Mapping[tuple[int, int], str] = field(default_factory=dict)

    def __post_init__(self):
        if set(self.cells) != set(self.shape.cells()):
            raise InvalidTableau("filling does not cover exactly the cells of its shape")

    def grid(self) -> list[list[str]]:
        return [[self.cells[(i, j)] for j in self.shape.row_range(i)] for i in range(len(self.shape.rows))]

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "grid": self.grid()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Mapping) -> "Filling":
        sh = data["shape"]
        shape = Shape(tuple(sh["rows"]), sh["kind"], sh.get("ncols"))
        cells = {}
        for i, row in enumerate(data["grid"]):
            for j, sym in zip(shape.row_range(i), row):
                cells[(i, j)] = sym
        return cls(shape, cells)


def _weighted(counts: Mapping[tuple, int], names: Sequence[str]) -> Poly:
    total = ZERO
    gens = [var(v) for v in names]
    for exps, mult in counts.items():
        term = Poly.const(mult)
        for g, k in zip(gens, exps):
            if k:
                term = term * g ** k
        total = total + term
    return total


# ---------------------------------------------------------------------------
# 0/1 fillings with the "no 0 with a 1 above and a 1 to its left" rule


def _zero_one_fillings(shape: Shape, column_needs_one: bool, diagonal: str | None = None) -> Iterator[dict]:
    """Backtracking over 0/1 fillings, column by column, top to bottom.

    ``diagonal``: None, "no-zero-under-one" (a diagonal 0 has only 0s above)
    or "ones" (diagonal cells hold 1).
    """
    cells = shape.cells()
    order = sorted(cells, key=lambda c: (c[1], c[0]))
    col_cells: dict[int, list] = {}
    for i, j in order:
        col_cells.setdefault(j, []).append((i, j))
    last_in_col = {cs[-1]: j for j, cs in col_cells.items()}
    fill: dict = {}
    col_has_one: dict[int, bool] = {}
    row_has_one: dict[int, bool] = {}

    def rec(k: int):
        if k == len(order):
            yield dict(fill)
            return
        i, j = order[k]
        above = col_has_one.get(j, False)
        left = row_has_one.get(i, False)
        options = (0, 1)
        if diagonal == "ones" and i == j:
            options = (1,)
        for v in options:
            if v == 0:
                if above and left:
                    continue
                if diagonal == "no-zero-under-one" and i == j and above:
                    continue
                if column_needs_one and (i, j) in last_in_col and not above:
                    continue
            fill[(i, j)] = v
            saved = (col_has_one.get(j, False), row_has_one.get(i, False))
            if v:
                col_has_one[j] = True
                row_has_one[i] = True
            yield from rec(k + 1)
            col_has_one[j], row_has_one[i] = saved
            del fill[(i, j)]

    yield from rec(0)


def permutation_tableaux(shape: Shape) -> Iterator[Filling]:
    if shape.kind != "young":
        raise InvalidShape("permutation tableaux live on Young shapes")
    for f in _zero_one_fillings(shape, column_needs_one=True):
        yield Filling(shape, {k: str(v) for k, v in f.items()})


def _pt_stats(shape: Shape, f: Mapping) -> tuple[int, int, int, list[bool], set]:
    """(superfluous 1s, 1s in the first row, unrestricted rows, restricted flags, superfluous cells)."""
    nrows = len(shape.rows)
    seen_one_in_col: set = set()
    superfluous = set()
    restricted = [False] * nrows
    for (i, j) in sorted(shape.cells(), key=lambda c: (c[1], c[0])):
        v = f[(i, j)]
        if v == 1:
            if j in seen_one_in_col:
                superfluous.add((i, j))
            seen_one_in_col.add(j)
        elif j in seen_one_in_col:
            restricted[i] = True
    first = sum(1 for j in shape.row_range(0) if f[(0, j)] == 1) if nrows else 0
    unrestricted = sum(1 for x in restricted if not x)
    return len(superfluous), first, unrestricted, restricted, superfluous


def _as_ints(t: Filling) -> dict:
    try:
        return {k: int(v) for k, v in t.cells.items()}
    except ValueError:
        raise InvalidTableau("expected a 0/1 filling") from None


def is_permutation_tableau(t: Filling) -> bool:
    f = _as_ints(t)
    shape = t.shape
    for j in range(shape.width):
        col = [f[(i, j)] for i in range(len(shape.rows)) if (i, j) in f]
        if col and 1 not in col:
            return False
    for (i, j), v in f.items():
        if v == 0:
            above = any(f.get((k, j)) == 1 for k in range(i))
            left = any(f.get((i, k)) == 1 for k in range(j))
            if above and left:
                return False
    return True


def permutation_tableau_weight(t: Filling) -> Poly:
    """``q^{superfluous 1s} a^{1s in first row} b^{unrestricted rows - 1}``."""
    wt, first, unr, _, _ = _pt_stats(t.shape, _as_ints(t))
    return var("q") ** wt * var("a") ** first * var("b") ** (unr - 1)


def enum_permutation_tableaux(shape: Shape | Word | str) -> Poly:
    if not isinstance(shape, Shape):
        shape = shape_from_word(shape)
    if shape.kind != "young":
        raise InvalidShape("permutation tableaux live on Young shapes")
    counts: Counter = Counter()
    for f in _zero_one_fillings(shape, column_needs_one=True):
        wt, first, unr, _, _ = _pt_stats(shape, f)
        counts[(wt, first, unr - 1)] += 1
    return _weighted(counts, ("q", "a", "b"))


def enum_permutation_tableaux_length(n: int) -> Poly:
    """Sum over all words of length n (permutation tableaux of length n + 1)."""
    total = ZERO
    for w in all_words(n):
        total = total + enum_permutation_tableaux(w)
    return total


# ---------------------------------------------------------------------------
# type B


def typeB_tableaux(x: Word | str) -> Iterator[Filling]:
    shape = typeB_shape(x)
    for f in _zero_one_fillings(shape, column_needs_one=False, diagonal="no-zero-under-one"):
        rows_ok = all(any(f[(i, j)] for j in shape.row_range(i)) for i in range(len(shape.rows)))
        if rows_ok:
            yield Filling(shape, {k: str(v) for k, v in f.items()})


def _typeB_stats(shape: Shape, f: Mapping) -> tuple[int, int]:
    sup = 0
    for i in range(len(shape.rows)):
        seen = False
        for j in shape.row_range(i):
            if f[(i, j)] == 1:
                if seen:
                    sup += 1
                seen = True
    diag = sum(1 for i in range(len(shape.rows)) if shape.rows[i] and f[(i, i)] == 1)
    return sup, diag


def typeB_weight(t: Filling) -> Poly:
    """``q^{superfluous 1s} r^{diagonal 1s}``; a 1 is superfluous when another 1 lies to its left."""
    sup, diag = _typeB_stats(t.shape, _as_ints(t))
    return var("q") ** sup * var("r") ** diag


def enum_typeB_word(x: Word | str) -> Poly:
    shape = typeB_shape(x)
    counts: Counter = Counter()
    for f in _zero_one_fillings(shape, column_needs_one=False, diagonal="no-zero-under-one"):
        if all(any(f[(i, j)] for j in shape.row_range(i)) for i in range(len(shape.rows))):
            counts[_typeB_stats(shape, f)] += 1
    return _weighted(counts, ("q", "r"))


def enum_typeB_tableaux(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be non-negative")
    total = ZERO
    for w in all_words(n):
        total = total + enum_typeB_word(w)
    return total


# ---------------------------------------------------------------------------
# alternative tableaux

ALPHA, BETA, GAMMA = "alpha", "beta", "gamma"


def alternative_tableaux(shape: Shape) -> Iterator[Filling]:
    """Partial fillings with A (alpha) and B (beta): every cell left of a B and
    every cell above an A is empty ('.')."""
    if shape.kind != "young":
        raise InvalidShape("alternative tableaux live on Young shapes")
    cells = shape.cells()
    # fill right to left within rows, bottom to top, so constraints look at filled cells
    order = sorted(cells, key=lambda c: (-c[0], -c[1]))
    fill: dict = {}
    row_has_beta_right: dict = {}
    col_has_alpha_below: dict = {}

    def rec(k: int):
        if k == len(order):
            yield Filling(shape, dict(fill))
            return
        i, j = order[k]
        forced_empty = row_has_beta_right.get(i, False) or col_has_alpha_below.get(j, False)
        for sym in (".",) if forced_empty else (".", "A", "B"):
            fill[(i, j)] = sym
            saved = (row_has_beta_right.get(i, False), col_has_alpha_below.get(j, False))
            if sym == "B":
                row_has_beta_right[i] = True
            if sym == "A":
                col_has_alpha_below[j] = True
            yield from rec(k + 1)
            row_has_beta_right[i], col_has_alpha_below[j] = saved
            del fill[(i, j)]

    yield from rec(0)


def alternative_stats(t: Filling) -> tuple[int, int, int]:
    syms = t.cells
    na = sum(1 for v in syms.values() if v == "A")
    nb = sum(1 for v in syms.values() if v == "B")
    nc = sum(1 for c in t.shape.corners() if syms[c] == ".")
    return na, nb, nc


def enum_alternative_tableaux(shape: Shape) -> Poly:
    counts: Counter = Counter(alternative_stats(t) for t in alternative_tableaux(shape))
    return _weighted(counts, (ALPHA, BETA, GAMMA))


# ---------------------------------------------------------------------------
# 0-1 tableaux


def zero_one_tableaux(k: int, m: int) -> Iterator[Filling]:
    """Diagrams inside k rows with m columns (heights between 1 and k, weakly
    decreasing left to right), one 1 per column."""

    def heights(m_left: int, cap: int):
        if m_left == 0:
            yield ()
            return
        for h in range(cap, 0, -1):
            for rest in heights(m_left - 1, h):
                yield (h,) + rest

    if m == 0:
        yield Filling(Shape(()), {})
        return
    if k == 0:
        return
    for hs in heights(m, k):
        rows = tuple(sum(1 for h in hs if h > i) for i in range(hs[0]))
        shape = Shape(rows)
        for pos in product(*(range(h) for h in hs)):
            cells = {(i, j): "1" if i == pos[j] else "0" for (i, j) in shape.cells()}
            yield Filling(shape, cells)


def zeros_above_ones(t: Filling) -> int:
    count = 0
    for (i, j), v in t.cells.items():
        if v == "0" and any(t.cells.get((k, j)) == "1" for k in range(i + 1, len(t.shape.rows))):
            count += 1
    return count


def enum_01_tableaux(k: int, m: int) -> Poly:
    if k < 0 or m < 0:
        raise ValueError("k and m must be non-negative")
    counts = Counter((zeros_above_ones(t),) for t in zero_one_tableaux(k, m))
    return _weighted(counts, ("q",))


# ---------------------------------------------------------------------------
# rook placements


def _rook_placements(shape: Shape, one_per_row: bool) -> Iterator[dict[int, int]]:
    """Maps row -> column of its rook; at most one rook per column."""
    nrows = len(shape.rows)

    def rec(i: int, used: frozenset, acc: dict):
        if i == nrows:
            yield dict(acc)
            return
        if not one_per_row:
            yield from rec(i + 1, used, acc)
        for j in shape.row_range(i):
            if j not in used:
                acc[i] = j
                yield from rec(i + 1, used | {j}, acc)
                del acc[i]

    yield from rec(0, frozenset(), {})


def _rook_filling(shape: Shape, rooks: Mapping[int, int]) -> Filling:
    return Filling(shape, {(i, j): "R" if rooks.get(i) == j else "." for (i, j) in shape.cells()})


def rook_young_stats(shape: Shape, rooks: Mapping[int, int]) -> tuple[int, int]:
    """(empty columns, cells with no rook to their right nor below)."""
    col_rook = {j: i for i, j in rooks.items()}
    empty_cols = shape.columns - len(rooks)
    qcells = 0
    for (i, j) in shape.cells():
        if rooks.get(i) == j:
            continue
        right = rooks.get(i, -1) > j
        below = col_rook.get(j, -1) > i
        if not right and not below:
            qcells += 1
    return empty_cols, qcells


def rook_young_placements(shape: Shape) -> Iterator[Filling]:
    for rooks in _rook_placements(shape, one_per_row=True):
        yield _rook_filling(shape, rooks)


def enum_rook_young(shape: Shape | Word | str) -> Poly:
    """``a^{columns without rook} q^{...}`` over placements with one rook per row."""
    if not isinstance(shape, Shape):
        shape = Shape.from_border(shape)
    counts = Counter(rook_young_stats(shape, r) for r in _rook_placements(shape, one_per_row=True))
    return _weighted(counts, ("a", "q"))


def rook_young_length(n: int) -> Poly:
    total = ZERO
    for w in all_words(n):
        total = total + enum_rook_young(Shape.from_border(w))
    return total


def staircase_rook_shape(n: int) -> Shape:
    return Shape.from_border("ED" * n)


def rook_staircase_stats(shape: Shape, rooks: Mapping[int, int], n: int) -> tuple[int, int]:
    """(n - rooks, cells with a rook to their left and a rook below)."""
    col_rook = {j: i for i, j in rooks.items()}
    inv = 0
    for (i, j) in shape.cells():
        if rooks.get(i) == j:
            continue
        left = i in rooks and rooks[i] < j
        below = col_rook.get(j, -1) > i
        if left and below:
            inv += 1
    return n - len(rooks), inv


def rook_staircase_placements(n: int) -> Iterator[Filling]:
    shape = staircase_rook_shape(n)
    for rooks in _rook_placements(shape, one_per_row=False):
        yield _rook_filling(shape, rooks)


def enum_rook_staircase(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be non-negative")
    shape = staircase_rook_shape(n)
    counts = Counter(rook_staircase_stats(shape, r, n) for r in _rook_placements(shape, one_per_row=False))
    return _weighted(counts, ("a", "q"))


# ---------------------------------------------------------------------------
# inversion tableaux


def inversion_shape(n: int) -> Shape:
    return Shape(tuple(range(n, 0, -1)), "shifted", n)


def inversion_tableaux(n: int) -> Iterator[Filling]:
    shape = inversion_shape(n)
    # column j holds rows 0..j: zeros on top, then at least the diagonal 1
    for ones in product(*(range(1, j + 2) for j in range(n))):
        cells = {}
        for j, b_j in enumerate(ones):
            for i in range(j + 1):
                cells[(i, j)] = "1" if i >= j + 1 - b_j else "0"
        yield Filling(shape, cells)


def _inversion_columns(t: Filling) -> list[int]:
    n = len(t.shape.rows)
    if t.shape != inversion_shape(n):
        raise InvalidTableau(f"shape {t.shape} is not the shifted staircase of size {n}")
    f = _as_ints(t)
    sup = []
    for j in range(n):
        col = [f[(i, j)] for i in range(j + 1)]
        if col[-1] != 1:
            raise InvalidTableau(f"diagonal cell ({j},{j}) must hold 1")
        first = col.index(1)
        if any(v != 1 for v in col[first:]):
            raise InvalidTableau(f"column {j} has a 0 below a 1")
        sup.append(len(col) - first - 1)
    return sup


def inversion_tableau_weight(t: Filling) -> Poly:
    return var("q") ** sum(_inversion_columns(t))


def to_permutation(t: Filling) -> Permutation:
    """Superfluous 1s per column, read right to left, form the inversion table."""
    sup = _inversion_columns(t)
    return from_inversion_table(tuple(reversed(sup)))


def from_permutation(p: Permutation) -> Filling:
    table = inversion_table(p)
    n = len(table)
    shape = inversion_shape(n)
    cells = {}
    for j in range(n):
        ones = table[n - 1 - j] + 1
        for i in range(j + 1):
            cells[(i, j)] = "1" if i >= j + 1 - ones else "0"
    return Filling(shape, cells)


def enum_inversion_tableaux(n: int) -> Poly:
    counts = Counter((sum(_inversion_columns(t)),) for t in inversion_tableaux(n))
    return _weighted(counts, ("q",))


# ---------------------------------------------------------------------------
# staircase permutation tableaux


def staircase_pt_statistics(t: Filling) -> tuple[int, int, int]:
    """(0s in the first row, restricted rows, corners holding a superfluous 1)."""
    shape = t.shape
    k = len(shape.rows)
    if shape != Shape.staircase(k):
        raise InvalidTableau(f"shape {shape.rows} is not a staircase")
    if not is_permutation_tableau(t):
        raise InvalidTableau("not a permutation tableau")
    f = _as_ints(t)
    _, first, _, restricted, superfluous = _pt_stats(shape, f)
    zeros_first = shape.rows[0] - first if k else 0
    corners = sum(1 for c in shape.corners() if c in superfluous)
    return zeros_first, sum(restricted), corners


def enum_staircase_permutation_tableaux(k: int) -> Poly:
    """Sum of ``alpha^{zeros in first row} beta^{restricted rows} gamma^{superfluous corners}`` on the staircase with k rows."""
    counts = Counter(staircase_pt_statistics(t) for t in permutation_tableaux(Shape.staircase(k)))
    return _weighted(counts, (ALPHA, BETA, GAMMA))


def enum_staircase_q_tableaux(k: int) -> Poly:
    """``q^{superfluous} b^{1s in first row - 1} c^{unrestricted rows - 1}`` on the staircase with k rows."""
    shape = Shape.staircase(k)
    counts: Counter = Counter()
    for f in _zero_one_fillings(shape, column_needs_one=True):
        wt, first, unr, _, _ = _pt_stats(shape, f)
        counts[(wt, first - 1, unr - 1)] += 1
    return _weighted(counts, ("q", "b", "c"))
