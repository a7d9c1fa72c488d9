"""Empirical staircase conventions.

For each staircase identity we search the row count ``k = n + dk`` and the
Dumont-Foata index ``n + offset`` that make the enumeration agree with the
algebraic side for every ``n`` up to a small bound.  The result is frozen in
``data/calibration.json``; tests recompute it and compare.
"""

from __future__ import annotations

import json
from importlib import resources

from .algebra import Poly, var
from .moments import dumont_foata, h_poly
from .tableaux import (
    ALPHA, BETA, GAMMA, Shape, enum_alternative_tableaux, enum_staircase_permutation_tableaux,
    enum_staircase_q_tableaux,
)

ROW_SHIFTS = (-1, 0, 1)
INDEX_OFFSETS = (-1, 0, 1)
DEFAULT_NMAX = 3


def scaled_dumont_foata(n: int, m: int) -> Poly:
    """``(alpha beta gamma)^n f_m(1/alpha, 1/beta, 1/gamma)``."""
    al, be, ga = var(ALPHA), var(BETA), var(GAMMA)
    f = dumont_foata(m).substitute({"a": al ** -1, "b": be ** -1, "c": ga ** -1})
    return (al * be * ga) ** n * f


def h_at_one(n: int) -> Poly:
    return h_poly(n).substitute({"a": 1})


def _search(enum, target, n_max: int, use_offset: bool) -> list[dict]:
    found = []
    for dk in ROW_SHIFTS:
        for off in INDEX_OFFSETS if use_offset else (0,):
            ok = True
            for n in range(1, n_max + 1):
                k, m = n + dk, n + off
                if k < 0 or m < 1 or enum(k) != target(n, m):
                    ok = False
                    break
            if ok:
                found.append({"row_shift": dk, "index_offset": off} if use_offset else {"row_shift": dk})
    return found


def calibrate(n_max: int = DEFAULT_NMAX) -> dict:
    return {
        "n_max": n_max,
        "alternative": _search(lambda k: enum_alternative_tableaux(Shape.staircase(k)),
                               scaled_dumont_foata, n_max, True),
        "permutation": _search(enum_staircase_permutation_tableaux, scaled_dumont_foata, n_max, True),
        "permutation_q": _search(enum_staircase_q_tableaux, lambda n, m: h_at_one(n), n_max, False),
        "dual_hahn_moment_offset": [
            off for off in INDEX_OFFSETS
            if all(n + off >= 1 and _dual_hahn_moment(n) == dumont_foata(n + off) for n in range(n_max + 1))
        ],
    }


def _dual_hahn_moment(n: int):
    from .moments import family_moments

    return family_moments("dual_hahn", n)[n]


def load_calibration() -> dict:
    text = resources.files("matrix_ansatz").joinpath("data/calibration.json").read_text()
    return json.loads(text)


def frozen(key: str) -> dict:
    """The single frozen convention for one identity."""
    entries = load_calibration()[key]
    if len(entries) != 1:
        raise ValueError(f"calibration for {key} is ambiguous: {entries}")
    return entries[0]


def dual_hahn_offset() -> int:
    offsets = load_calibration()["dual_hahn_moment_offset"]
    if len(offsets) != 1:
        raise ValueError(f"dual Hahn offset is ambiguous: {offsets}")
    return offsets[0]


if __name__ == "__main__":
    print(json.dumps(calibrate(), indent=2, sort_keys=True))
