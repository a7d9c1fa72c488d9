"""Command-line entry point.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Sequence

from . import ansatz, combstats, models, moments, tableaux, verify
from .algebra import ONE, Poly, RatFun, var


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# word expressions: sums of words, (expr)^n, integer coefficients


def parse_expression(text: str, to_word) -> dict[str, int]:
    """Expand an expression such as ``D+E``, ``2*DE + ED`` or ``(D+E)^3``
    into ``{word: multiplicity}``."""
    tokens = re.findall(r"\d+|[A-Za-z]+|[()+*^]", text.replace(" ", ""))
    if "".join(tokens) != text.replace(" ", ""):
        raise UsageError(f"cannot parse expression {text!r}")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise UsageError(f"unexpected {tok!r} in {text!r}")
        pos += 1
        return tok

    def mul(x: dict, y: dict) -> dict:
        out: dict[str, int] = {}
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return out

    def expr() -> dict:
        acc = term()
        while peek() == "+":
            take("+")
            for w, c in term().items():
                acc[w] = acc.get(w, 0) + c
        return acc

    def term() -> dict:
        acc = {"": 1}
        while peek() is not None and peek() not in ("+", ")"):
            if peek() == "*":
                take("*")
            acc = mul(acc, power())
        return acc

    def power() -> dict:
        base = atom()
        if peek() == "^":
            take("^")
            k = int(take())
            out = {"": 1}
            for _ in range(k):
                out = mul(out, base)
            return out
        return base

    def atom() -> dict:
        tok = peek()
        if tok == "(":
            take("(")
            inner = expr()
            take(")")
            return inner
        if tok is not None and tok.isdigit():
            take()
            return {"": int(tok)}
        if tok is not None and tok.isalpha():
            take()
            return {str(to_word(tok)): 1}
        raise UsageError(f"unexpected {tok!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise UsageError(f"trailing input in {text!r}")
    return {w: c for w, c in result.items() if c}


def parse_bindings(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        m = re.fullmatch(r"\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*", part)
        if not m:
            raise UsageError(f"bad binding {part!r}; expected var=int")
        out[m.group(1)] = int(m.group(2))
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args) -> int:
    name = args.name
    bindings = parse_bindings(args.at)
    if name in ansatz.CATALOGUE:
        if args.truncation is not None:
            raise UsageError("--truncation applies to matrix models only")
        spec = ansatz.get_spec(name)
        terms = parse_expression(args.word, spec.parse)
        value = RatFun.coerce(sum((c * ansatz.bracket(ansatz.Word(w), spec) for w, c in terms.items()), Poly()))
    elif name in models.CATALOGUE:
        model = models.get_model(name)
        terms = parse_expression(args.word, model.parse)
        value = RatFun.coerce(0)
        for w, c in terms.items():
            word = ansatz.Word(w)
            N = args.truncation or model.required_size(word)
            value = value + c * models.truncated_bracket(word, models.build(model, N))
    else:
        raise UsageError(f"unknown spec or model {name!r}; try 'list'")
    if bindings:
        value = value.substitute(bindings)
    if args.format == "json":
        print(json.dumps({"name": name, "expression": args.word, "at": bindings, "value": str(value)},
                         sort_keys=True))
    else:
        print(value)
    return 0


def cmd_verify(args) -> int:
    n_max = args.nmax if args.nmax is not None else args.n_max
    report = verify.run_suite(args.suite, n_max)
    if args.format == "text":
        for c in sorted(report.checks, key=lambda c: c.id):
            print(f"{c.status.upper():4}  {c.id}")
        print(f"{report.suite}: {'pass' if report.passed else 'fail'}")
    else:
        print(report.dumps(timings=args.timings))
    return 0 if report.passed else 1


TABLES = ("dumont-foata", "q-stirling", "genocchi")


def _table_rows(family: str, n_max: int) -> tuple[list[str], list[list]]:
    key = family.replace("_", "-")
    if key == "dumont-foata":
        return ["n", "value"], [[n, str(moments.dumont_foata(n))] for n in range(1, n_max + 1)]
    if key == "q-stirling":
        return ["n", "k", "value"], [[n, k, str(moments.q_stirling(n, k))]
                                     for n in range(n_max + 1) for k in range(n + 1)]
    if key == "genocchi":
        from .algebra import genocchi_numbers

        return ["n", "value"], [[2 * i + 2, str(g.numerator)] for i, g in enumerate(genocchi_numbers(n_max))]
    fam = moments.get_family(family)
    mu = moments.moments_matrix(fam.tridiag, n_max)
    return ["n", "value"], [[n, str(v)] for n, v in enumerate(mu)]


def cmd_table(args) -> int:
    n_max = args.nmax if args.nmax is not None else args.n_max
    if n_max is None or n_max < 0:
        raise UsageError("table needs a non-negative size")
    fmt = args.format or args.fmt or "json"
    header, rows = _table_rows(args.family, n_max)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps({"family": args.family, "columns": header, "rows": rows}, indent=2))
    return 0


def _dump_items(family: str, arg: str):
    fam = family.replace("_", "-")
    if fam == "permutation":
        shape = tableaux.shape_from_word(arg)
        for t in tableaux.permutation_tableaux(shape):
            yield t, tableaux.permutation_tableau_weight(t)
    elif fam == "typeB":
        for t in tableaux.typeB_tableaux(arg):
            yield t, tableaux.typeB_weight(t)
    elif fam == "alternative":
        shape = tableaux.Shape(tuple(int(x) for x in arg.split(",") if x))
        for t in tableaux.alternative_tableaux(shape):
            na, nb, nc = tableaux.alternative_stats(t)
            yield t, var(tableaux.ALPHA) ** na * var(tableaux.BETA) ** nb * var(tableaux.GAMMA) ** nc
    elif fam == "staircase":
        for t in tableaux.permutation_tableaux(tableaux.Shape.staircase(int(arg))):
            za, rb, sc = tableaux.staircase_pt_statistics(t)
            yield t, var(tableaux.ALPHA) ** za * var(tableaux.BETA) ** rb * var(tableaux.GAMMA) ** sc
    elif fam == "01":
        k, m = (int(x) for x in arg.split(","))
        for t in tableaux.zero_one_tableaux(k, m):
            yield t, var("q") ** tableaux.zeros_above_ones(t)
    elif fam == "rook-young":
        shape = tableaux.Shape.from_border(arg)
        for t in tableaux.rook_young_placements(shape):
            rooks = {i: j for (i, j), s in t.cells.items() if s == "R"}
            ea, qq = tableaux.rook_young_stats(shape, rooks)
            yield t, var("a") ** ea * var("q") ** qq
    elif fam == "rook-staircase":
        n = int(arg)
        shape = tableaux.staircase_rook_shape(n)
        for t in tableaux.rook_staircase_placements(n):
            rooks = {i: j for (i, j), s in t.cells.items() if s == "R"}
            ea, qq = tableaux.rook_staircase_stats(shape, rooks, n)
            yield t, var("a") ** ea * var("q") ** qq
    elif fam == "inversion":
        for t in tableaux.inversion_tableaux(int(arg)):
            yield t, tableaux.inversion_tableau_weight(t)
    else:
        raise UsageError(f"unknown tableau family {family!r}; known: {', '.join(DUMP_FAMILIES)}")


DUMP_FAMILIES = ("permutation", "typeB", "alternative", "staircase", "01", "rook-young", "rook-staircase", "inversion")


def cmd_dump(args) -> int:
    try:
        for t, w in _dump_items(args.family, args.arg):
            d = t.to_json()
            d["weight"] = str(w)
            print(json.dumps(d, separators=(",", ":"), sort_keys=True))
    except (ValueError, ansatz.WordError) as exc:
        raise UsageError(str(exc)) from exc
    return 0


def cmd_list(args) -> int:
    sections = {
        "specs": {k: v.description for k, v in sorted(ansatz.CATALOGUE.items())},
        "models": {k: v.description for k, v in sorted(models.CATALOGUE.items())},
        "families": {k: v.description for k, v in sorted(moments.FAMILIES.items())},
        "tables": {k: "" for k in TABLES},
        "suites": {k: v[2] for k, v in sorted(verify.SUITES.items())},
        "tableaux": {k: "" for k in DUMP_FAMILIES},
    }
    if args.kind:
        if args.kind not in sections:
            raise UsageError(f"unknown list kind {args.kind!r}; known: {', '.join(sections)}")
        sections = {args.kind: sections[args.kind]}
    if args.format == "json":
        print(json.dumps(sections, indent=2, sort_keys=True))
    else:
        for kind, items in sections.items():
            print(f"{kind}:")
            for name, desc in items.items():
                print(f"  {name}" + (f"  {desc}" if desc else ""))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matrix-ansatz", description="Exact Matrix Ansatz computations and identity checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate <W| expression |V> for a spec or model")
    e.add_argument("name")
    e.add_argument("word", help="word or expression, e.g. DDE, D+E, (D+E)^3")
    e.add_argument("--at", help="integer bindings, e.g. q=1,r=1")
    e.add_argument("--truncation", type=int, help="truncation size for models")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("n_max", nargs="?", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--timings", action="store_true", help="include per-check elapsed seconds")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a moment or number table")
    t.add_argument("family")
    t.add_argument("n_max", nargs="?", type=int)
    t.add_argument("fmt", nargs="?", choices=("json", "csv"))
    t.add_argument("--nmax", type=int)
    t.add_argument("--format", choices=("json", "csv"))
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("dump-tableaux", help="print every tableau of a family as JSON lines")
    d.add_argument("family", help=", ".join(DUMP_FAMILIES))
    d.add_argument("arg", help="word, size, or comma-separated parameters")
    d.set_defaults(func=cmd_dump)

    lst = sub.add_parser("list", help="list catalogue names")
    lst.add_argument("kind", nargs="?")
    lst.add_argument("--format", choices=("text", "json"), default="text")
    lst.set_defaults(func=cmd_list)
    return p


USAGE_ERRORS = (
    UsageError, ansatz.UnknownSpec, ansatz.WordError, models.UnknownModel, moments.UnknownFamily,
    verify.UnknownSuite, models.TruncationTooSmall,
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
