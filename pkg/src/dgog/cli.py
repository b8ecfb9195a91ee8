"""Command-line front end.

Exit status is 0 on success, 1 when the input is rejected (with a single
``error:<kind>: message`` line on stderr) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import boundary, hull, intlin, kirchberg, ktheory, tree, words
from .errors import DgogError, ParseError
from .gog import GraphOfGroups, load


def _read_graph(path: str, strict: bool = False) -> GraphOfGroups:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DgogError(f"cannot read {path}: {exc.strerror}", kind="io") from None
    return load(text, allow_sources=not strict)


def _parse_matrix(text: str) -> intlin.Matrix:
    try:
        rows = json.loads(text)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("expected a list of rows")
        return intlin.as_matrix(rows)
    except (ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad matrix literal {text!r}: {exc}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_validate(args) -> None:
    g = _read_graph(args.graph, strict=args.strict)
    if args.format == "json":
        _emit({"valid": True, "vertices": len(g.vertices), "edges": len(g.edges),
               "sources": g.sources(), "graph": g.to_json()})
    else:
        print("valid")


def _word_out(w: words.NormalWord, fmt: str) -> None:
    if fmt == "json":
        _emit({"range": w.range, "source": w.source,
               "letters": [{"rep": l.rep, "edge": l.edge, "reversed": l.reversed}
                           for l in w.letters],
               "tail": w.tail, "word": words.format_word(w)})
    else:
        print(words.format_word(w))


def cmd_normalize(args) -> None:
    g = _read_graph(args.graph)
    _word_out(words.parse_word(g, args.word), args.format)


def cmd_mul(args) -> None:
    g = _read_graph(args.graph)
    a, b = words.parse_word(g, args.w1), words.parse_word(g, args.w2)
    _word_out(words.multiply(g, a, b), args.format)


def cmd_tree(args) -> None:
    g = _read_graph(args.graph)
    base = args.base if args.base is not None else next(iter(g.vertices))
    ball = tree.expand(g, base, args.depth)
    if args.format == "json":
        sys.stdout.write(ball.dumps())
    else:
        sys.stdout.write(ball.to_dot())


def cmd_ktheory(args) -> None:
    g = _read_graph(args.graph)
    r = ktheory.k_theory(g)
    if args.format == "text":
        print(f"vertices: {' '.join(r.vertices)}")
        print(f"N: {r.N}")
        print(f"M: {r.M}")
        print(f"SNF(1-N): {list(r.snf_one_minus_N)}")
        print(f"SNF(1-M): {list(r.snf_one_minus_M)}")
        print(f"K0: {r.K0}")
        print(f"K1: {r.K1}")
    else:
        _emit(r.to_json())


def cmd_check_kirchberg(args) -> None:
    g = _read_graph(args.graph)
    rep = kirchberg.check_kirchberg(g, args.cycle_bound, args.k_bound)
    if args.format == "text":
        for name, value in rep.to_json().items():
            print(f"{name}: {value if isinstance(value, str) else value['status']}")
    else:
        _emit(rep.to_json())


def cmd_realize(args) -> None:
    g = kirchberg.realize(_parse_matrix(args.t), _parse_matrix(args.s))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(g.dumps())
    else:
        sys.stdout.write(g.dumps())


def cmd_act(args) -> None:
    g = _read_graph(args.graph)
    gamma = words.parse_word(g, args.word)
    alpha = boundary.parse_lasso(g, args.lasso)
    result = boundary.act(g, gamma, alpha, args.max_steps)
    periodic = isinstance(result, boundary.LassoPath)
    if args.format == "text":
        print(boundary.format_lasso(result) if periodic else str(result))
        return
    if periodic:
        _emit({"periodic": True, "lasso": boundary.format_lasso(result),
               "vertex": result.vertex})
    else:
        _emit({"periodic": False, "flag": result.flag, "vertex": result.vertex,
               "prefix": ".".join(map(str, result.letters))})


def cmd_hull_mul(args) -> None:
    g = _read_graph(args.graph)
    s = hull.make(g, words.parse_word(g, args.lam1), words.parse_word(g, args.mu1))
    t = hull.make(g, words.parse_word(g, args.lam2), words.parse_word(g, args.mu2))
    r = hull.compose(g, s, t)
    if args.format == "json":
        _emit({"zero": r.is_zero, "element": r.to_json()})
    else:
        print(r)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dgog", description="Directed graphs of cyclic groups.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def graph_cmd(name, func, help_, formats=("text", "json"), default=None):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph document, or - for standard input")
        sp.add_argument("--format", choices=formats, default=default or formats[0])
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("validate", cmd_validate, "check a graph document")
    sp.add_argument("--strict", action="store_true", help="also reject vertices with no incoming edge")

    sp = graph_cmd("normalize", cmd_normalize, "normal form of a word")
    sp.add_argument("word", help='word literal such as "3 e 0" or "1 e~ 2"; prefix @v for a vertex')

    sp = graph_cmd("mul", cmd_mul, "product of two words")
    sp.add_argument("w1")
    sp.add_argument("w2")

    sp = graph_cmd("tree", cmd_tree, "ball in the directed Bass-Serre tree", ("dot", "json"))
    sp.add_argument("--base", help="base vertex (default: first vertex)")
    sp.add_argument("--depth", type=int, default=2)

    graph_cmd("ktheory", cmd_ktheory, "K-theory of a graph of Z groups", ("json", "text"))

    sp = graph_cmd("check-kirchberg", cmd_check_kirchberg, "sufficient Kirchberg conditions",
                   ("json", "text"))
    sp.add_argument("--cycle-bound", type=int, default=kirchberg.DEFAULT_CYCLE_BOUND)
    sp.add_argument("--k-bound", type=int, default=kirchberg.DEFAULT_K_BOUND)

    sp = sub.add_parser("realize", help="graph with K0 = coker T and K1 = coker S")
    sp.add_argument("--t", required=True, help="square integer matrix as JSON rows")
    sp.add_argument("--s", required=True, help="square integer matrix as JSON rows")
    sp.add_argument("--out", help="write the graph here instead of standard output")
    sp.set_defaults(func=cmd_realize)

    sp = graph_cmd("act", cmd_act, "action of a word on an eventually periodic path",
                   ("json", "text"))
    sp.add_argument("word")
    sp.add_argument("lasso", help="prefix|cycle with letters h:e joined by dots")
    sp.add_argument("--max-steps", type=int, default=boundary.DEFAULT_MAX_STEPS)

    sp = graph_cmd("hull-mul", cmd_hull_mul, "product of two inverse-hull elements")
    for name in ("lam1", "mu1", "lam2", "mu2"):
        sp.add_argument(name)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DgogError as exc:
        print(f"error:{exc.kind}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error:invalid-input: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
