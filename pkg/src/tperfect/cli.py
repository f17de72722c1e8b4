"""Command-line front end.

One executable with the subcommands gen, recognize, color, oracle,
tminor, holes, and corpus.  Exit status 0 means a definite answer (of
either sign), 2 means the search budget ran out, 1 means the input or
invocation was bad (including fork-containing inputs, which are out of
scope rather than a verdict).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Any, Optional, Sequence

from .color import three_color
from .graph import (
    Graph,
    GraphError,
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph6,
)
from .holes import enumerate_induced_cycles
from .patterns import named_graph
from .polytope import (
    build_system,
    enumerate_vertices,
    strong_t_perfect_check,
    t_perfect_oracle,
)
from .recognize import ForkInputError, recognize
from .tminor import INCONCLUSIVE, TMinorSearch, has_forbidden_t_minor

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


class _CliError(Exception):
    """Invocation or input problem; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _CliError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc


def _parse_graph(text: str, fmt: str) -> Graph:
    stripped = text.strip()
    if not stripped:
        raise _CliError("empty graph input")
    if fmt == "auto":
        first = stripped.splitlines()[0].split()
        looks_edgelist = len(first) == 2 and all(
            tok.lstrip("-").isdigit() for tok in first
        )
        fmt = "edgelist" if looks_edgelist or stripped.startswith("#") else "graph6"
    try:
        if fmt == "edgelist":
            return parse_edge_list(text)
        return parse_graph6(stripped.splitlines()[0])
    except GraphError as exc:
        raise _CliError(str(exc)) from exc


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    text = _read_text(args.graphfile)
    return _parse_graph(text, args.format), text


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _emit_report(
    args: argparse.Namespace,
    argv: Sequence[str],
    input_text: str,
    payload: dict[str, Any],
    fallbacks: Sequence[str],
    started: float,
) -> None:
    report = {
        "command": list(argv),
        "input_sha256": _digest(input_text),
        "payload": payload,
        "fallback_steps_used": list(fallbacks),
        "wall_time_s": round(time.monotonic() - started, 6),
    }
    print(json.dumps(report, sort_keys=True))


def _add_graph_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("graphfile", help="edge-list or graph6 file, '-' for stdin")
    p.add_argument(
        "--format", choices=("auto", "edgelist", "graph6"), default="auto"
    )


# -- subcommands -------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    try:
        g = named_graph(args.name, *args.params)
    except (GraphError, ValueError) as exc:
        raise _CliError(str(exc)) from exc
    if args.graph6:
        print(format_graph6(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    g, text = _load_graph(args)
    verdict = recognize(g, budget=args.budget)
    if args.json:
        _emit_report(args, argv, text, verdict.to_dict(),
                     verdict.fallback_steps_used, started)
    else:
        print(f"answer: {verdict.answer}")
        if verdict.certificate is not None:
            print(f"certificate: {json.dumps(verdict.certificate, sort_keys=True)}")
        for trace in verdict.trace:
            print(
                f"component {list(trace.vertices)}: branch={trace.branch} "
                f"accepted={trace.accepted}"
            )
    if args.figure:
        from . import viz

        emb = verdict.certificate or {}
        highlight = emb.get("embedding", {}).values() if emb else ()
        viz.draw_graph(g, args.figure, title=verdict.answer,
                       highlight=list(highlight))
    return EXIT_INCONCLUSIVE if verdict.answer == "inconclusive" else EXIT_OK


def _cmd_color(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    g, text = _load_graph(args)
    verdict = recognize(g, budget=args.budget)
    if verdict.answer == "inconclusive":
        print("recognition inconclusive; no coloring attempted")
        return EXIT_INCONCLUSIVE
    if not verdict.is_t_perfect:
        raise _CliError("input is not t-perfect; nothing to color")
    coloring = three_color(g, verdict=verdict)
    if args.json:
        payload = {
            "colors": list(coloring.colors),
            "classes": [list(c) for c in coloring.classes()],
            "branches": [
                {"component": list(comp), "branch": tag}
                for comp, tag in coloring.branches
            ],
            "num_colors": coloring.num_colors,
        }
        _emit_report(args, argv, text, payload,
                     verdict.fallback_steps_used, started)
    else:
        print(f"colors used: {coloring.num_colors}")
        for i, cls in enumerate(coloring.classes()):
            print(f"class {i}: {' '.join(map(str, cls))}")
        for comp, tag in coloring.branches:
            print(f"component {list(comp)}: branch={tag}")
    if args.figure:
        from . import viz

        viz.draw_graph(g, args.figure, title=f"{coloring.num_colors}-coloring",
                       colors=coloring.colors)
    return EXIT_OK


def _format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _cmd_oracle(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    g, text = _load_graph(args)
    if args.mode == "tperfect":
        vertices = enumerate_vertices(build_system(g))
        fractional = [p for p in vertices if any(x.denominator != 1 for x in p)]
        verdict = not fractional and t_perfect_oracle(g)
        payload = {
            "mode": "tperfect",
            "t_perfect": verdict,
            "vertex_count": len(vertices),
            "fractional_vertices": [
                [_format_fraction(x) for x in p] for p in fractional
            ],
        }
        if args.json:
            _emit_report(args, argv, text, payload, (), started)
        else:
            print(f"t-perfect: {'yes' if verdict else 'no'}")
            print(f"polytope vertices: {len(vertices)}")
            for p in fractional:
                print("fractional: (" + ", ".join(_format_fraction(x) for x in p) + ")")
        return EXIT_OK
    report = strong_t_perfect_check(g, args.wmax)
    payload = {
        "mode": "strong",
        "w_max": report.w_max,
        "passed": report.passed,
        "checked": report.checked,
        "violation": None if report.violation is None else {
            "w": list(report.violation[0]),
            "alpha_w": report.violation[1],
            "cover_cost": report.violation[2],
        },
    }
    if args.json:
        _emit_report(args, argv, text, payload, (), started)
    else:
        print(report.describe())
    return EXIT_OK


def _cmd_tminor(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    g, text = _load_graph(args)
    result = has_forbidden_t_minor(g, budget=args.budget)
    if result is INCONCLUSIVE:
        print("inconclusive: search budget exhausted")
        return EXIT_INCONCLUSIVE
    if result is None:
        print("no forbidden t-minor")
        return EXIT_OK
    sys.stdout.write(result.format_script())
    return EXIT_OK


def _cmd_holes(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    g, text = _load_graph(args)
    if args.min < 3:
        raise _CliError(f"--min must be >= 3, got {args.min}")
    for cyc in sorted(
        enumerate_induced_cycles(g, args.min, args.max), key=lambda c: (len(c), c)
    ):
        print(" ".join(map(str, cyc)))
    return EXIT_OK


def _cmd_corpus(args: argparse.Namespace, argv: Sequence[str], started: float) -> int:
    text = _read_text(args.graphfile)
    search = TMinorSearch(budget=args.budget)
    counts: dict[str, int] = {}
    rows = ["graph6\tn\tm\trecognize\ttminor_free\tpolytope\tconsistent"]
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = parse_graph6(line)
        except GraphError as exc:
            raise _CliError(f"bad graph6 line {line!r}: {exc}") from exc
        try:
            verdict = recognize(g, search=search)
        except ForkInputError:
            rows.append(f"{line}\t{g.n}\t{g.m}\tfork-input\t-\t-\tskipped")
            counts["fork-input"] = counts.get("fork-input", 0) + 1
            continue
        minor = search.find(g)
        minor_free = "inconclusive" if minor is INCONCLUSIVE else str(minor is None)
        oracle = str(t_perfect_oracle(g))
        consistent = str(
            minor is not INCONCLUSIVE
            and verdict.answer != "inconclusive"
            and (verdict.is_t_perfect == (minor is None) == (oracle == "True"))
        )
        rows.append(
            f"{line}\t{g.n}\t{g.m}\t{verdict.answer}\t{minor_free}\t"
            f"{oracle}\t{consistent}"
        )
        counts[verdict.answer] = counts.get(verdict.answer, 0) + 1
        if consistent != "True":
            counts["inconsistent"] = counts.get("inconsistent", 0) + 1
    output = "\n".join(rows) + "\n"
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    if args.figure:
        from . import viz

        viz.draw_corpus_summary(dict(sorted(counts.items())), args.figure)
    return EXIT_ERROR if counts.get("inconsistent") else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tperfect",
        description="Recognition, coloring, and exact oracles for t-perfect "
        "fork-free graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="emit a named graph")
    p.add_argument("name", help="claw, fork, cycle, path, complete, wheel, "
                   "c7_squared, c10_squared, figure3")
    p.add_argument("params", nargs="*", help="size or figure3 variant/flags")
    p.add_argument("--graph6", action="store_true", help="emit graph6 instead "
                   "of an edge list")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("recognize", help="decide t-perfection with certificate")
    _add_graph_arguments(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=None,
                   help="t-minor search node budget")
    p.add_argument("--figure", help="also draw the graph to this file")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("color", help="3-color a t-perfect input")
    _add_graph_arguments(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--figure", help="also draw the coloring to this file")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("oracle", help="exact polytope / cover-cost oracles")
    _add_graph_arguments(p)
    p.add_argument("--mode", choices=("tperfect", "strong"), default="tperfect")
    p.add_argument("--wmax", type=int, default=1,
                   help="weight grid bound for --mode strong")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("tminor", help="exhaustive forbidden-t-minor search")
    _add_graph_arguments(p)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_tminor)

    p = sub.add_parser("holes", help="list induced cycles")
    _add_graph_arguments(p)
    p.add_argument("--min", type=int, default=4)
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(func=_cmd_holes)

    p = sub.add_parser("corpus", help="cross-oracle consistency over graph6 lines")
    _add_graph_arguments(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--output", default="-", help="TSV destination ('-' = stdout)")
    p.add_argument("--figure", help="verdict summary chart destination")
    p.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.monotonic()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, argv, started)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ForkInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
