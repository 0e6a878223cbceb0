"""Command-line front end.

Results go to stdout as JSON; a one-line summary goes to stderr unless
``--quiet`` is given.  Exit codes: 0 success, 1 invalid input, 2 usage or
parse error, 3 no prediction applies.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import families as fam
from .complexes import build, euler_check, predicted_euler, taut_levels
from .enumeration import enumerate_colorings
from .graded import format_bits, parse_bits
from .graph import (
    ColoredGraph,
    GraphFormatError,
    betti,
    component_count_by_character,
    gamma_h,
    is_cycle_subgraph,
    is_unsplittable,
    loads,
    special_circuits,
    to_json,
    validate,
)
from .predictor import HypothesesUnmet, InconsistentPrediction, predict
from .verify import SUITES

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_UNMET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InvalidInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 as well, but we want our own message
        raise UsageError(message)


def _read_graph(path: str, skeleton: bool = False) -> ColoredGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return loads(text, skeleton)
    except (GraphFormatError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from exc


def _valid_graph(path: str) -> ColoredGraph:
    g = _read_graph(path)
    problems = validate(g)
    if problems:
        raise InvalidInput("invalid colored graph: " + "; ".join(problems))
    return g


def _char_key(g: ColoredGraph, mask: int) -> str:
    return format_bits(mask, g.d)


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> tuple[dict, int, str]:
    g = _read_graph(args.file)
    problems = validate(g)
    summary = "valid" if not problems else f"invalid: {len(problems)} problem(s)"
    return {"command": "validate", "valid": not problems, "violations": problems}, (EXIT_OK if not problems else EXIT_INVALID), summary


def cmd_invariants(args) -> tuple[dict, int, str]:
    g = _valid_graph(args.file)
    b0, b1 = betti(g)
    counts = component_count_by_character(g)
    circuits = [
        {"char": _char_key(g, h), "length": len(c), "edges": sorted(c)} for h, c in special_circuits(g)
    ]
    levels = taut_levels(build(g))
    doc = {
        "command": "invariants",
        "d": g.d,
        "b0": b0,
        "b1": b1,
        "gamma_components": {_char_key(g, h): counts[h] for h in sorted(counts)},
        "unsplittable": is_unsplittable(g),
        "special_circuits": circuits,
        "taut_levels": {str(k): v for k, v in levels.items()},
    }
    top = max((k for k, v in levels.items() if v and all(levels[j] for j in range(1, k + 1))), default=0)
    return doc, EXIT_OK, f"b1={b1}, {len(circuits)} special circuit(s), taut through k={top}"


def cmd_gamma_h(args) -> tuple[dict, int, str]:
    g = _valid_graph(args.file)
    try:
        mask = parse_bits(args.char)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(args.char) != g.d or not mask:
        raise UsageError(f"--char must be a non-zero bit string of length {g.d}")
    edges = gamma_h(g, mask)
    b0, b1 = betti(g, edges)
    rest = [e.id for e in g.edges if e.id not in edges]
    doc = {
        "command": "gamma-h",
        "char": args.char,
        "edges": [e.id for e in g.edges if e.id in edges],
        "components": b0,
        "b1": b1,
        "is_cycle": is_cycle_subgraph(g, edges),
        "complement_connected": betti(g, rest)[0] == 1,
    }
    return doc, EXIT_OK, f"Γ_H has {len(edges)} edge(s)"


def cmd_complex(args) -> tuple[dict, int, str]:
    g = _valid_graph(args.file)
    if not 1 <= args.k <= g.d:
        raise UsageError(f"--k must lie in 1..{g.d}")
    gc = build(g, extra_subdivision=args.subdivide)
    k = args.k
    b0, b1 = gc.betti(k)
    levels_k = taut_levels(gc)[k]
    doc = {
        "command": "complex",
        "k": k,
        "cells": {"0": len(gc.cells0), "1": len(gc.cells1)},
        "dim_C0": gc.constrained_space(k, 0).dim,
        "dim_C1": gc.constrained_space(k, 1).dim,
        "b0": b0,
        "b1": b1,
        "euler": b0 - b1,
        "euler_predicted": predicted_euler(g.d, k, g.euler_characteristic),
        "euler_ok": euler_check(gc, k),
        "k_taut": levels_k,
    }
    if args.chains:
        doc["cycle_basis"] = [gc.chain(v, k, 1).to_json(g.d) for v in gc.cycles(k).vectors()]
    return doc, EXIT_OK, f"C'(Γ|{k}): b0={b0}, b1={b1}, {'taut' if levels_k else 'not taut'}"


def cmd_predict(args) -> tuple[dict, int, str]:
    g = _valid_graph(args.file)
    try:
        p = predict(g)
    except HypothesesUnmet as exc:
        return {"command": "predict", "error": "hypotheses unmet", "reasons": exc.reasons}, EXIT_UNMET, "no prediction applies"
    except InconsistentPrediction as exc:
        return {"command": "predict", "error": "inconsistent", "reason": str(exc)}, EXIT_INVALID, str(exc)
    return p.to_json(), EXIT_OK, f"{p.theorem}: coker {p.coker}"


_FAMILY_PARAMS = {
    "theta": (),
    "k4": (),
    "mobius-d2": ("n",),
    "mobius-d3-special": ("n", "variant"),
    "mobius-d3-exceptional4": (),
    "mobius-d4": ("n",),
    "mobius-d4-alt": ("n",),
    "d3-tree-circuit": ("m", "b"),
    "genpetersen-d3": ("n", "k"),
    "petersen-d5": (),
}


def cmd_generate(args) -> tuple[dict, int, str]:
    wanted = _FAMILY_PARAMS[args.family]
    kwargs = {}
    for name in ("n", "k", "m", "b", "variant"):
        value = getattr(args, name)
        if value is None:
            continue
        if name not in wanted:
            raise UsageError(f"family {args.family} does not take --{name}")
        kwargs[name] = value
    if "b" not in kwargs and args.family == "d3-tree-circuit":
        kwargs["b"] = None
    try:
        g = fam.FAMILIES[args.family](**kwargs)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters for {args.family}: {exc}") from exc
    return to_json(g), EXIT_OK, f"{args.family}: {len(g.vertices)} vertices, {len(g.edges)} edges"


def cmd_enumerate(args) -> tuple[dict, int, str]:
    g = _read_graph(args.file, skeleton=True)
    if args.d < 1:
        raise UsageError("--d must be positive")
    try:
        found = enumerate_colorings(g, args.d, up_to_symmetry=args.up_to_symmetry)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc
    doc = {
        "command": "enumerate",
        "d": args.d,
        "up_to_symmetry": args.up_to_symmetry,
        "count": len(found),
        "colorings": [to_json(c) for c in found],
    }
    return doc, EXIT_OK, f"{len(found)} coloring(s)"


_SUITE_BOUNDS = {
    "graded-ring": ("d_max",),
    "oracle": ("d_max", "samples", "seed"),
    "chi": ("n_max",),
    "tautness": ("n_max", "enum_n_max"),
    "predictor": ("n_max", "m_max"),
    "witness": ("family", "n_max"),
    "mobparity": ("m_max",),
    "lambda-rank": ("m_max", "enum_n_max"),
    "enumeration": ("samples", "max_edges", "seed"),
    "constructions": ("m_max",),
}


def cmd_verify(args) -> tuple[dict, int, str]:
    allowed = _SUITE_BOUNDS[args.suite]
    bounds = {}
    for name in ("d_max", "n_max", "m_max", "enum_n_max", "samples", "max_edges", "seed", "family"):
        value = getattr(args, name)
        if value is None:
            continue
        if name not in allowed:
            raise UsageError(f"suite {args.suite} does not take --{name.replace('_', '-')}")
        bounds[name] = value
    start = time.perf_counter()
    try:
        checks = SUITES[args.suite](**bounds)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    failed = [c for c in checks if not c.ok]
    doc = {
        "command": "verify",
        "suite": args.suite,
        "bounds": bounds,
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "checks": [c.to_json() for c in checks],
    }
    elapsed = time.perf_counter() - start
    summary = f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} passed in {elapsed:.1f}s"
    return doc, (EXIT_OK if not failed else EXIT_INVALID), summary


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="abelcover", description="Invariants of (Z/2)^d-colored trivalent graphs.")
    p.add_argument("--quiet", action="store_true", help="suppress the summary on stderr")
    common = _Parser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress the summary on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check a colored graph file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", parents=[common], help="Betti numbers, Γ_H data, special circuits, taut levels")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("gamma-h", parents=[common], help="the cycle Γ_H for one character")
    s.add_argument("file")
    s.add_argument("--char", required=True, help="character as a bit string over x1..xd")
    s.set_defaults(func=cmd_gamma_h)

    s = sub.add_parser("complex", parents=[common], help="the constrained complex at level k")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--subdivide", type=int, default=0, help="extra subdivision points per edge")
    s.add_argument("--chains", action="store_true", help="include a cycle basis as chains")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("predict", parents=[common], help="predicted 2-torsion of the branched cover")
    s.add_argument("file")
    s.set_defaults(func=cmd_predict)

    s = sub.add_parser("generate", parents=[common], help="emit a standard colored graph")
    s.add_argument("family", choices=sorted(_FAMILY_PARAMS))
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--variant", choices=["tree", "four-circuit"])
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("enumerate", parents=[common], help="all G(d)-colorings of a trivalent graph")
    s.add_argument("file", help="graph file; \"d\" and colors may be omitted and are ignored")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--up-to-symmetry", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--d-max", "--d", dest="d_max", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--m-max", type=int)
    s.add_argument("--enum-n-max", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--family", choices=["all", "mobius-d4", "petersen-d5"])
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    quiet = "--quiet" in (argv if argv is not None else sys.argv[1:])
    try:
        args = parser.parse_args(argv)
        doc, code, summary = args.func(args)
    except UsageError as exc:
        if not quiet:
            print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"error": "usage", "message": str(exc)}))
        return EXIT_USAGE
    except InvalidInput as exc:
        if not quiet:
            print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"error": "invalid input", "message": str(exc)}))
        return EXIT_INVALID
    print(json.dumps(doc, indent=2))
    if not args.quiet:
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
