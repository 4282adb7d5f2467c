"""Command-line front end.

Subcommands: enumerate, apply, biject, graph, verify, dim, string-datum.
Streams are line-delimited JSON; graphs and reports are single JSON or DOT
documents.  Exit codes: 0 for success (including an absent operator image,
printed as the literal ``none``), 1 for a verification failure, 2 for an
input error.  Set NO_COLOR to suppress colored pass/fail lines.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from . import bijection, crystal, gtpattern, ssyt
from .core import Partition, as_partition, partitions_up_to, weyl_dimension

_PALETTE = ("blue", "red", "forestgreen", "darkorange", "purple", "teal", "maroon", "goldenrod")


def _parse_partition(text: str) -> Partition:
    if text.strip() == "":
        return ()
    return as_partition(int(piece) for piece in text.split(","))


def _load_payload(text: str) -> Any:
    """Inline JSON when the value starts with '{', otherwise a file path."""
    if text.lstrip().startswith("{"):
        return json.loads(text)
    with open(text, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _element_from_args(args: argparse.Namespace):
    """Return ('gtp', pattern) or ('ssyt', tableau) from the payload options."""
    if getattr(args, "gtp", None) is not None:
        return "gtp", gtpattern.GTPattern.from_dict(_load_payload(args.gtp))
    return "ssyt", ssyt.Tableau.from_dict(_load_payload(args.ssyt))


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _status(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _color_enabled():
        return f"\x1b[32m{word}\x1b[0m" if ok else f"\x1b[31m{word}\x1b[0m"
    return word


def cmd_enumerate(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.shape)
    patterns = gtpattern.enumerate_patterns(args.n, lam)
    for p in patterns:
        element = bijection.pattern_to_tableau(p) if args.model == "ssyt" else p
        if args.format == "text":
            print(element.pretty())
            print()
        else:
            print(_dumps(element.to_dict()))
    return 0


def cmd_apply(args: argparse.Namespace) -> int:
    kind, element = _element_from_args(args)
    if kind == "gtp":
        op = gtpattern.lower_gtp if args.op == "f" else gtpattern.raise_gtp
    else:
        op = ssyt.lower_ssyt if args.op == "f" else ssyt.raise_ssyt
    result = op(element, args.i)
    if result is None:
        print("none")
    elif args.format == "text":
        print(result.pretty())
    else:
        print(_dumps(result.to_dict()))
    return 0


def cmd_biject(args: argparse.Namespace) -> int:
    kind, element = _element_from_args(args)
    image = bijection.pattern_to_tableau(element) if kind == "gtp" else bijection.tableau_to_pattern(element)
    print(_dumps(image.to_dict()))
    return 0


def _graph_to_dot(graph: crystal.CrystalGraph, labels: dict[str, str]) -> str:
    ids = {key: f"v{k}" for k, (key, _element) in enumerate(graph.vertices)}
    lines = ["digraph crystal {", "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    for key, _element in graph.vertices:
        lines.append(f'  {ids[key]} [label="{labels[key]}"];')
    for u, i, v in graph.edges:
        color = _PALETTE[(i - 1) % len(_PALETTE)]
        lines.append(f'  {ids[u]} -> {ids[v]} [label="{i}", color="{color}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_graph(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.shape)
    model: crystal.CrystalModel
    if args.model == "ssyt":
        model = crystal.tableau_model(args.n)
        elements = [bijection.pattern_to_tableau(p) for p in gtpattern.enumerate_patterns(args.n, lam)]
    else:
        model = crystal.pattern_model(args.n)
        elements = gtpattern.enumerate_patterns(args.n, lam)
    graph = crystal.build_graph(model, elements)
    if args.format == "json":
        print(json.dumps(graph.to_dict(), indent=2, sort_keys=True))
    else:
        labels = {model.canonical_key(e): e.compact() for e in elements}
        print(_graph_to_dot(graph, labels))
    return 0


def cmd_dim(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.shape)
    print(weyl_dimension(args.n, lam))
    return 0


def cmd_string_datum(args: argparse.Namespace) -> int:
    pattern = gtpattern.GTPattern.from_dict(_load_payload(args.gtp))
    print(json.dumps(gtpattern.string_datum(pattern).to_dict(), indent=2, sort_keys=True))
    return 0


def _counting_check(patterns: Sequence[gtpattern.GTPattern]) -> int:
    """Letter-count identities: diamond numbers and sums against direct counts."""
    bad = 0
    for p in patterns:
        t = bijection.pattern_to_tableau(p)
        n = p.n

        def count(letter: int, row: int) -> int:
            if not 1 <= row <= len(t.rows):
                return 0
            return sum(1 for x in t.rows[row - 1] if x == letter)

        for i in range(1, n + 1):
            for k in range(1, n + 1):
                if bijection.letter_count_in_row(p, i, k) != count(i, k):
                    bad += 1
        for i in range(1, n):
            for j in range(0, i + 1):
                if gtpattern.diamond_a(p, i, j) != count(i, j) - count(i + 1, j + 1):
                    bad += 1
            for j in range(1, i + 2):
                if gtpattern.diamond_b(p, i, j) != count(i + 1, j) - count(i, j - 1):
                    bad += 1
            for ell in range(0, i + 2):
                low = sum(count(i, r) for r in range(ell, n + 1)) - sum(count(i + 1, r) for r in range(ell + 1, n + 1))
                if gtpattern.sum_a(p, i, ell) != low:
                    bad += 1
                high = sum(count(i + 1, r) for r in range(1, ell + 1)) - sum(count(i, r) for r in range(1, ell))
                if gtpattern.sum_b(p, i, ell) != high:
                    bad += 1
    return bad


def _identity_check(patterns: Sequence[gtpattern.GTPattern]) -> int:
    """Internal algebraic identities of the diamond data and the weight."""
    bad = 0
    for p in patterns:
        n = p.n
        for i in range(1, n):
            for j in range(1, i + 2):
                if gtpattern.diamond_b(p, i, j) != -gtpattern.diamond_a(p, i, j - 1):
                    bad += 1
            if gtpattern.diamond_a(p, i, 0) > 0 or gtpattern.diamond_b(p, i, i + 1) > 0:
                bad += 1
            a0 = gtpattern.sum_a(p, i, 0)
            for j in range(0, i + 2):
                if gtpattern.sum_a(p, i, j) - gtpattern.sum_b(p, i, j) != a0:
                    bad += 1
            if -gtpattern.sum_b(p, i, i + 1) != a0:
                bad += 1
        first, a_form, b_form = gtpattern.weight_expressions(p)
        if a_form != b_form:
            bad += 1
        shifts = {a_form[k] - first[k] for k in range(n)}
        if len(shifts) != 1 or shifts != {sum(first)}:
            bad += 1
    return bad


def _round_trip_check(patterns: Sequence[gtpattern.GTPattern], tableaux: Sequence[ssyt.Tableau]) -> int:
    bad = 0
    for p in patterns:
        if bijection.tableau_to_pattern(bijection.pattern_to_tableau(p)) != p:
            bad += 1
    for t in tableaux:
        if bijection.pattern_to_tableau(bijection.tableau_to_pattern(t)) != t:
            bad += 1
    return bad


def verify_shape(n: int, lam: Partition) -> dict[str, Any]:
    """Run every check for one shape; returns the machine-readable record."""
    patterns = gtpattern.enumerate_patterns(n, lam)
    tableaux = ssyt.enumerate_tableaux(n, lam)
    pm = crystal.pattern_model(n)
    tm = crystal.tableau_model(n)

    checks: dict[str, dict[str, Any]] = {}

    def record(name: str, violations: int, details: Optional[list] = None) -> None:
        checks[name] = {"pass": violations == 0, "violations": violations}
        if details:
            checks[name]["details"] = details

    record("dimension", 0 if len(patterns) == weyl_dimension(n, lam) else 1)
    axioms_p = crystal.verify_axioms(pm, patterns)
    record("axioms-patterns", len(axioms_p.violations), [v.to_dict() for v in axioms_p.violations])
    axioms_t = crystal.verify_axioms(tm, tableaux)
    record("axioms-tableaux", len(axioms_t.violations), [v.to_dict() for v in axioms_t.violations])
    iso = crystal.verify_isomorphism(pm, patterns, tm, bijection.pattern_to_tableau, elements_b=tableaux)
    record("isomorphism", len(iso.violations), [v.to_dict() for v in iso.violations])
    record("counting-identities", _counting_check(patterns))
    record("algebraic-identities", _identity_check(patterns))
    record("round-trip", _round_trip_check(patterns, tableaux))
    graph = crystal.build_graph(pm, patterns)
    connected = crystal.connectivity(graph) == 1
    unique_hw = len(crystal.highest_weight_elements(pm, patterns)) == 1
    record("connected-unique-source", 0 if (connected and unique_hw) else 1)

    return {
        "n": n,
        "lambda": list(lam),
        "elements": len(patterns),
        "checks": checks,
        "pass": all(entry["pass"] for entry in checks.values()),
    }


def cmd_verify(args: argparse.Namespace) -> int:
    if args.gtp is not None or args.ssyt is not None:
        kind, element = _element_from_args(args)
        n = element.n
        lam = element.top_row if kind == "gtp" else element.shape
        shapes = [(n, as_partition(lam))]
    elif args.all_upto is not None:
        if args.n is None:
            raise ValueError("--all-upto requires -n")
        shapes = [(args.n, lam) for lam in partitions_up_to(args.all_upto, args.n)]
    else:
        if args.n is None or args.shape is None:
            raise ValueError("verify needs -n and -l, or --all-upto, or an element payload")
        shapes = [(args.n, _parse_partition(args.shape))]

    records = [verify_shape(n, lam) for n, lam in shapes]
    all_pass = all(record["pass"] for record in records)
    report = {"shapes": records, "pass": all_pass}

    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2, sort_keys=True)
            handle.write("\n")
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for record in records:
            failed = sorted(name for name, entry in record["checks"].items() if not entry["pass"])
            status = _status(not failed)
            lam_text = ",".join(str(x) for x in record["lambda"]) or "-"
            detail = f" failing: {', '.join(failed)}" if failed else ""
            print(f"{status} n={record['n']} shape={lam_text} elements={record['elements']}{detail}")
        print(f"{_status(all_pass)} {len(records)} shape(s) verified")
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtcrystal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("-n", type=int, required=required, help="number of pattern rows / alphabet bound")
        p.add_argument("-l", "--shape", required=required, help="comma-separated top row, e.g. 3,1,0")

    p_enum = sub.add_parser("enumerate", help="stream all elements of one crystal")
    add_shape(p_enum)
    p_enum.add_argument("--model", choices=("gtp", "ssyt"), default="gtp")
    p_enum.add_argument("--format", choices=("json", "text"), default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_apply = sub.add_parser("apply", help="apply a crystal operator to one element")
    p_apply.add_argument("op", choices=("f", "e"), help="f lowers, e raises")
    p_apply.add_argument("i", type=int, help="operator label")
    group = p_apply.add_mutually_exclusive_group(required=True)
    group.add_argument("--gtp", help="pattern payload (inline JSON or file path)")
    group.add_argument("--ssyt", help="tableau payload (inline JSON or file path)")
    p_apply.add_argument("--format", choices=("json", "text"), default="json")
    p_apply.set_defaults(func=cmd_apply)

    p_biject = sub.add_parser("biject", help="map a pattern to its tableau or back")
    group = p_biject.add_mutually_exclusive_group(required=True)
    group.add_argument("--gtp", help="pattern payload (inline JSON or file path)")
    group.add_argument("--ssyt", help="tableau payload (inline JSON or file path)")
    p_biject.set_defaults(func=cmd_biject)

    p_graph = sub.add_parser("graph", help="export one crystal graph")
    add_shape(p_graph)
    p_graph.add_argument("--model", choices=("gtp", "ssyt"), default="gtp")
    p_graph.add_argument("--format", choices=("dot", "json"), default="dot")
    p_graph.set_defaults(func=cmd_graph)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    add_shape(p_verify, required=False)
    p_verify.add_argument("--all-upto", type=int, help="sweep all shapes with at most this many boxes")
    p_verify.add_argument("--gtp", help="take the shape from a pattern payload")
    p_verify.add_argument("--ssyt", help="take the shape from a tableau payload")
    p_verify.add_argument("--json", action="store_true", help="print the JSON report instead of the summary")
    p_verify.add_argument("--report", help="also write the JSON report to this file")
    p_verify.set_defaults(func=cmd_verify)

    p_dim = sub.add_parser("dim", help="dimension of the crystal of one shape")
    add_shape(p_dim)
    p_dim.set_defaults(func=cmd_dim)

    p_sd = sub.add_parser("string-datum", help="closed-form string exponents of a pattern")
    p_sd.add_argument("--gtp", required=True, help="pattern payload (inline JSON or file path)")
    p_sd.set_defaults(func=cmd_string_datum)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
