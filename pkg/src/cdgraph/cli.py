"""Command-line interface: ``construct``, ``check``, ``spectrum`` and ``verify``.

Exit codes: 0 success / all checks pass, 1 domain-level failure (a failed
check, a closed-form mismatch, a disconnected graph where connectivity is
required), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from .closed_forms import verify_family
from .constructors import Family, FamilyParams, ParameterError, admissible_n1
from .graph_core import Graph, GraphError, new_graph
from .spectral import (
    DisconnectedGraphError,
    char_poly,
    distance_laplacian,
    laplacian,
    matrix_spectrum,
    spanning_tree_count,
)
from .validity import full_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- graph files ---------------------------------------------------------------


def parse_graph_text(text: str) -> tuple[Graph, list[str] | None]:
    """Parse a JSON graph document or a plain edge list; returns the graph and any labels."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_edgelist(text), None


def _parse_json(text: str) -> tuple[Graph, list[str] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError('field "n" must be an integer')
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError('field "edges" must be a list of [u, v] pairs')
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphError(f'field "edges"[{k}] must be a pair of integers, got {e!r}')
    labels = doc.get("labels")
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise GraphError(f'field "labels" has {len(labels)} entries, expected {n}')
    return new_graph(n, [tuple(e) for e in edges]), labels


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].lstrip("-").isdigit():
                raise GraphError(f'line {lineno}: expected header "n <count>", got {raw!r}')
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected two vertex indices, got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphError('empty edge list: missing header "n <count>"')
    return new_graph(n, edges)


def graph_to_json(g: Graph, labels: Sequence[str] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def graph_to_edgelist(g: Graph, labels: Sequence[str] | None = None) -> str:
    head = [f"# labels: {','.join(labels)}\n"] if labels is not None else []
    return "".join(head + [f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.sorted_edges()])


_SCALAR_LIST = re.compile(r"\[\s*((?:-?\d+|\"[^\"\n]*\"|true|false|null)(?:,\s*(?:-?\d+|\"[^\"\n]*\"|true|false|null))*)\s*\]")


def dump(doc: Any) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _SCALAR_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


# -- helpers -------------------------------------------------------------------


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_labels(spec: str | None, n: int) -> list[str] | None:
    if spec is None:
        return None
    labels = [s.strip() for s in spec.split(",")]
    if len(labels) != n:
        raise UsageError(f"--labels has {len(labels)} entries, graph has {n} vertices")
    return labels


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"4..12"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"invalid range {text!r}; expected N or A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _load_graph(args) -> tuple[Graph, list[str] | None]:
    g, labels = parse_graph_text(_read_input(args.input))
    cli_labels = _parse_labels(args.labels, g.n)
    return g, cli_labels if cli_labels is not None else labels


# -- commands ------------------------------------------------------------------


def cmd_construct(args) -> int:
    family = Family(args.family)
    params = FamilyParams(family, args.n, args.n1 if args.n1 is not None else 0)
    g = params.build()
    labels = _parse_labels(args.labels, g.n)
    if args.format == "edgelist":
        _write_output(graph_to_edgelist(g, labels), args.output)
    else:
        doc = graph_to_json(g, labels)
        doc["family"] = {"name": family.value, "n": params.n, "n1": params.n1}
        _write_output(dump(doc), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    g, labels = _load_graph(args)
    report = full_report(g)
    doc = {"command": "check", "input": graph_to_json(g, labels), "results": report.to_json()}
    _write_output(dump(doc), args.output)
    return EXIT_OK if report.passes_necessary else EXIT_FAIL


def cmd_spectrum(args) -> int:
    g, labels = _load_graph(args)
    doc: dict[str, Any] = {"command": "spectrum", "input": graph_to_json(g, labels), "which": args.which}
    if args.which == "laplacian":
        m = laplacian(g)
        bound = g.n
    else:
        try:
            m = distance_laplacian(g)
        except DisconnectedGraphError as exc:
            doc["error"] = str(exc)
            doc["witness"] = list(exc.pair)
            _write_output(dump(doc), args.output)
            return EXIT_FAIL
        bound = 2 * g.n if all(x >= -2 for row in m.rows for x in row) else None
    poly = char_poly(m)
    spec = matrix_spectrum(m, bound)
    results: dict[str, Any] = {
        "char_poly": [str(c) for c in poly.coeffs],
        "char_poly_text": str(poly),
        "spectrum": spec.to_json(),
        "residual": [str(c) for c in spec.residual.coeffs] if spec.residual is not None else None,
    }
    if args.which == "laplacian":
        results["spanning_tree_count"] = str(spanning_tree_count(g))
    doc["results"] = results
    _write_output(dump(doc), args.output)
    return EXIT_OK


def family_points(family: Family, ns: Sequence[int], n1s: Sequence[int] | None) -> list[FamilyParams]:
    points = []
    for n in ns:
        if family in (Family.COCKTAIL_PARTY, Family.SUPERGRAPH) and (n < 4 or n % 2):
            continue
        if family is Family.TWO_CLIQUE and n < 3:
            continue
        allowed = admissible_n1(family, n)
        for n1 in allowed if n1s is None else [k for k in n1s if k in allowed]:
            points.append(FamilyParams(family, n, n1))
    return sorted(points, key=FamilyParams.sort_key)


def cmd_verify(args) -> int:
    family = Family(args.family)
    ns = parse_range(args.n)
    n1s = parse_range(args.n1) if args.n1 is not None else None
    if family is Family.COCKTAIL_PARTY and n1s is not None:
        raise UsageError("the cocktail family takes no --n1")
    points = family_points(family, ns, n1s)
    if not points:
        raise UsageError("no admissible parameter points in the requested ranges")
    reports = [verify_family(p) for p in points]
    ok = all(r.ok for r in reports)
    printed_mismatch = sum(not r.tree_match_printed for r in reports)
    doc = {
        "command": "verify",
        "input": {"family": family.value, "n": args.n, "n1": args.n1},
        "results": [r.to_json() for r in reports],
        "summary": {
            "points": len(reports),
            "all_match": ok,
            "failures": [r.params.label() for r in reports if not r.ok],
            "printed_tree_count_discrepancies": printed_mismatch,
        },
    }
    _write_output(dump(doc), args.output)
    print(
        f"verify {family.value}: {len(reports)} points, "
        f"{'all match' if ok else 'MISMATCH'}, "
        f"{printed_mismatch} differ from the printed spanning-tree formula",
        file=sys.stderr,
    )
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgraph", description="Exact spectra and validity checks for character degree graph families."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in Family]

    p = sub.add_parser("construct", help="write a family member as a graph file")
    p.add_argument("family", choices=families)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n1", type=int)
    p.add_argument("--format", choices=["json", "edgelist"], default="json")
    p.add_argument("--output")
    p.add_argument("--labels", help="comma-separated vertex labels, e.g. primes")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="run the necessary-condition battery")
    p.add_argument("input", nargs="?", help="graph file (JSON or edge list); stdin if omitted")
    p.add_argument("--output")
    p.add_argument("--labels")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", help="exact characteristic polynomial and integer spectrum")
    p.add_argument("input", nargs="?")
    p.add_argument("--which", choices=["laplacian", "distance-laplacian"], default="laplacian")
    p.add_argument("--output")
    p.add_argument("--labels")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="compare closed forms with the exact pipeline over a range")
    p.add_argument("family", choices=families)
    p.add_argument("--n", required=True, help="N or A..B")
    p.add_argument("--n1", help="N or A..B; all admissible values if omitted")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, GraphError) as exc:
        print(f"cdgraph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
