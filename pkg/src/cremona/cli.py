"""Command-line front end: parse input, route to the engines, emit reports.

All report commands print a JSON envelope with fixed key order
(command, input, result, warnings, status), so identical invocations are
byte-identical.  Exit codes: 0 success, 1 parse errors, 2 contract
violations (non-Cremona input to invert/classify, wrong degree, infeasible
generator parameters).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import degree2, hilbert, inversion
from .errors import NotCremonaError, ParseError
from .monomials import (
    MonomialSet,
    check_canonical,
    is_cohesive,
    log_matrix,
    monomial_set_from_json,
    monomial_set_to_json,
    parse_monomials,
    render_monomial,
)

REPORT_COMMANDS = (
    "analyze",
    "invert",
    "classify",
    "normal-form",
    "hilbert-check",
    "normal-check",
    "extract-cremona",
    "export-dot",
    "generate",
)


@dataclass
class AnalysisRequest:
    command: str
    path: str | None = None
    inline: str | None = None
    fmt: str = "text"
    bound: int | None = None
    seed: int = 0
    size: int | None = None
    circuit: int | None = None
    edge_graph: bool = False
    as_json: bool = False
    workers: int = 1


@dataclass
class AnalysisReport:
    command: str
    echo: dict | None
    payload: dict | None
    warnings: list[str] = field(default_factory=list)
    status: int = 0
    text: str | None = None  # raw output (DOT, generated monomials)

    def rendered(self) -> str:
        if self.text is not None:
            return self.text
        body = {
            "command": self.command,
            "input": self.echo,
            "result": self.payload,
            "warnings": self.warnings,
            "status": self.status,
        }
        return json.dumps(body, indent=2)


def _read_input(request: AnalysisRequest) -> MonomialSet:
    if request.inline is not None:
        raw = request.inline
    elif request.path is not None:
        if request.path == "-":
            raw = sys.stdin.read()
        else:
            try:
                with open(request.path, "r", encoding="utf-8") as fh:
                    raw = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {request.path}: {exc}") from exc
    else:
        raise ParseError("no input given (use a file argument or --inline)")
    if request.fmt == "json":
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return monomial_set_from_json(obj)
    return parse_monomials(raw)


def _analyze(mset: MonomialSet, workers: int) -> tuple[dict, list[str]]:
    warnings: list[str] = []
    canonical = check_canonical(mset)
    matrix = log_matrix(mset)
    payload: dict = {
        "canonical": {
            "no_common_factor": canonical.no_common_factor,
            "every_variable_appears": canonical.every_variable_appears,
            "offending_rows": list(canonical.offending_rows),
        },
        "stochastic": matrix.degree is not None,
        "degree": matrix.degree,
        "cohesive": is_cohesive(mset),
        "birational": None,
    }
    if matrix.degree is None:
        warnings.append("monomials have mixed degrees; birationality skipped")
    elif not canonical.ok:
        warnings.append("canonical restrictions violated; birationality skipped")
    elif mset.q < mset.n:
        warnings.append("fewer monomials than variables; birationality skipped")
    else:
        report = inversion.is_cremona(mset, workers)
        payload["birational"] = {
            "degree": report.degree,
            "minor_gcd": report.minor_gcd,
            "is_birational_onto_image": report.is_birational_onto_image,
            "is_cremona": report.is_cremona,
        }
    return payload, warnings


def _invert(mset: MonomialSet) -> dict:
    data = inversion.invert(mset)
    return {
        "inverse": [list(col) for col in data.inverse_columns()],
        "inverse_monomials": [
            render_monomial(col, mset.variables) for col in data.inverse_columns()
        ],
        "gamma": list(data.inversion_vector),
        "delta": data.inverse_degree,
        "factor": inversion.inversion_factor(data, mset.variables),
    }


def _classify(mset: MonomialSet) -> dict:
    cls = degree2.classify(mset)
    return {
        "type": cls.kind,
        "p_involution": cls.p_involution,
        "inverse_degree": cls.inverse_degree,
        "circuit_length": cls.circuit_length,
        "junction_count": cls.junction_count,
        "apocryphal": cls.apocryphal,
        "doubly_stochastic": cls.doubly_stochastic,
        "inverse_linear_type": cls.inverse_linear_type,
        "squarefree_inverse": cls.squarefree_inverse,
    }


def _normal_form(mset: MonomialSet) -> dict:
    form = degree2.normal_form(mset)
    return {
        "matrix": [list(row) for row in form.matrix],
        "row_order": list(form.row_order),
        "column_order": list(form.column_order),
        "block_sizes": list(form.block_sizes),
    }


def _hilbert_check(mset: MonomialSet, bound: int) -> dict:
    report = hilbert.is_hilbert_base(hilbert.lift(mset), bound)
    return {
        "verdict": report.verdict,
        "bound": report.bound,
        "counterexample": list(report.counterexample) if report.counterexample else None,
        "complete_up_to_bound": True,
    }


def _normal_check(mset: MonomialSet, bound: int) -> dict:
    report = hilbert.is_normal_ideal(mset, bound)
    return {
        "verdict": report.verdict,
        "bound": report.bound,
        "counterexample": list(report.counterexample) if report.counterexample else None,
        "complete_up_to_bound": True,
    }


def _extract(mset: MonomialSet) -> dict:
    report = hilbert.find_cremona_subsets(mset)
    first = None
    if report.subsets:
        chosen = hilbert.cremona_from_normal(mset, bound=0)
        first = monomial_set_to_json(chosen)
    return {
        "subsets": [list(cols) for cols in report.subsets],
        "classes": [[list(cols) for cols in group] for group in report.classes],
        "class_count": len(report.classes),
        "first": first,
    }


def _export_dot(mset: MonomialSet, edge: bool) -> str:
    graph = degree2.build_graph(mset)
    lines = ["graph G {"]
    if edge:
        labels = [mset.monomial_text(j) for j in range(mset.q)]
        for label in sorted(labels):
            lines.append(f'  "{label}";')
        adjacency = degree2.edge_graph(graph)
        pairs = set()
        for a, nbrs in adjacency.items():
            for b in nbrs:
                pairs.add(tuple(sorted((labels[a], labels[b]))))
        for a, b in sorted(pairs):
            lines.append(f'  "{a}" -- "{b}";')
    else:
        for name in mset.variables:
            lines.append(f'  "{name}";')
        for a, b in sorted(graph.edges):
            lines.append(f'  "{mset.variables[a]}" -- "{mset.variables[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run(request: AnalysisRequest) -> AnalysisReport:
    """Execute one request and return its report; never raises for expected
    input problems (they become the report status)."""
    try:
        if request.command == "generate":
            if request.size is None or request.circuit is None:
                raise ValueError("generate needs --n and --circuit")
            mset = degree2.random_cremona_degree2(
                request.size, request.circuit, request.seed
            )
            echo = {"n": request.size, "circuit": request.circuit, "seed": request.seed}
            if request.as_json:
                return AnalysisReport("generate", echo, monomial_set_to_json(mset))
            return AnalysisReport(
                "generate", echo, None, text=" / ".join(mset.texts()) + "\n"
            )

        mset = _read_input(request)
        echo = monomial_set_to_json(mset)
        warnings: list[str] = []
        if request.command == "analyze":
            payload, warnings = _analyze(mset, request.workers)
        elif request.command == "invert":
            payload = _invert(mset)
        elif request.command == "classify":
            payload = _classify(mset)
        elif request.command == "normal-form":
            payload = _normal_form(mset)
        elif request.command == "hilbert-check":
            payload = _hilbert_check(mset, request.bound or 3)
            warnings.append("verdicts are complete only up to the bound")
        elif request.command == "normal-check":
            payload = _normal_check(mset, request.bound or 3)
            warnings.append("verdicts are complete only up to the bound")
        elif request.command == "extract-cremona":
            payload = _extract(mset)
        elif request.command == "export-dot":
            return AnalysisReport(
                "export-dot", echo, None, text=_export_dot(mset, request.edge_graph)
            )
        else:
            raise ValueError(f"unknown command {request.command!r}")
        return AnalysisReport(request.command, echo, payload, warnings)
    except ParseError as exc:
        return AnalysisReport(
            request.command, None, {"error": str(exc)}, ["parse error"], status=1
        )
    except (NotCremonaError, ValueError) as exc:
        return AnalysisReport(
            request.command, None, {"error": str(exc)}, ["contract violation"], status=2
        )


def _worker_count() -> int:
    raw = os.environ.get("CREMONA_WORKERS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"CREMONA_WORKERS must be an integer, got {raw!r}")
    if value < 1:
        raise SystemExit("CREMONA_WORKERS must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremona",
        description="Exact analysis of monomial rational maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in REPORT_COMMANDS:
        p = sub.add_parser(name)
        if name != "generate":
            p.add_argument("path", nargs="?", default=None,
                           help="input file ('-' for stdin)")
            p.add_argument("--inline", default=None, help="monomials given inline")
            p.add_argument("--format", choices=("text", "json"), default="text")
        if name in ("hilbert-check", "normal-check"):
            p.add_argument("--bound", type=int, default=3)
        if name == "export-dot":
            p.add_argument("--edge-graph", action="store_true")
        if name == "generate":
            p.add_argument("--n", type=int, required=True, dest="size")
            p.add_argument("--circuit", type=int, required=True)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--json", action="store_true", dest="as_json")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    request = AnalysisRequest(
        command=args.command,
        path=getattr(args, "path", None),
        inline=getattr(args, "inline", None),
        fmt=getattr(args, "format", "text"),
        bound=getattr(args, "bound", None),
        seed=getattr(args, "seed", 0),
        size=getattr(args, "size", None),
        circuit=getattr(args, "circuit", None),
        edge_graph=getattr(args, "edge_graph", False),
        as_json=getattr(args, "as_json", False),
        workers=_worker_count(),
    )
    report = run(request)
    out = report.rendered()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return report.status


if __name__ == "__main__":
    raise SystemExit(main())
