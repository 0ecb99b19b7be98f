"""Command-line front end: info, verify, explore, and typea reports as JSON.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 seed cap exceeded.  JSON output is canonically ordered and byte-stable
across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks, typea
from .algebra import (
    CapExceeded,
    DEFAULT_CAP,
    explore,
    principal_seed,
    records_for,
)
from .cartan import CartanMatrix, InvalidCartanMatrix, cartan_from_matrix_text, cartan_from_text
from .coxeter import (
    CoxeterElement,
    InvalidCoxeterWord,
    all_coxeter_elements,
    b_matrix,
    bipartite_element,
    clusters,
    coxeter_element,
    coxeter_number,
    h_vector,
)

CAP_ENV_VAR = "COXCLUSTERS_CAP"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(ValueError):
    pass


def _load_cartan(type_spec: str) -> CartanMatrix:
    path = Path(type_spec)
    try:
        if path.suffix or path.exists():
            return cartan_from_matrix_text(path.read_text())
        return cartan_from_text(type_spec)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load Cartan data from {type_spec!r}: {exc}") from exc


def _parse_coxeter(m: CartanMatrix, spec: str) -> list[CoxeterElement]:
    if spec == "bipartite":
        return [bipartite_element(m)]
    if spec == "all":
        return list(all_coxeter_elements(m))
    try:
        word = [int(tok) - 1 for tok in spec.split(",")]
        return [coxeter_element(m, word)]
    except (ValueError, InvalidCoxeterWord) as exc:
        raise UsageError(f"bad coxeter spec {spec!r}: {exc}") from exc


def _default_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"bad {CAP_ENV_VAR} value {env!r}") from exc
    return DEFAULT_CAP


def _emit(args, document) -> None:
    if args.format == "json":
        text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(document) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _render_text(document, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(document, dict):
        lines = []
        for key in sorted(document):
            value = document[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(document, list):
        return "\n".join(
            _render_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}"
            for v in document
        )
    return f"{pad}{document}"


def _label_json(label) -> dict:
    return {"i": label.i + 1, "m": label.m}


def _info_document(m: CartanMatrix, c: CoxeterElement, args) -> dict:
    h, star = h_vector(m, c)
    graph = explore(principal_seed(m, c), cap=_default_cap(args))
    records = records_for(m, c, graph)
    standard_a = (
        len(m.components) == 1
        and m.a == tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(m.n))
            for i in range(m.n)
        )
        and c.order == tuple(range(m.n))
    )
    variables = []
    for rec in sorted(records, key=lambda r: (r.label.i, r.label.m)):
        if standard_a:
            fpoly = typea.f_poly_via_matrix(m.n, rec.label)
        else:
            fpoly = rec.fpoly
        variables.append(
            {
                "label": _label_json(rec.label),
                "g": list(rec.g.g),
                "denom": list(rec.denom.d),
                "f_polynomial": str(fpoly),
            }
        )
    label_names = {rec.label: f"{rec.label.i + 1}.{rec.label.m}" for rec in records}
    cluster_family = [
        sorted(label_names[lab] for lab in cl) for cl in clusters(m, c)
    ]
    return {
        "type": args.type,
        "rank": m.n,
        "coxeter": [i + 1 for i in c.order],
        "coxeter_number": list(coxeter_number(m)),
        "h": list(h),
        "star": [s + 1 for s in star],
        "B": [list(row) for row in b_matrix(m, c)],
        "variables": variables,
        "clusters": sorted(cluster_family),
        "exchange_graph": {
            "seeds": len(graph.seeds),
            "edges": len(graph.edges),
            "variables": len(graph.variables),
        },
    }


def cmd_info(args) -> int:
    m = _load_cartan(args.type)
    elements = _parse_coxeter(m, args.coxeter)
    docs = [_info_document(m, c, args) for c in elements]
    _emit(args, docs[0] if len(docs) == 1 else docs)
    return EXIT_OK


def _verify_suites(m: CartanMatrix, c: CoxeterElement, cap: int):
    results = []
    results += checks.cartan_invariants(m)
    results += checks.chain_and_h_checks(m, c)
    results += checks.beta_telescoping(m, c)
    results += checks.compat_symmetry_at_zero(m, c)
    results += checks.compat_reduction_agreement(m, c)
    results += checks.compat_duality(m, c)
    results += checks.engine_against_formulas(m, c, cap)
    results += checks.move_isomorphism_checks(m, c)
    if m.n <= 4:
        results += checks.compat_linear_identity(m, c)
        results += checks.orbit_representatives(m, c)
        results += checks.universal_checks(m, c, cap)
    return results


def cmd_verify(args) -> int:
    m = _load_cartan(args.type)
    cap = _default_cap(args)
    results = checks.bipartite_h_values(m)
    results += checks.move_graph_connected(m)
    results += checks.move_update_rule(m)
    results += checks.bipartite_compat_oracle(m)
    for c in _parse_coxeter(m, args.coxeter):
        results += _verify_suites(m, c, cap)
    failures = [r for r in results if not r.passed]
    document = {
        "type": args.type,
        "checks": len(results),
        "failures": [
            {"suite": r.suite, "instance": r.instance, "detail": r.detail} for r in failures
        ],
        "results": [
            {
                "suite": r.suite,
                "instance": r.instance,
                "passed": r.passed,
            }
            for r in sorted(results, key=lambda r: (r.suite, r.instance))
        ],
    }
    _emit(args, document)
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_explore(args) -> int:
    m = _load_cartan(args.type)
    docs = []
    for c in _parse_coxeter(m, args.coxeter):
        graph = explore(principal_seed(m, c), cap=_default_cap(args))
        records = records_for(m, c, graph)
        docs.append(
            {
                "type": args.type,
                "coxeter": [i + 1 for i in c.order],
                "seeds": len(graph.seeds),
                "edges": len(graph.edges),
                "variables": len(graph.variables),
                "records": [
                    {
                        "label": _label_json(rec.label),
                        "g": list(rec.g.g),
                        "denom": list(rec.denom.d),
                        "f_polynomial": str(rec.fpoly),
                        "expansion": str(rec.expansion),
                    }
                    for rec in sorted(records, key=lambda r: (r.label.i, r.label.m))
                ],
            }
        )
    _emit(args, docs[0] if len(docs) == 1 else docs)
    return EXIT_OK


def cmd_typea(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    relation_checks = typea.verify_exchange_relations(n)
    quadrilaterals = []
    for quad_checks in relation_checks:
        i, j, k, l = quad_checks.quadruple
        plus, minus = typea.universal_coeff_typea(n, (i, j, k + 2, l + 2))
        quadrilaterals.append(
            {
                "intervals": [i, j, k, l],
                "ok": quad_checks.ok,
                "polygon_exchange": {
                    "pair": [[i, k + 2], [j, l + 2]],
                    "p_plus": [[d.a, d.b] for d in plus],
                    "p_minus": [[d.a, d.b] for d in minus],
                },
            }
        )
    document = {
        "n": n,
        "relations_checked": len(relation_checks),
        "all_relations_ok": all(ch.ok for ch in relation_checks),
        "exchange_relations": quadrilaterals,
    }
    _emit(args, document)
    return EXIT_OK if document["all_relations_ok"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxclusters",
        description="Exact finite-type cluster algebra computations from Coxeter elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_coxeter=True):
        p.add_argument("--type", required=True,
                       help="type label like A3, D4, A2xA1, or a matrix file path")
        if with_coxeter:
            p.add_argument("--coxeter", default="bipartite",
                           help="comma-separated 1-based word, 'bipartite', or 'all'")
        p.add_argument("--cap", type=int, default=None,
                       help=f"seed cap (default {DEFAULT_CAP}, env {CAP_ENV_VAR})")
        p.add_argument("--output", default=None, help="write to a file instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p_info = sub.add_parser("info", help="h-vector, labelled weights, records, clusters")
    common(p_info)
    p_info.set_defaults(func=cmd_info)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_explore = sub.add_parser("explore", help="exchange graph statistics and records")
    common(p_explore)
    p_explore.set_defaults(func=cmd_explore)

    p_typea = sub.add_parser("typea", help="tridiagonal relation report and polygon coefficients")
    p_typea.add_argument("--n", type=int, required=True)
    p_typea.add_argument("--cap", type=int, default=None)
    p_typea.add_argument("--output", default=None)
    p_typea.add_argument("--format", choices=("json", "text"), default="json")
    p_typea.set_defaults(func=cmd_typea)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidCartanMatrix, InvalidCoxeterWord) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
