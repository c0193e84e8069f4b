"""Command-line front end.

Subcommands: catalog, analyze, singularity, express, express-raw,
late-limit, dioph.  All numeric inputs are exact "p/q" strings; reports
are JSON (default) or CSV, deterministic given identical flags when
--no-timestamp is set.  Exit codes: 0 success and all methods agree,
2 methods disagree (or an underdetermined count system), 1 operational
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .analysis import run_analysis
from .catalog import CatalogEntry, catalog_entry, catalog_names
from .errors import AlgentropyError, NotConfined, Underdetermined
from .express import (equations_from_json, characteristic_from_equations,
                      late_confinement_limit, late_confinement_polynomial,
                      patterns_from_json, build_equations,
                      characteristic_polynomial, shift_poly, verdict,
                      PatternSpec)
from .heights import diophantine_degree
from .mapping import Mapping
from .parser import mapping_from_json
from .plotting import write_line_chart
from .singularities import find_singular_values, trace_singularity
from .tokens import parse_token

DEFAULTS = {
    "degrees": None,       # stage default comes from the catalog entry
    "iters": 20,
    "x0": "5",
    "x1": "22/7",
    "max_steps": 24,
    "terms": 16,
    "bit_budget": 10**7,
    "degree_cap": 5000,
    "format": "json",
}


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    out = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _setting(args, config: dict, key: str, cast=str):
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    if key in config:
        return cast(config[key])
    value = DEFAULTS.get(key)
    return value


def _resolve_mapping(args) -> tuple[Mapping, CatalogEntry | None]:
    if getattr(args, "catalog", None):
        options = {}
        if getattr(args, "k", None) is not None:
            options["k"] = args.k
        entry = catalog_entry(args.catalog, **options)
        m = entry.mapping
        if getattr(args, "variant", None):
            m = entry.variant(args.variant)
        return m, entry
    if getattr(args, "file", None):
        return mapping_from_json(args.file), None
    raise AlgentropyError("give a mapping via --catalog NAME or --file PATH")


def _emit(args, payload: str):
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)


def _json_dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _timestamp(args) -> str | None:
    if getattr(args, "no_timestamp", False):
        return None
    return datetime.now(timezone.utc).isoformat()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.action != "list":
        raise AlgentropyError(f"unknown catalog action {args.action!r}")
    rows = []
    for name in catalog_names():
        entry = catalog_entry(name)
        rows.append({"name": name, "description": entry.description,
                     "variants": sorted(entry.variants)})
    _emit(args, _json_dump({"catalog": rows}))
    return 0


def cmd_analyze(args) -> int:
    config = _load_config(args.config)
    m, entry = _resolve_mapping(args)

    stages = []
    if args.degrees is not None:
        stages.append("degrees")
    if args.singularities:
        stages.append("singularities")
    if args.express:
        stages.append("express")
    if args.dioph:
        stages.append("dioph")
    if not stages:
        stages = ["degrees", "singularities", "express", "dioph"]

    bit_budget = int(_setting(args, config, "bit_budget", int))
    if args.precision is not None:
        bit_budget = args.precision
    report = run_analysis(
        m, entry=entry, stages=stages,
        degrees_n=args.degrees,
        x0=Fraction(str(_setting(args, config, "x0"))),
        x1=Fraction(str(_setting(args, config, "x1"))),
        iters=int(_setting(args, config, "iters", int)),
        max_steps=int(_setting(args, config, "max_steps", int)),
        bit_budget=bit_budget,
        degree_cap=int(_setting(args, config, "degree_cap", int)),
    )

    if args.svg:
        if report.degree is not None:
            write_line_chart(args.svg, report.degree.csv_rows(),
                             title=f"degree growth: {m.name}",
                             x_label="n", y_label="d_n")
        elif report.diophantine is not None:
            write_line_chart(args.svg,
                             [(n, h) for n, h, _ in report.diophantine.samples],
                             title=f"height growth: {m.name}",
                             x_label="n", y_label="h_n")

    fmt = _setting(args, config, "format")
    if fmt == "csv":
        lines = []
        if report.degree is not None:
            lines.append("n,d_n")
            lines.extend(f"{n},{d}" for n, d in report.degree.csv_rows())
        if report.diophantine is not None:
            lines.append("n,h_n,ratio")
            lines.extend(f"{n},{h},{r}" for n, h, r
                         in report.diophantine.csv_rows())
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _json_dump(report.to_json(_timestamp(args))))
    return 0 if report.consistent else 2


def cmd_singularity(args) -> int:
    config = _load_config(args.config)
    m, _ = _resolve_mapping(args)
    max_steps = int(_setting(args, config, "max_steps", int))
    terms = int(_setting(args, config, "terms", int))
    n_start = args.n_start

    if args.entering:
        tokens = [parse_token(args.entering)]
    else:
        tokens = find_singular_values(m, n_start)
    reports, errors = [], []
    for t in tokens:
        try:
            reports.append(trace_singularity(
                m, t, n_start=n_start, max_steps=max_steps, terms=terms))
        except NotConfined as exc:
            errors.append(f"{t}: not confined within {max_steps} steps")
            if exc.report is not None:
                reports.append(exc.report)
    doc = {"mapping": m.name,
           "singular_values": [str(t) for t in tokens],
           "patterns": [r.to_json() for r in reports]}
    if errors:
        doc["errors"] = errors
    _emit(args, _json_dump(doc))
    return 0


def cmd_express(args) -> int:
    m, entry = _resolve_mapping(args)
    try:
        if args.patterns:
            patterns, exclusive, symmetry = patterns_from_json(args.patterns)
            polys = characteristic_polynomial(
                build_equations(patterns, exclusive, symmetry))
            v = verdict(polys)
            source = "patterns-file"
        elif entry is not None:
            from .analysis import express_verdict_for
            v, source = express_verdict_for(entry)
        else:
            raise AlgentropyError(
                "no curated patterns for a file mapping; pass --patterns")
    except Underdetermined as exc:
        print(f"underdetermined: {exc}\nhint: introduce an auxiliary "
              "variable and supply its count equations via express-raw",
              file=sys.stderr)
        return 2
    doc = v.to_json()
    doc["source"] = source
    doc["mapping"] = m.name
    _emit(args, _json_dump(doc))
    return 0


def cmd_express_raw(args) -> int:
    try:
        equations = equations_from_json(args.equations_file)
        v = verdict(characteristic_from_equations(equations))
    except Underdetermined as exc:
        print(f"underdetermined: {exc}\nhint: introduce an auxiliary "
              "variable and supply its count equations",
              file=sys.stderr)
        return 2
    _emit(args, _json_dump(v.to_json()))
    return 0


def cmd_late_limit(args) -> int:
    blob = json.loads(Path(args.block_file).read_text(encoding="utf-8"))
    period = int(blob["period"])
    block = PatternSpec(blob.get("id", "Z"),
                        [(e["position"], e["value"], e.get("multiplicity", 1))
                         for e in blob["entries"]])
    closing = [(e["position"], e["value"], e.get("multiplicity", 1))
               for e in blob.get("closing", [])]
    lo, _, hi = (args.ell_range or "1:6").partition(":")
    table = []
    for ell in range(int(lo), int(hi) + 1):
        poly = late_confinement_polynomial(block, period, ell, closing)
        v = verdict([poly])
        row = {"ell": ell, "characteristic": str(poly),
               "integrable": v.integrable}
        if v.lambda_interval is not None:
            row["root"] = {"lo": str(v.lambda_interval.lo),
                           "hi": str(v.lambda_interval.hi),
                           "value": float(v.lambda_interval)}
        else:
            row["root"] = "1"
        table.append(row)
    doc: dict = {"table": table}
    if args.limit:
        weight = shift_poly({int(j): c for j, c in blob["weight"].items()})
        poly = late_confinement_limit(weight, period)
        v = verdict([poly])
        doc["limit"] = {"characteristic": str(poly),
                        "integrable": v.integrable,
                        "root": ("1" if v.lambda_interval is None else
                                 {"lo": str(v.lambda_interval.lo),
                                  "hi": str(v.lambda_interval.hi),
                                  "value": float(v.lambda_interval)})}
    _emit(args, _json_dump(doc))
    return 0


def cmd_dioph(args) -> int:
    config = _load_config(args.config)
    m, _ = _resolve_mapping(args)
    bit_budget = int(_setting(args, config, "bit_budget", int))
    if args.precision is not None:
        bit_budget = args.precision
    trace = diophantine_degree(
        m,
        Fraction(str(_setting(args, config, "x0"))),
        Fraction(str(_setting(args, config, "x1"))),
        int(_setting(args, config, "iters", int)),
        bit_budget=bit_budget)
    if args.svg:
        write_line_chart(args.svg, [(n, h) for n, h, _ in trace.samples],
                         title=f"height growth: {m.name}",
                         x_label="n", y_label="h_n")
    fmt = _setting(args, config, "format")
    if fmt == "csv":
        lines = ["n,h_n,ratio"]
        lines.extend(f"{n},{h},{r}" for n, h, r in trace.csv_rows())
        _emit(args, "\n".join(lines))
    else:
        _emit(args, _json_dump(trace.to_json()))
    return 0


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _add_mapping_source(p: argparse.ArgumentParser):
    p.add_argument("--catalog", help="built-in mapping name")
    p.add_argument("--file", help="mapping-definition JSON file")
    p.add_argument("--variant", help="catalog stream variant (e.g. generic)")
    p.add_argument("--k", type=int, help="forcing exponent for eq17-hv-k")
    p.add_argument("--config", help="flat KEY=VALUE config file")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="algentropy",
        description="exact integrability analysis of three-point rational "
                    "mappings")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="list built-in mappings")
    pc.add_argument("action", choices=["list"])
    pc.add_argument("--out")
    pc.set_defaults(fn=cmd_catalog)

    pa = sub.add_parser("analyze", help="run analysis stages and compare")
    _add_mapping_source(pa)
    pa.add_argument("--degrees", type=int, metavar="N",
                    help="run the degree stage up to n = N")
    pa.add_argument("--singularities", action="store_true",
                    help="run the singularity-trace stage")
    pa.add_argument("--express", action="store_true",
                    help="run the count-equation stage")
    pa.add_argument("--dioph", action="store_true",
                    help="run the height-growth stage")
    pa.add_argument("--x0", help='seed x_0 as an exact "p/q" string')
    pa.add_argument("--x1", help='seed x_1 for the height stage')
    pa.add_argument("--iters", type=int, help="height-stage iterations")
    pa.add_argument("--max-steps", type=int, dest="max_steps")
    pa.add_argument("--degree-cap", type=int, dest="degree_cap")
    pa.add_argument("--bit-budget", type=int, dest="bit_budget")
    pa.add_argument("--precision", type=int, metavar="BITS",
                    help="bit budget for exact orbits (alias of --bit-budget)")
    pa.add_argument("--format", choices=["json", "csv"])
    pa.add_argument("--svg", help="write a line chart of the primary series")
    pa.add_argument("--no-timestamp", action="store_true")
    pa.set_defaults(fn=cmd_analyze)

    ps = sub.add_parser("singularity", help="find and trace singular values")
    _add_mapping_source(ps)
    ps.add_argument("--entering", help='value token (e.g. "0", "inf", "3/2")')
    ps.add_argument("--n-start", type=int, default=1, dest="n_start")
    ps.add_argument("--max-steps", type=int, dest="max_steps")
    ps.add_argument("--terms", type=int, help="series window size")
    ps.set_defaults(fn=cmd_singularity)

    pe = sub.add_parser("express", help="count-equation verdict")
    _add_mapping_source(pe)
    pe.add_argument("--patterns", help="patterns JSON file")
    pe.set_defaults(fn=cmd_express)

    pr = sub.add_parser("express-raw", help="verdict from raw count equations")
    pr.add_argument("equations_file")
    pr.add_argument("--out")
    pr.set_defaults(fn=cmd_express_raw)

    pl = sub.add_parser("late-limit",
                        help="late-confinement root table and limit")
    pl.add_argument("block_file")
    pl.add_argument("--ell-range", metavar="A:B", dest="ell_range")
    pl.add_argument("--limit", action="store_true",
                    help="also compute the infinite-postponement limit")
    pl.add_argument("--out")
    pl.set_defaults(fn=cmd_late_limit)

    pd = sub.add_parser("dioph", help="height-growth probe")
    _add_mapping_source(pd)
    pd.add_argument("--iters", type=int)
    pd.add_argument("--x0")
    pd.add_argument("--x1")
    pd.add_argument("--bit-budget", type=int, dest="bit_budget")
    pd.add_argument("--precision", type=int, metavar="BITS")
    pd.add_argument("--format", choices=["json", "csv"])
    pd.add_argument("--svg")
    pd.set_defaults(fn=cmd_dioph)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AlgentropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
