"""diskgeo command line: a thin client of the service.

Every subcommand builds a request, posts it to the diskgeo service and
renders the response.  By default the service runs in-process over an ASGI
transport, so no server is needed; --server points the same client at a
remote instance.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import httpx

USAGE_EXIT = 2
DOMAIN_EXIT = 1


def _complex_payload(args) -> dict:
    if getattr(args, "name", None) and getattr(args, "input", None):
        _usage("give exactly one of --name and --input")
    if getattr(args, "name", None):
        return {"name": args.name}
    if getattr(args, "input", None):
        try:
            doc = json.loads(Path(args.input).read_text())
        except OSError as exc:
            _domain_fail("InputFormatError", f"cannot read {args.input}: {exc}")
        except json.JSONDecodeError as exc:
            _domain_fail("InputFormatError", f"{args.input} is not valid JSON: {exc}")
        fmt = args.format or ("graph-json" if "edges" in doc else "facets-json")
        if fmt == "facets-json":
            return {"facets": doc.get("facets")}
        if fmt == "graph-json":
            return {"graph": {"vertices": doc.get("vertices", []),
                              "edges": doc.get("edges")}}
        _usage(f"unknown format {fmt!r}")
    _usage("give one of --name or --input")


def _usage(msg: str) -> None:
    print(f"usage error: {msg}", file=sys.stderr)
    raise SystemExit(USAGE_EXIT)


def _domain_fail(kind: str, msg: str) -> None:
    print(json.dumps({"error": {"type": kind, "message": msg}}, sort_keys=True),
          file=sys.stderr)
    raise SystemExit(DOMAIN_EXIT)


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        _usage(f"expected a comma-separated vertex list, got {text!r}")


def _request(args, method: str, path: str, payload: dict | None = None) -> httpx.Response:
    if getattr(args, "server", None):
        try:
            with httpx.Client(base_url=args.server, timeout=600.0) as client:
                return client.request(method, path, json=payload)
        except httpx.HTTPError as exc:
            _domain_fail("ServiceError", str(exc))
    # default: drive the service in-process over the ASGI transport
    import asyncio

    from .service import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://diskgeo.internal") as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _post(args, path: str, payload: dict) -> dict:
    return _handle(_request(args, "POST", path, payload))


def _get(args, path: str) -> dict:
    return _handle(_request(args, "GET", path))


def _handle(resp: httpx.Response) -> dict:
    if resp.status_code == 200:
        return resp.json()
    if resp.status_code == 400:
        print(json.dumps(resp.json(), sort_keys=True), file=sys.stderr)
        raise SystemExit(DOMAIN_EXIT)
    print(json.dumps({"error": {"type": "UsageError", "detail": resp.json()}},
                     sort_keys=True, default=str), file=sys.stderr)
    raise SystemExit(USAGE_EXIT)


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit_json(args, doc: dict) -> None:
    _emit(args, json.dumps(doc, indent=2, sort_keys=True))


def _csv_line(cells) -> str:
    return ",".join(str(c) for c in cells)


def _approx(frac: str) -> str:
    f = Fraction(frac)
    return format(float(f), ".12g")


# -- subcommand runners --------------------------------------------------------

def run_info(args):
    _emit_json(args, _post(args, "/v1/info", {"complex": _complex_payload(args)}))


def run_check(args):
    payload = {"complex": _complex_payload(args), "fast": args.fast,
               "ceiling": args.ceiling}
    _emit_json(args, _post(args, "/v1/check", payload))


def run_flow(args):
    payload = {"complex": _complex_payload(args), "all": args.all,
               "billiard_stats": args.billiard_stats, "dot": args.dot}
    if args.start:
        payload["start"] = _vertex_list(args.start)
    _emit_json(args, _post(args, "/v1/flow", payload))


def run_sectional(args):
    payload = {"complex": _complex_payload(args), "threads": args.threads}
    doc = _post(args, "/v1/sectional", payload)
    if args.csv:
        lines = ["value,count,approx"]
        lines += [_csv_line((row["value"], row["count"], _approx(row["value"])))
                  for row in doc["spectrum"]]
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, doc)


def run_sheets(args):
    payload = {"complex": _complex_payload(args), "bone": _vertex_list(args.bone),
               "grow": args.grow, "max_patches": args.max_patches, "dot": args.dot}
    if args.ordering:
        payload["ordering"] = _vertex_list(args.ordering)
    _emit_json(args, _post(args, "/v1/sheets", payload))


def run_curvature(args):
    mode = "per-vertex"
    if args.per_triangle:
        mode = "per-triangle"
    if args.first_order:
        mode = "first-order"
    payload = {"complex": _complex_payload(args), "mode": mode, "kind": args.kind}
    doc = _post(args, "/v1/curvature", payload)
    if args.csv:
        lines = ["site,value,approx"]
        lines += [_csv_line((f'"{site}"', val, _approx(val)))
                  for site, val in sorted(doc["values"].items())]
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, doc)


def run_partitions(args):
    payload = {"min_part": args.min_part, "verify_31": args.verify_31}
    if args.n is not None:
        payload["n"] = args.n
    if args.n_max is not None:
        payload["n_max"] = args.n_max
    if args.exclude_part is not None:
        payload["exclude_part"] = args.exclude_part
    doc = _post(args, "/v1/partitions", payload)
    if args.csv and doc.get("partitions") is not None:
        lines = ["partition,curvature,approx"]
        lines += [_csv_line((f'"{" ".join(map(str, row["partition"]))}"',
                             row["curvature"], _approx(row["curvature"])))
                  for row in doc["partitions"]]
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, doc)
    if doc.get("verified") is False:
        raise SystemExit(DOMAIN_EXIT)


def run_ph(args):
    payload = {"complex": _complex_payload(args), "seed": args.seed,
               "trials": args.trials, "rule": args.rule, "emit_map": args.emit_map}
    _emit_json(args, _post(args, "/v1/ph", payload))


def run_catalog(args):
    _emit_json(args, _get(args, "/v1/catalog"))


def run_refine(args):
    if args.depth < 1:
        _usage("depth must be >= 1")
    if not args.out:
        _usage("refine needs --out for the refined complex")
    payload = {"complex": _complex_payload(args), "depth": args.depth}
    doc = _post(args, "/v1/refine", payload)
    name = args.name or Path(args.input).stem
    Path(args.out).write_text(json.dumps(
        {"name": f"{name}+bary{args.depth}", "facets": doc["facets"]}) + "\n")
    print(json.dumps({"schema": doc["schema"], "f_vector": doc["f_vector"],
                      "euler": doc["euler"], "out": args.out}, indent=2, sort_keys=True))


def run_export(args):
    payload = {"complex": _complex_payload(args), "target": args.target,
               "seed": args.seed, "max_patches": args.max_patches}
    if args.start:
        payload["start"] = _vertex_list(args.start)
    if args.bone:
        payload["bone"] = _vertex_list(args.bone)
    doc = _post(args, "/v1/export", payload)
    _emit(args, doc["dot"])


# -- parser ---------------------------------------------------------------------

def _add_complex_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="complex or graph JSON file")
    p.add_argument("--name", help="catalog entry name")
    p.add_argument("--format", choices=["facets-json", "graph-json"],
                   help="input file format (default: inferred)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--server", help="remote service URL (default: in-process)")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.add_argument("--threads", type=int, default=1)


def _add_render(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diskgeo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="f-vector, Euler characteristic, purity")
    _add_complex_args(p), _add_common(p)
    p.set_defaults(func=run_info)

    p = sub.add_parser("check", help="manifold / sphere / readiness verdicts")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--fast", action="store_true",
                   help="heuristic: check vertex links only")
    p.add_argument("--ceiling", type=int, default=50_000,
                   help="abort recognition above this simplex count")
    p.set_defaults(func=run_check)

    p = sub.add_parser("flow", help="geodesic orbits on the frame bundle")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--start", help='ordered facet, e.g. "1,2"')
    p.add_argument("--all", action="store_true", help="full orbit partition")
    p.add_argument("--billiard-stats", action="store_true")
    p.add_argument("--dot", action="store_true", help="include the orbit walk as DOT")
    p.set_defaults(func=run_flow)

    p = sub.add_parser("sectional", help="sectional curvature spectrum over bones")
    _add_complex_args(p), _add_common(p), _add_render(p)
    p.set_defaults(func=run_sectional)

    p = sub.add_parser("sheets", help="bone rings, local disks and sheet growth")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--bone", required=True, help='bone vertices, e.g. "1,2"')
    p.add_argument("--ordering", help="bone vertex ordering")
    p.add_argument("--grow", action="store_true")
    p.add_argument("--max-patches", type=int, default=10_000)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=run_sheets)

    p = sub.add_parser("curvature", help="2-manifold curvature reports")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--per-vertex", action="store_true", default=False)
    p.add_argument("--per-triangle", action="store_true")
    p.add_argument("--first-order", action="store_true")
    p.add_argument("--kind", choices=["eberhard", "levitt"], default="eberhard")
    _add_render(p)
    p.set_defaults(func=run_curvature)

    p = sub.add_parser("partitions", help="partition curvature scans and the 31 theorem")
    _add_common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--min-part", type=int, default=4)
    p.add_argument("--exclude-part", type=int)
    p.add_argument("--verify-31", action="store_true")
    _add_render(p)
    p.set_defaults(func=run_partitions)

    p = sub.add_parser("ph", help="Poincare-Hopf divisors from energy rules")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--rule", choices=["choice", "min"], default="choice")
    p.add_argument("--emit-map", action="store_true",
                   help="include the vertex self-map (census + DOT)")
    p.set_defaults(func=run_ph)

    p = sub.add_parser("catalog", help="list built-in complexes")
    _add_common(p)
    p.set_defaults(func=run_catalog)

    p = sub.add_parser("refine", help="barycentric refinement, saved as facets-json")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=run_refine)

    p = sub.add_parser("export", help="DOT export of graphs, orbits, sheets, self-maps")
    _add_complex_args(p), _add_common(p)
    p.add_argument("--target", required=True,
                   choices=["dual-graph", "orbit", "sheet", "self-map"])
    p.add_argument("--start")
    p.add_argument("--bone")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-patches", type=int, default=10_000)
    p.set_defaults(func=run_export)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "partitions":
        if args.n is None and args.n_max is None:
            _usage("partitions needs --n or --n-max")
    args.func(args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
