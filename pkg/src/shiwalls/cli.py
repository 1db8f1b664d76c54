"""Command line interface: ``shiwalls <command> ...``.

Exit codes: 0 success, 1 verification failure or engine mismatch,
2 invalid input, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import abacus, affine, genfunc, shi, verify
from .partitions import NotACoreError, Partition, is_core
from .plot import UnsupportedDimension, render_svg

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
SCHEMA = "shiwalls.{}/1"


class InputError(ValueError):
    pass


def _root(text: str) -> shi.Root:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"root must look like 'u,v', got {text!r}")
    return shi.Root(u, v)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _human_rows(e: shi.RegionTableau) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in e.rows())


def _check_nm(n: int, m: int | None = None) -> None:
    if n < 2:
        raise InputError(f"--n must be at least 2, got {n}")
    if m is not None and m < 1:
        raise InputError(f"--m must be at least 1, got {m}")


def cmd_enumerate(args) -> int:
    _check_nm(args.n, args.m)
    n, m = args.n, args.m
    regions = shi.enumerate_regions(n, m, args.max_regions)
    expected = shi.dominant_region_count(n, m)
    count = 0
    if args.format == "csv":
        labels = [f"e{u}{v}" for u in range(1, n) for v in range(n - 1, u - 1, -1)]
        print(",".join(labels + ["r", "c"]))
    for e in regions:
        count += 1
        r, c = shi.stat_r(e), shi.stat_c(e)
        if args.format == "csv":
            print(",".join(str(x) for x in e.diagram_sequence() + (r, c)))
        elif args.format == "json":
            _emit({"schema": SCHEMA.format("region"), **e.to_json(), "r": r, "c": c})
        else:
            print(_human_rows(e))
    if args.format == "csv":
        print(f"# count={count} expected={expected}")
    elif args.format == "json":
        _emit({"schema": SCHEMA.format("summary"), "n": n, "m": m, "count": count, "expected": expected})
    else:
        print(f"count: {count} (expected {expected})")
    return EXIT_OK if count == expected else EXIT_FAIL


def cmd_walls(args) -> int:
    _check_nm(args.n, args.m)
    try:
        query = genfunc.WallQuery(args.n, args.m, args.root)
    except ValueError as exc:
        raise InputError(str(exc))
    payload = {"schema": SCHEMA.format("walls"), "n": query.n, "m": query.m,
               "root": list(query.root), "mode": args.mode, "engine": args.engine}

    if args.mode == "list":
        found = [e for e in shi.enumerate_regions(query.n, query.m, args.max_regions)
                 if shi.is_separating_wall(e, query.root)]
        if args.format == "json":
            _emit({**payload, "regions": [e.rows() for e in found], "count": len(found)})
        else:
            for e in found:
                print(_human_rows(e))
        return EXIT_OK

    polys = {}
    if args.engine in ("recursion", "both"):
        polys["recursion"] = genfunc.recursion(query)
    if args.engine in ("brute", "both"):
        polys["brute"] = genfunc.brute(query, args.max_regions)
    if args.engine == "both" and polys["recursion"] != polys["brute"]:
        print(f"engine mismatch for n={query.n} m={query.m} {query.root}", file=sys.stderr)
        print(f"  recursion: {polys['recursion']}", file=sys.stderr)
        print(f"  brute:     {polys['brute']}", file=sys.stderr)
        return EXIT_FAIL
    f = next(iter(polys.values()))
    if args.format == "json":
        extra = {"count": f(1, 1)} if args.mode == "count" else {"polynomial": f.to_json(), "count": f(1, 1)}
        _emit({**payload, **extra})
    else:
        print(f(1, 1) if args.mode == "count" else f)
    return EXIT_OK


def _parse_core(text: str) -> Partition:
    text = text.strip()
    try:
        parts = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",") if x.strip()]
        return Partition(parts)
    except ValueError as exc:
        raise InputError(f"cannot parse core {text!r}: {exc}")


def cmd_bijection(args) -> int:
    if args.direction == "core-to-alcove":
        if args.core is None or args.n is None:
            raise InputError("core-to-alcove needs --core and --n")
        _check_nm(args.n)
        lam = _parse_core(args.core)
        if not is_core(lam, args.n):
            raise InputError(f"{tuple(lam)} is not a {args.n}-core: some hook length is divisible by "
                             f"{args.n} (its abacus is not flush)")
        k_psi = shi.psi(lam, args.n)
        k_phi = affine.phi_map(lam, args.n)
        _emit({"schema": SCHEMA.format("bijection"), "direction": args.direction, "n": args.n,
               "core": list(lam), "level_vector": abacus.level_vector(lam, args.n).to_json(),
               "word": affine.minimal_word(lam, args.n).to_json(),
               "psi": k_psi.to_json(), "phi": k_phi.to_json(), "agree": k_psi == k_phi})
        return EXIT_OK

    if args.coords is None:
        raise InputError("alcove-to-core needs --coords")
    try:
        k = shi.AlcoveCoords.from_json(json.loads(args.coords))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse coordinates: {exc}")
    problem = shi.alcove_violation(k)
    if problem:
        raise InputError(f"not the Shi coordinates of a dominant alcove: {problem}")
    lam = shi.psi_inverse(k)
    _emit({"schema": SCHEMA.format("bijection"), "direction": args.direction, "coords": k.to_json(),
           "core": list(lam), "level_vector": abacus.level_vector(lam, k.n).to_json(),
           "round_trip": shi.psi(lam, k.n) == k})
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = verify.Bounds(max_n=args.max_n, max_m=args.max_m,
                           max_core_size=args.max_core_size, max_entry=args.max_entry)
    results = verify.run(args.suite, bounds)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results)} checks, {sum(r.cases for r in results)} cases, {failed} failed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_plot(args) -> int:
    _check_nm(args.n, args.m)
    try:
        svg = render_svg(args.n, args.m, args.root)
    except (UnsupportedDimension, ValueError) as exc:
        raise InputError(str(exc))
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        Path(args.out).write_bytes(svg.encode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="reserved; every algorithm is deterministic")

    parser = argparse.ArgumentParser(prog="shiwalls",
                                     description="Separating walls of dominant regions in the m-Shi arrangement.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list dominant region tableaux")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "human"], default="human")
    p.add_argument("--max-regions", type=int, default=shi.DEFAULT_REGION_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("walls", parents=[common], help="regions with a fixed separating wall")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--root", type=_root, required=True, help="u,v for alpha_uv")
    p.add_argument("--mode", choices=["count", "genfunc", "list"], default="count")
    p.add_argument("--engine", choices=["recursion", "brute", "both"], default="recursion")
    p.add_argument("--format", choices=["json", "human"], default="human")
    p.add_argument("--max-regions", type=int, default=shi.DEFAULT_REGION_CAP)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("bijection", parents=[common], help="map between n-cores and dominant alcoves")
    p.add_argument("--direction", choices=["core-to-alcove", "alcove-to-core"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--core", help="parts as '5,2,1,1,1' or a JSON array")
    p.add_argument("--coords", help='JSON like {"n":4,"k":[[3,1,1],[1,0],[1]]}')
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive identity checks")
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-core-size", type=int, default=20)
    p.add_argument("--max-entry", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", parents=[common], help="SVG of the n = 3 dominant chamber")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--root", type=_root)
    p.add_argument("--out", help="output path; '-' or omitted writes to stdout")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotACoreError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except shi.ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    raise SystemExit(main())
