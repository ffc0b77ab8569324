"""Command-line driver: ``pkturan {construct,check,search,bounds,report}``.

Exit codes: 0 success, 1 runtime error, 2 parameter error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bounds import bounds_report, proposition_bounds, f_function
from .constructions import ConstructionSpec, KINDS
from .errors import CapacityError, Graph6Error, ParameterError
from .graph_core import read_graph6_file, to_graph6, write_graph6_file
from .patterns import count_triangles, is_suspension_pk_free, suspension_witness
from .search import ExtremalRecord, SearchConfig, run_search

REPORT_COLUMNS = [
    "n", "k", "lower", "lower_applicable", "exact", "local_best", "upper",
    "f_value", "f_argmax", "t_Hn", "t_Fnk", "t_Hnk",
]

REPORT_HELP = """\
CSV columns (empty cell = unknown or not applicable, never zero):
  n, k              parameters
  lower             floor((k-2)/2) * n^2 / 8 (rounded down)
  lower_applicable  1 if n is a multiple of 4*floor((k-2)/2), else 0
  exact             exact ex(n, K3, P^_k) from a cached exhaustive record
  local_best        best value from a cached local-search record
  upper             (k-2) n^2/12 + (k-2)^2 n/12 as a reduced fraction
  f_value, f_argmax f(n, k) and its smallest maximiser n0
  t_Hn, t_Fnk, t_Hnk triangle counts of the constructions, when they exist
"""


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _record_path(cache: Path, n: int, k: int, mode: str) -> Path:
    return cache / f"record_n{n}_k{k}_{mode}.json"


def _write_manifest(args, command: str, outputs: list[Path], started: str, config: dict) -> None:
    out = Path(args.out)
    manifest = {
        "command_line": sys.argv[:1] + list(args.argv),
        "command": command,
        "config": config,
        "version": __version__,
        "seed": args.seed,
        "started": started,
        "finished": datetime.now(timezone.utc).isoformat(),
        "outputs": [str(p) for p in outputs],
    }
    for p in outputs:
        assert p.exists(), p
    (out / f"manifest-{command}.json").write_text(json.dumps(manifest, indent=2) + "\n")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def cmd_construct(args) -> int:
    started = _now()
    try:
        spec = ConstructionSpec(args.kind, args.n, args.k)
    except ParameterError as exc:
        raise _Exit(2, str(exc))
    g = spec.build()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    name = f"{spec.kind}_{spec.n}" + (f"_{spec.k}" if spec.k is not None else "") + ".g6"
    path = Path(args.file) if args.file else out / name
    write_graph6_file(path, [g])
    ks = [spec.k] if spec.k is not None else [4, 5]
    free = " ".join(f"free(k={k})={str(is_suspension_pk_free(g, k)).lower()}" for k in ks)
    print(f"n={g.n} e={g.num_edges()} t={count_triangles(g)} {free}")
    print(f"wrote {path}")
    _write_manifest(args, "construct", [path], started,
                    {"kind": spec.kind, "n": spec.n, "k": spec.k})
    return 0


def cmd_check(args) -> int:
    if args.k < 2:
        raise _Exit(2, f"k must be >= 2, got {args.k}")
    try:
        graphs = read_graph6_file(args.g6_path)
    except Graph6Error as exc:
        raise _Exit(1, f"parse error: {exc}")
    except OSError as exc:
        raise _Exit(1, str(exc))
    for idx, g in enumerate(graphs):
        wit = suspension_witness(g, args.k)
        head = f"{idx} n={g.n} t={count_triangles(g)}"
        if wit is None:
            print(f"{head} free")
        else:
            v, path = wit
            print(f"{head} not free; vertex {v}; path {' '.join(map(str, path))}")
    print(f"{len(graphs)} graphs processed")
    return 0


def cmd_search(args) -> int:
    started = _now()
    try:
        config = SearchConfig(args.n, args.k, mode=args.mode, seed=args.seed,
                              time_budget=args.budget_secs, restarts=args.restarts,
                              max_witnesses=args.max_witnesses, workers=args.workers)
    except (ParameterError, CapacityError) as exc:
        raise _Exit(2, str(exc))
    record = run_search(config)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rec_path = _record_path(out, args.n, args.k, args.mode)
    rec_path.write_text(record.to_json() + "\n")
    g6_path = rec_path.with_suffix(".g6")
    write_graph6_file(g6_path, record.witnesses)
    total = "" if record.witness_count_total is None else record.witness_count_total
    print(f"value={record.value} exact={str(record.exact).lower()} witness_count_total={total}")
    print(f"wrote {rec_path} {g6_path}")
    _write_manifest(args, "search", [rec_path, g6_path], started,
                    {"n": args.n, "k": args.k, "mode": args.mode, "budget_secs": args.budget_secs,
                     "restarts": args.restarts, "workers": args.workers})
    return 0


def cmd_bounds(args) -> int:
    try:
        report = bounds_report(args.n, args.k)
    except ParameterError as exc:
        raise _Exit(2, str(exc))
    print(report.to_json())
    return 0


def _parse_range(text: str) -> list[int]:
    vals: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                vals.extend(range(int(lo), int(hi) + 1))
            else:
                vals.append(int(part))
    except ValueError:
        raise _Exit(2, f"bad range spec {text!r}; use e.g. 4..9 or 4,6,8")
    if not vals:
        raise _Exit(2, f"empty range {text!r}")
    return vals


def _load_record(cache: Path, n: int, k: int, mode: str) -> ExtremalRecord | None:
    path = _record_path(cache, n, k, mode)
    if not path.exists():
        return None
    return ExtremalRecord.from_dict(json.loads(path.read_text()))


def _construction_count(kind: str, n: int, k: int) -> int | str:
    try:
        return ConstructionSpec(kind, n, None if kind == "Hn" else k).triangle_formula()
    except ParameterError:
        return ""


def report_rows(ns, ks, cache: Path, compute: bool = False, seed: int = 0,
                budget: float = 600.0) -> list[dict]:
    rows = []
    for k in ks:
        for n in ns:
            if k < 4 or n < 1:
                raise _Exit(2, f"report needs k >= 4 and n >= 1, got n={n}, k={k}")
            row: dict = {c: "" for c in REPORT_COLUMNS}
            row.update(n=n, k=k)
            if n >= k:
                lower, upper, applicable = proposition_bounds(n, k)
                row.update(lower=lower, lower_applicable=int(applicable), upper=str(upper))
            f_value, f_arg = f_function(n, k)
            row.update(f_value=f_value, f_argmax=f_arg)
            for kind in KINDS:
                row[f"t_{kind}"] = _construction_count(kind, n, k)
            rec = _load_record(cache, n, k, "exhaustive")
            if rec is None and compute and n <= 12:
                rec = run_search(SearchConfig(n, k, seed=seed, time_budget=budget))
                cache.mkdir(parents=True, exist_ok=True)
                _record_path(cache, n, k, "exhaustive").write_text(rec.to_json() + "\n")
            if rec is not None and rec.exact:
                row["exact"] = rec.value
            loc = _load_record(cache, n, k, "local")
            if loc is not None:
                row["local_best"] = loc.value
            rows.append(row)
    return rows


def cmd_report(args) -> int:
    started = _now()
    ns = _parse_range(args.n)
    ks = _parse_range(args.k)
    cache = Path(args.cache or args.out)
    rows = report_rows(ns, ks, cache, compute=args.compute, seed=args.seed,
                       budget=args.budget_secs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = Path(args.csv) if args.csv else out / "report.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")
    _write_manifest(args, "report", [path], started,
                    {"n": args.n, "k": args.k, "cache": str(cache), "compute": args.compute})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    common.add_argument("--budget-secs", type=float, default=argparse.SUPPRESS,
                        help="wall-clock budget for searches (default 600)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for exhaustive search (default 1)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="output directory (default .)")

    p = argparse.ArgumentParser(prog="pkturan", parents=[common],
                                description="Triangles in P^_k-free graphs: constructions, checks, search.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build an extremal construction as graph6")
    c.add_argument("kind", choices=KINDS)
    c.add_argument("n", type=int)
    c.add_argument("k", type=int, nargs="?")
    c.add_argument("--file", help="graph6 output path (default OUT/KIND_N[_K].g6)")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", parents=[common], help="check graphs in a graph6 file for P^_k-freeness")
    c.add_argument("g6_path")
    c.add_argument("k", type=int)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("search", parents=[common], help="compute or lower-bound ex(n, K3, P^_k)")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.add_argument("mode", nargs="?", default="exhaustive", choices=["exhaustive", "local"])
    c.add_argument("--restarts", type=int, default=24, help="local-search restarts")
    c.add_argument("--max-witnesses", type=int, default=10)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("bounds", parents=[common], help="print the closed-form bounds as JSON")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("report", parents=[common], help="CSV table of bounds, constructions and cached values",
                       epilog=REPORT_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    c.add_argument("--n", required=True, help="range of n, e.g. 4..9 or 4,6,8")
    c.add_argument("--k", required=True, help="range of k")
    c.add_argument("--csv", help="CSV output path (default OUT/report.csv)")
    c.add_argument("--cache", help="directory of search records (default OUT)")
    c.add_argument("--compute", action="store_true",
                   help="run exhaustive search (n <= 12) for rows missing from the cache")
    c.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("seed", 0), ("budget_secs", 600.0), ("workers", 1), ("out", ".")):
        if not hasattr(args, name):
            setattr(args, name, default)
    args.argv = argv
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParameterError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
