"""pdreduce: Poincare duality invariants and reducibility verdicts for simplicial complexes.

Exit codes: 0 success, 1 malformed input, 2 not a Z/2 Poincare duality
complex, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog
from .complex import load
from .errors import PDReduceError
from .report import REPORT_SCHEMA, SCHEMA_VERSION, build_report, to_json, to_text


def _resolve(target: str, manifold: bool):
    if os.path.isfile(target):
        X = load(target)
        if not X.name:
            X = X.with_name(os.path.splitext(os.path.basename(target))[0])
    else:
        X = catalog.get(target).complex
    if manifold:
        X = X.with_flags(["manifold"])
    return X


def analyze(target: str, manifold: bool = False, skip_d2: bool = False,
            timings: bool = False) -> tuple[dict | None, int, str | None]:
    """Run the pipeline on a JSON file or catalog key.

    Returns ``(report, exit code, error message)``; ``report`` is ``None``
    when the input could not be read at all.
    """
    try:
        X = _resolve(target, manifold)
        report, code = build_report(X, skip_d2=skip_d2, timings=timings)
    except PDReduceError as exc:
        return None, exc.exit_code, f"{type(exc).__name__}: {exc}"
    return report, code, report["error"]


_STATUS = {0: "ok", 1: "malformed", 2: "not_pd", 3: "resource_bound"}


def _batch_one(args):
    path, manifold, skip_d2, timings = args
    report, code, error = analyze(path, manifold=manifold, skip_d2=skip_d2, timings=timings)
    return os.path.basename(path), report, code, error


def batch(directory: str, jobs: int = 1, manifold: bool = False, skip_d2: bool = False,
          timings: bool = False) -> dict:
    """Analyze every ``*.json`` file in ``directory``; one file failing never stops the rest."""
    files = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
    work = [(os.path.join(directory, f), manifold, skip_d2, timings) for f in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_batch_one, work))
    else:
        results = [_batch_one(w) for w in work]
    results.sort(key=lambda r: r[0])
    reports, summary = [], []
    for fname, report, code, error in results:
        if report is not None:
            reports.append({"file": fname, "report": report})
        verdict = (report or {}).get("verdict") or {}
        summary.append({
            "file": fname,
            "name": (report or {}).get("name"),
            "status": _STATUS[code],
            "exit_code": code,
            "outcome": verdict.get("outcome"),
            "rule": verdict.get("rule"),
            "error": error,
        })
    return {"schema": SCHEMA_VERSION, "reports": reports, "summary": summary}


def summary_csv(result: dict) -> str:
    buf = io.StringIO()
    fields = ["file", "name", "status", "exit_code", "outcome", "rule", "error"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in result["summary"]:
        w.writerow({k: ("" if row[k] is None else row[k]) for k in fields})
    return buf.getvalue()


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would read as "not PD"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pdreduce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one complex (JSON file or catalog key)")
    a.add_argument("target")
    a.add_argument("--format", choices=["text", "json"], default="text")
    a.add_argument("--manifold", action="store_true", help="assert that the input is a closed smooth manifold")
    a.add_argument("--skip-d2", action="store_true", help="omit the 4-dimensional d2 stage")
    a.add_argument("--timings", action="store_true", help="record per-stage wall-clock times")

    b = sub.add_parser("batch", help="analyze every *.json file in a directory")
    b.add_argument("directory")
    b.add_argument("--format", choices=["text", "json"], default="text")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--manifold", action="store_true")
    b.add_argument("--skip-d2", action="store_true")
    b.add_argument("--timings", action="store_true")
    b.add_argument("--out", help="directory for per-file reports, summary.json and summary.csv")

    sub.add_parser("catalog", help="list catalog keys")
    e = sub.add_parser("export-catalog", help="write every catalog entry as a JSON input file")
    e.add_argument("directory")
    sub.add_parser("schema", help="print the report JSON schema")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    out = sys.stdout

    if args.command == "analyze":
        report, code, error = analyze(args.target, args.manifold, args.skip_d2, args.timings)
        if report is not None:
            out.write(to_json(report) if args.format == "json" else to_text(report))
        if error:
            print(error, file=sys.stderr)
        return code

    if args.command == "batch":
        if not os.path.isdir(args.directory):
            print(f"not a directory: {args.directory}", file=sys.stderr)
            return 1
        if args.jobs < 1:
            print("--jobs must be at least 1", file=sys.stderr)
            return 1
        result = batch(args.directory, args.jobs, args.manifold, args.skip_d2, args.timings)
        if args.out:
            os.makedirs(os.path.join(args.out, "reports"), exist_ok=True)
            for item in result["reports"]:
                stem = os.path.splitext(item["file"])[0]
                _write(os.path.join(args.out, "reports", f"{stem}.json"), to_json(item["report"]))
            _write(os.path.join(args.out, "summary.json"),
                   json.dumps(result["summary"], sort_keys=True, indent=2) + "\n")
            _write(os.path.join(args.out, "summary.csv"), summary_csv(result))
        if args.format == "json":
            out.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
        else:
            out.write(summary_csv(result))
        return 0

    if args.command == "catalog":
        for key in catalog.list_keys():
            out.write(key + "\n")
        return 0

    if args.command == "export-catalog":
        for path in catalog.export_json(args.directory):
            out.write(path + "\n")
        return 0

    if args.command == "schema":
        out.write(json.dumps(REPORT_SCHEMA, sort_keys=True, indent=2) + "\n")
        return 0
    return 1  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
