"""The invariant report: pipeline driver, JSON/text rendering, schema."""

from __future__ import annotations

import json
import time

from .algebra.homology import betti_f2
from .complex import SimplicialComplex
from .duality import verify_pd, wu_profile
from .errors import NotPDComplex
from .verdict import ahss_d2, reducibility_verdict

SCHEMA_VERSION = 1

FIELD_ORDER = (
    "name", "dim", "betti_f2", "euler", "orientable", "character", "pd_verified",
    "wu", "sw", "sw_spivak", "d2_fundamental", "verdict", "timings",
)

_coords = {"type": "array", "items": {"type": "array", "items": {"enum": [0, 1]}}}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "pdreduce invariant report",
    "type": "object",
    "required": ["schema", *FIELD_ORDER, "error"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "dim": {"type": "integer", "minimum": 0},
        "betti_f2": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "euler": {"type": "integer"},
        "orientable": {"type": ["boolean", "null"]},
        "character": {"oneOf": [
            {"const": "trivial"}, {"type": "null"},
            {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                        "minItems": 2, "maxItems": 2}},
        ]},
        "pd_verified": {"type": "boolean"},
        "wu": {"oneOf": [_coords, {"type": "null"}]},
        "sw": {"oneOf": [_coords, {"type": "null"}]},
        "sw_spivak": {"oneOf": [_coords, {"type": "null"}]},
        "d2_fundamental": {"oneOf": [{"const": "n/a"}, {"type": "null"},
                                     {"type": "array", "items": {"enum": [0, 1]}}]},
        "verdict": {"oneOf": [{"type": "null"}, {
            "type": "object",
            "required": ["outcome", "rule", "citation", "notes"],
            "additionalProperties": False,
            "properties": {
                "outcome": {"enum": ["Reducible", "Undetermined"]},
                "rule": {"type": "string"},
                "citation": {"type": "string"},
                "notes": {"type": "array", "items": {"type": "string"}},
            },
        }]},
        "timings": {"oneOf": [{"type": "null"}, {
            "type": "object", "additionalProperties": {"type": "number", "minimum": 0}}]},
        "error": {"type": ["string", "null"]},
    },
}


def build_report(X: SimplicialComplex, skip_d2: bool = False, timings: bool = False) -> tuple[dict, int]:
    """Run the full pipeline on ``X``; returns ``(report, exit code)``.

    A complex that is not a Z/2 Poincare duality complex yields a partial
    report with ``pd_verified`` false and exit code 2.  Other errors
    propagate to the caller.
    """
    clock: dict[str, float] = {}

    def stage(name, fn, *args):
        t0 = time.perf_counter()
        try:
            return fn(*args)
        finally:
            clock[name] = round((time.perf_counter() - t0) * 1000.0, 3)

    report = {
        "schema": SCHEMA_VERSION,
        "name": X.name,
        "dim": X.dim,
        "betti_f2": list(stage("homology", betti_f2, X)),
        "euler": X.euler_characteristic(),
        "orientable": None,
        "character": None,
        "pd_verified": False,
        "wu": None,
        "sw": None,
        "sw_spivak": None,
        "d2_fundamental": None,
        "verdict": None,
        "timings": None,
        "error": None,
    }
    code = 0
    try:
        cert = stage("duality", verify_pd, X)
    except NotPDComplex as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
        code = exc.exit_code
    else:
        report["pd_verified"] = True
        report["orientable"] = cert.orientable
        report["character"] = "trivial" if cert.orientable else [list(e) for e in cert.character.support()]
        profile = stage("wu", wu_profile, X, cert)
        report["wu"] = profile.v.as_lists()
        report["sw"] = profile.w.as_lists()
        report["sw_spivak"] = profile.w_spivak.as_lists()
        if X.dim == 4 and not skip_d2:
            d2 = stage("d2", ahss_d2, X, cert, profile)
            report["d2_fundamental"] = list(d2.d2_of_fundamental)
        else:
            report["d2_fundamental"] = "n/a"
        report["verdict"] = stage("verdict", reducibility_verdict, X, cert).to_json()
    if timings:
        report["timings"] = dict(sorted(clock.items()))
    return report, code


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _fmt(value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list):
        return " | ".join("".join(map(str, c)) or "-" for c in value)
    if isinstance(value, list):
        return " ".join(map(str, value)) if value else "-"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def to_text(report: dict) -> str:
    lines = []
    for key in FIELD_ORDER:
        value = report[key]
        if key == "character" and isinstance(value, list):
            value = " ".join(f"{a}-{b}" for a, b in value)
        if key == "verdict" and value is not None:
            lines.append(f"verdict: {value['outcome']} ({value['rule']})")
            lines.append(f"  citation: {value['citation']}")
            lines.extend(f"  note: {n}" for n in value["notes"])
            continue
        if key == "timings" and value is not None:
            value = " ".join(f"{k}={v}ms" for k, v in value.items())
        lines.append(f"{key}: {_fmt(value)}")
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    return "\n".join(lines) + "\n"
