"""JSON report construction for the command-line tool.

Floats are rounded to 12 significant digits so that reports compare stably
across platforms. ``REPORT_SCHEMA`` is a JSON Schema (draft 2020-12) for the
emitted document; key names are fixed for a given ``tool_version``.
"""

from __future__ import annotations

import math
from typing import Sequence

from . import __version__
from .diffusion import NetFlow, SnapshotMetrics, TransitionMatrix, net_flow
from .temporal import DifferentialComponents, PowerLawFit

SIGNIFICANT_DIGITS = 12


def num(x: float | None) -> float | None:
    if x is None:
        return None
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be reported")
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}")


def core_dict(m: SnapshotMetrics) -> dict:
    c = m.core
    return {"h": c.h, "e_sq": c.e_sq, "d_sq": c.d_sq, "r": num(c.r), "tail": c.tail, "total": c.total}


def swing_dict(m: SnapshotMetrics) -> dict | None:
    s = m.swing
    if s is None:
        return None
    return {
        "theta": num(s.theta),
        "epsilon": num(s.epsilon),
        "theta_sq": num(s.theta_sq),
        "epsilon_sq": num(s.epsilon_sq),
        "csf_exact": num(s.csf_exact),
        "csf_approx": num(s.csf_approx),
        "branch": s.branch.value,
    }


def snapshot_entry(m: SnapshotMetrics) -> dict:
    return {
        "label": m.label,
        "t": num(m.t),
        "core_metrics": core_dict(m),
        "swing_metrics": swing_dict(m),
        "swing_undefined_reason": m.reason,
        "case_label": m.case_label.value,
    }


def fit_dict(fit: PowerLawFit) -> dict:
    return {
        "amplitude": num(fit.amplitude),
        "exponent": num(fit.exponent),
        "rms_log_residual": num(fit.rms_log_residual),
        "n_points": fit.n_points,
        "model_violation": fit.model_violation,
    }


def components_dict(c: DifferentialComponents | None) -> dict | None:
    if c is None:
        return None
    return {
        "spatial_term": num(c.spatial_term),
        "temporal_term": num(c.temporal_term),
        "total": num(c.total),
        "approx_spatial_term": num(c.approx_spatial_term),
    }


def transition_dict(matrix: TransitionMatrix, flow: NetFlow | None = None) -> dict:
    out = matrix.to_dict()
    out["net_flow"] = (flow or net_flow(matrix)).to_dict()
    return out


def build_report(
    command: str,
    source: str,
    metrics: Sequence[SnapshotMetrics],
    warnings: Sequence[str] = (),
    fits: dict | None = None,
    components: list | None = None,
    transitions: list | None = None,
) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "source": source,
        "per_snapshot": [snapshot_entry(m) for m in metrics],
        "fits": fits,
        "components": components,
        "transitions": transitions,
        "warnings": list(warnings),
    }


_NUM = {"type": "number"}
_NUM_OR_NULL = {"type": ["number", "null"]}
_COUNT = {"type": "integer", "minimum": 0}

_COMPONENTS = {
    "type": ["object", "null"],
    "required": ["spatial_term", "temporal_term", "total", "approx_spatial_term"],
    "additionalProperties": False,
    "properties": {
        "spatial_term": _NUM,
        "temporal_term": _NUM,
        "total": _NUM,
        "approx_spatial_term": _NUM_OR_NULL,
    },
}

_FIT = {
    "type": "object",
    "required": ["amplitude", "exponent", "rms_log_residual", "n_points", "model_violation"],
    "additionalProperties": False,
    "properties": {
        "amplitude": {"type": "number", "exclusiveMinimum": 0},
        "exponent": _NUM,
        "rms_log_residual": {"type": "number", "minimum": 0},
        "n_points": {"type": "integer", "minimum": 2},
        "model_violation": {"type": "boolean"},
    },
}

_FLOWS = (
    "tail_to_core",
    "core_to_excess",
    "excess_to_core",
    "core_to_tail",
    "tail_to_excess",
    "excess_to_tail",
)

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "citeswing report",
    "type": "object",
    "required": [
        "tool_version",
        "command",
        "source",
        "per_snapshot",
        "fits",
        "components",
        "transitions",
        "warnings",
    ],
    "additionalProperties": False,
    "properties": {
        "tool_version": {"type": "string"},
        "command": {"enum": ["compute", "timeseries", "diffuse"]},
        "source": {"type": "string"},
        "per_snapshot": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "label",
                    "t",
                    "core_metrics",
                    "swing_metrics",
                    "swing_undefined_reason",
                    "case_label",
                ],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "t": {"type": "number", "minimum": 1},
                    "core_metrics": {
                        "type": "object",
                        "required": ["h", "e_sq", "d_sq", "r", "tail", "total"],
                        "additionalProperties": False,
                        "properties": {
                            "h": _COUNT,
                            "e_sq": _COUNT,
                            "d_sq": _COUNT,
                            "r": {"type": "number", "minimum": 0},
                            "tail": _COUNT,
                            "total": _COUNT,
                        },
                    },
                    "swing_metrics": {
                        "type": ["object", "null"],
                        "required": [
                            "theta",
                            "epsilon",
                            "theta_sq",
                            "epsilon_sq",
                            "csf_exact",
                            "csf_approx",
                            "branch",
                        ],
                        "additionalProperties": False,
                        "properties": {
                            "theta": {"type": "number", "exclusiveMinimum": 0},
                            "epsilon": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                            "theta_sq": {"type": "number", "exclusiveMinimum": 0},
                            "epsilon_sq": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                            "csf_exact": {"type": "number", "exclusiveMaximum": 0},
                            "csf_approx": {"type": ["number", "null"], "exclusiveMaximum": 0},
                            "branch": {"enum": ["EXACT_ONLY", "APPROX_VALID"]},
                        },
                    },
                    "swing_undefined_reason": {"type": ["string", "null"]},
                    "case_label": {
                        "enum": [
                            "CASE_1",
                            "CASE_2",
                            "CASE_3",
                            "CASE_4_1",
                            "CASE_4_2",
                            "CASE_4_3_1",
                            "CASE_4_3_2",
                            "CASE_4_3_3",
                            "DEGENERATE_ZERO",
                        ]
                    },
                },
            },
        },
        "fits": {
            "type": ["object", "null"],
            "required": ["theta_fit", "epsilon_fit"],
            "additionalProperties": False,
            "properties": {"theta_fit": _FIT, "epsilon_fit": _FIT},
        },
        "components": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["label", "t", "dtheta", "depsilon"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "t": {"type": "number", "minimum": 1},
                    "dtheta": _COMPONENTS,
                    "depsilon": _COMPONENTS,
                },
            },
        },
        "transitions": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["from_label", "to_label", "states", "counts", "net_flow"],
                "additionalProperties": False,
                "properties": {
                    "from_label": {"type": "string"},
                    "to_label": {"type": "string"},
                    "states": {"const": ["TAIL", "CORE", "EXCESS", "ABSENT"]},
                    "counts": {
                        "type": "array",
                        "minItems": 4,
                        "maxItems": 4,
                        "items": {"type": "array", "minItems": 4, "maxItems": 4, "items": _COUNT},
                    },
                    "net_flow": {
                        "type": "object",
                        "required": list(_FLOWS),
                        "additionalProperties": False,
                        "properties": {k: _COUNT for k in _FLOWS},
                    },
                },
            },
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}
