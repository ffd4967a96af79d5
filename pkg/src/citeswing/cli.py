"""``citeswing`` command-line tool.

Subcommands::

    citeswing compute    --input FILE [--format json|csv]
    citeswing timeseries --input FILE
    citeswing diffuse    --input FILE
    citeswing gen        --seed N --items N --snapshots N [--model uniform|rich]

Reports go to stdout, diagnostics to stderr. Exit codes: 0 success, 2 bad
input or arguments, 3 empty dataset, 4 too few usable snapshots.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .diffusion import Snapshot, SnapshotMetrics, diffusion_series, net_flow, snapshot_metrics
from .errors import CiteSwingError, EmptyInput, InsufficientData
from .indicators import CitationRecord
from .ingest import Dataset, dataset_to_csv, load
from .report import build_report, components_dict, fit_dict, num, transition_dict
from .temporal import TimedPoint, depsilon_components, dtheta_components, fit_power_law

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EMPTY = 3
EXIT_INSUFFICIENT = 4

GROWTH_MODELS = ("uniform", "rich")

CSV_COLUMNS = (
    "label", "t", "h", "e_sq", "d_sq", "r", "tail", "total",
    "theta", "epsilon", "theta_sq", "epsilon_sq", "csf_exact", "csf_approx",
    "branch", "case_label", "reason",
)


def generate_dataset(seed: int, n_items: int, n_snapshots: int, model: str = "uniform") -> Dataset:
    """Seeded synthetic corpus with nondecreasing per-item citation counts.

    ``uniform``: each item gains 0, 1 or 2 citations per step with equal
    probability. ``rich``: ``n_items`` new citations per step are spread
    multinomially with weights ``citations + 1``.
    """
    if n_items < 1 or n_snapshots < 1:
        raise ValueError("n_items and n_snapshots must be >= 1")
    if model not in GROWTH_MODELS:
        raise ValueError(f"unknown growth model {model!r}")
    rng = np.random.default_rng(seed)
    counts = np.zeros(n_items, dtype=np.int64)
    id_width = len(str(n_items))
    label_width = len(str(n_snapshots))
    ids = [f"i{k:0{id_width}d}" for k in range(1, n_items + 1)]
    snapshots = []
    for step in range(1, n_snapshots + 1):
        if model == "uniform":
            counts += rng.integers(0, 3, size=n_items)
        else:
            weights = (counts + 1).astype(float)
            counts += rng.multinomial(n_items, weights / weights.sum())
        records = [CitationRecord(i, int(c)) for i, c in zip(ids, counts)]
        snapshots.append(Snapshot(f"s{step:0{label_width}d}", float(step), records))
    return Dataset(tuple(snapshots), f"gen:seed={seed}:model={model}")


def _read_dataset(path: str) -> Dataset:
    if path == "-":
        stream = io.StringIO(sys.stdin.read())
        stream.name = "<stdin>"
        return load(stream)
    return load(path)


def _metrics(dataset: Dataset) -> list[SnapshotMetrics]:
    return [snapshot_metrics(s) for s in dataset.snapshots]


def _csv_summary(metrics: Sequence[SnapshotMetrics]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for m in metrics:
        c, s = m.core, m.swing
        row = [m.label, num(m.t), c.h, c.e_sq, c.d_sq, num(c.r), c.tail, c.total]
        if s is None:
            row += [""] * 6 + ["", m.case_label.value, m.reason]
        else:
            row += [num(s.theta), num(s.epsilon), num(s.theta_sq), num(s.epsilon_sq),
                    num(s.csf_exact), "" if s.csf_approx is None else num(s.csf_approx),
                    s.branch.value, m.case_label.value, ""]
        writer.writerow(row)
    return buf.getvalue()


def cmd_compute(dataset: Dataset, fmt: str = "json") -> dict | str:
    metrics = _metrics(dataset)
    if fmt == "csv":
        return _csv_summary(metrics)
    return build_report("compute", dataset.source_path, metrics, dataset.warnings)


def cmd_timeseries(dataset: Dataset) -> dict:
    metrics = _metrics(dataset)
    defined = [m for m in metrics if m.swing is not None]
    if len(defined) < 2:
        raise InsufficientData(
            f"power-law fits need at least 2 snapshots with defined swing metrics, got {len(defined)}"
        )
    theta_fit = fit_power_law(TimedPoint(m.t, m.swing.theta) for m in defined)
    eps_fit = fit_power_law(TimedPoint(m.t, m.swing.epsilon) for m in defined)
    components = []
    for m in defined:
        dtheta = None if theta_fit.model_violation else dtheta_components(m.core, theta_fit, m.t)
        deps = None if eps_fit.model_violation else depsilon_components(m.core, eps_fit, m.t)
        components.append(
            {"label": m.label, "t": num(m.t), "dtheta": components_dict(dtheta), "depsilon": components_dict(deps)}
        )
    warnings = list(dataset.warnings)
    for name, fit in (("theta", theta_fit), ("epsilon", eps_fit)):
        if fit.model_violation:
            warnings.append(f"{name} fit: exponent {fit.exponent:.6g} is not > 0 (model violation)")
    return build_report(
        "timeseries",
        dataset.source_path,
        metrics,
        warnings,
        fits={"theta_fit": fit_dict(theta_fit), "epsilon_fit": fit_dict(eps_fit)},
        components=components,
    )


def cmd_diffuse(dataset: Dataset) -> dict:
    series = diffusion_series(dataset.snapshots)
    return build_report(
        "diffuse",
        dataset.source_path,
        series.metrics,
        dataset.warnings,
        transitions=[transition_dict(mx, net_flow(mx)) for mx in series.matrices],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="citeswing", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="per-snapshot indicators and swing metrics")
    p.add_argument("--input", "-i", default="-", help="CSV or JSON file, '-' for stdin")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("timeseries", help="power-law fits of theta(t) and epsilon(t)")
    p.add_argument("--input", "-i", default="-")

    p = sub.add_parser("diffuse", help="zone transition matrices between snapshots")
    p.add_argument("--input", "-i", default="-")

    p = sub.add_parser("gen", help="write a seeded synthetic corpus as CSV")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--items", type=int, default=50)
    p.add_argument("--snapshots", type=int, default=5)
    p.add_argument("--model", choices=GROWTH_MODELS, default="uniform")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "gen":
            if args.seed < 0 or args.items < 1 or args.snapshots < 1:
                print("error: --seed must be >= 0, --items and --snapshots >= 1", file=sys.stderr)
                return EXIT_INPUT
            out.write(dataset_to_csv(generate_dataset(args.seed, args.items, args.snapshots, args.model)))
            return EXIT_OK

        dataset = _read_dataset(args.input)
        for w in dataset.warnings:
            print(f"warning: {w}", file=sys.stderr)
        if args.command == "compute":
            result = cmd_compute(dataset, args.format)
        elif args.command == "timeseries":
            result = cmd_timeseries(dataset)
        else:
            result = cmd_diffuse(dataset)
    except EmptyInput as exc:
        print(f"error: empty dataset: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except InsufficientData as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT
    except (CiteSwingError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if isinstance(result, str):
        out.write(result)
    else:
        json.dump(result, out, indent=2, allow_nan=False)
        out.write("\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
