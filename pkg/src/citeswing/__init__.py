"""h-core decomposition, citation swing factor and zone diffusion for citation data."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .indicators import (
    CitationRecord,
    CoreMetrics,
    Zone,
    ZoneAssignment,
    core_metrics,
    h_index,
    rank_citations,
    records_from_counts,
    zone_partition,
)
from .swing import (
    Branch,
    CaseLabel,
    SwingMetrics,
    classify_case,
    csf_approx,
    csf_exact,
    epsilon_from_theta,
    maclaurin_epsilon,
    swing_metrics,
    theta_from_epsilon,
    theta_from_epsilon_approx,
)
from .temporal import (
    DifferentialComponents,
    PowerLawFit,
    TimedPoint,
    depsilon_components,
    dtheta_components,
    eval_model,
    fit_power_law,
    temporal_rate,
)
from .diffusion import (
    NetFlow,
    Snapshot,
    SnapshotMetrics,
    TransitionMatrix,
    diffusion_series,
    net_flow,
    snapshot_metrics,
    transitions,
)
from .ingest import Dataset, load, parse_csv, parse_json
