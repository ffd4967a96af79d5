"""FET, FHE and the Citation Swing Factor.

With h and e from the h-core decomposition and ``R**2 = h**2 + e**2``::

    theta   = h / e            (theta**2 is FHE)
    epsilon = e / R            (epsilon**2 is FET)
    epsilon = (1 + theta**2) ** -0.5

The swing factor is d(theta)/d(epsilon) = -1/(theta * epsilon**3)
= -R**3/(h * e**2). That derivative is exact for every theta > 0. The
small-theta shortcut -e/h = -1/theta comes from the truncated series
epsilon ~ 1 - theta**2/2 and is only offered for theta < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import BranchError, DomainError, UndefinedH, UndefinedTheta
from .indicators import CitationRecord, CoreMetrics

__all__ = [
    "Branch",
    "CaseLabel",
    "SwingMetrics",
    "LARGE_COUNT",
    "THETA_BALANCED",
    "swing_metrics",
    "epsilon_from_theta",
    "theta_from_epsilon",
    "maclaurin_epsilon",
    "theta_from_epsilon_approx",
    "csf_exact",
    "csf_approx",
    "classify_case",
]

# Diagnostic cutoffs for classify_case. The case analysis is asymptotic, so
# these are conventions, not derived values.
LARGE_COUNT = 100
THETA_BALANCED = (0.5, 2.0)


class Branch(str, Enum):
    EXACT_ONLY = "EXACT_ONLY"
    APPROX_VALID = "APPROX_VALID"


class CaseLabel(str, Enum):
    CASE_1 = "CASE_1"
    CASE_2 = "CASE_2"
    CASE_3 = "CASE_3"
    CASE_4_1 = "CASE_4_1"
    CASE_4_2 = "CASE_4_2"
    CASE_4_3_1 = "CASE_4_3_1"
    CASE_4_3_2 = "CASE_4_3_2"
    CASE_4_3_3 = "CASE_4_3_3"
    DEGENERATE_ZERO = "DEGENERATE_ZERO"


@dataclass(frozen=True)
class SwingMetrics:
    theta: float
    epsilon: float
    theta_sq: float
    epsilon_sq: float
    csf_exact: float
    csf_approx: float | None
    branch: Branch
    case_label: CaseLabel | None = None


def _require_defined(core: CoreMetrics) -> None:
    if core.h <= 0:
        raise UndefinedH("h=0: no swing metrics")
    if core.e_sq <= 0:
        raise UndefinedTheta("e_sq=0: theta = h/e is undefined")


def swing_metrics(core: CoreMetrics, records: Sequence[CitationRecord] | None = None) -> SwingMetrics:
    """Compute theta, epsilon and both CSF branches for one snapshot.

    ``records`` is only needed to attach a case label.
    """
    _require_defined(core)
    e = math.sqrt(core.e_sq)
    theta = core.h / e
    epsilon = e / core.r
    approx_ok = core.h * core.h < core.e_sq
    return SwingMetrics(
        theta=theta,
        epsilon=epsilon,
        theta_sq=core.h * core.h / core.e_sq,
        epsilon_sq=core.e_sq / core.d_sq,
        csf_exact=csf_exact(core),
        csf_approx=-e / core.h if approx_ok else None,
        branch=Branch.APPROX_VALID if approx_ok else Branch.EXACT_ONLY,
        case_label=classify_case(records, core) if records is not None else None,
    )


def epsilon_from_theta(theta: float) -> float:
    if not theta > 0:
        raise DomainError(f"theta must be > 0, got {theta}")
    return 1.0 / math.sqrt(1.0 + theta * theta)


def theta_from_epsilon(epsilon: float) -> float:
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    # sqrt((1 - eps^2)/eps^2), with 1 - eps^2 factored to keep precision near eps = 1
    return math.sqrt((1.0 - epsilon) * (1.0 + epsilon)) / epsilon


def maclaurin_epsilon(theta: float) -> float:
    """Two-term series ``1 - theta**2/2``; error below ``3/8 * theta**4``.

    theta = 0 is accepted as the limit of the series.
    """
    if not 0 <= theta <= 1:
        raise DomainError(f"series approximation needs 0 <= theta <= 1, got {theta}")
    return 1.0 - 0.5 * theta * theta


def theta_from_epsilon_approx(epsilon: float) -> float:
    """Inverse of the two-term series, ``sqrt(2 * (1 - epsilon))``."""
    if not 0 <= epsilon <= 1:
        raise DomainError(f"epsilon must lie in [0, 1], got {epsilon}")
    return math.sqrt(2.0 * (1.0 - epsilon))


def csf_exact(core: CoreMetrics) -> float:
    """``-R**3 / (h * e_sq)``, valid for every theta."""
    _require_defined(core)
    return -(core.d_sq * core.r) / (core.h * core.e_sq)


def csf_approx(core: CoreMetrics) -> float:
    """``-e / h``; only defined when h**2 < e_sq (theta < 1)."""
    _require_defined(core)
    if core.h * core.h >= core.e_sq:
        raise BranchError(
            f"approximate CSF needs theta < 1 (h^2 < e_sq), got h={core.h}, e_sq={core.e_sq}"
        )
    return -math.sqrt(core.e_sq) / core.h


def classify_case(records: Sequence[CitationRecord] | None, core: CoreMetrics) -> CaseLabel:
    """Label a corpus with the paper-count / citation-count regime it sits in.

    P is the number of papers and C the total citation count. Rules, in order:

    * C = 0: DEGENERATE_ZERO
    * P = 1: CASE_1 if C = 1 else CASE_2
    * no paper above one citation: CASE_3
    * P large, C small: CASE_4_1; P small, C large: CASE_4_2
    * otherwise split on theta = h/e: below 0.5 is CASE_4_3_1, above 2 is
      CASE_4_3_2, in between CASE_4_3_3. With e_sq = 0 theta is infinite,
      which maps to CASE_4_3_2 for large corpora and CASE_4_1 for small ones.

    "Large" means at least LARGE_COUNT. Diagnostic only.
    """
    n_papers = len(records) if records is not None else 0
    total = core.total
    if total == 0:
        return CaseLabel.DEGENERATE_ZERO
    if n_papers <= 1:
        return CaseLabel.CASE_1 if total == 1 else CaseLabel.CASE_2
    if max(rec.citations for rec in records) <= 1:
        return CaseLabel.CASE_3
    many_papers = n_papers >= LARGE_COUNT
    many_cites = total >= LARGE_COUNT
    if many_papers and not many_cites:
        return CaseLabel.CASE_4_1
    if many_cites and not many_papers:
        return CaseLabel.CASE_4_2
    if core.e_sq == 0:
        return CaseLabel.CASE_4_3_2 if many_cites else CaseLabel.CASE_4_1
    theta = core.h / math.sqrt(core.e_sq)
    low, high = THETA_BALANCED
    if theta < low:
        return CaseLabel.CASE_4_3_1
    if theta > high:
        return CaseLabel.CASE_4_3_2
    return CaseLabel.CASE_4_3_3
