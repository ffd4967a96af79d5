import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from citeswing import (
    Branch,
    BranchError,
    CaseLabel,
    CitationRecord,
    CoreMetrics,
    DomainError,
    UndefinedH,
    UndefinedTheta,
    classify_case,
    core_metrics,
    csf_approx,
    csf_exact,
    epsilon_from_theta,
    maclaurin_epsilon,
    records_from_counts,
    swing_metrics,
    theta_from_epsilon,
    theta_from_epsilon_approx,
)
from oracles import central_diff, realize_core, theta_of_epsilon

# frozen from direct evaluation of h/e, e/R, -R^3/(h e^2) on h=4, e_sq=11, d_sq=27
WORKED_THETA = 4 / math.sqrt(11)  # 1.2060453783110545
WORKED_EPS = math.sqrt(11 / 27)  # 0.6382847385042254
WORKED_CSF = -(27**1.5) / 44  # -3.188548077569979


def core_for(h, e_sq):
    return core_metrics(records_from_counts(realize_core(h, e_sq)))


thetas = st.floats(1e-3, 1e3, allow_nan=False)
vectors = st.lists(st.integers(0, 200), min_size=1, max_size=60)


class TestSwingMetrics:
    def test_worked_example(self, worked_records):
        s = swing_metrics(core_metrics(worked_records))
        assert s.theta == pytest.approx(WORKED_THETA, rel=1e-15)
        assert s.epsilon == pytest.approx(WORKED_EPS, rel=1e-15)
        assert s.theta_sq == pytest.approx(16 / 11)
        assert s.epsilon_sq == pytest.approx(11 / 27)
        assert s.csf_exact == pytest.approx(WORKED_CSF, rel=1e-12)
        assert s.csf_approx is None
        assert s.branch is Branch.EXACT_ONLY

    def test_one_heavily_cited_paper(self):
        c = 10**6
        s = swing_metrics(core_metrics([CitationRecord("a", c)]))
        assert s.epsilon_sq == pytest.approx((c - 1) / c, rel=1e-15)
        assert s.epsilon < 1

    def test_h_equals_e(self):
        s = swing_metrics(core_for(3, 9))
        assert s.theta == 1.0
        assert s.epsilon == pytest.approx(1 / math.sqrt(2), rel=1e-15)
        assert s.epsilon_sq == pytest.approx(0.5)
        assert s.branch is Branch.EXACT_ONLY

    def test_approx_branch_populated_below_one(self):
        s = swing_metrics(core_for(1, 4))
        assert s.branch is Branch.APPROX_VALID
        assert s.csf_approx == -2.0

    def test_case_label_attached_when_records_given(self, worked_records):
        core = core_metrics(worked_records)
        assert swing_metrics(core).case_label is None
        assert swing_metrics(core, worked_records).case_label is CaseLabel.CASE_4_3_3

    def test_undefined(self):
        with pytest.raises(UndefinedTheta):
            swing_metrics(core_metrics([CitationRecord("a", 1)]))
        with pytest.raises(UndefinedH):
            swing_metrics(core_metrics([CitationRecord("a", 0)]))

    @given(vectors)
    def test_identity_and_range_on_data(self, counts):
        core = core_metrics(records_from_counts(counts))
        assume(core.h >= 1 and core.e_sq >= 1)
        s = swing_metrics(core)
        assert 0 < s.epsilon < 1 and s.theta > 0
        assert math.isclose(s.epsilon, epsilon_from_theta(s.theta), rel_tol=1e-12)
        assert s.csf_exact < 0
        assert (s.csf_approx is not None) == (s.theta < 1)
        if s.csf_approx is not None:
            assert s.csf_approx < 0


class TestConversions:
    def test_symmetric_point(self):
        assert epsilon_from_theta(1.0) == pytest.approx(0.7071067811865476, rel=1e-15)
        assert theta_from_epsilon(1 / math.sqrt(2)) == pytest.approx(1.0, rel=1e-15)

    def test_limits(self):
        assert epsilon_from_theta(1e6) == pytest.approx(1e-6, rel=1e-9)
        assert epsilon_from_theta(1e-6) == pytest.approx(1.0, abs=1e-12)

    def test_worked_epsilon(self):
        assert theta_from_epsilon(0.63828) == pytest.approx(1.20606, rel=1e-5)

    def test_near_one(self):
        # oracle: sqrt(1/eps^2 - 1) = 0.00141421462306...
        assert theta_from_epsilon(0.999999) == pytest.approx(theta_of_epsilon(0.999999), rel=1e-8)
        assert theta_from_epsilon(0.999999) == pytest.approx(1.414e-3, rel=1e-3)

    @pytest.mark.parametrize("bad", [0.0, -1.0, float("nan")])
    def test_epsilon_from_theta_domain(self, bad):
        with pytest.raises(DomainError):
            epsilon_from_theta(bad)

    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5])
    def test_theta_from_epsilon_domain(self, bad):
        with pytest.raises(DomainError):
            theta_from_epsilon(bad)

    @given(thetas)
    def test_round_trip(self, theta):
        assert math.isclose(theta_from_epsilon(epsilon_from_theta(theta)), theta, rel_tol=1e-10)

    @given(thetas, thetas)
    def test_both_strictly_decreasing(self, a, b):
        assume(a < b and epsilon_from_theta(a) != epsilon_from_theta(b))
        assert epsilon_from_theta(a) > epsilon_from_theta(b)
        ea, eb = epsilon_from_theta(a), epsilon_from_theta(b)
        assert theta_from_epsilon(eb) > theta_from_epsilon(ea)


class TestMaclaurin:
    def test_small_theta(self):
        approx = maclaurin_epsilon(0.1)
        assert approx == pytest.approx(0.995, abs=1e-15)
        err = abs(approx - 1 / math.sqrt(1.01))
        assert err == pytest.approx(3.71902e-5, rel=1e-5)
        assert err < 3 / 8 * 0.1**4

    def test_zero_limit(self):
        assert maclaurin_epsilon(0.0) == 1.0

    def test_degrades_at_one(self):
        assert maclaurin_epsilon(1.0) == 0.5
        assert epsilon_from_theta(1.0) - 0.5 > 0.2

    @pytest.mark.parametrize("bad", [-0.1, 1.01])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            maclaurin_epsilon(bad)

    @given(st.floats(1e-6, 0.7))
    def test_error_bound(self, theta):
        assert abs(maclaurin_epsilon(theta) - epsilon_from_theta(theta)) <= 3 / 8 * theta**4

    @pytest.mark.parametrize("eps, theta", [(1.0, 0.0), (0.995, 0.1), (0.5, 1.0)])
    def test_inverse(self, eps, theta):
        assert theta_from_epsilon_approx(eps) == pytest.approx(theta, abs=1e-12)

    def test_inverse_domain(self):
        with pytest.raises(DomainError):
            theta_from_epsilon_approx(-0.1)


class TestCSF:
    def test_worked_example(self, worked_records):
        core = core_metrics(worked_records)
        value = csf_exact(core)
        assert value == pytest.approx(WORKED_CSF, rel=1e-12)
        fd = central_diff(theta_of_epsilon, WORKED_EPS, 1e-6)
        assert value == pytest.approx(fd, rel=1e-5)

    def test_symmetric_point(self):
        assert csf_exact(core_for(3, 9)) == pytest.approx(-2 * math.sqrt(2), rel=1e-12)

    def test_smallest_nondegenerate(self):
        core = core_metrics([CitationRecord("a", 2)])
        assert (core.h, core.e_sq, core.d_sq) == (1, 1, 2)
        assert csf_exact(core) == pytest.approx(-2 * math.sqrt(2), rel=1e-12)

    @pytest.mark.parametrize("h, e_sq, expected", [(1, 4, -2.0), (2, 25, -2.5)])
    def test_approx(self, h, e_sq, expected):
        assert csf_approx(core_for(h, e_sq)) == pytest.approx(expected, rel=1e-15)

    def test_approx_branch_error(self, worked_records):
        with pytest.raises(BranchError):
            csf_approx(core_metrics(worked_records))
        with pytest.raises(BranchError):
            csf_approx(core_for(3, 9))

    def test_undefined(self):
        with pytest.raises(UndefinedTheta):
            csf_exact(CoreMetrics(1, 0, 1, 1.0, 0, 1))
        with pytest.raises(UndefinedH):
            csf_exact(CoreMetrics(0, 0, 0, 0.0, 0, 0))

    @pytest.mark.parametrize("theta", np.geomspace(0.2, 5, 25))
    def test_matches_finite_difference(self, theta):
        eps = 1 / math.sqrt(1 + theta * theta)
        analytic = -1 / (theta * eps**3)
        assert analytic == pytest.approx(central_diff(theta_of_epsilon, eps, 1e-6), rel=1e-5)

    @given(st.integers(1, 40), st.integers(1, 2000))
    def test_forms_agree(self, h, e_sq):
        core = core_for(h, e_sq)
        s = swing_metrics(core)
        assert math.isclose(csf_exact(core), -1 / (s.theta * s.epsilon**3), rel_tol=1e-9)
        assert csf_exact(core) < 0


class TestClassify:
    def case(self, counts):
        recs = records_from_counts(counts)
        return classify_case(recs, core_metrics(recs))

    @pytest.mark.parametrize(
        "counts, label",
        [
            ([1], CaseLabel.CASE_1),
            ([9], CaseLabel.CASE_2),
            ([1] * 5, CaseLabel.CASE_3),
            ([0, 0], CaseLabel.DEGENERATE_ZERO),
            ([], CaseLabel.DEGENERATE_ZERO),
            ([2, 1] + [0] * 120, CaseLabel.CASE_4_1),
            ([500, 3], CaseLabel.CASE_4_2),
            ([1000] + [3] * 149, CaseLabel.CASE_4_3_1),
            ([151] * 150, CaseLabel.CASE_4_3_2),
            ([110] + [10] * 9 + [1] * 100, CaseLabel.CASE_4_3_3),
            ([2, 2], CaseLabel.CASE_4_1),
        ],
    )
    def test_labels(self, counts, label):
        assert self.case(counts) is label
