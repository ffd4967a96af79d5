import os
import re
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from citeswing import records_from_counts  # noqa: E402

WORKED = [10, 8, 5, 4, 3, 2, 1]


def random_vectors(n=1000, seed=20201019, max_len=100, max_count=500):
    """Seeded corpus of citation vectors with h >= 1 and e_sq >= 1."""
    from oracles import brute_decomposition

    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        length = int(rng.integers(1, max_len + 1))
        counts = rng.integers(0, max_count + 1, size=length).tolist()
        h, e_sq, *_ = brute_decomposition(counts)
        if h >= 1 and e_sq >= 1:
            out.append(counts)
    return out


@pytest.fixture
def worked_records():
    return records_from_counts(WORKED)


@pytest.fixture(scope="session")
def vector_corpus():
    return random_vectors()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion is not None and rep.when == "call":
        rep.user_properties.append(("criterion", criterion.args[0]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(text): acceptance criterion covered by the test")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            for key, text in getattr(rep, "user_properties", []):
                if key == "criterion":
                    lines.append((text, "PASS" if status == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, verdict in sorted(lines, key=lambda x: (int(re.match(r"\d+", x[0]).group()), x[0])):
            terminalreporter.write_line(f"{verdict}  {text}")
