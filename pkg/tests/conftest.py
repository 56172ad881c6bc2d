import random

import pytest

from pseudolines.network import Network, random_network


def small_networks(count, seed, max_n=5, max_extra=6):
    """Seeded random supports: a random reduced word plus a few extra comparators."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        extra = rng.randint(0, max_extra)
        net = random_network(n, extra, rng)
        if net.m <= 16:
            out.append(net)
    return out


def two_line_support(p):
    """Two pseudolines touching p times: p + 1 comparators on one slot pair."""
    return Network.from_levels(2, [1] * (p + 1))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
