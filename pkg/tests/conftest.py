import os
import random

from hypothesis import HealthCheck, settings, strategies as st

from cubictsp.generators import random_cubic, random_matching, random_weights, reweighted
from cubictsp.graph import Multigraph
from cubictsp.oracle import cycle_cost

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def weighted_cubic(n, rng, max_forced=3, lo=1, hi=100):
    g0 = random_cubic(n, seed=rng.randrange(2**32))
    forced = random_matching(g0, rng.randint(0, max_forced), rng)
    return reweighted(g0, random_weights(g0, rng, lo, hi), forced)


def random_multigraph(n, rng, p_forced=0.3, lo=1, hi=20, degree=3):
    """Degree-bounded multigraph from an unrejected pairing: loops and parallels allowed."""
    points = [v for v in range(n) for _ in range(degree)]
    rng.shuffle(points)
    keep = rng.randint(len(points) // 2, len(points))
    points = points[:keep - keep % 2]
    edges = []
    for i in range(0, len(points), 2):
        edges.append((points[i], points[i + 1], rng.randint(lo, hi), rng.random() < p_forced))
    return Multigraph.from_edges(n, edges)


def is_tour(g, edges):
    """``edges`` (original ids of the unreduced graph ``g``) form a Hamiltonian cycle."""
    edges = set(edges)
    if not edges <= set(g.live_edges()):
        return False
    n = g.n
    if len(edges) != n:
        return False
    if n == 1:
        (e,) = edges
        return g.eu[e] == g.ev[e]
    deg = {v: 0 for v in g.vertices()}
    adj = {v: [] for v in g.vertices()}
    for e in edges:
        u, v = g.eu[e], g.ev[e]
        if u == v:
            return False
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def check_tour(g, tour):
    assert is_tour(g, tour.edges)
    assert set(g.forced_edges()) <= set(tour.edges)
    assert cycle_cost(g, tour.edges) == tour.cost


@st.composite
def cubic_instances(draw, sizes=(4, 6, 8, 10), max_forced=3):
    n = draw(st.sampled_from(sizes))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    if n == 4:
        from cubictsp.generators import k4
        g0 = k4()
        forced = random_matching(g0, rng.randint(0, max_forced), rng)
        return reweighted(g0, random_weights(g0, rng), forced)
    return weighted_cubic(n, rng, max_forced)


@st.composite
def multigraphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_multigraph(n, rng)


def pytest_terminal_summary(terminalreporter):
    from criteria import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
