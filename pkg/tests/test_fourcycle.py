import random

from hypothesis import given, strategies as st

from cubictsp.fourcycle import build_cover, covers_disjoint_4cycles, solve_4cycles
from cubictsp.generators import cube, petersen, prism, reweighted
from cubictsp.graph import Multigraph
from cubictsp.oracle import oracle_tsp
from cubictsp.reduce import RETURN_NONE, ReturnCost

from conftest import is_tour

VERTICAL = (8, 9, 10, 11)


def test_cube_with_vertical_forced_is_covered():
    assert covers_disjoint_4cycles(reweighted(cube(), forced=VERTICAL))


def test_petersen_not_covered():
    assert not covers_disjoint_4cycles(petersen())


def test_triangular_prism_not_covered():
    assert not covers_disjoint_4cycles(reweighted(prism(3), forced=[6]))


def test_cube_unit_weights():
    g = reweighted(cube(), forced=VERTICAL)
    res = solve_4cycles(g)
    assert res.cost == 8 == oracle_tsp(g)
    assert is_tour(g, res.tour)


def test_cube_cheap_pair_on_top():
    w = [1] * 12
    w[4], w[6], w[5], w[7] = 1, 1, 5, 5
    g = reweighted(cube(), w, VERTICAL)
    cover = build_cover(g)
    assert (4, 6) in cover.cheap
    res = solve_4cycles(g)
    assert res.cost == oracle_tsp(g)
    assert is_tour(g, res.tour)


def test_disconnected_component_graph_returns_none():
    # two disjoint copies of an unforced 4-cycle with both diagonals forced
    edges = []
    for b in (0, 4):
        edges += [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b),
                  (b, b + 2, 1, True), (b + 1, b + 3, 1, True)]
    g = Multigraph.from_edges(8, edges)
    assert covers_disjoint_4cycles(g)
    assert solve_4cycles(g) is RETURN_NONE


def _covered_instance(rng):
    """Unforced disjoint 4-cycles joined by a random forced perfect matching."""
    k = rng.randint(1, 3)
    n = 4 * k
    edges = []
    for b in range(0, n, 4):
        edges += [(b + i, b + (i + 1) % 4, rng.randint(1, 30)) for i in range(4)]
    ends = list(range(n))
    rng.shuffle(ends)
    for i in range(0, n, 2):
        edges.append((ends[i], ends[i + 1], rng.randint(1, 30), True))
    return Multigraph.from_edges(n, edges)


@given(st.integers(0, 2**32 - 1))
def test_matches_oracle_and_swaps_whole_cycles(seed):
    rng = random.Random(seed)
    for _ in range(5):
        g = _covered_instance(rng)
        if not covers_disjoint_4cycles(g):
            continue
        res = solve_4cycles(g)
        want = oracle_tsp(g)
        got = res.cost if isinstance(res, ReturnCost) else None
        assert got == want
        if got is None:
            continue
        assert is_tour(g, res.tour)
        cover = build_cover(g)
        base = set(g.forced_edges()) | {e for pair in cover.cheap for e in pair}
        diff = set(res.tour) ^ base
        for cyc in cover.cycles:
            part = diff & set(cyc)
            assert not part or part == set(cyc)
        assert all(c >= 0 for c, *_ in cover.patch_edges)
