import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cubictsp.degree4 import (PARTITIONS, build_hitting_set, degree4_vertices, expansions, repetitions,
                              size_bound, solve_deterministic, solve_randomized, split)
from cubictsp.generators import circulant, four_regular_catalog, k4, random_weights, reweighted
from cubictsp.graph import ContractViolation, Multigraph
from cubictsp.oracle import oracle_cycles, oracle_tsp
from cubictsp.reduce import real_tour

from conftest import check_tour


def k5(rng=None):
    g = four_regular_catalog()[0]
    return reweighted(g, random_weights(g, rng)) if rng else g


def _survives(g, tour, choices):
    for v, c in zip(degree4_vertices(g), choices):
        slots = sorted(g.inc[v])
        used = tuple(i for i, e in enumerate(slots) if e in tour)
        if used in PARTITIONS[c]:
            return False
    return True


def test_split_k5_shape():
    h = split(k5(), [0] * 5)
    assert h.n == 10 and h.max_degree() == 3
    assert h.n_forced == 5
    assert all(h.ew[e] == 0 for e in h.live_edges() if h.ef[e])
    # n - |F| is unchanged by splitting
    assert h.n - h.n_forced == 5


def test_split_keeps_pairs_together():
    g = k5()
    h = split(g, [1, 0, 0, 0, 0])
    slots = sorted(g.inc[0])
    # digit 1 keeps slots (0, 2) on the original vertex
    assert sorted(h.inc[0])[:2] == [slots[0], slots[2]]


def test_split_choice_validation():
    with pytest.raises(ValueError):
        split(k5(), [0, 1])
    with pytest.raises(ValueError):
        split(k5(), [3, 0, 0, 0, 0])
    with pytest.raises(ContractViolation):
        degree4_vertices(Multigraph.from_edges(6, [(0, i) for i in range(1, 6)], max_degree=5))


def test_each_tour_survives_two_of_three_choices():
    g = k5()
    for tour in oracle_cycles(g):
        for v in degree4_vertices(g):
            slots = sorted(g.inc[v])
            used = tuple(i for i, e in enumerate(slots) if e in tour)
            assert sum(used not in part for part in PARTITIONS) == 2


@pytest.mark.parametrize("index", range(4))
def test_split_tours_are_the_surviving_tours(index):
    rng = random.Random(index)
    g = four_regular_catalog()[index]
    tours = oracle_cycles(g)
    f = len(degree4_vertices(g))
    for _ in range(4):
        choices = [rng.randrange(3) for _ in range(f)]
        h = split(g, choices)
        got = sorted(sorted(real_tour(frozenset().union(*(h.ep[e] for e in c)))) for c in oracle_cycles(h))
        want = sorted(sorted(t) for t in tours if _survives(g, t, choices))
        assert got == want


@pytest.mark.parametrize("k", range(1, 7))
def test_hitting_set_hits_everything(k):
    hs = build_hitting_set(k)
    assert len(hs.words) <= size_bound(k)
    for x in itertools.product(range(3), repeat=k):
        assert hs.hits(x)


def test_hitting_set_range():
    with pytest.raises(ValueError):
        build_hitting_set(0)


def test_repetitions():
    assert repetitions(0) == 1
    assert repetitions(5, 5.0) == 38


def test_cubic_input_has_one_expansion():
    assert list(expansions(0, 3)) == [[]]
    g = reweighted(k4(), [1, 2, 3, 4, 5, 6])
    assert solve_deterministic(g).cost == 14


def test_expansions_cover_every_vector():
    f, k = 5, 2
    vectors = list(expansions(f, k))
    for x in itertools.product(range(3), repeat=f):
        assert any(all(a != b for a, b in zip(v, x)) for v in vectors)


@settings(max_examples=10)
@given(st.integers(0, 2**32 - 1))
def test_deterministic_matches_oracle_for_every_group_size(seed):
    rng = random.Random(seed)
    g0 = rng.choice(four_regular_catalog()[:2])
    g = reweighted(g0, random_weights(g0, rng, 1, 50))
    want = oracle_tsp(g)
    for k in (1, 2, 3):
        tour = solve_deterministic(g, k=k)
        assert tour.cost == want
        check_tour(g, tour)


def test_randomized_on_circulant():
    g0 = circulant(8, (1, 2))
    g = reweighted(g0, random_weights(g0, random.Random(4)))
    tour = solve_randomized(g, seed=0, lam=3.0)
    check_tour(g, tour)
    assert tour.cost >= oracle_tsp(g)


def test_randomized_rejects_bad_lambda():
    with pytest.raises(ValueError):
        solve_randomized(k5(), lam=0)


def test_parallel_jobs_agree():
    g = reweighted(k5(), random_weights(k5(), random.Random(2)))
    assert solve_deterministic(g, k=2, jobs=2).cost == solve_deterministic(g, k=2).cost
