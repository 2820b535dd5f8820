import random
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from cubictsp.generators import cube, gadget_cycle, k4, petersen, prism, reweighted, torus_dual
from cubictsp.graph import BudgetExceeded, ContractViolation, Multigraph
from cubictsp.matches import TSP, quad_parts
from cubictsp.oracle import oracle_tsp
from cubictsp.reduce import ensure_matches, step
from cubictsp.tsp import (SearchStats, choose_branch_edge, count_4cycle_components, fitted_base,
                          measure, node_bound, solve)

from conftest import check_tour, cubic_instances, multigraphs, weighted_cubic

DATA = Path(__file__).parent / "data"


def test_petersen_has_no_tour():
    assert solve(petersen()) is None


def test_k4_all_three_cycles_cost_fourteen():
    w = {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5, (2, 3): 6}
    g0 = k4()
    g = reweighted(g0, [w[(g0.eu[e], g0.ev[e])] for e in range(6)])
    tour = solve(g)
    assert tour.cost == 14
    check_tour(g, tour)


def test_gadget_cycle_unit_weights():
    g = gadget_cycle(2)
    tour = solve(g)
    assert tour.cost == 12 == oracle_tsp(g)
    check_tour(g, tour)


def test_torus_dual_400_first_tour():
    g = torus_dual(10, 20)
    tour = solve(g, first=True)
    assert g.n == 400
    check_tour(g, tour)


def test_degree_four_rejected():
    g = Multigraph.from_edges(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(ContractViolation):
        solve(g)


def test_branch_rule_3c_on_petersen():
    assert choose_branch_edge(petersen()) == ("3c", 0)


def test_branch_rule_3b_next_to_forced_spoke():
    g = petersen()
    g.force_edge(7)   # spoke 2-7; unforced neighbours are 1, 2, 10, 12
    assert choose_branch_edge(g) == ("3b", 1)


def test_branch_rule_3a_off_a_bare_cycle_vertex():
    g = cube()
    g.force_edge(8)
    g.force_edge(9)
    # bottom square: forced exits at 0 and 1, bare corners 2 and 3 leave by 10 and 11
    assert choose_branch_edge(g) == ("3a", 10)


def test_branch_without_unforced_edge():
    g = Multigraph.from_edges(3, [(0, 1, 1, True), (1, 2, 1, True), (2, 0, 1, True)])
    with pytest.raises(ContractViolation):
        choose_branch_edge(g)


def test_measure_of_cube_with_vertical_forced():
    g = reweighted(cube(), forced=(8, 9, 10, 11))
    m = measure(g)
    assert (m.n, m.f, m.c, m.s) == (8, 4, 2, 2)


@given(cubic_instances())
def test_matches_oracle(g):
    stats = SearchStats()
    tour = solve(g, stats, check=True)
    want = oracle_tsp(g)
    assert (tour.cost if tour else None) == want
    if tour:
        check_tour(g, tour)
    assert not stats.measure_violations
    assert stats.monotone_violations == 0


@given(multigraphs(max_n=8))
def test_matches_oracle_on_multigraphs(g):
    if g.max_degree() > 3:
        return
    tour = solve(g, check=True)
    want = oracle_tsp(g)
    assert (tour.cost if tour else None) == want
    if tour:
        check_tour(g, tour)


@given(cubic_instances(sizes=(8, 10, 12)))
def test_pruning_keeps_the_optimum(g):
    plain, pruned = SearchStats(), SearchStats()
    a = solve(g, plain)
    b = solve(g, pruned, prune=True)
    assert (a.cost if a else None) == (b.cost if b else None)
    assert pruned.branch_nodes <= plain.branch_nodes


@given(cubic_instances(sizes=(8, 10)))
def test_solve_leaves_graph_untouched(g):
    before = g.canonical()
    solve(g)
    assert g.canonical() == before


@given(st.integers(0, 2**32 - 1))
def test_incremental_component_count(seed):
    rng = random.Random(seed)
    g = weighted_cubic(rng.choice([8, 10, 12]), rng)
    ms = ensure_matches(g, TSP)
    for _ in range(40):
        edges = [e for e in g.live_edges() if not g.ef[e]]
        r = rng.random()
        if r < 0.3 and edges:
            g.force_edge(rng.choice(edges))
        elif r < 0.5 and edges:
            g.delete_edge(rng.choice(edges))
        elif step(g, TSP)[1] is not None:
            break
        ms.flush()
        assert count_4cycle_components(g) == len(ms["qcomp"])


def test_node_limit_restores_graph():
    g = torus_dual(5, 5)
    before = g.canonical()
    with pytest.raises(BudgetExceeded):
        solve(g, node_limit=10)
    assert g.canonical() == before


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_gadget_nodes_within_envelope(k):
    g = gadget_cycle(k)
    stats = SearchStats()
    solve(g, stats, check=True)
    assert stats.branch_nodes <= node_bound(stats.measure0)
    assert not stats.measure_violations


def test_stats_lines_are_key_value():
    stats = SearchStats()
    solve(prism(5), stats)
    for line in stats.lines():
        key, value = line.split("=")
        assert key and value


def test_fitted_base():
    assert fitted_base([1, 2, 3], [2, 4, 8]) == pytest.approx(2.0)


def test_branching_next_to_f_avoids_quad_components():
    g = Multigraph.read(str(DATA / "branch_next_to_quad.txt"))
    ms = ensure_matches(g, TSP)
    assert ms["qcomp"]
    quad_edges = {e for members in ms["qcomp"].values() for e in quad_parts(members)[1]}
    case, e = choose_branch_edge(g)
    assert case == "3b" and e not in quad_edges
    stats = SearchStats()
    tour = solve(g, stats, check=True)
    assert (tour.cost if tour else None) == oracle_tsp(g, max_n=24)
    assert not stats.measure_violations
