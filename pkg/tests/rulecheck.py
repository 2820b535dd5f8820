"""Single-rule soundness checks against the enumeration oracle."""

import random

from cubictsp.generators import k4, random_weights, reweighted
from cubictsp.matches import LISTING, TSP
from cubictsp.oracle import cycle_cost, oracle_cycles
from cubictsp.reduce import CYCLE, LISTING_RULES, RETURN_NONE, TSP_RULES, apply_rule, ensure_matches, real_tour, step

from conftest import random_multigraph, weighted_cubic

TSP_RULE_IDS = ("1b", "1f", "1g", "1h", "1i", "1j")
LISTING_RULE_IDS = ("L1e", "L1c", "L1d")


def solutions(g):
    """Sorted (cost, original edge set) pairs of every forced Hamiltonian cycle."""
    out = []
    for c in oracle_cycles(g):
        prov = frozenset().union(*(g.ep[e] for e in c))
        out.append((cycle_cost(g, c), tuple(sorted(real_tour(prov)))))
    return sorted(out)


def candidate_keys(g, rule):
    if rule in TSP_RULES:
        ms = ensure_matches(g, TSP)
        if (rule == "1g" and g.n <= 2) or (rule == "1h" and g.n <= 1):
            return []
        return sorted(ms[TSP_RULES[rule][0]])
    ms = ensure_matches(g, LISTING)
    return sorted(ms[LISTING_RULES[rule][0]])


def check_once(g, rule, key):
    """Apply ``rule`` at ``key`` to a copy of ``g``; return a failure string or None."""
    before = solutions(g)
    h = g.clone()
    out = apply_rule(h, rule, key)
    if out is RETURN_NONE:
        return None if not before else f"{rule} returned None but {len(before)} tours exist"
    after = solutions(h)
    if out is CYCLE and len(after) != 1:
        return f"{rule} reported a cycle, oracle finds {len(after)}"
    if rule == "1g":
        # dropping the dearer parallel edge keeps the optimum and loses only dominated tours
        if not set(after) <= set(before):
            return "1g created new tours"
        if (before[0][0] if before else None) != (after[0][0] if after else None):
            return "1g changed the optimum"
        return None
    if rule.startswith("L"):
        before = sorted(t for _, t in before)
        after = sorted(t for _, t in after)
    return None if before == after else f"{rule} changed the solution set"


def _tsp_states(rng, degree=3):
    r = rng.random()
    if r < 0.5:
        g = random_multigraph(rng.randint(2, 8), rng, degree=degree)
    elif r < 0.55:
        g = reweighted(k4(), random_weights(k4(), rng))
    else:
        g = weighted_cubic(rng.choice([6, 8, 10]), rng)
    yield g
    for _ in range(rng.randint(0, 12)):
        edges = [e for e in g.live_edges() if not g.ef[e]]
        r = rng.random()
        if r < 0.15 and edges:
            g.force_edge(rng.choice(edges))
        elif r < 0.25 and edges:
            g.delete_edge(rng.choice(edges))
        else:
            _, out = step(g, TSP)
            if out is not None:
                return
        yield g


def _listing_states(rng):
    g = weighted_cubic(rng.choice([6, 8, 10, 12]), rng, max_forced=2)
    yield g
    for _ in range(rng.randint(0, 12)):
        edges = [e for e in g.live_edges() if not g.ef[e]]
        r = rng.random()
        if r < 0.2 and edges:
            g.force_edge(rng.choice(edges))
        elif r < 0.35 and edges:
            g.delete_edge(rng.choice(edges))
        else:
            _, out = step(g, LISTING)
            if out is not None:
                return
        yield g


def rule_cases(rule, count, seed=0, max_states=200000):
    """Run ``check_once`` on ``count`` states where ``rule`` applies.

    Returns ``(cases, failures)``.
    """
    rng = random.Random(seed)
    cases, failures = 0, []
    seen = 0
    while cases < count and seen < max_states:
        if rule.startswith("L"):
            states = _listing_states(rng)
        elif rule == "1h":
            # with degree <= 3 a looped vertex can never lie on a tour
            states = _tsp_states(rng, degree=rng.choice((3, 4)))
        else:
            states = _tsp_states(rng)
        for g in states:
            seen += 1
            keys = candidate_keys(g, rule)
            if not keys:
                continue
            key = rng.choice(keys)
            msg = check_once(g, rule, key)
            cases += 1
            if msg:
                failures.append((msg, g.to_text(), key))
            if cases >= count:
                break
    return cases, failures
