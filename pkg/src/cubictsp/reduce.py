"""Non-branching reduction rules for forced TSP and forced cycle listing.

TSP mode runs the simplification rules to a fixpoint with immediate
returns first, path contraction second, then the remaining rules in a
fixed order.  The unbounded "F is a (non-)Hamiltonian cycle" tests are
replaced by their one-vertex forms: a forced self-loop, or two forced
parallel edges when only two vertices remain.

Listing mode uses the smaller rule set of the listing algorithm: it
forces degree-2 vertices and the side of a triangle opposite a forced
outside edge, and contracts forced paths while deleting any edge the
contraction would duplicate.  Weights are never consulted there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .graph import ContractViolation, Multigraph
from .matches import LISTING, TSP, MatchSets, quad_parts


class Outcome(enum.Enum):
    NONE = "none"
    EXHAUSTED = "exhausted"
    CYCLE = "cycle"


@dataclass(frozen=True)
class ReturnCost:
    cost: object
    tour: frozenset


RETURN_NONE = Outcome.NONE
EXHAUSTED = Outcome.EXHAUSTED
CYCLE = Outcome.CYCLE

TSP_ORDER = ("1a", "1e", "1cd", "1c2", "1f", "1b", "1g", "1h", "1i", "1j")
LISTING_ORDER = ("L1a", "L1e", "L1c", "L1d")

Trace = Callable[[str, tuple], None]


def ensure_matches(g: Multigraph, mode: str = TSP) -> MatchSets:
    ms = g.matches
    if ms is None or ms.mode != mode:
        ms = MatchSets(g, mode)
        g.matches = ms
    else:
        ms.flush()
    return ms


def real_tour(prov) -> frozenset:
    """Drop synthetic (negative) ids from a provenance set."""
    return frozenset(p for p in prov if p >= 0)


# ----------------------------------------------------------------------
# TSP rules; each takes (g, key) for a current match


def _fire_deg2(g, key):
    v = key[1]
    for e in list(dict.fromkeys(g.inc[v])):
        if not g.ef[e]:
            g.force_edge(e)


def _fire_contract(g, key):
    v = key[1]
    e1, e2 = [e for e in g.inc[v] if g.ef[e]]
    return g.merge_path(e1, e2, v)


def _fire_parallel(g, key):
    a, b = key
    fa, fb = g.ef[a], g.ef[b]
    if fa:
        g.delete_edge(b)
    elif fb:
        g.delete_edge(a)
    elif g.ew[a] > g.ew[b]:
        g.delete_edge(a)
    else:
        # equal costs drop the larger id
        g.delete_edge(b)


def _fire_uloop(g, key):
    g.delete_edge(key[0])


def _fire_triangle(g, key):
    x, y, z = g.matches["triangle"][key]
    return g.contract_triangle(x, y, z)


def _fire_quad_force(g, key):
    verts, edges = quad_parts(g.matches["quad_force"][key])
    cyc = set(edges)
    for x in verts:
        for e in g.inc[x]:
            if e not in cyc and not g.ef[e]:
                g.force_edge(e)


TSP_RULES = {
    "1f": ("contract", _fire_contract),
    "1b": ("deg2", _fire_deg2),
    "1g": ("parallel", _fire_parallel),
    "1h": ("uloop", _fire_uloop),
    "1i": ("triangle", _fire_triangle),
    "1j": ("quad_force", _fire_quad_force),
}


def detect_terminal(g: Multigraph):
    """Immediate-return check: ``RETURN_NONE``, a ``ReturnCost`` or ``None``.

    Covers degree 0/1 vertices, three forced edges at a vertex, a forced
    self-loop (Hamiltonian only when it is the last vertex) and two
    forced parallel edges joining the last two vertices.
    """
    ms = ensure_matches(g, TSP)
    return _terminal(g, ms)[1]


def _terminal(g, ms):
    if g.n == 0:
        return "1a", RETURN_NONE
    if ms["d01"]:
        return "1a", RETURN_NONE
    if ms["claw"]:
        return "1e", RETURN_NONE
    floops = ms["floop"]
    if floops:
        if g.n == 1:
            e = min(floops)[0]
            return "1cd", ReturnCost(g.ew[e], real_tour(g.ep[e]))
        return "1cd", RETURN_NONE
    if g.n == 2 and ms["fpair"]:
        a, b = min(ms["fpair"])
        return "1c2", ReturnCost(g.ew[a] + g.ew[b], real_tour(g.ep[a] | g.ep[b]))
    return None, None


def applicable(g: Multigraph, ms: MatchSets, rule: str) -> tuple | None:
    """Smallest match key at which ``rule`` applies now, honouring size guards."""
    if rule in TSP_RULES:
        pattern = TSP_RULES[rule][0]
        if rule == "1g" and g.n <= 2:
            return None
        if rule == "1h" and g.n <= 1:
            return None
    else:
        pattern = LISTING_RULES[rule][0]
    d = ms[pattern]
    return min(d) if d else None


def step(g: Multigraph, mode: str = TSP, trace: Trace | None = None):
    """Apply the highest-priority applicable rule once.

    Returns ``(rule, outcome)`` where outcome is ``RETURN_NONE``, a
    ``ReturnCost``, ``CYCLE`` (listing: the forced edges form a
    Hamiltonian cycle) or ``None`` when the rule merely rewrote the graph.
    ``(None, EXHAUSTED)`` means no rule applies.
    """
    ms = ensure_matches(g, mode)
    if mode == TSP:
        rule, out = _terminal(g, ms)
        if out is not None:
            if trace:
                trace(rule, ())
            return rule, out
        for rule in ("1f", "1b", "1g", "1h", "1i", "1j"):
            key = applicable(g, ms, rule)
            if key is not None:
                if trace:
                    trace(rule, key)
                TSP_RULES[rule][1](g, key)
                return rule, None
        return None, EXHAUSTED
    if g.n == 0 or ms["d01"] or ms["claw"]:
        if trace:
            trace("L1a", ())
        return "L1a", RETURN_NONE
    for rule in ("L1e", "L1c", "L1d"):
        d = ms[LISTING_RULES[rule][0]]
        if d:
            key = min(d)
            if trace:
                trace(rule, key)
            out = LISTING_RULES[rule][1](g, key)
            return rule, out
    return None, EXHAUSTED


def apply_rule(g: Multigraph, rule: str, key: tuple | None = None, mode: str | None = None):
    """Fire ``rule`` once at ``key`` (default: its smallest match), ignoring priority."""
    if mode is None:
        mode = LISTING if rule.startswith("L") else TSP
    ms = ensure_matches(g, mode)
    if key is None:
        key = applicable(g, ms, rule)
        if key is None:
            raise ContractViolation(f"rule {rule} has no applicable match")
    if rule in TSP_RULES:
        TSP_RULES[rule][1](g, key)
        return None
    return LISTING_RULES[rule][1](g, key)


def reduce(g: Multigraph, mode: str = TSP, trace: Trace | None = None, counts: dict | None = None):
    """Run the rules of ``mode`` until one returns or none applies."""
    while True:
        rule, out = step(g, mode, trace)
        if rule is not None and counts is not None:
            counts[rule] = counts.get(rule, 0) + 1
        if out is not None:
            return out


# ----------------------------------------------------------------------
# listing rules


def _fire_l_deg2(g, key):
    _fire_deg2(g, key)


def _fire_l_triangle(g, key):
    g.force_edge(key[0])


def _fire_l_contract(g, key):
    v = key[1]
    e1, e2 = [e for e in g.inc[v] if g.ef[e]]
    a, c = g.other(e1, v), g.other(e2, v)
    closing = g.edges_between(a, c)
    if closing:
        (e3,) = closing
        if g.n == 3:
            if not g.ef[e3]:
                g.force_edge(e3)
            return CYCLE
        if g.ef[e3]:
            return RETURN_NONE
        g.delete_edge(e3)
    g.merge_path(e1, e2, v)
    return None


LISTING_RULES = {
    "L1e": ("contract", _fire_l_contract),
    "L1c": ("deg2", _fire_l_deg2),
    "L1d": ("tri_force", _fire_l_triangle),
}
