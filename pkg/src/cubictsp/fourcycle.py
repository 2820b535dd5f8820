"""Exact solve when the unforced edges form vertex-disjoint 4-cycles.

Each unforced 4-cycle C_i contributes its cheaper pair of opposite edges
H_i.  F together with all the H_i is a spanning 2-factor; its cycles are
the vertices of a component graph, joined through every C_i whose H_i
touches two different cycles.  Swapping H_i for the other pair merges
those two cycles at a price of cost(C_i - H_i) - cost(H_i), so the
optimum tour is cost(F + H) plus a minimum spanning tree of that graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Multigraph
from .matches import quad_parts
from .reduce import RETURN_NONE, ReturnCost, ensure_matches, real_tour


@dataclass
class FourCycleCover:
    cycles: list[tuple]            # edges of C_i in cyclic order
    cheap: list[tuple]             # H_i
    dear: list[tuple]              # C_i minus H_i
    component: dict[int, int]      # vertex -> component root of F + H
    patch_edges: list[tuple] = field(default_factory=list)  # (cost, i, root_a, root_b)


class _DSU:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def covers_disjoint_4cycles(g: Multigraph) -> bool:
    """True iff every component of the unforced subgraph is a 4-cycle."""
    ms = ensure_matches(g)
    return g.n_unforced > 0 and g.n_unforced == 4 * len(ms["qcomp"])


def build_cover(g: Multigraph) -> FourCycleCover:
    ms = ensure_matches(g)
    cycles, cheap, dear = [], [], []
    ew = g.ew
    for key in sorted(ms["qcomp"]):
        _, edges = quad_parts(ms["qcomp"][key])
        p = (edges[0], edges[2])
        q = (edges[1], edges[3])
        wp, wq = ew[p[0]] + ew[p[1]], ew[q[0]] + ew[q[1]]
        if wq < wp or (wq == wp and min(q) < min(p)):
            p, q = q, p
        cycles.append(edges)
        cheap.append(p)
        dear.append(q)
    dsu = _DSU()
    for e in g.live_edges():
        if g.ef[e]:
            dsu.union(g.eu[e], g.ev[e])
    for pair in cheap:
        for e in pair:
            dsu.union(g.eu[e], g.ev[e])
    comp = {v: dsu.find(v) for v in g.vertices()}
    cover = FourCycleCover(cycles, cheap, dear, comp)
    for i, (p, q) in enumerate(zip(cheap, dear)):
        ra, rb = comp[g.eu[p[0]]], comp[g.eu[p[1]]]
        if ra != rb:
            cost = ew[q[0]] + ew[q[1]] - ew[p[0]] - ew[p[1]]
            cover.patch_edges.append((cost, i, ra, rb))
    return cover


def solve_4cycles(g: Multigraph):
    """``ReturnCost`` for the cheapest tour, or ``RETURN_NONE`` if the
    component graph is disconnected."""
    cover = build_cover(g)
    roots = set(cover.component.values())
    dsu = _DSU()
    chosen = []
    for cost, i, ra, rb in sorted(cover.patch_edges):
        if dsu.union(ra, rb):
            chosen.append(i)
    if len(chosen) != len(roots) - 1:
        return RETURN_NONE
    swap = set(chosen)
    tour = [e for e in g.live_edges() if g.ef[e]]
    for i in range(len(cover.cycles)):
        tour.extend(cover.dear[i] if i in swap else cover.cheap[i])
    cost = sum((g.ew[e] for e in tour), 0)
    prov = frozenset().union(*(g.ep[e] for e in tour))
    return ReturnCost(cost, real_tour(prov))
