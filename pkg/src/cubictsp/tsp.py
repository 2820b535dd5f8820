"""Branch-and-reduce search for the forced traveling salesman problem.

The search alternates the reduction rules, the 4-cycle spanning-tree
shortcut, and a two-way branch on one unforced edge (forced first, then
deleted).  All mutations go through the graph's trail, so the search
runs in linear space and leaves the input graph as it found it.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field

from .fourcycle import covers_disjoint_4cycles, solve_4cycles
from .graph import BudgetExceeded, ContractViolation, Multigraph
from .matches import TSP, quad_parts
from .reduce import RETURN_NONE, ReturnCost, ensure_matches, reduce


@dataclass(frozen=True)
class Tour:
    cost: object
    edges: frozenset


@dataclass(frozen=True)
class Measure:
    n: int
    f: int
    c: int

    @property
    def s(self) -> int:
        return self.n - self.f - self.c


@dataclass
class SearchStats:
    calls: int = 0
    branch_nodes: int = 0
    max_depth: int = 0
    rule_counts: dict = field(default_factory=dict)
    measure0: int | None = None
    # branch nodes whose children miss every case of the recurrence
    measure_violations: list = field(default_factory=list)
    monotone_violations: int = 0

    def lines(self) -> list[str]:
        out = [
            f"calls={self.calls}",
            f"branch_nodes={self.branch_nodes}",
            f"max_depth={self.max_depth}",
        ]
        if self.measure0 is not None:
            out.append(f"measure0={self.measure0}")
        for rule in sorted(self.rule_counts):
            out.append(f"rule_{rule}={self.rule_counts[rule]}")
        return out


def measure(g: Multigraph) -> Measure:
    ms = ensure_matches(g, TSP)
    return Measure(g.n, g.n_forced, len(ms["qcomp"]))


def count_4cycle_components(g: Multigraph) -> int:
    """From-scratch count of unforced components that are 4-cycles."""
    adj: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for e in g.live_edges():
        if not g.ef[e]:
            adj[g.eu[e]].append(e)
            adj[g.ev[e]].append(e)
    seen = set()
    count = 0
    for v in adj:
        if v in seen or not adj[v]:
            continue
        stack, comp, edges = [v], [], set()
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for e in adj[x]:
                edges.add(e)
                y = g.other(e, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(comp) == 4 and len(edges) == 4 and all(len(adj[x]) == 2 for x in comp):
            count += 1
    return count


def choose_branch_edge(g: Multigraph) -> tuple[str, int]:
    """Pick ``(case, edge)``: a 4-cycle exit, else an edge next to F (off the
    4-cycle components when possible), else any edge."""
    ms = ensure_matches(g, TSP)
    quads = ms["quad_branch"]
    if quads:
        best = None
        for members in quads.values():
            verts, edges = quad_parts(members)
            cyc = set(edges)
            fout = [any(g.ef[e] for e in g.inc[x] if e not in cyc) for x in verts]
            for x, fo in zip(verts, fout):
                if fo:
                    continue
                for e in g.inc[x]:
                    if e not in cyc and not g.ef[e] and (best is None or e < best):
                        best = e
        if best is not None:
            return "3a", best
    adj = ms["adj_forced"]
    if adj:
        # an edge of a 4-cycle component would throw away that component's
        # credit in s, so such edges are only taken when nothing else is left
        in_quads = {e for members in ms["qcomp"].values() for e in quad_parts(members)[1]}
        outside = [key for key in adj if key[0] not in in_quads]
        return "3b", min(outside or adj)[0]
    if g.n_forced == 0 and g.n_unforced:
        return "3c", min(e for e in g.live_edges())
    raise ContractViolation("no unforced edge to branch on")


class _Search:
    def __init__(self, g, stats, first, prune, check, node_limit=None):
        self.g = g
        self.node_limit = node_limit
        self.stats = stats
        self.first = first
        self.prune = prune
        self.check = check
        self.best: ReturnCost | None = None
        self.done = False
        # every tour has exactly n edges, so none is cheaper than n * min weight
        weights = [g.ew[e] for e in g.live_edges()]
        self.floor = g.n * min(weights) if weights else None

    def lower_bound_exceeds(self) -> bool:
        # half the sum over vertices of the two cheapest usable incident edges;
        # ties are cut too, since only a strictly cheaper tour replaces best
        g = self.g
        if self.best is None or g.n < 3:
            return False
        total = 0
        for v in g.vertices():
            ws = []
            forced = []
            for e in g.inc[v]:
                if g.eu[e] == g.ev[e]:
                    continue
                (forced if g.ef[e] else ws).append(g.ew[e])
            if len(forced) >= 2:
                total += forced[0] + forced[1]
                continue
            ws.sort()
            pick = forced + ws[: 2 - len(forced)]
            if len(pick) < 2:
                return True
            total += pick[0] + pick[1]
        return total >= 2 * self.best.cost

    def offer(self, res: ReturnCost) -> None:
        if self.best is None or res.cost < self.best.cost:
            self.best = res
        if self.first or (self.prune and self.best.cost <= self.floor):
            self.done = True

    def run(self, depth: int):
        """Returns the child's measure after reduction, or None if it resolved."""
        g, stats = self.g, self.stats
        stats.calls += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        out = reduce(g, TSP, counts=stats.rule_counts)
        if out is RETURN_NONE:
            return None
        if isinstance(out, ReturnCost):
            self.offer(out)
            return None
        if covers_disjoint_4cycles(g):
            res = solve_4cycles(g)
            if isinstance(res, ReturnCost):
                self.offer(res)
            return None
        if self.prune and self.lower_bound_exceeds():
            return None
        s = measure(g).s
        if self.check and count_4cycle_components(g) != len(g.matches["qcomp"]):
            raise AssertionError("incremental 4-cycle component count drifted")
        case, e = choose_branch_edge(g)
        stats.branch_nodes += 1
        if self.node_limit is not None and stats.branch_nodes > self.node_limit:
            raise BudgetExceeded(f"more than {self.node_limit} branch nodes")
        mark = g.mark()
        g.force_edge(e)
        s1 = self.run(depth + 1)
        g.undo_to(mark)
        s2 = None
        if not self.done:
            g.delete_edge(e)
            s2 = self.run(depth + 1)
            g.undo_to(mark)
        if self.check:
            self._check_pair(case, s, s1, s2)
        return s

    def _check_pair(self, case, s, s1, s2):
        stats = self.stats
        for child in (s1, s2):
            if child is not None and child > s:
                stats.monotone_violations += 1
        if case == "3c" or self.done:
            return
        if s1 is None or s2 is None:
            live = [c for c in (s1, s2) if c is not None]
            if all(c <= s - 1 for c in live):
                return
        else:
            lo, hi = min(s1, s2), max(s1, s2)
            if hi <= s - 3 or (hi <= s - 2 and lo <= s - 5):
                return
        stats.measure_violations.append((case, s, s1, s2))


def solve(g: Multigraph, stats: SearchStats | None = None, *, first: bool = False,
          prune: bool = False, check: bool = False, node_limit: int | None = None) -> Tour | None:
    """Minimum-cost Hamiltonian cycle of ``g`` containing every forced edge.

    Returns a ``Tour`` over original edge ids, or None.  ``first`` stops at
    the first Hamiltonian cycle found (not necessarily optimal); ``prune``
    enables cost lower bounds that never change the result; ``check``
    records measure-recurrence violations in ``stats``; ``node_limit``
    raises ``BudgetExceeded`` (with the graph restored) past that many
    branch nodes.
    """
    if g.max_degree() > 3:
        raise ContractViolation("solve needs maximum degree 3; split degree-4 vertices first")
    if stats is None:
        stats = SearchStats()
    ensure_matches(g, TSP)
    stats.measure0 = measure(g).s
    search = _Search(g, stats, first, prune, check, node_limit)
    mark = g.mark()
    try:
        search.run(0)
    finally:
        g.undo_to(mark)
    if search.best is None:
        return None
    return Tour(search.best.cost, search.best.tour)


def node_bound(s0: int, a: int = 64, b: int = 64) -> float:
    return a * 2 ** (s0 / 3) + b


def fitted_base(sizes, nodes) -> float:
    """Least-squares growth base of ``nodes`` against ``sizes`` (log scale)."""
    xs = list(sizes)
    ys = [math.log2(max(1, k)) for k in nodes]
    if len(set(xs)) < 2:
        return float("nan")
    slope, _ = statistics.linear_regression(xs, ys)
    return 2 ** slope
