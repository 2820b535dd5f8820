"""List or count every Hamiltonian cycle of a simple graph of degree <= 3.

Cycles are reported through a sink as deltas against the previously
reported cycle: the search keeps a stack of the original edges it has
forced, and between two outputs only the part of that stack above its
low-water mark can have changed.  ``explicit`` turns the delta stream back
into full edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .graph import BudgetExceeded, Multigraph
from .matches import LISTING
from .reduce import CYCLE, RETURN_NONE, ensure_matches, reduce


class CycleEvent(NamedTuple):
    kind: str            # "begin", "add", "remove" or "end"
    edges: tuple = ()


BEGIN = CycleEvent("begin")
END = CycleEvent("end")

Sink = Callable[[CycleEvent], None]


@dataclass
class ListingStats:
    calls: int = 0
    branch_nodes: int = 0
    cycles: int = 0
    max_depth: int = 0
    rule_counts: dict = field(default_factory=dict)
    measure0: int | None = None
    measure_violations: list = field(default_factory=list)
    monotone_violations: int = 0

    def lines(self) -> list[str]:
        out = [
            f"calls={self.calls}",
            f"branch_nodes={self.branch_nodes}",
            f"cycles={self.cycles}",
            f"max_depth={self.max_depth}",
        ]
        if self.measure0 is not None:
            out.append(f"measure0={self.measure0}")
        for rule in sorted(self.rule_counts):
            out.append(f"rule_{rule}={self.rule_counts[rule]}")
        return out


def check_listable(g: Multigraph) -> None:
    if not g.is_simple():
        raise ValueError("cycle listing needs a simple graph (no parallel edges or self-loops)")
    if g.max_degree() > 3:
        raise ValueError("cycle listing needs maximum degree 3")


class _Lister:
    def __init__(self, g: Multigraph, sink: Sink | None, stats: ListingStats, check: bool,
                 node_limit: int | None = None):
        self.g = g
        self.node_limit = node_limit
        self.sink = sink
        self.stats = stats
        self.check = check
        self.base = len(g.forced_log)
        self.emitted: list[int] = []
        self.fresh = True
        self.initial = sorted(p for e in g.live_edges() if g.ef[e] for p in g.ep[e])

    def _originals(self, edges) -> list[int]:
        ep = self.g.ep
        return [p for e in edges for p in ep[e]]

    def emit(self) -> None:
        stats = self.stats
        stats.cycles += 1
        sink = self.sink
        g = self.g
        log = g.forced_log
        if sink is None:
            g.forced_low = len(log)
            return
        base = self.base
        common = min(g.forced_low, base + len(self.emitted)) - base
        gone = self._originals(self.emitted[common:])
        new = self._originals(log[base + common:])
        self.emitted[common:] = log[base + common:]
        g.forced_low = len(log)
        if self.fresh:
            new = self.initial + new
            self.fresh = False
        if gone and new:
            both = set(gone) & set(new)
            gone = [p for p in gone if p not in both]
            new = [p for p in new if p not in both]
        sink(BEGIN)
        if gone:
            sink(CycleEvent("remove", tuple(sorted(gone))))
        if new:
            sink(CycleEvent("add", tuple(sorted(new))))
        sink(END)

    def run(self, depth: int):
        g, stats = self.g, self.stats
        stats.calls += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        out = reduce(g, LISTING, counts=stats.rule_counts)
        if out is RETURN_NONE:
            return None
        if out is CYCLE:
            self.emit()
            return None
        u = g.n_unforced
        adj = g.matches["adj_forced"]
        if adj:
            e = min(adj)[0]
            first_branch = False
        else:
            e = min(g.live_edges())
            first_branch = True
        stats.branch_nodes += 1
        if self.node_limit is not None and stats.branch_nodes > self.node_limit:
            raise BudgetExceeded(f"more than {self.node_limit} branch nodes")
        mark = g.mark()
        g.force_edge(e)
        u1 = self.run(depth + 1)
        g.undo_to(mark)
        g.delete_edge(e)
        u2 = self.run(depth + 1)
        g.undo_to(mark)
        if self.check:
            self._check_pair(first_branch, u, u1, u2)
        return u

    def _check_pair(self, first_branch, u, u1, u2) -> None:
        stats = self.stats
        for child in (u1, u2):
            if child is not None and child > u:
                stats.monotone_violations += 1
        if first_branch:
            return
        if u1 is None or u2 is None:
            if all(c <= u - 1 for c in (u1, u2) if c is not None):
                return
        else:
            lo, hi = min(u1, u2), max(u1, u2)
            if hi <= u - 4 or (hi <= u - 3 and lo <= u - 6):
                return
        stats.measure_violations.append((u, u1, u2))


def list_cycles(g: Multigraph, sink: Sink | None = None, stats: ListingStats | None = None,
                check: bool = False, node_limit: int | None = None) -> ListingStats:
    """Report every Hamiltonian cycle through the forced edges exactly once.

    With ``sink=None`` cycles are only counted.  The graph is restored
    before returning, also when ``node_limit`` raises ``BudgetExceeded``.
    """
    check_listable(g)
    if stats is None:
        stats = ListingStats()
    ensure_matches(g, LISTING)
    stats.measure0 = g.n_unforced
    lister = _Lister(g, sink, stats, check, node_limit)
    g.forced_low = len(g.forced_log)
    mark = g.mark()
    try:
        lister.run(0)
    finally:
        g.undo_to(mark)
    return stats


def count_cycles(g: Multigraph, stats: ListingStats | None = None) -> int:
    return list_cycles(g, None, stats).cycles


def explicit(callback: Callable[[frozenset], None]) -> Sink:
    """Sink adapter that hands each completed cycle to ``callback`` as a set."""
    current: set[int] = set()

    def sink(ev: CycleEvent) -> None:
        if ev.kind == "add":
            current.update(ev.edges)
        elif ev.kind == "remove":
            current.difference_update(ev.edges)
        elif ev.kind == "end":
            callback(frozenset(current))

    return sink


def all_cycles(g: Multigraph) -> list[frozenset]:
    out: list[frozenset] = []
    list_cycles(g, explicit(out.append))
    return out


def format_events(events) -> list[str]:
    """Stream text: ``C``, ``+ ids``, ``- ids``, ``.``."""
    lines = []
    for ev in events:
        if ev.kind == "begin":
            lines.append("C")
        elif ev.kind == "end":
            lines.append(".")
        else:
            sign = "+" if ev.kind == "add" else "-"
            lines.append(" ".join([sign] + [str(p) for p in ev.edges]))
    return lines
