"""Named graphs and graph families used by tests, acceptance and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Multigraph


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()
    seed: int | None = None

    def build(self) -> Multigraph:
        return gen(self.name, *self.params, seed=self.seed)


def _graph(n, edges, max_degree=4) -> Multigraph:
    return Multigraph.from_edges(n, edges, max_degree=max_degree)


def k4() -> Multigraph:
    return _graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> Multigraph:
    return _graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _graph(10, outer + spokes + inner)


def cube() -> Multigraph:
    """The 3-cube; edges 0-3 are the bottom face, 4-7 the top, 8-11 vertical."""
    bottom = [(0, 1), (1, 2), (2, 3), (3, 0)]
    top = [(4, 5), (5, 6), (6, 7), (7, 4)]
    vertical = [(i, i + 4) for i in range(4)]
    return _graph(8, bottom + top + vertical)


def prism(m: int) -> Multigraph:
    if m < 3:
        raise ValueError("prism needs m >= 3")
    a = [(i, (i + 1) % m) for i in range(m)]
    b = [(m + i, m + (i + 1) % m) for i in range(m)]
    rungs = [(i, m + i) for i in range(m)]
    return _graph(2 * m, a + b + rungs)


def _k33_minus_edge(base):
    """Vertices base..base+5; entry base, exit base+3 (the removed edge)."""
    edges = [(base + a, base + 3 + b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    return base, base + 3, edges, 6


def _k4_minus_edge(base):
    p, q, r, s = base, base + 1, base + 2, base + 3
    return p, q, [(p, r), (p, s), (q, r), (q, s), (r, s)], 4


def _chain(gadgets, forced_links) -> Multigraph:
    edges = []
    n = 0
    ends = []
    for make in gadgets:
        entry, exit_, es, size = make(n)
        edges.extend(es)
        ends.append((entry, exit_))
        n += size
    for i, (_, exit_) in enumerate(ends):
        entry = ends[(i + 1) % len(ends)][0]
        edges.append((exit_, entry, 1, forced_links))
    return _graph(n, edges)


def gadget_cycle(k: int, forced_links: bool = True) -> Multigraph:
    """``k`` copies of K_{3,3} minus an edge, joined in a ring: 6k vertices, 4**k cycles.

    The ring links lie on every Hamiltonian cycle whenever k >= 2, so they
    are marked forced by default; that also keeps the count at 4 for k = 1,
    where the single link closes K_{3,3} back up.
    """
    if k < 1:
        raise ValueError("gadget_cycle needs k >= 1")
    return _chain([_k33_minus_edge] * k, forced_links)


def k4_gadget_cycle(k: int, j: int = 1, forced_links: bool = True) -> Multigraph:
    """Ring of ``k`` K_{3,3}-minus-edge gadgets and ``j`` K_4-minus-edge gadgets."""
    if k < 0 or j < 1 or k + j < 1:
        raise ValueError("k4_gadget_cycle needs k >= 0 and j >= 1")
    return _chain([_k33_minus_edge] * k + [_k4_minus_edge] * j, forced_links)


def multigraph_ngon(n: int) -> Multigraph:
    """``n``-gon whose sides alternate single and double bonds (2**(n/2) cycles)."""
    if n < 4 or n % 2:
        raise ValueError("multigraph_ngon needs even n >= 4")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        if i % 2 == 0:
            edges.append((i, (i + 1) % n))
    return _graph(n, edges)


def torus_dual(p: int, q: int) -> Multigraph:
    """Dual of a p-by-q quad grid on the torus with one diagonal per quad.

    Each quad gives a lower triangle ``2(iq+j)`` and an upper triangle
    ``2(iq+j)+1``; two triangles are adjacent when they share a side.  The
    result is a 3-regular graph on 2pq vertices (simple for p, q >= 2).
    """
    if p < 2 or q < 2:
        raise ValueError("torus_dual needs p, q >= 2")

    def lower(i, j):
        return 2 * ((i % p) * q + (j % q))

    edges = []
    for i in range(p):
        for j in range(q):
            t0 = lower(i, j)
            edges.append((t0, t0 + 1))                 # diagonal
            edges.append((t0, lower(i + 1, j) + 1))    # vertical side x = i+1
            edges.append((t0, lower(i, j - 1) + 1))    # horizontal side y = j
    return _graph(2 * p * q, edges)


def random_cubic(n: int, seed: int | None = None, connected: bool = True,
                 max_tries: int = 10000) -> Multigraph:
    """Pairing-model cubic graph, rejecting loops, multi-edges and (optionally)
    disconnected samples."""
    return random_regular(n, 3, seed, connected=connected, max_tries=max_tries)


def random_regular(n: int, d: int, seed: int | None = None, connected: bool = True,
                   max_tries: int = 10000) -> Multigraph:
    if n * d % 2 or n <= d:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            key = (min(u, v), max(u, v))
            if u == v or key in pairs:
                ok = False
                break
            pairs.add(key)
        if not ok:
            continue
        edges = sorted(pairs)
        if connected and not _connected(n, edges):
            continue
        return _graph(n, edges)
    raise RuntimeError("random_regular: too many rejections")


def _connected(n, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def circulant(n: int, jumps) -> Multigraph:
    edges = set()
    for i in range(n):
        for j in jumps:
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return _graph(n, sorted(edges))


def four_regular_catalog() -> list[Multigraph]:
    """All simple 4-regular graphs on at most 7 vertices (there are four)."""
    def complement(n, removed):
        rm = {(min(u, v), max(u, v)) for u, v in removed}
        return _graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in rm])

    c7 = [(i, (i + 1) % 7) for i in range(7)]
    c3c4 = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]
    return [
        complement(5, []),
        complement(6, [(0, 1), (2, 3), (4, 5)]),
        complement(7, c7),
        complement(7, c3c4),
    ]


# ----------------------------------------------------------------------
# decorating a structure with weights and forced edges


def reweighted(g: Multigraph, weights=None, forced=()) -> Multigraph:
    """Copy of an unreduced graph with new weights and forced edge ids."""
    forced = set(forced)
    edges = []
    for e in sorted(g.live_edges()):
        u, v, w, f = g.edge(e)
        w = weights[e] if weights is not None else w
        edges.append((u, v, w, f or e in forced))
    return Multigraph.from_edges(len(g.inc), edges)


def random_weights(g: Multigraph, rng: random.Random, lo: int = 1, hi: int = 100) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(len(g.eu))]


def random_matching(g: Multigraph, size: int, rng: random.Random) -> list[int]:
    """Up to ``size`` pairwise vertex-disjoint non-loop edge ids."""
    edges = [e for e in g.live_edges() if g.eu[e] != g.ev[e]]
    rng.shuffle(edges)
    used: set[int] = set()
    out = []
    for e in edges:
        if len(out) == size:
            break
        u, v = g.eu[e], g.ev[e]
        if u in used or v in used:
            continue
        used.update((u, v))
        out.append(e)
    return sorted(out)


FAMILIES = {
    "k4": k4,
    "k33": k33,
    "petersen": petersen,
    "cube": cube,
    "prism": prism,
    "gadget_cycle": gadget_cycle,
    "k4_gadget_cycle": k4_gadget_cycle,
    "multigraph_ngon": multigraph_ngon,
    "torus_dual": torus_dual,
    "random_cubic": random_cubic,
    "random_regular": random_regular,
    "circulant": lambda n, *jumps: circulant(n, jumps),
}
SEEDED = {"random_cubic", "random_regular"}


def gen(family: str, *params, seed: int | None = None) -> Multigraph:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    if family in SEEDED:
        return FAMILIES[family](*params, seed=seed)
    return FAMILIES[family](*params)
