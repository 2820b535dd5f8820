"""Brute-force ground truth: subset DP for TSP and naive cycle enumeration.

Both read only the live edge list of a graph, so they stay independent of
the reduction machinery they are used to check.  Hamiltonian cycles of a
multigraph are: a self-loop when there is one vertex, two distinct
parallel edges when there are two, and ordinary loop-free cycles through
every vertex otherwise.
"""

from __future__ import annotations

from .graph import Multigraph


class OracleRefused(ValueError):
    """The instance is above the oracle's size guard."""


def _edge_list(g: Multigraph):
    verts = sorted(g.vertices())
    edges = [(e,) + g.edge(e) for e in g.live_edges()]
    return verts, edges


def _small_cycles(verts, edges) -> list[frozenset]:
    if len(verts) == 1:
        return [frozenset((e,)) for e, u, v, _, _ in edges if u == v]
    nonloop = [e for e, u, v, _, _ in edges if u != v]
    return [frozenset((a, b)) for i, a in enumerate(nonloop) for b in nonloop[i + 1:]]


def oracle_cycles(g: Multigraph, max_n: int = 14) -> list[frozenset]:
    """Every Hamiltonian cycle containing all forced edges, as edge-id sets."""
    verts, edges = _edge_list(g)
    if len(verts) > max_n:
        raise OracleRefused(f"{len(verts)} vertices exceeds enumeration guard {max_n}")
    forced = frozenset(e for e, _, _, _, f in edges if f)
    if not verts:
        return []
    if len(verts) <= 2:
        found = _small_cycles(verts, edges)
    else:
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
        for e, u, v, _, _ in edges:
            if u != v:
                adj[u].append((v, e))
                adj[v].append((u, e))
        start = verts[0]
        n = len(verts)
        seen = set()
        visited = {start}
        path: list[int] = []

        def extend(x: int) -> None:
            if len(visited) == n:
                for y, e in adj[x]:
                    if y == start:
                        seen.add(frozenset(path + [e]))
                return
            for y, e in adj[x]:
                if y not in visited:
                    visited.add(y)
                    path.append(e)
                    extend(y)
                    path.pop()
                    visited.discard(y)

        extend(start)
        found = list(seen)
    out = [c for c in found if forced <= c]
    out.sort(key=lambda c: tuple(sorted(c)))
    return out


def cycle_cost(g: Multigraph, cycle) -> object:
    return sum((g.ew[e] for e in cycle), 0)


def oracle_tsp(g: Multigraph, max_n: int = 18):
    """Optimal forced-TSP cost by dynamic programming over vertex subsets.

    Forced edges are handled by discounting them by a constant larger than
    any tour weight, which makes every feasible tour use all of them.
    """
    verts, edges = _edge_list(g)
    n = len(verts)
    if n > max_n:
        raise OracleRefused(f"{n} vertices exceeds DP guard {max_n}")
    if n == 0:
        return None
    forced = [e for e, _, _, _, f in edges if f]
    if n <= 2:
        costs = [cycle_cost(g, c) for c in _small_cycles(verts, edges) if set(forced) <= c]
        return min(costs) if costs else None
    big = 2 * sum((abs(w) for _, _, _, w, _ in edges), 0) + 1
    index = {v: i for i, v in enumerate(verts)}
    best: dict[tuple[int, int], object] = {}
    for e, u, v, w, f in edges:
        if u == v:
            continue
        a, b = sorted((index[u], index[v]))
        w2 = w - big if f else w
        if (a, b) not in best or w2 < best[(a, b)]:
            best[(a, b)] = w2
    adj: list[list[tuple[int, object]]] = [[] for _ in range(n)]
    for (a, b), w in best.items():
        adj[a].append((b, w))
        adj[b].append((a, w))
    full = (1 << (n - 1)) - 1
    dp: list[dict] = [dict() for _ in range(full + 1)]
    for j, w in adj[0]:
        dp[1 << (j - 1)][j] = w
    for mask in range(1, full + 1):
        row = dp[mask]
        for j, val in row.items():
            for k, w in adj[j]:
                if k == 0:
                    continue
                bit = 1 << (k - 1)
                if mask & bit:
                    continue
                nxt = dp[mask | bit]
                cand = val + w
                old = nxt.get(k)
                if old is None or cand < old:
                    nxt[k] = cand
    closing = dict(adj[0])
    result = None
    for j, val in dp[full].items():
        if j in closing:
            cand = val + closing[j]
            if result is None or cand < result:
                result = cand
    if result is None:
        return None
    k = len(forced)
    total = sum((abs(w) for _, _, _, w, _ in edges), 0)
    if result > total - big * k:
        return None
    return result + big * k


def canonical_cycle(seq) -> tuple:
    """Lexicographically least rotation or reflection of a vertex cycle."""
    seq = list(seq)
    if not seq:
        return ()
    cands = []
    for s in (seq, seq[::-1]):
        for r in range(len(s)):
            cands.append(tuple(s[r:] + s[:r]))
    return min(cands)
