"""Incrementally maintained sets of local pattern matches.

A match is valid or not purely as a function of the edges incident to its
member vertices.  Every graph primitive marks the endpoints it touches as
dirty; ``flush`` drops all matches involving a dirty vertex and rescans
the patterns through that vertex.  The work per mutation is therefore
bounded by the (constant) size of a degree-3 neighbourhood, and after a
flush every set equals the exhaustive recomputation.

Match keys are tuples whose minimum under tuple ordering is the match the
reduction rules fire first (edge ids lead, so the match containing the
smallest live edge id wins).
"""

from __future__ import annotations

TSP = "tsp"
LISTING = "listing"

TSP_PATTERNS = (
    "d01", "claw", "floop", "fpair", "contract", "deg2", "parallel",
    "uloop", "triangle", "quad_force", "qcomp", "quad_branch", "adj_forced",
)
LISTING_PATTERNS = ("d01", "claw", "contract", "deg2", "tri_force", "adj_forced")
# quad values are (v0..v3, e0..e3); only the vertices are members
QUADS = frozenset(("qcomp", "quad_force", "quad_branch"))


class MatchSets:
    """Per-pattern ``{key: members}`` dicts for one graph and one mode."""

    def __init__(self, g, mode: str = TSP):
        if mode not in (TSP, LISTING):
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g
        self.mode = mode
        self.patterns = TSP_PATTERNS if mode == TSP else LISTING_PATTERNS
        self.sets: dict[str, dict] = {p: {} for p in self.patterns}
        self.idx: dict[int, set] = {}
        g.dirty.clear()
        for v in g.vertices():
            self._scan(v)

    def __getitem__(self, pattern: str) -> dict:
        return self.sets[pattern]

    def flush(self) -> None:
        g = self.g
        dirty = g.dirty
        if not dirty:
            return
        g.dirty = set()
        sets, idx = self.sets, self.idx
        for v in dirty:
            old = idx.pop(v, None)
            if old:
                for p, key in old:
                    mem = sets[p].pop(key, None)
                    if mem is not None:
                        if p in QUADS:
                            mem = mem[:4]
                        for u in mem:
                            if u != v:
                                s = idx.get(u)
                                if s is not None:
                                    s.discard((p, key))
        valive = g.valive
        for v in dirty:
            if valive[v]:
                self._scan(v)

    def snapshot(self) -> dict:
        self.flush()
        return {p: dict(d) for p, d in self.sets.items()}

    def _add(self, p: str, key: tuple, members: tuple, value: tuple | None = None) -> None:
        d = self.sets[p]
        if key in d:
            return
        d[key] = members if value is None else value
        idx = self.idx
        for u in members:
            s = idx.get(u)
            if s is None:
                idx[u] = {(p, key)}
            else:
                s.add((p, key))

    # ------------------------------------------------------------------

    def _scan(self, v: int) -> None:
        g = self.g
        inc = g.inc[v]
        ef, eu, ev = g.ef, g.eu, g.ev
        deg = len(inc)
        add = self._add
        if deg <= 1:
            add("d01", (v,), (v,))
        forced = [e for e in inc if ef[e]]
        fdeg = len(forced)
        if fdeg >= 3:
            add("claw", (v,), (v,))
        if self.mode == TSP:
            self._scan_tsp_local(v, inc, forced, fdeg)
        else:
            if fdeg == 2 and forced[0] != forced[1]:
                add("contract", (min(forced), v), (v,))
            if deg == 2 and not (ef[inc[0]] and ef[inc[1]]):
                add("deg2", (min(inc), v), (v,))
            if fdeg:
                for e in inc:
                    if not ef[e]:
                        add("adj_forced", (e, v), (v,))
            self._scan_triangles(v)
            return
        if fdeg:
            for e in inc:
                if not ef[e] and eu[e] != ev[e]:
                    add("adj_forced", (e, v), (v,))
        self._scan_triangles(v)
        self._scan_quads(v)

    def _scan_tsp_local(self, v, inc, forced, fdeg) -> None:
        g = self.g
        ef, eu, ev = g.ef, g.eu, g.ev
        add = self._add
        deg = len(inc)
        loops = [e for e in inc if eu[e] == ev[e]]
        for e in loops:
            if ef[e]:
                add("floop", (e,), (v,))
            else:
                add("uloop", (e,), (v,))
        nonloop_forced = [e for e in forced if eu[e] != ev[e]]
        if fdeg == 2 and len(nonloop_forced) == 2:
            add("contract", (min(nonloop_forced), v), (v,))
        if deg == 2 and not (ef[inc[0]] and ef[inc[1]]):
            add("deg2", (min(inc), v), (v,))
        # parallel pairs, seen from v
        nbr: dict[int, list[int]] = {}
        for e in inc:
            u = eu[e] if ev[e] == v else ev[e]
            if u != v:
                nbr.setdefault(u, []).append(e)
        for u, es in nbr.items():
            if len(es) < 2:
                continue
            es = sorted(es)
            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    a, b = es[i], es[j]
                    ends = (v, u) if v < u else (u, v)
                    if ef[a] and ef[b]:
                        add("fpair", (a, b), ends)
                    else:
                        add("parallel", (a, b), ends)

    def _scan_triangles(self, v: int) -> None:
        g = self.g
        inc = g.inc
        iv = inc[v]
        if len(iv) != 3:
            return
        eu, ev, ef = g.eu, g.ev, g.ef
        nb = [(eu[e] if ev[e] == v else ev[e], e) for e in iv]
        listing = self.mode == LISTING
        for i in range(3):
            a, ea = nb[i]
            if a == v or len(inc[a]) != 3:
                continue
            for j in range(i + 1, 3):
                b, eb = nb[j]
                if b == v or b == a or len(inc[b]) != 3:
                    continue
                for eab in inc[a]:
                    if eu[eab] == b or ev[eab] == b:
                        break
                else:
                    continue
                tri = tuple(sorted((v, a, b)))
                if not self._clean_triangle(tri):
                    continue
                if listing:
                    # (vertex, opposite side) pairs
                    for x, opp in ((v, eab), (a, eb), (b, ea)):
                        if ef[opp]:
                            continue
                        out = self._outside(x, (ea, eb, eab))
                        if out is not None and ef[out]:
                            self._add("tri_force", (opp, x), tri)
                else:
                    self._add("triangle", tuple(sorted((ea, eb, eab))), tri)

    def _outside(self, x: int, tri_edges) -> int | None:
        rest = [e for e in self.g.inc[x] if e not in tri_edges]
        return rest[0] if len(rest) == 1 else None

    def _clean_triangle(self, tri) -> bool:
        """Distinct vertices, single-edge sides, degree 3, one outside edge each."""
        g = self.g
        inc, eu, ev = g.inc, g.eu, g.ev
        tset = set(tri)
        for t in tri:
            if len(inc[t]) != 3:
                return False
            inside = 0
            for e in inc[t]:
                o = eu[e] if ev[e] == t else ev[e]
                if o == t:
                    return False
                if o in tset:
                    inside += 1
            if inside != 2:
                return False
        return True

    def _scan_quads(self, v: int) -> None:
        """Unforced 4-cycles through ``v`` on four distinct vertices."""
        g = self.g
        inc = g.inc
        eu, ev, ef = g.eu, g.ev, g.ef
        first = []
        for e in inc[v]:
            if not ef[e]:
                u = eu[e] if ev[e] == v else ev[e]
                if u != v:
                    first.append((u, e))
        seen = set()
        for i in range(len(first)):
            a, e0 = first[i]
            for j in range(len(first)):
                if i == j:
                    continue
                c, e3 = first[j]
                if c == a:
                    continue
                for e1 in inc[a]:
                    if e1 == e0 or ef[e1]:
                        continue
                    b = eu[e1] if ev[e1] == a else ev[e1]
                    if b == v or b == a or b == c:
                        continue
                    for e2 in inc[c]:
                        if e2 == e3 or ef[e2]:
                            continue
                        if (eu[e2] if ev[e2] == c else ev[e2]) != b:
                            continue
                        edges = (e0, e1, e2, e3)
                        key = tuple(sorted(edges))
                        if key in seen:
                            continue
                        seen.add(key)
                        self._classify_quad(key, (v, a, b, c), edges)

    def _classify_quad(self, key, verts, edges) -> None:
        g = self.g
        inc, ef, eu, ev = g.inc, g.ef, g.eu, g.ev
        cyc = set(edges)
        vset = set(verts)
        fout = []
        uout = []
        clean = True
        for x in verts:
            outs = [e for e in inc[x] if e not in cyc]
            fo = False
            uo = []
            for e in outs:
                o = eu[e] if ev[e] == x else ev[e]
                if o in vset:
                    clean = False
                if ef[e]:
                    fo = True
                else:
                    uo.append(e)
            if len(inc[x]) > 3:
                clean = False
            fout.append(fo)
            uout.append(uo)
        canon = _canonical_cycle(verts, edges)
        if not any(uout):
            self._add("qcomp", key, verts, canon)
            return
        if not clean:
            return
        if (fout[0] and fout[2]) or (fout[1] and fout[3]):
            self._add("quad_force", key, verts, canon)
        elif sum(fout) >= 2:
            cands = [e for i in range(4) if not fout[i] for e in uout[i]]
            if cands:
                self._add("quad_branch", key, verts, canon)


def _canonical_cycle(verts, edges) -> tuple:
    """Rotate/reflect so the edge tuple is lexicographically least.

    Returned members are ``(v0, v1, v2, v3)`` with edge i joining
    ``v_i`` and ``v_{i+1}``; the edge order is recoverable from the key.
    """
    best = None
    for r in range(4):
        ve = verts[r:] + verts[:r]
        ee = edges[r:] + edges[:r]
        cand = (ee, ve)
        if best is None or cand < best:
            best = cand
        # reflection: vertices reversed, edges shifted accordingly
        rv = (ve[0], ve[3], ve[2], ve[1])
        re_ = (ee[3], ee[2], ee[1], ee[0])
        cand = (re_, rv)
        if cand < best:
            best = cand
    return best[1] + best[0]


def quad_parts(members: tuple) -> tuple[tuple, tuple]:
    """Split stored quad members into (vertices, edges in cyclic order)."""
    return members[:4], members[4:]
