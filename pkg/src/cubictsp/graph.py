"""Mutable multigraph with forced edges, edge provenance and an undo trail.

Vertex and edge ids are dense integers that are never reused, so trail
records and provenance sets stay unambiguous for the lifetime of a graph.
Every live edge carries a *provenance*: the set of original edge ids it
stands for.  Input edges start with the singleton of their own id; edges
created by contraction carry the union of what they replace.  Synthetic
edges (introduced by vertex splitting) use negative provenance ids and
weigh nothing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, TextIO

_ADD_V, _DEL_V, _ADD_E, _DEL_E, _FORCE, _UNFORCE, _WEIGHT, _PROV, _MOVE = range(9)


class GraphFormatError(ValueError):
    """Malformed graph text or an input that violates the degree cap."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A search hit its branch-node limit before finishing."""


class ContractViolation(RuntimeError):
    """A primitive was called with its structural precondition broken."""


def parse_weight(text: str):
    if "/" in text:
        return Fraction(text)
    return int(text)


class Multigraph:
    """Degree-bounded multigraph with self-loops, weights and forced flags.

    Per-edge data lives in parallel lists indexed by edge id; ``inc[v]``
    lists the edges at ``v`` with self-loops appearing twice, so
    ``len(inc[v])`` is the degree.
    """

    def __init__(self):
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.ew: list = []
        self.ef: list[bool] = []
        self.ep: list[frozenset] = []
        self.ealive: list[bool] = []
        self.inc: list[list[int]] = []
        self.valive: list[bool] = []
        self.n = 0
        self.n_forced = 0
        self.n_unforced = 0
        # weight of each non-negative provenance id; synthetic ids weigh 0
        self.orig_weight: list = []
        self.trail: list[tuple] = []
        self._marks: list[tuple[int, int]] = []
        self._serial = 0
        # vertices touched since the match sets were last refreshed
        self.dirty: set[int] = set()
        # edges forced after construction, in order; low tracks pops
        self.forced_log: list[int] = []
        self.forced_low = 0
        self.matches = None

    # ------------------------------------------------------------------
    # construction and I/O

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, max_degree: int = 4) -> "Multigraph":
        """Build a graph on vertices ``0..n-1``.

        Each edge is ``(u, v)``, ``(u, v, w)`` or ``(u, v, w, forced)``;
        the i-th edge gets id ``i`` and provenance ``{i}``.
        """
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for item in edges:
            u, v = item[0], item[1]
            w = item[2] if len(item) > 2 else 1
            forced = bool(item[3]) if len(item) > 3 else False
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = len(g.eu)
            g.orig_weight.append(w)
            g.add_edge(u, v, w, forced, frozenset((e,)))
        for v in range(n):
            if len(g.inc[v]) > max_degree:
                raise GraphFormatError(f"vertex {v} has degree {len(g.inc[v])} > {max_degree}")
        g.trail.clear()
        g.forced_log.clear()
        return g

    @classmethod
    def parse(cls, text: str, max_degree: int = 4) -> "Multigraph":
        """Parse the ``n m`` / ``u v w [F]`` text format."""
        rows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append((lineno, line.split()))
        if not rows:
            raise GraphFormatError("empty graph file")
        lineno, head = rows[0]
        if len(head) != 2:
            raise GraphFormatError("header must be 'n m'", lineno)
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise GraphFormatError("header must be two integers", lineno) from None
        if n < 0 or m < 0:
            raise GraphFormatError("negative size in header", lineno)
        if len(rows) - 1 != m:
            raise GraphFormatError(f"header promises {m} edges, found {len(rows) - 1}", lineno)
        edges = []
        for lineno, tok in rows[1:]:
            if len(tok) not in (3, 4) or (len(tok) == 4 and tok[3] != "F"):
                raise GraphFormatError("edge must be 'u v w' or 'u v w F'", lineno)
            try:
                u, v, w = int(tok[0]), int(tok[1]), parse_weight(tok[2])
            except (ValueError, ZeroDivisionError):
                raise GraphFormatError("bad number in edge line", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range 0..{n - 1}", lineno)
            edges.append((u, v, w, len(tok) == 4))
        return cls.from_edges(n, edges, max_degree=max_degree)

    @classmethod
    def read(cls, path, max_degree: int = 4) -> "Multigraph":
        with open(path) as fh:
            return cls.parse(fh.read(), max_degree=max_degree)

    def to_text(self) -> str:
        """Serialize live vertices and edges, relabelling both densely."""
        verts = [v for v in range(len(self.inc)) if self.valive[v]]
        label = {v: i for i, v in enumerate(verts)}
        lines = [f"{len(verts)} {self.n_forced + self.n_unforced}"]
        for e in self.live_edges():
            line = f"{label[self.eu[e]]} {label[self.ev[e]]} {self.ew[e]}"
            lines.append(line + " F" if self.ef[e] else line)
        return "\n".join(lines) + "\n"

    def write(self, fh: TextIO) -> None:
        fh.write(self.to_text())

    def clone(self) -> "Multigraph":
        """Independent copy with the same ids and an empty trail."""
        g = Multigraph()
        g.eu, g.ev, g.ew, g.ef = self.eu[:], self.ev[:], self.ew[:], self.ef[:]
        g.ep, g.ealive = self.ep[:], self.ealive[:]
        g.inc = [lst[:] for lst in self.inc]
        g.valive = self.valive[:]
        g.n, g.n_forced, g.n_unforced = self.n, self.n_forced, self.n_unforced
        g.orig_weight = self.orig_weight[:]
        return g

    # ------------------------------------------------------------------
    # queries

    def vertices(self) -> Iterator[int]:
        return (v for v in range(len(self.inc)) if self.valive[v])

    def live_edges(self) -> Iterator[int]:
        return (e for e in range(len(self.eu)) if self.ealive[e])

    def edge(self, e: int) -> tuple:
        """``(u, v, weight, forced)`` of a live edge."""
        return self.eu[e], self.ev[e], self.ew[e], self.ef[e]

    def other(self, e: int, v: int) -> int:
        u = self.eu[e]
        return self.ev[e] if u == v else u

    def degree(self, v: int) -> int:
        return len(self.inc[v])

    def forced_degree(self, v: int) -> int:
        ef = self.ef
        return sum(1 for e in self.inc[v] if ef[e])

    def max_degree(self) -> int:
        return max((len(self.inc[v]) for v in self.vertices()), default=0)

    def edges_between(self, u: int, v: int) -> list[int]:
        out = []
        for e in self.inc[u]:
            if self.other(e, u) == v and e not in out:
                out.append(e)
        return out

    def is_simple(self) -> bool:
        seen = set()
        for e in self.live_edges():
            u, v = self.eu[e], self.ev[e]
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def forced_edges(self) -> list[int]:
        return [e for e in self.live_edges() if self.ef[e]]

    def prov_weight(self, e: int):
        """Sum of original weights over the provenance of ``e``."""
        ow = self.orig_weight
        return sum((ow[p] for p in self.ep[e] if p >= 0), 0)

    def canonical(self) -> tuple:
        """Order-independent snapshot used for structural equality."""
        edges = tuple(
            (e, min(self.eu[e], self.ev[e]), max(self.eu[e], self.ev[e]),
             self.ew[e], self.ef[e], tuple(sorted(self.ep[e])))
            for e in self.live_edges()
        )
        verts = tuple((v, tuple(sorted(self.inc[v]))) for v in self.vertices())
        return verts, edges, self.n, self.n_forced, self.n_unforced

    def recount(self) -> tuple[int, int, int]:
        n = sum(1 for _ in self.vertices())
        f = sum(1 for e in self.live_edges() if self.ef[e])
        return n, f, sum(1 for _ in self.live_edges()) - f

    # ------------------------------------------------------------------
    # trail

    def mark(self) -> int:
        self._serial += 1
        self._marks.append((self._serial, len(self.trail)))
        return self._serial

    def undo_to(self, mark: int) -> None:
        """Roll back every mutation made since ``mark``; the mark stays valid.

        Marks taken after ``mark`` are invalidated.
        """
        marks = self._marks
        while marks and marks[-1][0] != mark:
            marks.pop()
        if not marks:
            raise ContractViolation(f"stale or unknown trail mark {mark}")
        pos = marks[-1][1]
        trail = self.trail
        dirty = self.dirty
        inc = self.inc
        while len(trail) > pos:
            rec = trail.pop()
            op = rec[0]
            if op == _FORCE or op == _UNFORCE:
                e = rec[1]
                on = op == _UNFORCE
                self.ef[e] = on
                self.n_forced += 1 if on else -1
                self.n_unforced -= 1 if on else -1
                if op == _FORCE:
                    self.forced_log.pop()
                    if len(self.forced_log) < self.forced_low:
                        self.forced_low = len(self.forced_log)
                dirty.add(self.eu[e])
                dirty.add(self.ev[e])
            elif op == _DEL_E:
                e = rec[1]
                u, v = self.eu[e], self.ev[e]
                self.ealive[e] = True
                inc[u].append(e)
                inc[v].append(e)
                if self.ef[e]:
                    self.n_forced += 1
                else:
                    self.n_unforced += 1
                dirty.add(u)
                dirty.add(v)
            elif op == _ADD_E:
                e = rec[1]
                u, v = self.eu[e], self.ev[e]
                self.ealive[e] = False
                inc[u].remove(e)
                inc[v].remove(e)
                if self.ef[e]:
                    self.n_forced -= 1
                else:
                    self.n_unforced -= 1
                dirty.add(u)
                dirty.add(v)
            elif op == _MOVE:
                _, e, old, new = rec
                if self.eu[e] == new:
                    self.eu[e] = old
                else:
                    self.ev[e] = old
                inc[new].remove(e)
                inc[old].append(e)
                dirty.add(old)
                dirty.add(new)
                dirty.add(self.other(e, old))
            elif op == _WEIGHT:
                self.ew[rec[1]] = rec[2]
                dirty.add(self.eu[rec[1]])
            elif op == _PROV:
                self.ep[rec[1]] = rec[2]
            elif op == _DEL_V:
                v = rec[1]
                self.valive[v] = True
                self.n += 1
                dirty.add(v)
            elif op == _ADD_V:
                v = rec[1]
                self.valive[v] = False
                self.n -= 1
                dirty.add(v)

    # ------------------------------------------------------------------
    # primitive mutations (all trailed)

    def add_vertex(self) -> int:
        v = len(self.inc)
        self.inc.append([])
        self.valive.append(True)
        self.n += 1
        self.trail.append((_ADD_V, v))
        self.dirty.add(v)
        return v

    def delete_vertex(self, v: int) -> None:
        if not self.valive[v] or self.inc[v]:
            raise ContractViolation(f"vertex {v} is dead or still has edges")
        self.valive[v] = False
        self.n -= 1
        self.trail.append((_DEL_V, v))
        self.dirty.add(v)

    def add_edge(self, u: int, v: int, w=1, forced: bool = False, prov: frozenset | None = None) -> int:
        e = len(self.eu)
        if prov is None:
            prov = frozenset((-(e + 1),))
        self.eu.append(u)
        self.ev.append(v)
        self.ew.append(w)
        self.ef.append(forced)
        self.ep.append(prov)
        self.ealive.append(True)
        self.inc[u].append(e)
        self.inc[v].append(e)
        if forced:
            self.n_forced += 1
        else:
            self.n_unforced += 1
        self.trail.append((_ADD_E, e))
        self.dirty.add(u)
        self.dirty.add(v)
        return e

    def delete_edge(self, e: int) -> None:
        if not self.ealive[e]:
            raise ContractViolation(f"edge {e} is not live")
        u, v = self.eu[e], self.ev[e]
        self.ealive[e] = False
        self.inc[u].remove(e)
        self.inc[v].remove(e)
        if self.ef[e]:
            self.n_forced -= 1
        else:
            self.n_unforced -= 1
        self.trail.append((_DEL_E, e))
        self.dirty.add(u)
        self.dirty.add(v)

    def force_edge(self, e: int) -> None:
        if not self.ealive[e] or self.ef[e]:
            raise ContractViolation(f"edge {e} is dead or already forced")
        self.ef[e] = True
        self.n_forced += 1
        self.n_unforced -= 1
        self.forced_log.append(e)
        self.trail.append((_FORCE, e))
        self.dirty.add(self.eu[e])
        self.dirty.add(self.ev[e])

    def unforce_edge(self, e: int) -> None:
        if not self.ealive[e] or not self.ef[e]:
            raise ContractViolation(f"edge {e} is dead or not forced")
        self.ef[e] = False
        self.n_forced -= 1
        self.n_unforced += 1
        self.trail.append((_UNFORCE, e))
        self.dirty.add(self.eu[e])
        self.dirty.add(self.ev[e])

    def add_weight(self, e: int, delta) -> None:
        self.trail.append((_WEIGHT, e, self.ew[e]))
        self.ew[e] = self.ew[e] + delta
        self.dirty.add(self.eu[e])

    def merge_provenance(self, e: int, source: int) -> None:
        """Union the provenance of edge ``source`` into edge ``e``."""
        if self.ep[e] & self.ep[source]:
            raise ContractViolation("provenance sets of distinct edges overlap")
        self.trail.append((_PROV, e, self.ep[e]))
        self.ep[e] = self.ep[e] | self.ep[source]

    def move_endpoint(self, e: int, old: int, new: int) -> None:
        if self.eu[e] == old:
            self.eu[e] = new
        elif self.ev[e] == old:
            self.ev[e] = new
        else:
            raise ContractViolation(f"edge {e} is not incident to {old}")
        self.inc[old].remove(e)
        self.inc[new].append(e)
        self.trail.append((_MOVE, e, old, new))
        self.dirty.add(old)
        self.dirty.add(new)
        self.dirty.add(self.other(e, new))

    # ------------------------------------------------------------------
    # compound operations

    def merge_path(self, e1: int, e2: int, v: int) -> int:
        """Replace the forced path ``a -e1- v -e2- c`` by one forced edge ``a-c``.

        ``v`` is removed together with any other edge at it.  The new edge
        weighs ``w(e1) + w(e2)`` and carries both provenances.
        """
        if e1 == e2 or not (self.ef[e1] and self.ef[e2]):
            raise ContractViolation("merge_path needs two distinct forced edges")
        if e1 not in self.inc[v] or e2 not in self.inc[v]:
            raise ContractViolation(f"edges {e1}, {e2} do not meet at {v}")
        a, c = self.other(e1, v), self.other(e2, v)
        if a == v or c == v:
            raise ContractViolation("merge_path through a self-loop")
        w = self.ew[e1] + self.ew[e2]
        prov = self.ep[e1] | self.ep[e2]
        for e in list(self.inc[v]):
            if self.ealive[e]:
                self.delete_edge(e)
        self.delete_vertex(v)
        return self.add_edge(a, c, w, True, prov)

    def triangle_edges(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        """Edges ``yz, xz, xy`` of a triangle whose sides are single edges."""
        out = []
        for p, q in ((y, z), (x, z), (x, y)):
            between = self.edges_between(p, q)
            if len(between) != 1:
                raise ContractViolation(f"triangle side {p}-{q} has {len(between)} edges")
            out.append(between[0])
        return out[0], out[1], out[2]

    def contract_triangle(self, x: int, y: int, z: int) -> int:
        """Delta-Y transformation of triangle ``xyz`` into a new supervertex.

        Each outside edge gains the weight and provenance of the triangle
        edge opposite it, and becomes forced if that edge was forced.
        """
        if len({x, y, z}) != 3:
            raise ContractViolation("triangle vertices must be distinct")
        opp = self.triangle_edges(x, y, z)
        tri = set(opp)
        outside = []
        for t in (x, y, z):
            rest = [e for e in self.inc[t] if e not in tri]
            if len(self.inc[t]) != 3 or len(rest) != 1:
                raise ContractViolation(f"triangle vertex {t} must have exactly one outside edge")
            o = rest[0]
            if self.other(o, t) in (x, y, z):
                raise ContractViolation("outside edge of a triangle re-enters it")
            outside.append(o)
        for o, a in zip(outside, opp):
            self.add_weight(o, self.ew[a])
            self.merge_provenance(o, a)
            if self.ef[a] and not self.ef[o]:
                self.force_edge(o)
        for a in opp:
            self.delete_edge(a)
        s = self.add_vertex()
        for t, o in zip((x, y, z), outside):
            self.move_endpoint(o, t, s)
        for t in (x, y, z):
            self.delete_vertex(t)
        return s


def load(path_or_text: str, max_degree: int = 4) -> Multigraph:
    """Load a graph from a path, or from text when it contains a newline."""
    if "\n" in path_or_text:
        return Multigraph.parse(path_or_text, max_degree=max_degree)
    return Multigraph.read(path_or_text, max_degree=max_degree)
