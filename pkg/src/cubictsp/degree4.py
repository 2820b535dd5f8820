"""Degree-4 TSP through vertex splitting.

A degree-4 vertex is split into two vertices joined by a forced weight-0
edge, keeping one pair of its incident edges on each side.  There are three
ways to pair four half-edges; a tour survives the split exactly when its
two edges at the vertex end up on different sides, which happens for two
of the three choices.  Trying random choices gives a Monte Carlo solver;
trying every word of a hitting set over groups of vertices gives an exact
one.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import ContractViolation, Multigraph
from .tsp import Tour, solve

# slot pairs kept together for each ternary digit
PARTITIONS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class HittingSet:
    k: int
    words: tuple

    def hits(self, x) -> bool:
        return any(all(wi != xi for wi, xi in zip(w, x)) for w in self.words)


def size_bound(k: int) -> int:
    return math.ceil(1.5 ** k * k * math.log(3)) + 1


def degree4_vertices(g: Multigraph) -> list[int]:
    if g.max_degree() > 4:
        raise ContractViolation("degree-4 splitting needs maximum degree 4")
    return [v for v in g.vertices() if g.degree(v) == 4]


def split_in_place(g: Multigraph, choices) -> list[int]:
    """Split each degree-4 vertex (in increasing order) by its digit.

    All changes go through the trail.  Returns the ids of the new bridge
    edges.  Half-edges are the vertex's incidence slots in increasing edge
    order, so a loop contributes two slots.
    """
    verts = degree4_vertices(g)
    choices = list(choices)
    if len(choices) != len(verts):
        raise ValueError(f"need {len(verts)} split choices, got {len(choices)}")
    bridges = []
    for v, c in zip(verts, choices):
        if c not in (0, 1, 2):
            raise ValueError(f"split choice must be 0, 1 or 2, got {c!r}")
        slots = sorted(g.inc[v])
        w = g.add_vertex()
        for i in PARTITIONS[c][1]:
            g.move_endpoint(slots[i], v, w)
        bridges.append(g.add_edge(v, w, 0, forced=True))
    return bridges


def split(g: Multigraph, choices) -> Multigraph:
    """Copy of ``g`` with every degree-4 vertex split; see ``split_in_place``."""
    h = g.clone()
    split_in_place(h, choices)
    h.trail.clear()
    return h


def _solve_split(g: Multigraph, choices, prune: bool = False) -> Tour | None:
    mark = g.mark()
    split_in_place(g, choices)
    tour = solve(g, prune=prune)
    g.undo_to(mark)
    return tour


def _solve_batch(args) -> Tour | None:
    g, batch, prune = args
    return _best(_solve_split(g, c, prune) for c in batch)


def _best(tours) -> Tour | None:
    best = None
    for t in tours:
        if t is not None and (best is None or t.cost < best.cost):
            best = t
    return best


def _run(g: Multigraph, choice_vectors, jobs: int, prune: bool) -> Tour | None:
    work = g.clone()
    if jobs <= 1:
        return _best(_solve_split(work, c, prune) for c in choice_vectors)
    vectors = list(choice_vectors)
    size = max(1, math.ceil(len(vectors) / (4 * jobs)))
    batches = [vectors[i:i + size] for i in range(0, len(vectors), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # batches are listed in input order, so ties resolve as in serial mode
        return _best(pool.map(_solve_batch, [(work, b, prune) for b in batches]))


def repetitions(f: int, lam: float = 5.0) -> int:
    if f == 0:
        return 1
    return math.ceil(lam * 1.5 ** f)


def solve_randomized(g: Multigraph, seed: int = 0, lam: float = 5.0, jobs: int = 1,
                     prune: bool = False) -> Tour | None:
    """Best tour over ``ceil(lam * 1.5**f)`` uniformly random splittings.

    May miss the optimum (or report None for a Hamiltonian graph) with
    probability at most ``exp(-lam)``.
    """
    if lam <= 0:
        raise ValueError("lambda must be positive")
    f = len(degree4_vertices(g))
    rng = random.Random(seed)
    vectors = [[rng.randrange(3) for _ in range(f)] for _ in range(repetitions(f, lam))]
    return _run(g, vectors, jobs, prune)


def build_hitting_set(k: int) -> HittingSet:
    """Greedy set cover: words w covering every D(x) = {w : w_i != x_i for all i}."""
    if not 1 <= k <= 8:
        raise ValueError("hitting sets are built for 1 <= k <= 8")
    words = list(itertools.product(range(3), repeat=k))
    index = {w: i for i, w in enumerate(words)}
    # cover[w] has bit x set when w is in D(x); the relation is symmetric
    cover = []
    for w in words:
        mask = 0
        for x in itertools.product(*[[d for d in range(3) if d != wi] for wi in w]):
            mask |= 1 << index[x]
        cover.append(mask)
    uncovered = (1 << len(words)) - 1
    chosen = []
    while uncovered:
        best_i = max(range(len(words)), key=lambda i: ((cover[i] & uncovered).bit_count(), -i))
        chosen.append(words[best_i])
        uncovered &= ~cover[best_i]
    return HittingSet(k, tuple(chosen))


def expansions(f: int, k: int):
    """Choice vectors: one hitting-set word per group of ``k`` vertices."""
    if f == 0:
        return [[]]
    hs = build_hitting_set(k)
    groups = math.ceil(f / k)
    last = f - (groups - 1) * k
    # the last group is padded; truncated words still hit every shorter target
    tail = sorted({w[:last] for w in hs.words})
    pools = [hs.words] * (groups - 1) + [tail]
    return ([d for word in combo for d in word] for combo in itertools.product(*pools))


def solve_deterministic(g: Multigraph, k: int = 2, jobs: int = 1, prune: bool = False) -> Tour | None:
    """Exact degree-4 TSP: best tour over all hitting-set expansions."""
    f = len(degree4_vertices(g))
    return _run(g, expansions(f, k), jobs, prune)
