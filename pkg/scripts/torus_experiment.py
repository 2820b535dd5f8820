"""Hamiltonian cycles in 3-regular duals of triangulated tori.

For each p x q torus the script reports the time to the first tour, the
pruned optimum (unit weights make every tour optimal, so this mostly
measures how fast the floor is reached) and, for small tori, the full
unpruned branch count against the 64 * 2^(s0/3) + 64 envelope.

    python scripts/torus_experiment.py --sizes 5x5 10x10 10x20
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from cubictsp.generators import torus_dual
from cubictsp.tsp import SearchStats, node_bound, solve


@dataclass
class TorusConfig:
    sizes: list[tuple[int, int]] = field(default_factory=lambda: [(4, 5), (5, 5), (10, 10), (10, 20)])
    unpruned_max_n: int = 50


def run(cfg: TorusConfig) -> None:
    print("p q n first_s pruned_nodes pruned_s unpruned_nodes envelope")
    for p, q in cfg.sizes:
        g = torus_dual(p, q)
        t0 = time.perf_counter()
        tour = solve(g, first=True)
        t_first = time.perf_counter() - t0
        assert tour is not None and len(tour.edges) == g.n

        pruned = SearchStats()
        t0 = time.perf_counter()
        solve(g, pruned, prune=True)
        t_pruned = time.perf_counter() - t0

        full, bound = "-", "-"
        if g.n <= cfg.unpruned_max_n:
            stats = SearchStats()
            solve(g, stats)
            full, bound = str(stats.branch_nodes), f"{node_bound(stats.measure0):.3g}"
        print(f"{p} {q} {g.n} {t_first:.3f} {pruned.branch_nodes} {t_pruned:.3f} {full} {bound}")


def _size(text: str) -> tuple[int, int]:
    p, q = text.lower().split("x")
    return int(p), int(q)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=_size, help="tori as PxQ")
    ap.add_argument("--unpruned-max-n", type=int, default=TorusConfig.unpruned_max_n)
    args = ap.parse_args()
    cfg = TorusConfig(unpruned_max_n=args.unpruned_max_n)
    if args.sizes:
        cfg.sizes = args.sizes
    run(cfg)


if __name__ == "__main__":
    main()
