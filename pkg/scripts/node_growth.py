"""Branch-node growth of the solver and the lister on random cubic graphs.

Averages branch nodes over several seeds per size and fits a growth base
per vertex on a log scale.  The analysis predicts at most 2^(1/3) ~ 1.26
per vertex for the solver and 2^(3/8) ~ 1.30 for the lister.

    python scripts/node_growth.py --sizes 10 40 --step 4 --seeds 5
"""

from __future__ import annotations

import argparse
import random
import statistics
from dataclasses import dataclass

from cubictsp.generators import random_cubic, random_matching, random_weights, reweighted
from cubictsp.listing import ListingStats, list_cycles
from cubictsp.tsp import SearchStats, fitted_base, solve


@dataclass
class GrowthConfig:
    lo: int = 10
    hi: int = 40
    step: int = 4
    seeds: int = 5
    seed: int = 0


def run(cfg: GrowthConfig) -> None:
    rng = random.Random(cfg.seed)
    sizes, tsp_nodes, list_nodes = [], [], []
    print("n mean_tsp_nodes mean_listing_nodes mean_cycles")
    for n in range(cfg.lo, cfg.hi + 1, cfg.step):
        t, l, c = [], [], []
        for _ in range(cfg.seeds):
            g0 = random_cubic(n, seed=rng.randrange(2**32))
            g = reweighted(g0, random_weights(g0, rng), random_matching(g0, rng.randint(0, 3), rng))
            ts = SearchStats()
            solve(g, ts)
            ls = ListingStats()
            list_cycles(g0, stats=ls)
            t.append(ts.branch_nodes)
            l.append(ls.branch_nodes)
            c.append(ls.cycles)
        sizes.append(n)
        tsp_nodes.append(statistics.fmean(t))
        list_nodes.append(statistics.fmean(l))
        print(f"{n} {tsp_nodes[-1]:.1f} {list_nodes[-1]:.1f} {statistics.fmean(c):.1f}")
    print(f"tsp_base_per_vertex={fitted_base(sizes, tsp_nodes):.4f} (bound {2 ** (1 / 3):.4f})")
    print(f"listing_base_per_vertex={fitted_base(sizes, list_nodes):.4f} (bound {2 ** (3 / 8):.4f})")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs=2, type=int, metavar=("LO", "HI"))
    ap.add_argument("--step", type=int, default=GrowthConfig.step)
    ap.add_argument("--seeds", type=int, default=GrowthConfig.seeds)
    ap.add_argument("--seed", type=int, default=GrowthConfig.seed)
    args = ap.parse_args()
    cfg = GrowthConfig(step=args.step, seeds=args.seeds, seed=args.seed)
    if args.sizes:
        cfg.lo, cfg.hi = args.sizes
    run(cfg)


if __name__ == "__main__":
    main()
