"""Cycle counts of the extremal families.

Rings of K_{3,3}-minus-an-edge gadgets have 4^k = 2^(n/3) Hamiltonian
cycles; n-gons with alternating single and double bonds have 2^(n/2).
Both are compared against the 2^(3n/8) ceiling for simple cubic graphs.

    python scripts/gadget_counts.py --max-k 8
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from cubictsp.generators import gadget_cycle, multigraph_ngon
from cubictsp.listing import ListingStats, list_cycles
from cubictsp.oracle import oracle_cycles


@dataclass
class CountConfig:
    max_k: int = 7
    max_ngon: int = 12


def run(cfg: CountConfig) -> None:
    print("family n count expected ceiling_2^(3n/8) branch_nodes seconds")
    for k in range(1, cfg.max_k + 1):
        g = gadget_cycle(k)
        stats = ListingStats()
        t0 = time.perf_counter()
        list_cycles(g, stats=stats)
        dt = time.perf_counter() - t0
        print(f"gadget_cycle({k}) {g.n} {stats.cycles} {4 ** k} {2 ** (3 * g.n / 8):.4g} "
              f"{stats.branch_nodes} {dt:.2f}")
    # the lister needs simple graphs, so the multigraph family goes to the oracle
    for n in range(4, cfg.max_ngon + 1, 2):
        g = multigraph_ngon(n)
        print(f"multigraph_ngon({n}) {n} {len(oracle_cycles(g))} {2 ** (n // 2)} "
              f"{2 ** (3 * n / 8):.4g} - -")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=CountConfig.max_k)
    ap.add_argument("--max-ngon", type=int, default=CountConfig.max_ngon)
    args = ap.parse_args()
    run(CountConfig(args.max_k, args.max_ngon))


if __name__ == "__main__":
    main()
