"""Command-line front end: ``cubictsp {solve,list,count,gen,verify,bench}``.

Exit codes: 0 success, 1 infeasible instance or failed verification,
2 bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import degree4
from .generators import FAMILIES, gen, random_cubic, random_matching, random_weights, reweighted
from .graph import ContractViolation, GraphFormatError, Multigraph
from .listing import ListingStats, explicit, format_events, list_cycles
from .oracle import OracleRefused, oracle_cycles, oracle_tsp
from .tsp import SearchStats, fitted_base, solve

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> Multigraph:
    try:
        if path == "-":
            return Multigraph.parse(sys.stdin.read())
        return Multigraph.read(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _int_param(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"family parameter {text!r} is not an integer") from None


def _range(text: str) -> range:
    """``a:b`` (inclusive) or ``a:b:step``."""
    parts = text.split(":")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"bad range {text!r}; use a:b or a:b:step") from None
    if len(nums) == 1:
        return range(nums[0], nums[0] + 1)
    if len(nums) in (2, 3):
        step = nums[2] if len(nums) == 3 else 1
        return range(nums[0], nums[1] + 1, step)
    raise InputError(f"bad range {text!r}; use a:b or a:b:step")


def _print_stats(stats, out) -> None:
    for line in stats.lines():
        print(line, file=out)


# ----------------------------------------------------------------------
# commands


def cmd_solve(args, out) -> int:
    g = _read(args.file)
    stats = SearchStats()
    if args.deg4:
        if args.deterministic:
            tour = degree4.solve_deterministic(g, args.group_size, jobs=args.jobs, prune=args.prune)
        else:
            tour = degree4.solve_randomized(g, args.seed, args.lam, jobs=args.jobs, prune=args.prune)
    else:
        if g.max_degree() > 3:
            raise InputError("graph has degree-4 vertices; use --deg4")
        tour = solve(g, stats, first=args.first, prune=args.prune)
    if tour is None:
        print("infeasible", file=out)
    else:
        print(f"cost {tour.cost}", file=out)
        print(" ".join(str(e) for e in sorted(tour.edges)), file=out)
    if args.stats and not args.deg4:
        _print_stats(stats, out)
    return EXIT_OK if tour is not None else EXIT_INFEASIBLE


def _check_listable(g):
    if not g.is_simple() or g.max_degree() > 3:
        raise InputError("listing needs a simple graph of maximum degree 3")


def cmd_list(args, out) -> int:
    g = _read(args.file)
    _check_listable(g)
    stats = ListingStats()
    if args.explicit:
        def show(cycle):
            print(" ".join(str(e) for e in sorted(cycle)), file=out)
        list_cycles(g, explicit(show), stats)
    else:
        def sink(ev):
            print(format_events([ev])[0], file=out)
        list_cycles(g, sink, stats)
    if args.stats:
        _print_stats(stats, out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    g = _read(args.file)
    _check_listable(g)
    stats = ListingStats()
    list_cycles(g, None, stats)
    print(stats.cycles, file=out)
    if args.stats:
        _print_stats(stats, out)
    return EXIT_OK


def _build(family: str, params, seed) -> Multigraph:
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    try:
        return gen(family, *params, seed=seed)
    except (TypeError, ValueError, RuntimeError) as exc:
        raise InputError(f"{family}{tuple(params)}: {exc}") from None


def cmd_gen(args, out) -> int:
    g = _build(args.family, [_int_param(p) for p in args.params], args.seed)
    if args.output:
        with open(args.output, "w") as fh:
            g.write(fh)
    else:
        out.write(g.to_text())
    return EXIT_OK


def _verify_one(g: Multigraph, name: str, out) -> bool:
    ok = True
    try:
        if g.max_degree() > 3:
            want = oracle_tsp(g)
            got = degree4.solve_deterministic(g, 2)
        else:
            want = oracle_tsp(g)
            got = solve(g)
    except OracleRefused as exc:
        print(f"{name}: skipped ({exc})", file=out)
        return True
    got_cost = got.cost if got is not None else None
    if got_cost != want:
        ok = False
        print(f"{name}: cost mismatch: solver {got_cost}, oracle {want}", file=out)
    if g.max_degree() <= 3 and g.is_simple():
        cycles: list = []
        list_cycles(g, explicit(cycles.append))
        want_cycles = oracle_cycles(g, max_n=max(14, g.n))
        if sorted(cycles, key=lambda c: sorted(c)) != want_cycles:
            ok = False
            print(f"{name}: listing gives {len(cycles)} cycles, oracle {len(want_cycles)}", file=out)
    if not ok:
        print("counterexample:", file=out)
        out.write(g.to_text())
    return ok


def cmd_verify(args, out) -> int:
    if not args.files and args.random is None:
        raise InputError("verify needs graph files or --random N")
    ok = True
    for path in args.files:
        ok &= _verify_one(_read(path), path, out)
    if args.random is not None:
        if args.n % 2 or args.n < 4:
            raise InputError("--n must be even and at least 4")
        rng = random.Random(args.seed)
        for i in range(args.random):
            g0 = random_cubic(args.n, seed=rng.randrange(2**32))
            g = reweighted(g0, random_weights(g0, rng), random_matching(g0, rng.randint(0, 3), rng))
            ok &= _verify_one(g, f"random#{i}", out)
            if not ok:
                break
    print("OK" if ok else "FAILED", file=out)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_bench(args, out) -> int:
    sizes, nodes = [], []
    for p in _range(args.range):
        g = _build(args.family, [p], args.seed)
        t0 = time.perf_counter()
        if args.listing:
            _check_listable(g)
            stats = ListingStats()
            list_cycles(g, None, stats)
            extra = f"cycles={stats.cycles}"
        else:
            stats = SearchStats()
            tour = solve(g, stats, first=args.first, prune=args.prune)
            extra = f"cost={tour.cost if tour else 'infeasible'}"
        line = f"family={args.family} param={p} n={g.n} {extra}"
        if args.time:
            line += f" seconds={time.perf_counter() - t0:.3f}"
        print(line, file=out)
        _print_stats(stats, out)
        sizes.append(g.n)
        nodes.append(stats.branch_nodes)
    print(f"fitted_base_per_vertex={fitted_base(sizes, nodes):.4f}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubictsp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="minimum-cost Hamiltonian cycle through the forced edges")
    s.add_argument("file")
    s.add_argument("--deg4", action="store_true", help="allow degree-4 vertices by splitting them")
    s.add_argument("--deterministic", action="store_true", help="hitting-set expansion instead of random splits")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--lambda", dest="lam", type=float, default=5.0, help="failure bound exp(-lambda)")
    s.add_argument("--group-size", type=int, default=2, help="hitting-set group size k (1..8)")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for degree-4 expansions")
    s.add_argument("--first", action="store_true", help="stop at the first Hamiltonian cycle")
    s.add_argument("--prune", action="store_true", help="cost lower bounds (same answer, fewer nodes)")
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("list", help="stream every Hamiltonian cycle")
    s.add_argument("file")
    s.add_argument("--explicit", action="store_true", help="one line of edge ids per cycle")
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("count", help="count Hamiltonian cycles")
    s.add_argument("file")
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="compare solver and lister against brute force")
    s.add_argument("files", nargs="*")
    s.add_argument("--random", type=int, metavar="N", help="also check N random weighted cubic graphs")
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="search statistics over a one-parameter family")
    s.add_argument("family")
    s.add_argument("range", help="a:b or a:b:step, inclusive")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--listing", action="store_true", help="bench the cycle lister instead")
    s.add_argument("--first", action="store_true")
    s.add_argument("--prune", action="store_true")
    s.add_argument("--time", action="store_true", help="append wall-clock seconds (non-reproducible)")
    s.set_defaults(func=cmd_bench)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, ContractViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
