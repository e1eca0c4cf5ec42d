"""Sweep small connected signed graphs and search for list assignments that beat the palette count.

For every connected simple graph on up to ``--max-n`` vertices with at most
``--max-m`` edges, one signing per switching class is searched at the
smallest k above each threshold.  Exhaustive search is used when it fits the
budget, otherwise a seeded random search.

    python scripts/falsify_thresholds.py --max-n 3 --max-m 3
"""

from __future__ import annotations

import argparse
import itertools

from sigcolor.counting import brute_count_k
from sigcolor.extremal import check_minimizer_structure, minimize_over_assignments, thresholds
from sigcolor.graph import ResourceCapError, SignedGraph, components_of, switch_graph


def connected_graphs(n: int, max_m: int):
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for r in range(min(len(pairs), max_m) + 1):
        for edges in itertools.combinations(pairs, r):
            g = SignedGraph(n, tuple((a, b, 1) for a, b in edges))
            if n and len(components_of(g, g.full_mask).components) != 1:
                continue
            key = min(tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms)
            if key not in seen:
                seen.add(key)
                yield edges


def switching_classes(n: int, edges):
    seen = set()
    for signs in itertools.product((1, -1), repeat=len(edges)):
        g = SignedGraph(n, tuple((a, b, s) for (a, b), s in zip(edges, signs)))
        key = min(
            switch_graph(g, X).edges
            for r in range(n + 1)
            for X in itertools.combinations(range(n), r)
        )
        if key not in seen:
            seen.add(key)
            yield g


def search(g, k, mode, budget, trials, seed):
    try:
        return minimize_over_assignments(g, k, mode, U=k, budget=budget)
    except ResourceCapError:
        return minimize_over_assignments(g, k, mode, U=k, strategy="random", trials=trials, seed=seed)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--budget", type=int, default=10_000_000)
    parser.add_argument("--trials", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("n m edges/signs | k mode strategy | min canonical | cex structure")
    found = 0
    for n in range(1, args.max_n + 1):
        for edges in connected_graphs(n, args.max_m):
            for g in switching_classes(n, edges):
                r = thresholds(g.m)
                runs = [(max(r.t1 + 1, 1), "any"), (r.min_odd_k, "zero-included"), (r.min_even_k, "zero-free")]
                for k, mode in runs:
                    out = search(g, k, mode, args.budget, args.trials, args.seed)
                    assert out.canonical_count == brute_count_k(g, k)
                    structure = all(check_minimizer_structure(g, L, k).ok for L in out.attaining)
                    found += out.counterexample_found
                    signs = "".join("+" if s > 0 else "-" for *_, s in g.edges)
                    print(
                        f"{n} {g.m} {list(edges)}/{signs or '.'} | {k} {mode} {out.strategy} | "
                        f"{out.min_count} {out.canonical_count} | {out.counterexample_found} {structure}"
                    )
    print(f"counterexamples: {found}")


if __name__ == "__main__":
    main()
