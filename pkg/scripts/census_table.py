"""Print NBC census and both chromatic polynomials for every .sg file given."""

from __future__ import annotations

import sys
from pathlib import Path

from sigcolor.circuits import enumerate_circuits, nbc_census, quasi_polynomial_from_census
from sigcolor.counting import brute_count_k
from sigcolor.graph import parse_graph


def main(paths: list[str]) -> None:
    if not paths:
        paths = sorted(str(p) for p in (Path(__file__).resolve().parent.parent / "data").glob("*.sg"))
    for path in paths:
        g = parse_graph(Path(path).read_text())
        census = nbc_census(g)
        qp = quasi_polynomial_from_census(g.n, census)
        circuits = enumerate_circuits(g)
        kinds = sum(c.kind == "barbell" for c in circuits)
        print(f"{Path(path).name}: n={g.n} m={g.m} circuits={len(circuits)} (barbells {kinds})")
        print(f"  c={list(census.c)} c*={list(census.c_star)}")
        print(f"  P1={list(qp.odd)} P0={list(qp.even)}")
        print("  P(k), k=1..6:", [qp(k) for k in range(1, 7)], "brute:", [brute_count_k(g, k) for k in range(1, 7)])


if __name__ == "__main__":
    main(sys.argv[1:])
