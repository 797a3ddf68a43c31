"""Iterate operation D from the four 6-vertex graphs and print degree multisets.

At each step the complete graph on the current vertex count joins the pool,
so the pool grows by one graph per step.
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from cdgraph import cocktail_party, complete, full_report, laplacian_spectrum, operation_d, supergraph


@dataclass(frozen=True)
class ChainConfig:
    steps: int = 3
    spectra: bool = False


def multiset(g) -> str:
    return " ".join(f"{d}^{m}" for d, m in sorted(Counter(g.degrees()).items(), reverse=True))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=ChainConfig.steps)
    ap.add_argument("--spectra", action="store_true", help="also print Laplacian spectra")
    args = ap.parse_args()
    cfg = ChainConfig(args.steps, args.spectra)

    pool = [cocktail_party(6), supergraph(6, 1), supergraph(6, 2), supergraph(6, 3)]
    for _ in range(cfg.steps):
        pool = [operation_d(g) for g in pool]
        n = pool[0].n
        print(f"n = {n}")
        for g in pool:
            ok = "passes" if full_report(g).passes_necessary else "FAILS"
            line = f"  {multiset(g):<16} {ok} necessary checks"
            if cfg.spectra:
                line += f"  L = {laplacian_spectrum(g).to_json()}"
            print(line)
        pool.append(complete(n))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
