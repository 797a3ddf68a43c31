"""Sweep the three families and tabulate closed form vs exact pipeline.

    python scripts/sweep_families.py --max-n 30
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from cdgraph import Family, FamilyParams, admissible_n1, verify_family


@dataclass(frozen=True)
class SweepConfig:
    min_n: int = 3
    max_n: int = 24
    families: tuple[Family, ...] = tuple(Family)


def points(cfg: SweepConfig):
    for family in cfg.families:
        for n in range(cfg.min_n, cfg.max_n + 1):
            if family is not Family.TWO_CLIQUE and (n % 2 or n < 4):
                continue
            for n1 in admissible_n1(family, n):
                yield FamilyParams(family, n, n1)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=SweepConfig.min_n)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    args = ap.parse_args()
    cfg = SweepConfig(args.min_n, args.max_n)

    print(f"{'point':<22} {'L':>3} {'dL':>3} {'dLdir':>5} {'tree':>4} {'printed':>7} {'sec':>7}")
    bad = 0
    for p in points(cfg):
        t0 = time.perf_counter()
        r = verify_family(p)
        dt = time.perf_counter() - t0
        flag = lambda b: "-" if b is None else ("ok" if b else "NO")
        print(
            f"{p.label():<22} {flag(r.l_match):>3} {flag(r.dl_match):>3} {flag(r.dl_direct_match):>5}"
            f" {flag(r.tree_match_corrected):>4} {flag(r.tree_match_printed):>7} {dt:7.3f}"
        )
        bad += not r.ok
    print(f"{bad} point(s) disagree")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
