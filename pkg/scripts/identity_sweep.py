"""Sweep the two-term 2F1 identity and the three normalization routes over a grid.

    python scripts/identity_sweep.py --n-max 80 --p 1/7 --p 3/11
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from banachbox import (
    MatchboxParams,
    s1_direct,
    s1_recurrence,
    s2_direct,
    s2_recurrence,
    sum_via_hypergeometric,
    verify_identity,
)


@dataclass
class SweepConfig:
    n_max: int = 50
    ps: list[Fraction] = field(
        default_factory=lambda: [Fraction(s) for s in ("1/2", "1/3", "2/5", "9/10", "1/1000", "999/1000")]
    )


def run(cfg: SweepConfig) -> bool:
    all_ok = True
    print(f"{'p':>10} {'cells':>6} {'identity':>9} {'norm':>6} {'seconds':>8}")
    for p in cfg.ps:
        t0 = time.perf_counter()
        ident = norm = True
        for n in range(cfg.n_max + 1):
            mp = MatchboxParams(n, p)
            ident &= verify_identity(mp).equal
            norm &= (
                s1_direct(mp) + s2_direct(mp)
                == s1_recurrence(mp) + s2_recurrence(mp)
                == sum_via_hypergeometric(mp)
                == 1
            )
        all_ok &= ident and norm
        print(f"{str(p):>10} {cfg.n_max + 1:>6} {str(ident):>9} {str(norm):>6} {time.perf_counter() - t0:8.3f}")
    return all_ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=50)
    ap.add_argument("--p", action="append", type=Fraction)
    args = ap.parse_args()
    cfg = SweepConfig(n_max=args.n_max)
    if args.p:
        cfg.ps = args.p
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
