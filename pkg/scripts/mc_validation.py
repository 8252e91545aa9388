"""Monte Carlo TV distance against the exact PMF over an (n, p) grid.

    python scripts/mc_validation.py --trials 1000000 --workers 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from banachbox import MatchboxParams, SimConfig, pmf_generalized, run_simulation


@dataclass
class GridConfig:
    n_max: int = 6
    ps: tuple[Fraction, ...] = (Fraction(1, 5), Fraction(1, 2), Fraction(4, 5))
    trials: int = 10**6
    seed: int = 0
    workers: int = 1
    tv_bound: float = 0.005


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--trials", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    cfg = GridConfig(n_max=args.n_max, trials=args.trials, seed=args.seed, workers=args.workers)

    worst = 0.0
    t0 = time.perf_counter()
    print(f"{'n':>3} {'p':>5} {'tv':>9} {'chi2':>9}")
    for p in cfg.ps:
        for n in range(cfg.n_max + 1):
            exact = pmf_generalized(MatchboxParams(n, p))
            rep = run_simulation(SimConfig(n, p, cfg.trials, cfg.seed), exact, workers=cfg.workers)
            worst = max(worst, rep.tv_distance)
            print(f"{n:>3} {str(p):>5} {rep.tv_distance:9.5f} {rep.chi_square:9.2f}")
    print(f"worst tv {worst:.5f} (bound {cfg.tv_bound}), {time.perf_counter() - t0:.1f}s")
    raise SystemExit(0 if worst < cfg.tv_bound else 1)


if __name__ == "__main__":
    main()
