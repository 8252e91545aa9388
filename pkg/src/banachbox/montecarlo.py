"""Monte Carlo simulation of the biased matchbox drawing process.

Randomness is counter based: trials are grouped into fixed blocks of
``BLOCK_TRIALS``; block ``j`` draws from a Philox generator keyed by the seed
with ``j`` in the high counter word, and trial ``i`` always consumes the
``2n+1`` uniforms at row ``i % BLOCK_TRIALS`` of its block. A trial's outcome
is therefore a function of ``(seed, i)`` only, and any partition of blocks
over workers gives the same histogram.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

BLOCK_TRIALS = 1 << 16
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SimConfig:
    n: int
    p: Fraction
    trials: int
    seed: int = 0
    p_float: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        if isinstance(self.p, float):
            raise TypeError("p must be an exact rational, not a float")
        p = Fraction(self.p)
        if not 0 < p < 1:
            raise ValueError(f"p must satisfy 0 < p < 1, got {p}")
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= _MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "p", p)
        # the only float conversion of p; every Bernoulli draw uses this value
        object.__setattr__(self, "p_float", float(p))


@dataclass(frozen=True)
class SimReport:
    counts: tuple[int, ...]
    trials: int
    tv_distance: float
    chi_square: float

    @property
    def frequencies(self) -> tuple[float, ...]:
        return tuple(c / self.trials for c in self.counts)


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, block]))


def _outcomes(n: int, p: float, uniforms: np.ndarray) -> np.ndarray:
    # a box is found empty on its (n+1)-th selection; with 2n+1 draws one box
    # always gets there. Stopping at draw index t leaves 2n - t in the other box.
    picks_one = uniforms < p
    ones = np.cumsum(picks_one, axis=1)
    twos = np.arange(1, 2 * n + 2) - ones
    stop = np.argmax((ones == n + 1) | (twos == n + 1), axis=1)
    return 2 * n - stop


def simulate_once(n: int, p: float, rng: np.random.Generator) -> int:
    """Run one trial and return the matches left in the non-empty box.

    Each step selects box one with probability ``p``; selecting an empty box
    ends the trial. Consumes exactly ``2n+1`` uniforms from ``rng`` so it
    lines up with one row of the batch kernel.
    """
    uniforms = rng.random(2 * n + 1)
    left = [n, n]
    for u in uniforms:
        box = 0 if u < p else 1
        if left[box] == 0:
            return left[1 - box]
        left[box] -= 1
    raise AssertionError("unreachable: 2n+1 draws always empty a box")


def _block_counts(config: SimConfig, block: int) -> np.ndarray:
    start = block * BLOCK_TRIALS
    size = min(BLOCK_TRIALS, config.trials - start)
    uniforms = block_generator(config.seed, block).random((size, 2 * config.n + 1))
    r = _outcomes(config.n, config.p_float, uniforms)
    return np.bincount(r, minlength=config.n + 1).astype(np.int64)


def simulate_counts(config: SimConfig, workers: int = 1) -> np.ndarray:
    n_blocks = -(-config.trials // BLOCK_TRIALS)
    if workers <= 1:
        parts = [_block_counts(config, b) for b in range(n_blocks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _block_counts(config, b), range(n_blocks)))
    return np.sum(parts, axis=0, dtype=np.int64)


def tv_distance(empirical: Sequence[float], exact: Sequence[float]) -> float:
    return 0.5 * float(np.abs(np.asarray(empirical, float) - np.asarray(exact, float)).sum())


def chi_square(counts: Sequence[int], exact: Sequence[float]) -> float:
    counts = np.asarray(counts, float)
    expected = counts.sum() * np.asarray(exact, float)
    mask = expected > 0
    return float((((counts - expected) ** 2)[mask] / expected[mask]).sum())


def run_simulation(config: SimConfig, exact: Sequence[Rational], workers: int = 1) -> SimReport:
    """Histogram ``config.trials`` outcomes and compare with an exact PMF.

    The report depends only on ``config``; ``workers`` changes wall time only.
    """
    exact = [Fraction(e) for e in exact]
    if len(exact) != config.n + 1:
        raise ValueError(f"exact PMF has length {len(exact)}, expected {config.n + 1}")
    if sum(exact) != 1:
        raise ValueError("exact PMF does not sum to 1")
    counts = simulate_counts(config, workers)
    exact_f = [float(e) for e in exact]
    return SimReport(
        counts=tuple(int(c) for c in counts),
        trials=config.trials,
        tv_distance=tv_distance(counts / config.trials, exact_f),
        chi_square=chi_square(counts, exact_f),
    )
