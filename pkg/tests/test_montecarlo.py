from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from banachbox.matchbox import MatchboxParams, pmf_classical, pmf_generalized
from banachbox.montecarlo import (
    BLOCK_TRIALS,
    SimConfig,
    block_generator,
    chi_square,
    run_simulation,
    simulate_counts,
    simulate_once,
    tv_distance,
    _outcomes,
)

F = Fraction


class TestConfig:
    def test_float_conversion_happens_once(self):
        cfg = SimConfig(2, F(1, 3), 10, 1)
        assert cfg.p_float == 1 / 3

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n=1, p=F(1, 2), trials=0),
            dict(n=1, p=F(0), trials=5),
            dict(n=1, p=F(1), trials=5),
            dict(n=-1, p=F(1, 2), trials=5),
            dict(n=1, p=F(1, 2), trials=5, seed=-1),
            dict(n=1, p=F(1, 2), trials=5, seed=2**64),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SimConfig(**kwargs)


def test_n_zero_always_returns_zero():
    rng = np.random.default_rng(3)
    for p in (0.1, 0.5, 0.9):
        assert all(simulate_once(0, p, rng) == 0 for _ in range(200))


def test_nearly_certain_box_one():
    rng = np.random.default_rng(11)
    outcomes = [simulate_once(1, 1 - 1e-9, rng) for _ in range(2000)]
    assert outcomes.count(1) == 2000


def test_simulate_once_frequencies_n1_half():
    counts = simulate_counts(SimConfig(1, F(1, 2), 10**6, 5))
    freqs = counts / 10**6
    assert np.all(np.abs(freqs - np.array([0.5, 0.5])) < 0.01)


def test_scalar_and_batch_kernels_agree():
    n, p = 4, 0.3
    uniforms = block_generator(9, 0).random((500, 2 * n + 1))
    batch = _outcomes(n, p, uniforms)
    rng = block_generator(9, 0)
    scalar = [simulate_once(n, p, rng) for _ in range(500)]
    assert batch.tolist() == scalar


@given(st.integers(0, 12), st.floats(0.001, 0.999), st.integers(0, 2**32))
def test_outcomes_in_range(n, p, seed):
    uniforms = np.random.default_rng(seed).random((200, 2 * n + 1))
    r = _outcomes(n, p, uniforms)
    assert r.min() >= 0 and r.max() <= n


def test_counts_sum_to_trials():
    cfg = SimConfig(3, F(2, 5), BLOCK_TRIALS * 2 + 17, 4)
    rep = run_simulation(cfg, pmf_generalized(MatchboxParams(3, F(2, 5))))
    assert sum(rep.counts) == cfg.trials
    assert len(rep.counts) == 4


def test_tv_zero_for_identical():
    assert tv_distance([0.25, 0.75], [0.25, 0.75]) == 0
    assert chi_square([25, 75], [0.25, 0.75]) == 0


def test_tv_definition():
    assert tv_distance([0.5, 0.5, 0.0], [0.25, 0.25, 0.5]) == pytest.approx(0.5)
    assert chi_square([10, 0], [0.5, 0.5]) == pytest.approx(10.0)


def test_tv_bound_classical_n2():
    rep = run_simulation(SimConfig(2, F(1, 2), 10**6, 42), [F(3, 8), F(3, 8), F(1, 4)])
    assert rep.tv_distance < 0.005


@pytest.mark.parametrize("p", [F(1, 5), F(1, 2), F(4, 5)])
def test_tv_bound_grid(p):
    for n in range(7):
        exact = pmf_generalized(MatchboxParams(n, p))
        rep = run_simulation(SimConfig(n, p, 10**6, 2026 + n), exact)
        assert rep.tv_distance < 0.005, (n, p, rep.tv_distance)
        assert rep.chi_square >= 0


def test_reproducible_across_workers():
    cfg = SimConfig(5, F(3, 10), 300_001, 77)
    exact = pmf_generalized(MatchboxParams(5, F(3, 10)))
    reports = [run_simulation(cfg, exact, workers=w) for w in (1, 1, 3, 8)]
    assert all(r == reports[0] for r in reports)


def test_trial_outcome_independent_of_total():
    # trial i's outcome depends on (seed, i) only, so prefixes are consistent
    short = simulate_counts(SimConfig(2, F(1, 2), 1000, 8))
    uniforms = block_generator(8, 0).random((1000, 5))
    assert short.tolist() == np.bincount(_outcomes(2, 0.5, uniforms), minlength=3).tolist()


def test_seed_sensitivity():
    a = simulate_counts(SimConfig(4, F(1, 2), 100_000, 1))
    b = simulate_counts(SimConfig(4, F(1, 2), 100_000, 2))
    assert a.tolist() != b.tolist()


def test_rejects_bad_exact_pmf():
    cfg = SimConfig(1, F(1, 2), 10, 0)
    with pytest.raises(ValueError):
        run_simulation(cfg, pmf_classical(2))
    with pytest.raises(ValueError):
        run_simulation(cfg, [F(1, 2), F(1, 3)])
