"""Seed derivation: distinct, deterministic per-trial streams."""

from decolor.rng import GOLDEN_GAMMA, MASK64, splitmix64, trial_rng, trial_seed


def test_splitmix64_is_a_pure_64_bit_map():
    assert splitmix64(0) == splitmix64(0)
    assert 0 <= splitmix64(12345) <= MASK64
    # the documented derivation: bump by (i+1) increments of the golden gamma
    assert trial_seed(42, 0) == splitmix64((42 + GOLDEN_GAMMA) & MASK64)
    assert trial_seed(42, 2) == splitmix64((42 + 3 * GOLDEN_GAMMA) & MASK64)


def test_trial_seeds_disperse():
    seeds = {trial_seed(0, i) for i in range(1000)}
    assert len(seeds) == 1000
    # different masters with identical indices do not collide either
    assert {trial_seed(m, 0) for m in range(1000)}.isdisjoint(
        {trial_seed(m, 1) for m in range(1000)}
    )


def test_trial_rng_streams_are_reproducible_and_independent():
    a = trial_rng(7, 3).integers(0, 1 << 30, size=8)
    b = trial_rng(7, 3).integers(0, 1 << 30, size=8)
    c = trial_rng(7, 4).integers(0, 1 << 30, size=8)
    assert (a == b).all()
    assert (a != c).any()
