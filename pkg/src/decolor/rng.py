"""Seed derivation for reproducible trials.

Every trial gets its own 64-bit seed derived from the experiment's master
seed with a fixed hash, so results are independent of worker layout and any
subset of trials can be replayed in isolation:

    trial_seed(master, i) = splitmix64(master + (i + 1) * GOLDEN_GAMMA)

with all arithmetic mod 2^64. Streams are numpy PCG64 generators; the
generator algorithm and this derivation are part of the output contract,
not an implementation detail.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """First output of a splitmix64 stream seeded at x (Steele et al. constants)."""
    z = (x + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    if trial_index < 0:
        raise ValueError(f"trial index must be >= 0, got {trial_index}")
    return splitmix64((master_seed + (trial_index + 1) * GOLDEN_GAMMA) & MASK64)


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(trial_seed(master_seed, trial_index)))
