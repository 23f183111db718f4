"""Counter-based RNG streams for reproducible, scheduling-independent trials.

Every stochastic operation in the package takes an explicit
``numpy.random.Generator``.  The generators here are backed by Philox, a
splittable counter-based bit generator, with per-trial streams derived from a
master seed and the trial index.  Trial ``i`` therefore sees the same stream
no matter how many workers run, or in what order.
"""
from __future__ import annotations

import numpy as np


def master_rng(seed: int) -> np.random.Generator:
    """Stream for run-level draws (not tied to any one trial)."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    """Independent stream for one trial, stable in (seed, index)."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(trial_index,))
    return np.random.Generator(np.random.Philox(seq))
