from __future__ import annotations

import numpy as np

from .._constants import TWO_PI, SWEEP_MAX_ATOMS
from ..types.herglotz_measure import Atom, HerglotzMeasure

__all__ = ["trial_rng", "random_measure"]


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator for one trial, split from the master seed.

    Trial ``i`` always sees the same stream no matter how many trials run or
    in which order they are scheduled.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))


def random_measure(rng: np.random.Generator, *, max_atoms: int = SWEEP_MAX_ATOMS) -> HerglotzMeasure:
    """1 to `max_atoms` atoms, Dirichlet(1, .., 1) weights, uniform angles."""
    count = int(rng.integers(1, max_atoms + 1))
    while True:
        weights = rng.dirichlet(np.ones(count))
        if np.all(weights > 0):
            break
    weights = weights / weights.sum()
    angles = rng.uniform(0.0, TWO_PI, size=count)
    return HerglotzMeasure(atoms=[Atom(t=float(t), lam=float(w)) for t, w in zip(angles, weights)])
