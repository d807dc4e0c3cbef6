import numpy as np


def point_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for grid point `index` of a run seeded with `seed`"""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
