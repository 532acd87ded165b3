"""Seeded random streams.

Every stochastic step draws from numpy's PCG64 generator keyed by
``SeedSequence(seed, spawn_key=(tag,))``, so independent steps of one pipeline
never share a stream and a run is reproducible from its integer seed.
"""

import numpy as np

# stream tags; keep stable, changing them changes every seeded output
TREE = 0
DENSIFY = 1
SPLIT = 2
NEGATIVES = 3
AUC_POSITIVES = 4
AUC_NEGATIVES = 5
HITS_NEGATIVES = 6
CLUSTER_SAMPLE = 7
VALIDATION = 8


def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be in [0, 2**64), got {seed}")
    return seed


def stream(seed: int, tag: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(check_seed(seed), spawn_key=(tag,)))
    )


def child_seed(seed: int, tag: int) -> int:
    """Derive a 63-bit integer seed for a nested seeded call."""
    ss = np.random.SeedSequence(check_seed(seed), spawn_key=(tag,))
    return int(ss.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))
