"""
Seeded random streams.

All randomness in the project flows from one integer seed through
numpy's PCG64 bit generator. Sub-streams (per fold, per class) are
derived through SeedSequence so they never overlap.
"""
import numpy as np

RNG_ALGORITHM = "PCG64"


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Generator for `seed`, optionally keyed by a sub-stream path."""
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    sequence = np.random.SeedSequence([seed, *stream])
    return np.random.Generator(np.random.PCG64(sequence))
