"""Seeding helpers: one master seed fans out to reproducible substreams.

Substream k of master seed m is the splitmix64 output of state
m + (k+1) * 0x9E3779B97F4A7C15 (the 64-bit golden ratio step).  This is the
standard stateless way to derive independent 64-bit seeds, so a sweep can
regenerate run k without replaying runs 0..k-1.  Generators are numpy PCG64.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def substream(master: int, index: int) -> int:
    """64-bit seed for substream ``index`` of ``master``."""
    z = (master + (index + 1) * _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def as_generator(seed) -> np.random.Generator:
    """Pass numpy Generators through; anything else seeds a fresh PCG64."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
