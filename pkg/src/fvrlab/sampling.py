"""Deterministic cross-platform sampling for experiments.

Randomness comes from a splitmix64 stream: the state advances by the 64-bit
golden gamma 0x9E3779B97F4A7C15 and each output is the splitmix64 finalizer
of the state.  Bounded draws use rejection below the largest multiple of the
bound, so they are exactly uniform.  Subsets are drawn by a sparse partial
Fisher-Yates shuffle, so a draw costs O(size) regardless of the ring order.

Per-trial seeds are derived as mix64(master_seed, trial_index); the same
(master_seed, trial_index, ring, size) always yields the same subset, on
every platform, because only fixed-width integer arithmetic is involved.
"""

from __future__ import annotations

import numpy as np

from .ring import Ring
from .setalg import RSet

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _finalize(x: int) -> int:
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def mix64(master_seed: int, trial_index: int) -> int:
    """The per-trial seed for a master seed: stable, collision-resistant."""
    return _finalize((master_seed + _GAMMA * (trial_index + 1)) & _MASK)


class SplitMix64:
    """The fixed generator behind every sampled object."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _finalize(self.state)

    def bounded(self, m: int) -> int:
        """Uniform draw from [0, m) by rejection; m >= 1."""
        if m < 1:
            raise ValueError("bound must be >= 1")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            v = self.next64()
            if v < limit:
                return v % m


def sample_distinct(domain: int, count: int, seed: int) -> list[int]:
    """count distinct values from [0, domain), by sparse partial Fisher-Yates."""
    if not 1 <= count <= domain:
        raise ValueError(f"cannot draw {count} distinct values from {domain}")
    gen = SplitMix64(seed)
    perm: dict[int, int] = {}
    out = []
    for i in range(count):
        j = i + gen.bounded(domain - i)
        out.append(perm.get(j, j))
        perm[j] = perm.get(i, i)
    return out


def sample_subset(ring: Ring, size: int, trial_seed: int) -> RSet:
    """A uniform random subset of the ring with exactly `size` elements."""
    if not 1 <= size <= ring.order:
        raise ValueError(f"subset size {size} out of range [1, {ring.order}]")
    return RSet.from_indices(ring, sample_distinct(ring.order, size, trial_seed))


def sample_unit_subset(ring: Ring, size: int, trial_seed: int) -> RSet:
    """A uniform random subset of the unit group with exactly `size` elements."""
    units = ring.units()
    if not 1 <= size <= len(units):
        raise ValueError(f"unit subset size {size} out of range [1, {len(units)}]")
    picks = sample_distinct(len(units), size, trial_seed)
    return RSet.from_indices(ring, [units[i] for i in picks])


def sample_points(ring: Ring, count: int, seed: int) -> np.ndarray:
    """count distinct (x, y, z) triples, shape (count, 3)."""
    n = ring.order
    codes = sample_distinct(n**3, count, seed)
    out = np.empty((count, 3), dtype=np.int64)
    for row, code in enumerate(codes):
        code, z = divmod(code, n)
        x, y = divmod(code, n)
        out[row] = (x, y, z)
    return out


def sample_planes(ring: Ring, count: int, seed: int) -> np.ndarray:
    """count distinct (u, v, d) triples describing planes u*X + v*Y + Z = d."""
    return sample_points(ring, count, seed)


def sample_weights(count: int, max_weight: int, seed: int) -> list[int]:
    """count weights, each uniform in [1, max_weight]."""
    gen = SplitMix64(seed)
    return [1 + gen.bounded(max_weight) for _ in range(count)]


def shuffled(values, seed: int) -> list:
    """A full Fisher-Yates shuffle of a list, deterministic in the seed."""
    out = list(values)
    gen = SplitMix64(seed)
    for i in range(len(out) - 1):
        j = i + gen.bounded(len(out) - i)
        out[i], out[j] = out[j], out[i]
    return out
