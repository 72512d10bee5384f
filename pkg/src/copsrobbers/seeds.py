"""Seed handling.

Every random choice in the package flows through a ``random.Random`` instance
(CPython's MT19937 Mersenne Twister), seeded with a 64-bit integer.  Component
sub-seeds are derived from one global seed by hashing ``"<seed>:<label>"``
with SHA-256 and keeping the first 8 bytes, so any component can be re-run in
isolation from the same global seed.
"""

import hashlib
import random

__all__ = ["derive_seed", "make_rng"]

_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, label: str) -> int:
    """Derive a stable 64-bit sub-seed for the named component."""
    digest = hashlib.sha256(f"{seed & _MASK64}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(seed: int, label: str | None = None) -> random.Random:
    if label is not None:
        seed = derive_seed(seed, label)
    return random.Random(seed & _MASK64)
