"""Access-sequence generators: bit-reversal, geometrically spaced blocks,
the concatenated separation sequence, and seeded random permutations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

_MAX_BITREV_K = 24  # 2^24 keys is already far past desk scale
_MAX_SEQUENCE_LEN = 100_000_000


def bit_reversal(k: int) -> list[int]:
    """Permutation of {0..2^k - 1} reversing each k-bit representation."""
    if k < 1:
        raise ValueError("bit_reversal: k must be >= 1")
    if k > _MAX_BITREV_K:
        raise ValueError(f"bit_reversal: k={k} exceeds the cap of {_MAX_BITREV_K}")
    K = 1 << k
    out = []
    for v in range(K):
        rev = 0
        for bit in range(k):
            if v >> bit & 1:
                rev |= 1 << (k - 1 - bit)
        out.append(rev)
    return out


def sep_block(i: int, k: int) -> list[int]:
    """Geometrically spaced keys i+1, i+2, i+4, ... visited in
    bit-reversal order."""
    if i < 0:
        raise ValueError("sep_block: i must be >= 0")
    K = 1 << k
    n = 1 << K
    if i > n // 2:
        raise ValueError(f"sep_block: i={i} out of range 0..{n // 2}")
    return [i + (1 << r) for r in bit_reversal(k)]


@dataclass(frozen=True)
class SeparationParams:
    """Parameters of the separation sequence.

    With K = 2^k keys per block and n = 2^K distinct keys overall, the
    sequence concatenates blocks 0..n/2, each repeated ``reps`` times
    (default n), for a total length of (n/2 + 1) * reps * K.
    """

    k: int
    reps: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("SeparationParams: k must be >= 1")
        if self.reps is not None and self.reps < 1:
            raise ValueError("SeparationParams: reps must be >= 1")

    @property
    def block_len(self) -> int:
        return 1 << self.k

    @property
    def key_count(self) -> int:
        return 1 << self.block_len

    @property
    def effective_reps(self) -> int:
        return self.key_count if self.reps is None else self.reps

    @property
    def length(self) -> int:
        return (self.key_count // 2 + 1) * self.effective_reps * self.block_len


def separation_sequence(params: SeparationParams) -> list[int]:
    """Concatenation of repeated geometrically spaced blocks; keys in
    [1, n].  Every reference tree's alternation value stays linear on it
    while the funnel value does not."""
    if params.length > _MAX_SEQUENCE_LEN:
        raise ValueError(
            f"separation_sequence: would need {params.length} accesses, "
            f"over the cap of {_MAX_SEQUENCE_LEN}"
        )
    n = params.key_count
    reps = params.effective_reps
    out: list[int] = []
    for i in range(n // 2 + 1):
        block = sep_block(i, params.k)
        for _ in range(reps):
            out.extend(block)
    return out


def random_permutation(n: int, seed: int) -> list[int]:
    """Uniform shuffle of 1..n, deterministic per seed."""
    if n < 1:
        raise ValueError("random_permutation: n must be >= 1")
    keys = list(range(1, n + 1))
    random.Random(seed).shuffle(keys)
    return keys
