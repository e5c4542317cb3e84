"""Block enumeration of F_2^n with linear images.

Every vector x in F_2^n is visited exactly once, in increasing integer order
(bit i of x is coordinate i). For each linear map given by its column images,
the image of x is produced as packed 64-bit words. A block covers the low
``block_bits`` coordinates through a precomputed table; the high coordinates
contribute one XOR constant per block, so each block costs a few vectorized
numpy operations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

WORD = 64
_MASK = (1 << WORD) - 1


def to_words(value: int, width: int) -> np.ndarray:
    nwords = max(1, -(-width // WORD))
    return np.array([(value >> (WORD * i)) & _MASK for i in range(nwords)], dtype=np.uint64)


def from_words(words) -> int:
    return sum(int(w) << (WORD * i) for i, w in enumerate(words))


def _table(columns: list[int], width: int, bits: int) -> np.ndarray:
    """Images of all 2**bits combinations of the first ``bits`` columns."""
    nwords = max(1, -(-width // WORD))
    out = np.zeros((nwords, 1 << bits), dtype=np.uint64)
    for i in range(bits):
        col = to_words(columns[i], width)
        half = 1 << i
        out[:, half:2 * half] = out[:, :half] ^ col[:, None]
    return out


class LinearSweep:
    """Enumerate F_2^n together with images under named linear maps.

    ``maps`` maps a name to ``(columns, width)`` where ``columns[i]`` is the
    image of the i-th unit vector as a Python int with ``width`` bits.
    """

    def __init__(self, n: int, maps: dict[str, tuple[list[int], int]], block_bits: int = 16):
        self.n = n
        self.block_bits = min(n, block_bits)
        self.maps = {name: (list(cols), width) for name, (cols, width) in maps.items()}
        for name, (cols, _) in self.maps.items():
            if len(cols) != n:
                raise ValueError(f"map {name!r} has {len(cols)} columns, expected {n}")
        b = self.block_bits
        self._low = {name: _table(cols, w, b) for name, (cols, w) in self.maps.items()}
        self._low_weight = np.bitwise_count(np.arange(1 << b, dtype=np.uint64)).astype(np.int64)

    @property
    def nblocks(self) -> int:
        return 1 << (self.n - self.block_bits)

    def block(self, h: int) -> tuple[int, np.ndarray, dict[str, np.ndarray]]:
        """Block ``h``: (first vector, weights, images) for x in [h*B, (h+1)*B)."""
        b = self.block_bits
        start = h << b
        images = {}
        for name, (cols, width) in self.maps.items():
            hv = 0
            for i in range(b, self.n):
                if start >> i & 1:
                    hv ^= cols[i]
            low = self._low[name]
            images[name] = low ^ to_words(hv, width)[:, None] if hv else low
        weights = self._low_weight + start.bit_count()
        return start, weights, images

    def blocks(self) -> Iterator[tuple[int, np.ndarray, dict[str, np.ndarray]]]:
        for h in range(self.nblocks):
            yield self.block(h)

    def map_blocks(self, fn, workers: int = 1) -> list:
        """Apply ``fn(start, weights, images)`` to every block, results in block order."""
        if workers <= 1 or self.nblocks == 1:
            return [fn(*self.block(h)) for h in range(self.nblocks)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda h: fn(*self.block(h)), range(self.nblocks)))


def popcount(words: np.ndarray) -> np.ndarray:
    """Hamming weight of packed images, shape (nwords, B) -> (B,)."""
    return np.bitwise_count(words).sum(axis=0, dtype=np.int64)
