"""Boolean functions as black-box oracles with a known weight.

An n-variable Boolean function is stored as its full truth table: bit x of
the table is f(x), where the input bitstring is identified with the integer
x (bit i of x is variable number i+1).  The weight t is the number of ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ParameterError, WeightOutOfRangeError

MAX_VARIABLES = 24


@dataclass(frozen=True)
class BooleanOracle:
    """Truth table of an n-variable Boolean function with cached weight.

    Immutable after construction; safe to share between threads.
    """

    n: int
    bits: np.ndarray = field(repr=False)
    t: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARIABLES:
            raise ParameterError(f"n must be in [1, {MAX_VARIABLES}], got {self.n}")
        bits = np.array(self.bits, dtype=np.uint8)  # private copy, frozen below
        if bits.shape != (1 << self.n,):
            raise ParameterError(f"table must have length 2^{self.n}")
        if not np.all(bits <= 1):
            raise ParameterError("table entries must be bits")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)
        if self.t != int(bits.sum()):
            raise ParameterError("cached weight does not match popcount of table")

    @property
    def size(self) -> int:
        """Domain size N = 2^n."""
        return 1 << self.n

    def value(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise IndexError(f"input {x} outside [0, {self.size})")
        return int(self.bits[x])

    @cached_property
    def ones(self) -> np.ndarray:
        """Indices x with f(x) = 1, ascending."""
        return np.flatnonzero(self.bits)

    @cached_property
    def zeros(self) -> np.ndarray:
        """Indices x with f(x) = 0, ascending."""
        return np.flatnonzero(self.bits == 0)

    def to_hex(self) -> str:
        """Truth table as a hex string; most-significant bit is x = N-1."""
        value = 0
        for x in self.ones:
            value |= 1 << int(x)
        width = max(1, (self.size + 3) // 4)
        return format(value, f"0{width}x")


def from_bits(bits) -> BooleanOracle:
    """Build an oracle from an explicit bit sequence of length 2^n."""
    arr = np.asarray(bits, dtype=np.uint8)
    n = int(round(math.log2(arr.size)))
    if 1 << n != arr.size:
        raise ParameterError("table length must be a power of two")
    return BooleanOracle(n=n, bits=arr, t=int(arr.sum()))


def from_hex(n: int, text: str) -> BooleanOracle:
    """Inverse of :meth:`BooleanOracle.to_hex`."""
    value = int(text, 16)
    size = 1 << n
    if value >> size:
        raise ParameterError("hex string encodes more bits than 2^n")
    bits = np.fromiter(((value >> x) & 1 for x in range(size)), dtype=np.uint8, count=size)
    return BooleanOracle(n=n, bits=bits, t=int(bits.sum()))


def make_random_oracle(n: int, t: int, seed: int) -> BooleanOracle:
    """Uniformly random weight-t function, reproducible from the seed.

    The t solution positions are drawn by a partial Fisher-Yates pass over
    the index array, so the same (n, t, seed) always yields the identical
    table.
    """
    if not 1 <= n <= MAX_VARIABLES:
        raise ParameterError(f"n must be in [1, {MAX_VARIABLES}], got {n}")
    size = 1 << n
    if not 0 <= t <= size:
        raise WeightOutOfRangeError(f"weight {t} outside [0, {size}]")
    rng = np.random.default_rng(seed)
    # Selecting the complement keeps the pass length at most N/2.
    pick, invert = (t, False) if t <= size // 2 else (size - t, True)
    idx = np.arange(size, dtype=np.int64)
    if pick:
        draws = rng.integers(np.arange(pick), size)
        for i in range(pick):
            j = int(draws[i])
            idx[i], idx[j] = idx[j], idx[i]
    bits = np.full(size, invert, dtype=np.uint8)
    bits[idx[:pick]] = 0 if invert else 1
    return BooleanOracle(n=n, bits=bits, t=t)


def evaluate(oracle: BooleanOracle, x: int) -> int:
    """One classical query f(x); pure, bounds-checked."""
    return oracle.value(x)


def round_weight(w: float, size: int) -> int:
    """Nearest integer to size*w; exact half-integers round half-up."""
    if not 0.0 < w < 1.0:
        raise ParameterError(f"weight fraction must lie in (0, 1), got {w}")
    return int(math.floor(size * w + 0.5))
