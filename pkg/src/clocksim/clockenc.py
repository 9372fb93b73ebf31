"""Clock-register encodings: bijections between clock indices and bitstrings.

Two schemes are provided:

* ``pulse`` -- one-hot strings of width equal to the capacity; clock index
  ``x`` maps to the string with a single 1 at bit position ``x``.
* ``combinadic`` -- fixed Hamming-weight-``r`` strings of minimal width,
  enumerated in lexicographic order (the combinatorial number system).
  This compresses a capacity-``N`` clock into ``b = O(N^{1/r})`` qubits.

Bit position 0 is the leftmost (most significant) bit throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np


@dataclass(frozen=True)
class ClockEncoding:
    """An injective map from ``{0, ..., capacity-1}`` into weight-``r`` strings.

    Attributes:
        kind: ``"pulse"`` or ``"combinadic"``.
        capacity: number of encodable clock indices.
        b: register width in qubits.
        r: Hamming weight of every valid codeword.
    """

    kind: str
    capacity: int
    b: int
    r: int

    def __post_init__(self):
        if self.kind not in ("pulse", "combinadic"):
            raise ValueError(f"unknown encoding kind {self.kind!r}")
        if self.capacity < 1:
            raise ValueError("capacity must be positive")
        if self.kind == "pulse":
            if self.r != 1 or self.b != self.capacity:
                raise ValueError("pulse encoding requires b == capacity, r == 1")
        else:
            if not 1 <= self.r <= self.b:
                raise ValueError("combinadic encoding requires 1 <= r <= b")
            if comb(self.b, self.r) < self.capacity:
                raise ValueError(
                    f"C({self.b},{self.r}) = {comb(self.b, self.r)} "
                    f"cannot hold {self.capacity} clock values"
                )


def clock_qubit_count(capacity: int, kind: str, r: int = 1) -> int:
    """Register width needed to encode ``capacity`` clock values."""
    if capacity < 1:
        raise ValueError("capacity must be positive")
    if kind == "pulse":
        return capacity
    if kind == "combinadic":
        if r < 1:
            raise ValueError("weight r must be positive")
        b = r
        while comb(b, r) < capacity:
            b += 1
        return b
    raise ValueError(f"unknown encoding kind {kind!r}")


def pulse_encoding(capacity: int) -> ClockEncoding:
    return ClockEncoding("pulse", capacity, capacity, 1)


def combinadic_encoding(capacity: int, r: int) -> ClockEncoding:
    b = clock_qubit_count(capacity, "combinadic", r)
    return ClockEncoding("combinadic", capacity, b, r)


def _unrank_positions(b: int, r: int, x: int) -> list[int]:
    """Positions of the ones (ascending) of the x-th weight-r string of width b.

    Lexicographic rank x decomposes as sum_j C(m_j, r+1-j) with
    m_1 > m_2 > ... > m_r >= 0, where m_j = b - 1 - p_j and p_j is the
    bit position of the j-th one.  Greedy extraction of the m_j is the
    standard combinatorial number system.
    """
    positions = []
    rem = x
    m_cap = b - 1
    for j in range(r, 0, -1):
        # largest m <= m_cap with C(m, j) <= rem
        m = j - 1
        while m + 1 <= m_cap and comb(m + 1, j) <= rem:
            m += 1
        rem -= comb(m, j)
        positions.append(b - 1 - m)
        m_cap = m - 1
    if rem != 0:
        raise ValueError(f"rank {x} out of range for width {b}, weight {r}")
    return positions


def _rank_positions(b: int, r: int, positions) -> int:
    """Inverse of :func:`_unrank_positions`; positions must be ascending."""
    x = 0
    for j, p in enumerate(positions):
        x += comb(b - 1 - p, r - j)
    return x


def one_positions(enc: ClockEncoding, x: int) -> tuple[int, ...]:
    """Ascending bit positions holding a 1 in the codeword of ``x``."""
    if not 0 <= x < enc.capacity:
        raise ValueError(f"clock index {x} outside [0, {enc.capacity})")
    if enc.kind == "pulse":
        return (x,)
    return tuple(_unrank_positions(enc.b, enc.r, x))


def encode_clock_index(enc: ClockEncoding, x: int) -> np.ndarray:
    """Codeword of clock index ``x`` as a uint8 array, bit 0 leftmost."""
    bits = np.zeros(enc.b, dtype=np.uint8)
    bits[list(one_positions(enc, x))] = 1
    return bits


def decode_clock_string(enc: ClockEncoding, bits) -> int:
    """Clock index of a codeword; rejects strings of the wrong shape or weight."""
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.shape != (enc.b,):
        raise ValueError(f"expected {enc.b} bits, got shape {arr.shape}")
    ones = np.flatnonzero(arr)
    if len(ones) != enc.r or not np.all((arr == 0) | (arr == 1)):
        raise ValueError("not a valid codeword: wrong Hamming weight")
    if enc.kind == "pulse":
        return int(ones[0])
    x = _rank_positions(enc.b, enc.r, [int(p) for p in ones])
    if x >= enc.capacity:
        raise ValueError(f"codeword ranks to {x}, beyond capacity {enc.capacity}")
    return x


def transition_support(enc: ClockEncoding, x: int) -> tuple[int, ...]:
    """Bit positions where the codewords of ``x`` and ``x+1`` differ."""
    if not 0 <= x < enc.capacity - 1:
        raise ValueError(f"no transition from {x} within capacity {enc.capacity}")
    a = set(one_positions(enc, x))
    b = set(one_positions(enc, x + 1))
    return tuple(sorted(a ^ b))


def transition_union_support(enc: ClockEncoding, x: int) -> tuple[int, ...]:
    """Bit positions holding a 1 in the codeword of ``x`` or of ``x+1``.

    Restricted to these positions, the codeword of ``x`` (resp. ``x+1``)
    is the unique valid codeword matching that local pattern: a weight-r
    string whose ones all lie inside the union is determined by which of
    the union positions it occupies.  Realizing the hop |x+1><x| on this
    support therefore reproduces it exactly on the span of valid codewords.
    """
    if not 0 <= x < enc.capacity - 1:
        raise ValueError(f"no transition from {x} within capacity {enc.capacity}")
    a = set(one_positions(enc, x))
    b = set(one_positions(enc, x + 1))
    return tuple(sorted(a | b))


def bits_to_str(bits) -> str:
    return "".join(str(int(v)) for v in np.asarray(bits).ravel())
