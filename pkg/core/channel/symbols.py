"""
Modulo-q word arithmetic and base-q digit conversion.

Words are tuples of ints in 0..q-1. The index of a word is its value as a
base-q number, first symbol most significant, so index order is lexicographic
order.
"""

from typing import Sequence, Tuple

import numpy as np

from core.errors import LengthMismatchError

Word = Tuple[int, ...]


def add_words(x: Sequence[int], z: Sequence[int], q: int) -> Word:
    """Componentwise x ⊕ z (mod q)."""
    if len(x) != len(z):
        raise LengthMismatchError(f"Cannot add words of lengths {len(x)} and {len(z)}")
    return tuple((a + b) % q for a, b in zip(x, z))


def sub_words(y: Sequence[int], x: Sequence[int], q: int) -> Word:
    """Componentwise y ⊖ x (mod q)."""
    if len(y) != len(x):
        raise LengthMismatchError(f"Cannot subtract words of lengths {len(y)} and {len(x)}")
    return tuple((a - b) % q for a, b in zip(y, x))


def to_digits(value: int, radix: int, length: int) -> Word:
    """
    Write `value` as exactly `length` base-`radix` digits, most significant first.
    """
    if value < 0 or value >= radix ** length:
        raise ValueError(f"{value} does not fit in {length} base-{radix} digits")
    digits = []
    for _ in range(length):
        value, digit = divmod(value, radix)
        digits.append(digit)
    return tuple(reversed(digits))


def from_digits(digits: Sequence[int], radix: int) -> int:
    """Inverse of to_digits."""
    value = 0
    for digit in digits:
        value = value * radix + int(digit)
    return value


def digits_needed(count: int, radix: int) -> int:
    """Smallest t >= 0 with radix**t >= count (integers only, no logarithms)."""
    if count < 1:
        raise ValueError("count must be positive")
    t, reach = 0, 1
    while reach < count:
        reach *= radix
        t += 1
    return t


def word_index(word: Sequence[int], q: int) -> int:
    return from_digits(word, q)


def word_at(index: int, q: int, n: int) -> Word:
    return to_digits(index, q, n)


def all_words(q: int, n: int) -> np.ndarray:
    """
    All q^n words of length n as a (q^n, n) int array in lexicographic order.
    """
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((q,) * n).reshape(n, -1).T
    return grids.astype(np.int64)
