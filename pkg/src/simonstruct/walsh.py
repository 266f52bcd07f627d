"""Butterfly transforms over tables of length 2**n.

Both transforms run in O(n * 2**n) and operate on the last axis, so a
2-D array is treated as a batch of independent tables.
"""

from __future__ import annotations

import numpy as np

__all__ = ["walsh_hadamard", "mobius_transform", "xor_permute", "parity"]


def _check_power_of_two(size: int) -> None:
    if size < 1 or size & (size - 1):
        raise ValueError(f"table length {size} is not a power of two")


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis.

    Self-inverse up to a factor of 2**n.  Input is converted to int64;
    intermediate values stay within int64 for n <= 24 tables of +-1 or
    of squared coefficients.
    """
    arr = np.array(values, dtype=np.int64)
    size = arr.shape[-1]
    _check_power_of_two(size)
    shape = arr.shape
    flat = arr.reshape(-1, size)
    h = 1
    while h < size:
        flat = flat.reshape(-1, 2, h)
        top = flat[:, 0, :].copy()
        flat[:, 0, :] += flat[:, 1, :]
        flat[:, 1, :] = top - flat[:, 1, :]
        flat = flat.reshape(-1, size)
        h *= 2
    return flat.reshape(shape)


def mobius_transform(values: np.ndarray) -> np.ndarray:
    """Binary Moebius transform (GF(2) zeta butterfly) along the last axis.

    Maps a truth table to its algebraic-normal-form coefficient table and
    back: the transform is its own inverse.
    """
    arr = np.array(values, dtype=np.uint8)
    size = arr.shape[-1]
    _check_power_of_two(size)
    shape = arr.shape
    flat = arr.reshape(-1, size)
    h = 1
    while h < size:
        flat = flat.reshape(-1, 2, h)
        flat[:, 1, :] ^= flat[:, 0, :]
        flat = flat.reshape(-1, size)
        h *= 2
    return flat.reshape(shape)


def xor_permute(table: np.ndarray, shift: int) -> np.ndarray:
    """Return t' with t'[x] = table[x ^ shift] (last-axis gather)."""
    size = table.shape[-1]
    _check_power_of_two(size)
    if not 0 <= shift < size:
        raise ValueError("shift out of range for table length")
    idx = np.arange(size) ^ shift
    return table[..., idx]


def parity(values: np.ndarray) -> np.ndarray:
    """Bitwise parity (popcount mod 2) of each entry of an integer array."""
    arr = np.asarray(values)
    return (np.bitwise_count(arr) & 1).astype(np.uint8)
