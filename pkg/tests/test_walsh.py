"""Transform layer against O(4^n) definitional implementations."""

import numpy as np
import pytest

from simonstruct.walsh import mobius_transform, parity, walsh_hadamard, xor_permute

from _oracles import popcount, slow_mobius, slow_walsh


def test_walsh_matches_definition():
    for seed in range(12):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 8))
        values = rng.integers(-50, 50, size=1 << n)
        assert np.array_equal(walsh_hadamard(values), slow_walsh(values))


def test_walsh_exhaustive_small():
    # all sign patterns at n = 2, the smallest size where butterflies mix
    for bits in range(16):
        values = np.array([1 - 2 * ((bits >> i) & 1) for i in range(4)])
        assert np.array_equal(walsh_hadamard(values), slow_walsh(values))


def test_walsh_involution_up_to_scale():
    rng = np.random.default_rng(7)
    for n in range(1, 11):
        values = rng.integers(-100, 100, size=1 << n)
        back = walsh_hadamard(walsh_hadamard(values))
        assert np.array_equal(back, values << n)


def test_walsh_input_not_modified():
    values = np.arange(8, dtype=np.int64)
    kept = values.copy()
    walsh_hadamard(values)
    assert np.array_equal(values, kept)


def test_walsh_rejects_bad_length():
    with pytest.raises(ValueError):
        walsh_hadamard(np.zeros(6, dtype=np.int64))
    with pytest.raises(ValueError):
        walsh_hadamard(np.zeros(0, dtype=np.int64))


def test_mobius_matches_definition():
    for seed in range(12):
        rng = np.random.default_rng(100 + seed)
        n = int(rng.integers(1, 8))
        values = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
        assert np.array_equal(mobius_transform(values), slow_mobius(values))


def test_mobius_is_an_involution():
    rng = np.random.default_rng(8)
    for n in range(1, 10):
        values = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
        assert np.array_equal(mobius_transform(mobius_transform(values)), values)


def test_mobius_batched_rows_match_loop():
    rng = np.random.default_rng(9)
    block = rng.integers(0, 2, size=(5, 32), dtype=np.uint8)
    batched = mobius_transform(block)
    for i in range(block.shape[0]):
        assert np.array_equal(batched[i], mobius_transform(block[i]))


def test_xor_permute_definition():
    rng = np.random.default_rng(10)
    for n in range(1, 8):
        table = rng.integers(0, 100, size=1 << n)
        for shift in (0, 1, (1 << n) - 1, int(rng.integers(0, 1 << n))):
            out = xor_permute(table, shift)
            for x in range(1 << n):
                assert out[x] == table[x ^ shift]


def test_xor_permute_rejects_bad_shift():
    table = np.zeros(8, dtype=np.uint8)
    with pytest.raises(ValueError):
        xor_permute(table, 8)
    with pytest.raises(ValueError):
        xor_permute(table, -1)


def test_xor_permute_last_axis_of_stack():
    rng = np.random.default_rng(11)
    block = rng.integers(0, 9, size=(3, 16))
    out = xor_permute(block, 5)
    for i in range(3):
        assert np.array_equal(out[i], xor_permute(block[i], 5))


def test_parity_matches_popcount():
    words = np.arange(512)
    expect = np.array([popcount(x) % 2 for x in words], dtype=np.uint8)
    assert np.array_equal(parity(words), expect)
    assert np.array_equal(parity(np.array([0, (1 << 40) + 3])), [0, 1])
