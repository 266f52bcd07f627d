"""Measurement collapse and output sampling against exact enumeration."""

import numpy as np
import pytest

from simonstruct.boolfn import PlantSpec, TruthTable, plant_periods, plant_structure
from simonstruct.gf2 import BitMatrix, BitVector, null_space_basis, span_equal, span_of
from simonstruct.simulate import (
    collapse,
    quantum_solve,
    sample_y,
    simon_round,
    y_distribution,
)

from _oracles import popcount, slow_walsh, span_set, structure_sets_def


def random_table(n, rng):
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def test_collapse_mask_is_the_consistent_set():
    rng = np.random.default_rng(40)
    for trial in range(20):
        n = int(rng.integers(2, 8))
        f = random_table(n, rng)
        k = int(rng.integers(0, 4))
        anchors = [BitVector(n, int(v)) for v in rng.integers(0, 1 << n, size=k)]
        out = collapse(f, anchors, seed=trial)
        assert len(out.observed) == k + 1
        offsets = [0] + [a.bits for a in anchors]
        for x in range(1 << n):
            consistent = all(
                f(x ^ off) == val for off, val in zip(offsets, out.observed)
            )
            assert bool(out.mask[x]) == consistent
        assert out.size == int(out.mask.sum()) >= 1
        assert [m.bits for m in out.members()] == list(np.nonzero(out.mask)[0])


def test_collapse_set_is_a_union_of_structure_cosets():
    rng = np.random.default_rng(41)
    for trial in range(10):
        n = int(rng.integers(3, 8))
        basis = span_of(n, [int(v) for v in rng.integers(1, 1 << n, size=2)])
        f = plant_structure(PlantSpec(n, basis, seed=trial))
        anchors = [BitVector(n, int(v)) for v in rng.integers(0, 1 << n, size=3)]
        out = collapse(f, anchors, seed=trial)
        for s in span_set(basis.basis.row_ints()):
            for x in range(1 << n):
                assert out.mask[x] == out.mask[x ^ s]


def test_y_distribution_matches_direct_transform():
    rng = np.random.default_rng(42)
    for trial in range(12):
        n = int(rng.integers(2, 7))
        f = random_table(n, rng)
        anchors = [BitVector(n, int(v)) for v in rng.integers(0, 1 << n, size=2)]
        out = collapse(f, anchors, seed=trial)
        dist = y_distribution(out)
        hat = slow_walsh(out.mask.astype(np.int64))
        total = out.size << n
        for y in range(1 << n):
            assert dist[y] == pytest.approx(int(hat[y]) ** 2 / total)
        assert float(np.sum(dist.probs)) == pytest.approx(1.0)


def test_every_positive_y_is_orthogonal_to_u0():
    rng = np.random.default_rng(43)
    for trial in range(10):
        n = int(rng.integers(3, 8))
        basis = span_of(n, [int(v) for v in rng.integers(1, 1 << n, size=2)])
        f = plant_structure(PlantSpec(n, basis, seed=trial))
        u0, _ = structure_sets_def(f.table)
        anchors = [BitVector(n, int(v)) for v in rng.integers(0, 1 << n, size=2)]
        out = collapse(f, anchors, seed=trial)
        dist = y_distribution(out)
        for y in range(1 << n):
            if dist[y] > 0:
                assert all(popcount(y & b) % 2 == 0 for b in u0)


def test_sample_y_follows_the_exact_law():
    rng = np.random.default_rng(44)
    n = 4
    f = random_table(n, rng)
    out = collapse(f, [BitVector(n, 0b1010)], seed=3)
    dist = y_distribution(out)
    draws = 20000
    counts = np.zeros(1 << n)
    for i in range(draws):
        counts[sample_y(out, seed=i).bits] += 1
    for y in range(1 << n):
        p = dist[y]
        se = (p * (1 - p) / draws) ** 0.5
        assert abs(counts[y] / draws - p) <= max(4 * se, 1e-12)


def test_sampled_y_support_never_leaves_the_dual():
    rng = np.random.default_rng(45)
    n = 6
    basis = span_of(n, [0b000111, 0b110000])
    f = plant_structure(PlantSpec(n, basis, seed=8))
    out = collapse(f, [], seed=9)
    members = span_set(basis.basis.row_ints())
    for i in range(300):
        y = sample_y(out, seed=1000 + i)
        assert all(popcount(y.bits & b) % 2 == 0 for b in members)


def test_simon_round_orthogonal_to_periods():
    rng = np.random.default_rng(46)
    n = 7
    basis = span_of(n, [0b0000011, 0b0101000])
    F = plant_periods(n, basis, seed=11)
    members = span_set(basis.basis.row_ints())
    for i in range(200):
        y = simon_round(F, seed=i)
        assert all(popcount(y.bits & s) % 2 == 0 for s in members)


def test_simon_round_y_is_uniform_over_the_dual():
    # with an injective quotient the collapse set is one coset, so the
    # output law is exactly uniform on the orthogonal complement
    n = 5
    basis = span_of(n, [0b00011, 0b01100])
    F = plant_periods(n, basis, seed=12)
    dual = null_space_basis(BitMatrix.from_ints(n, basis.basis.row_ints()))
    dual_members = [int(x) for x in dual.member_ints()]
    draws = 8000
    counts = {y: 0 for y in dual_members}
    for i in range(draws):
        counts[simon_round(F, seed=i).bits] += 1
    p = 1 / len(dual_members)
    se = (p * (1 - p) / draws) ** 0.5
    for y, c in counts.items():
        assert abs(c / draws - p) <= 4 * se


def test_quantum_solve_matches_null_space():
    rng = np.random.default_rng(47)
    for trial in range(30):
        n = int(rng.integers(2, 13))
        k = int(rng.integers(0, n + 4))
        ys = BitMatrix.from_ints(n, [int(v) for v in rng.integers(0, 1 << n, size=k)])
        got = quantum_solve(ys, seed=trial)
        assert span_equal(got, null_space_basis(ys))


def test_quantum_solve_direct_path_agrees():
    rng = np.random.default_rng(48)
    for trial in range(10):
        n = int(rng.integers(2, 9))
        ys = BitMatrix.from_ints(n, [int(v) for v in rng.integers(0, 1 << n, size=3)])
        a = quantum_solve(ys, seed=trial)
        b = quantum_solve(ys, seed=trial, direct=True)
        assert span_equal(a, b)


def test_quantum_solve_small_budget_stays_inside():
    rng = np.random.default_rng(49)
    ys = BitMatrix.from_ints(10, [int(v) for v in rng.integers(0, 1 << 10, size=2)])
    target = null_space_basis(ys)
    got = quantum_solve(ys, seed=5, samples=2)
    for row in got.basis.rows:
        assert target.contains(row)
    with pytest.raises(ValueError):
        quantum_solve(ys, samples=0)


def test_collapse_rejects_mismatched_anchor():
    f = TruthTable(3, np.zeros(8, dtype=np.uint8))
    with pytest.raises(ValueError):
        collapse(f, [BitVector(4, 1)])
