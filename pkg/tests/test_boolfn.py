"""Truth tables, ANF conversion, planted instances, text formats."""

import numpy as np
import pytest

from simonstruct.boolfn import (
    Anf,
    MultiTruthTable,
    PlantSpec,
    TruthTable,
    anf_of,
    derivative,
    format_anf,
    format_multi_truth_table,
    format_truth_table,
    parse_anf,
    parse_multi_truth_table,
    parse_truth_table,
    plant_periods,
    plant_r_type,
    plant_structure,
    tt_of,
)
from simonstruct.gf2 import BitVector, span_of
from simonstruct.oracle import brute_periods, brute_structures

from _oracles import span_set, structure_sets_def


def random_table(n, rng):
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def test_truth_table_call_and_eq():
    f = TruthTable(2, [0, 1, 1, 0])
    assert [f(x) for x in range(4)] == [0, 1, 1, 0]
    assert f(BitVector(2, 3)) == 0
    assert f == TruthTable(2, [0, 1, 1, 0])
    assert f != TruthTable(2, [0, 0, 1, 0])


def test_truth_table_validation():
    with pytest.raises(ValueError):
        TruthTable(2, [0, 1, 1])
    with pytest.raises(ValueError):
        TruthTable(2, [0, 1, 2, 0])
    with pytest.raises(ValueError):
        TruthTable(30, np.zeros(8, dtype=np.uint8))


def test_multi_truth_table_basics():
    F = MultiTruthTable(2, 3, [0, 5, 7, 2])
    assert F(0) == 0 and F(2) == 7
    assert F(BitVector(2, 1)) == 5
    with pytest.raises(ValueError):
        MultiTruthTable(2, 2, [0, 4, 0, 0])
    with pytest.raises(ValueError):
        MultiTruthTable(2, 2, [0, 1, 2])


def test_anf_round_trip_random():
    rng = np.random.default_rng(20)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        f = random_table(n, rng)
        a = anf_of(f)
        assert tt_of(a) == f
        for x in range(1 << n):
            assert a.evaluate(x) == f(x)


def test_anf_degree_and_validation():
    assert Anf(3).degree() == -1
    assert Anf(3, frozenset({frozenset()})).degree() == 0
    assert Anf(3, frozenset({frozenset({1, 3})})).degree() == 2
    with pytest.raises(ValueError):
        Anf(2, frozenset({frozenset({3})}))


def test_derivative_definition():
    rng = np.random.default_rng(21)
    for _ in range(20):
        n = int(rng.integers(1, 7))
        f = random_table(n, rng)
        s = BitVector(n, int(rng.integers(0, 1 << n)))
        d = derivative(f, s)
        for x in range(1 << n):
            assert d(x) == f(x) ^ f(x ^ s.bits)


def test_plant_structure_sets_exact_span():
    rng = np.random.default_rng(22)
    for trial in range(25):
        n = int(rng.integers(3, 9))
        dim = int(rng.integers(0, min(3, n - 1) + 1))
        basis = span_of(n, [int(v) for v in rng.integers(1, 1 << n, size=dim)])
        f = plant_structure(PlantSpec(n, basis, seed=1000 + trial))
        u0, _ = structure_sets_def(f.table)
        assert u0 == span_set(basis.basis.row_ints())


def test_plant_structure_reproducible():
    basis = span_of(6, [0b000011, 0b101000])
    a = plant_structure(PlantSpec(6, basis, seed=5))
    b = plant_structure(PlantSpec(6, basis, seed=5))
    assert a == b


def test_plant_r_type_flips_exactly_r():
    rng = np.random.default_rng(23)
    for trial in range(15):
        n = int(rng.integers(2, 8))
        f = random_table(n, rng)
        r = int(rng.integers(0, 1 << n))
        g = plant_r_type(f, r, seed=trial)
        assert int(np.count_nonzero(f.table != g.table)) == r
    with pytest.raises(ValueError):
        plant_r_type(random_table(3, rng), 9)


def test_plant_periods_span_is_exact():
    rng = np.random.default_rng(24)
    for trial in range(20):
        n = int(rng.integers(3, 9))
        dim = int(rng.integers(1, min(3, n - 1) + 1))
        while True:
            basis = span_of(n, [int(v) for v in rng.integers(1, 1 << n, size=dim)])
            if basis.dim == dim:
                break
        F = plant_periods(n, basis, seed=trial)
        assert F.m_out == n - 1
        got = brute_periods(F)
        assert got.basis.row_ints() == basis.basis.row_ints()
    with pytest.raises(ValueError):
        plant_periods(5, span_of(5, []), seed=0)


def test_plant_structure_agrees_with_oracle_module():
    basis = span_of(8, [0b00000101, 0b01100000])
    f = plant_structure(PlantSpec(8, basis, seed=77))
    sets = brute_structures(f)
    assert sets.u0.basis.row_ints() == basis.basis.row_ints()


def test_truth_table_text_round_trip():
    rng = np.random.default_rng(25)
    f = random_table(5, rng)
    assert parse_truth_table(format_truth_table(f)) == f
    with pytest.raises(ValueError):
        parse_truth_table("n=2\n011\n")
    with pytest.raises(ValueError):
        parse_truth_table("m=2\n0110\n")
    with pytest.raises(ValueError):
        parse_truth_table("n=2\n0120\n")


def test_multi_truth_table_text_round_trip():
    rng = np.random.default_rng(26)
    F = MultiTruthTable(3, 2, rng.integers(0, 4, size=8))
    again = parse_multi_truth_table(format_multi_truth_table(F))
    assert again == F
    with pytest.raises(ValueError):
        parse_multi_truth_table("n=2\n00\n01\n10\n")
    with pytest.raises(ValueError):
        parse_multi_truth_table("n=1\n00\n0x\n")


def test_anf_text_round_trip():
    rng = np.random.default_rng(27)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        f = random_table(n, rng)
        a = anf_of(f)
        again = parse_anf(format_anf(a), n)
        assert again == a
    assert parse_anf("0").monomials == frozenset()
    assert parse_anf("1 + 1", 2).monomials == frozenset()
    assert parse_anf("x2*x1 + x3").n == 3
    with pytest.raises(ValueError):
        parse_anf("x1 * y2")
    with pytest.raises(ValueError):
        parse_anf("x1 + + x2")
    with pytest.raises(ValueError):
        parse_anf("x0 + x1")
