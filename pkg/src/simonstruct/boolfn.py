"""Boolean functions: truth tables, algebraic normal form, planted instances.

Truth tables index entry m by the packed input word m (x_1 at bit 0).  A
multi-output table stores one output word per input the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .gf2 import BitVector, Subspace, _check_dim
from .rng import as_rng
from .walsh import mobius_transform, walsh_hadamard, xor_permute

__all__ = [
    "TruthTable",
    "MultiTruthTable",
    "Anf",
    "PlantSpec",
    "anf_of",
    "tt_of",
    "derivative",
    "plant_structure",
    "plant_r_type",
    "plant_periods",
    "parse_truth_table",
    "format_truth_table",
    "parse_multi_truth_table",
    "format_multi_truth_table",
    "parse_anf",
    "format_anf",
    "DEFAULT_N_CAP",
    "PLANT_RETRY_CAP",
]

# Tables take 2**n entries; desk-scale default cap, overridable per call site.
DEFAULT_N_CAP = 24
PLANT_RETRY_CAP = 64


def _check_cap(n: int, cap: int = DEFAULT_N_CAP) -> None:
    _check_dim(n)
    if n > cap:
        raise ValueError(f"dimension {n} exceeds table cap {cap}")


class TruthTable:
    """Single-output Boolean function on n inputs as a read-only 0/1 array."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        _check_cap(n)
        arr = np.array(table, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"table must have 2**{n} entries, got shape {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("table entries must be 0 or 1")
        arr.flags.writeable = False
        self.n = n
        self.table = arr

    def __call__(self, x: BitVector | int) -> int:
        if isinstance(x, BitVector):
            if x.n != self.n:
                raise ValueError("dimension mismatch")
            idx = x.bits
        else:
            idx = int(x)
            if not 0 <= idx < (1 << self.n):
                raise ValueError("input index out of range")
        return int(self.table[idx])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruthTable)
            and self.n == other.n
            and bool(np.array_equal(self.table, other.table))
        )

    def __repr__(self) -> str:
        body = "".join(str(int(b)) for b in self.table) if self.n <= 5 else "..."
        return f"TruthTable(n={self.n}, {body})"


class MultiTruthTable:
    """Vector-valued Boolean function: one m_out-bit word per input."""

    __slots__ = ("n", "m_out", "table")

    def __init__(self, n: int, m_out: int, table):
        _check_cap(n)
        if not 1 <= m_out <= 63:
            raise ValueError("output width must be in 1..63")
        arr = np.array(table, dtype=np.int64)
        if arr.shape != (1 << n,):
            raise ValueError(f"table must have 2**{n} entries, got shape {arr.shape}")
        if arr.min(initial=0) < 0 or arr.max(initial=0) >= (1 << m_out):
            raise ValueError("output word out of range for m_out")
        arr.flags.writeable = False
        self.n = n
        self.m_out = m_out
        self.table = arr

    def __call__(self, x: BitVector | int) -> int:
        if isinstance(x, BitVector):
            if x.n != self.n:
                raise ValueError("dimension mismatch")
            idx = x.bits
        else:
            idx = int(x)
            if not 0 <= idx < (1 << self.n):
                raise ValueError("input index out of range")
        return int(self.table[idx])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiTruthTable)
            and (self.n, self.m_out) == (other.n, other.m_out)
            and bool(np.array_equal(self.table, other.table))
        )


@dataclass(frozen=True)
class Anf:
    """Algebraic normal form as a set of monomials over variables 1..n.

    A monomial is a frozenset of variable indices; the empty frozenset is
    the constant-one term.  No monomial set at all means the zero function.
    """

    n: int
    monomials: frozenset[frozenset[int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_dim(self.n)
        for mono in self.monomials:
            for v in mono:
                if not 1 <= v <= self.n:
                    raise ValueError(f"variable x{v} out of range 1..{self.n}")

    def degree(self) -> int:
        """Largest monomial size; -1 for the zero function."""
        return max((len(m) for m in self.monomials), default=-1)

    def evaluate(self, x: BitVector | int) -> int:
        bits = x.bits if isinstance(x, BitVector) else int(x)
        acc = 0
        for mono in self.monomials:
            if all((bits >> (v - 1)) & 1 for v in mono):
                acc ^= 1
        return acc


@dataclass(frozen=True)
class PlantSpec:
    """Request for a planted instance: dimension, wanted structure, seed."""

    n: int
    structure_basis: Subspace
    seed: int | None = None

    def __post_init__(self) -> None:
        _check_cap(self.n)
        if self.structure_basis.n != self.n:
            raise ValueError("dimension mismatch between n and structure basis")


def _mono_index(mono: frozenset[int]) -> int:
    idx = 0
    for v in mono:
        idx |= 1 << (v - 1)
    return idx


def _index_mono(idx: int) -> frozenset[int]:
    return frozenset(v + 1 for v in range(idx.bit_length()) if (idx >> v) & 1)


def anf_of(f: TruthTable) -> Anf:
    """Moebius transform of the truth table, returned as sparse monomials."""
    coeffs = mobius_transform(f.table)
    monos = frozenset(_index_mono(int(i)) for i in np.nonzero(coeffs)[0])
    return Anf(f.n, monos)


def tt_of(a: Anf) -> TruthTable:
    """Inverse of anf_of (the transform is an involution)."""
    dense = np.zeros(1 << a.n, dtype=np.uint8)
    for mono in a.monomials:
        dense[_mono_index(mono)] = 1
    return TruthTable(a.n, mobius_transform(dense))


def derivative(f: TruthTable, s: BitVector) -> TruthTable:
    """Discrete derivative x -> f(x ^ s) ^ f(x)."""
    if s.n != f.n:
        raise ValueError("dimension mismatch")
    return TruthTable(f.n, xor_permute(f.table, s.bits) ^ f.table)


def _coset_index(n: int, basis: Subspace) -> tuple[np.ndarray, int]:
    """Map every x to the index of its coset of the given subspace.

    Reduction by the RREF basis clears the pivot coordinates, leaving a
    canonical representative supported on the complement coordinates, which
    is then packed densely into 0..2**(n-dim)-1.
    """
    x = np.arange(1 << n, dtype=np.int64)
    rows = basis.basis.row_ints()
    for row in rows:
        pivot = (row & -row).bit_length() - 1
        hit = (x >> pivot) & 1 == 1
        x = np.where(hit, x ^ row, x)
    pivot_cols = {(r & -r).bit_length() - 1 for r in rows}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    packed = np.zeros(1 << n, dtype=np.int64)
    for j, c in enumerate(free_cols):
        packed |= ((x >> c) & 1) << j
    return packed, len(free_cols)


def _zero_structure_count(table: np.ndarray) -> int:
    """Number of words a with f constant on every coset of {0, a}."""
    signs = 1 - 2 * table.astype(np.int64)
    spectrum = walsh_hadamard(walsh_hadamard(signs) ** 2) >> int(np.log2(table.size))
    return int(np.count_nonzero(spectrum == table.size))


def plant_structure(spec: PlantSpec) -> TruthTable:
    """Random f whose zero-constant structure set is exactly the given span.

    f is constant on each coset of the requested span with independent
    uniform coset values, retried until no accidental extra structure
    survives (hard cap on retries).
    """
    rng = as_rng(spec.seed)
    idx, free = _coset_index(spec.n, spec.structure_basis)
    want = 1 << spec.structure_basis.dim
    for _ in range(PLANT_RETRY_CAP):
        values = rng.integers(0, 2, size=1 << free, dtype=np.uint8)
        table = values[idx]
        if _zero_structure_count(table) == want:
            return TruthTable(spec.n, table)
    raise RuntimeError(
        f"no clean planted instance after {PLANT_RETRY_CAP} attempts "
        f"(n={spec.n}, dim={spec.structure_basis.dim})"
    )


def plant_r_type(f: TruthTable, r: int, seed=None) -> TruthTable:
    """Flip f on exactly r distinct uniformly chosen inputs."""
    size = 1 << f.n
    if not 0 <= r <= size:
        raise ValueError(f"r must be in 0..{size}")
    rng = as_rng(seed)
    flips = rng.choice(size, size=r, replace=False)
    table = f.table.copy()
    table[flips] ^= 1
    return TruthTable(f.n, table)


def plant_periods(n: int, basis: Subspace, seed=None) -> MultiTruthTable:
    """(n-1)-output F constant on cosets of the span and injective across them.

    The period set {s : F(x ^ s) = F(x) for all x} then equals the span
    exactly.  A zero-dimensional span is rejected: there is no nonzero
    period to find.
    """
    _check_cap(n)
    if basis.n != n:
        raise ValueError("dimension mismatch")
    k = basis.dim
    if k < 1:
        raise ValueError("period span must have dimension >= 1")
    rng = as_rng(seed)
    idx, free = _coset_index(n, basis)
    m_out = n - 1
    # distinct output words make F injective on coset representatives
    words = rng.choice(1 << m_out, size=1 << free, replace=False)
    return MultiTruthTable(n, m_out, words.astype(np.int64)[idx])


# ---------------------------------------------------------------------------
# text formats

def format_truth_table(f: TruthTable) -> str:
    """Header line "n=<k>" then one line of 2**k characters, entry m first."""
    body = "".join(str(int(b)) for b in f.table)
    return f"n={f.n}\n{body}\n"


def parse_truth_table(text: str) -> TruthTable:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or not lines[0].startswith("n="):
        raise ValueError("truth table text must be a 'n=<k>' line plus one data line")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad dimension header {lines[0]!r}") from None
    _check_cap(n)
    body = lines[1]
    if len(body) != 1 << n or any(ch not in "01" for ch in body):
        raise ValueError(f"data line must be 2**{n} characters of 0/1")
    return TruthTable(n, [int(ch) for ch in body])


def format_multi_truth_table(F: MultiTruthTable) -> str:
    """Header line "n=<k>" then 2**k lines of m_out-bit words, bit 1 first."""
    lines = [f"n={F.n}"]
    for word in F.table:
        w = int(word)
        lines.append("".join("1" if (w >> i) & 1 else "0" for i in range(F.m_out)))
    return "\n".join(lines) + "\n"


def parse_multi_truth_table(text: str) -> MultiTruthTable:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("multi-output table text must start with a 'n=<k>' line")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad dimension header {lines[0]!r}") from None
    _check_cap(n)
    body = lines[1:]
    if len(body) != 1 << n:
        raise ValueError(f"expected 2**{n} data lines, got {len(body)}")
    m_out = len(body[0])
    words = []
    for ln in body:
        if len(ln) != m_out or any(ch not in "01" for ch in ln):
            raise ValueError(f"bad output word line {ln!r}")
        words.append(sum(1 << i for i, ch in enumerate(ln) if ch == "1"))
    return MultiTruthTable(n, m_out, words)


_VAR_RE = re.compile(r"^x(\d+)$")


def format_anf(a: Anf) -> str:
    """Monomials joined by ' + ', factors like 'x1*x2', constant term '1'."""
    if not a.monomials:
        return "0"
    ordered = sorted(a.monomials, key=lambda m: (-len(m), sorted(m)))
    parts = []
    for mono in ordered:
        parts.append("*".join(f"x{v}" for v in sorted(mono)) if mono else "1")
    return " + ".join(parts)


def parse_anf(text: str, n: int | None = None) -> Anf:
    """Parse 'x1*x2 + x3 + 1'; n defaults to the largest variable index."""
    text = text.strip()
    monos: set[frozenset[int]] = set()
    max_var = 0
    if text not in ("", "0"):
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError("empty monomial between '+' signs")
            if chunk == "1":
                term = frozenset()
            else:
                variables = []
                for factor in chunk.split("*"):
                    m = _VAR_RE.match(factor.strip())
                    if not m:
                        raise ValueError(f"bad monomial factor {factor.strip()!r}")
                    variables.append(int(m.group(1)))
                if any(v < 1 for v in variables):
                    raise ValueError("variable indices start at x1")
                term = frozenset(variables)
                max_var = max(max_var, max(variables))
            # repeated monomials cancel over GF(2)
            monos.symmetric_difference_update({term})
    if n is None:
        n = max(max_var, 1)
    return Anf(n, frozenset(monos))
