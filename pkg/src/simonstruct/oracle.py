"""Exhaustive ground truth for linear structures of a Boolean function.

A word a is a linear structure of f when f(x ^ a) ^ f(x) is the same
constant c for every x.  The c = 0 words form a subspace; the c = 1 words
are either empty or a single coset of it.  Both sets are read off the
autocorrelation spectrum, which hits +-2**n exactly on structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .boolfn import DEFAULT_N_CAP, MultiTruthTable, TruthTable, _check_cap
from .gf2 import BitMatrix, BitVector, SpanTracker, Subspace, _rref_ints
from .rng import as_rng
from .walsh import walsh_hadamard, xor_permute

__all__ = [
    "AutocorrSpectrum",
    "StructureSets",
    "RTypeHit",
    "VerifyResult",
    "autocorrelation",
    "brute_periods",
    "brute_structures",
    "r_type_scan",
    "violation_points",
    "sampled_verify",
    "anchored_confirm",
]


class AutocorrSpectrum:
    """Signed autocorrelation values, one per shift word, entry 0 = 2**n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        arr = np.array(values, dtype=np.int64)
        if arr.shape != (1 << n,):
            raise ValueError("spectrum must have 2**n entries")
        arr.flags.writeable = False
        self.n = n
        self.values = arr

    def __getitem__(self, alpha: BitVector | int) -> int:
        idx = alpha.bits if isinstance(alpha, BitVector) else int(alpha)
        return int(self.values[idx])


@dataclass(frozen=True)
class StructureSets:
    """Zero-constant structures as a subspace plus the one-constant coset."""

    u0: Subspace
    u1: tuple[BitVector, ...]


class RTypeHit(NamedTuple):
    alpha: BitVector
    c: int
    violations: int


class VerifyResult:
    """Outcome of a sampled check; truthy on acceptance, carries a witness."""

    __slots__ = ("ok", "witness")

    def __init__(self, ok: bool, witness: tuple[BitVector, BitVector] | None = None):
        self.ok = ok
        self.witness = witness

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"VerifyResult(ok={self.ok}, witness={self.witness})"


def autocorrelation(f: TruthTable, cap: int = DEFAULT_N_CAP) -> AutocorrSpectrum:
    """Autocorrelation spectrum in O(n * 2**n) via two transforms.

    Transform the +-1 image of f, square pointwise, transform back and
    rescale; integer arithmetic throughout, so the result is exact.
    """
    _check_cap(f.n, cap)
    signs = 1 - 2 * f.table.astype(np.int64)
    spectrum = walsh_hadamard(walsh_hadamard(signs) ** 2) >> f.n
    return AutocorrSpectrum(f.n, spectrum)


def _subspace_basis_from_members(members: np.ndarray, n: int) -> list[int]:
    """Basis of a subspace given as a sorted array of all member words.

    For a subspace sorted as integers, the elements at positions 2**j form
    a basis; verify by re-expanding, and fall back to an incremental scan
    if the fast pick ever disagrees.
    """
    count = len(members)
    if count == 0 or members[0] != 0 or count & (count - 1):
        raise RuntimeError("structure set is not closed under xor")
    dim = count.bit_length() - 1
    picks = [int(members[1 << j]) for j in range(dim)]
    span = np.zeros(1, dtype=np.int64)
    for b in picks:
        span = np.concatenate([span, span ^ b])
    span.sort()
    if np.array_equal(span, members):
        return picks
    tracker = SpanTracker(n)
    for m in members:
        tracker.add(int(m))
        if tracker.dim == dim:
            break
    basis = tracker.basis_ints()
    span = np.zeros(1, dtype=np.int64)
    for b in basis:
        span = np.concatenate([span, span ^ b])
    span.sort()
    if not np.array_equal(span, members):
        raise RuntimeError("structure set is not closed under xor")
    return basis


def brute_structures(f: TruthTable, cap: int = DEFAULT_N_CAP) -> StructureSets:
    """Exact structure sets read from the full autocorrelation spectrum."""
    spectrum = autocorrelation(f, cap)
    full = 1 << f.n
    u0_members = np.nonzero(spectrum.values == full)[0]
    basis = _subspace_basis_from_members(u0_members, f.n)
    u0 = Subspace(BitMatrix.from_ints(f.n, _rref_ints(basis, f.n)))
    u1_members = np.nonzero(spectrum.values == -full)[0]
    if len(u1_members):
        if len(u1_members) != len(u0_members):
            raise RuntimeError("one-constant set is not a coset of the subspace")
        shifted = np.sort(u1_members ^ u1_members[0])
        if not np.array_equal(shifted, u0_members):
            raise RuntimeError("one-constant set is not a coset of the subspace")
    u1 = tuple(BitVector(f.n, int(m)) for m in u1_members)
    return StructureSets(u0=u0, u1=u1)


def brute_periods(F: MultiTruthTable, cap: int = DEFAULT_N_CAP) -> Subspace:
    """Exact period span of a multi-output function.

    A shift fixes F everywhere iff it is a zero-constant structure of
    every output bit, so the period set is the intersection of the
    per-bit structure subspaces, read off their spectra.
    """
    _check_cap(F.n, cap)
    size = 1 << F.n
    mask = np.ones(size, dtype=bool)
    for j in range(F.m_out):
        signs = 1 - 2 * ((F.table >> j) & 1)
        spectrum = walsh_hadamard(walsh_hadamard(signs) ** 2) >> F.n
        mask &= spectrum == size
    members = np.nonzero(mask)[0]
    basis = _subspace_basis_from_members(members, F.n)
    return Subspace(BitMatrix.from_ints(F.n, _rref_ints(basis, F.n)))


def r_type_scan(f: TruthTable, r: int, cap: int = DEFAULT_N_CAP) -> list[RTypeHit]:
    """All shifts whose derivative is within r inputs of being constant.

    The violation count of a shift is minimized over the two candidate
    constants; ties (spectrum value 0) report c = 0.  r = 0 returns exactly
    the linear structures, and r = 2**(n-1) returns every shift.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    spectrum = autocorrelation(f, cap)
    full = 1 << f.n
    v0 = (full - spectrum.values) >> 1
    v1 = (full + spectrum.values) >> 1
    best = np.minimum(v0, v1)
    hits = []
    for idx in np.nonzero(best <= r)[0]:
        i = int(idx)
        c = 0 if v0[i] <= v1[i] else 1
        hits.append(RTypeHit(BitVector(f.n, i), c, int(best[i])))
    return hits


def violation_points(f: TruthTable, alpha: BitVector, c: int) -> list[BitVector]:
    """Inputs where f(x ^ alpha) ^ f(x) differs from c."""
    if alpha.n != f.n:
        raise ValueError("dimension mismatch")
    if c not in (0, 1):
        raise ValueError("c must be 0 or 1")
    der = xor_permute(f.table, alpha.bits) ^ f.table
    return [BitVector(f.n, int(x)) for x in np.nonzero(der != c)[0]]


def sampled_verify(
    f: TruthTable,
    candidates: Sequence[BitVector],
    p: int,
    seed=None,
) -> VerifyResult:
    """Check f(x) = f(x ^ b) at p uniform x per candidate b.

    Accepts only if every check passes; the first failing (x, b) pair is
    returned as a witness.  For a shift whose derivative has v nonzero
    inputs the acceptance chance is exactly (1 - v/2**n)**p.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    rng = as_rng(seed)
    size = 1 << f.n
    table = f.table
    for b in candidates:
        if b.n != f.n:
            raise ValueError("dimension mismatch")
        xs = rng.integers(0, size, size=p)
        bad = np.nonzero(table[xs] != table[xs ^ b.bits])[0]
        if len(bad):
            x = BitVector(f.n, int(xs[bad[0]]))
            return VerifyResult(False, (x, b))
    return VerifyResult(True)


def anchored_confirm(
    f: TruthTable,
    alpha: BitVector,
    l: int,
    p: int,
    seed=None,
) -> bool:
    """Confirmation experiment with l fixed offsets plus the zero offset.

    Draw l distinct nonzero anchor words once, then p uniform x; the shift
    alpha is confirmed when f(x ^ a) = f(x ^ a ^ alpha) holds at all
    (l + 1) * p probed points.  For an r-type shift with v violating inputs
    the confirmation chance is close to (1 - v/2**n)**((l+1)*p).
    """
    if alpha.n != f.n:
        raise ValueError("dimension mismatch")
    if l < 0 or p < 1:
        raise ValueError("need l >= 0 and p >= 1")
    rng = as_rng(seed)
    size = 1 << f.n
    if l > size - 1:
        raise ValueError("cannot draw that many distinct nonzero anchors")
    anchors = np.zeros(l + 1, dtype=np.int64)
    if l:
        anchors[1:] = rng.choice(size - 1, size=l, replace=False) + 1
    xs = rng.integers(0, size, size=p)
    points = xs[:, None] ^ anchors[None, :]
    return bool(np.all(f.table[points] == f.table[points ^ alpha.bits]))
