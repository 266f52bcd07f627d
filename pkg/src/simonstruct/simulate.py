"""Exact simulation of the measure-then-transform sampling routine.

One round prepares a uniform superposition, queries f at a set of anchor
offsets, measures the output register, and measures the input register in
the transformed basis.  Classically that is: draw a uniform witness m,
keep the set S of inputs agreeing with m on every probed offset, and draw
y with probability |sum over x in S of (-1)^(x.y)|^2 / (|S| * 2**n).

Every y drawn this way is orthogonal to each zero-constant structure of f,
because S is closed under shifting by such a structure and the paired
terms cancel exactly.  All weights are integers, so the support is exact
and sampling needs no floating-point tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolfn import DEFAULT_N_CAP, MultiTruthTable, TruthTable
from .gf2 import BitMatrix, BitVector, SpanTracker, Subspace, null_space_basis
from .rng import as_rng
from .walsh import parity, walsh_hadamard

__all__ = [
    "CollapseOutcome",
    "YDistribution",
    "collapse",
    "y_distribution",
    "sample_y",
    "simon_round",
    "quantum_solve",
]


class CollapseOutcome:
    """Post-measurement state: constraints, observed word, surviving inputs."""

    __slots__ = ("n", "anchors", "observed", "mask", "size", "_weights", "_cumulative")

    def __init__(
        self,
        n: int,
        anchors: tuple[BitVector, ...],
        observed: tuple[int, ...],
        mask: np.ndarray,
    ):
        self.n = n
        self.anchors = anchors
        self.observed = observed
        mask = np.asarray(mask, dtype=np.uint8)
        mask.flags.writeable = False
        self.mask = mask
        self.size = int(mask.sum())
        self._weights = None
        self._cumulative = None

    def members(self) -> list[BitVector]:
        return [BitVector(self.n, int(x)) for x in np.nonzero(self.mask)[0]]

    def weights(self) -> np.ndarray:
        """Unnormalized integer sampling weights for y (squared transform)."""
        if self._weights is None:
            w = walsh_hadamard(self.mask.astype(np.int64))
            w *= w
            w.flags.writeable = False
            self._weights = w
        return self._weights


@dataclass(frozen=True)
class YDistribution:
    """Exact output-law of one sampling round; probs indexed by packed y."""

    n: int
    probs: np.ndarray

    def __getitem__(self, y: BitVector | int) -> float:
        idx = y.bits if isinstance(y, BitVector) else int(y)
        return float(self.probs[idx])


def collapse(f: TruthTable, anchors: Sequence[BitVector], seed=None) -> CollapseOutcome:
    """Measure the output register over offsets (0, a_1, ..., a_l).

    The zero offset is implicit and always probed first.  Drawing the
    witness m uniformly reproduces the exact measurement statistics: an
    output word is seen with probability |S|/2**n and, given the word, the
    surviving set is S itself.
    """
    anchors = tuple(anchors)
    for a in anchors:
        if a.n != f.n:
            raise ValueError("dimension mismatch")
    rng = as_rng(seed)
    size = 1 << f.n
    m = int(rng.integers(0, size))
    offsets = [0] + [a.bits for a in anchors]
    observed = []
    mask = np.ones(size, dtype=np.uint8)
    idx = np.arange(size)
    for off in offsets:
        value = int(f.table[m ^ off])
        observed.append(value)
        mask &= f.table[idx ^ off] == value
    return CollapseOutcome(f.n, anchors, tuple(observed), mask)


def _collapse_by_value(F: MultiTruthTable, seed=None) -> CollapseOutcome:
    rng = as_rng(seed)
    size = 1 << F.n
    m = int(rng.integers(0, size))
    value = int(F.table[m])
    mask = (F.table == value).astype(np.uint8)
    return CollapseOutcome(F.n, (), (value,), mask)


def y_distribution(outcome: CollapseOutcome) -> YDistribution:
    """Exact law of y; probabilities sum to 1 up to float rounding."""
    weights = outcome.weights()
    probs = weights / float(outcome.size << outcome.n)
    probs.flags.writeable = False
    return YDistribution(outcome.n, probs)


def _draw_from_weights(outcome: CollapseOutcome, rng: np.random.Generator) -> BitVector:
    if outcome._cumulative is None:
        outcome._cumulative = np.cumsum(outcome.weights())
    total = int(outcome.size) << outcome.n
    t = int(rng.integers(0, total))
    idx = int(np.searchsorted(outcome._cumulative, t, side="right"))
    return BitVector(outcome.n, idx)


def sample_y(outcome: CollapseOutcome, seed=None) -> BitVector:
    """One y draw from the exact integer-weight law of the outcome."""
    return _draw_from_weights(outcome, as_rng(seed))


def simon_round(F: MultiTruthTable, seed=None) -> BitVector:
    """One full period-finding round against a multi-output function."""
    rng = as_rng(seed)
    outcome = _collapse_by_value(F, rng)
    return _draw_from_weights(outcome, rng)


def quantum_solve(
    ys: BitMatrix,
    seed=None,
    samples: int | None = None,
    direct: bool = False,
    cap: int = DEFAULT_N_CAP,
) -> Subspace:
    """Span of repeated uniform draws from {z : y . z = 0 for every y}.

    Mimics solving the linear system by sampling the solution set instead
    of eliminating: each draw is uniform over the null space, and draws
    accumulate until their span can no longer grow or the sample budget is
    spent.  With rank r and d = n - r, all of the null space is spanned
    after d + t draws except with probability about 2**-t.

    direct=True rescans all 2**n words for the orthogonality condition and
    draws from that explicit support; it is a cross-check path and costs
    O(rows * 2**n) once.
    """
    n = ys.n
    if samples is None:
        samples = n + 30
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = as_rng(seed)
    target = null_space_basis(ys)
    tracker = SpanTracker(n)
    if direct:
        if n > cap:
            raise ValueError(f"dimension {n} exceeds table cap {cap} for direct sampling")
        words = np.arange(1 << n, dtype=np.int64)
        keep = np.ones(1 << n, dtype=bool)
        for row in ys.row_ints():
            keep &= parity(words & row) == 0
        support = words[keep]
        for _ in range(samples):
            z = int(support[rng.integers(0, len(support))])
            tracker.add(z)
            if tracker.dim == target.dim:
                break
    else:
        basis = target.basis.row_ints()
        d = len(basis)
        for _ in range(samples):
            coeff = int(rng.integers(0, 1 << d)) if d else 0
            z = 0
            for j in range(d):
                if (coeff >> j) & 1:
                    z ^= basis[j]
            tracker.add(z)
            if tracker.dim == d:
                break
    return Subspace(BitMatrix.from_ints(n, tracker.basis_ints()))
