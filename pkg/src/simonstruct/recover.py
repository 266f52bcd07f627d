"""Structure and period recovery from repeated sampling rounds.

Two recovery strategies share the sampling core.  The simple variant fixes
a full set of linearly independent anchors and keeps sampling until the
collected ys stop gaining rank; the candidate structure span is the null
space of the ys.  The iterative variant repeats that as independent passes
with fresh, growing anchor sets and stops when consecutive passes agree on
the span.  Both verify the candidate basis against f by random probing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boolfn import MultiTruthTable, TruthTable
from .gf2 import BitMatrix, BitVector, SpanTracker, Subspace, null_space_basis, span_equal
from .oracle import VerifyResult, brute_structures, sampled_verify
from .rng import as_rng
from .simulate import _collapse_by_value, _draw_from_weights, collapse

__all__ = [
    "RunConfig",
    "StructureReport",
    "PeriodReport",
    "find_periods",
    "find_structure_simple",
    "find_structure_iterative",
]


@dataclass(frozen=True)
class RunConfig:
    """Tuning knobs; None fields resolve to defaults that scale with n.

    rounds_cap       hard budget: sampling rounds per pass, and passes for
                     the iterative variant (default 8n)
    stabilize_window consecutive agreeing pass spans required to stop the
                     iterative variant (default 3)
    rank_window      consecutive rounds without rank growth required to end
                     a sampling pass (default 12; each stalled round halves
                     the chance that a missing dimension is still out there)
    verify_p         probes per candidate basis vector (default max(64, 4n))
    anchor_count     anchors in the first pass (default n)
    anchor_growth    extra anchors per iterative pass (default ceil(n/2))
    seed             master seed for every random draw of the run
    """

    rounds_cap: int | None = None
    stabilize_window: int = 3
    rank_window: int | None = None
    verify_p: int | None = None
    anchor_count: int | None = None
    anchor_growth: int | None = None
    seed: int | None = None

    def resolved(self, n: int) -> "_Resolved":
        rounds_cap = 8 * n if self.rounds_cap is None else self.rounds_cap
        rank_window = 12 if self.rank_window is None else self.rank_window
        verify_p = max(64, 4 * n) if self.verify_p is None else self.verify_p
        anchor_count = n if self.anchor_count is None else self.anchor_count
        anchor_growth = math.ceil(n / 2) if self.anchor_growth is None else self.anchor_growth
        if min(rounds_cap, rank_window, verify_p, anchor_count) < 1 or anchor_growth < 1:
            raise ValueError("all resolved config values must be positive")
        if self.stabilize_window < 1:
            raise ValueError("stabilize_window must be positive")
        return _Resolved(
            rounds_cap, self.stabilize_window, rank_window, verify_p, anchor_count, anchor_growth
        )


@dataclass(frozen=True)
class _Resolved:
    rounds_cap: int
    stabilize_window: int
    rank_window: int
    verify_p: int
    anchor_count: int
    anchor_growth: int


@dataclass(frozen=True)
class StructureReport:
    """Result of one structure-recovery run."""

    candidate: Subspace
    verified: bool
    rounds_used: int
    ys_collected: BitMatrix
    pseudo_flag: bool
    stabilized: bool
    oracle_checked: bool
    witness: tuple[BitVector, BitVector] | None = None


@dataclass(frozen=True)
class PeriodReport:
    """Result of one period-recovery run; stabilized=False means the round
    budget ran out while the rank could still have been growing."""

    span: Subspace
    rounds_used: int
    stabilized: bool
    ys_collected: BitMatrix


def _independent_anchors(n: int, count: int, rng) -> list[BitVector]:
    if count > n:
        raise ValueError("cannot draw more independent anchors than the dimension")
    tracker = SpanTracker(n)
    anchors: list[BitVector] = []
    while len(anchors) < count:
        v = int(rng.integers(0, 1 << n))
        if tracker.add(v):
            anchors.append(BitVector(n, v))
    return anchors


def _sampling_pass(draw_y, n: int, res: _Resolved) -> tuple[list[BitVector], bool, int]:
    """Collect ys until the rank stalls for rank_window rounds or the cap hits.

    Returns (ys, stabilized, rounds).  stabilized is False only when the cap
    ended the pass while the last round still grew the rank recently.
    """
    tracker = SpanTracker(n)
    ys: list[BitVector] = []
    stall = 0
    rounds = 0
    stabilized = False
    while rounds < res.rounds_cap:
        y = draw_y()
        rounds += 1
        ys.append(y)
        if tracker.add(y.bits):
            stall = 0
        else:
            stall += 1
        if tracker.dim == n or stall >= res.rank_window:
            stabilized = True
            break
    return ys, stabilized, rounds


def find_periods(F: MultiTruthTable, cfg: RunConfig | None = None) -> PeriodReport:
    """Recover the period span of a multi-output function by sampling."""
    cfg = cfg or RunConfig()
    res = cfg.resolved(F.n)
    rng = as_rng(cfg.seed)

    def draw():
        outcome = _collapse_by_value(F, rng)
        return _draw_from_weights(outcome, rng)

    ys, stabilized, rounds = _sampling_pass(draw, F.n, res)
    span = null_space_basis(BitMatrix(F.n, tuple(ys)))
    return PeriodReport(span, rounds, stabilized, BitMatrix(F.n, tuple(ys)))


def _verdict(
    f: TruthTable,
    candidate: Subspace,
    res: _Resolved,
    rng,
    oracle_check: bool,
) -> tuple[bool, bool, tuple | None]:
    check: VerifyResult = sampled_verify(f, candidate.basis.rows, res.verify_p, rng)
    pseudo = False
    if oracle_check:
        truth = brute_structures(f).u0
        pseudo = bool(check) and not span_equal(candidate, truth)
    return bool(check), pseudo, check.witness


def find_structure_simple(
    f: TruthTable,
    cfg: RunConfig | None = None,
    oracle_check: bool = False,
) -> StructureReport:
    """One-pass recovery with a fixed independent anchor set."""
    cfg = cfg or RunConfig()
    n = f.n
    res = cfg.resolved(n)
    rng = as_rng(cfg.seed)
    anchors = _independent_anchors(n, min(res.anchor_count, n), rng)

    def draw():
        outcome = collapse(f, anchors, rng)
        return _draw_from_weights(outcome, rng)

    ys, stabilized, rounds = _sampling_pass(draw, n, res)
    mat = BitMatrix(n, tuple(ys))
    candidate = null_space_basis(mat)
    verified, pseudo, witness = _verdict(f, candidate, res, rng, oracle_check)
    return StructureReport(
        candidate, verified, rounds, mat, pseudo, stabilized, oracle_check, witness
    )


def find_structure_iterative(
    f: TruthTable,
    cfg: RunConfig | None = None,
    oracle_check: bool = False,
) -> StructureReport:
    """Independent passes with fresh growing anchor sets until spans agree.

    Anchors here are unconstrained uniform words.  A pass that went wrong
    almost surely disagrees with its neighbors, so demanding
    stabilize_window consecutive identical spans filters stray passes out.
    """
    cfg = cfg or RunConfig()
    n = f.n
    res = cfg.resolved(n)
    rng = as_rng(cfg.seed)
    anchor_count = max(n, res.anchor_count)
    spans: list[Subspace] = []
    all_rounds = 0
    last_ys = BitMatrix(n, ())
    stabilized = False
    passes = 0
    while passes < res.rounds_cap:
        anchors = [BitVector(n, int(rng.integers(0, 1 << n))) for _ in range(anchor_count)]

        def draw():
            outcome = collapse(f, anchors, rng)
            return _draw_from_weights(outcome, rng)

        ys, _, rounds = _sampling_pass(draw, n, res)
        all_rounds += rounds
        last_ys = BitMatrix(n, tuple(ys))
        spans.append(null_space_basis(last_ys))
        passes += 1
        anchor_count += res.anchor_growth
        w = res.stabilize_window
        if len(spans) >= w and all(span_equal(spans[-1], s) for s in spans[-w:]):
            stabilized = True
            break
    candidate = spans[-1]
    verified, pseudo, witness = _verdict(f, candidate, res, rng, oracle_check)
    return StructureReport(
        candidate, verified, all_rounds, last_ys, pseudo, stabilized, oracle_check, witness
    )
