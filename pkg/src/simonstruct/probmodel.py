"""Success-probability model for random vector collection over GF(2).

Answers the question "after k uniform draws from F_2^n, how likely is a
full-rank collection?" with exact dyadic-rational arithmetic, plus the
confirmation statistics for pseudo structures: how often a structure that
fails on r points survives repeated random checking, and how many trials
are needed to push the false-confirmation rate below a target.

Two independent routes compute the excess-draw factor q(n, i): a memoized
recurrence and a brute-force sum over integer compositions.  They must
agree exactly; tests hold them to that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .gf2 import _rank_ints
from .rng import as_rng

# brute-force composition enumeration blows up past these
DIRECT_N_CAP = 8
DIRECT_I_CAP = 12


def p_full_exact(n: int) -> Fraction:
    """Exact probability that n uniform vectors from F_2^n are independent.

    Equals the product of (1 - 2^-i) for i = 1..n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= 1 - Fraction(1, 1 << i)
    return out


def p_full(n: int) -> float:
    """Float view of :func:`p_full_exact`."""
    return float(p_full_exact(n))


@lru_cache(maxsize=None)
def q_exact(n: int, i: int) -> Fraction:
    """Excess-draw factor by recurrence, exact.

    q(n, i) = sum over m = 0..i of 2^-m * q(n-1, m), with the closed base
    q(1, i) = 2 - 2^-i.  Memoized, so concurrent readers see consistent
    values.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if n == 1:
        return 2 - Fraction(1, 1 << i)
    return sum(
        Fraction(1, 1 << m) * q_exact(n - 1, m) for m in range(i + 1)
    )


def q(n: int, i: int) -> float:
    """Float view of :func:`q_exact`."""
    return float(q_exact(n, i))


def _direct_check_caps(n: int, i: int) -> None:
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if n > DIRECT_N_CAP or i > DIRECT_I_CAP:
        raise ValueError(
            f"brute-force route capped at n <= {DIRECT_N_CAP}, "
            f"i <= {DIRECT_I_CAP}"
        )


def q_direct(n: int, i: int) -> Fraction:
    """Excess-draw factor by brute force, exact.

    Sums 2^-(sum_j (n-j)*x_j) over every composition x_0 + ... + x_n = i
    of nonnegative integers.  The last coordinate carries weight zero, so
    it is pinned to the remainder rather than looped.  Independent of the
    recurrence route; used to validate it.
    """
    _direct_check_caps(n, i)
    # bucket compositions by total exponent, one Fraction sum at the end
    counts = [0] * (n * i + 1)

    def descend(j: int, rem: int, t: int) -> None:
        if j == n:
            counts[t] += 1
            return
        w = n - j
        for x in range(rem + 1):
            descend(j + 1, rem - x, t + w * x)

    descend(0, i, 0)
    return sum(Fraction(c, 1 << t) for t, c in enumerate(counts) if c)


def q_direct_row(n: int, i_max: int) -> list[Fraction]:
    """Brute-force q(n, i) for every i = 0..i_max in one enumeration.

    The weight-zero last coordinate means a composition's summand depends
    only on x_0..x_{n-1}; each prefix with sum p contributes the same term
    to every total i >= p.  One sweep over prefixes therefore yields the
    whole row, where calling :func:`q_direct` per entry would redo the
    enumeration i_max + 1 times.
    """
    _direct_check_caps(n, i_max)
    # counts[p][t]: prefixes x_0..x_{n-1} with sum p and exponent t
    counts = [[0] * (n * i_max + 1) for _ in range(i_max + 1)]

    def descend(j: int, used: int, t: int) -> None:
        if j == n:
            counts[used][t] += 1
            return
        w = n - j
        for x in range(i_max - used + 1):
            descend(j + 1, used + x, t + w * x)

    descend(0, 0, 0)
    row: list[Fraction] = []
    acc = [0] * (n * i_max + 1)
    for p in range(i_max + 1):
        for t, c in enumerate(counts[p]):
            acc[t] += c
        row.append(sum(Fraction(c, 1 << t) for t, c in enumerate(acc) if c))
    return row


def success_prob_exact(n: int, k: int) -> Fraction:
    """Exact probability that k uniform vectors from F_2^n span it."""
    if k < n:
        raise ValueError("need k >= n draws to reach full rank")
    return p_full_exact(n) * q_exact(n, k - n)


def success_prob(n: int, k: int) -> float:
    """Float view of :func:`success_prob_exact`."""
    return float(success_prob_exact(n, k))


def _log2_fraction(x: Fraction) -> float:
    """log2 of a positive rational, safe far below the float range."""
    if x <= 0:
        raise ValueError("need a positive value")
    shift = x.denominator.bit_length() - x.numerator.bit_length()
    scaled = x * (1 << shift) if shift >= 0 else x / (1 << -shift)
    return math.log2(float(scaled)) - shift


@dataclass(frozen=True)
class ProbTable:
    """Success probabilities s(n, k) and log2 failure h(n, k) per k."""

    n: int
    rows: tuple[tuple[int, float, float], ...]

    def csv_lines(self) -> list[str]:
        lines = ["n,k,s,h"]
        for k, s_val, h_val in self.rows:
            lines.append(f"{self.n},{k},{s_val!r},{h_val!r}")
        return lines


def prob_table(n: int, k_max: int) -> ProbTable:
    """Tabulate success and log-failure probabilities for k = n..k_max."""
    if k_max < n:
        raise ValueError("k_max must be at least n")
    rows = []
    for k in range(n, k_max + 1):
        s_val = success_prob_exact(n, k)
        h_val = _log2_fraction(1 - s_val)
        rows.append((k, float(s_val), h_val))
    return ProbTable(n=n, rows=tuple(rows))


def pseudo_confirm_prob(n: int, r: int, l: int, p: int) -> float:
    """Chance that a structure violated on r points survives checking.

    Each of p trials tests l + 1 aligned points; all must miss the r bad
    inputs, which happens with probability (1 - r/2^n)^((l+1)*p).
    """
    size = 1 << n
    if not 0 <= r <= size:
        raise ValueError("violation count must lie in [0, 2^n]")
    if l < 1 or p < 1:
        raise ValueError("need l >= 1 and p >= 1")
    return (1.0 - r / size) ** ((l + 1) * p)


class TrialsBound(NamedTuple):
    """Trial-count bound with its two-sided closed-form sandwich."""

    bound: float
    lower: float
    upper: float


def required_trials(n: int, r: int, l: int, beta: float) -> TrialsBound:
    """Trials needed to drive false confirmation below 2^(-beta*n).

    Solves pseudo_confirm_prob(n, r, l, p) <= 2^(-beta*n) for p, giving
    beta*n / ((l+1) * -log2(1 - r/2^n)).  For r below 2^(n-1) the bound is
    sandwiched between (beta*n*ln2/(l+1)) * (2^n/r) * 1/2 and the same
    expression without the half: the trial count scales like 2^n / r.
    """
    if not 0 < r < (1 << (n - 1)):
        raise ValueError("violation count must lie in (0, 2^(n-1))")
    if l < 1 or beta <= 0:
        raise ValueError("need l >= 1 and beta > 0")
    x = r / (1 << n)
    neg_log2 = -math.log1p(-x) / math.log(2)
    bound = beta * n / ((l + 1) * neg_log2)
    upper = beta * n * math.log(2) / (l + 1) * ((1 << n) / r)
    return TrialsBound(bound=bound, lower=upper / 2, upper=upper)


def rank_success_rate(
    n: int, k: int, trials: int, seed: int | np.random.Generator | None = None
) -> float:
    """Measured fraction of k-draw batches reaching full rank.

    Monte Carlo bridge for :func:`success_prob`: draws k uniform vectors
    from F_2^n per trial and checks their span.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = as_rng(seed)
    draws = rng.integers(0, 1 << n, size=(trials, k), dtype=np.int64)
    hits = 0
    for row in draws:
        if _rank_ints(int(v) for v in row) == n:
            hits += 1
    return hits / trials
