"""The positivity threshold invariant of an HN type.

For a type with pieces (r_i, d_i), slopes mu_i = d_i / r_i, and a quotient
dimension r, the invariant is

    theta = min { sum_i a_i * mu_i : 0 <= a_i <= r_i, sum_i a_i = r }.

Because the slopes strictly decrease, the minimum is attained by filling from
the bottom of the filtration: take the last pieces whole and a partial block
of size s from the threshold piece t, which gives the closed form

    theta = s * mu_t + (degree of everything below piece t).

:func:`theta` evaluates the closed form with its full breakdown;
:func:`theta_oracle` recomputes the minimum by exhaustive enumeration and is
kept deliberately independent so the two can cross-check each other.
:func:`enumerate_va` lists the rank/degree bookkeeping of every block of the
induced filtration on the r-th exterior power (whose minimal slope is theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import QuotientRankOutOfRangeError
from .hn import CHAR_ZERO, FieldContext, HNType


@dataclass(frozen=True)
class ThetaBreakdown:
    """Full record of one invariant evaluation.

    ``t`` is the 1-based threshold index, ``tail_rank``/``tail_degree`` sum
    the pieces strictly below it, ``s = r - tail_rank`` is the partial block
    taken from piece t, and ``theta = s * mu_t + tail_degree``.
    """

    r: int
    t: int
    tail_rank: int
    tail_degree: int
    s: int
    mu_t: Fraction
    theta: Fraction


@dataclass(frozen=True)
class VaBundle:
    """Exact rank and degree of one tensor-of-exterior-powers block.

    ``composition`` records how many exterior factors come from each graded
    piece; ``rank`` is the product of binomials, ``slope_sum`` the weighted
    slope sum, and ``degree = rank * slope_sum`` (always an integer).
    """

    composition: tuple[int, ...]
    rank: int
    degree: int
    slope_sum: Fraction


def _require_quotient_rank(h: HNType, r: int) -> None:
    if not isinstance(r, int):
        raise TypeError("quotient dimension r must be an integer")
    if r < 1 or r >= h.rank:
        raise QuotientRankOutOfRangeError(
            f"quotient dimension must satisfy 1 <= r <= {h.rank - 1}, got {r}"
        )


def threshold_index(h: HNType, r: int) -> int:
    """Largest 1-based index t such that r_t + ... + r_d >= r."""
    _require_quotient_rank(h, r)
    tail = 0
    for t in range(len(h.pieces), 0, -1):
        tail += h.pieces[t - 1].rank
        if tail >= r:
            return t
    raise AssertionError("unreachable: the full rank always covers r")


def theta(h: HNType, r: int, ctx: FieldContext = CHAR_ZERO) -> ThetaBreakdown:
    """Evaluate the invariant with its full breakdown.

    ``ctx`` is declarative: it records whose HN type ``h`` is (in positive
    characteristic the caller passes the Frobenius-stabilized type).  It does
    not change the arithmetic, only how downstream cone computations are
    normalized.
    """
    t = threshold_index(h, r)
    below = h.pieces[t:]
    tail_rank = sum(p.rank for p in below)
    tail_degree = sum(p.degree for p in below)
    s = r - tail_rank
    mu_t = h.pieces[t - 1].slope
    return ThetaBreakdown(
        r=r,
        t=t,
        tail_rank=tail_rank,
        tail_degree=tail_degree,
        s=s,
        mu_t=mu_t,
        theta=s * mu_t + tail_degree,
    )


def _bounded_compositions(caps: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
    """All tuples a with 0 <= a_i <= caps[i] and sum(a) == total,
    lexicographically increasing.  Infeasible branches are pruned, so every
    yielded tuple is valid and nothing is materialized."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest = caps[1:]
    rest_cap = sum(rest)
    lo = max(0, total - rest_cap)
    hi = min(caps[0], total)
    for first in range(lo, hi + 1):
        for tail in _bounded_compositions(rest, total - first):
            yield (first,) + tail


def _slope_weights(h: HNType) -> tuple[tuple[int, ...], int]:
    """Per-piece slope numerators over a common denominator:
    slope_i = weights[i] / den.  Keeps the hot loops in integer arithmetic."""
    den = math.lcm(*(p.rank for p in h.pieces))
    return tuple(p.degree * (den // p.rank) for p in h.pieces), den


def enumerate_va(h: HNType, r: int) -> list[VaBundle]:
    """All exterior-power blocks for quotient dimension r, one per
    composition, in lexicographic order of the composition."""
    _require_quotient_rank(h, r)
    ranks = h.ranks
    weights, den = _slope_weights(h)
    out: list[VaBundle] = []
    for a in _bounded_compositions(ranks, r):
        rank = math.prod(math.comb(cap, ai) for cap, ai in zip(ranks, a))
        num = sum(ai * w for ai, w in zip(a, weights))
        total = rank * num
        if total % den:
            raise AssertionError("exterior-power degree must be an integer")
        out.append(
            VaBundle(
                composition=a,
                rank=rank,
                degree=total // den,
                slope_sum=Fraction(num, den),
            )
        )
    return out


def theta_oracle(h: HNType, r: int) -> Fraction:
    """Brute-force minimum of slope sums over every composition.

    Streams the exhaustive enumeration (only the running minimum is kept) and
    shares no logic with the closed form in :func:`theta`; the two are meant
    to check each other.  Deterministic and exact.
    """
    _require_quotient_rank(h, r)
    weights, den = _slope_weights(h)
    caps = h.ranks
    last = len(caps) - 1
    # suffix_caps[i] = caps[i+1] + ... + caps[last]
    suffix_caps = [0] * (last + 1)
    for i in range(last - 1, -1, -1):
        suffix_caps[i] = suffix_caps[i + 1] + caps[i + 1]

    def scan(i: int, remaining: int) -> int:
        if i == last:
            return remaining * weights[i]
        best = None
        lo = max(0, remaining - suffix_caps[i])
        hi = min(caps[i], remaining)
        for a in range(lo, hi + 1):
            value = a * weights[i] + scan(i + 1, remaining - a)
            if best is None or value < best:
                best = value
        return best

    return Fraction(scan(0, r), den)
