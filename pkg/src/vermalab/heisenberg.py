"""Point counting for the commuting variety of a Heisenberg algebra.

Tuples (v_0, .., v_{r-1}) in the 2r+1 dimensional Heisenberg Lie
algebra commute exactly when the 2 x r matrix collecting their two
non-central coordinate rows has all 2 x 2 minors zero, so the count
over F_q is q^r (free central coordinates) times the number of rank
at most one coordinate matrices.  The enumeration here checks the
minors directly; the closed form is kept separate so the two can be
played against each other in tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .gf import GF, is_prime

ENUMERATION_BUDGET = 10**9


class BudgetExceeded(ValueError):
    """Raised when the (x, y)-enumeration would be too large."""


@dataclass(frozen=True)
class PointCount:
    q: int
    r: int
    count: int

    def __post_init__(self):
        assert self.q**self.r <= self.count <= self.q ** (3 * self.r)

    def to_json_dict(self) -> dict:
        return {"q": self.q, "count": self.count}


def _field_for(q: int) -> GF:
    if is_prime(q):
        return GF(q)
    root = math.isqrt(q)
    if root * root == q and root > 2 and is_prime(root):
        return GF(root, 2)
    raise ValueError(f"q = {q} must be a prime or the square of an odd prime")


def count_points(r: int, q: int) -> PointCount:
    """Exact point count of the commuting variety over F_q.

    Enumerates the q^{2r} pairs (x, y) of coordinate vectors, keeps
    those with every minor x_i y_j - x_j y_i equal to zero, and scales
    by q^r for the central coordinates.
    """
    if r < 1:
        raise ValueError(f"r = {r} must be at least 1")
    f = _field_for(q)
    if q ** (2 * r) > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"enumerating q^(2r) = {q**(2*r)} pairs exceeds the {ENUMERATION_BUDGET} budget"
        )
    vectors = np.array(list(product(range(q), repeat=r)), dtype=np.int64)
    good = 0
    for x in vectors:
        commuting = np.ones(len(vectors), dtype=bool)
        for i in range(r):
            for j in range(i + 1, r):
                minor = f.sub(
                    f.mul(int(x[i]), vectors[:, j]), f.mul(int(x[j]), vectors[:, i])
                )
                commuting &= minor == 0
        good += int(commuting.sum())
    return PointCount(q=q, r=r, count=q**r * good)


def closed_form(r: int, q: int) -> int:
    """q^r (1 + (q+1)(q^r - 1)): central factor times rank-at-most-one count."""
    return q**r * (1 + (q + 1) * (q**r - 1))


@dataclass
class DimensionFit:
    """Least-squares slope of log(count) against log(q) with its residual.

    Counting over a few small fields cannot prove a dimension; the
    report states the evidence and whether the slope lands within the
    stated tolerance of the target 2r + 1.
    """

    r: int
    counts: list[PointCount]
    slope: float
    residual: float
    target: int
    tol: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "counts": [c.to_json_dict() for c in self.counts],
            "slope": self.slope,
            "residual": self.residual,
            "target": self.target,
            "tol": self.tol,
            "pass": self.passed,
        }


def dimension_fit(r: int, q_list, tol: float = 0.5) -> DimensionFit:
    qs = sorted(set(q_list))
    if len(qs) < 2:
        raise ValueError("dimension fit needs at least two distinct field sizes")
    counts = [count_points(r, q) for q in qs]
    xs = [math.log(q) for q in qs]
    ys = [math.log(c.count) for c in counts]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    residual = math.sqrt(
        sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys)) / len(xs)
    )
    target = 2 * r + 1
    return DimensionFit(
        r=r,
        counts=counts,
        slope=slope,
        residual=residual,
        target=target,
        tol=tol,
        passed=abs(slope - target) <= tol,
    )
