"""Necessary conditions for 2-factorizability: trace and finite-quotient tests.

If g is a product of two positive Dehn twists in SL(2,Z), its trace is
2 - w^2 for the wedge product w of the twist vectors; working in PSL one
checks 2 - t and 2 + t.  The finite-quotient test reduces mod n and
counts solutions x1 * x2 = lift(g) with x1, x2 in the conjugacy class of
R in SL(2,Z_n); the Frobenius character sum computes the same count, and
only its positivity is used, so we count directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetError, DomainError
from .psl2 import GroupElement

__all__ = ["QuotientReport", "trace_test", "finite_quotient_test"]

DEFAULT_MODULUS_BUDGET = 12


def trace_test(g: GroupElement) -> bool:
    """True iff 2 - t or 2 + t is a perfect square, t the trace of a lift."""
    t = g.trace
    for s in (2 - t, 2 + t):
        if s >= 0 and math.isqrt(s) ** 2 == s:
            return True
    return False


@dataclass(frozen=True)
class QuotientReport:
    modulus: int
    solvable: bool
    solution_count: int

    def __post_init__(self):
        assert self.solvable == (self.solution_count > 0)


@lru_cache(maxsize=None)
def _twist_class_mod(n: int) -> frozenset:
    """Conjugacy class of R in SL(2, Z_n), as matrix tuples."""
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]  # L and R generate SL(2, Z_n)
    start = (1, 0, 1 % n, 1)
    seen = {start}
    queue = [start]
    while queue:
        a, b, c, d = queue.pop()
        for ga, gb, gc, gd in gens:
            # h^-1 * m * h mod n with h the generator
            ia, ib, ic, id_ = gd, -gb, -gc, ga
            m00 = ia * a + ib * c
            m01 = ia * b + ib * d
            m10 = ic * a + id_ * c
            m11 = ic * b + id_ * d
            r = (
                (m00 * ga + m01 * gc) % n,
                (m00 * gb + m01 * gd) % n,
                (m10 * ga + m11 * gc) % n,
                (m10 * gb + m11 * gd) % n,
            )
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return frozenset(seen)


def finite_quotient_test(
    g: GroupElement, n: int, max_modulus: int = DEFAULT_MODULUS_BUDGET
) -> QuotientReport:
    """Count twist-class pairs multiplying to a lift of g in SL(2, Z_n)."""
    if n < 2:
        raise DomainError("modulus must be >= 2")
    if n > max_modulus:
        raise BudgetError(f"modulus {n} exceeds budget {max_modulus}")
    twist_class = _twist_class_mod(n)
    lifts = {
        (g.a % n, g.b % n, g.c % n, g.d % n),
        ((-g.a) % n, (-g.b) % n, (-g.c) % n, (-g.d) % n),
    }
    count = 0
    for target in lifts:
        ta, tb, tc, td = target
        for a, b, c, d in twist_class:
            # x2 = x1^-1 * target
            x2 = (
                (d * ta - b * tc) % n,
                (d * tb - b * td) % n,
                (-c * ta + a * tc) % n,
                (-c * tb + a * td) % n,
            )
            if x2 in twist_class:
                count += 1
    return QuotientReport(modulus=n, solvable=count > 0, solution_count=count)
