"""Exact combinatorial weights and the weighted sums attached to d-tuple systems.

Everything here is integer or rational arithmetic (`int` / `fractions.Fraction`),
never floating point, so inequality checks are decisive.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import ArityError, DomainError
from .families import Family, type_of


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise DomainError(f"factorial of negative {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, ks: Sequence[int]) -> int:
    """n! / (k_1! ... k_t! (n - sum)!): ordered partitions with a remainder bucket."""
    if n < 0:
        raise DomainError(f"multinomial with negative n={n}")
    total = 0
    for k in ks:
        if k < 0:
            raise DomainError(f"multinomial with negative part {k}")
        total += k
    if total > n:
        raise DomainError(f"multinomial parts sum to {total} > n={n}")
    out = 1
    remaining = n
    for k in ks:
        out *= math.comb(remaining, k)
        remaining -= k
    return out


def tuple_weight(sizes: Sequence[int]) -> int:
    """multinomial(sum(sizes), sizes): the number of tuples sharing this type on a tight ground set."""
    return multinomial(sum(sizes), sizes)


def bollobas_sum(f: Family) -> Fraction:
    """Sum over tuples of the inverse multinomial weight of their type.

    The conjectured (and refuted) upper bound for Bollobás systems was 1; the
    proven bound for d = 3 is (n + 3) / 2, see :func:`recursive_bound`.
    """
    total = Fraction(0)
    for t in f.tuples:
        total += Fraction(1, tuple_weight(type_of(t)))
    return total


def skew_sum(f: Family) -> Fraction:
    """Sum of (C(s_i + d - 1, d - 1) * multinomial(s_i, type_i))^-1 over tuples.

    At most 1 for every skew Bollobás system; each term is the probability of
    the tuple's delimiter event (see the events module).
    """
    d = f.d
    total = Fraction(0)
    for t in f.tuples:
        sizes = type_of(t)
        s = sum(sizes)
        total += Fraction(1, binomial(s + d - 1, d - 1) * multinomial(s, sizes))
    return total


def pair_weighted_sum(f: Family) -> Fraction:
    """Sum of ((1 + |A_i| + |B_i|) * C(|A_i| + |B_i|, |A_i|))^-1 for a pair family.

    Defined for d = 2 only; coincides with :func:`skew_sum` there because
    C(s + 1, 1) = s + 1.
    """
    if f.d != 2:
        raise ArityError(f"pair_weighted_sum needs d = 2, got d = {f.d}")
    total = Fraction(0)
    for t in f.tuples:
        a, b = type_of(t)
        total += Fraction(1, (1 + a + b) * binomial(a + b, a))
    return total


def recursive_bound(n: int, d: int) -> Fraction:
    """Exact upper bound for bollobas_sum of a d-tuple Bollobás system on [n].

    B(n, 2) = 1 and B(n, d) = C(n+d-2, d-2)/(d-1) + (d-2) * B(n, d-1).
    For d = 3 this is (n + 3) / 2.  The recursion splits a system into the
    tuples with all middle parts nonempty (delimiter-event counting) and, for
    each middle position, the sub-system of tuples empty there.
    """
    if n < 1:
        raise DomainError(f"recursive_bound needs n >= 1, got {n}")
    if d < 2:
        raise ArityError(f"recursive_bound needs d >= 2, got {d}")
    bound = Fraction(1)
    for dd in range(3, d + 1):
        bound = Fraction(binomial(n + dd - 2, dd - 2), dd - 1) + (dd - 2) * bound
    return bound
