"""Generators for concrete families: exhaustive enumerations, the extremal
complete family, the layered triple family whose weighted sum grows without
bound, and seeded random (skew) families for inequality sweeps.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .errors import ArityError, DomainError
from .families import DTuple, Family, GroundSet, TupleType, _as_n, cross_condition, mask_of


def all_tuples_of_type(ground: GroundSet | int, sizes: Sequence[int]) -> list[DTuple]:
    """Every pairwise-disjoint d-tuple of subsets of [n] with the given part sizes.

    Exactly once each, ordered lexicographically by (part_1, ..., part_d) as
    sorted element lists: the canonical enumeration order used everywhere.
    """
    n = _as_n(ground)
    sizes = tuple(sizes)
    if len(sizes) < 2:
        raise ArityError(f"need d >= 2 part sizes, got {len(sizes)}")
    if any(a < 0 for a in sizes):
        raise DomainError(f"negative part size in {sizes}")
    if sum(sizes) > n:
        raise DomainError(f"part sizes {sizes} sum past the ground set size {n}")

    out: list[DTuple] = []
    chosen: list[tuple[int, ...]] = []

    def fill(available: tuple[int, ...], k: int):
        if k == len(sizes):
            masks = tuple(mask_of(part, n) for part in chosen)
            out.append(DTuple(n, masks))
            return
        for part in itertools.combinations(available, sizes[k]):
            chosen.append(part)
            rest = tuple(e for e in available if e not in part)
            fill(rest, k + 1)
            chosen.pop()

    fill(tuple(range(1, n + 1)), 0)
    return out


def complete_family(sizes: Sequence[int]) -> Family:
    """All disjoint d-tuples of the given type on a ground set of exactly sum(sizes) elements.

    Every part size must be positive: then any two distinct members differ in
    some part, forcing that part to meet the other member's remaining parts,
    so the family is a Bollobás system, of the maximum possible size
    multinomial(sum, sizes) for its type.
    """
    sizes = tuple(sizes)
    if len(sizes) < 2:
        raise ArityError(f"need d >= 2 part sizes, got {len(sizes)}")
    if any(a < 1 for a in sizes):
        raise DomainError(f"complete_family needs positive part sizes, got {sizes}")
    n = sum(sizes)
    return Family(n, len(sizes), tuple(all_tuples_of_type(n, sizes)))


def layered_triple_family(n: int) -> Family:
    """Union over l = 0..floor(n/2) of all triples of type (l, n - 2l, l) on [n].

    A Bollobás system of triples whose inverse-multinomial sum is exactly
    floor(n/2) + 1: each layer contributes 1, so the sum exceeds any constant
    for large n.  This is the standard witness that the unit upper bound for
    set pairs fails for d-tuples.
    """
    n = _as_n(n)
    tuples: list[DTuple] = []
    for l in range(n // 2 + 1):
        tuples.extend(all_tuples_of_type(n, (l, n - 2 * l, l)))
    return Family(n, 3, tuple(tuples))


def _sample_tuple(rng: random.Random, n: int, d: int, sizes: TupleType | None) -> DTuple:
    """One random disjoint d-tuple: of the given type, or of a random nonempty support."""
    if sizes is not None:
        support = rng.sample(range(1, n + 1), sum(sizes))
        masks = []
        at = 0
        for a in sizes:
            masks.append(mask_of(support[at : at + a], n))
            at += a
        return DTuple(n, tuple(masks))
    support = rng.sample(range(1, n + 1), rng.randint(1, n))
    masks = [0] * d
    for e in support:
        masks[rng.randrange(d)] |= 1 << (e - 1)
    return DTuple(n, tuple(masks))


def _grow_family(
    n: int,
    d: int,
    sizes: TupleType | None,
    seed: int,
    target: int,
    attempts: int,
    two_sided: bool,
) -> Family:
    if sizes is not None:
        sizes = tuple(sizes)
        if len(sizes) != d:
            raise ArityError(f"type {sizes} has arity {len(sizes)}, requested d = {d}")
        if sum(sizes) > n:
            raise DomainError(f"type {sizes} does not fit in a ground set of {n}")
    if d < 2:
        raise ArityError(f"need d >= 2, got {d}")
    rng = random.Random(seed)
    members: list[DTuple] = []
    for _ in range(attempts):
        if len(members) >= target:
            break
        cand = _sample_tuple(rng, n, d, sizes)
        ok = all(cross_condition(u, cand) for u in members)
        if ok and two_sided:
            ok = all(cross_condition(cand, u) for u in members)
        if ok:
            members.append(cand)
    return Family(n, d, tuple(members))


def random_skew_family(
    ground: GroundSet | int,
    d: int,
    sizes: TupleType | None = None,
    seed: int = 0,
    target: int = 10,
    attempts: int = 400,
) -> Family:
    """Greedy seeded skew Bollobás family: append a sampled tuple iff every
    current member crosses into it.

    Deterministic for fixed arguments; may return fewer than `target` members
    when the attempt budget runs out.  Not uniform over skew families; it is
    a fuzz generator for inequality sweeps, not a sampler.
    """
    return _grow_family(_as_n(ground), d, sizes, seed, target, attempts, two_sided=False)


def random_bollobas_family(
    ground: GroundSet | int,
    d: int,
    sizes: TupleType | None = None,
    seed: int = 0,
    target: int = 10,
    attempts: int = 400,
) -> Family:
    """Like :func:`random_skew_family` but candidates must cross in both
    directions against every current member, yielding a full Bollobás system.
    """
    return _grow_family(_as_n(ground), d, sizes, seed, target, attempts, two_sided=True)
