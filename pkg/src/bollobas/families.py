"""Core domain types for d-tuple set families and the cross-intersection predicates.

A *d-tuple* is an ordered list of d pairwise-disjoint subsets of the ground
set {1, ..., n}.  A family of d-tuples is a *Bollobás system* when every
ordered pair of distinct tuples (i, j) has some parts p < q with part p of
tuple i meeting part q of tuple j; it is a *skew* Bollobás system when this
is only required for i < j in the listed order.

Conventions used across the package:

* elements of the ground set are 1-based (the set is {1, ..., n});
* tuple indices reported to or accepted from callers are 1-based, matching
  the i in [m] convention of the definitions (internal lists are plain
  0-based Python lists);
* parts are stored as 64-bit masks, so n is capped at 64 and every
  intersection test is a single AND.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArityError,
    FormatError,
    MismatchError,
    OverlapError,
    RangeError,
)

MAX_GROUND = 64

#: The type of a d-tuple: the vector of its part sizes.
TupleType = tuple[int, ...]


@dataclass(frozen=True)
class GroundSet:
    """The ground set {1, ..., n}, 1 <= n <= 64."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise RangeError(f"ground set size must be in 1..{MAX_GROUND}, got {self.n}")


def _as_n(ground: GroundSet | int) -> int:
    n = ground.n if isinstance(ground, GroundSet) else ground
    if not 1 <= n <= MAX_GROUND:
        raise RangeError(f"ground set size must be in 1..{MAX_GROUND}, got {n}")
    return n


def mask_of(elements: Iterable[int], n: int) -> int:
    """Bitmask of a set of 1-based elements, validating the range 1..n."""
    m = 0
    for e in elements:
        if not 1 <= e <= n:
            raise RangeError(f"element {e} outside ground set 1..{n}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of a bitmask."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class DTuple:
    """A d-tuple of pairwise-disjoint subsets of {1, ..., n}.

    Parts are bitmasks; construct through :func:`validate_tuple` (direct
    construction skips disjointness checks).  Any part may be empty.
    """

    n: int
    masks: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.masks)

    def parts(self) -> tuple[tuple[int, ...], ...]:
        """Parts as sorted element tuples."""
        return tuple(elements_of(m) for m in self.masks)

    def part(self, k: int) -> tuple[int, ...]:
        """Elements of part k (1-based)."""
        return elements_of(self.masks[k - 1])

    def support(self) -> int:
        """Mask of all elements used by any part."""
        s = 0
        for m in self.masks:
            s |= m
        return s

    def type(self) -> TupleType:
        return type_of(self)


def validate_tuple(parts: Sequence[Iterable[int]], ground: GroundSet | int) -> DTuple:
    """Build a DTuple, checking range, arity >= 2, and pairwise disjointness.

    Raises OverlapError with the first colliding part pair (p, q, element),
    RangeError for elements outside 1..n, ArityError for fewer than two parts.
    """
    n = _as_n(ground)
    if len(parts) < 2:
        raise ArityError(f"a d-tuple needs d >= 2 parts, got {len(parts)}")
    masks = [mask_of(p, n) for p in parts]
    for p in range(len(masks)):
        for q in range(p + 1, len(masks)):
            common = masks[p] & masks[q]
            if common:
                raise OverlapError(p + 1, q + 1, elements_of(common)[0])
    return DTuple(n, tuple(masks))


def type_of(t: DTuple) -> TupleType:
    """The type of a tuple: its vector of part sizes."""
    return tuple(m.bit_count() for m in t.masks)


@dataclass(frozen=True)
class Family:
    """An ordered sequence of d-tuples over one ground set.

    Order is semantically significant: the skew condition quantifies over
    pairs i < j in this order.
    """

    n: int
    d: int
    tuples: tuple[DTuple, ...]

    def __post_init__(self):
        _as_n(self.n)
        if self.d < 2:
            raise ArityError(f"family arity must be >= 2, got {self.d}")
        for t in self.tuples:
            if t.n != self.n or t.d != self.d:
                raise MismatchError(
                    f"tuple with n={t.n}, d={t.d} in family with n={self.n}, d={self.d}"
                )

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    @classmethod
    def build(cls, n: int, parts_list: Sequence[Sequence[Iterable[int]]], d: int | None = None) -> "Family":
        """Validate raw part lists into a Family; d may be given for an empty family."""
        tuples = tuple(validate_tuple(p, n) for p in parts_list)
        if d is None:
            if not tuples:
                raise ArityError("arity d must be given for an empty family")
            d = tuples[0].d
        return cls(n, d, tuples)


def cross_condition(s: DTuple, t: DTuple) -> bool:
    """True iff some part p of s meets some later part q > p of t.

    This is the ordered condition with s in the role of tuple i and t in the
    role of tuple j; it is not symmetric.
    """
    if s.n != t.n or s.d != t.d:
        raise MismatchError(f"tuples disagree: n={s.n}/{t.n}, d={s.d}/{t.d}")
    d = s.d
    sm, tm = s.masks, t.masks
    # suffix-OR of t's parts strictly after p
    suffix = 0
    for q in range(d - 1, 0, -1):
        suffix |= tm[q]
        if sm[q - 1] & suffix:
            return True
    return False


def _suffix_masks(t: DTuple) -> tuple[int, ...]:
    """suffix[p] = OR of parts p+2..d (mask of everything strictly after part p+1)."""
    d = t.d
    suf = [0] * d
    acc = 0
    for q in range(d - 1, 0, -1):
        acc |= t.masks[q]
        suf[q - 1] = acc
    return tuple(suf)


def bollobas_violation(f: Family) -> tuple[int, int] | None:
    """First ordered pair (i, j), i != j, failing the cross condition; None if valid.

    Pairs are 1-based and scanned in lexicographic order, so reports are
    deterministic.
    """
    tuples = f.tuples
    m = len(tuples)
    sufs = [_suffix_masks(t) for t in tuples]
    for i in range(m):
        mi = tuples[i].masks
        for j in range(m):
            if i == j:
                continue
            suf = sufs[j]
            if not any(mi[p] & suf[p] for p in range(f.d - 1)):
                return (i + 1, j + 1)
    return None


def skew_violation(f: Family) -> tuple[int, int] | None:
    """First pair i < j failing the cross condition; None if the family is skew-valid."""
    tuples = f.tuples
    m = len(tuples)
    sufs = [_suffix_masks(t) for t in tuples]
    for i in range(m):
        mi = tuples[i].masks
        for j in range(i + 1, m):
            suf = sufs[j]
            if not any(mi[p] & suf[p] for p in range(f.d - 1)):
                return (i + 1, j + 1)
    return None


def is_bollobas(f: Family) -> bool:
    """True iff every ordered pair of distinct tuples satisfies the cross condition."""
    return bollobas_violation(f) is None


def is_skew_bollobas(f: Family) -> bool:
    """True iff every pair i < j satisfies the cross condition."""
    return skew_violation(f) is None


def relabel(f: Family, mapping: Sequence[int]) -> Family:
    """Apply a permutation of {1, ..., n} to every element of every part.

    mapping[e - 1] is the image of element e.  Validity of the (skew)
    Bollobás property is invariant under relabeling.
    """
    if sorted(mapping) != list(range(1, f.n + 1)):
        raise RangeError("mapping is not a permutation of 1..n")
    new_tuples = []
    for t in f.tuples:
        masks = tuple(mask_of((mapping[e - 1] for e in elements_of(m)), f.n) for m in t.masks)
        new_tuples.append(DTuple(f.n, masks))
    return Family(f.n, f.d, tuple(new_tuples))


# ---------------------------------------------------------------------------
# JSON wire format:  {"n": int, "d": int, "tuples": [[[ints], ...], ...]}
# Elements 1-based; emitted inner lists sorted ascending.


def family_to_json(f: Family) -> dict:
    return {
        "n": f.n,
        "d": f.d,
        "tuples": [[list(part) for part in t.parts()] for t in f.tuples],
    }


def family_from_json(obj: dict) -> Family:
    if not isinstance(obj, dict):
        raise FormatError("family JSON must be an object")
    for key in ("n", "d", "tuples"):
        if key not in obj:
            raise FormatError(f"family JSON missing field {key!r}")
    n, d, raw = obj["n"], obj["d"], obj["tuples"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise FormatError("family JSON fields 'n' and 'd' must be integers")
    if not isinstance(raw, list):
        raise FormatError("family JSON field 'tuples' must be a list")
    tuples = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != d:
            raise FormatError(f"tuple {idx + 1} must be a list of {d} parts")
        for part in entry:
            if not isinstance(part, list) or not all(isinstance(e, int) for e in part):
                raise FormatError(f"tuple {idx + 1} has a part that is not a list of ints")
        tuples.append(validate_tuple(entry, n))
    return Family(n, d, tuple(tuples))


def family_loads(text: str) -> Family:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return family_from_json(obj)


def family_dumps(f: Family) -> str:
    return json.dumps(family_to_json(f), sort_keys=True)
