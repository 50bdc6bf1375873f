"""Families of d-tuples of subspaces, and the lift from set families to coordinate subspaces.

A d-tuple of subspaces must satisfy the independence condition
dim(A^(1) + ... + A^(d)) = dim A^(1) + ... + dim A^(d); the (skew) cross
condition then asks for p < q with dim(A_i^(p) ∩ A_j^(q)) > 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, FormatError
from .exterior import SubspaceRep, intersection_dim, sum_rank
from .families import Family

Entry = tuple[SubspaceRep, ...]


@dataclass(frozen=True)
class SubspaceFamily:
    """An ordered sequence of d-tuples of subspaces of Q^n.

    Each entry's subspaces are required to be independent (their sum has the
    full combined dimension), the analogue of pairwise disjointness.
    """

    n: int
    d: int
    entries: tuple[Entry, ...]

    def __post_init__(self):
        if self.d < 2:
            raise DomainError(f"subspace family arity must be >= 2, got {self.d}")
        for idx, entry in enumerate(self.entries):
            if len(entry) != self.d:
                raise DomainError(f"entry {idx + 1} has {len(entry)} parts, expected {self.d}")
            dims = 0
            for sp in entry:
                if sp.n != self.n:
                    raise DomainError(f"entry {idx + 1} has a subspace of R^{sp.n}, ambient is R^{self.n}")
                dims += sp.dim
            if dims and sum_rank(*entry) != dims:
                raise DomainError(f"entry {idx + 1} parts are not independent")

    def __len__(self) -> int:
        return len(self.entries)

    def entry_type(self, i: int) -> tuple[int, ...]:
        """Dimension vector of entry i (1-based)."""
        return tuple(sp.dim for sp in self.entries[i - 1])

    def uniform_type(self) -> tuple[int, ...] | None:
        """The common dimension vector, or None if entries disagree (or none exist)."""
        if not self.entries:
            return None
        first = self.entry_type(1)
        for i in range(2, len(self.entries) + 1):
            if self.entry_type(i) != first:
                return None
        return first


def lift_to_spaces(f: Family) -> SubspaceFamily:
    """Replace each part A by the coordinate subspace spanned by {e_a | a in A}.

    Dimensions equal part sizes and dim(s(A) ∩ s(B)) = |A ∩ B| for every pair
    of parts, so the (skew) cross structure transfers verbatim.
    """
    entries = []
    for t in f.tuples:
        entry = []
        for part in t.parts():
            basis = tuple(
                tuple(Fraction(1) if c == a - 1 else Fraction(0) for c in range(f.n))
                for a in part
            )
            entry.append(SubspaceRep(f.n, basis))
        entries.append(tuple(entry))
    return SubspaceFamily(f.n, f.d, tuple(entries))


def skew_spaces_violation(f: SubspaceFamily) -> tuple[int, int] | None:
    """First pair i < j (1-based) with no p < q giving dim(A_i^(p) ∩ A_j^(q)) > 0."""
    m = len(f.entries)
    d = f.d
    for i in range(m):
        for j in range(i + 1, m):
            ok = False
            for p in range(d - 1):
                for q in range(p + 1, d):
                    if intersection_dim(f.entries[i][p], f.entries[j][q]) > 0:
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return (i + 1, j + 1)
    return None


def is_skew_bollobas_spaces(f: SubspaceFamily) -> bool:
    """True iff every pair i < j has intersecting parts p < q."""
    return skew_spaces_violation(f) is None


# ---------------------------------------------------------------------------
# JSON wire format:
#   {"n": int, "d": int, "entries": [[ [["p/q", ...] row, ...] basis, ...d ] ...]}


def _rat(x: Fraction) -> str:
    return str(x)


def subspace_family_to_json(f: SubspaceFamily) -> dict:
    return {
        "n": f.n,
        "d": f.d,
        "entries": [
            [[[_rat(x) for x in row] for row in sp.basis] for sp in entry]
            for entry in f.entries
        ],
    }


def subspace_family_from_json(obj: dict) -> SubspaceFamily:
    if not isinstance(obj, dict):
        raise FormatError("subspace family JSON must be an object")
    for key in ("n", "d", "entries"):
        if key not in obj:
            raise FormatError(f"subspace family JSON missing field {key!r}")
    n, d, raw = obj["n"], obj["d"], obj["entries"]
    if not isinstance(n, int) or not isinstance(d, int) or not isinstance(raw, list):
        raise FormatError("subspace family JSON fields have wrong types")
    entries = []
    for idx, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != d:
            raise FormatError(f"entry {idx + 1} must be a list of {d} bases")
        parts = []
        for basis in entry:
            if not isinstance(basis, list):
                raise FormatError(f"entry {idx + 1} has a basis that is not a list")
            try:
                rows = tuple(tuple(Fraction(x) for x in row) for row in basis)
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise FormatError(f"entry {idx + 1} has a bad rational: {exc}") from exc
            parts.append(SubspaceRep(n, rows))
        entries.append(tuple(parts))
    return SubspaceFamily(n, d, tuple(entries))


def subspace_family_loads(text: str) -> SubspaceFamily:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return subspace_family_from_json(obj)
