"""Exact exterior algebra over the rationals.

A *blade* is the wedge product of an ordered list of row vectors, represented
by its vector of k x k minors indexed by the k-subsets of columns in
lexicographic order.  The wedge of k = n vectors is the determinant; the
empty wedge is the unit scalar.  Blades of two bases of the same subspace
differ by a nonzero rational factor only, so consumers should rely on
is_zero / is_proportional_to rather than raw coordinates when the input is a
subspace.

Determinants and ranks use fraction-free (Bareiss-style) elimination on
denominator-cleared integer matrices, exact at any size that fits in memory.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, GradeError

Vec = tuple[Fraction, ...]

Rational = Fraction | int | str


def vector(xs: Iterable[Rational]) -> Vec:
    """Coerce ints / 'p/q' strings / Fractions into a rational row vector."""
    return tuple(Fraction(x) for x in xs)


def _int_rows(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; return integer rows and the product of row scalings."""
    out = []
    scale = Fraction(1)
    for row in rows:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in fr])
        scale *= lcm
    return out, scale


def det(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant of a square rational matrix (1 for the empty matrix)."""
    k = len(rows)
    if k == 0:
        return Fraction(1)
    if any(len(r) != k for r in rows):
        raise DimensionError("determinant needs a square matrix")
    m, scale = _int_rows(rows)
    if k == 1:
        return Fraction(m[0][0]) / scale
    if k == 2:
        return Fraction(m[0][0] * m[1][1] - m[0][1] * m[1][0]) / scale
    if k == 3:
        a, b, c = m[0]
        p, q, r = m[1]
        x, y, z = m[2]
        val = a * (q * z - r * y) - b * (p * z - r * x) + c * (p * y - q * x)
        return Fraction(val) / scale
    # Bareiss: every intermediate division is exact
    sign = 1
    prev = 1
    for col in range(k - 1):
        if m[col][col] == 0:
            for r2 in range(col + 1, k):
                if m[r2][col] != 0:
                    m[col], m[r2] = m[r2], m[col]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r2 in range(col + 1, k):
            for c2 in range(col + 1, k):
                m[r2][c2] = (m[r2][c2] * m[col][col] - m[r2][col] * m[col][c2]) // prev
            m[r2][col] = 0
        prev = m[col][col]
    return Fraction(sign * m[k - 1][k - 1]) / scale


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Exact row rank via fraction-free forward elimination."""
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("rank needs a rectangular matrix")
    m, _ = _int_rows(rows)
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        for i in range(r + 1, len(m)):
            factor = m[i][col]
            if factor == 0:
                continue
            lead = pr[col]
            row = m[i]
            for c2 in range(col, ncols):
                row[c2] = row[c2] * lead - pr[c2] * factor
            g = 0
            for x in row:
                g = math.gcd(g, x)
            if g > 1:
                for c2 in range(ncols):
                    row[c2] //= g
        r += 1
        if r == len(m):
            break
    return r


def row_basis(rows: Sequence[Sequence[Rational]], n: int) -> tuple[Vec, ...]:
    """An independent spanning subset of the given rows (the pivot rows)."""
    fr = [vector(r) for r in rows]
    for r in fr:
        if len(r) != n:
            raise DimensionError(f"row of length {len(r)} in ambient dimension {n}")
    basis: list[Vec] = []
    current = 0
    for i, r in enumerate(fr):
        candidate = basis + [r]
        if rank(candidate) > current:
            basis.append(r)
            current += 1
    return tuple(basis)


@dataclass(frozen=True)
class Blade:
    """Wedge product of `generators`, stored as minors over lexicographic k-subsets.

    Blades parsed back from the wire format keep their grade but lose the
    generators (the format only carries coordinates); such blades support the
    zero/proportionality queries but cannot be wedged further.
    """

    n: int
    generators: tuple[Vec, ...]
    coords: tuple[Fraction, ...] = field(compare=False)
    grade: int = -1

    def __post_init__(self):
        if self.grade < 0:
            object.__setattr__(self, "grade", len(self.generators))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_proportional_to(self, other: "Blade") -> bool:
        """True iff one blade is a nonzero rational multiple of the other (or both are zero)."""
        if self.n != other.n:
            raise DimensionError("blades in different ambient dimensions")
        if self.grade != other.grade:
            raise GradeError(f"blades of grades {self.grade} and {other.grade}")
        a, b = self.coords, other.coords
        ratio = None
        for x, y in zip(a, b):
            if (x == 0) != (y == 0):
                return False
            if x != 0:
                r = x / y
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True


def wedge(vectors: Sequence[Sequence[Rational]], n: int | None = None) -> Blade:
    """Wedge the given row vectors into a blade of minors.

    With k = n generators the single coordinate is the determinant; with
    k = 0 the blade is the unit scalar (coordinate vector (1,)).
    """
    gens = tuple(vector(v) for v in vectors)
    if n is None:
        if not gens:
            raise DimensionError("ambient dimension required for an empty wedge")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DimensionError(f"vector of length {len(g)} in ambient dimension {n}")
    k = len(gens)
    if k > n:
        raise DimensionError(f"cannot wedge {k} vectors in dimension {n}")
    coords = tuple(
        det([[g[c] for c in cols] for g in gens])
        for cols in itertools.combinations(range(n), k)
    )
    return Blade(n, gens, coords)


def is_independent(vectors: Sequence[Sequence[Rational]]) -> bool:
    """Linear independence test: the wedge is nonzero iff the vectors are independent."""
    gens = [vector(v) for v in vectors]
    if not gens:
        return True
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DimensionError("vectors of mixed lengths")
    if len(gens) > n:
        return False
    return not wedge(gens, n).is_zero()


def wedge_concat(a: Blade, b: Blade) -> Blade:
    """Blade on the concatenated generator lists of a and b."""
    if a.n != b.n:
        raise DimensionError(f"blades in dimensions {a.n} and {b.n}")
    if a.grade != len(a.generators) or b.grade != len(b.generators):
        raise DomainError("cannot wedge a coordinates-only blade")
    if a.grade + b.grade > a.n:
        raise GradeError(f"grades {a.grade} + {b.grade} exceed dimension {a.n}")
    return wedge(a.generators + b.generators, a.n)


@dataclass(frozen=True)
class SubspaceRep:
    """A subspace of Q^n given by an independent basis of row vectors (dim = row count)."""

    n: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        for r in self.basis:
            if len(r) != self.n:
                raise DimensionError(f"basis row of length {len(r)} in dimension {self.n}")
        if rank(self.basis) != len(self.basis):
            raise DomainError("basis rows are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], n: int) -> "SubspaceRep":
        return cls(n, tuple(vector(r) for r in rows))

    @classmethod
    def span_of(cls, rows: Sequence[Sequence[Rational]], n: int) -> "SubspaceRep":
        """Subspace spanned by possibly-dependent rows."""
        return cls(n, row_basis(rows, n))


def subspace_blade(w: SubspaceRep) -> Blade:
    """The blade of the stored basis; well defined up to a nonzero scalar factor.

    A zero-dimensional subspace yields the unit scalar blade.
    """
    if w.dim == 0:
        return Blade(w.n, (), (Fraction(1),))
    return wedge(w.basis, w.n)


def blade_to_json(b: Blade) -> dict:
    """`{"n", "k", "coords"}` with coordinates over lexicographic k-subsets as "p/q" strings."""
    return {"n": b.n, "k": b.grade, "coords": [str(c) for c in b.coords]}


def blade_from_json(obj: dict) -> Blade:
    """Rebuild a coordinate-only blade (no generators are stored in the wire format)."""
    from .errors import FormatError

    for key in ("n", "k", "coords"):
        if key not in obj:
            raise FormatError(f"blade JSON missing field {key!r}")
    n, k, raw = obj["n"], obj["k"], obj["coords"]
    if not isinstance(n, int) or not isinstance(k, int) or not isinstance(raw, list):
        raise FormatError("blade JSON fields have wrong types")
    if len(raw) != math.comb(n, k):
        raise FormatError(f"expected {math.comb(n, k)} coordinates, got {len(raw)}")
    try:
        coords = tuple(Fraction(x) for x in raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad rational in blade coords: {exc}") from exc
    return Blade(n, (), coords, grade=k)


def sum_rank(*spaces: SubspaceRep) -> int:
    """dim of the sum of the given subspaces (rank of stacked bases)."""
    rows: list[Vec] = []
    n = spaces[0].n
    for sp in spaces:
        if sp.n != n:
            raise DimensionError("subspaces in different ambient dimensions")
        rows.extend(sp.basis)
    return rank(rows) if rows else 0


def intersection_dim(a: SubspaceRep, b: SubspaceRep) -> int:
    """dim(a ∩ b) = dim a + dim b - dim(a + b)."""
    return a.dim + b.dim - sum_rank(a, b)
