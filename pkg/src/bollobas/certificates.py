"""Size-bound certificates for uniform skew systems of subspace d-tuples.

The certificate realizes the exterior-algebra proof of the multinomial size
bound: for each k = 2..d, project the ambient space down to dimension
a_1 + ... + a_k by a random map in general position with every sum the
argument needs preserved; wedge the projected parts into blades; and evaluate
the functionals

    f_i(xi_j) = prod_k  det[ basis phi_k(A_i^(1)); ...; basis phi_k(A_i^(k-1)); basis phi_k(A_j^(k)) ]

into an m x m matrix.  For a valid uniform skew family the diagonal is
nonzero (each entry is a determinant of a direct-sum decomposition) and the
strict upper triangle is zero (a shared direction collapses the wedge), which
witnesses linear independence of f_1, ..., f_m and hence
m <= multinomial(a_1 + ... + a_d, (a_1, ..., a_d)).
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, RetriesExhausted, UniformityError
from .exterior import SubspaceRep, Vec, det, rank, row_basis, sum_rank
from .spaces import SubspaceFamily, skew_spaces_violation
from .sums import tuple_weight

DEFAULT_MAX_RETRIES = 32


def derive_seed(seed: int, label: str) -> int:
    """Stable 64-bit child seed for a named stage; adding stages never shifts earlier ones."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class GeneralPositionMap:
    """A linear map Q^n -> Q^target (row vector times matrix) verified to
    preserve min(dim, target) for every listed constraint subspace."""

    n: int
    target: int
    matrix: tuple[tuple[int, ...], ...]  # n rows of length target
    verified_constraints: tuple[tuple[int, int], ...]  # (constraint index, required dim)
    retries: int

    def apply_rows(self, rows: Sequence[Vec]) -> list[list[Fraction]]:
        """Images of the given row vectors."""
        out = []
        for row in rows:
            out.append(
                [sum(row[i] * self.matrix[i][c] for i in range(self.n)) for c in range(self.target)]
            )
        return out

    def image(self, sp: SubspaceRep) -> SubspaceRep:
        """The image subspace (basis re-extracted, so dimension may drop)."""
        rows = self.apply_rows(sp.basis)
        return SubspaceRep.span_of(rows, self.target)


def sample_general_position(
    ambient: int,
    target: int,
    constraints: Sequence[SubspaceRep],
    seed: int,
    max_retries: int = DEFAULT_MAX_RETRIES,
    entry_bound: int | None = None,
) -> GeneralPositionMap:
    """Draw random integer matrices until one preserves min(dim U, target) for
    every constraint subspace U, verified by exact rank.

    Over the rationals a fixed draw fails with probability zero, so running
    out of retries flags a bug or an infeasible constraint set rather than
    bad luck.
    """
    if target > ambient:
        raise DimensionError(f"target dimension {target} exceeds ambient {ambient}")
    if entry_bound is None:
        entry_bound = 10 * (len(constraints) + 1) * ambient
    rng = random.Random(seed)
    for attempt in range(max_retries):
        matrix = tuple(
            tuple(rng.randint(-entry_bound, entry_bound) for _ in range(target))
            for _ in range(ambient)
        )
        verified: list[tuple[int, int]] = []
        ok = True
        for idx, sp in enumerate(constraints):
            want = min(sp.dim, target)
            rows = [
                [sum(b[i] * matrix[i][c] for i in range(ambient)) for c in range(target)]
                for b in sp.basis
            ]
            if rank(rows) != want:
                ok = False
                break
            verified.append((idx, want))
        if ok:
            return GeneralPositionMap(ambient, target, matrix, tuple(verified), attempt)
    raise RetriesExhausted(f"no general-position map found in {max_retries} draws")


def _phi_constraints(f: SubspaceFamily, k: int) -> list[SubspaceRep]:
    """The constraint list for stage k: every prefix sum A_i^(1)+...+A_i^(k)
    and every pairwise sum A_i^(p) + A_j^(q) with p, q <= k."""
    m = len(f.entries)
    constraints: list[SubspaceRep] = []
    for i in range(m):
        rows: list[Vec] = []
        for p in range(k):
            rows.extend(f.entries[i][p].basis)
        constraints.append(SubspaceRep(f.n, row_basis(rows, f.n)))
    for i in range(m):
        for j in range(m):
            for p in range(k):
                for q in range(k):
                    rows = list(f.entries[i][p].basis) + list(f.entries[j][q].basis)
                    constraints.append(SubspaceRep(f.n, row_basis(rows, f.n)))
    return constraints


def build_phi(
    f: SubspaceFamily, k: int, seed: int, max_retries: int = DEFAULT_MAX_RETRIES
) -> GeneralPositionMap:
    """General-position projection to dimension a_1 + ... + a_k for stage k.

    Requires a uniform family and 2 <= k <= d.  After sampling, dimension
    preservation of intersections is verified directly: for all i, j and
    p, q <= k whose pair sum fits in the target dimension,

        dim(phi(A_i^(p)) ∩ phi(A_j^(q))) == dim(A_i^(p) ∩ A_j^(q)).

    (Pairs with p != q always fit; a p == q pair can exceed the target and
    then no map could preserve it.)
    """
    sizes = f.uniform_type()
    if sizes is None:
        raise UniformityError("general-position stages need a uniform (constant-type) family")
    d = f.d
    if not 2 <= k <= d:
        raise IndexError(f"stage k must be in 2..{d}, got {k}")
    target = sum(sizes[:k])
    phi = sample_general_position(f.n, target, _phi_constraints(f, k), seed, max_retries)
    m = len(f.entries)
    for i in range(m):
        for j in range(m):
            for p in range(k):
                for q in range(k):
                    a, b = f.entries[i][p], f.entries[j][q]
                    joint = sum_rank(a, b)
                    if joint > target:
                        continue  # no map into the target can preserve this sum
                    ia, ib = phi.image(a), phi.image(b)
                    want = a.dim + b.dim - joint
                    got = ia.dim + ib.dim - sum_rank(ia, ib)
                    if ia.dim != a.dim or ib.dim != b.dim or got != want:
                        raise RetriesExhausted(
                            "verified constraints but intersection dims moved at "
                            f"(i={i + 1}, j={j + 1}, p={p + 1}, q={q + 1})"
                        )
    return phi


def evaluation_matrix(
    f: SubspaceFamily, maps: dict[int, GeneralPositionMap]
) -> tuple[tuple[Fraction, ...], ...]:
    """The m x m matrix with entry (i, j) = f_i(xi_j).

    Each factor is realized as the determinant of the stacked projected bases
    of entry i's first k - 1 parts and entry j's k-th part (the top-grade
    coordinate of the corresponding wedge) rather than via a materialized
    dual vector, which computes the same scalar.
    """
    sizes = f.uniform_type()
    if sizes is None:
        raise UniformityError("evaluation matrix needs a uniform family")
    d = f.d
    m = len(f.entries)
    # projected bases, kept as raw rows: proj[k][i][p] = rows of phi_k(A_i^(p))
    proj: dict[int, list[list[list[list[Fraction]]]]] = {}
    for k in range(2, d + 1):
        phi = maps[k]
        proj[k] = [
            [phi.apply_rows(f.entries[i][p].basis) for p in range(k)] for i in range(m)
        ]
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            value = Fraction(1)
            for k in range(2, d + 1):
                stacked: list[list[Fraction]] = []
                for p in range(k - 1):
                    stacked.extend(proj[k][i][p])
                stacked.extend(proj[k][j][k - 1])
                value *= det(stacked)
                if value == 0:
                    break
            row.append(value)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Certificate:
    """Outcome of the size-bound pipeline on one uniform subspace family.

    verdict is True iff every diagonal entry of the evaluation matrix is
    nonzero and every strict upper-triangle entry is zero; violations lists
    the offending (i, j) positions (1-based).  On a pass the family size m is
    certified to satisfy m <= size_bound.
    """

    m: int
    sizes: tuple[int, ...]
    size_bound: int
    skew_ok: bool
    skew_violation: tuple[int, int] | None
    maps: tuple[GeneralPositionMap, ...]
    evaluation: tuple[tuple[Fraction, ...], ...]
    verdict: bool
    violations: tuple[tuple[int, int], ...]
    seed: int

    @property
    def retries(self) -> tuple[int, ...]:
        return tuple(phi.retries for phi in self.maps)


def certify(
    f: SubspaceFamily, seed: int = 0, max_retries: int = DEFAULT_MAX_RETRIES
) -> Certificate:
    """Run the full pipeline: skew check, per-stage projections, evaluation
    matrix, and the triangular-pattern verdict.

    The skew check failing does not abort; the matrix and its pattern
    violations are still reported for diagnosis, but the verdict can only
    certify the size bound when the input family is valid.
    """
    sizes = f.uniform_type()
    if sizes is None:
        raise UniformityError("certificates are defined for uniform families")
    violation = skew_spaces_violation(f)
    maps = {
        k: build_phi(f, k, derive_seed(seed, f"phi{k}"), max_retries)
        for k in range(2, f.d + 1)
    }
    matrix = evaluation_matrix(f, maps)
    m = len(f.entries)
    bad: list[tuple[int, int]] = []
    for i in range(m):
        if matrix[i][i] == 0:
            bad.append((i + 1, i + 1))
        for j in range(i + 1, m):
            if matrix[i][j] != 0:
                bad.append((i + 1, j + 1))
    bound = tuple_weight(sizes)
    verdict = not bad
    # a triangular pattern forces f_1..f_m independent inside a bound-dim space
    assert not verdict or m <= bound, f"pattern held with m = {m} > bound {bound}"
    return Certificate(
        m=m,
        sizes=tuple(sizes),
        size_bound=bound,
        skew_ok=violation is None,
        skew_violation=violation,
        maps=tuple(maps[k] for k in range(2, f.d + 1)),
        evaluation=matrix,
        verdict=verdict,
        violations=tuple(sorted(bad)),
        seed=seed,
    )
