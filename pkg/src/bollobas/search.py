"""Exhaustive maxima of uniform (skew) Bollobás systems on small ground sets.

The two-sided maximum is a maximum clique in the compatibility graph over all
tuples of the given type (edge iff the cross condition holds both ways),
solved by branch and bound with greedy-coloring upper bounds.  The skew
maximum is an ordered-chain problem (a longest sequence of distinct tuples
with every earlier member crossing into every later one), solved by
depth-first chain extension.  Both stop early once the multinomial size
bound for the type is attained, since no uniform system can exceed it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import all_tuples_of_type
from .errors import SizeError
from .families import DTuple, Family, GroundSet, TupleType, _as_n, cross_condition
from .sums import tuple_weight

MAX_CANDIDATES = 5000


@dataclass(frozen=True)
class SearchResult:
    max_size: int
    witness: Family
    nodes_explored: int
    bound: int


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SizeError(f"node budget {self.limit} exhausted")


def _candidates(ground: GroundSet | int, sizes: TupleType) -> tuple[int, list[DTuple]]:
    n = _as_n(ground)
    cands = all_tuples_of_type(n, sizes)
    if len(cands) > MAX_CANDIDATES:
        raise SizeError(f"{len(cands)} candidate tuples exceed the limit {MAX_CANDIDATES}")
    return n, cands


def _greedy_color_order(p: int, adj: list[int]) -> list[tuple[int, int]]:
    """Vertices of mask p with greedy color numbers, in nondecreasing color order.

    A clique inside p has at most max-color vertices, so color numbers are
    per-vertex upper bounds for the branch including that vertex.
    """
    order: list[tuple[int, int]] = []
    color = 0
    while p:
        color += 1
        avail = p
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            bit = 1 << v
            order.append((v, color))
            p &= ~bit
            avail &= ~adj[v]
    return order


def max_bollobas_uniform(
    ground: GroundSet | int, sizes: TupleType, node_budget: int | None = None
) -> SearchResult:
    """Maximum size of a two-sided system of the given uniform type on [n].

    Deterministic: candidates in enumeration order, ties broken by smallest
    index.  The witness is the lexicographically produced optimum clique.
    """
    n, cands = _candidates(ground, sizes)
    m = len(cands)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if cross_condition(cands[i], cands[j]) and cross_condition(cands[j], cands[i]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    bound = tuple_weight(sizes)
    budget = _Budget(node_budget)
    best: list[int] = []
    done = False

    def expand(r: list[int], p: int):
        nonlocal best, done
        if done:
            return
        budget.tick()
        if not p:
            if len(r) > len(best):
                best = r.copy()
                if len(best) >= bound:
                    done = True
            return
        order = _greedy_color_order(p, adj)
        for v, c in reversed(order):
            if done:
                return
            if len(r) + c <= len(best):
                return
            r.append(v)
            expand(r, p & adj[v])
            r.pop()
            p &= ~(1 << v)

    expand([], (1 << m) - 1 if m else 0)
    witness = Family(n, len(sizes), tuple(cands[i] for i in sorted(best)))
    return SearchResult(len(best), witness, budget.nodes, bound)


def max_skew_uniform(
    ground: GroundSet | int, sizes: TupleType, node_budget: int | None = None
) -> SearchResult:
    """Maximum length of an ordered chain T_1, ..., T_m of distinct tuples of
    the given type with cross_condition(T_i, T_j) for all i < j.

    The chain may pick candidates in any order (the family order is the chain
    order), so this searches sequences, not cliques.
    """
    n, cands = _candidates(ground, sizes)
    m = len(cands)
    succ = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and cross_condition(cands[i], cands[j]):
                succ[i] |= 1 << j
    bound = tuple_weight(sizes)
    budget = _Budget(node_budget)
    best: list[int] = []
    done = False

    def extend(chain: list[int], avail: int):
        nonlocal best, done
        if done:
            return
        budget.tick()
        if len(chain) > len(best):
            best = chain.copy()
            if len(best) >= bound:
                done = True
                return
        if len(chain) + avail.bit_count() <= len(best):
            return
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            chain.append(v)
            extend(chain, avail & succ[v])
            chain.pop()
            if done:
                return

    extend([], (1 << m) - 1 if m else 0)
    witness = Family(n, len(sizes), tuple(cands[i] for i in best))
    return SearchResult(len(best), witness, budget.nodes, bound)
