"""Brute-force ground truth for small instances.

These are deliberately naive: spanning trees by enumerating edge subsets,
walk counts by dynamic programming over adjacency lists. They exist to
check the fast paths, so they must not share code with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetExceededError
from .graphs import Graph, WeightVector


@dataclass(frozen=True)
class OracleBudget:
    max_edges_for_tree_enum: int = 20
    max_walk_length: int = 10
    sample_count: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_edges_for_tree_enum <= 0 or self.max_walk_length <= 0:
            raise ValueError("oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _spanning_subsets(g: Graph, budget: OracleBudget):
    if g.m > budget.max_edges_for_tree_enum:
        raise BudgetExceededError(
            f"{g.m} edges exceeds tree enumeration budget {budget.max_edges_for_tree_enum}"
        )
    for subset in combinations(range(g.m), g.n - 1):
        uf = _UnionFind(g.n)
        if all(uf.union(*g.edges[e]) for e in subset):
            yield subset


def enumerate_spanning_trees(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Count spanning trees by checking every (n-1)-edge subset."""
    return sum(1 for _ in _spanning_subsets(g, budget))


def weighted_enum(g: Graph, w: WeightVector, budget: OracleBudget = DEFAULT_BUDGET) -> float:
    """Sum over spanning trees of the product of edge weights."""
    wv = w.as_array()
    total = 0.0
    for subset in _spanning_subsets(g, budget):
        prod = 1.0
        for e in subset:
            prod *= wv[e]
        total += prod
    return total


def count_walks(g: Graph, a: int, b: int, length: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Number of walks of the given length from a to b, by DP on neighbors."""
    if length > budget.max_walk_length:
        raise BudgetExceededError(f"walk length {length} exceeds budget {budget.max_walk_length}")
    counts = [0] * g.n
    counts[a] = 1
    for _ in range(length):
        nxt = [0] * g.n
        for v in range(g.n):
            c = counts[v]
            if c:
                for u in g.neighbors[v]:
                    nxt[u] += c
        counts = nxt
    return counts[b]


def random_simplex(m: int, seed: int = 0, count: int = 1) -> list[WeightVector]:
    """Seeded strictly-positive samples from the weight simplex.

    Each sample is m iid exponential(1) draws rescaled to sum to m.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        draws = rng.exponential(1.0, size=m)
        out.append(WeightVector.from_values(draws, normalize=True))
    return out
