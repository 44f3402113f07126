"""Independent oracles used to freeze expected values.

Everything here goes by exhaustive enumeration (power sets, all
permutations) and never calls the code paths under test, so a test can
check the fast implementation against these on small instances.
"""
from __future__ import annotations

import itertools
import random

from islide import Graph


def brute_maximal_independent_sets(g: Graph) -> set[int]:
    """Power-set scan: independent sets with no addable vertex."""
    out = set()
    for r in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            mask = sum(1 << v for v in combo)
            if any(g.adj[u] & mask for u in combo):
                continue
            closed = mask
            for u in combo:
                closed |= g.adj[u]
            if closed == g.full_mask():
                out.add(mask)
    return out


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    """All-permutations check; n <= 8 or so."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    ge = set(g.edges())
    for perm in itertools.permutations(range(g.n)):
        if all((perm[u], perm[v]) in _sym(h) for u, v in ge):
            return True
    return False


def _sym(h: Graph) -> set[tuple[int, int]]:
    out = set()
    for u, v in h.edges():
        out.add((u, v))
        out.add((v, u))
    return out


def brute_contains_induced(g: Graph, h: Graph) -> bool:
    for combo in itertools.combinations(range(g.n), h.n):
        mask = sum(1 << v for v in combo)
        sub, _ = g.induced(mask)
        if brute_is_isomorphic(sub, h):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
