"""Maximal independent sets, i(G), alpha(G), and the i-set / alpha-set families.

Enumeration branches on the lowest-index vertex not yet dominated: every
maximal independent set must pick a dominator from that vertex's closed
neighborhood.  Candidates already tried at a branch point are banned deeper
in the tree, so each set is produced exactly once.  Output-sensitive and
allocation-free apart from the result list.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import SetCountCapError
from .graphs import Graph, bits

DEFAULT_SET_CAP = 10**6


def maximal_independent_sets(g: Graph, cap: int = DEFAULT_SET_CAP) -> list[int]:
    """All maximal independent sets of g as bitmasks, in discovery order
    (deterministic).  Raises SetCountCapError beyond ``cap`` sets."""
    full = (1 << g.n) - 1
    adj = g.adj
    closed = [adj[v] | (1 << v) for v in range(g.n)]
    out: list[int] = []

    def branch(chosen: int, dominated: int, banned: int) -> None:
        if dominated == full:
            if len(out) >= cap:
                raise SetCountCapError(f"more than {cap} maximal independent sets")
            out.append(chosen)
            return
        v = (~dominated & full)
        v = (v & -v).bit_length() - 1
        cands = closed[v] & ~dominated & ~banned
        while cands:
            low = cands & -cands
            u = low.bit_length() - 1
            branch(chosen | low, dominated | closed[u], banned)
            banned |= low
            cands ^= low
        return

    branch(0, 0, 0)
    return out


@dataclass(frozen=True)
class IndependenceReport:
    """i(G), alpha(G) and the corresponding set families (bitmask lists)."""

    i: int
    alpha: int
    i_sets: tuple[int, ...]
    alpha_sets: tuple[int, ...]
    total_mis_count: int

    @property
    def well_covered(self) -> bool:
        return self.i == self.alpha


def independence_report(g: Graph, cap: int = DEFAULT_SET_CAP) -> IndependenceReport:
    sets = maximal_independent_sets(g, cap=cap)
    sizes = [s.bit_count() for s in sets]
    i = min(sizes)
    alpha = max(sizes)
    i_sets = tuple(sorted(s for s, k in zip(sets, sizes) if k == i))
    alpha_sets = tuple(sorted(s for s, k in zip(sets, sizes) if k == alpha))
    return IndependenceReport(i, alpha, i_sets, alpha_sets, len(sets))


def i_number(g: Graph) -> int:
    return independence_report(g).i


def triangle_isets_of_complement(gbar: Graph) -> list[int]:
    """Triangles of gbar that are maximal cliques, sorted by bitmask.

    When the smallest maximal clique of gbar has three vertices, these are
    exactly the i-sets of complement(gbar).
    """
    out = []
    for u, v in gbar.edges():
        common = gbar.adj[u] & gbar.adj[v]
        for w in bits(common):
            if w <= v:
                continue
            if gbar.adj[u] & gbar.adj[v] & gbar.adj[w]:
                continue
            out.append((1 << u) | (1 << v) | (1 << w))
    out.sort()
    return out
