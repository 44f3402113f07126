"""Bounded exhaustive search over labeled graphs for i-graph seeds.

The scan enumerates every labeled simple graph on up to eight vertices by
upper-triangle bitmask (column-major, the graph6 bit order), computes its
family of minimum maximal independent sets inline, and compares the slide
skeleton against the targets through two cheap rejections (set count, then
degree multiset) before paying for a canonical-form check.  Witnesses are
reported in (n, bitmask) order, so results do not depend on how the scan is
sharded across workers.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import Pool

from .errors import InvalidParameterError
from .formats import to_graph6
from .graphs import Graph
from .iso import canonical_key
from .reconfig import build_slide_graph

_SCAN_MAX_N = 8
_CHUNK_BITS = 15


@dataclass(frozen=True)
class SearchReport:
    target: Graph
    max_n: int
    connected_only: bool
    graphs_examined: int
    witnesses: tuple[Graph, ...]
    elapsed: float

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def to_json(self) -> str:
        payload = {
            "target_graph6": to_graph6(self.target),
            "max_n": self.max_n,
            "connected_only": self.connected_only,
            "graphs_examined": self.graphs_examined,
            "witnesses_graph6": [to_graph6(w) for w in self.witnesses],
            "elapsed_seconds": round(self.elapsed, 3),
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def enumerate_labeled_graphs(n: int, connected_only: bool = False):
    """Every labeled simple graph on n vertices exactly once, in
    upper-triangle bitmask order.  Hard-capped at n = 8."""
    if not 1 <= n <= _SCAN_MAX_N:
        raise InvalidParameterError(f"n={n} outside 1..{_SCAN_MAX_N}")
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        rows = _rows_from_mask(n, pairs, mask)
        if connected_only and not _connected(rows, n):
            continue
        yield Graph._from_rows(rows)


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def _rows_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> list[int]:
    rows = [0] * n
    mm = mask
    while mm:
        low = mm & -mm
        u, v = pairs[low.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        mm ^= low
    return rows


def _connected(rows: list[int], n: int) -> bool:
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        mm = frontier
        while mm:
            low = mm & -mm
            grow |= rows[low.bit_length() - 1]
            mm ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == full


def _min_isets(rows: list[int], full: int) -> list[int]:
    """Minimum-size maximal independent sets of the graph given by rows."""
    closed = [rows[v] | (1 << v) for v in range(full.bit_count())]
    sets: list[int] = []
    stack = [(0, 0, 0)]
    while stack:
        chosen, dominated, banned = stack.pop()
        if dominated == full:
            sets.append(chosen)
            continue
        free = ~dominated & full
        v = (free & -free).bit_length() - 1
        cands = closed[v] & ~dominated & ~banned
        ban = banned
        while cands:
            low = cands & -cands
            u = low.bit_length() - 1
            stack.append((chosen | low, dominated | closed[u], ban))
            ban |= low
            cands ^= low
    best = min(s.bit_count() for s in sets)
    return sorted(s for s in sets if s.bit_count() == best)


def _skeleton_rows(isets: list[int], rows: list[int]) -> list[int]:
    m = len(isets)
    size = isets[0].bit_count()
    skel = [0] * m
    for a in range(m):
        sa = isets[a]
        for b in range(a + 1, m):
            sb = isets[b]
            if (sa & sb).bit_count() != size - 1:
                continue
            x = (sa & ~sb).bit_length() - 1
            y = (sb & ~sa).bit_length() - 1
            if rows[x] >> y & 1:
                skel[a] |= 1 << b
                skel[b] |= 1 << a
    return skel


def _prepare_target(t: Graph) -> tuple[int, tuple[int, ...], tuple[int, bytes]]:
    return t.n, t.degree_sequence(), canonical_key(t)


def _scan_chunk(args) -> tuple[int, list[tuple[int, int, int]]]:
    n, start, stop, connected_only, prepared, use_filters = args
    pairs = _pairs(n)
    full = (1 << n) - 1
    counts = {p[0] for p in prepared}
    examined = 0
    hits: list[tuple[int, int, int]] = []
    for mask in range(start, stop):
        rows = _rows_from_mask(n, pairs, mask)
        if connected_only and not _connected(rows, n):
            continue
        examined += 1
        isets = _min_isets(rows, full)
        if use_filters and len(isets) not in counts:
            continue
        skel = None
        degseq = None
        skel_key = None
        for idx, (order, dseq, ckey) in enumerate(prepared):
            if use_filters and len(isets) != order:
                continue
            if skel is None:
                skel = _skeleton_rows(isets, rows)
                degseq = tuple(sorted(r.bit_count() for r in skel))
            if use_filters and degseq != dseq:
                continue
            if skel_key is None:
                skel_key = canonical_key(Graph._from_rows(skel))
            if skel_key == ckey:
                hits.append((n, mask, idx))
    return examined, hits


def _chunks(max_n: int, connected_only: bool, prepared, use_filters):
    for n in range(1, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        step = min(total, 1 << _CHUNK_BITS)
        for start in range(0, total, step):
            yield (n, start, min(start + step, total), connected_only, prepared, use_filters)


def scan_for_targets(
    targets: list[Graph],
    max_n: int,
    connected_only: bool = False,
    jobs: int = 1,
    stop_at_first: bool = False,
    use_filters: bool = True,
) -> list[SearchReport]:
    """One pass over all labeled graphs up to max_n, matched against every
    target at once.  Returns one report per target, witnesses in (n, mask)
    order.  With stop_at_first the scan ends once every target has a witness
    (useful for find-style queries); corroboration scans run to the end."""
    if not 1 <= max_n <= _SCAN_MAX_N:
        raise InvalidParameterError(f"max_n={max_n} outside 1..{_SCAN_MAX_N}")
    for t in targets:
        if t.n > 30:
            raise InvalidParameterError("target order above 30 is out of scope")
    t0 = time.perf_counter()
    prepared = tuple(_prepare_target(t) for t in targets)
    examined = 0
    hits: list[tuple[int, int, int]] = []
    chunk_iter = _chunks(max_n, connected_only, prepared, use_filters)
    if jobs > 1:
        with Pool(jobs) as pool:
            for exa, hh in pool.imap(_scan_chunk, chunk_iter, chunksize=1):
                examined += exa
                hits.extend(hh)
                if stop_at_first and _all_found(hits, len(targets)):
                    break
            pool.close()
    else:
        for chunk in chunk_iter:
            exa, hh = _scan_chunk(chunk)
            examined += exa
            hits.extend(hh)
            if stop_at_first and _all_found(hits, len(targets)):
                break
    elapsed = time.perf_counter() - t0
    reports = []
    for idx, t in enumerate(targets):
        wit = sorted((n, mask) for (n, mask, i) in hits if i == idx)
        graphs = tuple(
            Graph._from_rows(_rows_from_mask(n, _pairs(n), mask)) for n, mask in wit
        )
        reports.append(
            SearchReport(t, max_n, connected_only, examined, graphs, elapsed)
        )
    return reports


def _all_found(hits, count: int) -> bool:
    return len({i for (_, _, i) in hits}) == count


def find_seed(
    target: Graph,
    max_n: int = 7,
    connected_only: bool = False,
    find_all: bool = False,
    jobs: int = 1,
    use_filters: bool = True,
) -> SearchReport:
    """Scan for seeds whose i-graph is isomorphic to the target; the first
    witness in (n, mask) order is kept unless find_all asks for every one."""
    report = scan_for_targets(
        [target],
        max_n,
        connected_only=connected_only,
        jobs=jobs,
        stop_at_first=not find_all,
        use_filters=use_filters,
    )[0]
    if not find_all and report.witnesses:
        report = SearchReport(
            report.target,
            report.max_n,
            report.connected_only,
            report.graphs_examined,
            report.witnesses[:1],
            report.elapsed,
        )
    return report


def confirm_non_realizable(target: Graph, max_n: int = 7, jobs: int = 1) -> SearchReport:
    """Full scan expecting no witness.  An empty report corroborates the
    claim up to the bound; it is never a proof.  A non-empty witness list for
    a graph believed non-realizable means an implementation bug or a wrong
    claim, and callers treat it as fatal."""
    return scan_for_targets([target], max_n, jobs=jobs, stop_at_first=False)[0]


# -- the full realizability table ---------------------------------------

@dataclass(frozen=True)
class TableEntry:
    spec: tuple[int, int, int]
    outcome: str  # "verified" | "exception" | "failed"
    construction_id: str | None
    detail: str


@dataclass(frozen=True)
class TableReport:
    max_total: int
    entries: tuple[TableEntry, ...]
    corroboration: tuple[SearchReport, ...]
    passed: bool
    failures: tuple[str, ...]


def verify_table(max_total: int, corroborate_max_n: int = 7, jobs: int = 1) -> TableReport:
    """Check the realizability table for every theta graph on at most
    max_total vertices: realizable specs must verify end to end, and each
    exception must come back not-realizable and (when corroborate_max_n > 0)
    survive an exhaustive seed scan with zero witnesses."""
    from .graphs import theta
    from .seeds import (
        THETA_EXCEPTIONS,
        build_theta_seed_complement,
        theta_specs_up_to,
        verify_theta_seed,
    )

    if not 3 <= max_total <= 26:
        raise InvalidParameterError("max_total must lie in 3..26")
    entries: list[TableEntry] = []
    failures: list[str] = []
    exception_targets: list[Graph] = []
    for spec in theta_specs_up_to(max_total):
        j, k, l = spec.as_tuple()
        if spec.as_tuple() in THETA_EXCEPTIONS:
            res = build_theta_seed_complement(j, k, l)
            ok = res.verdict == "not_realizable"
            entries.append(
                TableEntry(spec.as_tuple(), "exception" if ok else "failed", None,
                           res.reason or "")
            )
            if not ok:
                failures.append(f"{spec}: expected a not-realizable verdict")
            if spec.order <= 8:
                exception_targets.append(theta(spec))
            continue
        verification = verify_theta_seed(j, k, l)
        if verification.passed:
            entries.append(
                TableEntry(spec.as_tuple(), "verified", verification.construction_id, "")
            )
        else:
            detail = "; ".join(
                f"{c.name}: {c.detail}" for c in verification.failures()
            )
            entries.append(
                TableEntry(spec.as_tuple(), "failed", verification.construction_id, detail)
            )
            failures.append(f"{spec}: {detail}")
    corroboration: tuple[SearchReport, ...] = ()
    if corroborate_max_n > 0 and exception_targets:
        reports = scan_for_targets(exception_targets, corroborate_max_n, jobs=jobs)
        corroboration = tuple(reports)
        for rep in reports:
            if rep.found:
                failures.append(
                    f"FATAL: witness found for claimed non-realizable target "
                    f"{to_graph6(rep.target)}"
                )
    return TableReport(
        max_total, tuple(entries), corroboration, not failures, tuple(failures)
    )
