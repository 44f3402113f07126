"""Complement-seed constructions for theta graphs, plus deletion surgery,
house and planar seeds, and the verification harness.

Every builder returns the complement seed: a graph gbar whose triangles
that are maximal cliques are the i-sets of G = complement(gbar), adjacent
exactly when they share an edge.  The catalog follows one recipe: a wheel
supplies two of the three pole-to-pole paths of the target theta graph, an
attached path of v-vertices supplies the third, and apex vertices are glued
onto unwanted triangles to knock them out of the i-set family (at the price
of creating a K_4, which bumps alpha to 4 and breaks the alpha-graph
analogue for those arms).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import (
    DeletionPreconditionError,
    InvalidParameterError,
    InvalidThetaSpecError,
    NotBipartiteError,
    NotConnectedError,
    NotCubicError,
    NotPlanarEmbeddingError,
)
from .graphs import Graph, ThetaSpec, bits, mask_of, theta
from .independence import independence_report, triangle_isets_of_complement
from .iso import is_isomorphic
from .linegraphs import seed_from_line_graph
from .planar import RotationSystem, planar_dual, trace_faces
from .reconfig import build_slide_graph

THETA_EXCEPTIONS: dict[tuple[int, int, int], str] = {
    (1, 2, 2): "diamond = theta(1,2,2)",
    (2, 2, 2): "K_{2,3} = theta(2,2,2)",
    (2, 2, 3): "kappa = theta(2,2,3)",
    (2, 2, 4): "theta(2,2,4)",
    (2, 3, 3): "theta(2,3,3)",
    (2, 3, 4): "theta(2,3,4)",
    (3, 3, 3): "theta(3,3,3)",
}

CONSTRUCTION_IDS = (
    "C_1kl", "C_22l_a", "C_22l_b", "C_23l_a", "C_23l_b", "C_244", "C_2k5",
    "C_2kl", "G_334", "C_335", "C_33l", "C_344", "C_34l", "C_355", "C_444",
    "C_jk5", "C_jkl", "HOUSE", "LINE_ROOT", "PLANAR_DUAL",
)


@dataclass(frozen=True)
class ConstructionTrace:
    """Provenance of a seed build: which arm ran, the vertex-name map of the
    complement seed, the labeled i-sets the construction promises, and the
    predicted size and alpha behaviour of the resulting i-graph."""

    construction_id: str
    params: tuple[int, int, int] | None
    names: dict[str, int]
    expected_labels: dict[str, int]
    expected_order: int
    alpha_equal: bool
    expected_i: int = 3
    expected_alpha: int = 3

    def to_json(self) -> str:
        payload = {
            "construction_id": self.construction_id,
            "params": list(self.params) if self.params else None,
            "names": self.names,
            "expected_labels": {
                k: sorted(bits(m)) for k, m in self.expected_labels.items()
            },
            "expected_order": self.expected_order,
            "alpha_equal": self.alpha_equal,
            "expected_i": self.expected_i,
            "expected_alpha": self.expected_alpha,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


@dataclass(frozen=True)
class SeedResult:
    verdict: str  # "realizable" | "not_realizable" | "invalid_spec"
    gbar: Graph | None = None
    trace: ConstructionTrace | None = None
    reason: str | None = None

    @property
    def is_realizable(self) -> bool:
        return self.verdict == "realizable"


# -- named drafts ------------------------------------------------------

_NAME_CLASS = {"w": 1, "u": 2, "v": 3, "z": 4}


def _name_key(name: str) -> tuple[int, int]:
    if name == "w0":
        return (0, 0)
    m = re.fullmatch(r"([wuvz])(\d*)('?)", name)
    if not m:
        raise InvalidParameterError(f"unexpected vertex name {name!r}")
    cls = _NAME_CLASS[m.group(1)]
    num = int(m.group(2)) if m.group(2) else 0
    return (cls, 2 * num + (1 if m.group(3) else 0))


class _Draft:
    """Mutable named graph used while assembling a construction; frozen into
    an ordinary Graph with the canonical order hub, rim, subdivision
    vertices, path vertices, apexes, so seed output is byte-stable."""

    def __init__(self):
        self._adj: dict[str, set[str]] = {}
        self.rim: list[str] = []

    def add(self, name: str) -> None:
        if name in self._adj:
            raise InvalidParameterError(f"duplicate vertex {name}")
        self._adj[name] = set()

    def edge(self, a: str, b: str) -> None:
        self._adj[a].add(b)
        self._adj[b].add(a)

    def delete_edge(self, a: str, b: str) -> None:
        self._adj[a].discard(b)
        self._adj[b].discard(a)

    def delete(self, name: str) -> None:
        for other in self._adj.pop(name):
            self._adj[other].discard(name)

    def subdivide(self, a: str, b: str, new: str) -> None:
        if b not in self._adj[a]:
            raise InvalidParameterError(f"cannot subdivide missing edge {a}-{b}")
        self.delete_edge(a, b)
        self.add(new)
        self.edge(a, new)
        self.edge(new, b)
        if a in self.rim and b in self.rim:
            ia, ib = self.rim.index(a), self.rim.index(b)
            m = len(self.rim)
            if (ia + 1) % m == ib:
                self.rim.insert(ib, new)
            elif (ib + 1) % m == ia:
                self.rim.insert(ia, new)

    def freeze(self, order: list[str] | None = None) -> tuple[Graph, dict[str, int]]:
        if order is None:
            order = sorted(self._adj, key=_name_key)
        names = {name: i for i, name in enumerate(order)}
        edges = []
        for a, nbrs in self._adj.items():
            for b in nbrs:
                if names[a] < names[b]:
                    edges.append((names[a], names[b]))
        return Graph(len(order), sorted(edges)), names


def _wheel_draft(rim_count: int) -> _Draft:
    d = _Draft()
    d.add("w0")
    rim = [f"w{i}" for i in range(1, rim_count + 1)]
    for name in rim:
        d.add(name)
        d.edge("w0", name)
    for i, name in enumerate(rim):
        d.edge(name, rim[(i + 1) % rim_count])
    d.rim = rim
    return d


def _chain_subdivide(d: _Draft, anchor: str, other: str, new_names: list[str]) -> None:
    """Repeatedly subdivide the edge between anchor and the newest vertex,
    joining each new vertex to the hub."""
    cur = other
    for name in new_names:
        d.subdivide(anchor, cur, name)
        d.edge("w0", name)
        cur = name


def _wheel_side_labels(
    rim: list[str], x_pair: tuple[str, str], y_pair: tuple[str, str]
) -> dict[str, tuple[str, ...]]:
    """Name the wheel triangles: X at x_pair, Y at y_pair, A_* walking forward
    from X, B_* walking backward."""
    m = len(rim)
    ix = next(
        i for i in range(m) if {rim[i], rim[(i + 1) % m]} == set(x_pair)
    )
    labels: dict[str, tuple[str, ...]] = {
        "X": ("w0", rim[ix], rim[(ix + 1) % m]),
        "Y": ("w0",) + tuple(y_pair),
    }
    want = set(y_pair)
    fwd = []
    i = (ix + 1) % m
    for _ in range(m):
        if {rim[i], rim[(i + 1) % m]} == want:
            break
        fwd.append(("w0", rim[i], rim[(i + 1) % m]))
        i = (i + 1) % m
    else:
        raise InvalidParameterError(f"pair {y_pair} not adjacent on the rim")
    bwd = []
    i = ix
    for _ in range(m):
        if {rim[(i - 1) % m], rim[i % m]} == want:
            break
        bwd.append(("w0", rim[(i - 1) % m], rim[i % m]))
        i -= 1
    for tag, side in (("A", fwd), ("B", bwd)):
        if len(side) == 1:
            labels[tag] = side[0]
        else:
            for idx, triple in enumerate(side, start=1):
                labels[f"{tag}_{idx}"] = triple
    return labels


def _finish(
    construction_id: str,
    spec: ThetaSpec,
    d: _Draft,
    label_names: dict[str, tuple[str, ...]],
    alpha_equal: bool,
    expected_alpha: int,
) -> SeedResult:
    gbar, names = d.freeze()
    labels = {
        tag: mask_of(names[v] for v in triple) for tag, triple in label_names.items()
    }
    trace = ConstructionTrace(
        construction_id=construction_id,
        params=spec.as_tuple(),
        names=names,
        expected_labels=labels,
        expected_order=spec.order,
        alpha_equal=alpha_equal,
        expected_i=3,
        expected_alpha=expected_alpha,
    )
    return SeedResult("realizable", gbar, trace)


# -- path-family label recipes -----------------------------------------

def _d_labels_1kl(l: int) -> dict[str, tuple[str, ...]]:
    out = {"D_1": ("w2", "w1", "v1")}
    for i in range(2, l - 1):
        out[f"D_{i}"] = ("w2", f"v{i - 1}", f"v{i}")
    out[f"D_{l - 1}"] = ("w2", f"v{l - 2}", "w3")
    return out


def _d_labels_long_tail(l: int, hook: str, corner: str) -> dict[str, tuple[str, ...]]:
    """Tail pattern shared by the 2,2,l / 2,3,l / 2,k,l and 3,3,l / j,k,l arms:
    a w1-fanned path ending in a triangle that hands off through hook to the
    corner pair of the wheel."""
    out = {"D_1": ("w1", "w2", "v1")}
    for i in range(2, l - 3):
        out[f"D_{i}"] = ("w1", f"v{i - 1}", f"v{i}")
    out[f"D_{l - 3}"] = (f"v{l - 5}", f"v{l - 4}", f"v{l - 3}")
    out[f"D_{l - 2}"] = (hook, f"v{l - 4}", f"v{l - 3}")
    out[f"D_{l - 1}"] = (corner, hook, f"v{l - 3}")
    return out


_D_SHORT = {
    "D_1": ("w1", "w2", "v1"),
    "D_2": ("w2", "v1", "v2"),
    "D_3": ("w4", "v1", "v2"),
    "D_4": ("w3", "w4", "v2"),
}

_D_MID = {
    "D_1": ("w1", "w2", "v1"),
    "D_2": ("w2", "v1", "v2"),
    "D_3": ("w5", "v1", "v2"),
    "D_4": ("w4", "w5", "v2"),
}

_D_FLAP = {
    "D_1": ("w1", "w2", "v"),
    "D_2": ("w1", "w4", "v"),
    "D_3": ("w3", "w4", "v"),
}


# -- the construction catalog ------------------------------------------

def _draft_1kl(k: int, l: int) -> _Draft:
    d = _wheel_draft(k + 1)
    vs = [f"v{i}" for i in range(1, l - 1)]
    prev = None
    for name in vs:
        d.add(name)
        d.edge("w2", name)
        if prev:
            d.edge(prev, name)
        prev = name
    d.edge("v1", "w1")
    d.edge(vs[-1], "w3")
    return d


def _build_1kl(spec: ThetaSpec) -> SeedResult:
    _, k, l = spec.as_tuple()
    d = _draft_1kl(k, l)
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w2", "w3"))
    labels.update(_d_labels_1kl(l))
    return _finish("C_1kl", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _draft_22l_a(l: int) -> _Draft:
    d = _wheel_draft(4)
    vs = [f"v{i}" for i in range(1, l - 2)]
    prev = None
    for name in vs:
        d.add(name)
        if prev:
            d.edge(prev, name)
        prev = name
    for i in range(1, l - 3):
        d.edge("w1", f"v{i}")
    d.edge(f"v{l - 5}", f"v{l - 3}")
    d.edge("w2", "v1")
    d.edge("w3", f"v{l - 3}")
    d.edge("w4", f"v{l - 4}")
    d.edge("w4", f"v{l - 3}")
    d.add("z")
    for x in ("w1", "w4", f"v{l - 4}"):
        d.edge("z", x)
    return d


def _draft_22l_b() -> _Draft:
    d = _wheel_draft(4)
    for name in ("v1", "v2"):
        d.add(name)
    d.edge("v1", "v2")
    d.edge("w1", "v1")
    d.edge("w2", "v1")
    d.edge("w2", "v2")
    d.edge("w3", "v2")
    d.edge("w4", "v1")
    d.edge("w4", "v2")
    d.add("z1")
    for x in ("v1", "w1", "w4"):
        d.edge("z1", x)
    d.add("z2")
    for x in ("v2", "w2", "w3"):
        d.edge("z2", x)
    return d


def _build_22l(spec: ThetaSpec) -> SeedResult:
    l = spec.l
    if l >= 6:
        d = _draft_22l_a(l)
        arm = "C_22l_a"
        dd = _d_labels_long_tail(l, hook="w4", corner="w3")
    else:
        d = _draft_22l_b()
        arm = "C_22l_b"
        dd = dict(_D_SHORT)
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(dd)
    return _finish(arm, spec, d, labels, alpha_equal=False, expected_alpha=4)


def _draft_23l(l: int) -> _Draft:
    if l >= 6:
        d = _draft_22l_a(l)
        d.subdivide("w1", "w4", "w5")
        d.edge("w0", "w5")
        d.delete("z")
    else:
        d = _draft_22l_b()
        d.subdivide("w1", "w4", "w5")
        d.edge("w0", "w5")
        d.delete("z1")
    return d


def _build_23l(spec: ThetaSpec) -> SeedResult:
    l = spec.l
    d = _draft_23l(l)
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    if l >= 6:
        labels.update(_d_labels_long_tail(l, hook="w4", corner="w3"))
        return _finish("C_23l_a", spec, d, labels, alpha_equal=True, expected_alpha=3)
    labels.update(_D_SHORT)
    return _finish("C_23l_b", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _draft_244() -> _Draft:
    d = _wheel_draft(6)
    d.edge("w1", "w4")
    d.add("v")
    for x in ("w1", "w2", "w3", "w4"):
        d.edge("v", x)
    d.add("z")
    for x in ("v", "w2", "w3"):
        d.edge("z", x)
    d.add("z'")
    for x in ("w0", "w1", "w4"):
        d.edge("z'", x)
    return d


def _build_244(spec: ThetaSpec) -> SeedResult:
    d = _draft_244()
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_D_FLAP)
    return _finish("C_244", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _draft_2k5(k: int) -> _Draft:
    d = _draft_23l(5)
    _chain_subdivide(d, "w1", "w5", [f"w{i}" for i in range(6, k + 3)])
    return d


def _build_2k5(spec: ThetaSpec) -> SeedResult:
    d = _draft_2k5(spec.k)
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_D_SHORT)
    return _finish("C_2k5", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _build_2kl(spec: ThetaSpec) -> SeedResult:
    k, l = spec.k, spec.l
    d = _draft_23l(l)
    _chain_subdivide(d, "w1", "w5", [f"w{i}" for i in range(6, k + 3)])
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_d_labels_long_tail(l, hook="w4", corner="w3"))
    return _finish("C_2kl", spec, d, labels, alpha_equal=True, expected_alpha=3)


def seed_graph_334() -> Graph:
    """The 9-vertex graph whose i-graph is theta(3,3,4), given directly
    rather than through a wheel complement."""
    v = list(range(9))
    edges = [
        (v[0], v[1]), (v[0], v[2]), (v[0], v[3]), (v[0], v[4]), (v[0], v[7]),
        (v[1], v[2]), (v[2], v[3]), (v[3], v[4]), (v[4], v[1]),
        (v[1], v[5]), (v[2], v[5]),
        (v[3], v[6]), (v[4], v[6]),
        (v[1], v[7]), (v[4], v[7]),
        (v[7], v[8]),
    ]
    return Graph(9, edges)


_G334_LABELS = {
    "X": (2, 6, 8),
    "Y": (3, 5, 8),
    "A_1": (2, 4, 8),
    "A_2": (4, 5, 8),
    "B_1": (1, 6, 8),
    "B_2": (1, 3, 8),
    "D_1": (2, 6, 7),
    "D_2": (5, 6, 7),
    "D_3": (3, 5, 7),
}


def _build_334(spec: ThetaSpec) -> SeedResult:
    g = seed_graph_334()
    gbar = g.complement()
    names = {f"v{i}": i for i in range(9)}
    labels = {tag: mask_of(vs) for tag, vs in _G334_LABELS.items()}
    trace = ConstructionTrace(
        construction_id="G_334",
        params=spec.as_tuple(),
        names=names,
        expected_labels=labels,
        expected_order=spec.order,
        alpha_equal=False,
        expected_i=3,
        expected_alpha=4,
    )
    return SeedResult("realizable", gbar, trace)


def _draft_335() -> _Draft:
    d = _wheel_draft(6)
    d.add("v1")
    d.add("v2")
    d.edge("v1", "v2")
    for x in ("w1", "w2", "w5"):
        d.edge("v1", x)
    for x in ("w2", "w4", "w5"):
        d.edge("v2", x)
    return d


def _build_335(spec: ThetaSpec) -> SeedResult:
    d = _draft_335()
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w4", "w5"))
    labels.update(_D_MID)
    return _finish("C_335", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _draft_33l(l: int) -> _Draft:
    d = _wheel_draft(6)
    vs = [f"v{i}" for i in range(1, l - 2)]
    prev = None
    for name in vs:
        d.add(name)
        if prev:
            d.edge(prev, name)
        prev = name
    for i in range(1, l - 3):
        d.edge("w1", f"v{i}")
    d.edge("w2", "v1")
    d.edge("w4", f"v{l - 3}")
    d.edge("w5", f"v{l - 4}")
    d.edge("w5", f"v{l - 3}")
    d.edge(f"v{l - 5}", f"v{l - 3}")
    return d


def _build_33l(spec: ThetaSpec) -> SeedResult:
    d = _draft_33l(spec.l)
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w4", "w5"))
    labels.update(_d_labels_long_tail(spec.l, hook="w5", corner="w4"))
    return _finish("C_33l", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _draft_344() -> _Draft:
    d = _draft_244()
    d.subdivide("w2", "w3", "u1")
    d.edge("w0", "u1")
    d.delete("z")
    return d


def _build_344(spec: ThetaSpec) -> SeedResult:
    d = _draft_344()
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_D_FLAP)
    return _finish("C_344", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _build_34l(spec: ThetaSpec) -> SeedResult:
    d = _draft_344()
    _chain_subdivide(d, "w1", "w6", [f"w{i}" for i in range(7, spec.l + 3)])
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_D_FLAP)
    return _finish("C_34l", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _build_355(spec: ThetaSpec) -> SeedResult:
    d = _draft_335()
    _chain_subdivide(d, "w1", "w6", ["w7", "w8"])
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w4", "w5"))
    labels.update(_D_MID)
    return _finish("C_355", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _build_444(spec: ThetaSpec) -> SeedResult:
    d = _draft_344()
    d.subdivide("u1", "w3", "u2")
    d.edge("w0", "u2")
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w3", "w4"))
    labels.update(_D_FLAP)
    return _finish("C_444", spec, d, labels, alpha_equal=False, expected_alpha=4)


def _build_jk5(spec: ThetaSpec) -> SeedResult:
    j, k, _ = spec.as_tuple()
    d = _draft_335()
    _chain_subdivide(d, "w1", "w6", [f"w{i}" for i in range(7, k + 4)])
    _chain_subdivide(d, "w2", "w3", [f"u{i}" for i in range(1, j - 2)])
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w4", "w5"))
    labels.update(_D_MID)
    return _finish("C_jk5", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _build_jkl(spec: ThetaSpec) -> SeedResult:
    j, k, l = spec.as_tuple()
    d = _draft_33l(l)
    _chain_subdivide(d, "w1", "w6", [f"w{i}" for i in range(7, k + 4)])
    _chain_subdivide(d, "w2", "w3", [f"u{i}" for i in range(1, j - 2)])
    labels = _wheel_side_labels(d.rim, ("w1", "w2"), ("w4", "w5"))
    labels.update(_d_labels_long_tail(l, hook="w5", corner="w4"))
    return _finish("C_jkl", spec, d, labels, alpha_equal=True, expected_alpha=3)


def _build_line_root(spec: ThetaSpec) -> SeedResult:
    target = theta(spec)
    seed = seed_from_line_graph(target)
    gbar = seed.complement()
    trace = ConstructionTrace(
        construction_id="LINE_ROOT",
        params=spec.as_tuple(),
        names={f"c{i}": i for i in range(gbar.n)},
        expected_labels={},
        expected_order=spec.order,
        alpha_equal=True,
        expected_i=2,
        expected_alpha=2,
    )
    return SeedResult("realizable", gbar, trace)


_BUILDERS = {
    "C_1kl": _build_1kl,
    "C_22l_a": _build_22l,
    "C_22l_b": _build_22l,
    "C_23l_a": _build_23l,
    "C_23l_b": _build_23l,
    "C_244": _build_244,
    "C_2k5": _build_2k5,
    "C_2kl": _build_2kl,
    "G_334": _build_334,
    "C_335": _build_335,
    "C_33l": _build_33l,
    "C_344": _build_344,
    "C_34l": _build_34l,
    "C_355": _build_355,
    "C_444": _build_444,
    "C_jk5": _build_jk5,
    "C_jkl": _build_jkl,
    "LINE_ROOT": _build_line_root,
}


def applicable_constructions(spec: ThetaSpec) -> list[str]:
    """Construction arms covering a realizable spec, most specific first."""
    j, k, l = spec.as_tuple()
    if (j, k, l) in THETA_EXCEPTIONS:
        return []
    arms = []
    if j == 1 and k == 2:
        arms.append("LINE_ROOT")
    if j == 1 and k >= 3:
        arms.append("C_1kl")
    if (j, k) == (2, 2) and l == 5:
        arms.append("C_22l_b")
    if (j, k) == (2, 2) and l >= 6:
        arms.append("C_22l_a")
    if (j, k) == (2, 3) and l == 5:
        arms.append("C_23l_b")
    if (j, k) == (2, 3) and l >= 6:
        arms.append("C_23l_a")
    if (j, k, l) == (2, 4, 4):
        arms.append("C_244")
    if j == 2 and k in (4, 5) and l == 5:
        arms.append("C_2k5")
    if (j, k, l) == (3, 3, 4):
        arms.append("G_334")
    if (j, k, l) == (3, 3, 5):
        arms.append("C_335")
    if (j, k) == (3, 3) and l >= 6:
        arms.append("C_33l")
    if (j, k, l) == (3, 4, 4):
        arms.append("C_344")
    if (j, k) == (3, 4) and l >= 5:
        arms.append("C_34l")
    if (j, k, l) == (3, 5, 5):
        arms.append("C_355")
    if (j, k, l) == (4, 4, 4):
        arms.append("C_444")
    if 4 <= j <= k <= 5 and l == 5:
        arms.append("C_jk5")
    if j == 2 and k >= 4 and l >= 6:
        arms.append("C_2kl")
    if j >= 3 and l >= 6:
        arms.append("C_jkl")
    return arms


def theta_specs_up_to(max_order: int) -> list[ThetaSpec]:
    """All valid (j,k,l) with j+k+l-1 <= max_order, exceptions included."""
    out = []
    for j in range(1, max_order + 1):
        for k in range(max(j, 2) if j == 1 else j, max_order + 1):
            for l in range(k, max_order + 1):
                if j + k + l - 1 > max_order:
                    break
                out.append(ThetaSpec(j, k, l))
    return out


def build_theta_seed_complement(
    j: int, k: int, l: int, construction: str | None = None
) -> SeedResult:
    """Complement seed gbar for theta(j,k,l); the caller complements it to
    get the seed G itself.  The seven known exceptions come back as
    not_realizable; malformed triples as invalid_spec."""
    try:
        spec = ThetaSpec(j, k, l)
    except InvalidThetaSpecError as exc:
        return SeedResult("invalid_spec", reason=str(exc))
    if spec.as_tuple() in THETA_EXCEPTIONS:
        return SeedResult(
            "not_realizable", reason=THETA_EXCEPTIONS[spec.as_tuple()]
        )
    arms = applicable_constructions(spec)
    if construction is not None:
        if construction not in arms:
            return SeedResult(
                "invalid_spec",
                reason=f"{construction} does not cover {spec}; options: {arms}",
            )
        chosen = construction
    else:
        chosen = arms[0]
    return _BUILDERS[chosen](spec)


# -- verification -------------------------------------------------------

@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SeedVerification:
    spec: ThetaSpec
    construction_id: str
    passed: bool
    clauses: tuple[ClauseResult, ...]
    gbar: Graph

    def failures(self) -> list[ClauseResult]:
        return [c for c in self.clauses if not c.passed]


def verify_theta_seed(
    j: int, k: int, l: int, construction: str | None = None
) -> SeedVerification:
    """Build the seed and check every promise the construction makes:
    i value, i-graph order, isomorphism to the target theta graph, the
    labeled i-sets, and the alpha-graph behaviour."""
    result = build_theta_seed_complement(j, k, l, construction=construction)
    if not result.is_realizable:
        raise InvalidParameterError(
            f"theta({j},{k},{l}) has no seed here: {result.reason}"
        )
    spec = ThetaSpec(j, k, l)
    gbar, trace = result.gbar, result.trace
    g = gbar.complement()
    report = independence_report(g)
    target = theta(spec)
    clauses = []

    clauses.append(
        ClauseResult(
            "i_value",
            report.i == trace.expected_i,
            f"i(G)={report.i}, expected {trace.expected_i}",
        )
    )
    sg = build_slide_graph(g, list(report.i_sets))
    clauses.append(
        ClauseResult(
            "i_graph_order",
            sg.node_count() == trace.expected_order,
            f"|V(I(G))|={sg.node_count()}, expected {trace.expected_order}",
        )
    )
    clauses.append(
        ClauseResult(
            "i_graph_isomorphic",
            is_isomorphic(sg.skeleton, target),
            f"skeleton vs {spec}",
        )
    )
    missing = [
        tag for tag, m in trace.expected_labels.items() if m not in report.i_sets
    ]
    clauses.append(
        ClauseResult(
            "labels_present",
            not missing,
            "all labeled sets found" if not missing else f"missing {missing}",
        )
    )
    clauses.append(
        ClauseResult(
            "alpha_value",
            report.alpha == trace.expected_alpha,
            f"alpha(G)={report.alpha}, expected {trace.expected_alpha}",
        )
    )
    ag = build_slide_graph(g, list(report.alpha_sets))
    if trace.alpha_equal:
        clauses.append(
            ClauseResult(
                "alpha_graph_isomorphic",
                is_isomorphic(ag.skeleton, target),
                "alpha-graph matches the theta target",
            )
        )
    else:
        clauses.append(
            ClauseResult(
                "alpha_graph_differs",
                not is_isomorphic(ag.skeleton, target),
                "alpha-graph must not match the i-graph on these arms",
            )
        )
    passed = all(c.passed for c in clauses)
    return SeedVerification(spec, trace.construction_id, passed, tuple(clauses), gbar)


# -- house fixture ------------------------------------------------------

def house_seed() -> tuple[Graph, ConstructionTrace]:
    """Path a-b-c plus triangle c,d,e; its five i-sets slide into the house."""
    names = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4}
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
    labels = {
        "ac": mask_of((0, 2)),
        "ad": mask_of((0, 3)),
        "ae": mask_of((0, 4)),
        "bd": mask_of((1, 3)),
        "be": mask_of((1, 4)),
    }
    trace = ConstructionTrace(
        construction_id="HOUSE",
        params=(1, 2, 3),
        names=names,
        expected_labels=labels,
        expected_order=5,
        alpha_equal=True,
        expected_i=2,
        expected_alpha=2,
    )
    return g, trace


# -- deletion surgery ---------------------------------------------------

def apply_deletion(gbar: Graph, t: int) -> Graph:
    """Glue a new apex onto the triangle t of gbar, removing t from the
    i-set family of complement(gbar) and changing nothing else.

    t must be a maximal-clique triangle that is currently an i-set of the
    complement, and at least one other i-set must remain.
    """
    if t & ~gbar.full_mask():
        raise DeletionPreconditionError("target uses vertices outside the graph")
    vs = list(bits(t))
    if len(vs) != 3:
        raise DeletionPreconditionError("target must be a triangle (three vertices)")
    a, b, c = vs
    if not (gbar.has_edge(a, b) and gbar.has_edge(a, c) and gbar.has_edge(b, c)):
        raise DeletionPreconditionError("target vertices are not mutually adjacent")
    if gbar.adj[a] & gbar.adj[b] & gbar.adj[c]:
        raise DeletionPreconditionError("triangle sits inside a larger clique")
    report = independence_report(gbar.complement())
    if t not in report.i_sets:
        raise DeletionPreconditionError("triangle is not an i-set of the complement")
    if len(report.i_sets) < 2:
        raise DeletionPreconditionError("removing the only i-set would change i(G)")
    rows = list(gbar.adj)
    apex = 1 << gbar.n
    new_row = 0
    for v in vs:
        rows[v] |= apex
        new_row |= 1 << v
    rows.append(new_row)
    return Graph._from_rows(rows)


# -- planar seeds -------------------------------------------------------

def planar_seed(g: Graph, rot: RotationSystem) -> Graph:
    """Seed H = complement(dual) for a cubic 3-connected bipartite planar g.

    Every face triple meeting at a vertex of g is a triangle of the dual and
    a maximal clique there, so i(H) = alpha(H) = 3 and the i-graph of H
    contains g as an induced subgraph (extras, if any, are removable with
    apply_deletion).
    """
    return planar_seed_with_trace(g, rot)[0]


def planar_seed_with_trace(
    g: Graph, rot: RotationSystem
) -> tuple[Graph, ConstructionTrace]:
    """planar_seed plus a trace: dual vertices named f0, f1, ... in face-trace
    order, with one labeled i-set per vertex of g (the three faces meeting
    there)."""
    if not g.is_connected():
        raise NotConnectedError("planar seed needs a connected graph")
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise NotCubicError("planar seed needs a cubic graph")
    if not g.is_bipartite():
        raise NotBipartiteError("planar seed needs a bipartite graph")
    faces = trace_faces(g, rot)
    if g.n - g.edge_count() + len(faces) != 2:
        raise NotPlanarEmbeddingError("rotation does not describe a sphere embedding")
    dual = planar_dual(g, rot)
    corners: dict[int, int] = {}
    for fi, face in enumerate(faces):
        for _, v in face:
            corners[v] = corners.get(v, 0) | (1 << fi)
    # the dual is K_4-free with every edge on a facial triangle, so the
    # i-sets of the seed are exactly the dual's triangles: the g.n corner
    # triples plus any non-facial extras
    trace = ConstructionTrace(
        construction_id="PLANAR_DUAL",
        params=None,
        names={f"f{i}": i for i in range(len(faces))},
        expected_labels={f"v{v}": corners[v] for v in range(g.n)},
        expected_order=len(triangle_isets_of_complement(dual)),
        alpha_equal=True,
        expected_i=3,
        expected_alpha=3,
    )
    return dual.complement(), trace
