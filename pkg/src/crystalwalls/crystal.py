"""Generic crystal machinery.

A *model* is any object exposing ``wt``, ``eps``, ``phi``, ``e``, ``f`` and
``key``, plus the attributes ``name`` and ``affine`` (False when ``wt``
returns classical weights with zero delta coefficient).  Elements are
hashable values; ``None`` plays the role of the zero element.

The functions here generate crystal graphs by breadth-first search from a
root, check the crystal axioms on them, compare two of them by synchronized
traversal, and count weight multiplicities.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Protocol

from .cartan import (
    INDICES,
    SIMPLE_ROOTS,
    AffineWeight,
    check_index,
    pair,
    simple_coroot,
)

DEFAULT_NODE_CAP = 10**6

DOT_COLORS = {0: "red", 1: "blue", 2: "darkgreen"}


class CapacityError(RuntimeError):
    """Raised when graph generation would exceed the node cap."""


class CrystalModel(Protocol):
    name: str
    affine: bool

    def wt(self, x) -> AffineWeight: ...
    def eps(self, i: int, x) -> int: ...
    def phi(self, i: int, x) -> int: ...
    def e(self, i: int, x): ...
    def f(self, i: int, x): ...
    def key(self, x) -> str: ...


def _same_weight(model, a: AffineWeight, b: AffineWeight) -> bool:
    if model.affine:
        return a == b
    return a.cl() == b.cl()


# ---------------------------------------------------------------------------
# tensor products


class TensorModel:
    """The tensor product of two models; elements are pairs ``(left, right)``.

    ``f`` acts on the left factor iff phi_i(left) > eps_i(right), and ``e``
    acts on the left factor iff phi_i(left) >= eps_i(right).
    """

    def __init__(self, left, right, name: str | None = None):
        self.left = left
        self.right = right
        self.affine = left.affine and right.affine
        self.name = name or f"({left.name})x({right.name})"

    def wt(self, t) -> AffineWeight:
        return self.left.wt(t[0]) + self.right.wt(t[1])

    def eps_phi(self, i: int, t) -> tuple[int, int]:
        b1, b2 = t
        h = simple_coroot(i)
        eps = max(self.left.eps(i, b1), self.right.eps(i, b2) - pair(self.left.wt(b1), h))
        phi = max(self.right.phi(i, b2), self.left.phi(i, b1) + pair(self.right.wt(b2), h))
        return eps, phi

    def eps(self, i: int, t) -> int:
        return self.eps_phi(i, t)[0]

    def phi(self, i: int, t) -> int:
        return self.eps_phi(i, t)[1]

    def f(self, i: int, t):
        check_index(i)
        b1, b2 = t
        if self.left.phi(i, b1) > self.right.eps(i, b2):
            y = self.left.f(i, b1)
            return None if y is None else (y, b2)
        y = self.right.f(i, b2)
        return None if y is None else (b1, y)

    def e(self, i: int, t):
        check_index(i)
        b1, b2 = t
        if self.left.phi(i, b1) >= self.right.eps(i, b2):
            y = self.left.e(i, b1)
            return None if y is None else (y, b2)
        y = self.right.e(i, b2)
        return None if y is None else (b1, y)

    def key(self, t) -> str:
        return f"{self.left.key(t[0])} (x) {self.right.key(t[1])}"


def tensor_f(i: int, t, left, right):
    return TensorModel(left, right).f(i, t)


def tensor_e(i: int, t, left, right):
    return TensorModel(left, right).e(i, t)


def tensor_eps_phi(i: int, t, left, right) -> tuple[int, int]:
    return TensorModel(left, right).eps_phi(i, t)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Node:
    id: int
    key: str
    wt: AffineWeight
    frontier: bool


@dataclass
class CrystalGraph:
    model: str
    ground: int | None
    depth: int
    nodes: list[Node]
    edges: list[tuple[int, int, int]]
    elements: list[Any] = field(repr=False, default_factory=list)
    distance: list[int] = field(repr=False, default_factory=list)
    root: int = 0

    def __len__(self):
        return len(self.nodes)

    def out_edges(self) -> dict[tuple[int, int], int]:
        """Map (src, color) -> dst."""
        return {(u, i): v for u, v, i in self.edges}

    def index(self) -> dict[str, int]:
        return {n.key: n.id for n in self.nodes}

    def edge_multiset(self) -> Counter:
        return Counter((self.nodes[u].key, self.nodes[v].key, i) for u, v, i in self.edges)

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "ground": self.ground,
            "depth": self.depth,
            "nodes": [
                {"id": n.id, "key": n.key, "wt": list(n.wt), "frontier": n.frontier}
                for n in self.nodes
            ],
            "edges": [{"from": u, "to": v, "i": i} for u, v, i in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, ensure_ascii=False) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
        for n in self.nodes:
            label = n.key.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{n.id} [label="{label}"];')
        for u, v, i in self.edges:
            lines.append(f'  n{u} -> n{v} [label="{i}", color="{DOT_COLORS[i]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(model, root, depth: int, *, ground: int | None = None,
                node_cap: int = DEFAULT_NODE_CAP) -> CrystalGraph:
    """Breadth-first closure of ``root`` under f_0, f_1, f_2 up to ``depth`` edges.

    Nodes at distance exactly ``depth`` are frontier nodes; their outgoing
    edges are not explored.  Node ids follow discovery order with colors
    scanned 0, 1, 2, so the result is deterministic.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    ids = {model.key(root): 0}
    elements = [root]
    distance = [0]
    edges = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        if distance[u] >= depth:
            continue
        x = elements[u]
        for i in INDICES:
            y = model.f(i, x)
            if y is None:
                continue
            k = model.key(y)
            v = ids.get(k)
            if v is None:
                if len(elements) >= node_cap:
                    raise CapacityError(
                        f"node cap {node_cap} reached at distance {distance[u] + 1}")
                v = len(elements)
                ids[k] = v
                elements.append(y)
                distance.append(distance[u] + 1)
                queue.append(v)
            edges.append((u, v, i))
    nodes = [
        Node(id=n, key=model.key(x), wt=model.wt(x), frontier=distance[n] >= depth)
        for n, x in enumerate(elements)
    ]
    return CrystalGraph(model=model.name, ground=ground, depth=depth, nodes=nodes,
                        edges=edges, elements=elements, distance=distance)


# ---------------------------------------------------------------------------
# axiom checking


@dataclass(frozen=True)
class Violation:
    condition: str
    node: int
    color: int
    detail: str

    def __str__(self):
        return f"({self.condition}) node {self.node} color {self.color}: {self.detail}"


def check_axioms(g: CrystalGraph, model) -> list[Violation]:
    """Check crystal conditions (i)-(iv) on a generated graph.

    (i) is checked on every node; the edge conditions are checked on every
    recorded edge and, for non-frontier nodes, against the model's ``f`` so
    that missing or spurious edges are reported too.
    """
    out = []
    edges = g.out_edges()
    for node in g.nodes:
        x = g.elements[node.id]
        for i in INDICES:
            eps, phi = model.eps(i, x), model.phi(i, x)
            if eps < 0 or phi < 0:
                out.append(Violation("i", node.id, i, f"negative string length {eps}, {phi}"))
            if phi - eps != pair(model.wt(x), simple_coroot(i)):
                out.append(Violation("i", node.id, i,
                                     f"phi - eps = {phi - eps} but <wt, h_{i}> = "
                                     f"{pair(model.wt(x), simple_coroot(i))}"))
            y = model.e(i, x)
            if y is not None:
                if not _same_weight(model, model.wt(y), model.wt(x) + SIMPLE_ROOTS[i]):
                    out.append(Violation("ii", node.id, i, "wt(e_i b) != wt(b) + alpha_i"))
                if model.f(i, y) != x:
                    out.append(Violation("iv", node.id, i, "f_i(e_i b) != b"))
            if node.frontier:
                continue
            target = edges.get((node.id, i))
            fy = model.f(i, x)
            if (target is None) != (fy is None) or (
                    target is not None and g.nodes[target].key != model.key(fy)):
                out.append(Violation("iv", node.id, i, "edge set disagrees with f_i"))
    for u, v, i in g.edges:
        a, b = g.elements[u], g.elements[v]
        if not _same_weight(model, g.nodes[v].wt, g.nodes[u].wt - SIMPLE_ROOTS[i]):
            out.append(Violation("iii", u, i, f"wt drop along edge {u}->{v} is not alpha_{i}"))
        if model.e(i, b) != a:
            out.append(Violation("iv", u, i, f"edge {u}->{v} is not inverted by e_{i}"))
    return out


# ---------------------------------------------------------------------------
# rooted isomorphism


@dataclass
class IsoReport:
    ok: bool
    mapping: dict[int, int]
    mismatch: str = ""

    def __bool__(self):
        return self.ok


def check_root_isomorphism(ga: CrystalGraph, gb: CrystalGraph, model_a, model_b) -> IsoReport:
    """Match two rooted crystal graphs by following f-edges from the roots.

    Since f_i is a partial function, the only candidate morphism fixing the
    roots is forced; this walks it and compares edges, colors, frontier
    flags, eps/phi and weights (classical projections unless both models
    are affine).
    """
    affine = model_a.affine and model_b.affine
    out_a, out_b = ga.out_edges(), gb.out_edges()
    mapping = {ga.root: gb.root}
    used = {gb.root}
    queue = deque([ga.root])

    def fail(msg):
        return IsoReport(False, mapping, msg)

    while queue:
        u = queue.popleft()
        v = mapping[u]
        na, nb = ga.nodes[u], gb.nodes[v]
        wa, wb = (na.wt, nb.wt) if affine else (na.wt.cl(), nb.wt.cl())
        if wa != wb:
            return fail(f"weight mismatch at {na.key} / {nb.key}: {wa} vs {wb}")
        if na.frontier != nb.frontier:
            return fail(f"frontier mismatch at {na.key} / {nb.key}")
        xa, xb = ga.elements[u], gb.elements[v]
        for i in INDICES:
            if (model_a.eps(i, xa), model_a.phi(i, xa)) != (model_b.eps(i, xb), model_b.phi(i, xb)):
                return fail(f"eps/phi mismatch at {na.key} / {nb.key}, color {i}")
            ta, tb = out_a.get((u, i)), out_b.get((v, i))
            if (ta is None) != (tb is None):
                return fail(f"f_{i} defined on only one side at {na.key} / {nb.key}")
            if ta is None:
                continue
            if ta in mapping:
                if mapping[ta] != tb:
                    return fail(f"f_{i} images disagree at {na.key} / {nb.key}")
                continue
            if tb in used:
                return fail(f"map not injective at {gb.nodes[tb].key}")
            mapping[ta] = tb
            used.add(tb)
            queue.append(ta)
    if len(mapping) != len(ga.nodes) or len(used) != len(gb.nodes):
        return fail(f"node counts differ: {len(ga.nodes)} vs {len(gb.nodes)} "
                    f"({len(mapping)} matched)")
    if len(ga.edges) != len(gb.edges):
        return fail(f"edge counts differ: {len(ga.edges)} vs {len(gb.edges)}")
    return IsoReport(True, mapping)


# ---------------------------------------------------------------------------
# multiplicities


def weight_multiplicities(g: CrystalGraph) -> Counter:
    return Counter(n.wt for n in g.nodes)


@dataclass(frozen=True)
class MultiplicityRow:
    weight: AffineWeight
    count: int
    height: int | None
    stable: bool


def root_coordinates(diff: AffineWeight) -> tuple[int, int, int]:
    """Solve diff = m0*alpha_0 + m1*alpha_1 + m2*alpha_2 for affine ``diff``."""
    m0 = diff.delta
    m1 = 2 * m0 - diff.l0
    twice_m2 = diff.l2 + m1
    if twice_m2 % 2:
        raise ValueError(f"{diff} is not in the root lattice")
    m = (m0, m1, twice_m2 // 2)
    check = AffineWeight()
    for i, mi in zip(INDICES, m):
        check = check + mi * SIMPLE_ROOTS[i]
    if check != diff:
        raise ValueError(f"{diff} is not in the root lattice")
    return m


def multiplicity_table(g: CrystalGraph, affine: bool) -> list[MultiplicityRow]:
    """Weight multiplicities sorted by delta-depth, height, then Lambda coefficients.

    For affine models the distance from the root is a function of the weight,
    so a count is final as soon as that distance is within the graph depth.
    Without delta-grading a count is only flagged stable when no node of that
    weight sits on the frontier.
    """
    counts = weight_multiplicities(g)
    top = g.nodes[g.root].wt
    frontier_weights = {n.wt for n in g.nodes if n.frontier}
    rows = []
    for w, c in counts.items():
        if affine:
            height = sum(root_coordinates(top - w))
            stable = height <= g.depth
        else:
            height = None
            stable = w not in frontier_weights
        rows.append(MultiplicityRow(w, c, height, stable))
    rows.sort(key=lambda r: (-r.weight.delta, r.height or 0, tuple(-c for c in r.weight.lambdas)))
    return rows
