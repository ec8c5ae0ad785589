"""Lambda_i-paths: sequences in B that agree with a ground-state path far out.

A path is stored as its ground index plus the finite list of leading
entries ``p(0), p(1), ..., p(L-1)``; every later entry is the ground-state
entry.  The Kashiwara operators follow the signature rule on the infinite
sequence.  The infinite ground tail is handled exactly: starting at any
cut ``W >= L`` the tail is periodic with period two, and its reduced
signature is a run of unselectable ones "at infinity" followed by the
surviving zeros of the first period block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cartan import INDICES, AffineWeight, check_index, fundamental_weight
from .crystal import TensorModel, build_graph
from .perfect import B_MODEL, BElem, e_b, f_b, wt_b

INF = None  # position marker for symbols at unbounded index

_GROUND = {
    0: (BElem.Bb2b1, BElem.B12),
    1: (BElem.B2b2, BElem.B2b2),
    2: (BElem.B12, BElem.Bb2b1),
}

# ground index of the path obtained by dropping p(0)
SHIFT_GROUND = {0: 2, 1: 1, 2: 0}


def ground_elem(i: int, k: int) -> BElem:
    check_index(i)
    if k < 0:
        raise ValueError("position must be non-negative")
    return _GROUND[i][k % 2]


_SYMBOLS = {
    0: {BElem.B12: "1", BElem.B1b2: "1", BElem.B2b2: "", BElem.B2b1: "0", BElem.Bb2b1: "0"},
    1: {BElem.B12: "", BElem.B1b2: "00", BElem.B2b2: "10", BElem.B2b1: "11", BElem.Bb2b1: ""},
    2: {BElem.B12: "0", BElem.B1b2: "1", BElem.B2b2: "", BElem.B2b1: "0", BElem.Bb2b1: "1"},
}


def symbols(i: int, b: BElem) -> str:
    check_index(i)
    return _SYMBOLS[i][b]


class Reduced(NamedTuple):
    """Surviving symbols after cancelling every ``01`` pair.

    ``ones`` and ``zeros`` hold indices into the input sequence, in order.
    """

    ones: list[int]
    zeros: list[int]

    def __str__(self):
        return "1" * len(self.ones) + "0" * len(self.zeros)


def reduce_signature(s: Sequence[str]) -> Reduced:
    """Cancel adjacent ``01`` pairs until none remain.

    Repeated deletion of adjacent ``01`` is bracket matching with ``0`` as
    the opening and ``1`` as the closing symbol.
    """
    ones, open_zeros = [], []
    for n, c in enumerate(s):
        if c == "0":
            open_zeros.append(n)
        elif c == "1":
            if open_zeros:
                open_zeros.pop()
            else:
                ones.append(n)
        else:
            raise ValueError(f"signature symbols must be '0' or '1', got {c!r}")
    return Reduced(ones, open_zeros)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathState:
    ground: int
    overrides: tuple[BElem, ...] = ()

    def __post_init__(self):
        check_index(self.ground)
        if self.overrides and self.overrides[-1] == ground_elem(self.ground, len(self.overrides) - 1):
            raise ValueError("PathState is not normalized; use make_path")

    def __getitem__(self, k: int) -> BElem:
        if k < len(self.overrides):
            return self.overrides[k]
        return ground_elem(self.ground, k)

    def __str__(self):
        return format_path(self)


def make_path(ground: int, entries: Sequence[BElem] = ()) -> PathState:
    """Build a normalized path from its leading entries p(0), p(1), ..."""
    entries = list(entries)
    while entries and entries[-1] == ground_elem(ground, len(entries) - 1):
        entries.pop()
    return PathState(ground, tuple(entries))


def ground_path(i: int) -> PathState:
    return PathState(check_index(i))


def _replace(p: PathState, k: int, b: BElem) -> PathState:
    entries = [p[n] for n in range(max(len(p.overrides), k + 1))]
    entries[k] = b
    return make_path(p.ground, entries)


def path_signature(i: int, p: PathState, window: int | None = None):
    """Symbols and owning positions, read left to right (far factors first).

    Position ``INF`` marks the ones that sit at unbounded index.
    """
    check_index(i)
    length = len(p.overrides)
    w = length if window is None else max(window, length)
    block = [(c, w + 1) for c in symbols(i, p[w + 1])] + [(c, w) for c in symbols(i, p[w])]
    red = reduce_signature([c for c, _ in block])
    if len(red.ones) != len(red.zeros):
        raise AssertionError("ground tail is not balanced")
    syms = [("1", INF)] if red.ones else []
    syms += [("0", block[n][1]) for n in red.zeros]
    for k in range(w - 1, -1, -1):
        syms += [(c, k) for c in symbols(i, p[k])]
    return syms


def _reduced(i, p, window):
    syms = path_signature(i, p, window)
    red = reduce_signature([c for c, _ in syms])
    return syms, red


def f_path(i: int, p: PathState, window: int | None = None) -> PathState | None:
    syms, red = _reduced(i, p, window)
    if not red.zeros:
        return None
    k = syms[red.zeros[0]][1]
    return _replace(p, k, f_b(i, p[k]))


def e_path(i: int, p: PathState, window: int | None = None) -> PathState | None:
    syms, red = _reduced(i, p, window)
    if not red.ones:
        return None
    k = syms[red.ones[-1]][1]
    if k is INF:
        return None
    return _replace(p, k, e_b(i, p[k]))


def eps_phi_path(i: int, p: PathState, window: int | None = None) -> tuple[int, int]:
    syms, red = _reduced(i, p, window)
    finite_ones = sum(1 for n in red.ones if syms[n][1] is not INF)
    return finite_ones, len(red.zeros)


def wt_path(p: PathState) -> AffineWeight:
    """Classical weight: Lambda_ground plus the change of wt over the overrides."""
    out = fundamental_weight(p.ground)
    for k, b in enumerate(p.overrides):
        out = out + wt_b(b) - wt_b(ground_elem(p.ground, k))
    return out


def shift(p: PathState) -> PathState:
    """Drop p(0); the result is a path over the shifted ground."""
    return make_path(SHIFT_GROUND[p.ground], p.overrides[1:])


def unshift(q: PathState, b0: BElem) -> PathState:
    ground = SHIFT_GROUND[q.ground]
    return make_path(ground, (b0,) + tuple(q[k] for k in range(len(q.overrides))))


# ---------------------------------------------------------------------------
# literals


class LiteralError(ValueError):
    def __init__(self, msg: str, position: int):
        super().__init__(f"{msg} (at position {position})")
        self.position = position


def format_path(p: PathState) -> str:
    return f"P{p.ground}:" + "|".join(b.value for b in p.overrides)


def parse_path(text: str) -> PathState:
    if len(text) < 3 or text[0] != "P" or text[2] != ":":
        raise LiteralError("path literal must start with 'P<g>:'", 0)
    if text[1] not in "012":
        raise LiteralError(f"bad ground index {text[1]!r}", 1)
    ground = int(text[1])
    body = text[3:]
    entries, starts = [], []
    pos = 3
    if body:
        for token in body.split("|"):
            try:
                entries.append(BElem.parse(token))
            except ValueError:
                raise LiteralError(f"unknown element {token!r}", pos) from None
            starts.append(pos)
            pos += len(token) + 1
    p = make_path(ground, entries)
    if len(p.overrides) != len(entries):
        raise LiteralError("literal is not normalized (trailing ground entries)",
                           starts[len(p.overrides)])
    return p


# ---------------------------------------------------------------------------


class PathModel:
    """Model adapter for the Lambda_i-paths (classical weights)."""

    name = "path"
    affine = False

    def __init__(self, ground: int, window: int | None = None):
        self.ground = check_index(ground)
        self.window = window

    def root(self) -> PathState:
        return ground_path(self.ground)

    def wt(self, p):
        return wt_path(p)

    def eps(self, i, p):
        return eps_phi_path(i, p, self.window)[0]

    def phi(self, i, p):
        return eps_phi_path(i, p, self.window)[1]

    def e(self, i, p):
        return e_path(i, p, self.window)

    def f(self, i, p):
        return f_path(i, p, self.window)

    def key(self, p):
        return format_path(p)


@dataclass
class ShiftReport:
    ground: int
    depth: int
    checked: int
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_shift_decomposition(i: int, depth: int) -> ShiftReport:
    """Check that p -> shift(p) (x) p(0) intertwines the path operators with
    the tensor-product operators on P(Lambda_sigma(i)) (x) B."""
    check_index(i)
    model = PathModel(i)
    tensor = TensorModel(PathModel(SHIFT_GROUND[i]), B_MODEL)
    g = build_graph(model, model.root(), depth, ground=i)
    mismatches = []
    root = model.root()
    if shift(root) != ground_path(SHIFT_GROUND[i]):
        mismatches.append("shift of the ground-state path is not a ground-state path")
    for p in g.elements:
        t = (shift(p), p[0])
        if unshift(*t) != p:
            mismatches.append(f"{format_path(p)}: decomposition does not round-trip")
        for j in INDICES:
            if (model.eps(j, p), model.phi(j, p)) != tensor.eps_phi(j, t):
                mismatches.append(f"{format_path(p)}: eps/phi differ for color {j}")
            if model.wt(p) != tensor.wt(t).cl():
                mismatches.append(f"{format_path(p)}: weight differs")
            for op_path, op_tensor, name in ((model.f, tensor.f, "f"), (model.e, tensor.e, "e")):
                a, b = op_path(j, p), op_tensor(j, t)
                b = None if b is None else unshift(*b)
                if a != b:
                    mismatches.append(
                        f"{format_path(p)}: {name}_{j} gives "
                        f"{a and format_path(a)} vs {b and format_path(b)}")
    return ShiftReport(i, depth, len(g.elements), mismatches)

