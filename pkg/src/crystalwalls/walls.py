"""Young walls for the basic representations of type C_2^(1).

Geometry
--------
Every column of a wall stacks, bottom to top, a *layer* (a 0-block and a
2-block side by side, each of half thickness), then two 1-blocks (half
height, full thickness), then a layer, then two 1-blocks, and so on.  On
Y_{Lambda_0} and Y_{Lambda_2} the bottom layer already holds one ground
half-block; on Y_{Lambda_1} the ground is a single 1-block.  A column is
therefore determined by ``n``, the number of blocks added on top of the
ground, together with the color of the top half-block when the top layer
is half filled.  ``phase`` below names the top of a column:

    0  half-filled layer ("lone" 0 or 2)
    1  complete layer
    2  one 1-block above a layer
    3  two 1-blocks above a layer

Columns are indexed from the right: column 0 is the right-most one.
Within a wall the 0- and 2-blocks alternate sides from column to column,
so two half-filled layers at the same height in adjacent columns occupy
the same side exactly when their colors differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cartan import INDICES, AffineWeight, check_index, from_root_coordinates, fundamental_weight
from .paths import LiteralError, PathState, make_path, reduce_signature
from .perfect import BElem

LONE, LAYER, ONE_UP, TWO_UP = range(4)


def other(c: int) -> int:
    return 2 - c


def ground_color(ground: int, j: int) -> int | None:
    """Color of the ground half-block under column j (None on Lambda_1)."""
    if ground == 1:
        return None
    first = 2 if ground == 0 else 0
    return first if j % 2 == 0 else other(first)


def _offset(ground: int) -> int:
    return 2 if ground == 1 else 0


class Column(NamedTuple):
    n: int = 0
    tag: int | None = None

    def phase(self, ground: int) -> int:
        return (self.n + _offset(ground)) % 4


BARE = Column()


def column_ok(ground: int, col: Column) -> bool:
    if col.n < 0:
        return False
    lone_above_ground = col.phase(ground) == LONE and not (ground != 1 and col.n == 0)
    if lone_above_ground:
        return col.tag in (0, 2)
    return col.tag is None


def top_color(ground: int, j: int, col: Column) -> int | None:
    """Color of the lone top half-block, or None if the top is not half filled."""
    if col.phase(ground) != LONE:
        return None
    if col.n == 0:
        return ground_color(ground, j)
    return col.tag


def is_full(col: Column, ground: int) -> bool:
    """Height a whole number of units with a full-thickness top."""
    return col.n % 2 == 1


def add_block(ground: int, j: int, col: Column, i: int) -> Column | None:
    """Stack an i-block on the column, or None if the building rules forbid it."""
    ph = col.phase(ground)
    if ph == LONE:
        return Column(col.n + 1) if i == other(top_color(ground, j, col)) else None
    if ph in (LAYER, ONE_UP):
        return Column(col.n + 1) if i == 1 else None
    return Column(col.n + 1, i) if i in (0, 2) else None


def remove_block(ground: int, j: int, col: Column, i: int) -> Column | None:
    """Take an i-block off the top of the column; ground blocks never move."""
    if col.n == 0:
        return None
    ph = col.phase(ground)
    if ph == LONE:
        return Column(col.n - 1) if i == col.tag else None
    if ph == LAYER:
        if i not in (0, 2):
            return None
        if ground != 1 and col.n == 1:
            # only the added half of the bottom layer is removable
            return Column(0) if i == other(ground_color(ground, j)) else None
        return Column(col.n - 1, other(i))
    return Column(col.n - 1) if i == 1 else None


def added_blocks(ground: int, j: int, col: Column) -> list[int]:
    """Added block colors bottom to top; complete upper layers list 0 first."""
    out = []
    cur = BARE
    while cur.n < col.n:
        ph = cur.phase(ground)
        if ph == LONE:
            c = other(top_color(ground, j, cur))
        elif ph in (LAYER, ONE_UP):
            c = 1
        elif cur.n + 1 == col.n:
            c = col.tag
        else:
            c = 0
        out.append(c)
        cur = add_block(ground, j, cur, c)
    return out


def block_census(ground: int, j: int, col: Column) -> tuple[int, int, int]:
    blocks = added_blocks(ground, j, col)
    return tuple(blocks.count(c) for c in INDICES)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Wall:
    ground: int
    columns: tuple[Column, ...] = ()

    def column(self, j: int) -> Column:
        return self.columns[j] if j < len(self.columns) else BARE

    def __str__(self):
        return format_wall(self)


def make_wall(ground: int, columns: Sequence = ()) -> Wall:
    cols = [Column(*c) for c in columns]
    while cols and cols[-1].n == 0:
        cols.pop()
    return Wall(check_index(ground), tuple(cols))


def ground_wall(i: int) -> Wall:
    return Wall(check_index(i))


def _with_column(w: Wall, j: int, col: Column) -> Wall:
    cols = list(w.columns) + [BARE] * (j + 1 - len(w.columns))
    cols[j] = col
    return make_wall(w.ground, cols)


def _pair_ok(ground: int, j: int, right: Column, left: Column) -> bool:
    """Rule: no free space to the right of any block of column j+1."""
    if left.n > right.n:
        return False
    if left.n == right.n and left.phase(ground) == LONE:
        return top_color(ground, j + 1, left) != top_color(ground, j, right)
    return True


def validate_wall(w: Wall) -> list[str]:
    """Return the list of violated building rules (empty for a Young wall)."""
    out = []
    if w.ground not in INDICES:
        return [f"bad ground {w.ground!r}"]
    if w.columns and w.columns[-1].n == 0:
        out.append("not normalized: trailing bare column")
    for j, col in enumerate(w.columns):
        if not column_ok(w.ground, col):
            out.append(f"column {j}: {col} is not a reachable column state")
    for j in range(len(w.columns)):
        right, left = w.column(j), w.column(j + 1)
        if left.n > right.n:
            out.append(f"columns {j + 1},{j}: heights not weakly decreasing to the left")
        elif not _pair_ok(w.ground, j, right, left):
            out.append(f"columns {j + 1},{j}: free space right of a half-block")
    return out


def is_proper(w: Wall) -> bool:
    """No two full columns share a height (heights are monotone in j)."""
    cols = w.columns
    return not any(
        cols[j].n == cols[j + 1].n and is_full(cols[j], w.ground)
        for j in range(len(cols) - 1)
    )


def _good(w: Wall) -> bool:
    return not validate_wall(w) and is_proper(w)


def has_removable_delta(w: Wall, j: int, successive: bool = False) -> bool:
    """Can one 0-, one 2- and two 1-blocks come off column j leaving a proper
    Young wall?  With ``successive`` every intermediate wall must also be a
    proper Young wall; otherwise only the final one is checked."""
    if not 0 <= j < len(w.columns):
        raise IndexError(f"column index {j} out of range")
    col = w.columns[j]
    if col.n < 4:
        return False

    def search(cur: Wall, need: tuple[int, int, int]) -> bool:
        if not any(need):
            return _good(cur)
        for c in INDICES:
            if not need[c]:
                continue
            nxt = remove_block(cur.ground, j, cur.column(j), c)
            if nxt is None:
                continue
            cand = _with_column(cur, j, nxt)
            if successive and not _good(cand):
                continue
            rest = list(need)
            rest[c] -= 1
            if search(cand, tuple(rest)):
                return True
        return False

    return search(w, (1, 2, 1))


def is_reduced(w: Wall, successive: bool = False) -> bool:
    return not any(has_removable_delta(w, j, successive) for j in range(len(w.columns)))


# ---------------------------------------------------------------------------
# Kashiwara operators


def column_signature(i: int, w: Wall, j: int) -> str:
    """``1`` per successive removable i-block, then ``0`` per successive
    admissible i-slot, at column j."""
    check_index(i)
    limit = 2 if i == 1 else 1
    parts = []
    for step, sym in ((remove_block, "1"), (add_block, "0")):
        cur, count = w, 0
        while count < limit:
            nxt = step(cur.ground, j, cur.column(j), i)
            if nxt is None:
                break
            cur = _with_column(cur, j, nxt)
            if not _good(cur):
                break
            count += 1
        parts.append(sym * count)
    return "".join(parts)


def wall_signature(i: int, w: Wall, window: int | None = None) -> list[tuple[str, int]]:
    """Symbols with their columns, leftmost (farthest) column first.

    Columns beyond the first bare one can never change: they cannot be
    raised above their bare right neighbour.
    """
    width = len(w.columns) + 1 if window is None else max(window, len(w.columns) + 1)
    out = []
    for j in range(width - 1, -1, -1):
        out += [(c, j) for c in column_signature(i, w, j)]
    return out


def _reduced(i, w, window):
    syms = wall_signature(i, w, window)
    return syms, reduce_signature([c for c, _ in syms])


def f_wall(i: int, w: Wall, window: int | None = None) -> Wall | None:
    syms, red = _reduced(i, w, window)
    if not red.zeros:
        return None
    j = syms[red.zeros[0]][1]
    return _with_column(w, j, add_block(w.ground, j, w.column(j), i))


def e_wall(i: int, w: Wall, window: int | None = None) -> Wall | None:
    syms, red = _reduced(i, w, window)
    if not red.ones:
        return None
    j = syms[red.ones[-1]][1]
    return _with_column(w, j, remove_block(w.ground, j, w.column(j), i))


def eps_phi_wall(i: int, w: Wall, window: int | None = None) -> tuple[int, int]:
    _, red = _reduced(i, w, window)
    return len(red.ones), len(red.zeros)


def census(w: Wall) -> tuple[int, int, int]:
    """Total number of added 0-, 1- and 2-blocks."""
    total = [0, 0, 0]
    for j, col in enumerate(w.columns):
        for c, k in enumerate(block_census(w.ground, j, col)):
            total[c] += k
    return tuple(total)


def wt_wall(w: Wall) -> AffineWeight:
    return from_root_coordinates(fundamental_weight(w.ground), census(w))


_READ = {
    LAYER: BElem.B1b2,
    ONE_UP: BElem.B2b2,
    TWO_UP: BElem.B2b1,
}


def read_column(ground: int, j: int, col: Column) -> BElem:
    ph = col.phase(ground)
    if ph == LONE:
        return BElem.B12 if top_color(ground, j, col) == 0 else BElem.Bb2b1
    return _READ[ph]


def read_wall(w: Wall) -> PathState:
    """The path read off the top unit of every column."""
    return make_path(w.ground, [read_column(w.ground, j, c) for j, c in enumerate(w.columns)])


# ---------------------------------------------------------------------------
# literals and rendering


def format_wall(w: Wall) -> str:
    parts = [f"L{w.ground};"]
    cols = []
    for j, col in enumerate(w.columns):
        if col.n:
            cols.append(f"c{j}=" + ",".join(str(c) for c in added_blocks(w.ground, j, col)))
    return parts[0] + ";".join(cols)


def parse_wall(text: str) -> Wall:
    """Parse ``L<g>;c0=...;c1=...``, replaying each column through the
    building rules.  Errors carry the position of the first bad token."""
    if len(text) < 3 or text[0] != "L" or text[2] != ";":
        raise LiteralError("wall literal must start with 'L<g>;'", 0)
    if text[1] not in "012":
        raise LiteralError(f"bad ground index {text[1]!r}", 1)
    ground = int(text[1])
    pos = 3
    cols: dict[int, Column] = {}
    body = text[3:]
    for item in body.split(";") if body else []:
        name, eq, colors = item.partition("=")
        if not eq or not name.startswith("c") or not name[1:].isdigit():
            raise LiteralError(f"bad column item {item!r}", pos)
        j = int(name[1:])
        if j in cols:
            raise LiteralError(f"column {j} given twice", pos)
        cur = BARE
        cpos = pos + len(name) + 1
        for token in colors.split(",") if colors else []:
            if token not in ("0", "1", "2"):
                raise LiteralError(f"bad block color {token!r}", cpos)
            nxt = add_block(ground, j, cur, int(token))
            if nxt is None:
                raise LiteralError(f"{token}-block cannot go on column {j} here", cpos)
            cur = nxt
            cpos += len(token) + 1
        cols[j] = cur
        pos += len(item) + 1
    width = max(cols) + 1 if cols else 0
    w = make_wall(ground, [cols.get(j, BARE) for j in range(width)])
    problems = validate_wall(w)
    if problems:
        raise LiteralError(problems[0], len(text))
    return w


def render(w: Wall, extra: int = 1) -> str:
    """ASCII picture, right-most column on the right, ground row at the bottom.

    Each block gets its own text row; 1-blocks print as ``11``, a complete
    layer as ``02`` and a half-filled one as ``0.`` or ``.2``.
    """
    stacks = []
    for j in range(len(w.columns) + extra - 1, -1, -1):
        g = ground_color(w.ground, j)
        rows = ["11" if g is None else ("0." if g == 0 else ".2")]
        cur = BARE
        for c in added_blocks(w.ground, j, w.column(j)):
            if c == 1:
                rows.append("11")
            elif cur.phase(w.ground) == LONE:
                rows[-1] = "02"
            else:
                rows.append("0." if c == 0 else ".2")
            cur = add_block(w.ground, j, cur, c)
        stacks.append(rows)
    height = max(len(r) for r in stacks)
    lines = []
    for level in range(height - 1, -1, -1):
        cells = []
        for rows in stacks:
            text = rows[level] if level < len(rows) else "  "
            cells.append(f"[{text}]" if level == 0 else f" {text} ")
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


class WallModel:
    """Model adapter for reduced proper Young walls (affine weights)."""

    name = "wall"
    affine = True

    def __init__(self, ground: int, window: int | None = None):
        self.ground = check_index(ground)
        self.window = window

    def root(self) -> Wall:
        return ground_wall(self.ground)

    def wt(self, w):
        return wt_wall(w)

    def eps(self, i, w):
        return eps_phi_wall(i, w, self.window)[0]

    def phi(self, i, w):
        return eps_phi_wall(i, w, self.window)[1]

    def e(self, i, w):
        return e_wall(i, w, self.window)

    def f(self, i, w):
        return f_wall(i, w, self.window)

    def key(self, w):
        return format_wall(w)
