"""Arc presentations encoded as grid diagrams.

A grid diagram of size k places one X and one O in each row and column
of a k x k array.  Column c carries a vertical strand between its X and
O, row r a horizontal strand between its two markers, and vertical
strands always cross over horizontal ones.  Columns are the pages of an
arc presentation read in order around the binding; rows are the binding
heights.  Rows are numbered 1..k bottom to top, columns 1..k left to
right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "GridDiagram",
    "PlanarDiagram",
    "Crossing",
    "validate",
    "component_count",
    "to_planar",
    "grid_writhe",
    "render_ascii",
    "construct_minus2",
    "construct_q23",
    "construct_q4plus",
    "translate_columns",
    "mirror_grid",
    "grid_to_text",
    "grid_from_text",
    "grid_to_json",
    "grid_from_json",
]


@dataclass(frozen=True)
class GridDiagram:
    """Grid data: xs[c] and os[c] are the 1-based rows of column c's markers.

    Construction only checks shape; semantic axioms are reported by
    :func:`validate` so that malformed data can be described rather than
    rejected.
    """

    xs: tuple[int, ...]
    os: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(v) for v in self.xs))
        object.__setattr__(self, "os", tuple(int(v) for v in self.os))
        if len(self.xs) != len(self.os):
            raise ValueError("xs and os must have one entry per column")
        if not self.xs:
            raise ValueError("a grid needs at least one column")

    @property
    def size(self) -> int:
        return len(self.xs)


def validate(g: GridDiagram) -> list[str]:
    """Check the arc-presentation axioms; an empty list means valid."""
    k = g.size
    violations = []
    for name, rows in (("X", g.xs), ("O", g.os)):
        out_of_range = [r for r in rows if not 1 <= r <= k]
        if out_of_range:
            violations.append(f"{name} rows out of range 1..{k}: {sorted(out_of_range)}")
        if len(set(rows)) != k:
            dupes = sorted({r for r in rows if rows.count(r) > 1})
            violations.append(f"duplicate row in {name} column map: {dupes}")
    for c in range(k):
        if g.xs[c] == g.os[c]:
            violations.append(f"X and O share a cell in column {c + 1}")
    return violations


def component_count(g: GridDiagram) -> int:
    """Number of closed curves traced by the X->O column / O->X row walk."""
    if validate(g):
        raise ValueError("cannot trace an invalid grid")
    k = g.size
    col_of_x_row = {g.xs[c]: c for c in range(k)}
    seen = [False] * k
    count = 0
    for start in range(k):
        if seen[start]:
            continue
        count += 1
        c = start
        while not seen[c]:
            seen[c] = True
            c = col_of_x_row[g.os[c]]
    return count


@dataclass(frozen=True)
class Crossing:
    """One vertical-over-horizontal intersection.

    over_n/over_s are the segment pieces of the vertical strand above and
    below the crossing; under_w/under_e the horizontal pieces to the left
    and right.  ``sign`` is the crossing sign under the grid orientation
    (columns X->O, rows O->X).
    """

    column: int
    row: int
    over_n: int
    over_s: int
    under_w: int
    under_e: int
    sign: int


@dataclass(frozen=True)
class PlanarDiagram:
    """Four-valent diagram data extracted from a grid.

    ``n_pieces`` counts strand pieces (edges); ``corner_joins`` are the
    permanent identifications where the knot turns at a marker.
    """

    n_pieces: int
    crossings: tuple[Crossing, ...]
    corner_joins: tuple[tuple[int, int], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def _spans(g: GridDiagram):
    k = g.size
    col_span = [(min(g.xs[c], g.os[c]), max(g.xs[c], g.os[c])) for c in range(k)]
    col_of_x_row = {g.xs[c]: c for c in range(k)}
    col_of_o_row = {g.os[c]: c for c in range(k)}
    row_span = []
    for r in range(1, k + 1):
        cx, co = col_of_x_row[r], col_of_o_row[r]
        row_span.append((min(cx, co), max(cx, co)))
    return col_span, row_span, col_of_x_row, col_of_o_row


def to_planar(g: GridDiagram) -> PlanarDiagram:
    """Extract the planar diagram: verticals over horizontals everywhere."""
    bad = validate(g)
    if bad:
        raise ValueError("invalid grid: " + "; ".join(bad))
    k = g.size
    col_span, row_span, col_of_x_row, col_of_o_row = _spans(g)

    # Crossing positions, then piece ids per column/row in sweep order.
    col_hits: list[list[int]] = [[] for _ in range(k)]
    row_hits: list[list[int]] = [[] for _ in range(k)]
    for c in range(k):
        lo, hi = col_span[c]
        for r in range(lo + 1, hi):
            rlo, rhi = row_span[r - 1]
            if rlo < c < rhi:
                col_hits[c].append(r)
                row_hits[r - 1].append(c)

    next_id = 0
    col_piece_base = []
    for c in range(k):
        col_piece_base.append(next_id)
        next_id += len(col_hits[c]) + 1
    row_piece_base = []
    for r in range(k):
        row_piece_base.append(next_id)
        next_id += len(row_hits[r]) + 1

    def col_piece(c: int, r: int) -> int:
        """Piece of column c at height r (r not a crossing row of c)."""
        below = sum(1 for hit in col_hits[c] if hit < r)
        return col_piece_base[c] + below

    def row_piece(r: int, c: int) -> int:
        left = sum(1 for hit in row_hits[r - 1] if hit < c)
        return row_piece_base[r - 1] + left

    crossings = []
    for c in range(k):
        vy = 1 if g.os[c] > g.xs[c] else -1
        for idx, r in enumerate(col_hits[c]):
            ux = 1 if col_of_x_row[r] > col_of_o_row[r] else -1
            left = sum(1 for hit in row_hits[r - 1] if hit < c)
            crossings.append(
                Crossing(
                    column=c + 1,
                    row=r,
                    over_s=col_piece_base[c] + idx,
                    over_n=col_piece_base[c] + idx + 1,
                    under_w=row_piece_base[r - 1] + left,
                    under_e=row_piece_base[r - 1] + left + 1,
                    sign=-vy * ux,
                )
            )

    joins = []
    for c in range(k):
        for r in (g.xs[c], g.os[c]):
            joins.append((col_piece(c, r), row_piece(r, c)))
    return PlanarDiagram(
        n_pieces=next_id, crossings=tuple(crossings), corner_joins=tuple(joins)
    )


def grid_writhe(g: GridDiagram) -> int:
    """Writhe under the X->O column / O->X row orientation (knots only)."""
    if component_count(g) != 1:
        raise ValueError("writhe is only defined here for single-component grids")
    return sum(cr.sign for cr in to_planar(g).crossings)


def render_ascii(g: GridDiagram) -> str:
    """Character art, one cell per column, top row printed first."""
    bad = validate(g)
    if bad:
        raise ValueError("invalid grid: " + "; ".join(bad))
    k = g.size
    col_span, row_span, _, _ = _spans(g)
    lines = []
    for r in range(k, 0, -1):
        cells = []
        for c in range(k):
            if g.xs[c] == r:
                cells.append("X")
            elif g.os[c] == r:
                cells.append("O")
            else:
                vert = col_span[c][0] < r < col_span[c][1]
                horiz = row_span[r - 1][0] < c < row_span[r - 1][1]
                cells.append("+" if vert and horiz else "|" if vert else "-" if horiz else " ")
        lines.append("".join(cells))
    return "\n".join(lines)


def translate_columns(g: GridDiagram, shift: int) -> GridDiagram:
    """Rotate the page order around the binding axis."""
    k = g.size
    shift %= k
    return GridDiagram(g.xs[shift:] + g.xs[:shift], g.os[shift:] + g.os[:shift])


def mirror_grid(g: GridDiagram) -> GridDiagram:
    """Reflect left-right: reverses the column order (mirror image)."""
    return GridDiagram(tuple(reversed(g.xs)), tuple(reversed(g.os)))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def grid_to_text(g: GridDiagram) -> str:
    return "grid {}\nX: {}\nO: {}\n".format(
        g.size,
        " ".join(str(r) for r in g.xs),
        " ".join(str(r) for r in g.os),
    )


def grid_from_text(text: str) -> GridDiagram:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 3 or not lines[0].startswith("grid "):
        raise ValueError("grid text must have lines: 'grid <k>', 'X: ...', 'O: ...'")
    k = int(lines[0].split()[1])
    if not lines[1].startswith("X:") or not lines[2].startswith("O:"):
        raise ValueError("grid text must have lines: 'grid <k>', 'X: ...', 'O: ...'")
    xs = tuple(int(v) for v in lines[1][2:].split())
    os_ = tuple(int(v) for v in lines[2][2:].split())
    if len(xs) != k or len(os_) != k:
        raise ValueError(f"expected {k} entries per marker line")
    return GridDiagram(xs, os_)


def grid_to_json(g: GridDiagram) -> str:
    return json.dumps({"size": g.size, "xs": list(g.xs), "os": list(g.os)})


def grid_from_json(text: str) -> GridDiagram:
    data = json.loads(text)
    g = GridDiagram(tuple(data["xs"]), tuple(data["os"]))
    if g.size != data["size"]:
        raise ValueError("size field disagrees with marker lists")
    return g


# ---------------------------------------------------------------------------
# Family constructors.
#
# P(-2,q,r) has a closed form: all X markers on the antidiagonal and the
# O rows arranged as one long twist chain (the q- and r-twists appear as
# runs descending by one) plus three closing arcs.  The other two
# families ship as coordinate tables produced by a knot-preserving
# reduction of the explicit pretzel diagram and locked in against the
# state-sum oracle (see tests/test_acceptance.py); parameters beyond the
# tables fall back to running that reduction directly.
# ---------------------------------------------------------------------------


def _knot_triple(p: int, q: int, r: int) -> None:
    if sum(v % 2 == 0 for v in (p, q, r)) > 1:
        raise ValueError(
            f"P(-{p},{q},{r}) is a link, not a knot (two even parameters)"
        )


def construct_minus2(q: int, r: int) -> GridDiagram:
    """Arc presentation of P(-2,q,r) with q+r+1 arcs (q, r odd, 3<=q<=r)."""
    if q < 3 or r < q:
        raise ValueError("construction needs 3 <= q <= r")
    if q % 2 == 0 or r % 2 == 0:
        raise ValueError("P(-2,q,r) is a knot only for odd q and r")
    k = q + r + 1
    os_ = (
        list(range(r + q - 1, r + 2, -1))
        + [r + 1, r, r - 1, r - 2, r + q + 1]
        + list(range(r - 3, 0, -1))
        + [r + q, r + 2]
    )
    return GridDiagram(tuple(range(k, 0, -1)), tuple(os_))


def _table_or_reduce(p: int, q: int, r: int, target: int) -> GridDiagram:
    from ._grid_tables import FAMILY_GRIDS

    entry = FAMILY_GRIDS.get((p, q, r))
    if entry is not None:
        return GridDiagram(entry[0], entry[1])
    from ._assembly import assemble_pretzel_grid
    from ._reduction import reduce_to_size

    g = reduce_to_size(assemble_pretzel_grid((-p, q, r)), target)
    if g is None:
        raise ValueError(
            f"no presentation with {target} arcs found for P(-{p},{q},{r}) "
            "within the reduction budget"
        )
    return g


def construct_q23(p: int, q: int, r: int) -> GridDiagram:
    """Arc presentation of P(-p,q,r), q in {2,3}, with p+r+2 arcs."""
    if p < 3 or q not in (2, 3) or r < 3:
        raise ValueError("construction needs p >= 3, q in {2,3}, r >= 3")
    _knot_triple(p, q, r)
    return _table_or_reduce(p, q, r, p + r + 2)


def construct_q4plus(p: int, q: int, r: int) -> GridDiagram:
    """Arc presentation of P(-p,q,r), 4 <= q <= r, with p+q+r-2 arcs."""
    if p < 3 or q < 4 or r < q:
        raise ValueError("construction needs p >= 3 and 4 <= q <= r")
    _knot_triple(p, q, r)
    return _table_or_reduce(p, q, r, p + q + r - 2)
