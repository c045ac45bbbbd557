"""Rectilinear pretzel diagrams as grid data.

Every band is drawn with two rails and one vertical-over crossing per
half twist; hub arcs are staggered so they cross nothing.  The resulting
closed rectilinear curve alternates vertical and horizontal segments
with all distinct coordinates, which is exactly a grid diagram after
coordinate compression.  Column count is 2(|p_1|+...+|p_n|) + 2n.
"""

from __future__ import annotations

from .grid import GridDiagram

__all__ = ["assemble_pretzel_grid"]


def _rectilinear(twists):
    n = len(twists)
    verticals = []  # (x, ylo, yhi)
    horizontals = []  # (y, xlo, xhi)
    ytop = 0
    total = sum(abs(v) for v in twists)
    ybot = -(2 * total + 4)
    tops = []
    bots = []
    open_tops = {}  # x -> provisional top y (extended to hub rows later)
    y = ytop
    for i, v in enumerate(twists):
        zone = 100 * i
        xl, xr = zone + 40, zone + 60
        nl, nr = 39, 61
        tops.append((xl, xr))
        y_l = y_r = ytop
        for _ in range(abs(v)):
            yc = y - 1  # crossing row (the under strand jogs here)
            yj = y - 2  # plain corner row for the over strand
            if v > 0:
                verticals.append((xr, yj, y_r))
                horizontals.append((yj, zone + nl, xr))
                verticals.append((xl, yc, y_l))
                horizontals.append((yc, xl, zone + nr))
                y_l_new, y_r_new = yj, yc
            else:
                verticals.append((xl, yj, y_l))
                horizontals.append((yj, xl, zone + nr))
                verticals.append((xr, yc, y_r))
                horizontals.append((yc, zone + nl, xr))
                y_l_new, y_r_new = yc, yj
            xl, xr = zone + nl, zone + nr
            nl -= 1
            nr += 1
            y_l, y_r = y_l_new, y_r_new
            y -= 2
        bots.append((xl, y_l, xr, y_r))

    for i in range(n - 1):
        horizontals.append((1 + i, tops[i][1], tops[i + 1][0]))
    horizontals.append((n, tops[0][0], tops[n - 1][1]))
    for i in range(n - 1):
        horizontals.append((ybot + 1 + i, bots[i][2], bots[i + 1][0]))
    horizontals.append((ybot, bots[0][0], bots[n - 1][2]))

    # extend each band's first pieces up to their hub rows
    for i in range(n):
        xl, xr = tops[i]
        ytl = n if i == 0 else i
        ytr = n if i == n - 1 else i + 1
        fixed = []
        for x, ylo, yhi in verticals:
            if x == xl and yhi == ytop:
                yhi = ytl
            elif x == xr and yhi == ytop:
                yhi = ytr
            fixed.append((x, ylo, yhi))
        verticals = fixed
    # and the final pieces down to the bottom hub rows
    for i in range(n):
        xl, y_l, xr, y_r = bots[i]
        ybl = ybot if i == 0 else ybot + i
        ybr = ybot if i == n - 1 else ybot + 1 + i
        verticals.append((xl, ybl, y_l))
        verticals.append((xr, ybr, y_r))
    return verticals, horizontals


def assemble_pretzel_grid(twists: tuple[int, ...]) -> GridDiagram:
    """A correct (not minimal) grid diagram of the standard pretzel."""
    if any(v == 0 for v in twists):
        raise ValueError("assembly needs nonzero twist entries")
    verticals, horizontals = _rectilinear(twists)
    xs_sorted = sorted(v[0] for v in verticals)
    ys_sorted = sorted(h[0] for h in horizontals)
    col_of = {x: i for i, x in enumerate(xs_sorted)}
    row_of = {y: i + 1 for i, y in enumerate(ys_sorted)}
    k = len(verticals)
    pairs = [None] * k
    for x, ylo, yhi in verticals:
        pairs[col_of[x]] = (row_of[ylo], row_of[yhi])

    # orient: walk the closed curve, alternating column and row segments
    rowmap = {}
    for c, (r1, r2) in enumerate(pairs):
        rowmap.setdefault(r1, []).append(c)
        rowmap.setdefault(r2, []).append(c)
    xs = [0] * k
    os_ = [0] * k
    seen = set()
    for start in range(k):
        if start in seen:
            continue
        c = start
        r = pairs[c][0]
        while c not in seen:
            seen.add(c)
            xs[c] = r
            other = pairs[c][0] if pairs[c][1] == r else pairs[c][1]
            os_[c] = other
            c = next(cc for cc in rowmap[other] if cc != c)
            r = other
    return GridDiagram(tuple(xs), tuple(os_))
