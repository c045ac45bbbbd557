"""Pretzel link specifications and the combinatorics of their standard diagrams.

A pretzel diagram consists of two horizontal hubs joined by vertical bands,
band i carrying |p_i| crossings.  Positive twists put the strand running
from bottom-left to top-right on top at every crossing of the band;
negative twists mirror that.  The writhe tracer below walks this diagram
combinatorially, so crossing signs come from strand bookkeeping rather
than any geometric embedding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _permutations

__all__ = [
    "PretzelSpec",
    "FamilySpec",
    "parse_pretzel",
    "is_knot",
    "crossing_number",
    "standard_writhe",
    "permutations",
    "mirror",
]


@dataclass(frozen=True)
class PretzelSpec:
    """An ordered tuple of nonzero half-twist counts, one per band."""

    twists: tuple[int, ...]

    def __post_init__(self):
        twists = tuple(int(t) for t in self.twists)
        object.__setattr__(self, "twists", twists)
        if len(twists) < 1:
            raise ValueError("a pretzel spec needs at least one band")
        if any(t == 0 for t in twists):
            raise ValueError("zero-twist bands are not allowed in a pretzel spec")

    @property
    def n(self) -> int:
        return len(self.twists)

    def component_count(self) -> int:
        """Number of link components of the standard diagram."""
        return len(_trace_components(self.twists)[0])

    def __str__(self) -> str:
        return "P(" + ",".join(str(t) for t in self.twists) + ")"


_PRETZEL_RE = re.compile(r"^\s*P\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*$")


def parse_pretzel(text: str) -> PretzelSpec:
    """Parse pretzel notation like ``P(-2,3,3)`` (spaces tolerated)."""
    m = _PRETZEL_RE.match(text)
    if not m:
        raise ValueError(f"not pretzel notation: {text!r}")
    return PretzelSpec(tuple(int(part) for part in m.group(1).split(",")))


@dataclass(frozen=True)
class FamilySpec:
    """Parameters (p, q, r) of the studied knot family P(-p, q, r).

    Requires p, q, r >= 2, r >= q, and at most one even parameter (the
    knot condition for three-band pretzels).
    """

    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise ValueError("family parameters must all be >= 2")
        if self.r < self.q:
            raise ValueError("family parameters require r >= q")
        if sum(1 for v in (self.p, self.q, self.r) if v % 2 == 0) > 1:
            raise ValueError(
                "P(-p,q,r) is a knot only when at most one of p, q, r is even"
            )

    def to_pretzel(self) -> PretzelSpec:
        return PretzelSpec((-self.p, self.q, self.r))

    def crossing_number(self) -> int:
        return self.p + self.q + self.r

    def __str__(self) -> str:
        return str(self.to_pretzel())


def is_knot(spec: PretzelSpec) -> bool:
    """Whether a three-band pretzel closes up into a single component."""
    if spec.n != 3:
        raise ValueError("knot detection is defined for three-band pretzels")
    return sum(1 for t in spec.twists if t % 2 == 0) <= 1


def crossing_number(family: FamilySpec) -> int:
    """Minimal crossing number of P(-p,q,r); the standard diagram realizes it."""
    return family.crossing_number()


def permutations(family: FamilySpec) -> list[PretzelSpec]:
    """All distinct orderings of the bands (-p, q, r)."""
    seen = []
    for order in _permutations((-family.p, family.q, family.r)):
        spec = PretzelSpec(order)
        if spec not in seen:
            seen.append(spec)
    return seen


def mirror(spec: PretzelSpec) -> PretzelSpec:
    return PretzelSpec(tuple(-t for t in spec.twists))


# ---------------------------------------------------------------------------
# Writhe of the standard diagram.
#
# Ports of crossing j (counted from the top) of band i are (i, j, corner)
# with corner in {TL, TR, BL, BR}.  Within a crossing the strands join
# TL-BR and TR-BL; between crossings, BL/BR of one feed TL/TR of the next.
# The hubs wire TR of each band to TL of the next band cyclically, and
# likewise BR to BL.
# ---------------------------------------------------------------------------

_TL, _TR, _BL, _BR = 0, 1, 2, 3
_THROUGH = {_TL: _BR, _BR: _TL, _TR: _BL, _BL: _TR}

# Direction of motion while traversing a crossing, entering at the given
# corner, as an (x, y) unit pair.
_DIRECTION = {
    _TL: (1, -1),  # descending to BR
    _TR: (-1, -1),  # descending to BL
    _BL: (1, 1),  # ascending to TR
    _BR: (-1, 1),  # ascending to TL
}


def _wiring(twists: tuple[int, ...]) -> dict[tuple[int, int, int], tuple[int, int, int]]:
    """Involution pairing crossing ports along band interiors and hubs."""
    n = len(twists)
    join: dict[tuple[int, int, int], tuple[int, int, int]] = {}

    def link(a, b):
        join[a] = b
        join[b] = a

    tops = []
    bottoms = []
    for i, t in enumerate(twists):
        count = abs(t)
        tops.append(((i, 0, _TL), (i, 0, _TR)))
        bottoms.append(((i, count - 1, _BL), (i, count - 1, _BR)))
        for j in range(count - 1):
            link((i, j, _BL), (i, j + 1, _TL))
            link((i, j, _BR), (i, j + 1, _TR))
    for i in range(n):
        nxt = (i + 1) % n
        link(tops[i][1], tops[nxt][0])  # TR_i -- TL_{i+1}
        link(bottoms[i][1], bottoms[nxt][0])  # BR_i -- BL_{i+1}
    return join


def _trace_components(twists: tuple[int, ...]):
    """Orient every strand pass deterministically.

    Returns (components, passes) where passes maps (band, crossing, corner
    of entry) to the direction of motion, recorded once per strand pass.
    """
    join = _wiring(twists)
    passes: dict[tuple[int, int, int], tuple[int, int]] = {}
    entered: set[tuple[int, int, int]] = set()
    components: list[list[tuple[int, int, int]]] = []

    all_entries = [
        (i, j, corner)
        for i, t in enumerate(twists)
        for j in range(abs(t))
        for corner in (_TL, _TR, _BL, _BR)
    ]

    def walk(entry):
        comp = []
        port = entry
        while port not in entered:
            entered.add(port)
            # Crossing pass: entering at `port`, leaving at the opposite corner.
            entered.add((port[0], port[1], _THROUGH[port[2]]))
            passes[port] = _DIRECTION[port[2]]
            comp.append(port)
            out_port = (port[0], port[1], _THROUGH[port[2]])
            port = join[out_port]
        return comp

    # First component starts on the hub arc heading into band 1 top-left.
    start = (0, 0, _TL)
    components.append(walk(start))
    for entry in all_entries:
        if entry not in entered:
            components.append(walk(entry))
    return components, passes


def standard_writhe(spec: PretzelSpec) -> int:
    """Sum of crossing signs of the standard diagram under the traced orientation."""
    twists = spec.twists
    _, passes = _trace_components(twists)
    total = 0
    for i, t in enumerate(twists):
        for j in range(abs(t)):
            # Each crossing is passed once on the TL-BR strand and once on TR-BL.
            d_main = passes.get((i, j, _TL)) or passes.get((i, j, _BR))
            d_cross = passes.get((i, j, _TR)) or passes.get((i, j, _BL))
            if t > 0:
                over, under = d_cross, d_main
            else:
                over, under = d_main, d_cross
            cross_z = over[0] * under[1] - over[1] * under[0]
            total += 1 if cross_z > 0 else -1
    return total
