"""Arc-index bounds for the pretzel knots P(-p,q,r) and the survey tables.

The lower bound is the a-degree spread of the Kauffman polynomial plus
two; upper bounds come from the explicit arc presentations and from the
crossing number.  Verdicts are exact when the bounds meet, otherwise an
interval.  The externally tabulated arc-index values carried by the
survey tables are reference data, never computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import GridDiagram, construct_minus2, construct_q23, construct_q4plus
from .laurent import Laurent2
from .pretzel import FamilySpec
from .skein import kauffman_F

__all__ = [
    "Verdict",
    "Certificates",
    "BoundsReport",
    "TableRow",
    "UpperBounds",
    "EXTERNAL_ARC_INDEX",
    "lower_bound",
    "upper_bound",
    "build_grid",
    "verdict",
    "make_table",
    "sweep",
    "rows_to_tsv",
    "rows_to_json_objs",
]


# Arc-index values sourced from public knot tables (reference data only).
EXTERNAL_ARC_INDEX = {
    (2, 3, 3): ("8n3", 7),
    (2, 3, 5): ("10n21", 8),
    (2, 3, 7): ("12n242", 9),
    (2, 5, 5): ("12n725", 10),
    (3, 4, 5): ("12n475", 10),
    (3, 4, 7): ("14n12205", 11),
}


@dataclass(frozen=True)
class Verdict:
    lo: int
    hi: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __str__(self) -> str:
        if self.is_exact:
            return f"exact({self.lo})"
        return f"interval({self.lo}, {self.hi})"


@dataclass(frozen=True)
class Certificates:
    """The witnesses behind a report: the arc presentation giving the
    construction upper bound and the normalized polynomial giving the
    lower bound."""

    grid: GridDiagram
    kauffman: Laurent2


@dataclass(frozen=True)
class UpperBounds:
    construction: int
    theorem: int


@dataclass(frozen=True)
class BoundsReport:
    family: FamilySpec
    crossing_number: int
    spread: int
    lower: int
    upper_construction: int
    upper_cminus: int
    verdict: Verdict
    certificates: Certificates


@dataclass(frozen=True)
class TableRow:
    name: str
    dt_name: str | None
    lower: int
    expected_arc_index: int | None
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("table rows require lower <= upper")


def build_grid(f: FamilySpec) -> GridDiagram:
    """The applicable arc-presentation construction for P(-p,q,r)."""
    if f.p == 2:
        return construct_minus2(f.q, f.r)
    if f.q in (2, 3):
        return construct_q23(f.p, f.q, f.r)
    return construct_q4plus(f.p, f.q, f.r)


def lower_bound(f: FamilySpec) -> int:
    """spread_a of the normalized Kauffman polynomial, plus two."""
    return kauffman_F(f.to_pretzel()).spread_a() + 2


def upper_bound(f: FamilySpec) -> UpperBounds:
    return UpperBounds(
        construction=build_grid(f).size,
        theorem=f.crossing_number(),
    )


def verdict(f: FamilySpec) -> BoundsReport:
    poly = kauffman_F(f.to_pretzel())
    grid = build_grid(f)
    lower = poly.spread_a() + 2
    uppers = UpperBounds(construction=grid.size, theorem=f.crossing_number())
    hi = min(uppers.construction, uppers.theorem)
    if lower > hi:
        raise AssertionError(
            f"bound inversion for {f}: lower {lower} > upper {hi} (engine bug)"
        )
    return BoundsReport(
        family=f,
        crossing_number=f.crossing_number(),
        spread=poly.spread_a(),
        lower=lower,
        upper_construction=uppers.construction,
        upper_cminus=uppers.theorem,
        verdict=Verdict(lower, hi),
        certificates=Certificates(grid=grid, kauffman=poly),
    )


_TABLE1 = [(2, 3, 3), (2, 3, 5), (2, 3, 7), (2, 5, 5)]
_TABLE2 = [(3, 4, 5), (3, 4, 7)]


def make_table(which: int) -> list[TableRow]:
    """The survey tables: computed lower bounds for the first, crossing
    arithmetic for the second; arc-index column from reference data."""
    if which == 1:
        rows = []
        for p, q, r in _TABLE1:
            f = FamilySpec(p, q, r)
            dt, arc = EXTERNAL_ARC_INDEX[(p, q, r)]
            rows.append(
                TableRow(
                    name=str(f),
                    dt_name=dt,
                    lower=lower_bound(f),
                    expected_arc_index=arc,
                    upper=f.crossing_number() - 1,
                )
            )
        return rows
    if which == 2:
        rows = []
        for p, q, r in _TABLE2:
            f = FamilySpec(p, q, r)
            dt, arc = EXTERNAL_ARC_INDEX[(p, q, r)]
            c = f.crossing_number()
            rows.append(
                TableRow(
                    name=str(f),
                    dt_name=dt,
                    lower=c - 3,
                    expected_arc_index=arc,
                    upper=c - 2,
                )
            )
        return rows
    raise ValueError("table number must be 1 or 2")


def sweep(p_range, q_range, r_range, budget: int = 30):
    """Reports for every valid knot triple in the ranges.

    Returns (reports, errors); per-item failures are collected as
    (family-ish string, message) pairs rather than raised.
    """
    reports: list[BoundsReport] = []
    errors: list[tuple[str, str]] = []
    for p in p_range:
        for q in q_range:
            for r in r_range:
                if r < q:
                    continue
                if p + q + r > budget:
                    errors.append((f"P(-{p},{q},{r})", "over crossing budget"))
                    continue
                try:
                    f = FamilySpec(p, q, r)
                except ValueError:
                    continue
                try:
                    reports.append(verdict(f))
                except Exception as exc:  # collected, not fatal
                    errors.append((str(f), str(exc)))
    return reports, errors


_COLUMNS = ("name", "dt_name", "lower", "external_arc_index", "upper", "verdict")


def _row_cells(row) -> dict:
    if isinstance(row, TableRow):
        return {
            "name": row.name,
            "dt_name": row.dt_name,
            "lower": row.lower,
            "external_arc_index": row.expected_arc_index,
            "upper": row.upper,
            "verdict": str(Verdict(row.lower, row.upper)),
        }
    ext = EXTERNAL_ARC_INDEX.get((row.family.p, row.family.q, row.family.r))
    return {
        "name": str(row.family),
        "dt_name": ext[0] if ext else None,
        "lower": row.lower,
        "external_arc_index": ext[1] if ext else None,
        "upper": min(row.upper_construction, row.upper_cminus),
        "verdict": str(row.verdict),
    }


def rows_to_tsv(rows) -> str:
    lines = ["\t".join(_COLUMNS)]
    for row in rows:
        cells = _row_cells(row)
        lines.append(
            "\t".join("" if cells[c] is None else str(cells[c]) for c in _COLUMNS)
        )
    return "\n".join(lines) + "\n"


def rows_to_json_objs(rows) -> list[dict]:
    return [_row_cells(row) for row in rows]
