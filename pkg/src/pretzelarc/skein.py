"""Regular-isotopy Kauffman polynomial engine for pretzel diagrams.

The engine computes the unnormalized polynomial Lambda of the standard
pretzel diagram P(p_1, ..., p_n) by crossing-switch recursion:

    Lambda(D+) + Lambda(D-) = z * (Lambda(D0) + Lambda(Dinf))

applied to the top crossing of one band.  Switching lowers |p_i| by two,
the planar smoothing lowers it by one, and the other smoothing caps the
band off, turning its remaining twists into curls that regular isotopy
removes at a cost of one a-power each:

    band v >= 2:   Lambda(..v..) = -Lambda(..v-2..) + z*Lambda(..v-1..)
                                   + z * a^-(v-1) * Lambda(band deleted)
    band v <= -2:  mirror image, with a^(|v|-1) on the deleted branch.

Base cases: the empty pretzel is a two-component unlink (factor delta),
a single band closes to an unknot with |w| curls (a^-w), and a two-band
pretzel depends only on the total twist because its bands are in series.
A zero band pinches the diagram into a connected sum, and adjacent bands
with opposite single twists cancel by a type-two move.

All returned polynomials are immutable and memoized under a canonical
key that identifies tuples whose standard diagrams are planar isotopic
(cyclic rotation and reversal; total twist for two bands).
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import Laurent2, PolySummary
from .pretzel import FamilySpec, PretzelSpec, standard_writhe

__all__ = [
    "DELTA",
    "SpreadReport",
    "canonical_key",
    "clear_cache",
    "lambda_two",
    "lambda_three",
    "lambda_n",
    "kauffman_F",
    "spread_report",
]

# Split-union factor: Lambda of a two-component unlink.
DELTA = Laurent2({(1, -1): 1, (0, 0): -1, (-1, -1): 1})

# Memo table from canonical keys to finished polynomials.  Entries are
# permanently valid; concurrent duplicate computation is harmless.
_CACHE: dict[tuple, Laurent2] = {}


def clear_cache() -> None:
    _CACHE.clear()


def canonical_key(twists: tuple[int, ...]) -> tuple:
    """Canonical form identifying planar-isotopic standard diagrams.

    Two bands in series collapse to their total twist; for three or more
    bands the band cycle is defined up to rotation and reversal.
    """
    n = len(twists)
    if n == 0:
        return ("unlink2",)
    if n == 1:
        return ("curl", twists[0])
    if n == 2:
        return ("series", twists[0] + twists[1])
    variants = []
    for base in (twists, tuple(reversed(twists))):
        for k in range(n):
            variants.append(base[k:] + base[:k])
    return ("cycle",) + min(variants)


def _two_total(total: int) -> Laurent2:
    """Lambda of a two-band pretzel with the given total twist."""
    key = ("series", total)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    if total == 0:
        value = DELTA
    elif total == 1:
        value = Laurent2.monomial(1, 1, 0)
    elif total == -1:
        value = Laurent2.monomial(1, -1, 0)
    elif total >= 2:
        value = (
            -_two_total(total - 2)
            + _two_total(total - 1).mono_mul(1, 0, 1)
            + Laurent2.monomial(1, -(total - 1), 1)
        )
    else:
        value = (
            -_two_total(total + 2)
            + _two_total(total + 1).mono_mul(1, 0, 1)
            + Laurent2.monomial(1, -total - 1, 1)
        )
    _CACHE[key] = value
    return value


def _rotate_zero_interior(twists: tuple[int, ...]) -> tuple[int, ...]:
    z = twists.index(0)
    shift = (z - 1) % len(twists)
    return twists[shift:] + twists[:shift]


def _find_cancelling_pair(twists: tuple[int, ...]) -> int | None:
    """Index i such that bands i, i+1 (cyclically) carry twists +1 and -1."""
    n = len(twists)
    for i in range(n):
        a, b = twists[i], twists[(i + 1) % n]
        if a == -b and abs(a) == 1:
            return i
    return None


def _lambda(twists: tuple[int, ...]) -> Laurent2:
    n = len(twists)
    if n == 0:
        return DELTA
    if n == 1:
        return Laurent2.monomial(1, -twists[0], 0)
    if n == 2:
        return _two_total(twists[0] + twists[1])

    key = canonical_key(twists)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached

    if 0 in twists:
        # A flat band pinches the diagram into a connected sum whose halves
        # share the flat band; the polynomial multiplies.
        rotated = _rotate_zero_interior(twists)
        j = rotated.index(0, 1)
        left = rotated[:j] + (0,)
        right = (0,) + rotated[j + 1 :]
        value = _lambda(left) * _lambda(right)
    else:
        pair = _find_cancelling_pair(twists)
        if pair is not None:
            i = pair
            if i + 1 < n:
                reduced = twists[:i] + twists[i + 2 :]
            else:
                reduced = twists[1:-1]
            value = _lambda(reduced)
        else:
            i = max(range(n), key=lambda idx: (abs(twists[idx]), -idx))
            v = twists[i]
            step = -1 if v > 0 else 1
            switched = twists[:i] + (v + 2 * step,) + twists[i + 1 :]
            smoothed = twists[:i] + (v + step,) + twists[i + 1 :]
            deleted = twists[:i] + twists[i + 1 :]
            kink_exp = -(abs(v) - 1) if v > 0 else (abs(v) - 1)
            value = (
                -_lambda(switched)
                + _lambda(smoothed).mono_mul(1, 0, 1)
                + _lambda(deleted).mono_mul(1, kink_exp, 1)
            )

    _CACHE[key] = value
    return value


def lambda_two(m: int, n: int) -> Laurent2:
    """Lambda of the two-band pretzel P(-m, n) for nonnegative m, n."""
    if m < 0 or n < 0:
        raise ValueError("lambda_two takes nonnegative twist magnitudes")
    return _two_total(n - m)


def lambda_three(p1: int, p2: int, p3: int) -> Laurent2:
    """Lambda of the standard three-band pretzel diagram P(p1, p2, p3).

    Any integers are accepted; zero and single-twist bands reduce through
    the connected-sum and cancellation rules.
    """
    return _lambda((p1, p2, p3))


def lambda_n(spec: PretzelSpec) -> Laurent2:
    """Lambda of the standard diagram of an arbitrary pretzel spec."""
    return _lambda(spec.twists)


def kauffman_F(spec: PretzelSpec) -> Laurent2:
    """The normalized polynomial a^-w * Lambda of the standard diagram."""
    w = standard_writhe(spec)
    return _lambda(spec.twists).mono_mul(1, -w, 0)


@dataclass(frozen=True)
class SpreadReport:
    """a-degree spread of Lambda of P(-p,q,r) with its extreme-term summary."""

    spread: int
    summary: PolySummary


def spread_report(family: FamilySpec) -> SpreadReport:
    poly = _lambda(family.to_pretzel().twists)
    return SpreadReport(spread=poly.spread_a(), summary=poly.summarize())
