"""Exact sparse Laurent polynomial arithmetic in one and two variables.

Two-variable polynomials live in Z[a, a^-1, z, z^-1] and are the value
space of the regular-isotopy polynomial of link diagrams; one-variable
polynomials are the target of specializations (Jones in q, bracket in A).
Coefficients are arbitrary-precision Python ints, values are immutable,
and zero coefficients are never stored, so equality of values is equality
of term tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "Laurent1",
    "Laurent2",
    "PolySummary",
    "add",
    "mul",
    "mono_mul",
    "spread_a",
    "summarize",
    "substitute",
]


def _render_terms(items, factor_names):
    """Shared text renderer: items are (exponents, coeff) pairs already sorted."""
    if not items:
        return "0"
    parts = []
    for exps, coeff in items:
        factors = []
        for name, e in zip(factor_names, exps):
            if e == 0:
                continue
            factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        term = "*".join(factors)
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f" + {term}" if coeff > 0 else f" - {term}")
    return "".join(parts)


class Laurent1:
    """Univariate Laurent polynomial with integer coefficients.

    The variable is anonymous; rendering takes its name as an argument.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        table = {}
        if terms:
            for e, c in terms.items():
                if c != 0:
                    table[e] = c
        self._terms = table

    @classmethod
    def zero(cls) -> Laurent1:
        return cls()

    @classmethod
    def one(cls) -> Laurent1:
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> Laurent1:
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit_monomial(self) -> bool:
        """True when the value is +-1 times a single power of the variable."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def min_deg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_deg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def __add__(self, other: Laurent1) -> Laurent1:
        table = dict(self._terms)
        for e, c in other._terms.items():
            s = table.get(e, 0) + c
            if s:
                table[e] = s
            else:
                table.pop(e, None)
        out = Laurent1.__new__(Laurent1)
        out._terms = table
        return out

    def __neg__(self) -> Laurent1:
        out = Laurent1.__new__(Laurent1)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: Laurent1) -> Laurent1:
        return self + (-other)

    def __mul__(self, other: Laurent1) -> Laurent1:
        table: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = table.get(e, 0) + c1 * c2
                if s:
                    table[e] = s
                else:
                    table.pop(e, None)
        out = Laurent1.__new__(Laurent1)
        out._terms = table
        return out

    def __pow__(self, n: int) -> Laurent1:
        if n < 0:
            if not self.is_unit_monomial():
                raise ValueError("negative power of a non-unit polynomial")
            e, c = next(iter(self._terms.items()))
            base = Laurent1({-e: c})  # c is +-1, so c**-1 == c
            return base ** (-n)
        result = Laurent1.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def reciprocal_variable(self) -> Laurent1:
        """Image under inverting the variable (exponent negation)."""
        out = Laurent1.__new__(Laurent1)
        out._terms = {-e: c for e, c in self._terms.items()}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Laurent1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def to_text(self, var: str = "q") -> str:
        items = [((e,), c) for e, c in sorted(self._terms.items(), reverse=True)]
        return _render_terms(items, (var,))

    def to_json_terms(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    def __repr__(self) -> str:
        return f"Laurent1({self.to_text('x')})"


class Laurent2:
    """Bivariate Laurent polynomial in (a, z) with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        table = {}
        if terms:
            for key, c in terms.items():
                if c != 0:
                    table[(int(key[0]), int(key[1]))] = c
        self._terms = table

    @classmethod
    def zero(cls) -> Laurent2:
        return cls()

    @classmethod
    def one(cls) -> Laurent2:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, a_exp: int, z_exp: int) -> Laurent2:
        return cls({(a_exp, z_exp): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: Laurent2) -> Laurent2:
        table = dict(self._terms)
        for key, c in other._terms.items():
            s = table.get(key, 0) + c
            if s:
                table[key] = s
            else:
                table.pop(key, None)
        out = Laurent2.__new__(Laurent2)
        out._terms = table
        return out

    def __neg__(self) -> Laurent2:
        out = Laurent2.__new__(Laurent2)
        out._terms = {key: -c for key, c in self._terms.items()}
        return out

    def __sub__(self, other: Laurent2) -> Laurent2:
        return self + (-other)

    def __mul__(self, other: Laurent2) -> Laurent2:
        table: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = table.get(key, 0) + c1 * c2
                if s:
                    table[key] = s
                else:
                    table.pop(key, None)
        out = Laurent2.__new__(Laurent2)
        out._terms = table
        return out

    def mono_mul(self, coeff: int, a_shift: int, z_shift: int) -> Laurent2:
        """Multiply by coeff * a^a_shift * z^z_shift (coeff must be nonzero)."""
        if coeff == 0:
            raise ValueError("monomial coefficient must be nonzero")
        out = Laurent2.__new__(Laurent2)
        out._terms = {
            (i + a_shift, j + z_shift): c * coeff for (i, j), c in self._terms.items()
        }
        return out

    def min_a(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no a-degree")
        return min(i for i, _ in self._terms)

    def max_a(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no a-degree")
        return max(i for i, _ in self._terms)

    def min_z(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no z-degree")
        return min(j for _, j in self._terms)

    def spread_a(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no a-spread")
        exps = [i for i, _ in self._terms]
        return max(exps) - min(exps)

    def a_stratum(self, a_exp: int) -> Laurent1:
        """The z-polynomial multiplying a^a_exp."""
        return Laurent1({j: c for (i, j), c in self._terms.items() if i == a_exp})

    def summarize(self) -> PolySummary:
        if not self._terms:
            raise ValueError("zero polynomial has no summary")
        hi = self.max_a()
        lo = self.min_a()
        top_zpow = max(j for (i, j) in self._terms if i == hi)
        bot_zpow = max(j for (i, j) in self._terms if i == lo)
        return PolySummary(
            max_a=hi,
            top_coeff=self._terms[(hi, top_zpow)],
            top_zpow=top_zpow,
            min_a=lo,
            bot_coeff=self._terms[(lo, bot_zpow)],
            bot_zpow=bot_zpow,
        )

    def substitute(self, a_image: Laurent1, z_image: Laurent1) -> Laurent1:
        """Image under a -> a_image, z -> z_image, computed exactly.

        Negative powers of either variable require the corresponding image
        to be a unit monomial, since general Laurent polynomials are not
        invertible over the integers.
        """
        if self._terms and self.min_z() < 0 and not z_image.is_unit_monomial():
            raise ValueError("negative z-power with non-unit image")
        if self._terms and self.min_a() < 0 and not a_image.is_unit_monomial():
            raise ValueError("negative a-power with non-unit image")
        a_pows: dict[int, Laurent1] = {}
        z_pows: dict[int, Laurent1] = {}
        result = Laurent1.zero()
        for (i, j), c in sorted(self._terms.items()):
            if i not in a_pows:
                a_pows[i] = a_image**i
            if j not in z_pows:
                z_pows[j] = z_image**j
            result = result + a_pows[i] * z_pows[j] * Laurent1.monomial(c, 0)
        return result

    def substitute_a_inverse(self) -> Laurent2:
        """Image under a -> a^-1 (the mirror map on regular-isotopy values)."""
        out = Laurent2.__new__(Laurent2)
        out._terms = {(-i, j): c for (i, j), c in self._terms.items()}
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def to_text(self) -> str:
        items = [
            ((i, j), c)
            for (i, j), c in sorted(
                self._terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])
            )
        ]
        return _render_terms(items, ("a", "z"))

    def to_json_terms(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self._terms.items())]

    def __repr__(self) -> str:
        return f"Laurent2({self.to_text()})"


@dataclass(frozen=True)
class PolySummary:
    """Extreme a-degree data: the top z-term at the highest and lowest a-power.

    Mirrors the two-sided bracket shorthand used for degree bookkeeping:
    [<top_coeff z^top_zpow> a^max_a, <bot_coeff z^bot_zpow> a^min_a].
    """

    max_a: int
    top_coeff: int
    top_zpow: int
    min_a: int
    bot_coeff: int
    bot_zpow: int

    def __post_init__(self):
        if self.max_a < self.min_a:
            raise ValueError("max_a must be >= min_a")
        if self.top_coeff == 0 or self.bot_coeff == 0:
            raise ValueError("summary coefficients must be nonzero")

    def bracket_notation(self) -> str:
        def side(coeff: int, zpow: int, a_exp: int) -> str:
            z = "" if zpow == 0 else ("z" if zpow == 1 else f"z^{zpow}")
            c = "" if coeff == 1 and z else str(coeff)
            if coeff == -1 and z:
                c = "-"
            return f"<{c}{z}>a^{a_exp}"

        return "[{}, {}]".format(
            side(self.top_coeff, self.top_zpow, self.max_a),
            side(self.bot_coeff, self.bot_zpow, self.min_a),
        )


def add(x: Laurent2, y: Laurent2) -> Laurent2:
    return x + y


def mul(x: Laurent2, y: Laurent2) -> Laurent2:
    return x * y


def mono_mul(x: Laurent2, coeff: int, a_shift: int, z_shift: int) -> Laurent2:
    return x.mono_mul(coeff, a_shift, z_shift)


def spread_a(x: Laurent2) -> int:
    return x.spread_a()


def summarize(x: Laurent2) -> PolySummary:
    return x.summarize()


def substitute(x: Laurent2, a_image: Laurent1, z_image: Laurent1) -> Laurent1:
    return x.substitute(a_image, z_image)
