"""Exact computation of Kauffman polynomials, arc presentations, and
arc-index bounds for pretzel links."""

from .laurent import Laurent1, Laurent2, PolySummary
from .pretzel import FamilySpec, PretzelSpec, parse_pretzel

__all__ = [
    "Laurent1",
    "Laurent2",
    "PolySummary",
    "FamilySpec",
    "PretzelSpec",
    "parse_pretzel",
]

__version__ = "0.1.0"
