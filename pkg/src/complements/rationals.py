"""Exact rational scalars and the shared set/boundary containers.

Every quantity in this package is an exact ``fractions.Fraction``.  There is
no floating point anywhere: all comparisons, floors and thresholds are
evaluated in arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator

# The scalar type used throughout.  Always stored in lowest terms with a
# positive denominator, which Fraction guarantees.
Rational = Fraction


class DomainError(ValueError):
    """A mathematically invalid input (malformed text, value out of range)."""


class PreconditionError(DomainError):
    """An operation was invoked outside its stated preconditions."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact value in lowest terms."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise DomainError(f"malformed rational: {text!r}")
    num, _, den = s.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise DomainError(f"zero denominator: {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``"p/q"`` in lowest terms, ``"p"`` for integers."""
    return str(Fraction(x))


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"not an exact rational: {value!r}")


def _coerce_unit(value) -> Fraction:
    x = _coerce(value)
    if x < 0 or x > 1:
        raise DomainError(f"multiplicity {x} outside [0, 1]")
    return x


class MultSet:
    """A finite set of rationals in [0, 1], kept sorted and deduplicated.

    Models the multiplicity sets the whole package is parametrised by, as
    well as their derived/closed and shifted variants.
    """

    __slots__ = ("elements",)

    def __init__(self, values: Iterable) -> None:
        self.elements: tuple[Fraction, ...] = tuple(sorted({_coerce_unit(v) for v in values}))

    @classmethod
    def parse(cls, text: str) -> "MultSet":
        """Parse a comma-separated list such as ``"0,1/2,1"``."""
        items = [s for s in (p.strip() for p in text.split(",")) if s]
        if not items:
            raise DomainError(f"empty multiplicity set: {text!r}")
        return cls(items)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value) -> bool:
        return _coerce(value) in self.elements

    def __eq__(self, other) -> bool:
        if isinstance(other, MultSet):
            return self.elements == other.elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"MultSet({{{', '.join(format_rational(x) for x in self.elements)}}})"

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.elements]


def lcm_denominators(s: MultSet) -> int:
    """lcm of the denominators of the nonzero elements (1 if all zero)."""
    if len(s) == 0:
        raise PreconditionError("lcm_denominators: empty set")
    return math.lcm(*(x.denominator for x in s if x != 0))


class BoundaryP1:
    """A boundary on the projective line: labelled points with multiplicities.

    Labels are pairwise distinct; each multiplicity lies in [0, 1].  The
    degree is the sum of the multiplicities.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[tuple[str, object]]) -> None:
        pts = []
        seen: set[str] = set()
        for label, mult in points:
            label = str(label)
            if label in seen:
                raise DomainError(f"duplicate point label: {label!r}")
            seen.add(label)
            pts.append((label, _coerce_unit(mult)))
        self.points: tuple[tuple[str, Fraction], ...] = tuple(pts)

    @classmethod
    def from_mults(cls, mults: Iterable) -> "BoundaryP1":
        """Build a boundary from bare multiplicities with labels P1, P2, ..."""
        return cls((f"P{i}", m) for i, m in enumerate(mults, start=1))

    @classmethod
    def parse(cls, text: str) -> "BoundaryP1":
        """Parse ``"1/2,2/3"`` (auto labels) or ``"a=1/2,b=2/3"``."""
        pts = []
        auto = 1
        for item in (p.strip() for p in text.split(",")):
            if not item:
                continue
            if "=" in item:
                label, _, val = item.partition("=")
                pts.append((label.strip(), val.strip()))
            else:
                pts.append((f"P{auto}", item))
                auto += 1
        return cls(pts)

    @property
    def mults(self) -> tuple[Fraction, ...]:
        return tuple(m for _, m in self.points)

    @property
    def degree(self) -> Fraction:
        return sum(self.mults, Fraction(0))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(self.points)

    def __eq__(self, other) -> bool:
        if isinstance(other, BoundaryP1):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        inner = ", ".join(f"{lbl}={format_rational(m)}" for lbl, m in self.points)
        return f"BoundaryP1({inner})"

    def to_json(self) -> list[list[str]]:
        return [[lbl, format_rational(m)] for lbl, m in self.points]
