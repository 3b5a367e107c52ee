"""Decision, construction and enumeration of n-complements on the line.

A boundary on the projective line admits an n-complement exactly when the
per-point numerator requirements fit into degree 2n (the anticanonical
degree).  Two requirement variants are supported:

* ``DEFINITION`` -- numerator n at points of multiplicity 1 and
  ``floor((n+1) d)`` at fractional points (the defining inequality of an
  n-complement);
* ``GEQ``        -- numerator ``ceil(n d)`` everywhere, which forces the
  complement to dominate the boundary.

On inputs whose multiplicities satisfy the floor criterion of
:func:`complements.hyperstandard.pn_contains` the two variants coincide.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .hyperstandard import phi_enumerate
from .rationals import BoundaryP1, DomainError, MultSet, PreconditionError, lcm_denominators


class ComplementVariant(enum.Enum):
    DEFINITION = "definition"
    GEQ = "geq"

    @classmethod
    def parse(cls, text: str) -> "ComplementVariant":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise DomainError(f"unknown variant {text!r} (expected definition|geq)")


def point_requirement(d: Fraction, n: int, variant: ComplementVariant) -> int:
    """Minimal admissible numerator of the complement at a point of multiplicity d."""
    if variant is ComplementVariant.DEFINITION:
        if d == 1:
            return n
        return math.floor((n + 1) * d)
    return math.ceil(n * d)


@dataclass(frozen=True)
class ComplementCertificate:
    """Numerator data witnessing ``n(K + D+) ~ 0`` with D+ log canonical.

    ``numerators`` align with the boundary's points; ``extra_points`` hold
    the numerators placed at new general points.  The total is 2n because
    the canonical divisor of the line has degree -2.
    """

    n: int
    numerators: tuple[int, ...]
    extra_points: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"index n={self.n} must be positive")
        if any(not (0 <= a <= self.n) for a in self.numerators):
            raise PreconditionError("numerators must lie in [0, n]")
        if any(not (1 <= a <= self.n) for a in self.extra_points):
            raise PreconditionError("extra-point numerators must lie in [1, n]")
        if sum(self.numerators) + sum(self.extra_points) != 2 * self.n:
            raise PreconditionError("certificate degree must equal 2n")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "numerators": list(self.numerators),
            "extra_points": list(self.extra_points),
        }


def complement_exists(
    D: BoundaryP1, n: int, variant: ComplementVariant
) -> ComplementCertificate | None:
    """Build an n-complement certificate, or return None if none exists.

    Existence is the inequality ``sum of requirements <= 2n``; the slack is
    then distributed greedily (largest parts first, each at most n) over new
    general points.
    """
    if n < 1:
        raise PreconditionError(f"index n={n} must be positive")
    reqs = tuple(point_requirement(d, n, variant) for _, d in D)
    total = sum(reqs)
    if total > 2 * n:
        return None
    slack = 2 * n - total
    extras = [n] * (slack // n)
    if slack % n:
        extras.append(slack % n)
    return ComplementCertificate(n, reqs, tuple(extras))


def certificate_is_valid(
    cert: ComplementCertificate, D: BoundaryP1, variant: ComplementVariant
) -> bool:
    """Whether the certificate meets the variant's per-point lower bounds for D."""
    if len(cert.numerators) != len(D):
        return False
    return all(
        a >= point_requirement(d, cert.n, variant)
        for a, (_, d) in zip(cert.numerators, D)
    )


def min_complement_index(
    D: BoundaryP1, I: int, n_max: int, variant: ComplementVariant
) -> int | None:
    """Least ``n <= n_max`` divisible by I admitting an n-complement."""
    if I < 1:
        raise PreconditionError(f"I={I} must be positive")
    if n_max < I:
        raise PreconditionError(f"n_max={n_max} must be >= I={I}")
    for n in range(I, n_max + 1, I):
        if complement_exists(D, n, variant) is not None:
            return n
    return None


def scale_certificate(
    cert: ComplementCertificate, D: BoundaryP1, I: int
) -> ComplementCertificate:
    """Turn an n-certificate whose complement dominates D into an nI-certificate."""
    if I < 1:
        raise PreconditionError(f"I={I} must be positive")
    if len(cert.numerators) != len(D):
        raise PreconditionError("certificate does not align with the boundary")
    for a, (label, d) in zip(cert.numerators, D):
        if Fraction(a, cert.n) < d:
            raise PreconditionError(
                f"complement does not dominate the boundary at {label}: "
                f"{a}/{cert.n} < {d}"
            )
    return ComplementCertificate(
        cert.n * I,
        tuple(a * I for a in cert.numerators),
        tuple(a * I for a in cert.extra_points),
    )


def openness_radius(B: BoundaryP1, n: int) -> Fraction:
    """Sup-norm radius within which every n-complement of B keeps working.

    Equals ``min (1 - frac((n+1) b)) / (n+1)`` over points with b < 1; with
    no constraining component the full multiplicity interval works and the
    radius is 1.
    """
    if n < 1:
        raise PreconditionError(f"index n={n} must be positive")
    radius = Fraction(1)
    for _, b in B:
        if b < 1:
            t = (n + 1) * b
            radius = min(radius, (1 - (t - math.floor(t))) / (n + 1))
    return radius


def epsilon_from_N(N: int) -> Fraction:
    """The gap ``1/(N+2)`` attached to a supremum N of minimal indices."""
    if N < 1:
        raise PreconditionError(f"N={N} must be positive")
    return Fraction(1, N + 2)


class EnumerationCapError(DomainError):
    """Some admissible boundary needed an index beyond the n_max cap."""

    def __init__(self, mults: tuple[Fraction, ...], n_max: int):
        self.mults = mults
        self.n_max = n_max
        pretty = ", ".join(str(m) for m in mults)
        super().__init__(f"no admissible index <= {n_max} for boundary ({pretty})")


@dataclass(frozen=True)
class N1Report:
    """Attained minimal indices with one witness boundary per index."""

    indices: tuple[int, ...]
    witnesses: dict[int, BoundaryP1] = field(compare=False)
    cap_used: tuple[int, int] = (0, 0)  # (m_max, n_max)

    def to_json(self) -> dict:
        return {
            "indices": list(self.indices),
            "witnesses": {str(i): w.to_json() for i, w in self.witnesses.items()},
            "cap": {"m_max": self.cap_used[0], "n_max": self.cap_used[1]},
        }


def scan_minimal_indices(
    R: MultSet, m_max: int, n_max: int
) -> Iterator[tuple[tuple[Fraction, ...], int | None]]:
    """Walk every admissible boundary multiset and its minimal index.

    Multiplicities are drawn from the positive part of the phi(R)
    truncation; a multiset is admissible when it is klt (all d < 1, degree
    <= 2) or has degree exactly 2.  Minimality is over multiples of I(R)
    up to ``n_max`` in the DEFINITION variant; ``None`` marks a boundary
    whose minimal index exceeds the cap.

    The walk is depth-first over non-decreasing multiplicity tuples, so the
    output order (and hence every witness downstream) is canonical.
    Requirement sums are accumulated incrementally per candidate index.
    """
    interval = lcm_denominators(R)
    values = [v for v in phi_enumerate(R, m_max) if v > 0]
    candidates = list(range(interval, n_max + 1, interval))
    if not candidates:
        raise PreconditionError(f"n_max={n_max} below I(R)={interval}")
    req_rows = []
    for v in values:
        row = tuple(point_requirement(v, n, ComplementVariant.DEFINITION) for n in candidates)
        # Self-check: on phi(R) inputs with I(R) | n the two variants agree.
        geq_row = tuple(point_requirement(v, n, ComplementVariant.GEQ) for n in candidates)
        if row != geq_row:
            raise AssertionError(f"variant mismatch at multiplicity {v}")
        req_rows.append(row)
    caps = [2 * n for n in candidates]
    width = len(candidates)

    def min_index(sums: list[int]) -> int | None:
        for j in range(width):
            if sums[j] <= caps[j]:
                return candidates[j]
        return None

    two = Fraction(2)
    mults: list[Fraction] = []

    def admissible(total: Fraction) -> bool:
        return total == two or not mults or mults[-1] < 1

    def rec(start: int, total: Fraction, sums: list[int]):
        if admissible(total):
            yield tuple(mults), min_index(sums)
        for i in range(start, len(values)):
            v = values[i]
            new_total = total + v
            if new_total > two:
                break
            mults.append(v)
            row = req_rows[i]
            yield from rec(i, new_total, [s + row[j] for j, s in enumerate(sums)])
            mults.pop()

    yield from rec(0, Fraction(0), [0] * width)


def enumerate_N1(R: MultSet, m_max: int, n_max: int) -> N1Report:
    """The set of minimal complement indices over all admissible boundaries.

    Reports the truncation caps it ran under; acceptance of the result is a
    stabilization statement across caps, never a single-run truth claim.
    """
    if not any(r > 0 for r in R):
        raise PreconditionError("R must contain a positive element")
    witnesses: dict[int, BoundaryP1] = {}
    for mults, idx in scan_minimal_indices(R, m_max, n_max):
        if idx is None:
            raise EnumerationCapError(mults, n_max)
        if idx not in witnesses:
            witnesses[idx] = BoundaryP1.from_mults(mults)
    order = sorted(witnesses)
    return N1Report(tuple(order), {i: witnesses[i] for i in order}, (m_max, n_max))


def enumerate_N1_sweep(
    R: MultSet, m_maxes: Iterable[int], n_max: int
) -> list[N1Report]:
    """Run the enumeration once per truncation cap, in the given order."""
    return [enumerate_N1(R, m, n_max) for m in m_maxes]
