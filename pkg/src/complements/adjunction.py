"""Exact coefficient arithmetic for adjunction along divisors and fibres.

Covers the multiplicity formula of divisorial adjunction, log canonical
thresholds of fibre germs over a codimension-one point (and the induced
divisorial part), the discriminant table for degenerate elliptic fibres,
the degree bookkeeping of the canonical bundle formula for elliptic
surfaces, and two small numerical bounds for surface germs and ruled
surfaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .hyperstandard import PhiWitness, closure, phi_contains, phi_eps_contains
from .rationals import DomainError, MultSet, PreconditionError, parse_rational


# ---------------------------------------------------------------------------
# Divisorial adjunction (the different)

@dataclass(frozen=True)
class DiffInput:
    """Local data of a divisor germ: index n and terms (k_i, b_i)."""

    n: int
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"germ index n={self.n} must be positive")
        for k, b in self.terms:
            if k < 0:
                raise PreconditionError(f"intersection number k={k} must be >= 0")
            if not (0 <= b <= 1):
                raise PreconditionError(f"boundary multiplicity {b} outside [0, 1]")


def diff_multiplicity(inp: DiffInput) -> Fraction:
    """The adjunction multiplicity ``1 - 1/n + (sum k_i b_i)/n``."""
    acc = sum((k * b for k, b in inp.terms), Fraction(0))
    return 1 - Fraction(1, inp.n) + acc / inp.n


@dataclass(frozen=True)
class DiffMembership:
    """Certificate that an adjunction multiplicity is semi-hyperstandard
    over the closed set: either a witness or the tail flag ``d >= 1-eps``."""

    value: Fraction
    witness: PhiWitness | None
    in_tail: bool

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "witness": self.witness.to_json() if self.witness else None,
            "in_tail": self.in_tail,
        }


def diff_in_hyperstandard(R: MultSet, eps: Fraction, inp: DiffInput) -> DiffMembership:
    """Certify that the adjunction multiplicity lands in phi(closure(R), eps).

    Requires 1 in R, every contributing b semi-hyperstandard over R, and a
    plt germ (multiplicity < 1).  The witness search over the closed set is
    complete for values below 1, so a missing certificate would disprove
    the containment rather than time out.
    """
    if Fraction(1) not in R:
        raise PreconditionError("the multiplicity set must contain 1")
    if not (0 <= eps <= 1):
        raise PreconditionError(f"eps={eps} outside [0, 1]")
    for k, b in inp.terms:
        if k > 0 and not phi_eps_contains(R, eps, b):
            raise DomainError(f"multiplicity {b} is not semi-hyperstandard over R")
    d = diff_multiplicity(inp)
    if d >= 1:
        raise DomainError(f"adjunction multiplicity {d} >= 1: germ is not plt")
    witness = phi_contains(closure(R), d)
    if witness is not None:
        return DiffMembership(d, witness, False)
    if d >= 1 - eps:
        return DiffMembership(d, None, True)
    raise DomainError(f"no hyperstandard certificate for multiplicity {d}")


# ---------------------------------------------------------------------------
# Fibre germs over a codimension-one point

@dataclass(frozen=True)
class FiberGerm:
    """Components of a fibre on an snc model: (multiplicity in the pulled
    back fibre, multiplicity in the crepant boundary).

    Boundary multiplicities may be negative: a component extracted with
    positive discrepancy a carries d = -a.  One representation serves both
    honest boundary fibres and resolution germs.
    """

    components: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.components:
            raise PreconditionError("fibre germ must have at least one component")
        for mu, d in self.components:
            if mu < 1:
                raise PreconditionError(f"fibre multiplicity {mu} must be >= 1")
            if d > 1:
                raise PreconditionError(f"boundary multiplicity {d} exceeds 1")

    @classmethod
    def parse(cls, text: str) -> "FiberGerm":
        """Parse ``"mu:d,mu:d,..."`` such as ``"1:0,2:-1,3:-2,6:-4"``."""
        comps = []
        for item in (p.strip() for p in text.split(",")):
            if not item:
                continue
            mu, _, d = item.partition(":")
            comps.append((int(mu), parse_rational(d)))
        return cls(tuple(comps))

    def to_json(self) -> list[list[str]]:
        return [[str(mu), str(d)] for mu, d in self.components]


class LcThreshold(NamedTuple):
    c_w: Fraction
    d_w: Fraction


def lct_over_divisor(germ: FiberGerm) -> LcThreshold:
    """Largest c with ``d + c*mu <= 1`` on every component, and ``1 - c``.

    The second value is the multiplicity the divisorial part of adjunction
    assigns to the base point under the germ.
    """
    c = min((1 - d) / mu for mu, d in germ.components)
    return LcThreshold(c, 1 - c)


def divisorial_shift(germ: FiberGerm, c: Fraction) -> FiberGerm:
    """Add ``c`` times the pulled-back fibre to the boundary."""
    return FiberGerm(tuple((mu, d + c * mu) for mu, d in germ.components))


def germ_from_blowups(
    initial: Iterable[tuple[int, Fraction]],
    steps: Iterable[Iterable[tuple[int, int]]],
) -> FiberGerm:
    """Resolution bookkeeping oracle: blow up points until the germ is snc.

    ``initial`` lists the fibre's prime components as (mu, d) pairs; each
    step blows up one point and names the components through it as
    (component index, local multiplicity of that component's curve at the
    point).  The exceptional component picks up

        mu = sum(local_mult * mu_i),   d = sum(local_mult * d_i) - 1,

    i.e. the fibre multiplicity adds up along total transforms while the
    crepant boundary drops by the discrepancy of the blowup.
    """
    comps: list[tuple[int, Fraction]] = [(mu, Fraction(d)) for mu, d in initial]
    for step in steps:
        mu_new = 0
        d_new = Fraction(-1)
        for index, local_mult in step:
            mu_i, d_i = comps[index]
            mu_new += local_mult * mu_i
            d_new += local_mult * d_i
        comps.append((mu_new, d_new))
    return FiberGerm(tuple(comps))


# ---------------------------------------------------------------------------
# Degenerate elliptic fibres

_KODAIRA_TAGS = ("mI_n", "II", "III", "IV", "Istar", "IIstar", "IIIstar", "IVstar")


@dataclass(frozen=True)
class KodairaType:
    """A degenerate-fibre type of a minimal elliptic fibration."""

    tag: str
    m: int = 1

    def __post_init__(self):
        if self.tag not in _KODAIRA_TAGS:
            raise DomainError(f"unknown fibre type {self.tag!r}")
        if self.m < 1:
            raise PreconditionError(f"fibre multiplicity m={self.m} must be >= 1")
        if self.tag != "mI_n" and self.m != 1:
            raise PreconditionError(f"type {self.tag} carries no multiplicity")

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        s = text.strip()
        if s.startswith("mI_n"):
            _, _, m = s.partition(":")
            if not m:
                raise DomainError("multiple-fibre type needs a multiplicity, e.g. mI_n:2")
            return cls("mI_n", int(m))
        return cls(s)

    def __str__(self) -> str:
        return f"mI_n:{self.m}" if self.tag == "mI_n" else self.tag


def kodaira_dP(t: KodairaType) -> Fraction:
    """Discriminant multiplicity of the fibre type."""
    if t.tag == "mI_n":
        return 1 - Fraction(1, t.m)
    return {
        "II": Fraction(1, 6),
        "III": Fraction(1, 4),
        "IV": Fraction(1, 3),
        "Istar": Fraction(1, 2),
        "IIstar": Fraction(5, 6),
        "IIIstar": Fraction(3, 4),
        "IVstar": Fraction(2, 3),
    }[t.tag]


def kodaira_resolution_germ(t: KodairaType) -> FiberGerm:
    """An snc germ realising the fibre type, for the threshold cross-check.

    The starred types and IV are snc already, with Kodaira's component
    multiplicities and trivial boundary.  Types mI_n (nodal representative,
    n = 1), II and III need blowups of the node, the cusp and the tangency
    respectively; the stored pairs are regenerated by the blowup oracle
    :func:`germ_from_blowups` in the test suite.
    """
    zero = Fraction(0)
    if t.tag == "mI_n":
        m = t.m
        return FiberGerm(((m, zero), (2 * m, Fraction(-1))))
    data = {
        "II": ((1, 0), (2, -1), (3, -2), (6, -4)),
        "III": ((1, 0), (1, 0), (2, -1), (4, -2)),
        "IV": ((1, 0), (1, 0), (1, 0), (3, -1)),
        "Istar": ((1, 0), (1, 0), (1, 0), (1, 0), (2, 0)),
        "IIstar": ((1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (4, 0), (2, 0), (3, 0)),
        "IIIstar": ((1, 0), (2, 0), (3, 0), (4, 0), (3, 0), (2, 0), (1, 0), (2, 0)),
        "IVstar": ((1, 0), (1, 0), (1, 0), (2, 0), (2, 0), (2, 0), (3, 0)),
    }[t.tag]
    return FiberGerm(tuple((mu, Fraction(d)) for mu, d in data))


# ---------------------------------------------------------------------------
# Canonical bundle formula on a curve base

@dataclass(frozen=True)
class EllipticFibration:
    """A minimal elliptic surface over a curve: genus, fibre types, deg j."""

    base_genus: int
    fibers: tuple[tuple[str, KodairaType], ...]
    j_degree: int = 0

    def __post_init__(self):
        if self.base_genus < 0:
            raise PreconditionError("base genus must be >= 0")
        if self.j_degree < 0:
            raise PreconditionError("j-map degree must be >= 0")
        labels = [lbl for lbl, _ in self.fibers]
        if len(labels) != len(set(labels)):
            raise DomainError("fibre labels must be pairwise distinct")


@dataclass(frozen=True)
class EllipticAdjunction:
    """Output of the canonical bundle formula: divisorial part, degrees,
    and the lcm of the discriminant denominators."""

    d_div: tuple[tuple[str, Fraction], ...]
    deg_dmod: Fraction
    deg_total: Fraction
    torsion_index: int

    def to_json(self) -> dict:
        return {
            "d_div": [[lbl, str(d)] for lbl, d in self.d_div],
            "deg_dmod": str(self.deg_dmod),
            "deg_total": str(self.deg_total),
            "torsion_index": self.torsion_index,
        }


def elliptic_formula(e: EllipticFibration) -> EllipticAdjunction:
    """Evaluate the canonical bundle formula degree by degree.

    The moduli part contributes deg(j)/12; the total is the degree of
    ``K_base + D_div + D_mod``.  The torsion index is meaningful when the
    total degree and the moduli degree both vanish (then it is the order
    of the canonical class).
    """
    d_div = tuple((lbl, kodaira_dP(t)) for lbl, t in e.fibers)
    deg_dmod = Fraction(e.j_degree, 12)
    deg_total = (2 * e.base_genus - 2) + sum((d for _, d in d_div), Fraction(0)) + deg_dmod
    torsion = math.lcm(*(d.denominator for _, d in d_div)) if d_div else 1
    return EllipticAdjunction(d_div, deg_dmod, deg_total, torsion)


def moduli_degree_ruled(e: int, sections: Iterable[tuple[Fraction, Fraction]]) -> Fraction:
    """Moduli-part degree ``sum d_i a_i - e`` for four sections on a ruled surface.

    Sections are (multiplicity, fibre offset) pairs; offsets satisfy
    ``a >= e`` except possibly for the one sitting on the minimal section,
    and the multiplicities sum to 2.
    """
    if e < 0:
        raise PreconditionError(f"ruling invariant e={e} must be >= 0")
    secs = [(Fraction(d), Fraction(a)) for d, a in sections]
    if len(secs) != 4:
        raise PreconditionError(f"expected exactly 4 sections, got {len(secs)}")
    if sum(d for d, _ in secs) != 2:
        raise PreconditionError("section multiplicities must sum to 2")
    for d, a in secs:
        if not (0 <= d <= 1):
            raise PreconditionError(f"section multiplicity {d} outside [0, 1]")
        if a < 0:
            raise PreconditionError(f"section offset {a} must be >= 0")
    if sum(1 for _, a in secs if a < e) > 1:
        raise PreconditionError("at most one section may sit below the ruling invariant")
    return sum((d * a for d, a in secs), Fraction(0)) - e


# ---------------------------------------------------------------------------
# Surface germ discrepancy bound

class PairDiscrepancy(NamedTuple):
    total: Fraction
    bound_ok: bool
    blowup_discrepancy: Fraction


def pair_discr_bound(lambdas: Iterable[Fraction], eps: Fraction) -> PairDiscrepancy:
    """Check ``sum lambda_i <= 2 - eps`` and report the blowup discrepancy
    ``1 - sum lambda_i`` of the point the curves pass through."""
    if eps < 0:
        raise PreconditionError(f"eps={eps} must be >= 0")
    ls = [Fraction(x) for x in lambdas]
    for x in ls:
        if not (0 <= x <= 1):
            raise PreconditionError(f"multiplicity {x} outside [0, 1]")
    total = sum(ls, Fraction(0))
    return PairDiscrepancy(total, total <= 2 - eps, 1 - total)
