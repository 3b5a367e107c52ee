"""Membership and closure arithmetic for hyperstandard multiplicity sets.

Given a finite rational set R in [0, 1], this module decides and enumerates
the derived sets used everywhere else in the package:

* ``phi(R)``          -- values ``1 - r/m`` for ``r`` in R and integer m >= 1,
                         intersected with [0, 1] (infinite; enumerated under
                         an explicit truncation);
* ``phi(R, eps)``     -- the same with the tail interval ``[1-eps, 1]`` added;
* ``closure(R)``      -- values ``r0 - m * sum(1 - r_i)`` clipped to be
                         nonnegative, where adjunction coefficients live;
* ``r_n_set / r_prime`` -- the 1/n-shift lattices of the closure;
* the floor predicate ``pn_contains`` that forces complements to dominate
  the boundary.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rationals import MultSet, PreconditionError, lcm_denominators


@dataclass(frozen=True)
class PhiWitness:
    """A certificate that ``value`` equals ``1 - r/m`` for r in the set."""

    value: Fraction
    r: Fraction
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError(f"witness multiplier m={self.m} must be positive")
        if 1 - self.r / self.m != self.value or not (0 <= self.value <= 1):
            raise PreconditionError(
                f"invalid witness: 1 - {self.r}/{self.m} != {self.value}"
            )

    def to_json(self) -> dict:
        return {"value": str(self.value), "r": str(self.r), "m": self.m}


@dataclass(frozen=True)
class ClosureElement:
    """A witnessed element ``r0 - m * sum(1 - r_i)`` of the closed set.

    Parts with ``r_i = 1`` contribute nothing and are never stored.
    """

    value: Fraction
    r0: Fraction
    m: int
    parts: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError("multiplier m must be positive")
        if any(not (0 <= p < 1) for p in self.parts):
            raise PreconditionError("closure parts must lie in [0, 1)")
        expected = self.r0 - self.m * sum((1 - p for p in self.parts), Fraction(0))
        if expected != self.value or self.value < 0:
            raise PreconditionError(f"invalid closure element: {self}")


def _check_unit(name: str, x: Fraction) -> None:
    if not (0 <= x <= 1):
        raise PreconditionError(f"{name}={x} outside [0, 1]")


def phi_contains(R: MultSet, a: Fraction) -> PhiWitness | None:
    """Decide ``a in phi(R)``, returning a witness ``(r, m)`` if one exists.

    The value 1 is attained only by ``r = 0``; for a < 1 each positive r is
    tested for ``m = r / (1 - a)`` being a positive integer.  The smallest
    admissible r wins, which makes the witness deterministic.
    """
    _check_unit("a", a)
    if a == 1:
        return PhiWitness(Fraction(1), Fraction(0), 1) if Fraction(0) in R else None
    gap = 1 - a
    for r in R:
        if r <= 0:
            continue
        m = r / gap
        if m.denominator == 1 and m >= 1:
            return PhiWitness(a, r, int(m))
    return None


def phi_enumerate(R: MultSet, m_max: int) -> MultSet:
    """The truncation ``{1 - r/m : r in R, 1 <= m <= m_max}`` of phi(R).

    phi(R) is infinite with accumulation at 1, so the truncation bound is
    mandatory; callers own the choice of ``m_max``.
    """
    if m_max < 1:
        raise PreconditionError(f"m_max={m_max} must be >= 1")
    values: set[Fraction] = set()
    for r in R:
        if r == 0:
            values.add(Fraction(1))
        else:
            values.update(1 - Fraction(r, m) for m in range(1, m_max + 1))
    return MultSet(values)


def phi_eps_contains(R: MultSet, eps: Fraction, a: Fraction) -> bool:
    """Membership in ``phi(R) union [1-eps, 1]``."""
    _check_unit("eps", eps)
    _check_unit("a", a)
    return a >= 1 - eps or phi_contains(R, a) is not None


@functools.lru_cache(maxsize=512)
def closure_elements(R: MultSet) -> tuple[ClosureElement, ...]:
    """Enumerate the closed set with one witness per value.

    Termination: a part with r < 1 costs at least ``eps = min(1 - r)`` per
    copy, so ``m * len(parts) <= r0 / eps``; the search walks multisets of
    parts with that budget and keeps nonnegative values only.  Inputs are
    immutable, so results are cached.
    """
    if len(R) == 0:
        raise PreconditionError("closure of the empty set")
    # Cheapest parts first so the search can cut off whole suffixes.
    pool = sorted((r for r in R if r < 1), reverse=True)
    found: dict[Fraction, ClosureElement] = {
        r0: ClosureElement(r0, r0, 1, ()) for r0 in R
    }
    if not pool:
        return tuple(found[v] for v in sorted(found))
    eps = min(1 - r for r in pool)
    costs = [1 - r for r in pool]

    def walk(r0: Fraction, m: int, start: int, cost: Fraction, parts: list[Fraction]):
        # cost = sum(1 - r_i) so far; value = r0 - m * cost.
        if parts:
            value = r0 - m * cost
            if value not in found:
                found[value] = ClosureElement(value, r0, m, tuple(parts))
        for i in range(start, len(pool)):
            new_cost = cost + costs[i]
            if m * new_cost > r0:
                break
            parts.append(pool[i])
            walk(r0, m, i, new_cost, parts)
            parts.pop()

    for r0 in R:
        if r0 == 0:
            continue
        m_cap = math.floor(r0 / eps)
        for m in range(1, m_cap + 1):
            walk(r0, m, 0, Fraction(0), [])
    return tuple(found[v] for v in sorted(found))


def closure(R: MultSet) -> MultSet:
    """The closed multiplicity set of R (contains R, stays inside [0, 1])."""
    return MultSet(e.value for e in closure_elements(R))


def closure_is_idempotent(R: MultSet) -> bool:
    """Whether closing twice adds nothing.  Checkable, not assumed."""
    once = closure(R)
    return closure(once) == once


def r_n_set(R: MultSet, n: int) -> MultSet:
    """The shift lattice ``(closure(R) + (1/n)Z)`` cut to [0, 1]."""
    if n < 1:
        raise PreconditionError(f"n={n} must be >= 1")
    out: set[Fraction] = set()
    for x in closure(R):
        k_lo = math.ceil(-x * n)
        k_hi = math.floor((1 - x) * n)
        out.update(x + Fraction(k, n) for k in range(k_lo, k_hi + 1))
    return MultSet(out)


def r_prime(R: MultSet, indices: Iterable[int]) -> MultSet:
    """Union of the shift lattices over a set of indices."""
    idx = sorted(set(indices))
    if not idx:
        raise PreconditionError("r_prime: empty index set")
    out: set[Fraction] = set()
    for n in idx:
        out.update(r_n_set(R, n))
    return MultSet(out)


def pn_contains(n: int, a: Fraction) -> bool:
    """The floor criterion: 0 <= a <= 1 and ``floor((n+1)a) >= n*a``."""
    if n < 1:
        raise PreconditionError(f"n={n} must be >= 1")
    if a < 0 or a > 1:
        return False
    return math.floor((n + 1) * a) >= n * a


def pn_lemma_check(R: MultSet, n: int, eps: Fraction, m_max: int) -> bool:
    """Check the truncated inclusion ``phi(R, eps) subset P_n``.

    Requires ``I(R) | n`` and ``eps <= 1/(n+1)``; violations raise a
    distinct :class:`PreconditionError` so callers can probe the failure
    mode.  The interval part ``[1-eps, 1]`` needs no sampling: there
    ``(n+1)a > n`` forces ``floor((n+1)a) >= n >= n*a``.
    """
    interval = lcm_denominators(R)
    if n % interval != 0:
        raise PreconditionError(f"I(R)={interval} does not divide n={n}")
    if not (0 <= eps <= Fraction(1, n + 1)):
        raise PreconditionError(f"eps={eps} outside [0, 1/{n + 1}]")
    return all(pn_contains(n, a) for a in phi_enumerate(R, m_max))
