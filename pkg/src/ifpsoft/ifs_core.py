"""Intuitionistic fuzzy sets and plain fuzzy sets over a finite ground set."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

TOL = 1e-9


class DomainError(ValueError):
    """Raised when inputs violate a precondition of the algebra."""


def close(a: float, b: float, tol: float = TOL) -> bool:
    return abs(a - b) <= tol


def prob_sum(a: float, b: float) -> float:
    """Algebraic (probabilistic) sum a + b - ab.

    Evaluated as 1 - (1-a)(1-b) so that 1 stays absorbing and 0 stays
    neutral in floating point.
    """
    return 1.0 - (1.0 - a) * (1.0 - b)


def check_degrees(alpha, beta, where: str = "") -> None:
    suffix = f" at {where}" if where else ""
    for name, v in (("alpha", alpha), ("beta", beta)):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise DomainError(f"{name}{suffix} must be a real number, got {v!r}")
        if not math.isfinite(v) or v < 0.0 or v > 1.0:
            raise DomainError(f"{name}{suffix} must lie in [0, 1], got {v!r}")
    if alpha + beta > 1.0 + TOL:
        raise DomainError(
            f"alpha + beta{suffix} must not exceed 1, got {alpha!r} + {beta!r}"
        )


@dataclass(frozen=True)
class DegreePair:
    """A (membership, non-membership) pair with alpha + beta <= 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        check_degrees(self.alpha, self.beta)

    @classmethod
    def unchecked(cls, alpha: float, beta: float) -> "DegreePair":
        # Used for reduction results, which may legitimately leave [0, 1].
        obj = object.__new__(cls)
        object.__setattr__(obj, "alpha", alpha)
        object.__setattr__(obj, "beta", beta)
        return obj

    @property
    def hesitation(self) -> float:
        return 1.0 - self.alpha - self.beta

    def is_close(self, other: "DegreePair", tol: float = TOL) -> bool:
        return close(self.alpha, other.alpha, tol) and close(self.beta, other.beta, tol)

    def is_valid(self) -> bool:
        try:
            check_degrees(self.alpha, self.beta)
        except DomainError:
            return False
        return True


NON_MEMBER = DegreePair(0.0, 1.0)


def _ground(ground: Iterable[str]) -> tuple[str, ...]:
    items = list(ground)
    if len(set(items)) != len(items):
        raise DomainError(f"duplicate identifiers in ground set: {items!r}")
    for item in items:
        if not isinstance(item, str):
            raise DomainError(f"identifiers must be strings, got {item!r}")
    return tuple(sorted(items))


@dataclass(frozen=True, eq=False)
class IntuitionisticFuzzySet:
    """Sparse map from ground elements to degree pairs; absent keys read (0, 1)."""

    ground: tuple[str, ...]
    degrees: Mapping[str, DegreePair]

    def __init__(self, ground: Iterable[str], degrees: Mapping[str, DegreePair] | None = None):
        g = _ground(ground)
        members = set(g)
        stored = {}
        for x, d in (degrees or {}).items():
            if x not in members:
                raise DomainError(f"element {x!r} is not in the ground set")
            if not isinstance(d, DegreePair):
                d = DegreePair(*d)
            if d != NON_MEMBER:
                stored[x] = d
        object.__setattr__(self, "ground", g)
        object.__setattr__(self, "degrees", stored)

    @classmethod
    def _raw(cls, ground: tuple[str, ...], degrees: dict[str, DegreePair]) -> "IntuitionisticFuzzySet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "ground", ground)
        object.__setattr__(obj, "degrees", {x: d for x, d in degrees.items() if d != NON_MEMBER})
        return obj

    def __getitem__(self, x: str) -> DegreePair:
        if x not in self.ground:
            raise KeyError(x)
        return self.degrees.get(x, NON_MEMBER)

    def items(self):
        return [(x, self[x]) for x in self.ground]

    def __eq__(self, other):
        if not isinstance(other, IntuitionisticFuzzySet):
            return NotImplemented
        return self.ground == other.ground and all(
            self[x].is_close(other[x]) for x in self.ground
        )

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{x}:({d.alpha:g},{d.beta:g})" for x, d in self.degrees.items())
        return f"IntuitionisticFuzzySet({{{body}}} over {len(self.ground)} elements)"


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """Sparse map from ground elements to a membership degree; absent keys read 0."""

    ground: tuple[str, ...]
    mu: Mapping[str, float]

    def __init__(self, ground: Iterable[str], mu: Mapping[str, float] | None = None):
        g = _ground(ground)
        members = set(g)
        stored = {}
        for x, v in (mu or {}).items():
            if x not in members:
                raise DomainError(f"element {x!r} is not in the ground set")
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not (0.0 <= v <= 1.0):
                raise DomainError(f"membership of {x!r} must lie in [0, 1], got {v!r}")
            if v != 0.0:
                stored[x] = float(v)
        object.__setattr__(self, "ground", g)
        object.__setattr__(self, "mu", stored)

    @classmethod
    def _raw(cls, ground: tuple[str, ...], mu: dict[str, float]) -> "FuzzySet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "ground", ground)
        object.__setattr__(obj, "mu", {x: v for x, v in mu.items() if v != 0.0})
        return obj

    def __getitem__(self, x: str) -> float:
        if x not in self.ground:
            raise KeyError(x)
        return self.mu.get(x, 0.0)

    def items(self):
        return [(x, self[x]) for x in self.ground]

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return self.ground == other.ground and all(
            close(self[x], other[x]) for x in self.ground
        )

    __hash__ = None


def _same_ground(a, b) -> tuple[str, ...]:
    if a.ground != b.ground:
        raise DomainError(f"ground sets differ: {list(a.ground)} vs {list(b.ground)}")
    return a.ground


def ifs_subset(a: IntuitionisticFuzzySet, b: IntuitionisticFuzzySet) -> bool:
    g = _same_ground(a, b)
    return all(a[x].alpha <= b[x].alpha + TOL and a[x].beta >= b[x].beta - TOL for x in g)


def ifs_equal(a: IntuitionisticFuzzySet, b: IntuitionisticFuzzySet) -> bool:
    _same_ground(a, b)
    return a == b


def ifs_complement(a: IntuitionisticFuzzySet) -> IntuitionisticFuzzySet:
    return IntuitionisticFuzzySet._raw(
        a.ground, {x: DegreePair(d.beta, d.alpha) for x, d in a.items()}
    )


def _pointwise(a, b, fn) -> IntuitionisticFuzzySet:
    g = _same_ground(a, b)
    return IntuitionisticFuzzySet._raw(g, {x: fn(a[x], b[x]) for x in g})


def ifs_union(a, b):
    return _pointwise(a, b, lambda p, q: DegreePair(max(p.alpha, q.alpha), min(p.beta, q.beta)))


def ifs_intersection(a, b):
    return _pointwise(a, b, lambda p, q: DegreePair(min(p.alpha, q.alpha), max(p.beta, q.beta)))


def ifs_sum(a, b):
    return _pointwise(a, b, lambda p, q: DegreePair(prob_sum(p.alpha, q.alpha), p.beta * q.beta))


def ifs_product(a, b):
    return _pointwise(a, b, lambda p, q: DegreePair(p.alpha * q.alpha, prob_sum(p.beta, q.beta)))
