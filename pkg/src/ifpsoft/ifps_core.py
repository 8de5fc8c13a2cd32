"""Intuitionistic fuzzy-parametrized soft sets and their operation algebra.

An IFPS set over a universe U with parameter set E attaches to every
parameter x a degree pair (alpha, beta) and a support f(x), a subset of U.
Storage is sparse: a parameter without an entry reads as (0, 1, {}), the
"fully unimportant" entry, and explicit default entries are dropped.

Every binary operation ranges over all of E and requires both operands
to share U and E exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple

from .ifs_core import TOL, DegreePair, DomainError, FuzzySet, check_degrees, close, prob_sum


class Entry(NamedTuple):
    alpha: float
    beta: float
    support: frozenset

    @property
    def degrees(self) -> DegreePair:
        return DegreePair(self.alpha, self.beta)

    def is_default(self) -> bool:
        return self.alpha == 0.0 and self.beta == 1.0 and not self.support


DEFAULT_ENTRY = Entry(0.0, 1.0, frozenset())


def _ids(items: Iterable[str], what: str) -> tuple[str, ...]:
    items = list(items)
    if not items:
        raise DomainError(f"{what} must be nonempty")
    for item in items:
        if not isinstance(item, str):
            raise DomainError(f"{what} identifiers must be strings, got {item!r}")
    if len(set(items)) != len(items):
        raise DomainError(f"duplicate identifiers in {what}: {items!r}")
    return tuple(sorted(items))


@dataclass(frozen=True, eq=False)
class IFPSSet:
    universe: tuple[str, ...]
    params: tuple[str, ...]
    entries: Mapping[str, Entry]

    @classmethod
    def _raw(cls, universe, params, entries: dict[str, Entry]) -> "IFPSSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "universe", universe)
        object.__setattr__(obj, "params", params)
        object.__setattr__(obj, "entries", entries)
        return obj

    def __getitem__(self, x: str) -> Entry:
        if x not in self.params:
            raise KeyError(x)
        return self.entries.get(x, DEFAULT_ENTRY)

    def alpha(self, x: str) -> float:
        return self[x].alpha

    def beta(self, x: str) -> float:
        return self[x].beta

    def support(self, x: str) -> frozenset:
        return self[x].support

    def __eq__(self, other):
        if not isinstance(other, IFPSSet):
            return NotImplemented
        if self.universe != other.universe or self.params != other.params:
            return False
        return ifps_equal(self, other)

    __hash__ = None

    def __repr__(self):
        parts = []
        for x in self.params:
            if x in self.entries:
                e = self.entries[x]
                sup = ",".join(sorted(e.support))
                parts.append(f"{x}:({e.alpha:g},{e.beta:g},{{{sup}}})")
        return f"IFPSSet(U={list(self.universe)}, E={list(self.params)}, {{{', '.join(parts)}}})"


def make_ifps(universe: Iterable[str], params: Iterable[str], entries: Mapping | None = None) -> IFPSSet:
    """Build a validated IFPS set.

    ``entries`` maps a parameter to ``(alpha, beta, support)`` (an
    :class:`Entry` or any 3-sequence). Default entries are normalized away.
    """
    u = _ids(universe, "universe")
    e = _ids(params, "parameters")
    members, known = set(u), set(e)
    stored: dict[str, Entry] = {}
    for x, raw in (entries or {}).items():
        if x not in known:
            raise DomainError(f"unknown parameter {x!r}")
        try:
            alpha, beta, support = raw
        except (TypeError, ValueError):
            raise DomainError(f"entry for {x!r} must be (alpha, beta, support)") from None
        check_degrees(alpha, beta, where=f"parameter {x!r}")
        if isinstance(support, str):
            raise DomainError(f"support of {x!r} must be a collection of ids, not a string")
        support = frozenset(support)
        unknown = support - members
        if unknown:
            raise DomainError(f"support of {x!r} names elements outside the universe: {sorted(unknown)}")
        alpha, beta = float(alpha), float(beta)
        if alpha == 0.0 and beta == 1.0 and support:
            raise DomainError(f"parameter {x!r} has degrees (0, 1) so its support must be empty")
        entry = Entry(alpha, beta, support)
        if not entry.is_default():
            stored[x] = entry
    return IFPSSet._raw(u, e, stored)


def check_invariants(k: IFPSSet) -> None:
    """Raise DomainError if ``k`` breaks any IFPS invariant."""
    make_ifps(k.universe, k.params, dict(k.entries))
    if any(entry.is_default() for entry in k.entries.values()):
        raise DomainError("default entry kept in sparse storage")


def empty_ifps(universe: Iterable[str], params: Iterable[str]) -> IFPSSet:
    return IFPSSet._raw(_ids(universe, "universe"), _ids(params, "parameters"), {})


def universal_ifps(universe: Iterable[str], params: Iterable[str]) -> IFPSSet:
    u = _ids(universe, "universe")
    e = _ids(params, "parameters")
    full = Entry(1.0, 0.0, frozenset(u))
    return IFPSSet._raw(u, e, {x: full for x in e})


def from_fp_soft(mu: FuzzySet, approx: Mapping[str, Iterable[str]], universe: Iterable[str]) -> IFPSSet:
    """Embed an FP-soft set: each parameter gets (mu(x), 1 - mu(x), approx(x))."""
    entries = {}
    for x in mu.ground:
        support = frozenset(approx.get(x, ()))
        m = mu[x]
        if m == 0.0 and support:
            raise DomainError(f"parameter {x!r} has membership 0 but a nonempty approximation")
        entries[x] = (m, 1.0 - m, support)
    extra = set(approx) - set(mu.ground)
    if extra:
        raise DomainError(f"approximation names unknown parameters: {sorted(extra)}")
    return make_ifps(universe, mu.ground, entries)


def _aligned(k: IFPSSet, l: IFPSSet) -> None:
    if k.universe != l.universe:
        raise DomainError(f"universes differ: {list(k.universe)} vs {list(l.universe)}")
    if k.params != l.params:
        raise DomainError(f"parameter sets differ: {list(k.params)} vs {list(l.params)}")


def ifps_subset(k: IFPSSet, l: IFPSSet) -> bool:
    _aligned(k, l)
    for x in k.params:
        a, b = k[x], l[x]
        if not (a.alpha <= b.alpha + TOL and a.beta >= b.beta - TOL and a.support <= b.support):
            return False
    return True


def ifps_equal(k: IFPSSet, l: IFPSSet, tol: float = TOL) -> bool:
    _aligned(k, l)
    for x in k.params:
        a, b = k[x], l[x]
        if not (close(a.alpha, b.alpha, tol) and close(a.beta, b.beta, tol) and a.support == b.support):
            return False
    return True


def _settle(alpha: float, beta: float, support: frozenset) -> Entry:
    # Degrees (0, 1) force an empty support.
    if alpha == 0.0 and beta == 1.0:
        return DEFAULT_ENTRY
    return Entry(alpha, beta, support)


def _store(universe, params, entries: dict[str, Entry]) -> IFPSSet:
    return IFPSSet._raw(universe, params, {x: e for x, e in entries.items() if not e.is_default()})


def ifps_complement(k: IFPSSet) -> IFPSSet:
    """(beta, alpha, U minus f(x)) at every parameter, absent ones included.

    An entry (1, 0, f) with f a proper subset of U maps to degrees (0, 1),
    whose support is forced empty, so applying the complement twice only
    restores such an entry when f = U.
    """
    full = frozenset(k.universe)
    out = {}
    for x in k.params:
        e = k[x]
        out[x] = _settle(e.beta, e.alpha, full - e.support)
    return _store(k.universe, k.params, out)


Combine = Callable[[Entry, Entry], Entry]


def _binary(degrees: Callable[[Entry, Entry], tuple[float, float]], supports: str) -> Combine:
    join = frozenset.union if supports == "union" else frozenset.intersection

    def combine(a: Entry, b: Entry) -> Entry:
        alpha, beta = degrees(a, b)
        return _settle(alpha, beta, join(a.support, b.support))

    return combine


def _lattice_join(a, b):
    return max(a.alpha, b.alpha), min(a.beta, b.beta)


def _lattice_meet(a, b):
    return min(a.alpha, b.alpha), max(a.beta, b.beta)


def _algebraic_sum(a, b):
    return prob_sum(a.alpha, b.alpha), a.beta * b.beta


def _algebraic_product(a, b):
    return a.alpha * b.alpha, prob_sum(a.beta, b.beta)


def _apply(combine: Combine, k: IFPSSet, l: IFPSSet) -> IFPSSet:
    _aligned(k, l)
    return _store(k.universe, k.params, {x: combine(k[x], l[x]) for x in k.params})


_union = _binary(_lattice_join, "union")
_intersection = _binary(_lattice_meet, "intersection")
_or_sum = _binary(_algebraic_sum, "union")
_and_sum = _binary(_algebraic_sum, "intersection")
_or_product = _binary(_algebraic_product, "union")
_and_product = _binary(_algebraic_product, "intersection")


def ifps_union(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_union, k, l)


def ifps_intersection(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_intersection, k, l)


def or_sum(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_or_sum, k, l)


def and_sum(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_and_sum, k, l)


def or_product(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_or_product, k, l)


def and_product(k: IFPSSet, l: IFPSSet) -> IFPSSet:
    return _apply(_and_product, k, l)


BINARY_OPS: dict[str, Callable[[IFPSSet, IFPSSet], IFPSSet]] = {
    "union": ifps_union,
    "intersection": ifps_intersection,
    "or-sum": or_sum,
    "and-sum": and_sum,
    "or-product": or_product,
    "and-product": and_product,
}


def align(sets: Iterable[IFPSSet]) -> list[IFPSSet]:
    """Re-express every set over the union of all universes and parameter sets.

    Parameters new to a set read as default; existing entries are kept.
    """
    sets = list(sets)
    universe = tuple(sorted(set().union(*(k.universe for k in sets))))
    params = tuple(sorted(set().union(*(k.params for k in sets))))
    return [IFPSSet._raw(universe, params, dict(k.entries)) for k in sets]
