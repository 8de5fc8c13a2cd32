"""Random instance generation and executable algebraic laws for IFPS sets.

Every law is a side-effect-free predicate over a :class:`Context` (three
random sets sharing U and E, plus the empty and universal sets). The
suite is reproducible from ``(trials, seed)`` alone: trial ``t`` draws
its sizes and sets from ``random.Random(f"{seed}:{t}")``.

K union K^c = universal and K meet K^c = empty do NOT hold in general;
that failure is checked on a fixed witness instead of random trials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable

from .ifs_core import DomainError
from . import ifps_core as core
from .ifps_core import IFPSSet, empty_ifps, make_ifps, universal_ifps

GRID_STEPS = 20  # degrees are multiples of 1 / GRID_STEPS = 0.05


def gen_ifps(seed: int, universe_size: int, param_count: int) -> IFPSSet:
    """Deterministic random IFPS set over ``u1..uN`` and ``x1..xM``.

    Each parameter is absent (default) with probability 0.2, full
    ``(1, 0, U)`` with probability 0.1, and otherwise gets a uniformly
    drawn grid pair with alpha + beta <= 1 and a uniform random support.
    A pair of (0, 1) always gets an empty support, and a pair of (1, 0)
    always gets the whole universe so complements stay invertible.
    """
    if not 1 <= universe_size <= 6:
        raise DomainError(f"universe_size must be in [1, 6], got {universe_size}")
    if not 1 <= param_count <= 5:
        raise DomainError(f"param_count must be in [1, 5], got {param_count}")
    rng = random.Random(seed)
    universe = [f"u{i}" for i in range(1, universe_size + 1)]
    params = [f"x{i}" for i in range(1, param_count + 1)]
    entries = {}
    for x in params:
        roll = rng.random()
        if roll < 0.2:
            continue
        if roll < 0.3:
            entries[x] = (1.0, 0.0, universe)
            continue
        i = rng.randint(0, GRID_STEPS)
        j = rng.randint(0, GRID_STEPS - i)
        alpha, beta = i / GRID_STEPS, j / GRID_STEPS
        if (i, j) == (0, GRID_STEPS):
            support = []
        elif (i, j) == (GRID_STEPS, 0):
            support = universe
        else:
            support = [u for u in universe if rng.random() < 0.5]
        entries[x] = (alpha, beta, support)
    return make_ifps(universe, params, entries)


@dataclass(frozen=True)
class Algebra:
    """The operations a law suite is evaluated against (swappable for mutation checks)."""

    complement: Callable = core.ifps_complement
    union: Callable = core.ifps_union
    intersection: Callable = core.ifps_intersection
    or_sum: Callable = core.or_sum
    and_sum: Callable = core.and_sum
    or_product: Callable = core.or_product
    and_product: Callable = core.and_product
    subset: Callable = core.ifps_subset
    equal: Callable = core.ifps_equal


@dataclass(frozen=True)
class Context:
    K: IFPSSet
    L: IFPSSet
    M: IFPSSet
    empty: IFPSSet
    full: IFPSSet
    ops: Algebra


@dataclass(frozen=True)
class Law:
    name: str
    group: str
    holds: Callable[[Context], bool]


def _copy(k: IFPSSet) -> IFPSSet:
    # Same value rebuilt with explicit default entries for every absent parameter.
    entries = {x: tuple(k[x]) for x in k.params}
    return make_ifps(k.universe, k.params, entries)


def _laws() -> list[Law]:
    def eq(c, a, b):
        return c.ops.equal(a, b)

    def sub(c, a, b):
        return c.ops.subset(a, b)

    laws = [
        # subset bounds
        Law("subset: K within universal", "subset bounds", lambda c: sub(c, c.K, c.full)),
        Law("subset: empty within K", "subset bounds", lambda c: sub(c, c.empty, c.K)),
        Law("subset: reflexive", "subset bounds", lambda c: sub(c, c.K, c.K)),
        # equality and subset order
        Law("equal: reflexive and symmetric", "equality",
            lambda c: eq(c, c.K, c.K) and eq(c, c.K, c.L) == eq(c, c.L, c.K)),
        Law("equal: transitive", "equality",
            lambda c: _implies(eq(c, c.K, c.L) and eq(c, c.L, c.M), eq(c, c.K, c.M))
            and _chain_equal(c)),
        Law("subset: antisymmetric iff equal", "equality",
            lambda c: (sub(c, c.K, c.L) and sub(c, c.L, c.K)) == eq(c, c.K, c.L)
            and sub(c, c.K, _copy(c.K)) and sub(c, _copy(c.K), c.K)),
        Law("subset: transitive", "subset order", _subset_transitive),
        # complement
        Law("complement: involution", "complement",
            lambda c: eq(c, c.ops.complement(c.ops.complement(c.K)), c.K)),
        Law("complement: empty to universal", "complement",
            lambda c: eq(c, c.ops.complement(c.empty), c.full)),
        Law("complement: universal to empty", "complement",
            lambda c: eq(c, c.ops.complement(c.full), c.empty)),
    ]
    laws += _monoid_laws("union", "union", idempotent=True,
                         identity="empty", absorbing="full")
    laws += _monoid_laws("intersection", "intersection", idempotent=True,
                         identity="full", absorbing="empty")
    laws += [
        Law("distributive: union over intersection", "distributive",
            lambda c: eq(c, c.ops.union(c.K, c.ops.intersection(c.L, c.M)),
                         c.ops.intersection(c.ops.union(c.K, c.L), c.ops.union(c.K, c.M)))),
        Law("distributive: intersection over union", "distributive",
            lambda c: eq(c, c.ops.intersection(c.K, c.ops.union(c.L, c.M)),
                         c.ops.union(c.ops.intersection(c.K, c.L), c.ops.intersection(c.K, c.M)))),
        Law("De Morgan: complement of union", "De Morgan",
            lambda c: eq(c, c.ops.complement(c.ops.union(c.K, c.L)),
                         c.ops.intersection(c.ops.complement(c.K), c.ops.complement(c.L)))),
        Law("De Morgan: complement of intersection", "De Morgan",
            lambda c: eq(c, c.ops.complement(c.ops.intersection(c.K, c.L)),
                         c.ops.union(c.ops.complement(c.K), c.ops.complement(c.L)))),
    ]
    laws += _monoid_laws("or_sum", "algebraic sum", identity="empty", absorbing="full")
    laws += _monoid_laws("and_sum", "algebraic sum")
    laws += _monoid_laws("and_product", "algebraic product", identity="full", absorbing="empty")
    laws += _monoid_laws("or_product", "algebraic product")
    return laws


def _implies(p: bool, q: bool) -> bool:
    return (not p) or q


def _chain_equal(c: Context) -> bool:
    a, b, d = c.K, _copy(c.K), c.ops.union(c.K, c.K)
    return c.ops.equal(a, b) and c.ops.equal(b, d) and c.ops.equal(a, d)


def _subset_transitive(c: Context) -> bool:
    sub = c.ops.subset
    random_case = _implies(sub(c.K, c.L) and sub(c.L, c.M), sub(c.K, c.M))
    # A guaranteed chain built from the core lattice operations, not c.ops.
    low = core.ifps_intersection(c.K, c.L)
    high = core.ifps_union(c.K, c.M)
    return random_case and sub(low, c.K) and sub(c.K, high) and sub(low, high)


def _monoid_laws(op: str, group: str, idempotent: bool = False,
                 identity: str | None = None, absorbing: str | None = None) -> list[Law]:
    label = op.replace("_", "-")

    def f(c):
        return getattr(c.ops, op)

    laws = []
    if idempotent:
        laws.append(Law(f"{label}: idempotent", group, lambda c: c.ops.equal(f(c)(c.K, c.K), c.K)))
    if identity:
        laws.append(Law(f"{label}: identity {identity}", group,
                        lambda c: c.ops.equal(f(c)(c.K, getattr(c, identity)), c.K)))
    if absorbing:
        laws.append(Law(f"{label}: absorbing {absorbing}", group,
                        lambda c: c.ops.equal(f(c)(c.K, getattr(c, absorbing)), getattr(c, absorbing))))
    laws.append(Law(f"{label}: commutative", group,
                    lambda c: c.ops.equal(f(c)(c.K, c.L), f(c)(c.L, c.K))))
    laws.append(Law(f"{label}: associative", group,
                    lambda c: c.ops.equal(f(c)(f(c)(c.K, c.L), c.M), f(c)(c.K, f(c)(c.L, c.M)))))
    return laws


LAWS = _laws()


def example_witness() -> IFPSSet:
    """The five-element, four-parameter witness set for the complement non-law."""
    universe = ["u1", "u2", "u3", "u4", "u5"]
    return make_ifps(universe, ["x1", "x2", "x3", "x4"], {
        "x2": (0.2, 0.5, ["u2", "u4"]),
        "x3": (0.5, 0.5, []),
        "x4": (0.6, 0.3, universe),
    })


def complement_non_law(k: IFPSSet, ops: Algebra = Algebra()) -> bool:
    """True when K union K^c misses the universal set and K meet K^c misses the empty one."""
    kc = ops.complement(k)
    full = universal_ifps(k.universe, k.params)
    empty = empty_ifps(k.universe, k.params)
    return not ops.equal(ops.union(k, kc), full) and not ops.equal(ops.intersection(k, kc), empty)


@dataclass
class LawResult:
    name: str
    group: str
    checked: int = 0
    failed: int = 0
    counterexample: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class LawReport:
    trials: int
    seed: int
    results: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.ok]

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self) -> list[str]:
        width = max(len(r.name) for r in self.results)
        out = []
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            out.append(f"{status}  {r.name:<{width}}  {r.checked - r.failed}/{r.checked}  [{r.group}]")
            if r.counterexample is not None:
                for s in r.counterexample:
                    out.append(f"      {s!r}")
        failed = len(self.failures)
        out.append(f"{len(self.results) - failed}/{len(self.results)} laws passed "
                   f"({self.trials} trials, seed {self.seed})")
        return out


def _trial_context(seed: int, t: int, ops: Algebra) -> Context:
    rng = random.Random(f"{seed}:{t}")
    n, m = rng.randint(1, 6), rng.randint(1, 5)
    k, l, mm = (gen_ifps(rng.getrandbits(64), n, m) for _ in range(3))
    return Context(k, l, mm, empty_ifps(k.universe, k.params), universal_ifps(k.universe, k.params), ops)


def run_suite(trials: int, seed: int, ops: Algebra | None = None, laws: list[Law] | None = None) -> LawReport:
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    ops = ops or Algebra()
    laws = LAWS if laws is None else laws
    results = [LawResult(law.name, law.group) for law in laws]
    for t in range(trials):
        ctx = _trial_context(seed, t, ops)
        for law, res in zip(laws, results):
            res.checked += 1
            try:
                held = law.holds(ctx)
            except DomainError:
                held = False
            if not held:
                res.failed += 1
                if res.counterexample is None:
                    res.counterexample = (ctx.K, ctx.L, ctx.M)
    witness = LawResult("complement: K with K^c is not universal/empty", "complement non-law (fixed witness)", 1)
    if not complement_non_law(example_witness(), ops):
        witness.failed = 1
        witness.counterexample = (example_witness(),)
    results.append(witness)
    return LawReport(trials, seed, results)


def mutated(**overrides) -> Algebra:
    return replace(Algebra(), **overrides)
