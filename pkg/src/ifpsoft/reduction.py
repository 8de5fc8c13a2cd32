"""Two-stage reduction of an IFPS set to scores over its universe.

Stage one averages, for each alternative u, the importance and
unimportance degrees of every parameter whose support contains u,
dividing by |U|. Stage two collapses each reduced pair (a, b) to the
single score a * (1 - b).

The divisor is |U| even when |E| > |U|, in which case reduced degrees can
leave [0, 1]. Such values are kept as computed and reported through
:class:`RangeWarning` rather than clamped.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .ifs_core import TOL, DegreePair, DomainError, FuzzySet, IntuitionisticFuzzySet
from .ifps_core import IFPSSet


@dataclass(frozen=True)
class RangeWarning:
    element: str
    quantity: str
    value: float
    detail: str

    def __str__(self):
        return f"{self.element}: {self.quantity}={self.value:.6g} {self.detail}"


class ReductionRangeWarning(UserWarning):
    pass


def range_warnings(r: IntuitionisticFuzzySet) -> list[RangeWarning]:
    found = []
    for u, d in r.items():
        for name, v in (("alpha", d.alpha), ("beta", d.beta)):
            if v < -TOL or v > 1.0 + TOL:
                found.append(RangeWarning(u, name, v, "outside [0, 1]"))
        if d.alpha + d.beta > 1.0 + TOL:
            found.append(RangeWarning(u, "alpha+beta", d.alpha + d.beta, "exceeds 1"))
    return found


def score_warnings(f: FuzzySet) -> list[RangeWarning]:
    return [
        RangeWarning(u, "mu", v, "outside [0, 1]")
        for u, v in f.items()
        if v < -TOL or v > 1.0 + TOL
    ]


def _emit(found: list[RangeWarning]) -> None:
    for w in found:
        warnings.warn(str(w), ReductionRangeWarning, stacklevel=3)


def reduce_intuitionistic(k: IFPSSet) -> IntuitionisticFuzzySet:
    n = len(k.universe)
    if n == 0:
        raise DomainError("cannot reduce over an empty universe")
    alpha = dict.fromkeys(k.universe, 0.0)
    beta = dict.fromkeys(k.universe, 0.0)
    for entry in k.entries.values():
        for u in entry.support:
            alpha[u] += entry.alpha
            beta[u] += entry.beta
    reduced = IntuitionisticFuzzySet._raw(
        k.universe, {u: DegreePair.unchecked(alpha[u] / n, beta[u] / n) for u in k.universe}
    )
    _emit(range_warnings(reduced))
    return reduced


def reduce_fuzzy(r: IntuitionisticFuzzySet) -> FuzzySet:
    scores = FuzzySet._raw(r.ground, {u: d.alpha * (1.0 - d.beta) for u, d in r.items()})
    _emit(score_warnings(scores))
    return scores
