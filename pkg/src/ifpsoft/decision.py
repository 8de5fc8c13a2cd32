"""Ranking alternatives from reduced scores, and group aggregation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from .ifs_core import TOL, DomainError, FuzzySet
from .ifps_core import BINARY_OPS, IFPSSet, and_product, and_sum, or_product, or_sum
from .reduction import (
    RangeWarning,
    ReductionRangeWarning,
    range_warnings,
    reduce_fuzzy,
    reduce_intuitionistic,
    score_warnings,
)

GROUP_OPS = {
    "or-sum": or_sum,
    "and-sum": and_sum,
    "or-product": or_product,
    "and-product": and_product,
}


@dataclass(frozen=True)
class RankedDecision:
    """Alternatives sorted by descending score, ties broken by identifier.

    ``argmax`` lists every alternative within TOL of the top score, so ties
    hidden by the ordering stay visible.
    """

    ranking: tuple[tuple[str, float], ...]
    argmax: tuple[str, ...]
    warnings: tuple[RangeWarning, ...] = field(default=())

    @property
    def best(self) -> str:
        return self.ranking[0][0]

    @property
    def top_score(self) -> float:
        return self.ranking[0][1]

    def as_dict(self) -> dict:
        return {
            "ranking": [{"element": u, "score": s} for u, s in self.ranking],
            "argmax": list(self.argmax),
            "warnings": [
                {"element": w.element, "quantity": w.quantity, "value": w.value, "detail": w.detail}
                for w in self.warnings
            ],
        }


def rank(f: FuzzySet, notes: Sequence[RangeWarning] = ()) -> RankedDecision:
    if not f.ground:
        raise DomainError("cannot rank an empty universe")
    ordered = sorted(f.items(), key=lambda item: (-item[1], item[0]))
    top = ordered[0][1]
    argmax = tuple(u for u, s in ordered if abs(s - top) <= TOL)
    return RankedDecision(tuple(ordered), argmax, tuple(notes))


def decide(k: IFPSSet) -> RankedDecision:
    if not k.universe:
        raise DomainError("cannot decide over an empty universe")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReductionRangeWarning)
        rif = reduce_intuitionistic(k)
        rf = reduce_fuzzy(rif)
    return rank(rf, range_warnings(rif) + score_warnings(rf))


def aggregate_group(sets: Sequence[IFPSSet], op: str = "or-sum") -> IFPSSet:
    """Fold the chosen sum/product operator over several experts' sets."""
    op = op.replace("_", "-")
    if op not in GROUP_OPS:
        if op in BINARY_OPS:
            raise DomainError(f"{op!r} is not a group aggregation operator; use one of {sorted(GROUP_OPS)}")
        raise DomainError(f"unknown operator {op!r}")
    if not sets:
        raise DomainError("aggregate_group needs at least one set")
    return reduce(GROUP_OPS[op], sets)
